#include "ttk/parse.hpp"

#include <charconv>
#include <string>

#include "ttk/error.hpp"

namespace ttk {

namespace {

[[noreturn]] void parse_error(int line, int col, const std::string& msg) {
    throw KernelError(ErrorClass::ParseError, std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

[[noreturn]] void parse_error(const SExpr& e, const std::string& msg) { parse_error(e.line, e.col, msg); }

class Reader {
public:
    explicit Reader(std::string_view src) : src_(src) {}

    std::vector<SExpr> all() {
        std::vector<SExpr> out;
        skip();
        while (pos_ < src_.size()) {
            out.push_back(one());
            skip();
        }
        return out;
    }

private:
    SExpr one() {
        SExpr e;
        e.line = line_;
        e.col = col_;
        char c = src_[pos_];
        if (c == ')') parse_error(line_, col_, "unexpected ')'");
        if (c == '(') {
            advance();
            skip();
            while (true) {
                if (pos_ >= src_.size()) parse_error(e.line, e.col, "unclosed '('");
                if (src_[pos_] == ')') break;
                e.items.push_back(one());
                skip();
            }
            advance();
            return e;
        }
        e.atom = true;
        while (pos_ < src_.size() && !delimiter(src_[pos_])) {
            e.text += src_[pos_];
            advance();
        }
        return e;
    }

    static bool delimiter(char c) {
        return c == '(' || c == ')' || c == ';' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }

    void skip() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ';') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                advance();
            } else {
                return;
            }
        }
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

const std::string& head_of(const SExpr& e) {
    if (e.atom) parse_error(e, "expected a parenthesized form, got '" + e.text + "'");
    if (e.items.empty()) parse_error(e, "empty form");
    if (!e.items[0].atom) parse_error(e.items[0], "form head must be a keyword");
    return e.items[0].text;
}

void arity(const SExpr& e, std::size_t n) {
    if (e.items.size() != n + 1)
        parse_error(e, "'" + e.items[0].text + "' takes " + std::to_string(n) + " argument(s), got " +
                           std::to_string(e.items.size() - 1));
}

unsigned natural(const SExpr& e) {
    if (!e.atom) parse_error(e, "expected a natural number");
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(e.text.data(), e.text.data() + e.text.size(), v);
    if (ec != std::errc{} || ptr != e.text.data() + e.text.size() || e.text.empty())
        parse_error(e, "expected a natural number, got '" + e.text + "'");
    return v;
}

bool is_ty_head(const std::string& h) {
    return h == "tysub" || h == "pi" || h == "sigma" || h == "top" || h == "u" || h == "el" || h == "bool" ||
           h == "idt" || h == "arrow";
}
bool is_sub_head(const std::string& h) {
    return h == "id" || h == "comp" || h == "eps" || h == "ext" || h == "p" || h == "lift";
}
bool is_tm_head(const std::string& h) {
    return h == "tmsub" || h == "q" || h == "lam" || h == "app" || h == "pair" || h == "fst" || h == "snd" ||
           h == "tt" || h == "code" || h == "true" || h == "false" || h == "if" || h == "refl" || h == "j" ||
           h == "v" || h == "dollar";
}

[[noreturn]] void wrong_sort(const SExpr& e, const char* want) {
    const std::string& h = e.items[0].text;
    if (is_ty_head(h) || is_sub_head(h) || is_tm_head(h) || h == "ctx")
        parse_error(e, std::string("expected a ") + want + ", got '" + h + "'");
    parse_error(e, "unknown keyword '" + h + "'");
}

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view src) { return Reader(src).all(); }

TyPtr to_ty(const SExpr& e) {
    const std::string& h = head_of(e);
    const auto& x = e.items;
    if (h == "tysub") return arity(e, 2), tysub(to_ty(x[1]), to_sub(x[2]));
    if (h == "pi") return arity(e, 2), pi(to_ty(x[1]), to_ty(x[2]));
    if (h == "sigma") return arity(e, 2), sigma(to_ty(x[1]), to_ty(x[2]));
    if (h == "top") return arity(e, 0), top();
    if (h == "u") return arity(e, 1), univ(Level{natural(x[1])});
    if (h == "el") return arity(e, 1), el(to_tm(x[1]));
    if (h == "bool") return arity(e, 0), boolty();
    if (h == "idt") return arity(e, 3), idty(to_ty(x[1]), to_tm(x[2]), to_tm(x[3]));
    if (h == "arrow") return arity(e, 2), arrow(to_ty(x[1]), to_ty(x[2]));
    wrong_sort(e, "type");
}

TmPtr to_tm(const SExpr& e) {
    const std::string& h = head_of(e);
    const auto& x = e.items;
    if (h == "tmsub") return arity(e, 2), tmsub(to_tm(x[1]), to_sub(x[2]));
    if (h == "q") return arity(e, 0), var0();
    if (h == "lam") return arity(e, 2), lam(to_ty(x[1]), to_tm(x[2]));
    if (h == "app") return arity(e, 1), app(to_tm(x[1]));
    if (h == "pair") return arity(e, 4), pair(to_ty(x[1]), to_ty(x[2]), to_tm(x[3]), to_tm(x[4]));
    if (h == "fst") return arity(e, 1), fst(to_tm(x[1]));
    if (h == "snd") return arity(e, 1), snd(to_tm(x[1]));
    if (h == "tt") return arity(e, 0), tt();
    if (h == "code") return arity(e, 1), code(to_ty(x[1]));
    if (h == "true") return arity(e, 0), truelit();
    if (h == "false") return arity(e, 0), falselit();
    if (h == "if") return arity(e, 4), ite(to_ty(x[1]), to_tm(x[2]), to_tm(x[3]), to_tm(x[4]));
    if (h == "refl") return arity(e, 1), refl(to_tm(x[1]));
    if (h == "j") return arity(e, 3), jelim(to_ty(x[1]), to_tm(x[2]), to_tm(x[3]));
    if (h == "v") return arity(e, 1), var(natural(x[1]));
    // (dollar A t u): t applied to u, where A is the domain of t's type.
    if (h == "dollar") return arity(e, 3), apply1(to_tm(x[2]), to_ty(x[1]), to_tm(x[3]));
    wrong_sort(e, "term");
}

SubPtr to_sub(const SExpr& e) {
    const std::string& h = head_of(e);
    const auto& x = e.items;
    if (h == "id") return arity(e, 0), id_sub();
    if (h == "comp") return arity(e, 2), comp(to_sub(x[1]), to_sub(x[2]));
    if (h == "eps") return arity(e, 0), eps();
    if (h == "ext") return arity(e, 3), ext(to_sub(x[1]), to_ty(x[2]), to_tm(x[3]));
    if (h == "p") return arity(e, 0), wk();
    if (h == "lift") return arity(e, 2), lift(to_sub(x[1]), to_ty(x[2]));
    wrong_sort(e, "substitution");
}

Ctx to_ctx(const SExpr& e) {
    const std::string& h = head_of(e);
    if (h != "ctx") wrong_sort(e, "context");
    Ctx g;
    for (std::size_t k = 1; k < e.items.size(); ++k) g.entries.push_back(to_ty(e.items[k]));
    return g;
}

namespace {

SExpr single(std::string_view src) {
    std::vector<SExpr> all = read_sexprs(src);
    if (all.empty()) parse_error(1, 1, "empty input");
    if (all.size() > 1) parse_error(all[1], "trailing input after the first form");
    return std::move(all[0]);
}

}  // namespace

TyPtr parse_ty(std::string_view src) { return to_ty(single(src)); }
TmPtr parse_tm(std::string_view src) { return to_tm(single(src)); }
SubPtr parse_sub(std::string_view src) { return to_sub(single(src)); }
Ctx parse_ctx(std::string_view src) { return to_ctx(single(src)); }

Entity to_entity(const SExpr& e) {
    const std::string& h = head_of(e);
    const auto& x = e.items;
    Entity out;
    if (h == "ctx") {
        out.sort = EntitySort::Con;
        out.ctx = to_ctx(e);
    } else if (h == "ty") {
        arity(e, 2);
        out.sort = EntitySort::Ty;
        out.ctx = to_ctx(x[1]);
        out.ty = to_ty(x[2]);
    } else if (h == "sub") {
        arity(e, 2);
        out.sort = EntitySort::Sub;
        out.ctx = to_ctx(x[1]);
        out.sub = to_sub(x[2]);
    } else if (h == "tm") {
        arity(e, 2);
        out.sort = EntitySort::Tm;
        out.ctx = to_ctx(x[1]);
        out.tm = to_tm(x[2]);
    } else {
        parse_error(e, "expected an entity (ctx, ty, sub or tm), got '" + h + "'");
    }
    return out;
}

Directive to_directive(const SExpr& e) {
    const std::string& h = head_of(e);
    const auto& x = e.items;
    Directive d;
    if (h == "check-tm") {
        arity(e, 2);
        d.kind = DirectiveKind::CheckTm;
        d.ctx = to_ctx(x[1]);
        d.tm = to_tm(x[2]);
    } else if (h == "check-ty") {
        arity(e, 2);
        d.kind = DirectiveKind::CheckTy;
        d.ctx = to_ctx(x[1]);
        d.ty = to_ty(x[2]);
    } else if (h == "nf") {
        arity(e, 2);
        d.kind = DirectiveKind::Nf;
        d.ctx = to_ctx(x[1]);
        d.tm = to_tm(x[2]);
    } else if (h == "conv-tm") {
        arity(e, 4);
        d.kind = DirectiveKind::ConvTm;
        d.ctx = to_ctx(x[1]);
        d.ty = to_ty(x[2]);
        d.tm = to_tm(x[3]);
        d.tm2 = to_tm(x[4]);
    } else if (h == "conv-ty") {
        arity(e, 3);
        d.kind = DirectiveKind::ConvTy;
        d.ctx = to_ctx(x[1]);
        d.ty = to_ty(x[2]);
        d.ty2 = to_ty(x[3]);
    } else if (h == "conv-sub") {
        arity(e, 4);
        d.kind = DirectiveKind::ConvSub;
        d.ctx = to_ctx(x[1]);
        d.cod = to_ctx(x[2]);
        d.sub = to_sub(x[3]);
        d.sub2 = to_sub(x[4]);
    } else if (h == "termify" || h == "param" || h == "inject") {
        arity(e, 1);
        d.kind = h == "termify" ? DirectiveKind::Termify
                 : h == "param" ? DirectiveKind::Param
                                : DirectiveKind::Inject;
        d.entity = to_entity(x[1]);
    } else if (h == "canon") {
        // An explicit context is accepted so that open terms can be reported.
        if (x.size() == 3) {
            d.ctx = to_ctx(x[1]);
        } else {
            arity(e, 1);
        }
        d.kind = DirectiveKind::Canon;
        d.tm = to_tm(x.back());
    } else {
        parse_error(e, "unknown directive '" + h + "'");
    }
    return d;
}

Directive parse_directive(std::string_view src) { return to_directive(single(src)); }

}  // namespace ttk
