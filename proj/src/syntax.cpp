#include "ttk/syntax.hpp"

#include <utility>

namespace ttk {

Ctx Ctx::extend(TyPtr a) const {
    Ctx out = *this;
    out.entries.push_back(std::move(a));
    return out;
}

Ctx Ctx::prefix(std::size_t n) const {
    Ctx out;
    out.entries.assign(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
}

namespace {

SubPtr mk(Sub s) { return std::make_shared<const Sub>(std::move(s)); }
TyPtr mk(Ty a) { return std::make_shared<const Ty>(std::move(a)); }
TmPtr mk(Tm t) { return std::make_shared<const Tm>(std::move(t)); }

}  // namespace

SubPtr id_sub() {
    static const SubPtr s = mk(Sub{.kind = SubKind::Id});
    return s;
}
SubPtr comp(SubPtr f, SubPtr g) {
    return mk(Sub{.kind = SubKind::Comp, .f = std::move(f), .g = std::move(g)});
}
SubPtr eps() {
    static const SubPtr s = mk(Sub{.kind = SubKind::Eps});
    return s;
}
SubPtr ext(SubPtr f, TyPtr a, TmPtr t) {
    return mk(Sub{.kind = SubKind::Ext, .f = std::move(f), .ty = std::move(a), .tm = std::move(t)});
}
SubPtr wk() {
    static const SubPtr s = mk(Sub{.kind = SubKind::P});
    return s;
}

TyPtr tysub(TyPtr a, SubPtr s) {
    return mk(Ty{.kind = TyKind::Sub, .a = std::move(a), .sub = std::move(s)});
}
TyPtr pi(TyPtr a, TyPtr b) { return mk(Ty{.kind = TyKind::Pi, .a = std::move(a), .b = std::move(b)}); }
TyPtr sigma(TyPtr a, TyPtr b) {
    return mk(Ty{.kind = TyKind::Sigma, .a = std::move(a), .b = std::move(b)});
}
TyPtr top() {
    static const TyPtr a = mk(Ty{.kind = TyKind::Top});
    return a;
}
TyPtr univ(Level i) { return mk(Ty{.kind = TyKind::U, .level = i}); }
TyPtr el(TmPtr t) { return mk(Ty{.kind = TyKind::El, .t = std::move(t)}); }
TyPtr boolty() {
    static const TyPtr a = mk(Ty{.kind = TyKind::Bool});
    return a;
}
TyPtr idty(TyPtr a, TmPtr u, TmPtr v) {
    return mk(Ty{.kind = TyKind::Id, .a = std::move(a), .t = std::move(u), .u = std::move(v)});
}

TmPtr tmsub(TmPtr t, SubPtr s) {
    return mk(Tm{.kind = TmKind::Sub, .t = std::move(t), .sub = std::move(s)});
}
TmPtr var0() {
    static const TmPtr t = mk(Tm{.kind = TmKind::Q});
    return t;
}
TmPtr lam(TyPtr a, TmPtr body) {
    return mk(Tm{.kind = TmKind::Lam, .a = std::move(a), .t = std::move(body)});
}
TmPtr app(TmPtr t) { return mk(Tm{.kind = TmKind::App, .t = std::move(t)}); }
TmPtr pair(TyPtr a, TyPtr b, TmPtr u, TmPtr v) {
    return mk(Tm{.kind = TmKind::Pair, .a = std::move(a), .b = std::move(b), .t = std::move(u),
                 .u = std::move(v)});
}
TmPtr fst(TmPtr t) { return mk(Tm{.kind = TmKind::Fst, .t = std::move(t)}); }
TmPtr snd(TmPtr t) { return mk(Tm{.kind = TmKind::Snd, .t = std::move(t)}); }
TmPtr tt() {
    static const TmPtr t = mk(Tm{.kind = TmKind::Tt});
    return t;
}
TmPtr code(TyPtr a) { return mk(Tm{.kind = TmKind::Code, .a = std::move(a)}); }
TmPtr truelit() {
    static const TmPtr t = mk(Tm{.kind = TmKind::True});
    return t;
}
TmPtr falselit() {
    static const TmPtr t = mk(Tm{.kind = TmKind::False});
    return t;
}
TmPtr ite(TyPtr motive, TmPtr on_true, TmPtr on_false, TmPtr scrutinee) {
    return mk(Tm{.kind = TmKind::If, .a = std::move(motive), .t = std::move(on_true),
                 .u = std::move(on_false), .v = std::move(scrutinee)});
}
TmPtr refl(TmPtr u) { return mk(Tm{.kind = TmKind::Refl, .t = std::move(u)}); }
TmPtr jelim(TyPtr motive, TmPtr on_refl, TmPtr eq) {
    return mk(Tm{.kind = TmKind::J, .a = std::move(motive), .t = std::move(on_refl), .u = std::move(eq)});
}

SubPtr wk_n(unsigned n) {
    if (n == 0) return id_sub();
    SubPtr s = wk();
    for (unsigned i = 1; i < n; ++i) s = comp(wk(), s);
    return s;
}

TmPtr var(unsigned n) { return n == 0 ? var0() : tmsub(var0(), wk_n(n)); }

SubPtr lift(SubPtr s, TyPtr a) { return ext(comp(std::move(s), wk()), std::move(a), var0()); }

TmPtr apply1(TmPtr t, TyPtr dom, TmPtr u) {
    return tmsub(app(std::move(t)), ext(id_sub(), std::move(dom), std::move(u)));
}

TyPtr arrow(TyPtr a, TyPtr b) { return pi(std::move(a), tysub(std::move(b), wk())); }

int wk_depth(const Sub& s) {
    if (s.kind == SubKind::P) return 1;
    if (s.kind != SubKind::Comp || s.f->kind != SubKind::P) return -1;
    const int rest = wk_depth(*s.g);
    return rest < 0 ? -1 : rest + 1;
}

int var_index(const Tm& t) {
    if (t.kind == TmKind::Q) return 0;
    if (t.kind != TmKind::Sub || t.t->kind != TmKind::Q) return -1;
    return wk_depth(*t.sub);
}

namespace {

template <class T>
bool eq_ptr(const std::shared_ptr<const T>& x, const std::shared_ptr<const T>& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    return equal(*x, *y);
}

}  // namespace

bool equal(const Sub& x, const Sub& y) {
    if (&x == &y) return true;
    if (x.kind != y.kind) return false;
    return eq_ptr(x.f, y.f) && eq_ptr(x.g, y.g) && eq_ptr(x.ty, y.ty) && eq_ptr(x.tm, y.tm);
}

bool equal(const Ty& x, const Ty& y) {
    if (&x == &y) return true;
    if (x.kind != y.kind || x.level != y.level) return false;
    return eq_ptr(x.a, y.a) && eq_ptr(x.b, y.b) && eq_ptr(x.sub, y.sub) && eq_ptr(x.t, y.t) &&
           eq_ptr(x.u, y.u);
}

bool equal(const Tm& x, const Tm& y) {
    if (&x == &y) return true;
    if (x.kind != y.kind) return false;
    return eq_ptr(x.a, y.a) && eq_ptr(x.b, y.b) && eq_ptr(x.t, y.t) && eq_ptr(x.u, y.u) &&
           eq_ptr(x.v, y.v) && eq_ptr(x.sub, y.sub);
}

bool equal(const Ctx& x, const Ctx& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!equal(*x.entries[k], *y.entries[k])) return false;
    return true;
}

namespace {

template <class T>
std::size_t count_ptr(const std::shared_ptr<const T>& x) {
    return x ? node_count(*x) : 0;
}

}  // namespace

std::size_t node_count(const Sub& s) {
    return 1 + count_ptr(s.f) + count_ptr(s.g) + count_ptr(s.ty) + count_ptr(s.tm);
}
std::size_t node_count(const Ty& a) {
    return 1 + count_ptr(a.a) + count_ptr(a.b) + count_ptr(a.sub) + count_ptr(a.t) + count_ptr(a.u);
}
std::size_t node_count(const Tm& t) {
    return 1 + count_ptr(t.a) + count_ptr(t.b) + count_ptr(t.t) + count_ptr(t.u) + count_ptr(t.v) +
           count_ptr(t.sub);
}

std::string_view op_name(Op op) {
    static constexpr std::array<std::string_view, kOpCount> names = {
        "id",  "comp", "eps",  "ext", "p",     "empty", "extend", "tysub", "pi",    "sigma",
        "top", "u",    "el",   "bool", "idt",  "tmsub", "q",      "lam",   "app",   "pair",
        "fst", "snd",  "tt",   "code", "true", "false", "if",     "refl",  "j",
    };
    return names[static_cast<std::size_t>(op)];
}

namespace {

Op op_of(SubKind k) {
    switch (k) {
        case SubKind::Id: return Op::Id;
        case SubKind::Comp: return Op::Comp;
        case SubKind::Eps: return Op::Eps;
        case SubKind::Ext: return Op::Ext;
        case SubKind::P: return Op::P;
    }
    return Op::Id;
}

Op op_of(TyKind k) {
    switch (k) {
        case TyKind::Sub: return Op::TySub;
        case TyKind::Pi: return Op::Pi;
        case TyKind::Sigma: return Op::Sigma;
        case TyKind::Top: return Op::Top;
        case TyKind::U: return Op::U;
        case TyKind::El: return Op::El;
        case TyKind::Bool: return Op::Bool;
        case TyKind::Id: return Op::IdTy;
    }
    return Op::Top;
}

Op op_of(TmKind k) {
    switch (k) {
        case TmKind::Sub: return Op::TmSub;
        case TmKind::Q: return Op::Q;
        case TmKind::Lam: return Op::Lam;
        case TmKind::App: return Op::App;
        case TmKind::Pair: return Op::Pair;
        case TmKind::Fst: return Op::Fst;
        case TmKind::Snd: return Op::Snd;
        case TmKind::Tt: return Op::Tt;
        case TmKind::Code: return Op::Code;
        case TmKind::True: return Op::True;
        case TmKind::False: return Op::False;
        case TmKind::If: return Op::If;
        case TmKind::Refl: return Op::Refl;
        case TmKind::J: return Op::J;
    }
    return Op::Tt;
}

}  // namespace

void Coverage::add(const Ctx& g) {
    counts[static_cast<std::size_t>(Op::Empty)]++;
    for (const auto& a : g.entries) {
        counts[static_cast<std::size_t>(Op::Extend)]++;
        add(*a);
    }
}

void Coverage::add(const Sub& s) {
    counts[static_cast<std::size_t>(op_of(s.kind))]++;
    if (s.f) add(*s.f);
    if (s.g) add(*s.g);
    if (s.ty) add(*s.ty);
    if (s.tm) add(*s.tm);
}

void Coverage::add(const Ty& a) {
    counts[static_cast<std::size_t>(op_of(a.kind))]++;
    if (a.a) add(*a.a);
    if (a.b) add(*a.b);
    if (a.sub) add(*a.sub);
    if (a.t) add(*a.t);
    if (a.u) add(*a.u);
}

void Coverage::add(const Tm& t) {
    counts[static_cast<std::size_t>(op_of(t.kind))]++;
    if (t.a) add(*t.a);
    if (t.b) add(*t.b);
    if (t.t) add(*t.t);
    if (t.u) add(*t.u);
    if (t.v) add(*t.v);
    if (t.sub) add(*t.sub);
}

void Coverage::merge(const Coverage& other) {
    for (std::size_t k = 0; k < kOpCount; ++k) counts[k] += other.counts[k];
}

std::vector<Op> Coverage::missing() const {
    std::vector<Op> out;
    for (std::size_t k = 0; k < kOpCount; ++k)
        if (counts[k] == 0) out.push_back(static_cast<Op>(k));
    return out;
}

}  // namespace ttk
