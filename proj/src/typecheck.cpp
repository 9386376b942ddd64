#include "ttk/typecheck.hpp"

#include <map>
#include <string>
#include <utility>

#include "ttk/error.hpp"
#include "ttk/print.hpp"

namespace ttk {

Scope Scope::of(const Ctx& ctx) {
    Scope s;
    for (const auto& a : ctx.entries) {
        s.types.push_back(eval(s.env, *a));
        s.env = env_push(s.env, fresh(s.types.size() - 1));
    }
    s.ctx = ctx;
    return s;
}

Scope Scope::extend(TyPtr a) const {
    Scope s = *this;
    s.types.push_back(eval(env, *a));
    s.env = env_push(env, fresh(depth()));
    s.ctx.entries.push_back(std::move(a));
    return s;
}

namespace {

// Inputs are DAGs with heavy sharing (termified terms in particular), so
// results are memoized per node and scope. A scope is identified by its
// environment, which the memo keeps alive so the address stays unique.
class Checker {
public:
    Level ty(const Scope& sc, const Ty& a) {
        Key k{&a, sc.env.get()};
        if (auto it = ty_memo_.find(k); it != ty_memo_.end()) return it->second.first;
        Level out = ty_(sc, a);
        ty_memo_.emplace(k, std::pair{out, sc.env});
        return out;
    }

    Ctx sub(const Scope& sc, const Sub& s) {
        Key k{&s, sc.env.get()};
        if (auto it = sub_memo_.find(k); it != sub_memo_.end()) return it->second.first;
        Ctx out = sub_(sc, s);
        sub_memo_.emplace(k, std::pair{out, sc.env});
        return out;
    }

    TyPtr tm(const Scope& sc, const Tm& t) {
        Key k{&t, sc.env.get()};
        if (auto it = tm_memo_.find(k); it != tm_memo_.end()) return it->second.first;
        TyPtr out = tm_(sc, t);
        tm_memo_.emplace(k, std::pair{out, sc.env});
        return out;
    }

    const Scope& scope_of(const Ctx& ctx) {
        auto it = scopes_.find(ctx.entries);
        if (it == scopes_.end()) it = scopes_.emplace(ctx.entries, Scope::of(ctx)).first;
        return it->second;
    }

private:
    Level ty_(const Scope& sc, const Ty& a) {
        Frame f(*this, op_name(op_of(a)));
        switch (a.kind) {
            case TyKind::Sub: {
                Ctx dom = sub(sc, *a.sub);
                return ty(scope_of(dom), *a.a);
            }
            case TyKind::Pi:
            case TyKind::Sigma: {
                Level i = ty(sc, *a.a);
                Level j = ty(sc.extend(a.a), *a.b);
                return lub(i, j);
            }
            case TyKind::Top:
            case TyKind::Bool: return Level{0};
            case TyKind::U: return a.level.succ();
            case TyKind::El: {
                TyValPtr t = eval(sc.env, *tm(sc, *a.t));
                if (t->kind != TyValKind::U) mismatch(sc, "decoded term is not a code", t);
                return t->level;
            }
            case TyKind::Id: {
                Level i = ty(sc, *a.a);
                TyValPtr carrier = eval(sc.env, *a.a);
                check(sc, *a.t, carrier);
                check(sc, *a.u, carrier);
                return i;
            }
        }
        fail("unknown type former");
    }

    Ctx sub_(const Scope& sc, const Sub& s) {
        Frame f(*this, op_name(op_of(s)));
        switch (s.kind) {
            case SubKind::Id: return sc.ctx;
            case SubKind::Comp: {
                Ctx mid = sub(sc, *s.g);
                return sub(scope_of(mid), *s.f);
            }
            case SubKind::Eps: return Ctx{};
            case SubKind::Ext: {
                Ctx cod = sub(sc, *s.f);
                ty(scope_of(cod), *s.ty);
                TyValPtr want = eval(eval(sc.env, *s.f), *s.ty);
                check(sc, *s.tm, want);
                return cod.extend(s.ty);
            }
            case SubKind::P:
                if (sc.ctx.empty())
                    throw KernelError(ErrorClass::ProjectionOfEmpty, "p used in the empty context", path());
                return sc.ctx.prefix(sc.ctx.size() - 1);
        }
        fail("unknown substitution former");
    }

    TyPtr tm_(const Scope& sc, const Tm& t) {
        Frame f(*this, op_name(op_of(t)));
        switch (t.kind) {
            case TmKind::Sub: {
                Ctx dom = sub(sc, *t.sub);
                return tysub(tm(scope_of(dom), *t.t), t.sub);
            }
            case TmKind::Q:
                if (sc.ctx.empty())
                    throw KernelError(ErrorClass::VarInEmptyContext, "q used in the empty context", path());
                return tysub(sc.ctx.last(), wk());
            case TmKind::Lam: {
                ty(sc, *t.a);
                return pi(t.a, tm(sc.extend(t.a), *t.t));
            }
            case TmKind::App: {
                if (sc.ctx.empty())
                    throw KernelError(ErrorClass::VarInEmptyContext, "app used in the empty context", path());
                Scope tail = scope_of(sc.ctx.prefix(sc.ctx.size() - 1));
                TyValPtr fty = eval(tail.env, *tm(tail, *t.t));
                if (fty->kind != TyValKind::Pi) mismatch(tail, "applied term is not a function", fty);
                TyValPtr dom = sc.types.back();
                if (!conv_ty(tail.types, fty->dom, dom))
                    mismatch2(tail, "function domain differs from the last context entry", fty->dom, dom);
                // The codomain is read back over the extended context.
                TyScope ext_types = tail.types;
                ext_types.push_back(fty->dom);
                return readback(ext_types, instantiate(fty->cod, fresh(tail.depth())));
            }
            case TmKind::Pair: {
                ty(sc, *t.a);
                ty(sc.extend(t.a), *t.b);
                TyValPtr a = eval(sc.env, *t.a);
                check(sc, *t.t, a);
                ValPtr u = eval(sc.env, *t.t);
                check(sc, *t.u, eval(env_push(sc.env, u), *t.b));
                return sigma(t.a, t.b);
            }
            case TmKind::Fst:
            case TmKind::Snd: {
                TyValPtr sty = eval(sc.env, *tm(sc, *t.t));
                if (sty->kind != TyValKind::Sigma) mismatch(sc, "projection from a non-pair", sty);
                TyScope types = sc.types;
                if (t.kind == TmKind::Fst) return readback(types, sty->dom);
                return readback(types, instantiate(sty->cod, vfst(eval(sc.env, *t.t))));
            }
            case TmKind::Tt: return top();
            case TmKind::Code: return univ(ty(sc, *t.a));
            case TmKind::True:
            case TmKind::False: return boolty();
            case TmKind::If: {
                ty(sc.extend(boolty()), *t.a);
                check(sc, *t.v, vbool());
                TyClosure motive{sc.env, t.a};
                check(sc, *t.t, instantiate(motive, vtrue()));
                check(sc, *t.u, instantiate(motive, vfalse()));
                return tysub(t.a, ext(id_sub(), boolty(), t.v));
            }
            case TmKind::Refl: {
                TyPtr a = tm(sc, *t.t);
                return idty(a, t.t, t.t);
            }
            case TmKind::J: {
                TyValPtr ety = eval(sc.env, *tm(sc, *t.u));
                if (ety->kind != TyValKind::Id) mismatch(sc, "J on a proof of a non-identity type", ety);
                TyScope types = sc.types;
                TyPtr a = readback(types, ety->dom);
                TmPtr lhs = readback(types, ety->lhs, ety->dom);
                TmPtr rhs = readback(types, ety->rhs, ety->dom);
                TyPtr eq = idty(tysub(a, wk()), tmsub(lhs, wk()), var0());
                ty(sc.extend(a).extend(eq), *t.a);
                TyClosure motive{sc.env, t.a};
                check(sc, *t.t, instantiate(motive, ety->lhs, vrefl(ety->lhs)));
                return tysub(t.a, ext(ext(id_sub(), a, rhs), eq, t.u));
            }
        }
        fail("unknown term former");
    }

public:
    std::string path() const {
        std::string out;
        for (auto part : path_) {
            if (!out.empty()) out += '/';
            out += part;
        }
        return out;
    }

private:
    class Frame {
    public:
        Frame(Checker& c, std::string_view name) : c_(c) { c_.path_.push_back(name); }
        ~Frame() { c_.path_.pop_back(); }
        Frame(const Frame&) = delete;
        Frame& operator=(const Frame&) = delete;

    private:
        Checker& c_;
    };

    static Op op_of(const Ty& a) {
        static constexpr Op ops[] = {Op::TySub, Op::Pi, Op::Sigma, Op::Top, Op::U, Op::El, Op::Bool, Op::IdTy};
        return ops[static_cast<int>(a.kind)];
    }
    static Op op_of(const Sub& s) {
        static constexpr Op ops[] = {Op::Id, Op::Comp, Op::Eps, Op::Ext, Op::P};
        return ops[static_cast<int>(s.kind)];
    }
    static Op op_of(const Tm& t) {
        static constexpr Op ops[] = {Op::TmSub, Op::Q,    Op::Lam,   Op::App, Op::Pair, Op::Fst,  Op::Snd,
                                     Op::Tt,    Op::Code, Op::True,  Op::False, Op::If, Op::Refl, Op::J};
        return ops[static_cast<int>(t.kind)];
    }

    void check(const Scope& sc, const Tm& t, const TyValPtr& want) {
        TyValPtr got = eval(sc.env, *tm(sc, t));
        TyScope types = sc.types;
        if (!conv_ty(types, got, want)) mismatch2(sc, "term has the wrong type", got, want);
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw KernelError(ErrorClass::TypeMismatch, msg, path());
    }

    [[noreturn]] void mismatch(const Scope& sc, const std::string& msg, const TyValPtr& got) {
        TyScope types = sc.types;
        fail(msg + ": got " + print(*readback(types, got)));
    }

    [[noreturn]] void mismatch2(const Scope& sc, const std::string& msg, const TyValPtr& got,
                                const TyValPtr& want) {
        TyScope types = sc.types;
        fail(msg + ": " + print(*readback(types, got)) + " vs " + print(*readback(types, want)));
    }

    using Key = std::pair<const void*, const EnvNode*>;
    std::map<Key, std::pair<Level, Env>> ty_memo_;
    std::map<Key, std::pair<Ctx, Env>> sub_memo_;
    std::map<Key, std::pair<TyPtr, Env>> tm_memo_;
    std::map<std::vector<TyPtr>, Scope> scopes_;
    std::vector<std::string_view> path_;
};

}  // namespace

Level check_ctx(const Ctx& ctx) {
    Level lvl{0};
    Scope sc;
    for (std::size_t k = 0; k < ctx.size(); ++k) {
        try {
            lvl = lub(lvl, Checker{}.ty(sc, *ctx.entries[k]));
        } catch (const KernelError& e) {
            if (e.error_class() == ErrorClass::InternalStuck) throw;
            throw KernelError(ErrorClass::IllFormedEntry,
                              "context entry " + std::to_string(k) + " is ill formed: " + e.what());
        }
        sc = sc.extend(ctx.entries[k]);
    }
    return lvl;
}

Level infer_ty(const Scope& scope, const Ty& a) { return Checker{}.ty(scope, a); }
Ctx synth_sub(const Scope& scope, const Sub& s) { return Checker{}.sub(scope, s); }
TyPtr synth_tm(const Scope& scope, const Tm& t) { return Checker{}.tm(scope, t); }

Level infer_ty(const Ctx& ctx, const TyPtr& a) { return infer_ty(Scope::of(ctx), *a); }
Ctx synth_sub(const Ctx& ctx, const SubPtr& s) { return synth_sub(Scope::of(ctx), *s); }
TyPtr synth_tm(const Ctx& ctx, const TmPtr& t) { return synth_tm(Scope::of(ctx), *t); }

}  // namespace ttk
