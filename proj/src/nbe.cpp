#include <string>

#include "ttk/error.hpp"
#include "ttk/value.hpp"

namespace ttk {

Env env_push(Env env, ValPtr v) {
    const std::size_t n = env_length(env) + 1;
    return std::make_shared<const EnvNode>(EnvNode{std::move(v), std::move(env), n});
}

std::size_t env_length(const Env& env) { return env ? env->length : 0; }

std::vector<ValPtr> env_values(const Env& env) {
    std::vector<ValPtr> out(env_length(env));
    const EnvNode* node = env.get();
    for (std::size_t k = out.size(); k-- > 0; node = node->tail.get()) out[k] = node->head;
    return out;
}

namespace {

[[noreturn]] void stuck(const char* what) { throw KernelError(ErrorClass::InternalStuck, what); }

ValPtr mkval(Val v) { return std::make_shared<const Val>(std::move(v)); }
TyValPtr mkty(TyVal v) { return std::make_shared<const TyVal>(std::move(v)); }
NePtr mkne(Neutral n) { return std::make_shared<const Neutral>(std::move(n)); }

}  // namespace

ValPtr vne(NePtr n) { return mkval(Val{.kind = ValKind::Ne, .ne = std::move(n)}); }
ValPtr vtrue() {
    static const ValPtr v = mkval(Val{.kind = ValKind::True});
    return v;
}
ValPtr vfalse() {
    static const ValPtr v = mkval(Val{.kind = ValKind::False});
    return v;
}
ValPtr vtt() {
    static const ValPtr v = mkval(Val{.kind = ValKind::Tt});
    return v;
}
ValPtr vrefl(ValPtr u) { return mkval(Val{.kind = ValKind::Refl, .first = std::move(u)}); }
ValPtr vpair(ValPtr a, ValPtr b) {
    return mkval(Val{.kind = ValKind::Pair, .first = std::move(a), .second = std::move(b)});
}
ValPtr vcode(TyValPtr a) { return mkval(Val{.kind = ValKind::Code, .code = std::move(a)}); }
NePtr nvar(std::size_t level) { return mkne(Neutral{.kind = NeKind::Var, .level = level}); }
ValPtr fresh(std::size_t level) { return vne(nvar(level)); }

TyValPtr vbool() {
    static const TyValPtr v = mkty(TyVal{.kind = TyValKind::Bool});
    return v;
}
TyValPtr vtop() {
    static const TyValPtr v = mkty(TyVal{.kind = TyValKind::Top});
    return v;
}
TyValPtr vuniv(Level i) { return mkty(TyVal{.kind = TyValKind::U, .level = i}); }
TyValPtr vid(TyValPtr a, ValPtr u, ValPtr v) {
    return mkty(TyVal{.kind = TyValKind::Id, .dom = std::move(a), .lhs = std::move(u), .rhs = std::move(v)});
}

ValPtr vapply(const ValPtr& f, ValPtr arg) {
    switch (f->kind) {
        case ValKind::Lam: return eval(env_push(f->lam.env, std::move(arg)), *f->lam.body);
        case ValKind::Ne:
            return vne(mkne(Neutral{.kind = NeKind::App, .head = f->ne, .arg = std::move(arg)}));
        default: stuck("application of a non-function");
    }
}

ValPtr vfst(const ValPtr& v) {
    switch (v->kind) {
        case ValKind::Pair: return v->first;
        case ValKind::Ne: return vne(mkne(Neutral{.kind = NeKind::Fst, .head = v->ne}));
        default: stuck("first projection of a non-pair");
    }
}

ValPtr vsnd(const ValPtr& v) {
    switch (v->kind) {
        case ValKind::Pair: return v->second;
        case ValKind::Ne: return vne(mkne(Neutral{.kind = NeKind::Snd, .head = v->ne}));
        default: stuck("second projection of a non-pair");
    }
}

TyValPtr instantiate(const TyClosure& c, ValPtr arg) { return eval(env_push(c.env, std::move(arg)), *c.body); }

TyValPtr instantiate(const TyClosure& c, ValPtr arg1, ValPtr arg2) {
    return eval(env_push(env_push(c.env, std::move(arg1)), std::move(arg2)), *c.body);
}

TyValPtr vel(const ValPtr& v) {
    switch (v->kind) {
        case ValKind::Code: return v->code;
        case ValKind::Ne: return mkty(TyVal{.kind = TyValKind::ElNe, .ne = v->ne});
        default: stuck("decoding a non-code");
    }
}

ValPtr vcode_of(TyValPtr a) {
    if (a->kind == TyValKind::ElNe) return vne(a->ne);
    return vcode(std::move(a));
}

ValPtr eval(const Env& env, const Tm& t) {
    switch (t.kind) {
        case TmKind::Sub: return eval(eval(env, *t.sub), *t.t);
        case TmKind::Q:
            if (!env) stuck("q in an empty environment");
            return env->head;
        case TmKind::Lam: return mkval(Val{.kind = ValKind::Lam, .lam = Closure{env, t.t}});
        case TmKind::App:
            if (!env) stuck("app in an empty environment");
            return vapply(eval(env->tail, *t.t), env->head);
        case TmKind::Pair: return vpair(eval(env, *t.t), eval(env, *t.u));
        case TmKind::Fst: return vfst(eval(env, *t.t));
        case TmKind::Snd: return vsnd(eval(env, *t.t));
        case TmKind::Tt: return vtt();
        case TmKind::Code: return vcode_of(eval(env, *t.a));
        case TmKind::True: return vtrue();
        case TmKind::False: return vfalse();
        case TmKind::If: {
            ValPtr b = eval(env, *t.v);
            switch (b->kind) {
                case ValKind::True: return eval(env, *t.t);
                case ValKind::False: return eval(env, *t.u);
                case ValKind::Ne:
                    return vne(mkne(Neutral{.kind = NeKind::If,
                                            .head = b->ne,
                                            .arg = eval(env, *t.t),
                                            .arg2 = eval(env, *t.u),
                                            .motive = TyClosure{env, t.a}}));
                default: stuck("if on a non-boolean");
            }
        }
        case TmKind::Refl: return vrefl(eval(env, *t.t));
        case TmKind::J: {
            ValPtr e = eval(env, *t.u);
            switch (e->kind) {
                case ValKind::Refl: return eval(env, *t.t);
                case ValKind::Ne:
                    return vne(mkne(Neutral{.kind = NeKind::J,
                                            .head = e->ne,
                                            .arg = eval(env, *t.t),
                                            .motive = TyClosure{env, t.a}}));
                default: stuck("J on a non-equality");
            }
        }
    }
    stuck("unknown term");
}

TyValPtr eval(const Env& env, const Ty& a) {
    switch (a.kind) {
        case TyKind::Sub: return eval(eval(env, *a.sub), *a.a);
        case TyKind::Pi:
            return mkty(TyVal{.kind = TyValKind::Pi, .dom = eval(env, *a.a), .cod = TyClosure{env, a.b}});
        case TyKind::Sigma:
            return mkty(TyVal{.kind = TyValKind::Sigma, .dom = eval(env, *a.a), .cod = TyClosure{env, a.b}});
        case TyKind::Top: return vtop();
        case TyKind::U: return vuniv(a.level);
        case TyKind::El: return vel(eval(env, *a.t));
        case TyKind::Bool: return vbool();
        case TyKind::Id: return vid(eval(env, *a.a), eval(env, *a.t), eval(env, *a.u));
    }
    stuck("unknown type");
}

Env eval(const Env& env, const Sub& s) {
    switch (s.kind) {
        case SubKind::Id: return env;
        case SubKind::Comp: return eval(eval(env, *s.g), *s.f);
        case SubKind::Eps: return nullptr;
        case SubKind::Ext: return env_push(eval(env, *s.f), eval(env, *s.tm));
        case SubKind::P:
            if (!env) stuck("p in an empty environment");
            return env->tail;
    }
    stuck("unknown substitution");
}

namespace {

/// Pushes a variable of the given type for the lifetime of the guard.
class Bind {
public:
    Bind(TyScope& types, TyValPtr ty) : types_(types) { types_.push_back(std::move(ty)); }
    ~Bind() { types_.pop_back(); }
    Bind(const Bind&) = delete;
    Bind& operator=(const Bind&) = delete;

    ValPtr var() const { return fresh(types_.size() - 1); }

private:
    TyScope& types_;
};

}  // namespace

std::pair<TmPtr, TyValPtr> readback_ne(TyScope& types, const Neutral& n) {
    switch (n.kind) {
        case NeKind::Var: {
            if (n.level >= types.size()) stuck("variable escapes its scope");
            return {var(static_cast<unsigned>(types.size() - 1 - n.level)), types[n.level]};
        }
        case NeKind::App: {
            auto [f, fty] = readback_ne(types, *n.head);
            if (fty->kind != TyValKind::Pi) stuck("neutral application at a non-Pi type");
            TyPtr dom = readback(types, fty->dom);
            TmPtr arg = readback(types, n.arg, fty->dom);
            return {apply1(f, dom, arg), instantiate(fty->cod, n.arg)};
        }
        case NeKind::Fst: {
            auto [t, ty] = readback_ne(types, *n.head);
            if (ty->kind != TyValKind::Sigma) stuck("neutral projection at a non-Sigma type");
            return {fst(t), ty->dom};
        }
        case NeKind::Snd: {
            auto [t, ty] = readback_ne(types, *n.head);
            if (ty->kind != TyValKind::Sigma) stuck("neutral projection at a non-Sigma type");
            ValPtr first = vne(mkne(Neutral{.kind = NeKind::Fst, .head = n.head}));
            return {snd(t), instantiate(ty->cod, first)};
        }
        case NeKind::If: {
            auto [b, bty] = readback_ne(types, *n.head);
            TyPtr motive;
            {
                Bind x(types, vbool());
                motive = readback(types, instantiate(n.motive, x.var()));
            }
            TmPtr on_true = readback(types, n.arg, instantiate(n.motive, vtrue()));
            TmPtr on_false = readback(types, n.arg2, instantiate(n.motive, vfalse()));
            return {ite(motive, on_true, on_false, b), instantiate(n.motive, vne(n.head))};
        }
        case NeKind::J: {
            auto [e, ety] = readback_ne(types, *n.head);
            if (ety->kind != TyValKind::Id) stuck("J on a neutral of non-identity type");
            TyPtr motive;
            {
                Bind x(types, ety->dom);
                ValPtr xv = x.var();
                Bind y(types, vid(ety->dom, ety->lhs, xv));
                motive = readback(types, instantiate(n.motive, xv, y.var()));
            }
            TmPtr on_refl = readback(types, n.arg, instantiate(n.motive, ety->lhs, vrefl(ety->lhs)));
            return {jelim(motive, on_refl, e), instantiate(n.motive, ety->rhs, vne(n.head))};
        }
    }
    stuck("unknown neutral");
}

TmPtr readback(TyScope& types, const ValPtr& v, const TyValPtr& ty) {
    switch (ty->kind) {
        case TyValKind::Pi: {
            TyPtr dom = readback(types, ty->dom);
            Bind x(types, ty->dom);
            ValPtr xv = x.var();
            return lam(dom, readback(types, vapply(v, xv), instantiate(ty->cod, xv)));
        }
        case TyValKind::Sigma: {
            TyPtr dom = readback(types, ty->dom);
            TyPtr cod;
            {
                Bind x(types, ty->dom);
                cod = readback(types, instantiate(ty->cod, x.var()));
            }
            ValPtr a = vfst(v);
            return pair(dom, cod, readback(types, a, ty->dom), readback(types, vsnd(v), instantiate(ty->cod, a)));
        }
        case TyValKind::Top: return tt();
        default: break;
    }
    switch (v->kind) {
        case ValKind::Ne: return readback_ne(types, *v->ne).first;
        case ValKind::True: return truelit();
        case ValKind::False: return falselit();
        case ValKind::Refl:
            if (ty->kind != TyValKind::Id) stuck("refl at a non-identity type");
            return refl(readback(types, v->first, ty->dom));
        case ValKind::Code: return code(readback(types, v->code));
        default: stuck("value does not inhabit its type");
    }
}

TyPtr readback(TyScope& types, const TyValPtr& ty) {
    switch (ty->kind) {
        case TyValKind::Pi:
        case TyValKind::Sigma: {
            TyPtr dom = readback(types, ty->dom);
            Bind x(types, ty->dom);
            TyPtr cod = readback(types, instantiate(ty->cod, x.var()));
            return ty->kind == TyValKind::Pi ? pi(dom, cod) : sigma(dom, cod);
        }
        case TyValKind::Top: return top();
        case TyValKind::Bool: return boolty();
        case TyValKind::U: return univ(ty->level);
        case TyValKind::Id:
            return idty(readback(types, ty->dom), readback(types, ty->lhs, ty->dom),
                        readback(types, ty->rhs, ty->dom));
        case TyValKind::ElNe: return el(readback_ne(types, *ty->ne).first);
    }
    stuck("unknown type value");
}

bool conv_val(TyScope& types, const ValPtr& a, const ValPtr& b, const TyValPtr& ty) {
    if (a == b) return true;
    return equal(*readback(types, a, ty), *readback(types, b, ty));
}

bool conv_ty(TyScope& types, const TyValPtr& a, const TyValPtr& b) {
    if (a == b) return true;
    return equal(*readback(types, a), *readback(types, b));
}

}  // namespace ttk
