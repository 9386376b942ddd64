#include "ttk/param.hpp"

#include "ttk/conversion.hpp"
#include "ttk/error.hpp"
#include "ttk/typecheck.hpp"

namespace ttk {

TranslationIllTyped::TranslationIllTyped(std::string op, const std::string& detail)
    : std::runtime_error("param clause for " + op + " is ill typed: " + detail), op_(std::move(op)) {}

namespace {

SubPtr wkn(const SubPtr& s, unsigned n) { return n == 0 ? s : comp(s, wk_n(n)); }
TmPtr wkn(const TmPtr& t, unsigned n) { return n == 0 ? t : tmsub(t, wk_n(n)); }

TyPtr bool_pred(TmPtr b) { return el(ite(univ(Level{0}), code(top()), code(top()), std::move(b))); }

std::string_view head(const Ty& a) {
    static constexpr Op ops[] = {Op::TySub, Op::Pi, Op::Sigma, Op::Top, Op::U, Op::El, Op::Bool, Op::IdTy};
    return op_name(ops[static_cast<int>(a.kind)]);
}
std::string_view head(const Sub& s) {
    static constexpr Op ops[] = {Op::Id, Op::Comp, Op::Eps, Op::Ext, Op::P};
    return op_name(ops[static_cast<int>(s.kind)]);
}
std::string_view head(const Tm& t) {
    static constexpr Op ops[] = {Op::TmSub, Op::Q,    Op::Lam,   Op::App, Op::Pair, Op::Fst,  Op::Snd,
                                 Op::Tt,    Op::Code, Op::True,  Op::False, Op::If, Op::Refl, Op::J};
    return op_name(ops[static_cast<int>(t.kind)]);
}

template <class F>
void verify(std::string_view op, F&& check) {
    try {
        check();
    } catch (const KernelError& e) {
        throw TranslationIllTyped(std::string(op), e.what());
    }
}

}  // namespace

SubPtr Parametricity::csub(const Ctx& g, SubPtr gamma, TmPtr gp) { return ext(std::move(gamma), con(g), std::move(gp)); }

SubPtr Parametricity::tri(const Ctx& g, const TyPtr& a, SubPtr gamma, TmPtr gp, TmPtr x) {
    return ext(csub(g, std::move(gamma), std::move(gp)), tysub(a, wk()), std::move(x));
}

TmPtr Parametricity::ctx_pair(const Ctx& g, const TyPtr& a, SubPtr gamma, TmPtr x, TmPtr gp, TmPtr xp) {
    TyPtr fst_ty = tysub(con(g), gamma);
    TyPtr snd_ty = tysub(ty(g, a), tri(g, a, wkn(gamma, 1), var0(), wkn(x, 1)));
    return pair(std::move(fst_ty), std::move(snd_ty), std::move(gp), std::move(xp));
}

// For y : Id (A[γ]) (u[γ]) x, moves uᴾ[γ, γᴾ] along y into Aᴾ[γ, γᴾ, x].
TmPtr Parametricity::transport(const Ctx& g, const TyPtr& a, const TmPtr& u, SubPtr gamma, TmPtr gp, TmPtr y) {
    TyPtr motive = tysub(ty(g, a), tri(g, a, wkn(gamma, 2), wkn(gp, 2), var(1)));
    return jelim(std::move(motive), tmsub(tm(g, u), csub(g, std::move(gamma), std::move(gp))), std::move(y));
}

TyPtr Parametricity::con(const Ctx& g) {
    if (g.empty()) return top();
    if (auto it = con_cache_.find(g.entries); it != con_cache_.end()) return it->second;
    Ctx tail = g.prefix(g.size() - 1);
    const TyPtr& a = g.last();
    // over Γ ▷ A ▷ Γᴾ[p]: γ = p², γᴾ = v⁰, a = v¹
    TyPtr out = sigma(tysub(con(tail), wk()), tysub(ty(tail, a), tri(tail, a, wk_n(2), var0(), var(1))));
    verify("ctx", [&] {
        if (infer_ty(g, out) != check_ctx(g)) throw KernelError(ErrorClass::TypeMismatch, "context predicate at the wrong level");
    });
    con_cache_.emplace(g.entries, out);
    return out;
}

TyPtr Parametricity::ty(const Ctx& g, const TyPtr& a) {
    Key k{g.entries, a.get()};
    if (auto it = ty_cache_.find(k); it != ty_cache_.end()) return it->second.first;
    TyPtr out = ty_(g, a);
    verify(head(*a), [&] {
        if (infer_ty(ty_ctx(g, a), out) != infer_ty(g, a))
            throw KernelError(ErrorClass::TypeMismatch, "type predicate at the wrong level");
    });
    ty_cache_.emplace(std::move(k), std::pair{out, std::shared_ptr<const void>(a)});
    return out;
}

TmPtr Parametricity::sub(const Ctx& g, const SubPtr& s) {
    Key k{g.entries, s.get()};
    if (auto it = tm_cache_.find(k); it != tm_cache_.end()) return it->second.first;
    TmPtr out = sub_(g, s);
    verify(head(*s), [&] { check_tm(pred_ctx(g), out, sub_classifier(synth_sub(g, s), s)); });
    tm_cache_.emplace(std::move(k), std::pair{out, std::shared_ptr<const void>(s)});
    return out;
}

TmPtr Parametricity::tm(const Ctx& g, const TmPtr& t) {
    Key k{g.entries, t.get()};
    if (auto it = tm_cache_.find(k); it != tm_cache_.end()) return it->second.first;
    TmPtr out = tm_(g, t);
    verify(head(*t), [&] { check_tm(pred_ctx(g), out, tm_classifier(g, synth_tm(g, t), t)); });
    tm_cache_.emplace(std::move(k), std::pair{out, std::shared_ptr<const void>(t)});
    return out;
}

// Over Γ ▷ Γᴾ ▷ A[p]: γ = p², γᴾ = v¹, the element is v⁰.
TyPtr Parametricity::ty_(const Ctx& g, const TyPtr& a) {
    const SubPtr gamma = wk_n(2);
    const TmPtr gp = var(1);
    switch (a->kind) {
        case TyKind::Sub: {
            Ctx d = synth_sub(g, a->sub);
            return tysub(ty(d, a->a), tri(d, a->a, wkn(a->sub, 2), wkn(sub(g, a->sub), 1), var0()));
        }
        case TyKind::Pi: {
            // Π (x : A) Π (xᴾ : Aᴾ x) Bᴾ (f x)
            const TyPtr& A = a->a;
            TyPtr dom = tysub(A, gamma);
            TyPtr dom_p = tysub(ty(g, A), tri(g, A, wkn(gamma, 1), wkn(gp, 1), var0()));
            // γ = p⁴, γᴾ = v³, f = v², x = v¹, xᴾ = v⁰
            SubPtr g4 = wkn(gamma, 2);
            SubPtr gx = ext(g4, A, var(1));
            TmPtr fx = apply1(var(2), tysub(A, g4), var(1));
            TyPtr cod = tysub(ty(g.extend(A), a->b),
                              tri(g.extend(A), a->b, gx, ctx_pair(g, A, g4, var(1), wkn(gp, 2), var0()), fx));
            return pi(dom, pi(dom_p, cod));
        }
        case TyKind::Sigma: {
            const TyPtr& A = a->a;
            TyPtr first = tysub(ty(g, A), tri(g, A, gamma, gp, fst(var0())));
            // γ = p³, γᴾ = v², w = v¹, aᴾ = v⁰
            SubPtr g3 = wkn(gamma, 1);
            TmPtr w = var(1);
            TyPtr second = tysub(ty(g.extend(A), a->b), tri(g.extend(A), a->b, ext(g3, A, fst(w)),
                                                            ctx_pair(g, A, g3, fst(w), wkn(gp, 1), var0()), snd(w)));
            return sigma(first, second);
        }
        case TyKind::Top: return top();
        case TyKind::U: return pi(el(var0()), univ(a->level));
        case TyKind::El: return el(app(tm(g, a->t)));
        case TyKind::Bool: return bool_pred(var0());
        case TyKind::Id: {
            const TyPtr& A = a->a;
            TyPtr carrier = tysub(ty(g, A), tri(g, A, gamma, gp, tmsub(a->u, gamma)));
            TmPtr moved = transport(g, A, a->t, gamma, gp, var0());
            return idty(carrier, moved, tmsub(tm(g, a->u), csub(g, gamma, gp)));
        }
    }
    throw KernelError(ErrorClass::InternalStuck, "param: unknown type former");
}

// Over Γ ▷ Γᴾ: γ = p, γᴾ = v⁰.
TmPtr Parametricity::sub_(const Ctx& g, const SubPtr& s) {
    switch (s->kind) {
        case SubKind::Id: return var0();
        case SubKind::Comp: {
            Ctx mid = synth_sub(g, s->g);
            return tmsub(sub(mid, s->f), csub(mid, comp(s->g, wk()), sub(g, s->g)));
        }
        case SubKind::Eps: return tt();
        case SubKind::Ext: {
            Ctx d = synth_sub(g, s->f);
            return ctx_pair(d, s->ty, comp(s->f, wk()), tmsub(s->tm, wk()), sub(g, s->f), tm(g, s->tm));
        }
        case SubKind::P: return fst(var0());
    }
    throw KernelError(ErrorClass::InternalStuck, "param: unknown substitution former");
}

TmPtr Parametricity::tm_(const Ctx& g, const TmPtr& t) {
    switch (t->kind) {
        case TmKind::Sub: {
            Ctx d = synth_sub(g, t->sub);
            return tmsub(tm(d, t->t), csub(d, comp(t->sub, wk()), sub(g, t->sub)));
        }
        case TmKind::Q: return snd(var0());
        case TmKind::Lam: {
            const TyPtr& A = t->a;
            Ctx ga = g.extend(A);
            TyPtr dom_p = tysub(ty(g, A), tri(g, A, wk_n(2), var(1), var0()));
            // γ = p³, γᴾ = v², x = v¹, xᴾ = v⁰
            SubPtr back = csub(ga, ext(wk_n(3), A, var(1)), ctx_pair(g, A, wk_n(3), var(1), var(2), var0()));
            return lam(tysub(A, wk()), lam(dom_p, tmsub(tm(ga, t->t), back)));
        }
        case TmKind::App: {
            // over Γ' ▷ A ▷ (Γ' ▷ A)ᴾ: γ = p², x = v¹, γᴾ = fst v⁰, xᴾ = snd v⁰
            Ctx tail = g.prefix(g.size() - 1);
            const TyPtr& A = g.last();
            TmPtr f = tmsub(tm(tail, t->t), csub(tail, wk_n(2), fst(var0())));
            TyPtr dom_p = tysub(ty(tail, A), tri(tail, A, wk_n(2), fst(var0()), var(1)));
            return apply1(apply1(f, tysub(A, wk_n(2)), var(1)), dom_p, snd(var0()));
        }
        case TmKind::Pair: {
            const TyPtr& A = t->a;
            TyPtr first = tysub(ty(g, A), tri(g, A, wk(), var0(), tmsub(t->t, wk())));
            // γ = p², γᴾ = v¹, aᴾ = v⁰
            TmPtr u2 = tmsub(t->t, wk_n(2));
            TyPtr second = tysub(ty(g.extend(A), t->b), tri(g.extend(A), t->b, ext(wk_n(2), A, u2),
                                                            ctx_pair(g, A, wk_n(2), u2, var(1), var0()),
                                                            tmsub(t->u, wk_n(2))));
            return pair(first, second, tm(g, t->t), tm(g, t->u));
        }
        case TmKind::Fst: return fst(tm(g, t->t));
        case TmKind::Snd: return snd(tm(g, t->t));
        case TmKind::Tt: return tt();
        case TmKind::Code: return lam(tysub(t->a, wk()), code(ty(g, t->a)));
        case TmKind::True:
        case TmKind::False: return tt();
        case TmKind::If: {
            const TyPtr& C = t->a;
            Ctx gb = g.extend(boolty());
            // motive over Γ ▷ Γᴾ ▷ Bool ▷ Boolᴾ: γ = p³, γᴾ = v², b = v¹, bᴾ = v⁰
            SubPtr g3 = wk_n(3);
            TmPtr elem = ite(tysub(C, lift(g3, boolty())), tmsub(t->t, g3), tmsub(t->u, g3), var(1));
            TyPtr body = tysub(ty(gb, C), tri(gb, C, ext(g3, boolty(), var(1)),
                                              ctx_pair(g, boolty(), g3, var(1), var(2), var0()), elem));
            TyPtr motive = pi(bool_pred(var0()), body);
            TmPtr on_true = lam(bool_pred(truelit()), tmsub(tm(g, t->t), wk()));
            TmPtr on_false = lam(bool_pred(falselit()), tmsub(tm(g, t->u), wk()));
            TmPtr scrut = tmsub(t->v, wk());
            return apply1(ite(motive, on_true, on_false, scrut), bool_pred(scrut), tm(g, t->v));
        }
        case TmKind::Refl: return refl(tm(g, t->t));
        case TmKind::J: return j_clause(g, *t);
    }
    throw KernelError(ErrorClass::InternalStuck, "param: unknown term former");
}

TmPtr Parametricity::j_clause(const Ctx& g, const Tm& t) {
    TyPtr ety = normalize_ty(g, synth_tm(g, t.u));
    if (ety->kind != TyKind::Id) throw KernelError(ErrorClass::TypeMismatch, "param: J on a non-equality");
    const TyPtr& A = ety->a;
    const TmPtr& u = ety->t;
    const TmPtr& v = ety->u;
    const TyPtr I = idty(tysub(A, wk()), tmsub(u, wk()), var0());
    const Ctx ga = g.extend(A);
    const Ctx gai = ga.extend(I);
    const TyPtr& C = t.a;
    const TmPtr& w = t.t;

    // Cᴾ at (γ, x, y), (γᴾ, xᴾ, yᴾ) and an element of C there.
    auto target = [&](SubPtr gamma, TmPtr x, TmPtr y, TmPtr gp, TmPtr xp, TmPtr yp, TmPtr elem) {
        SubPtr gx = ext(gamma, A, x);
        TmPtr inner = ctx_pair(g, A, gamma, x, gp, xp);
        return tysub(ty(gai, C), tri(gai, C, ext(gx, I, y), ctx_pair(ga, I, gx, y, inner, yp), elem));
    };

    // Outer motive over Γ ▷ Γᴾ ▷ A[p] ▷ Id: γ = p³, γᴾ = v², x = v¹, y = v⁰.
    TyPtr xp_ty = tysub(ty(g, A), tri(g, A, wk_n(3), var(2), var(1)));
    // γ = p⁴, γᴾ = v³, x = v², y = v¹, xᴾ = v⁰
    TyPtr yp_ty = idty(tysub(ty(g, A), tri(g, A, wk_n(4), var(3), var(2))),
                       transport(g, A, u, wk_n(4), var(3), var(1)), var0());
    // γ = p⁵, γᴾ = v⁴, x = v³, y = v², xᴾ = v¹, yᴾ = v⁰
    SubPtr g5 = wk_n(5);
    TmPtr elem = jelim(tysub(C, lift(lift(g5, A), I)), tmsub(w, g5), var(2));
    TyPtr motive = pi(xp_ty, pi(yp_ty, target(g5, var(3), var(2), var(4), var(1), var0(), elem)));

    // Refl branch over Γ ▷ Γᴾ, then ▷ xᴾ ▷ yᴾ with x = u, y = refl u.
    TyPtr xu = tysub(ty(g, A), tri(g, A, wk(), var0(), tmsub(u, wk())));
    TyPtr yu = idty(tysub(ty(g, A), tri(g, A, wk_n(2), var(1), tmsub(u, wk_n(2)))),
                    tmsub(tm(g, u), csub(g, wk_n(2), var(1))), var0());
    // inner motive: γ = p⁵, γᴾ = v⁴, xᴾ = v¹, yᴾ = v⁰
    TmPtr u5 = tmsub(u, g5);
    TyPtr inner_motive = target(g5, u5, refl(u5), var(4), var(1), var0(), tmsub(w, g5));
    TmPtr inner = jelim(inner_motive, tmsub(tm(g, w), csub(g, wk_n(3), var(2))), var0());
    TmPtr on_refl = lam(xu, lam(yu, inner));

    TmPtr e1 = tmsub(t.u, wk());
    TmPtr vp = tm(g, v);
    TyPtr xv = tysub(ty(g, A), tri(g, A, wk(), var0(), tmsub(v, wk())));
    TyPtr yv = idty(xv, transport(g, A, u, wk(), var0(), e1), vp);
    return apply1(apply1(jelim(motive, on_refl, e1), xv, vp), yv, tm(g, t.u));
}

ParamEntity param(const Entity& x) {
    check_ctx(x.ctx);
    Parametricity pm;
    ParamEntity out{.sort = x.sort, .ctx = {}};
    const Ctx& g = x.ctx;
    switch (x.sort) {
        case EntitySort::Con:
            out.ctx = g;
            out.ty = pm.con(g);
            out.level = check_ctx(g);
            break;
        case EntitySort::Ty:
            out.level = infer_ty(g, x.ty);
            out.ctx = pm.ty_ctx(g, x.ty);
            out.ty = pm.ty(g, x.ty);
            break;
        case EntitySort::Sub: {
            Ctx d = synth_sub(g, x.sub);
            out.ctx = pm.pred_ctx(g);
            out.classifier = pm.sub_classifier(d, x.sub);
            out.tm = pm.sub(g, x.sub);
            break;
        }
        case EntitySort::Tm: {
            TyPtr a = synth_tm(g, x.tm);
            out.ctx = pm.pred_ctx(g);
            out.classifier = pm.tm_classifier(g, a, x.tm);
            out.tm = pm.tm(g, x.tm);
            break;
        }
    }
    // The clauses were checked on the way up; the final check is the sort.
    verify("result", [&] {
        check_ctx(out.ctx);
        if (out.tm) {
            check_tm(out.ctx, out.tm, out.classifier);
        } else if (infer_ty(out.ctx, out.ty) != out.level) {
            throw KernelError(ErrorClass::TypeMismatch, "predicate at the wrong level");
        }
    });
    return out;
}

}  // namespace ttk
