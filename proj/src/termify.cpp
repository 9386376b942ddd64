#include "ttk/termify.hpp"

#include "ttk/conversion.hpp"
#include "ttk/error.hpp"
#include "ttk/typecheck.hpp"

namespace ttk {

namespace {

// In •, a closed function f : Π X B is turned into a term of • ▷ X by app;
// inside other contexts it is first weakened by ε.
TmPtr closed(TmPtr f) { return tmsub(std::move(f), eps()); }

}  // namespace

TmPtr Termifier::con(const Ctx& g) {
    if (g.empty()) return code(top());
    if (auto it = con_cache_.find(g.entries); it != con_cache_.end()) return it->second;
    Ctx tail = g.prefix(g.size() - 1);
    TmPtr out = code(sigma(decoded(tail), el(app(ty(tail, g.last())))));
    con_cache_.emplace(g.entries, out);
    return out;
}

TmPtr Termifier::pack(const Ctx& g, const TyPtr& a, TmPtr x, TmPtr y) {
    return pair(decoded(g), el(app(ty(g, a))), std::move(x), std::move(y));
}

TmPtr Termifier::ty(const Ctx& g, const TyPtr& a) {
    Key k{g.entries, a.get()};
    if (auto it = cache_.find(k); it != cache_.end()) return it->second.first;
    TmPtr out = ty_(g, a);
    cache_.emplace(std::move(k), std::pair{out, std::shared_ptr<const void>(a)});
    return out;
}

TmPtr Termifier::sub(const Ctx& g, const SubPtr& s) {
    Key k{g.entries, s.get()};
    if (auto it = cache_.find(k); it != cache_.end()) return it->second.first;
    TmPtr out = sub_(g, s);
    cache_.emplace(std::move(k), std::pair{out, std::shared_ptr<const void>(s)});
    return out;
}

TmPtr Termifier::tm(const Ctx& g, const TmPtr& t) {
    Key k{g.entries, t.get()};
    if (auto it = cache_.find(k); it != cache_.end()) return it->second.first;
    TmPtr out = tm_(g, t);
    cache_.emplace(std::move(k), std::pair{out, std::shared_ptr<const void>(t)});
    return out;
}

TmPtr Termifier::ty_(const Ctx& g, const TyPtr& a) {
    TyPtr gd = decoded(g);
    switch (a->kind) {
        case TyKind::Sub: {
            Ctx d = synth_sub(g, a->sub);
            return lam(gd, tmsub(app(ty(d, a->a)), ext(eps(), decoded(d), app(sub(g, a->sub)))));
        }
        case TyKind::Pi:
        case TyKind::Sigma: {
            Ctx ga = g.extend(a->a);
            TyPtr dom = el(app(ty(g, a->a)));
            TyPtr cod = tysub(el(app(ty(ga, a->b))), ext(eps(), decoded(ga), pack(g, a->a, var(1), var(0))));
            return lam(gd, code(a->kind == TyKind::Pi ? pi(dom, cod) : sigma(dom, cod)));
        }
        case TyKind::Top: return lam(gd, code(top()));
        case TyKind::U: return lam(gd, code(univ(a->level)));
        case TyKind::El: return tm(g, a->t);
        case TyKind::Bool: return lam(gd, code(boolty()));
        case TyKind::Id:
            return lam(gd, code(idty(el(app(ty(g, a->a))), app(tm(g, a->t)), app(tm(g, a->u)))));
    }
    throw KernelError(ErrorClass::InternalStuck, "termify: unknown type former");
}

TmPtr Termifier::sub_(const Ctx& g, const SubPtr& s) {
    TyPtr gd = decoded(g);
    switch (s->kind) {
        case SubKind::Id: return lam(gd, var0());
        case SubKind::Comp: {
            Ctx mid = synth_sub(g, s->g);
            return lam(gd, apply1(closed(sub(mid, s->f)), decoded(mid), apply1(closed(sub(g, s->g)), gd, var0())));
        }
        case SubKind::Eps: return lam(gd, tt());
        case SubKind::Ext: {
            Ctx d = synth_sub(g, s->f);
            return lam(gd, pack(d, s->ty, app(sub(g, s->f)), app(tm(g, s->tm))));
        }
        case SubKind::P: return lam(gd, fst(var0()));
    }
    throw KernelError(ErrorClass::InternalStuck, "termify: unknown substitution former");
}

TmPtr Termifier::tm_(const Ctx& g, const TmPtr& t) {
    TyPtr gd = decoded(g);
    switch (t->kind) {
        case TmKind::Sub: {
            Ctx d = synth_sub(g, t->sub);
            return lam(gd, tmsub(app(tm(d, t->t)), ext(eps(), decoded(d), app(sub(g, t->sub)))));
        }
        case TmKind::Q: return lam(gd, snd(var0()));
        case TmKind::Lam: {
            Ctx ga = g.extend(t->a);
            return lam(gd, lam(el(app(ty(g, t->a))),
                               apply1(closed(tm(ga, t->t)), decoded(ga), pack(g, t->a, var(1), var(0)))));
        }
        case TmKind::App: {
            // (app t)τ = lam (t[ε] $ fst v⁰ $ snd v⁰), grouped to the left.
            Ctx tail = g.prefix(g.size() - 1);
            TyPtr td = decoded(tail);
            TyPtr dom = tysub(el(app(ty(tail, g.last()))), ext(eps(), td, fst(var0())));
            return lam(gd, apply1(apply1(closed(tm(tail, t->t)), td, fst(var0())), dom, snd(var0())));
        }
        case TmKind::Pair: {
            Ctx ga = g.extend(t->a);
            TyPtr dom = el(app(ty(g, t->a)));
            TyPtr cod = tysub(el(app(ty(ga, t->b))), ext(eps(), decoded(ga), pack(g, t->a, var(1), var(0))));
            return lam(gd, pair(dom, cod, app(tm(g, t->t)), app(tm(g, t->u))));
        }
        case TmKind::Fst: return lam(gd, fst(app(tm(g, t->t))));
        case TmKind::Snd: return lam(gd, snd(app(tm(g, t->t))));
        case TmKind::Tt: return lam(gd, tt());
        case TmKind::Code: return ty(g, t->a);
        case TmKind::True: return lam(gd, truelit());
        case TmKind::False: return lam(gd, falselit());
        case TmKind::If: {
            Ctx gb = g.extend(boolty());
            TyPtr motive = el(apply1(closed(ty(gb, t->a)), decoded(gb), pack(g, boolty(), var(1), var(0))));
            return lam(gd, ite(motive, app(tm(g, t->t)), app(tm(g, t->u)), app(tm(g, t->v))));
        }
        case TmKind::Refl: return lam(gd, refl(app(tm(g, t->t))));
        case TmKind::J: {
            Scope sc = Scope::of(g);
            TyPtr ety = normalize_ty(sc, *synth_tm(sc, *t->u));
            if (ety->kind != TyKind::Id) throw KernelError(ErrorClass::TypeMismatch, "termify: J on a non-equality");
            const TyPtr& a = ety->a;
            Ctx ga = g.extend(a);
            TyPtr eq = idty(tysub(a, wk()), tmsub(ety->t, wk()), var0());
            Ctx gae = ga.extend(eq);
            TmPtr point = pack(ga, eq, pack(g, a, var(2), var(1)), var(0));
            TyPtr motive = el(apply1(closed(ty(gae, t->a)), decoded(gae), point));
            return lam(gd, jelim(motive, app(tm(g, t->t)), app(tm(g, t->u))));
        }
    }
    throw KernelError(ErrorClass::InternalStuck, "termify: unknown term former");
}

TermifiedEntity termify(const Entity& x) {
    Termifier tf;
    TermifiedEntity out{.sort = x.sort};
    if (x.sort != EntitySort::Con) check_ctx(x.ctx);
    // Classifiers come first: synthesizing them typechecks the input.
    switch (x.sort) {
        case EntitySort::Con:
            out.classifier = tf.con_classifier(check_ctx(x.ctx));
            out.term = tf.con(x.ctx);
            break;
        case EntitySort::Ty:
            out.classifier = tf.ty_classifier(x.ctx, infer_ty(x.ctx, x.ty));
            out.term = tf.ty(x.ctx, x.ty);
            break;
        case EntitySort::Sub:
            out.classifier = tf.sub_classifier(x.ctx, synth_sub(x.ctx, x.sub));
            out.term = tf.sub(x.ctx, x.sub);
            break;
        case EntitySort::Tm:
            out.classifier = tf.tm_classifier(x.ctx, synth_tm(x.ctx, x.tm));
            out.term = tf.tm(x.ctx, x.tm);
            break;
    }
    check_tm(Ctx{}, out.term, out.classifier);
    return out;
}

}  // namespace ttk
