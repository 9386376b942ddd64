#include "ttk/equations.hpp"

#include "ttk/conversion.hpp"
#include "ttk/print.hpp"
#include "ttk/param.hpp"
#include "ttk/termify.hpp"

namespace ttk {

std::string_view schema_name(Schema s) {
    static constexpr std::string_view names[] = {
        "ass",    "idl",     "idr",     "[id]ty", "[∘]ty",  "[id]tm", "[∘]tm",  "•η",     "▷β1",   "▷β2",
        "▷η",     ",∘",      "Πβ",      "Πη",     "Π[]",    "lam[]",  "Σβ1",    "Σβ2",    "Ση",    "Σ[]",
        ",[]",    "⊤η",      "⊤[]",     "tt[]",   "Uβ",     "Uη",     "U[]",    "El[]",   "Boolβ1", "Boolβ2",
        "Bool[]", "true[]",  "false[]", "if[]",   "Idβ",    "Id[]",   "refl[]", "J[]",
    };
    return names[static_cast<std::size_t>(s)];
}

const std::array<Schema, kSchemaCount>& all_schemas() {
    static const std::array<Schema, kSchemaCount> all = [] {
        std::array<Schema, kSchemaCount> out{};
        for (std::size_t k = 0; k < kSchemaCount; ++k) out[k] = static_cast<Schema>(k);
        return out;
    }();
    return all;
}

std::size_t EqInstance::size() const {
    std::size_t n = 0;
    for (const auto& a : ctx.entries) n += node_count(*a);
    if (lhs_ty) n += node_count(*lhs_ty) + node_count(*rhs_ty);
    if (lhs_sub) n += node_count(*lhs_sub) + node_count(*rhs_sub);
    if (lhs_tm) n += node_count(*lhs_tm) + node_count(*rhs_tm);
    return n;
}

std::string EqInstance::describe() const {
    std::string out = std::string(schema_name(schema)) + " in " + print(ctx);
    switch (sort) {
        case EntitySort::Ty:
            out += " at level " + std::to_string(level.value) + "\n  lhs " + print(*lhs_ty) + "\n  rhs " +
                   print(*rhs_ty);
            break;
        case EntitySort::Sub:
            out += " into " + print(cod) + "\n  lhs " + print(*lhs_sub) + "\n  rhs " + print(*rhs_sub);
            break;
        case EntitySort::Tm:
            out += " at " + print(*ty) + "\n  lhs " + print(*lhs_tm) + "\n  rhs " + print(*rhs_tm);
            break;
        case EntitySort::Con: break;
    }
    return out;
}

namespace {

EqInstance ty_eq(Schema s, Ctx g, TyPtr lhs, TyPtr rhs) {
    Level j = infer_ty(g, lhs);
    return EqInstance{.schema = s, .sort = EntitySort::Ty, .ctx = std::move(g), .cod = {}, .level = j, .lhs_ty = lhs, .rhs_ty = rhs};
}

EqInstance sub_eq(Schema s, Ctx g, Ctx d, SubPtr lhs, SubPtr rhs) {
    return EqInstance{.schema = s, .sort = EntitySort::Sub, .ctx = std::move(g), .cod = std::move(d),
                      .lhs_sub = lhs, .rhs_sub = rhs};
}

EqInstance tm_eq(Schema s, Ctx g, TyPtr a, TmPtr lhs, TmPtr rhs) {
    return EqInstance{.schema = s, .sort = EntitySort::Tm, .ctx = std::move(g), .cod = {}, .level = {}, .ty = a, .lhs_tm = lhs, .rhs_tm = rhs};
}

Ctx nonempty_ctx(Generator& g) {
    Ctx c = g.ctx();
    if (c.empty() || g.chance(30)) c = c.extend(g.ty(c));
    return c;
}

Level below_top(Generator& g) {
    unsigned top = g.config().max_level == 0 ? 0 : g.config().max_level - 1;
    return Level{g.below(top + 1)};
}

TyPtr id_motive_entry(const TyPtr& a, const TmPtr& u) { return idty(tysub(a, wk()), tmsub(u, wk()), var0()); }

struct IdData {
    TyPtr a;
    TmPtr u, v, e;
};

// An equality proof in d: either a variable of identity type found in d, or
// a generated proof of u ≡ u.
IdData id_data(Generator& g, const Ctx& d) {
    if (g.chance(50)) {
        Scope sc = Scope::of(d);
        std::vector<unsigned> ids;
        for (std::size_t lvl = 0; lvl < sc.depth(); ++lvl)
            if (sc.types[lvl]->kind == TyValKind::Id) ids.push_back(static_cast<unsigned>(sc.depth() - 1 - lvl));
        if (!ids.empty()) {
            unsigned n = ids[g.below(static_cast<unsigned>(ids.size()))];
            TyPtr ety = normalize_ty(sc, *synth_tm(sc, *var(n)));
            return {ety->a, ety->t, ety->u, var(n)};
        }
    }
    TyPtr a = g.ty(d);
    TmPtr u = g.tm(d, a);
    TmPtr e = g.tm(d, idty(a, u, u));
    return {a, u, u, e};
}

EqInstance gen_once(Generator& g, Schema s) {
    switch (s) {
        case Schema::Ass: {
            Ctx c = g.ctx();
            auto [nu, th] = g.sub(c);
            auto [de, xi] = g.sub(th);
            auto [si, d] = g.sub(xi);
            return sub_eq(s, c, d, comp(comp(si, de), nu), comp(si, comp(de, nu)));
        }
        case Schema::Idl:
        case Schema::Idr: {
            Ctx c = g.ctx();
            auto [si, d] = g.sub(c);
            return sub_eq(s, c, d, s == Schema::Idl ? comp(id_sub(), si) : comp(si, id_sub()), si);
        }
        case Schema::TyId: {
            Ctx c = g.ctx();
            TyPtr a = g.ty(c);
            return ty_eq(s, c, tysub(a, id_sub()), a);
        }
        case Schema::TyComp: {
            Ctx c = g.ctx();
            auto [de, th] = g.sub(c);
            auto [si, d] = g.sub(th);
            TyPtr a = g.ty(d);
            return ty_eq(s, c, tysub(a, comp(si, de)), tysub(tysub(a, si), de));
        }
        case Schema::TmId: {
            Ctx c = g.ctx();
            auto [t, a] = g.tm_any(c);
            return tm_eq(s, c, a, tmsub(t, id_sub()), t);
        }
        case Schema::TmComp: {
            Ctx c = g.ctx();
            auto [de, th] = g.sub(c);
            auto [si, d] = g.sub(th);
            auto [t, a] = g.tm_any(d);
            return tm_eq(s, c, tysub(a, comp(si, de)), tmsub(t, comp(si, de)), tmsub(tmsub(t, si), de));
        }
        case Schema::EpsEta: {
            Ctx c = g.ctx();
            return sub_eq(s, c, Ctx{}, g.sub_into(c, Ctx{}), eps());
        }
        case Schema::ExtBeta1:
        case Schema::ExtBeta2: {
            Ctx c = g.ctx();
            auto [si, d] = g.sub(c);
            TyPtr a = g.ty(d);
            TmPtr t = g.tm(c, tysub(a, si));
            if (s == Schema::ExtBeta1) return sub_eq(s, c, d, comp(wk(), ext(si, a, t)), si);
            return tm_eq(s, c, tysub(a, si), tmsub(var0(), ext(si, a, t)), t);
        }
        case Schema::ExtEta: {
            Ctx c = nonempty_ctx(g);
            return sub_eq(s, c, c, ext(wk(), c.last(), var0()), id_sub());
        }
        case Schema::ExtComp: {
            Ctx c = g.ctx();
            auto [nu, th] = g.sub(c);
            auto [si, d] = g.sub(th);
            TyPtr a = g.ty(d);
            TmPtr t = g.tm(th, tysub(a, si));
            return sub_eq(s, c, d.extend(a), comp(ext(si, a, t), nu), ext(comp(si, nu), a, tmsub(t, nu)));
        }
        case Schema::PiBeta: {
            Ctx c = nonempty_ctx(g);
            auto [t, b] = g.tm_any(c);
            return tm_eq(s, c, b, app(lam(c.last(), t)), t);
        }
        case Schema::PiEta: {
            Ctx c = g.ctx();
            TyPtr a = g.ty(c);
            TyPtr b = g.ty(c.extend(a));
            TmPtr t = g.tm(c, pi(a, b));
            return tm_eq(s, c, pi(a, b), lam(a, app(t)), t);
        }
        case Schema::PiSub:
        case Schema::SigmaSub: {
            Ctx c = g.ctx();
            auto [si, d] = g.sub(c);
            TyPtr a = g.ty(d);
            TyPtr b = g.ty(d.extend(a));
            if (s == Schema::PiSub) return ty_eq(s, c, tysub(pi(a, b), si), pi(tysub(a, si), tysub(b, lift(si, a))));
            return ty_eq(s, c, tysub(sigma(a, b), si), sigma(tysub(a, si), tysub(b, lift(si, a))));
        }
        case Schema::LamSub: {
            Ctx c = g.ctx();
            auto [si, d] = g.sub(c);
            TyPtr a = g.ty(d);
            auto [t, b] = g.tm_any(d.extend(a));
            return tm_eq(s, c, tysub(pi(a, b), si), tmsub(lam(a, t), si), lam(tysub(a, si), tmsub(t, lift(si, a))));
        }
        case Schema::SigmaBeta1:
        case Schema::SigmaBeta2:
        case Schema::PairSub: {
            Ctx c = g.ctx();
            SubPtr si = id_sub();
            Ctx d = c;
            if (s == Schema::PairSub) std::tie(si, d) = g.sub(c);
            TyPtr a = g.ty(d);
            TyPtr b = g.ty(d.extend(a));
            TmPtr u = g.tm(d, a);
            TyPtr bu = tysub(b, ext(id_sub(), a, u));
            TmPtr v = g.tm(d, bu);
            TmPtr p = pair(a, b, u, v);
            if (s == Schema::SigmaBeta1) return tm_eq(s, c, a, fst(p), u);
            if (s == Schema::SigmaBeta2) return tm_eq(s, c, bu, snd(p), v);
            return tm_eq(s, c, tysub(sigma(a, b), si), tmsub(p, si),
                         pair(tysub(a, si), tysub(b, lift(si, a)), tmsub(u, si), tmsub(v, si)));
        }
        case Schema::SigmaEta: {
            Ctx c = g.ctx();
            TyPtr a = g.ty(c);
            TyPtr b = g.ty(c.extend(a));
            TmPtr t = g.tm(c, sigma(a, b));
            return tm_eq(s, c, sigma(a, b), pair(a, b, fst(t), snd(t)), t);
        }
        case Schema::TopEta: {
            Ctx c = g.ctx();
            return tm_eq(s, c, top(), g.tm(c, top()), tt());
        }
        case Schema::TopSub:
        case Schema::USub:
        case Schema::BoolSub: {
            Ctx c = g.ctx();
            auto [si, d] = g.sub(c);
            (void)d;
            TyPtr x = s == Schema::TopSub ? top() : s == Schema::BoolSub ? boolty() : univ(below_top(g));
            return ty_eq(s, c, tysub(x, si), x);
        }
        case Schema::TtSub:
        case Schema::TrueSub:
        case Schema::FalseSub: {
            Ctx c = g.ctx();
            auto [si, d] = g.sub(c);
            (void)d;
            TmPtr x = s == Schema::TtSub ? tt() : s == Schema::TrueSub ? truelit() : falselit();
            return tm_eq(s, c, s == Schema::TtSub ? top() : boolty(), tmsub(x, si), x);
        }
        case Schema::UBeta: {
            Ctx c = g.ctx();
            TyPtr a = g.ty(c, below_top(g));
            return ty_eq(s, c, el(code(a)), a);
        }
        case Schema::UEta: {
            Ctx c = g.ctx();
            TyPtr u = univ(below_top(g));
            TmPtr a = g.tm(c, u);
            return tm_eq(s, c, u, code(el(a)), a);
        }
        case Schema::ElSub: {
            Ctx c = g.ctx();
            auto [si, d] = g.sub(c);
            TmPtr a = g.tm(d, univ(below_top(g)));
            return ty_eq(s, c, tysub(el(a), si), el(tmsub(a, si)));
        }
        case Schema::BoolBeta1:
        case Schema::BoolBeta2: {
            Ctx c = g.ctx();
            TyPtr m = g.ty(c.extend(boolty()));
            TyPtr mt = tysub(m, ext(id_sub(), boolty(), truelit()));
            TyPtr mf = tysub(m, ext(id_sub(), boolty(), falselit()));
            TmPtr u = g.tm(c, mt);
            TmPtr v = g.tm(c, mf);
            if (s == Schema::BoolBeta1) return tm_eq(s, c, mt, ite(m, u, v, truelit()), u);
            return tm_eq(s, c, mf, ite(m, u, v, falselit()), v);
        }
        case Schema::IfSub: {
            Ctx c = g.ctx();
            auto [si, d] = g.sub(c);
            TyPtr m = g.ty(d.extend(boolty()));
            TmPtr u = g.tm(d, tysub(m, ext(id_sub(), boolty(), truelit())));
            TmPtr v = g.tm(d, tysub(m, ext(id_sub(), boolty(), falselit())));
            TmPtr t = g.tm(d, boolty());
            return tm_eq(s, c, tysub(tysub(m, ext(id_sub(), boolty(), t)), si), tmsub(ite(m, u, v, t), si),
                         ite(tysub(m, lift(si, boolty())), tmsub(u, si), tmsub(v, si), tmsub(t, si)));
        }
        case Schema::IdSub: {
            Ctx c = g.ctx();
            auto [si, d] = g.sub(c);
            TyPtr a = g.ty(d);
            TmPtr u = g.tm(d, a);
            TmPtr v = g.chance(50) ? u : g.tm(d, a);
            return ty_eq(s, c, tysub(idty(a, u, v), si), idty(tysub(a, si), tmsub(u, si), tmsub(v, si)));
        }
        case Schema::ReflSub: {
            Ctx c = g.ctx();
            auto [si, d] = g.sub(c);
            TyPtr a = g.ty(d);
            TmPtr u = g.tm(d, a);
            return tm_eq(s, c, tysub(idty(a, u, u), si), tmsub(refl(u), si), refl(tmsub(u, si)));
        }
        case Schema::IdBeta: {
            Ctx c = g.ctx();
            TyPtr a = g.ty(c);
            TmPtr u = g.tm(c, a);
            TyPtr eq = id_motive_entry(a, u);
            TyPtr m = g.ty(c.extend(a).extend(eq));
            TyPtr mw = tysub(m, ext(ext(id_sub(), a, u), eq, refl(u)));
            TmPtr w = g.tm(c, mw);
            return tm_eq(s, c, mw, jelim(m, w, refl(u)), w);
        }
        case Schema::JSub: {
            Ctx c = g.ctx();
            auto [si, d] = g.sub(c);
            IdData x = id_data(g, d);
            TyPtr eq = id_motive_entry(x.a, x.u);
            TyPtr m = g.ty(d.extend(x.a).extend(eq));
            TmPtr w = g.tm(d, tysub(m, ext(ext(id_sub(), x.a, x.u), eq, refl(x.u))));
            TyPtr result = tysub(tysub(m, ext(ext(id_sub(), x.a, x.v), eq, x.e)), si);
            return tm_eq(s, c, result, tmsub(jelim(m, w, x.e), si),
                         jelim(tysub(m, lift(lift(si, x.a), eq)), tmsub(w, si), tmsub(x.e, si)));
        }
    }
    throw GenExhausted("unknown schema");
}

}  // namespace

EqInstance gen_eq_instance(Generator& g, Schema s) {
    // Random goal types are not always inhabited; start over with fresh
    // components when the generator gives up on one.
    for (int tries = 0;; ++tries) {
        try {
            return gen_once(g, s);
        } catch (const GenExhausted&) {
            if (tries == 200) throw;
        }
    }
}

bool verify_equation(const EqInstance& e) {
    switch (e.sort) {
        case EntitySort::Ty: return conv_ty(e.ctx, e.lhs_ty, e.rhs_ty);
        case EntitySort::Sub: return conv_sub(e.ctx, e.cod, e.lhs_sub, e.rhs_sub);
        case EntitySort::Tm: return conv_tm(e.ctx, e.ty, e.lhs_tm, e.rhs_tm);
        case EntitySort::Con: break;
    }
    return false;
}

bool verify_termified_equation(const EqInstance& e) {
    Termifier tf;
    const Ctx empty;
    switch (e.sort) {
        case EntitySort::Ty:
            return conv_tm(empty, tf.ty_classifier(e.ctx, e.level), tf.ty(e.ctx, e.lhs_ty), tf.ty(e.ctx, e.rhs_ty));
        case EntitySort::Sub:
            return conv_tm(empty, tf.sub_classifier(e.ctx, e.cod), tf.sub(e.ctx, e.lhs_sub),
                           tf.sub(e.ctx, e.rhs_sub));
        case EntitySort::Tm:
            return conv_tm(empty, tf.tm_classifier(e.ctx, e.ty), tf.tm(e.ctx, e.lhs_tm), tf.tm(e.ctx, e.rhs_tm));
        case EntitySort::Con: break;
    }
    return false;
}

bool verify_param_equation(const EqInstance& e) {
    Parametricity pm;
    switch (e.sort) {
        case EntitySort::Ty:
            return conv_ty(pm.ty_ctx(e.ctx, e.lhs_ty), pm.ty(e.ctx, e.lhs_ty), pm.ty(e.ctx, e.rhs_ty));
        case EntitySort::Sub:
            return conv_tm(pm.pred_ctx(e.ctx), pm.sub_classifier(e.cod, e.lhs_sub), pm.sub(e.ctx, e.lhs_sub),
                           pm.sub(e.ctx, e.rhs_sub));
        case EntitySort::Tm:
            return conv_tm(pm.pred_ctx(e.ctx), pm.tm_classifier(e.ctx, e.ty, e.lhs_tm), pm.tm(e.ctx, e.lhs_tm),
                           pm.tm(e.ctx, e.rhs_tm));
        case EntitySort::Con: break;
    }
    return false;
}

}  // namespace ttk
