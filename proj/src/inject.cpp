#include "ttk/inject.hpp"

#include "ttk/conversion.hpp"
#include "ttk/error.hpp"
#include "ttk/print.hpp"
#include "ttk/typecheck.hpp"

namespace ttk {

IsoFailure::IsoFailure(Ctx ctx, std::string composite)
    : std::runtime_error("context isomorphism rejected (" + composite + ") for " + print(ctx)),
      ctx_(std::move(ctx)),
      composite_(std::move(composite)) {}

namespace {

std::string print_sub_nf(const Ctx& g, const SubPtr& s, const Ctx& cod) {
    std::string out = "(";
    for (const auto& t : normalize_sub(Scope::of(g), *s, cod)) {
        if (out.size() > 1) out += ' ';
        out += print(*t);
    }
    return out + ")";
}

}  // namespace

const CtxIso& Injector::ctx_iso(const Ctx& g) {
    if (auto it = isos_.find(g.entries); it != isos_.end()) return it->second;
    CtxIso iso;
    if (g.empty()) {
        iso.fwd = ext(eps(), tf_.decoded(g), tt());
        iso.bwd = eps();
    } else {
        Ctx tail = g.prefix(g.size() - 1);
        const TyPtr& a = g.last();
        const CtxIso& prev = ctx_iso(tail);
        // (ε, (v⁰[Γ₁ ∘ p], v⁰)) and (Γ₂ ∘ (ε, fst v⁰), snd v⁰)
        iso.fwd = ext(eps(), tf_.decoded(g), tf_.pack(tail, a, tmsub(var0(), comp(prev.fwd, wk())), var0()));
        iso.bwd = ext(comp(prev.bwd, ext(eps(), tf_.decoded(tail), fst(var0()))), a, snd(var0()));
    }
    Ctx image{{tf_.decoded(g)}};
    check_sub(g, iso.fwd, image);
    check_sub(image, iso.bwd, g);
    iso.fwd_bwd_ok = conv_sub(image, image, comp(iso.fwd, iso.bwd), id_sub());
    if (!iso.fwd_bwd_ok) throw IsoFailure(g, "fwd o bwd");
    iso.bwd_fwd_ok = conv_sub(g, g, comp(iso.bwd, iso.fwd), id_sub());
    if (!iso.bwd_fwd_ok) throw IsoFailure(g, "bwd o fwd");
    return isos_.emplace(g.entries, std::move(iso)).first->second;
}

EmbedResult Injector::check_embedding(const Entity& x) {
    const Ctx& g = x.ctx;
    EmbedResult out;
    switch (x.sort) {
        case EntitySort::Con:
            ctx_iso(g);
            out.accept = true;
            return out;
        case EntitySort::Ty: {
            infer_ty(g, x.ty);
            TyPtr rhs = tysub(el(app(tf_.ty(g, x.ty))), ctx_iso(g).fwd);
            out.accept = conv_ty(g, x.ty, rhs);
            if (!out.accept) {
                out.lhs_nf = print(*normalize_ty(g, x.ty));
                out.rhs_nf = print(*normalize_ty(g, rhs));
            }
            return out;
        }
        case EntitySort::Sub: {
            Ctx d = synth_sub(g, x.sub);
            SubPtr rhs = comp(comp(ctx_iso(d).bwd, ext(eps(), tf_.decoded(d), app(tf_.sub(g, x.sub)))), ctx_iso(g).fwd);
            out.accept = conv_sub(g, d, x.sub, rhs);
            if (!out.accept) {
                out.lhs_nf = print_sub_nf(g, x.sub, d);
                out.rhs_nf = print_sub_nf(g, rhs, d);
            }
            return out;
        }
        case EntitySort::Tm: {
            TyPtr a = synth_tm(g, x.tm);
            TmPtr rhs = tmsub(app(tf_.tm(g, x.tm)), ctx_iso(g).fwd);
            out.accept = conv_tm(g, a, x.tm, rhs);
            if (!out.accept) {
                Scope sc = Scope::of(g);
                out.lhs_nf = print(*normalize_at(sc, *x.tm, *a));
                out.rhs_nf = print(*normalize_at(sc, *rhs, *a));
            }
            return out;
        }
    }
    throw KernelError(ErrorClass::InternalStuck, "inject: unknown sort");
}

ProbeResult Injector::probe(const Entity& x, const Entity& y) {
    if (x.sort != y.sort) throw KernelError(ErrorClass::TypeMismatch, "probe: entities of different sorts");
    ProbeResult out;
    const Ctx& g = x.ctx;
    switch (x.sort) {
        case EntitySort::Con: {
            Level i = check_ctx(x.ctx);
            if (check_ctx(y.ctx) != i) return out;
            out.termified_equal = conv_tm(Ctx{}, univ(i), tf_.con(x.ctx), tf_.con(y.ctx));
            if (!out.termified_equal) return out;
            // Γ ≃ • ▷ El Γτ ≡ • ▷ El Δτ ≃ Δ
            const CtxIso& gi = ctx_iso(x.ctx);
            const CtxIso& di = ctx_iso(y.ctx);
            SubPtr f1 = comp(di.bwd, gi.fwd);
            SubPtr f2 = comp(gi.bwd, di.fwd);
            check_sub(x.ctx, f1, y.ctx);
            check_sub(y.ctx, f2, x.ctx);
            out.equal = conv_sub(x.ctx, x.ctx, comp(f2, f1), id_sub()) &&
                        conv_sub(y.ctx, y.ctx, comp(f1, f2), id_sub());
            return out;
        }
        case EntitySort::Ty: {
            Level j = infer_ty(g, x.ty);
            if (!conv_ctx(g, y.ctx) || infer_ty(g, y.ty) != j)
                throw KernelError(ErrorClass::TypeMismatch, "probe: types at different classifiers");
            out.termified_equal = conv_tm(Ctx{}, tf_.ty_classifier(g, j), tf_.ty(g, x.ty), tf_.ty(g, y.ty));
            out.equal = conv_ty(g, x.ty, y.ty);
            return out;
        }
        case EntitySort::Sub: {
            Ctx d = synth_sub(g, x.sub);
            if (!conv_ctx(g, y.ctx)) throw KernelError(ErrorClass::TypeMismatch, "probe: different contexts");
            check_sub(g, y.sub, d);
            out.termified_equal = conv_tm(Ctx{}, tf_.sub_classifier(g, d), tf_.sub(g, x.sub), tf_.sub(g, y.sub));
            out.equal = conv_sub(g, d, x.sub, y.sub);
            return out;
        }
        case EntitySort::Tm: {
            TyPtr a = synth_tm(g, x.tm);
            if (!conv_ctx(g, y.ctx)) throw KernelError(ErrorClass::TypeMismatch, "probe: different contexts");
            check_tm(g, y.tm, a);
            out.termified_equal = conv_tm(Ctx{}, tf_.tm_classifier(g, a), tf_.tm(g, x.tm), tf_.tm(g, y.tm));
            out.equal = conv_tm(g, a, x.tm, y.tm);
            return out;
        }
    }
    throw KernelError(ErrorClass::InternalStuck, "inject: unknown sort");
}

CtxIso build_ctx_iso(const Ctx& g) {
    check_ctx(g);
    return Injector{}.ctx_iso(g);
}

EmbedResult check_embedding(const Entity& x) {
    check_ctx(x.ctx);
    return Injector{}.check_embedding(x);
}

const std::vector<NamedCase>& operator_cases() {
    static const std::vector<NamedCase> cases = [] {
        const Ctx b{{boolty()}};
        const Ctx bb{{boolty(), boolty()}};
        const Ctx pairs{{sigma(boolty(), boolty())}};
        const Ctx code0{{univ(Level{0})}};
        const Ctx path{{boolty(), boolty(), idty(boolty(), var(1), var0())}};
        return std::vector<NamedCase>{
            {"id", sub_entity(b, id_sub())},
            {"comp", sub_entity(bb, comp(wk(), wk()))},
            {"tysub", ty_entity(bb, tysub(idty(boolty(), var0(), truelit()), wk()))},
            {"tmsub", tm_entity(bb, tmsub(var0(), wk()))},
            {"empty", con_entity(Ctx{})},
            {"eps", sub_entity(b, eps())},
            {"extend", con_entity(bb)},
            {"ext", sub_entity(b, ext(wk(), boolty(), ite(boolty(), falselit(), truelit(), var0())))},
            {"p", sub_entity(b, wk())},
            {"q", tm_entity(b, var0())},
            {"pi", ty_entity(Ctx{}, pi(boolty(), idty(boolty(), var0(), var0())))},
            {"lam", tm_entity(Ctx{}, lam(boolty(), var0()))},
            {"app", tm_entity(b, app(lam(boolty(), ite(boolty(), falselit(), truelit(), var0()))))},
            {"sigma", ty_entity(Ctx{}, sigma(boolty(), idty(boolty(), var0(), truelit())))},
            {"pair", tm_entity(Ctx{}, pair(boolty(), boolty(), truelit(), falselit()))},
            {"fst", tm_entity(pairs, fst(var0()))},
            {"snd", tm_entity(pairs, snd(var0()))},
            {"top", ty_entity(b, top())},
            {"tt", tm_entity(b, tt())},
            {"u", ty_entity(Ctx{}, univ(Level{0}))},
            {"el", ty_entity(code0, el(var0()))},
            {"code", tm_entity(b, code(idty(boolty(), var0(), falselit())))},
            {"bool", ty_entity(Ctx{}, boolty())},
            {"true", tm_entity(Ctx{}, truelit())},
            {"false", tm_entity(b, falselit())},
            {"if", tm_entity(b, ite(idty(boolty(), var0(), var0()), refl(truelit()), refl(falselit()), var0()))},
            {"idt", ty_entity(b, idty(boolty(), var0(), truelit()))},
            {"refl", tm_entity(b, refl(var0()))},
            // J over u = v in • ▷ Bool ▷ Bool, transporting refl u to u = v.
            {"j", tm_entity(path, jelim(idty(boolty(), var(4), var(1)), refl(var(2)), var0()))},
        };
    }();
    return cases;
}

}  // namespace ttk
