#pragma once

// Termification: every context, type, substitution and term becomes a closed
// term. Contexts become codes, types become code-valued functions out of the
// decoded context, substitutions and terms become functions.
//
//   Γ : Con i      ↦  Γτ : Tm • (U i)
//   A : Ty j Γ     ↦  Aτ : Tm • (El Γτ ⇒ U j)
//   σ : Sub Γ Δ    ↦  στ : Tm • (El Γτ ⇒ El Δτ)
//   t : Tm Γ A     ↦  tτ : Tm • (Π (El Γτ) (El (app Aτ)))

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "ttk/entity.hpp"
#include "ttk/syntax.hpp"

namespace ttk {

struct TermifiedEntity {
    EntitySort sort = EntitySort::Con;
    TmPtr term{};
    TyPtr classifier{};  // a closed type
};

/// Inputs are assumed to typecheck; subterm contexts and codomains are
/// synthesized on the way down.
class Termifier {
public:
    TmPtr con(const Ctx& g);
    /// The decoded context, El Γτ.
    TyPtr decoded(const Ctx& g) { return el(con(g)); }
    TmPtr ty(const Ctx& g, const TyPtr& a);
    TmPtr sub(const Ctx& g, const SubPtr& s);
    TmPtr tm(const Ctx& g, const TmPtr& t);

    TyPtr con_classifier(Level i) { return univ(i); }
    TyPtr ty_classifier(const Ctx& g, Level j) { return arrow(decoded(g), univ(j)); }
    TyPtr sub_classifier(const Ctx& g, const Ctx& d) { return arrow(decoded(g), decoded(d)); }
    TyPtr tm_classifier(const Ctx& g, const TyPtr& a) { return pi(decoded(g), el(app(ty(g, a)))); }

    /// Element of El (Γ ▷ A)τ from x : El Γτ and y : El (app Aτ)[x], given as
    /// terms of the current context.
    TmPtr pack(const Ctx& g, const TyPtr& a, TmPtr x, TmPtr y);

private:
    TmPtr ty_(const Ctx& g, const TyPtr& a);
    TmPtr sub_(const Ctx& g, const SubPtr& s);
    TmPtr tm_(const Ctx& g, const TmPtr& t);

    // Results are cached so that repeated pieces (the decoded context above
    // all) are shared rather than rebuilt.
    using Key = std::pair<std::vector<TyPtr>, const void*>;
    std::map<std::vector<TyPtr>, TmPtr> con_cache_;
    std::map<Key, std::pair<TmPtr, std::shared_ptr<const void>>> cache_;
};

/// Checks the input, termifies it and typechecks the result in • at its
/// classifier. Throws KernelError on any failure.
TermifiedEntity termify(const Entity& x);

}  // namespace ttk
