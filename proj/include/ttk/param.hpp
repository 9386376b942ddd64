#pragma once

// Indexed unary parametricity as a translation of the syntax into itself.
//
//   Γ : Con i       ↦  Γᴾ : Ty i Γ
//   A : Ty j Γ      ↦  Aᴾ : Ty j (Γ ▷ Γᴾ ▷ A[p])
//   σ : Sub Γ Δ     ↦  σᴾ : Tm (Γ ▷ Γᴾ) (Δᴾ[σ ∘ p])
//   t : Tm Γ A      ↦  tᴾ : Tm (Γ ▷ Γᴾ) (Aᴾ[id, t[p]])
//
// Only the sorts are fixed in advance; the operator clauses follow the usual
// Bernardy-style translation. Two shapes worth recording:
//
//   Boolᴾ b = El (if (U 0) (c ⊤) (c ⊤) b), the two-constructor predicate
//     encoded by large elimination, so trueᴾ = falseᴾ = tt and ifᴾ is an if
//     on b whose motive abstracts over the witness.
//   (Id A u v)ᴾ e = Id (Aᴾ v) (transport along e of uᴾ) vᴾ, with transport
//     by J; Jᴾ eliminates e and then the witness of e, so it is a J nested
//     in the refl branch of a J.
//
// Clause outputs are checked one by one; a failure names the operator.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ttk/entity.hpp"
#include "ttk/syntax.hpp"

namespace ttk {

class TranslationIllTyped : public std::runtime_error {
public:
    TranslationIllTyped(std::string op, const std::string& detail);
    const std::string& op() const { return op_; }

private:
    std::string op_;
};

struct ParamEntity {
    EntitySort sort = EntitySort::Con;
    /// Context of the payload: Γ for Con, Γ ▷ Γᴾ ▷ A[p] for Ty, Γ ▷ Γᴾ otherwise.
    Ctx ctx;
    TyPtr ty{};  // Con, Ty
    TmPtr tm{};  // Sub, Tm
    /// Level of the payload type (Con, Ty) or the type of the payload term.
    Level level{};
    TyPtr classifier{};
};

class Parametricity {
public:
    TyPtr con(const Ctx& g);
    TyPtr ty(const Ctx& g, const TyPtr& a);
    TmPtr sub(const Ctx& g, const SubPtr& s);
    TmPtr tm(const Ctx& g, const TmPtr& t);

    // Sort classifiers.
    Ctx pred_ctx(const Ctx& g) { return g.extend(con(g)); }
    Ctx ty_ctx(const Ctx& g, const TyPtr& a) { return pred_ctx(g).extend(tysub(a, wk())); }
    TyPtr sub_classifier(const Ctx& d, const SubPtr& s) { return tysub(con(d), comp(s, wk())); }
    TyPtr tm_classifier(const Ctx& g, const TyPtr& a, const TmPtr& t) {
        return tysub(ty(g, a), ext(id_sub(), tysub(a, wk()), tmsub(t, wk())));
    }

private:
    // Helpers over an ambient context with γ : Sub _ Γ and γᴾ : Γᴾ[γ].
    SubPtr csub(const Ctx& g, SubPtr gamma, TmPtr gp);
    SubPtr tri(const Ctx& g, const TyPtr& a, SubPtr gamma, TmPtr gp, TmPtr x);
    TmPtr ctx_pair(const Ctx& g, const TyPtr& a, SubPtr gamma, TmPtr x, TmPtr gp, TmPtr xp);
    TmPtr transport(const Ctx& g, const TyPtr& a, const TmPtr& u, SubPtr gamma, TmPtr gp, TmPtr y);

    TyPtr ty_(const Ctx& g, const TyPtr& a);
    TmPtr sub_(const Ctx& g, const SubPtr& s);
    TmPtr tm_(const Ctx& g, const TmPtr& t);
    TmPtr j_clause(const Ctx& g, const Tm& t);

    using Key = std::pair<std::vector<TyPtr>, const void*>;
    std::map<std::vector<TyPtr>, TyPtr> con_cache_;
    std::map<Key, std::pair<TyPtr, std::shared_ptr<const void>>> ty_cache_;
    std::map<Key, std::pair<TmPtr, std::shared_ptr<const void>>> tm_cache_;
};

/// Checks the input, translates it and checks the output at its classifier.
/// Throws KernelError on ill-typed input and TranslationIllTyped on a bad
/// clause.
ParamEntity param(const Entity& x);

}  // namespace ttk
