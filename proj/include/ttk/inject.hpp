#pragma once

// Injectivity of termification, checked instance by instance. Every context Γ
// is isomorphic to • ▷ El Γτ, and every type, substitution and term is
// recovered from its termification by substituting along that isomorphism:
//
//   A ≡ El (app Aτ) [Γ₁]
//   σ ≡ Δ₂ ∘ (ε, app στ) ∘ Γ₁
//   t ≡ (app tτ) [Γ₁]
//
// Hence equal termifications force equal inputs; the probe looks for pairs
// where that fails.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttk/entity.hpp"
#include "ttk/syntax.hpp"
#include "ttk/termify.hpp"

namespace ttk {

struct CtxIso {
    SubPtr fwd{};  // Γ → • ▷ El Γτ
    SubPtr bwd{};  // • ▷ El Γτ → Γ
    bool fwd_bwd_ok = false;
    bool bwd_fwd_ok = false;
};

class IsoFailure : public std::runtime_error {
public:
    IsoFailure(Ctx ctx, std::string composite);
    const Ctx& ctx() const { return ctx_; }
    const std::string& composite() const { return composite_; }

private:
    Ctx ctx_;
    std::string composite_;
};

struct EmbedResult {
    bool accept = false;
    // Normal forms of both sides, filled on reject.
    std::string lhs_nf, rhs_nf;
};

struct ProbeResult {
    bool termified_equal = false;
    bool equal = false;
    bool counterexample() const { return termified_equal && !equal; }
};

class Injector {
public:
    /// Builds the isomorphism for every prefix and verifies both composites
    /// by conversion. Throws IsoFailure if either is rejected.
    const CtxIso& ctx_iso(const Ctx& g);
    /// Ty, Sub or Tm entity; the classifier is synthesized. For Con the
    /// isomorphism is built instead.
    EmbedResult check_embedding(const Entity& x);
    /// x and y must have the same sort, context and classifier.
    ProbeResult probe(const Entity& x, const Entity& y);

    Termifier& termifier() { return tf_; }

private:
    Termifier tf_;
    std::map<std::vector<TyPtr>, CtxIso> isos_;
};

CtxIso build_ctx_iso(const Ctx& g);
EmbedResult check_embedding(const Entity& x);

struct NamedCase {
    std::string name;
    Entity entity;
};

/// One small input per operator, headed by that operator.
const std::vector<NamedCase>& operator_cases();

}  // namespace ttk
