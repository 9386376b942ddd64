#pragma once

// Definitional equality. Both sides are evaluated in the generic environment
// of the context and read back into βη-long normal form; convertibility is
// syntactic equality of normal forms.

#include <vector>

#include "ttk/syntax.hpp"
#include "ttk/typecheck.hpp"

namespace ttk {

/// Normal form of a well-typed term, at its synthesized type.
TmPtr normalize(const Ctx& ctx, const TmPtr& t);
/// Normal form of a term at a given type (no typechecking).
TmPtr normalize_at(const Scope& scope, const Tm& t, const Ty& ty);
TyPtr normalize_ty(const Ctx& ctx, const TyPtr& a);
TyPtr normalize_ty(const Scope& scope, const Ty& a);
/// Componentwise normal form: one term per entry of the codomain.
std::vector<TmPtr> normalize_sub(const Scope& scope, const Sub& s, const Ctx& cod);

// Checked conversion: both sides are typechecked at the stated classifier
// (KernelError on failure); the result is accept (true) or reject (false).
bool conv_tm(const Ctx& ctx, const TyPtr& ty, const TmPtr& lhs, const TmPtr& rhs);
bool conv_ty(const Ctx& ctx, const TyPtr& lhs, const TyPtr& rhs);
bool conv_sub(const Ctx& ctx, const Ctx& cod, const SubPtr& lhs, const SubPtr& rhs);
/// Entrywise convertibility of two telescopes.
bool conv_ctx(const Ctx& lhs, const Ctx& rhs);

// Unchecked variants; callers guarantee well-typedness.
bool conv_tm_at(const Scope& scope, const Ty& ty, const Tm& lhs, const Tm& rhs);
bool conv_ty_at(const Scope& scope, const Ty& lhs, const Ty& rhs);
bool conv_sub_at(const Scope& scope, const Ctx& cod, const Sub& lhs, const Sub& rhs);

/// Throws KernelError unless t : ty in ctx.
void check_tm(const Ctx& ctx, const TmPtr& t, const TyPtr& ty);
void check_tm(const Scope& scope, const Tm& t, const Ty& ty);
void check_sub(const Ctx& ctx, const SubPtr& s, const Ctx& cod);

}  // namespace ttk
