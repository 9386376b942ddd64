#pragma once

#include "ttk/syntax.hpp"
#include "ttk/value.hpp"

namespace ttk {

/// A context together with its generic environment (one fresh variable per
/// entry) and the evaluated entry types.
struct Scope {
    Ctx ctx;
    Env env;
    TyScope types;

    /// Assumes every entry is well formed in its prefix.
    static Scope of(const Ctx& ctx);
    Scope extend(TyPtr a) const;
    std::size_t depth() const { return types.size(); }
};

// Typing rules. All functions assume the context is well formed (check it
// with check_ctx first) and throw KernelError on failure.

Level check_ctx(const Ctx& ctx);
Level infer_ty(const Ctx& ctx, const TyPtr& a);
Ctx synth_sub(const Ctx& ctx, const SubPtr& s);
TyPtr synth_tm(const Ctx& ctx, const TmPtr& t);

Level infer_ty(const Scope& scope, const Ty& a);
Ctx synth_sub(const Scope& scope, const Sub& s);
TyPtr synth_tm(const Scope& scope, const Tm& t);

}  // namespace ttk
