#include "ttk/conversion.hpp"

#include "ttk/error.hpp"
#include "ttk/print.hpp"

namespace ttk {

TmPtr normalize_at(const Scope& scope, const Tm& t, const Ty& ty) {
    TyScope types = scope.types;
    return readback(types, eval(scope.env, t), eval(scope.env, ty));
}

TmPtr normalize(const Ctx& ctx, const TmPtr& t) {
    Scope scope = Scope::of(ctx);
    TyPtr ty = synth_tm(scope, *t);
    return normalize_at(scope, *t, *ty);
}

TyPtr normalize_ty(const Scope& scope, const Ty& a) {
    TyScope types = scope.types;
    return readback(types, eval(scope.env, a));
}

TyPtr normalize_ty(const Ctx& ctx, const TyPtr& a) {
    Scope scope = Scope::of(ctx);
    infer_ty(scope, *a);
    return normalize_ty(scope, *a);
}

std::vector<TmPtr> normalize_sub(const Scope& scope, const Sub& s, const Ctx& cod) {
    std::vector<ValPtr> values = env_values(eval(scope.env, s));
    std::vector<TmPtr> out;
    Env prefix;
    TyScope types = scope.types;
    for (std::size_t k = 0; k < cod.size(); ++k) {
        TyValPtr ty = eval(prefix, *cod.entries[k]);
        out.push_back(readback(types, values[k], ty));
        prefix = env_push(prefix, values[k]);
    }
    return out;
}

bool conv_tm_at(const Scope& scope, const Ty& ty, const Tm& lhs, const Tm& rhs) {
    if (&lhs == &rhs) return true;
    TyScope types = scope.types;
    TyValPtr tv = eval(scope.env, ty);
    return equal(*readback(types, eval(scope.env, lhs), tv), *readback(types, eval(scope.env, rhs), tv));
}

bool conv_ty_at(const Scope& scope, const Ty& lhs, const Ty& rhs) {
    if (&lhs == &rhs) return true;
    TyScope types = scope.types;
    return conv_ty(types, eval(scope.env, lhs), eval(scope.env, rhs));
}

bool conv_sub_at(const Scope& scope, const Ctx& cod, const Sub& lhs, const Sub& rhs) {
    std::vector<ValPtr> a = env_values(eval(scope.env, lhs));
    std::vector<ValPtr> b = env_values(eval(scope.env, rhs));
    if (a.size() != cod.size() || b.size() != cod.size()) return false;
    TyScope types = scope.types;
    Env prefix;
    // Earlier components agree whenever we reach entry k, so evaluating the
    // entry type along the left-hand side is valid for both.
    for (std::size_t k = 0; k < cod.size(); ++k) {
        TyValPtr ty = eval(prefix, *cod.entries[k]);
        if (!conv_val(types, a[k], b[k], ty)) return false;
        prefix = env_push(prefix, a[k]);
    }
    return true;
}

void check_tm(const Scope& scope, const Tm& t, const Ty& ty) {
    TyPtr got = synth_tm(scope, t);
    if (!conv_ty_at(scope, *got, ty))
        throw KernelError(ErrorClass::TypeMismatch, "term has type " + print(*normalize_ty(scope, *got)) +
                                                        ", expected " + print(*normalize_ty(scope, ty)));
}

void check_tm(const Ctx& ctx, const TmPtr& t, const TyPtr& ty) {
    Scope scope = Scope::of(ctx);
    infer_ty(scope, *ty);
    check_tm(scope, *t, *ty);
}

bool conv_ctx(const Ctx& lhs, const Ctx& rhs) {
    if (lhs.size() != rhs.size()) return false;
    Scope scope;
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        if (!conv_ty_at(scope, *lhs.entries[k], *rhs.entries[k])) return false;
        scope = scope.extend(lhs.entries[k]);
    }
    return true;
}

void check_sub(const Ctx& ctx, const SubPtr& s, const Ctx& cod) {
    Ctx got = synth_sub(ctx, s);
    if (!conv_ctx(got, cod))
        throw KernelError(ErrorClass::TypeMismatch,
                          "substitution has codomain " + print(got) + ", expected " + print(cod));
}

bool conv_tm(const Ctx& ctx, const TyPtr& ty, const TmPtr& lhs, const TmPtr& rhs) {
    Scope scope = Scope::of(ctx);
    infer_ty(scope, *ty);
    check_tm(scope, *lhs, *ty);
    check_tm(scope, *rhs, *ty);
    return conv_tm_at(scope, *ty, *lhs, *rhs);
}

bool conv_ty(const Ctx& ctx, const TyPtr& lhs, const TyPtr& rhs) {
    Scope scope = Scope::of(ctx);
    Level i = infer_ty(scope, *lhs);
    Level j = infer_ty(scope, *rhs);
    if (i != j) return false;
    return conv_ty_at(scope, *lhs, *rhs);
}

bool conv_sub(const Ctx& ctx, const Ctx& cod, const SubPtr& lhs, const SubPtr& rhs) {
    check_ctx(cod);
    check_sub(ctx, lhs, cod);
    check_sub(ctx, rhs, cod);
    return conv_sub_at(Scope::of(ctx), cod, *lhs, *rhs);
}

}  // namespace ttk
