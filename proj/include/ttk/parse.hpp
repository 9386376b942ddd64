#pragma once

// Reader for the s-expression surface syntax. Every keyword belongs to exactly
// one sort, so a node's sort is determined by its head.

#include <string>
#include <string_view>
#include <vector>

#include "ttk/entity.hpp"
#include "ttk/syntax.hpp"

namespace ttk {

struct SExpr {
    bool atom = false;
    std::string text;  // atoms only
    std::vector<SExpr> items;
    int line = 1, col = 1;
};

/// Reads every top-level s-expression; `;` comments run to end of line.
std::vector<SExpr> read_sexprs(std::string_view src);

TyPtr to_ty(const SExpr& e);
TmPtr to_tm(const SExpr& e);
SubPtr to_sub(const SExpr& e);
Ctx to_ctx(const SExpr& e);

TyPtr parse_ty(std::string_view src);
TmPtr parse_tm(std::string_view src);
SubPtr parse_sub(std::string_view src);
Ctx parse_ctx(std::string_view src);

enum class DirectiveKind { CheckTm, CheckTy, Nf, ConvTm, ConvTy, ConvSub, Termify, Param, Canon, Inject };

struct Directive {
    DirectiveKind kind = DirectiveKind::CheckTm;
    Ctx ctx, cod;
    TyPtr ty{}, ty2{};
    TmPtr tm{}, tm2{};
    SubPtr sub{}, sub2{};
    Entity entity;
};

Entity to_entity(const SExpr& e);
Directive to_directive(const SExpr& e);
/// Exactly one directive per input.
Directive parse_directive(std::string_view src);

}  // namespace ttk
