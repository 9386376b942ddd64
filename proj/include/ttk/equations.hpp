#pragma once

// The equation schemas of the object theory, instantiated with generated
// components and checked by conversion, either directly or after
// termification.

#include <array>
#include <string>
#include <string_view>

#include "ttk/entity.hpp"
#include "ttk/generate.hpp"

namespace ttk {

enum class Schema : std::uint8_t {
    // substitution calculus
    Ass, Idl, Idr, TyId, TyComp, TmId, TmComp, EpsEta, ExtBeta1, ExtBeta2, ExtEta, ExtComp,
    // Π
    PiBeta, PiEta, PiSub, LamSub,
    // Σ
    SigmaBeta1, SigmaBeta2, SigmaEta, SigmaSub, PairSub,
    // ⊤
    TopEta, TopSub, TtSub,
    // universes
    UBeta, UEta, USub, ElSub,
    // Bool
    BoolBeta1, BoolBeta2, BoolSub, TrueSub, FalseSub, IfSub,
    // Id
    IdBeta, IdSub, ReflSub, JSub,
};

inline constexpr std::size_t kSchemaCount = 38;

std::string_view schema_name(Schema s);
const std::array<Schema, kSchemaCount>& all_schemas();

/// One instance: lhs ≡ rhs in `ctx`, at a type (Ty: `level`), a codomain
/// (Sub: `cod`) or a type (Tm: `ty`).
struct EqInstance {
    Schema schema = Schema::Ass;
    EntitySort sort = EntitySort::Tm;
    Ctx ctx;
    Ctx cod;
    Level level{};
    TyPtr ty{};
    TyPtr lhs_ty{}, rhs_ty{};
    SubPtr lhs_sub{}, rhs_sub{};
    TmPtr lhs_tm{}, rhs_tm{};

    std::size_t size() const;
    std::string describe() const;
};

EqInstance gen_eq_instance(Generator& g, Schema s);

/// Conversion on the instance itself. Throws KernelError if a side is ill typed.
bool verify_equation(const EqInstance& e);
/// Conversion of the termified sides, closed terms at the termified classifier.
bool verify_termified_equation(const EqInstance& e);
/// Conversion of the parametricity translations of both sides, at the
/// translation of the lhs classifier.
bool verify_param_equation(const EqInstance& e);

}  // namespace ttk
