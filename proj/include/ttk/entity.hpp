#pragma once

#include "ttk/syntax.hpp"

namespace ttk {

enum class EntitySort { Con, Ty, Sub, Tm };

/// A context, or a type, substitution or term together with the context it
/// lives in. Subject of termify, param and inject.
struct Entity {
    EntitySort sort = EntitySort::Con;
    Ctx ctx;
    TyPtr ty{};
    SubPtr sub{};
    TmPtr tm{};
};

inline Entity con_entity(Ctx g) { return Entity{.sort = EntitySort::Con, .ctx = std::move(g)}; }
inline Entity ty_entity(Ctx g, TyPtr a) { return Entity{.sort = EntitySort::Ty, .ctx = std::move(g), .ty = std::move(a)}; }
inline Entity sub_entity(Ctx g, SubPtr s) {
    return Entity{.sort = EntitySort::Sub, .ctx = std::move(g), .sub = std::move(s)};
}
inline Entity tm_entity(Ctx g, TmPtr t) { return Entity{.sort = EntitySort::Tm, .ctx = std::move(g), .tm = std::move(t)}; }

}  // namespace ttk
