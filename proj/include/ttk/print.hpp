#pragma once

#include <string>

#include "ttk/syntax.hpp"

namespace ttk {

// Canonical s-expression rendering: lowercase keywords, single spaces, fully
// parenthesized, with q[pⁿ] spines shown as (v n).

std::string print(const Ty& a);
std::string print(const Tm& t);
std::string print(const Sub& s);
std::string print(const Ctx& g);

}  // namespace ttk
