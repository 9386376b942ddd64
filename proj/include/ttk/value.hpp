#pragma once

// Semantic domain for normalization by evaluation. Evaluation interprets
// contexts as environments, substitutions as environment transformers and
// types/terms as functions of an environment.

#include <memory>
#include <utility>
#include <vector>

#include "ttk/syntax.hpp"

namespace ttk {

struct Val;
struct TyVal;
struct Neutral;
struct EnvNode;
using ValPtr = std::shared_ptr<const Val>;
using TyValPtr = std::shared_ptr<const TyVal>;
using NePtr = std::shared_ptr<const Neutral>;

/// Persistent snoc-list of values; the head is the last context entry (q).
using Env = std::shared_ptr<const EnvNode>;

struct EnvNode {
    ValPtr head{};
    Env tail{};
    std::size_t length;
};

Env env_push(Env env, ValPtr v);
std::size_t env_length(const Env& env);
/// Entries in context order (first entry first).
std::vector<ValPtr> env_values(const Env& env);

struct Closure {
    Env env{};
    TmPtr body{};
};

struct TyClosure {
    Env env{};
    TyPtr body{};
};

enum class ValKind : std::uint8_t { Lam, Pair, Tt, True, False, Refl, Code, Ne };

struct Val {
    ValKind kind;
    Closure lam{};             // Lam
    ValPtr first{}, second{};  // Pair; Refl uses first
    TyValPtr code{};           // Code
    NePtr ne{};                // Ne
};

enum class TyValKind : std::uint8_t { Pi, Sigma, Top, Bool, U, Id, ElNe };

struct TyVal {
    TyValKind kind;
    TyValPtr dom{};       // Pi, Sigma; Id carrier
    TyClosure cod{};      // Pi, Sigma
    Level level{};        // U
    ValPtr lhs{}, rhs{};  // Id
    NePtr ne{};           // ElNe
};

enum class NeKind : std::uint8_t { Var, App, Fst, Snd, If, J };

// Stuck eliminations. Variables are de Bruijn levels (absolute depth).
//   App(head, arg)
//   If(motive over one extra variable, on_true, on_false, head)
//   J(motive over two extra variables, on_refl, head)
struct Neutral {
    NeKind kind;
    std::size_t level = 0;
    NePtr head{};
    ValPtr arg{}, arg2{};
    TyClosure motive{};
};

ValPtr vne(NePtr n);
ValPtr vtrue();
ValPtr vfalse();
ValPtr vtt();
ValPtr vrefl(ValPtr u);
ValPtr vpair(ValPtr a, ValPtr b);
ValPtr vcode(TyValPtr a);
NePtr nvar(std::size_t level);
ValPtr fresh(std::size_t level);

TyValPtr vbool();
TyValPtr vtop();
TyValPtr vuniv(Level i);
TyValPtr vid(TyValPtr a, ValPtr u, ValPtr v);

// Evaluation. Each clause is the standard-model reading of the operator.
ValPtr eval(const Env& env, const Tm& t);
TyValPtr eval(const Env& env, const Ty& a);
Env eval(const Env& env, const Sub& s);

ValPtr vapply(const ValPtr& f, ValPtr arg);
ValPtr vfst(const ValPtr& v);
ValPtr vsnd(const ValPtr& v);
TyValPtr instantiate(const TyClosure& c, ValPtr arg);
TyValPtr instantiate(const TyClosure& c, ValPtr arg1, ValPtr arg2);
/// El on values; collapses El (c A) to A.
TyValPtr vel(const ValPtr& v);
/// c on type values; collapses c (El a) to a.
ValPtr vcode_of(TyValPtr a);

/// Types of the variables in scope, indexed by de Bruijn level.
using TyScope = std::vector<TyValPtr>;

// Type-directed readback into βη-long normal forms. `types.size()` is the
// current depth.
TmPtr readback(TyScope& types, const ValPtr& v, const TyValPtr& ty);
TyPtr readback(TyScope& types, const TyValPtr& ty);
/// Reads back a neutral and reports its type.
std::pair<TmPtr, TyValPtr> readback_ne(TyScope& types, const Neutral& n);

/// Semantic equality via normal forms.
bool conv_val(TyScope& types, const ValPtr& a, const ValPtr& b, const TyValPtr& ty);
bool conv_ty(TyScope& types, const TyValPtr& a, const TyValPtr& b);

}  // namespace ttk
