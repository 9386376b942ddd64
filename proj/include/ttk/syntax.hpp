#pragma once

// Raw syntax of the object theory: a category with families with explicit
// substitutions, extended with Pi, Sigma, Unit, a universe hierarchy, Bool
// and identity types. Variables are nameless: q is the last context entry
// and p drops it.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

namespace ttk {

/// Universe level. Levels are plain naturals combined with max and +1.
struct Level {
    std::uint32_t value = 0;

    constexpr Level succ() const { return Level{value + 1}; }
    friend constexpr auto operator<=>(Level, Level) = default;
};

constexpr Level lub(Level a, Level b) { return a.value < b.value ? b : a; }

struct Ty;
struct Tm;
struct Sub;
using TyPtr = std::shared_ptr<const Ty>;
using TmPtr = std::shared_ptr<const Tm>;
using SubPtr = std::shared_ptr<const Sub>;

enum class SubKind : std::uint8_t { Id, Comp, Eps, Ext, P };

enum class TyKind : std::uint8_t { Sub, Pi, Sigma, Top, U, El, Bool, Id };

enum class TmKind : std::uint8_t {
    Sub, Q, Lam, App, Pair, Fst, Snd, Tt, Code, True, False, If, Refl, J
};

// Field usage per kind:
//   Comp(f, g)      f ∘ g
//   Ext(f, ty, tm)  (f, tm) where ty is the codomain-side type being added
struct Sub {
    SubKind kind;
    SubPtr f{}, g{};
    TyPtr ty{};
    TmPtr tm{};
};

// Field usage per kind:
//   Sub(a, sub)   a[sub]
//   Pi/Sigma(a, b) with b over the context extended by a
//   U(level)
//   El(t)
//   Id(a, t, u)
struct Ty {
    TyKind kind;
    TyPtr a{}, b{};
    SubPtr sub{};
    TmPtr t{}, u{};
    Level level{};
};

// Field usage per kind:
//   Sub(t, sub)          t[sub]
//   Lam(a, t)            a is the domain annotation
//   App(t)
//   Pair(a, b, t, u)     a, b annotate the Sigma being introduced
//   Fst(t), Snd(t), Refl(t)
//   Code(a)
//   If(a, t, u, v)       motive a over Γ ▷ Bool; branches t (true), u (false); scrutinee v
//   J(a, t, u)           motive a; t the refl case; u the equality proof
struct Tm {
    TmKind kind;
    TyPtr a{}, b{};
    TmPtr t{}, u{}, v{};
    SubPtr sub{};
};

/// A context is a telescope; entry k is a type over the first k entries.
struct Ctx {
    std::vector<TyPtr> entries;

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
    Ctx extend(TyPtr a) const;
    Ctx prefix(std::size_t n) const;
    const TyPtr& last() const { return entries.back(); }
};

// Substitutions
SubPtr id_sub();
SubPtr comp(SubPtr f, SubPtr g);
SubPtr eps();
SubPtr ext(SubPtr f, TyPtr a, TmPtr t);
SubPtr wk();  // p

// Types
TyPtr tysub(TyPtr a, SubPtr s);
TyPtr pi(TyPtr a, TyPtr b);
TyPtr sigma(TyPtr a, TyPtr b);
TyPtr top();
TyPtr univ(Level i);
TyPtr el(TmPtr t);
TyPtr boolty();
TyPtr idty(TyPtr a, TmPtr u, TmPtr v);

// Terms
TmPtr tmsub(TmPtr t, SubPtr s);
TmPtr var0();  // q
TmPtr lam(TyPtr a, TmPtr body);
TmPtr app(TmPtr t);
TmPtr pair(TyPtr a, TyPtr b, TmPtr u, TmPtr v);
TmPtr fst(TmPtr t);
TmPtr snd(TmPtr t);
TmPtr tt();
TmPtr code(TyPtr a);
TmPtr truelit();
TmPtr falselit();
TmPtr ite(TyPtr motive, TmPtr on_true, TmPtr on_false, TmPtr scrutinee);
TmPtr refl(TmPtr u);
TmPtr jelim(TyPtr motive, TmPtr on_refl, TmPtr eq);

// Derived forms. These are abbreviations, not new constructors.

/// p composed n times, right nested: p, p ∘ p, p ∘ (p ∘ p), ... ; wk_n(0) is id.
SubPtr wk_n(unsigned n);
/// De Bruijn index n as q[pⁿ].
TmPtr var(unsigned n);
/// σ↑ = (σ ∘ p, q). `a` is the type being lifted over, on the codomain side.
SubPtr lift(SubPtr s, TyPtr a);
/// t $ u = (app t)[id, u]; `dom` is the domain of t's Pi type.
TmPtr apply1(TmPtr t, TyPtr dom, TmPtr u);
/// A ⇒ B = Π A (B[p]).
TyPtr arrow(TyPtr a, TyPtr b);

/// If t is q[pⁿ] in canonical form, returns n; otherwise -1.
int var_index(const Tm& t);
/// If s is pⁿ (n ≥ 1) in canonical right-nested form, returns n; otherwise -1.
int wk_depth(const Sub& s);

bool equal(const Ty& x, const Ty& y);
bool equal(const Tm& x, const Tm& y);
bool equal(const Sub& x, const Sub& y);
bool equal(const Ctx& x, const Ctx& y);

std::size_t node_count(const Ty& a);
std::size_t node_count(const Tm& t);
std::size_t node_count(const Sub& s);

/// The 29 operators: 5 substitution formers, 2 context formers, 8 type
/// formers and 14 term formers.
enum class Op : std::uint8_t {
    Id, Comp, Eps, Ext, P,
    Empty, Extend,
    TySub, Pi, Sigma, Top, U, El, Bool, IdTy,
    TmSub, Q, Lam, App, Pair, Fst, Snd, Tt, Code, True, False, If, Refl, J,
};
inline constexpr std::size_t kOpCount = 29;

std::string_view op_name(Op op);

/// Per-operator occurrence counter.
struct Coverage {
    std::array<std::uint64_t, kOpCount> counts{};

    void add(const Ctx& g);
    void add(const Ty& a);
    void add(const Tm& t);
    void add(const Sub& s);
    void merge(const Coverage& other);
    std::vector<Op> missing() const;
};

}  // namespace ttk
