#pragma once

// Seeded, type-directed generation of well-typed syntax. Goals are inspected
// semantically (evaluated in the generic environment), candidate constructors
// are tried in weighted random order and failed branches are abandoned, within
// a per-call fuel budget.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

#include "ttk/syntax.hpp"
#include "ttk/typecheck.hpp"

namespace ttk {

struct GenConfig {
    std::uint64_t seed = 1;
    unsigned max_nodes = 12;
    unsigned max_level = 2;
    unsigned max_ctx_len = 4;
    /// Goal attempts allowed per public call before giving up.
    unsigned fuel = 600;
    /// Fresh attempts per public call; each gets its own fuel.
    unsigned retries = 8;
    /// Relative weight of eliminator redexes (app, if, J, fst/snd) against
    /// introduction forms and variables, which have weight 4.
    unsigned elim_weight = 3;
};

class GenExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Generator {
public:
    explicit Generator(GenConfig cfg);

    Ctx ctx();
    /// A type over g of level exactly j.
    TyPtr ty(const Ctx& g, Level j);
    /// A type over g of some level up to max_level.
    TyPtr ty(const Ctx& g);
    /// A substitution out of g and its codomain.
    std::pair<SubPtr, Ctx> sub(const Ctx& g);
    SubPtr sub_into(const Ctx& g, const Ctx& d);
    TmPtr tm(const Ctx& g, const TyPtr& a);
    /// A term over g together with a type it has.
    std::pair<TmPtr, TyPtr> tm_any(const Ctx& g);

    const GenConfig& config() const { return cfg_; }
    const Coverage& coverage() const { return coverage_; }
    std::mt19937_64& rng() { return rng_; }
    unsigned below(unsigned n) { return n == 0 ? 0 : static_cast<unsigned>(rng_() % n); }
    bool chance(unsigned percent) { return below(100) < percent; }
    Level random_level() { return Level{below(cfg_.max_level + 1)}; }

private:
    friend class GenImpl;

    void refuel() { fuel_ = cfg_.fuel; }

    GenConfig cfg_;
    std::mt19937_64 rng_;
    unsigned fuel_ = 0;
    Coverage coverage_;
};

}  // namespace ttk
