#pragma once

// Canonicity: a closed Bool term evaluates to a literal, and is convertible
// to it. The evaluator does the work of the logical predicate; only the Bool
// verdict is surfaced.

#include <stdexcept>
#include <string>

#include "ttk/syntax.hpp"

namespace ttk {

struct CanonVerdict {
    bool value = false;
    /// Set once conversion accepts t ≡ the literal for `value`.
    bool certified = false;
};

/// Evaluation produced something other than a literal. Impossible for a
/// well-typed closed term; seeing it means a kernel bug.
class NonCanonical : public std::runtime_error {
public:
    explicit NonCanonical(const std::string& value) : std::runtime_error("non-canonical Bool value " + value) {}
};

class OpenTerm : public std::runtime_error {
public:
    OpenTerm() : std::runtime_error("canonicity needs a term in the empty context") {}
};

/// Throws OpenTerm unless ctx is empty, KernelError unless t : Bool.
CanonVerdict canonicity_verdict(const Ctx& ctx, const TmPtr& t);
inline CanonVerdict canonicity_verdict(const TmPtr& t) { return canonicity_verdict(Ctx{}, t); }

}  // namespace ttk
