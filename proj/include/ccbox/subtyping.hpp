#pragma once

#include "ccbox/capture_set.hpp"
#include "ccbox/env.hpp"
#include "ccbox/type.hpp"

namespace ccbox {

// Γ ⊢ c1 <:C c2. Membership, per-variable expansion through the
// environment (SC-VAR), and {*} as top. {*} on the left succeeds only
// against {*} on the right.
bool subcapture(const Env& g, const CaptureSet& c1, const CaptureSet& c2);

// Γ ⊢ t1 <: t2, algorithmic. Pure types compare as if carrying an empty
// capture set; the only built-in transitivity is widening a left type
// variable to its declared bound.
bool subtype(const Env& g, const Type& t1, const Type& t2);

// View of a type as capture set + pure part ({} for bare pure types).
struct SplitType {
    CaptureSet captures;
    Type pure;
};
SplitType splitCapturing(const Type& t);

// Chase type variables through their declared bounds until a structural
// head appears. Returns nothing if an unbound variable is hit.
std::optional<Type> exposePure(const Env& g, Type r);

}  // namespace ccbox
