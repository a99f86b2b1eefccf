#pragma once

#include "ccbox/atom.hpp"
#include "ccbox/capture_set.hpp"
#include "ccbox/term.hpp"
#include "ccbox/type.hpp"

namespace ccbox {

// The `pure` judgment: true for type variables, Top, boxes of types, and
// function/polymorphic types whose components classify; false whenever a
// capture set sits at the root. Cofinite binder premises are decided by
// opening with one fresh atom.
bool checkPure(const Type& t);

// The `type` judgment: a capturing type with a locally closed capture set
// over a pure type, or any pure type (the injection).
bool checkType(const Type& t);

// Answers of the machine: term and type abstractions, and boxed variables.
bool isValue(const Term& e);

// Free atoms of either kind, including atoms inside capture sets.
AtomSet freeAtoms(const Type& t);
AtomSet freeAtoms(const Term& e);
AtomSet freeAtoms(const CaptureSet& c);

}  // namespace ccbox
