#pragma once

#include <cstdint>
#include <functional>

#include "ccbox/capture_set.hpp"
#include "ccbox/env.hpp"
#include "ccbox/machine.hpp"
#include "ccbox/term.hpp"

namespace ccbox::testkit {

// Literal derivation search over the declarative subcapturing rules:
// {*} as top, element membership, and SC-VAR expansion of a variable into
// its declared capture set, decomposed per SC-SET. Depth-bounded; the
// brute-force oracle for the algorithmic procedure.
bool declarativeSubcapture(const Env& g, const CaptureSet& c1, const CaptureSet& c2,
                           std::uint32_t maxDepth);

// Exhaustive small-domain comparison harness. Enumerates environments of
// at most `maxBindings` term bindings over `atomCount` atoms (capture sets
// drawn from earlier atoms plus {*}) and all capture-set pairs over the
// domain, and counts disagreements between `algo` and the declarative
// search. Parameterized so deliberately broken algorithms are detectable.
struct EquivalenceStats {
    std::size_t cases = 0;
    std::size_t disagreements = 0;
};
EquivalenceStats compareSubcaptureOnSmallDomain(
    const std::function<bool(const Env&, const CaptureSet&, const CaptureSet&)>& algo,
    std::uint32_t maxBindings, std::uint32_t atomCount);

// First-occurrence canonical renaming; structural equality afterwards is
// α-equivalence including store layout.
Term canonicalizeTerm(const Term& e);
bool alphaEquivalentAnswers(const Store& store1, const Term& answer1,
                            const Store& store2, const Term& answer2);

}  // namespace ccbox::testkit
