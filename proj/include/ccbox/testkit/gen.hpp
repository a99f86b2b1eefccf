#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ccbox/atom.hpp"
#include "ccbox/env.hpp"
#include "ccbox/term.hpp"
#include "ccbox/testkit/choice.hpp"
#include "ccbox/type.hpp"

namespace ccbox::testkit {

struct GenConfig {
    std::uint64_t seed = 0;
    std::uint32_t maxEnvDepth = 4;
    std::uint32_t maxTypeDepth = 4;
    std::uint32_t maxTermDepth = 6;
    std::uint32_t count = 500;
};

// Tallies of which construction rule produced each node, for the
// distribution checks.
using RuleCounter = std::map<std::string, std::size_t>;

// Rule-directed well-formed type generation: result satisfies wfType(g, ·).
Type genWfType(ChoiceStream& cs, const Env& g, AtomSupply& fresh,
               std::uint32_t maxDepth, RuleCounter* counter = nullptr);

// Pure variant (never a capture set at the root).
Type genWfPure(ChoiceStream& cs, const Env& g, AtomSupply& fresh,
               std::uint32_t maxDepth, RuleCounter* counter = nullptr);

// Random well-formed environment (telescope of term and type bindings).
Env genWfEnv(ChoiceStream& cs, AtomSupply& fresh, std::uint32_t maxBindings,
             std::uint32_t maxTypeDepth);

// Type-directed program generation: a closed let telescope of values and
// eliminations over earlier bindings, ending in a closed value, so that
// inferType({}, result) always succeeds.
Term genWellTypedProgram(ChoiceStream& cs, const GenConfig& cfg);

// A supertype of t derivable by capture widening, Top replacement, bound
// widening and the contravariant moves; subtype(g, t, result) holds.
Type mutateSupertype(ChoiceStream& cs, const Env& g, AtomSupply& fresh, const Type& t);

// Dually, subtype(g, result, t) holds.
Type mutateSubtype(ChoiceStream& cs, const Env& g, AtomSupply& fresh, const Type& t);

}  // namespace ccbox::testkit
