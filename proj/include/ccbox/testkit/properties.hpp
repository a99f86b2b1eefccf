#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccbox/machine.hpp"
#include "ccbox/testkit/gen.hpp"

namespace ccbox::testkit {

struct Counterexample {
    std::string property;
    std::string rendering;  // program text or (env, types) description
    std::optional<std::string> trace;
    bool shrunk = false;
    std::vector<std::uint64_t> choices;  // replayable choice sequence
};

struct PropertyEntry {
    std::string property;
    std::size_t cases = 0;
    std::size_t failures = 0;
};

struct PropertyReport {
    std::vector<PropertyEntry> entries;
    std::vector<Counterexample> counterexamples;
    std::map<std::string, std::size_t> machineRuleCounts;

    bool allPassed() const;
    std::string render() const;
};

// Runs the whole property battery: purity stability, open/close
// round-trips, weakening, subcapture oracle equivalence, subtype
// reflexivity/transitivity, parse/print round-trips, preservation,
// progress and determinism up to renaming. Failures are data; the first
// failing case per property is shrunk by choice-sequence reduction.
PropertyReport runPropertySuite(const GenConfig& cfg);

// Single-program checks shared by the property suite and the acceptance
// harness. Returns an error description on violation.
std::optional<std::string> checkPreservation(const Term& program, std::size_t fuel,
                                             std::vector<StepRule>* firedRules = nullptr);
std::optional<std::string> checkProgress(const Term& program, std::size_t fuel);
std::optional<std::string> checkDeterminism(const Term& program, std::size_t fuel);

// Greedy reduction of a recorded choice sequence. `fails` replays a case
// from a stream and reports whether it still exhibits the failure; the
// returned sequence is guaranteed to still fail.
std::vector<std::uint64_t> shrinkChoiceSequence(
    const std::function<bool(ChoiceStream&)>& fails, std::vector<std::uint64_t> start,
    int budget = 200);

}  // namespace ccbox::testkit
