#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccbox/machine.hpp"
#include "ccbox/parser.hpp"

namespace ccbox {

// Shared front door for the CLI and the language bindings.

struct CheckOutcome {
    // 0 = well-typed, 1 = type error, 2 = parse error.
    int exitCode = 0;
    std::vector<Diagnostic> diagnostics;
    std::optional<Type> programType;
};

CheckOutcome checkSource(std::string_view text);

struct EvalOutcome {
    int exitCode = 0;  // 0 answer, 1 stuck/out-of-fuel, 2 parse error
    std::vector<Diagnostic> diagnostics;
    std::optional<RunOutcome> run;
    std::vector<std::string> traceLines;  // "step N [RULE] ⟨…⟩"
    std::string summary;
};

EvalOutcome evalSource(std::string_view text, std::size_t fuel, bool trace);

std::optional<std::string> readFile(const std::string& path);

}  // namespace ccbox
