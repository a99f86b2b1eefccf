#include "ccbox/driver.hpp"

#include <fstream>
#include <sstream>

#include "ccbox/printer.hpp"

namespace ccbox {

CheckOutcome checkSource(std::string_view text) {
    CheckOutcome out;
    ParseResult parsed = parse(text);
    out.diagnostics = parsed.diagnostics;
    if (!parsed.ok()) {
        out.exitCode = 2;
        return out;
    }
    TypingResult r = inferType(Env{}, parsed.program->parsed);
    if (!r.ok()) {
        const TypingError& err = *r.error;
        Diagnostic d;
        d.severity = Severity::Error;
        d.span = parsed.program->spanAt(err.path);
        d.code = diagnosticCode(err.kind);
        d.message = err.detail;
        out.diagnostics.push_back(std::move(d));
        out.exitCode = 1;
        return out;
    }
    out.programType = r.type;
    out.exitCode = 0;
    return out;
}

EvalOutcome evalSource(std::string_view text, std::size_t fuel, bool trace) {
    EvalOutcome out;
    ParseResult parsed = parse(text);
    out.diagnostics = parsed.diagnostics;
    if (!parsed.ok()) {
        out.exitCode = 2;
        return out;
    }
    RunOutcome r = run(parsed.program->parsed, fuel, trace);
    if (trace && r.trace.has_value()) {
        std::size_t n = 0;
        for (const TraceEntry& entry : *r.trace) {
            std::ostringstream line;
            line << "step " << ++n << " [" << stepRuleName(entry.rule) << "] "
                 << printState(entry.state);
            out.traceLines.push_back(line.str());
        }
    }
    std::ostringstream summary;
    switch (r.status) {
        case RunOutcome::Status::Answer: {
            summary << "answer: " << prettyPrint(*r.answer);
            if (r.answer->is<VarTerm>() && r.answerValue.has_value()) {
                summary << " = " << prettyPrint(*r.answerValue);
            }
            summary << " (" << r.steps << " steps)";
            out.exitCode = 0;
            break;
        }
        case RunOutcome::Status::OutOfFuel:
            summary << "out of fuel after " << r.steps << " steps";
            out.exitCode = 1;
            break;
        case RunOutcome::Status::Stuck:
            summary << "stuck after " << r.steps << " steps: " << r.stuckReason;
            out.exitCode = 1;
            break;
    }
    out.summary = summary.str();
    out.run = std::move(r);
    return out;
}

std::optional<std::string> readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace ccbox
