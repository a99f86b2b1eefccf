#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccbox/classify.hpp"
#include "ccbox/driver.hpp"
#include "ccbox/env.hpp"
#include "ccbox/printer.hpp"
#include "ccbox/subtyping.hpp"
#include "ccbox/testkit/properties.hpp"

namespace py = pybind11;

namespace {

ccbox::Term parseOrThrow(const std::string& text) {
    ccbox::ParseResult r = ccbox::parse(text);
    if (!r.ok()) {
        throw py::value_error(ccbox::formatDiagnostic(r.diagnostics.front()));
    }
    return r.program->parsed;
}

ccbox::Type parseTypeOrThrow(const std::string& text) {
    ccbox::ParseTypeResult r = ccbox::parseType(text);
    if (!r.ok()) {
        throw py::value_error(ccbox::formatDiagnostic(r.diagnostics.front()));
    }
    return *r.type;
}

py::dict diagnosticToDict(const ccbox::Diagnostic& d) {
    py::dict out;
    out["severity"] = d.severity == ccbox::Severity::Error ? "error" : "warning";
    out["code"] = d.code;
    out["message"] = d.message;
    out["line"] = d.span.line;
    out["col"] = d.span.col;
    return out;
}

py::dict check(const std::string& text) {
    ccbox::CheckOutcome outcome = ccbox::checkSource(text);
    py::dict out;
    out["exit_code"] = outcome.exitCode;
    out["ok"] = outcome.exitCode == 0;
    py::list diags;
    for (const ccbox::Diagnostic& d : outcome.diagnostics) diags.append(diagnosticToDict(d));
    out["diagnostics"] = diags;
    if (outcome.programType.has_value()) {
        out["type"] = ccbox::prettyPrint(*outcome.programType);
    } else {
        out["type"] = py::none();
    }
    return out;
}

std::string inferTypeStr(const std::string& text) {
    ccbox::CheckOutcome outcome = ccbox::checkSource(text);
    if (outcome.exitCode != 0) {
        std::string msg = outcome.diagnostics.empty()
                              ? "type error"
                              : ccbox::formatDiagnostic(outcome.diagnostics.front());
        throw py::value_error(msg);
    }
    return ccbox::prettyPrint(*outcome.programType);
}

py::dict evalProgram(const std::string& text, std::size_t fuel, bool trace) {
    ccbox::EvalOutcome outcome = ccbox::evalSource(text, fuel, trace);
    if (outcome.exitCode == 2) {
        std::string msg = outcome.diagnostics.empty()
                              ? "parse error"
                              : ccbox::formatDiagnostic(outcome.diagnostics.front());
        throw py::value_error(msg);
    }
    const ccbox::RunOutcome& r = *outcome.run;
    py::dict out;
    switch (r.status) {
        case ccbox::RunOutcome::Status::Answer: out["status"] = "answer"; break;
        case ccbox::RunOutcome::Status::OutOfFuel: out["status"] = "out_of_fuel"; break;
        case ccbox::RunOutcome::Status::Stuck: out["status"] = "stuck"; break;
    }
    out["steps"] = r.steps;
    py::list rules;
    for (ccbox::StepRule rule : r.rules) rules.append(std::string(stepRuleName(rule)));
    out["rules"] = rules;
    out["summary"] = outcome.summary;
    if (r.answer.has_value()) {
        out["answer"] = ccbox::prettyPrint(*r.answer);
    } else {
        out["answer"] = py::none();
    }
    if (r.answerValue.has_value()) {
        out["answer_value"] = ccbox::prettyPrint(*r.answerValue);
    } else {
        out["answer_value"] = py::none();
    }
    out["trace"] = outcome.traceLines;
    if (r.status == ccbox::RunOutcome::Status::Stuck) out["reason"] = r.stuckReason;
    return out;
}

py::dict fuzz(std::uint64_t seed, std::uint32_t count) {
    ccbox::testkit::GenConfig cfg;
    cfg.seed = seed;
    cfg.count = count;
    ccbox::testkit::PropertyReport report = ccbox::testkit::runPropertySuite(cfg);
    py::dict out;
    out["passed"] = report.allPassed();
    out["report"] = report.render();
    py::list entries;
    for (const auto& e : report.entries) {
        py::dict entry;
        entry["property"] = e.property;
        entry["cases"] = e.cases;
        entry["failures"] = e.failures;
        entries.append(entry);
    }
    out["entries"] = entries;
    return out;
}

}  // namespace

PYBIND11_MODULE(_ccbox, m) {
    m.doc() = "Box-calculus capture checker: parser, type checker, abstract machine";

    m.def("pretty", [](const std::string& text) { return prettyPrint(parseOrThrow(text)); },
          py::arg("text"), "Parse a program and pretty-print it back");
    m.def("check", &check, py::arg("text"),
          "Type-check a program; returns exit_code, diagnostics and the type");
    m.def("infer_type", &inferTypeStr, py::arg("text"),
          "Inferred type of a program, raising ValueError on any failure");
    m.def("eval_program", &evalProgram, py::arg("text"), py::arg("fuel") = 10000,
          py::arg("trace") = false, "Run a program on the abstract machine");
    m.def("check_pure",
          [](const std::string& text) { return ccbox::checkPure(parseTypeOrThrow(text)); },
          py::arg("text"), "The pure judgment on a closed type expression");
    m.def("check_type",
          [](const std::string& text) { return ccbox::checkType(parseTypeOrThrow(text)); },
          py::arg("text"), "The type judgment on a closed type expression");
    m.def("subtype",
          [](const std::string& t1, const std::string& t2) {
              return ccbox::subtype(ccbox::Env{}, parseTypeOrThrow(t1), parseTypeOrThrow(t2));
          },
          py::arg("t1"), py::arg("t2"), "Subtyping between closed type expressions");
    m.def("fuzz", &fuzz, py::arg("seed") = 0, py::arg("count") = 100,
          "Run the property suites; returns a report dict");

    m.attr("__version__") = "0.1.0";
}
