#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ccbox/driver.hpp"
#include "ccbox/printer.hpp"
#include "ccbox/testkit/properties.hpp"

namespace {

int runCheck(const std::string& path, bool printType) {
    std::optional<std::string> text = ccbox::readFile(path);
    if (!text.has_value()) {
        std::cerr << "error: cannot read " << path << "\n";
        return 2;
    }
    ccbox::CheckOutcome outcome = ccbox::checkSource(*text);
    for (const ccbox::Diagnostic& d : outcome.diagnostics) {
        std::cerr << path << ":" << ccbox::formatDiagnostic(d) << "\n";
    }
    if (outcome.exitCode == 0) {
        if (printType) {
            std::cout << ccbox::prettyPrint(*outcome.programType) << "\n";
        } else {
            std::cout << path << ": ok: " << ccbox::prettyPrint(*outcome.programType)
                      << "\n";
        }
    }
    return outcome.exitCode;
}

int runEval(const std::string& path, std::size_t fuel, bool trace) {
    std::optional<std::string> text = ccbox::readFile(path);
    if (!text.has_value()) {
        std::cerr << "error: cannot read " << path << "\n";
        return 2;
    }
    ccbox::EvalOutcome outcome = ccbox::evalSource(*text, fuel, trace);
    for (const ccbox::Diagnostic& d : outcome.diagnostics) {
        std::cerr << path << ":" << ccbox::formatDiagnostic(d) << "\n";
    }
    for (const std::string& line : outcome.traceLines) {
        std::cout << line << "\n";
    }
    if (!outcome.summary.empty()) std::cout << outcome.summary << "\n";
    return outcome.exitCode;
}

int runFuzz(std::uint64_t seed, std::uint32_t count) {
    ccbox::testkit::GenConfig cfg;
    cfg.seed = seed;
    cfg.count = count;
    ccbox::testkit::PropertyReport report = ccbox::testkit::runPropertySuite(cfg);
    std::cout << report.render();

    if (!report.counterexamples.empty()) {
        std::filesystem::create_directories("fuzz-failures");
        std::size_t n = 0;
        for (const ccbox::testkit::Counterexample& ce : report.counterexamples) {
            std::string name = "fuzz-failures/" + ce.property + "-" + std::to_string(n++) +
                               ".ccbox";
            std::ofstream out(name);
            out << "-- property: " << ce.property << " seed: " << seed
                << (ce.shrunk ? " (shrunk)" : "") << " choices:";
            for (std::uint64_t c : ce.choices) out << " " << c;
            out << "\n" << ce.rendering << "\n";
            std::cout << "wrote " << name << "\n";
        }
    }
    std::cout << (report.allPassed() ? "all properties passed" : "FAILURES detected")
              << "\n";
    return report.allPassed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ccbox: box-calculus type checker and abstract machine"};
    app.require_subcommand(1);

    std::string path;
    std::size_t fuel = 10000;
    bool trace = false;
    std::uint64_t seed = 0;
    std::uint32_t count = 500;

    CLI::App* check = app.add_subcommand("check", "parse and type-check a program");
    check->add_option("file", path, "a .ccbox source file")->required();

    CLI::App* type = app.add_subcommand("type", "print the inferred type of a program");
    type->add_option("file", path, "a .ccbox source file")->required();

    CLI::App* eval = app.add_subcommand("eval", "run a program on the abstract machine");
    eval->add_option("file", path, "a .ccbox source file")->required();
    eval->add_option("--fuel", fuel, "maximum number of machine steps");
    eval->add_flag("--trace", trace, "stream machine states step by step");

    CLI::App* fuzz =
        app.add_subcommand("fuzz", "run the property suites with generated cases");
    fuzz->add_option("--seed", seed, "generator seed");
    fuzz->add_option("--count", count, "cases per property");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (check->parsed()) return runCheck(path, false);
    if (type->parsed()) return runCheck(path, true);
    if (eval->parsed()) return runEval(path, fuel, trace);
    if (fuzz->parsed()) return runFuzz(seed, count);
    return 2;
}
