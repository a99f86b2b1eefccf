// Acceptance harness: one pass/fail line per criterion, nonzero exit on
// any failure. Population: the hand-written corpus plus seed-0 generated
// programs.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ccbox/binding.hpp"
#include "ccbox/classify.hpp"
#include "ccbox/driver.hpp"
#include "ccbox/parser.hpp"
#include "ccbox/printer.hpp"
#include "ccbox/subtyping.hpp"
#include "ccbox/testkit/gen.hpp"
#include "ccbox/testkit/oracle.hpp"
#include "ccbox/testkit/properties.hpp"
#include "ccbox/typing.hpp"

using namespace ccbox;
using namespace ccbox::testkit;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name
              << " — " << detail << "\n";
    if (!pass) failures += 1;
}

const std::vector<std::string> kWellTypedCorpus = {
    "identity.ccbox",       "selfapp_typed.ccbox", "const_nested.ccbox",
    "poly_id.ccbox",        "box_basic.ccbox",     "box_universal_arg.ccbox",
    "pair_tunnel.ccbox",    "capability_scope.ccbox", "chain.ccbox",
    "eta.ccbox",            "tabs_nested.ccbox",   "unbox_universal.ccbox",
    "box_annotation.ccbox", "shadowing.ccbox",     "trace_demo.ccbox",
    "dependent_annotation.ccbox", "nested_boxes.ccbox",
};

std::string corpusFile(const std::string& name) {
    return std::string(CCBOX_CORPUS_DIR) + "/" + name;
}

Term loadCorpus(const std::string& name) {
    auto text = readFile(corpusFile(name));
    if (!text.has_value()) {
        std::cerr << "missing corpus file " << name << "\n";
        std::exit(3);
    }
    ParseResult r = parse(*text);
    if (!r.ok()) {
        std::cerr << "corpus file does not parse: " << name << "\n";
        std::exit(3);
    }
    return r.program->parsed;
}

std::vector<Term> generatedPrograms(std::uint64_t seed, std::size_t count) {
    GenConfig cfg;
    cfg.seed = seed;
    SplitMix64 master(seed);
    std::vector<Term> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        ChoiceStream cs(master.next());
        out.push_back(genWellTypedProgram(cs, cfg));
    }
    return out;
}

long msSince(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int runCli(const std::string& args) {
    std::string cmd = std::string(CCBOX_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

}  // namespace

int main() {
    std::vector<Term> corpus;
    for (const std::string& name : kWellTypedCorpus) corpus.push_back(loadCorpus(name));

    auto t0 = std::chrono::steady_clock::now();
    std::vector<Term> generated = generatedPrograms(0, 500);

    // 1. preservation, 2. progress, 3. rule coverage (shared population)
    {
        std::size_t violations = 0;
        std::string firstFailure;
        std::map<std::string, std::size_t> ruleCounts;
        auto runPopulation = [&](const std::vector<Term>& programs, const char* label) {
            for (std::size_t i = 0; i < programs.size(); ++i) {
                std::vector<StepRule> fired;
                if (auto err = checkPreservation(programs[i], 3000, &fired)) {
                    violations += 1;
                    if (firstFailure.empty()) {
                        firstFailure = std::string(label) + "[" + std::to_string(i) +
                                       "]: " + *err;
                    }
                }
                for (StepRule r : fired) ruleCounts[stepRuleName(r)] += 1;
            }
        };
        runPopulation(corpus, "corpus");
        runPopulation(generated, "generated");
        long ms = msSince(t0);
        bool timeOk = ms < 60000;
        std::ostringstream detail;
        detail << corpus.size() << " corpus + " << generated.size()
               << " generated programs, " << violations << " violations, " << ms
               << " ms (< 60000 required)";
        if (!firstFailure.empty()) detail << "; first: " << firstFailure;
        report(1, "preservation", violations == 0 && timeOk, detail.str());

        std::size_t progressViolations = 0;
        std::string firstProgress;
        auto progressPopulation = [&](const std::vector<Term>& programs, const char* label) {
            for (std::size_t i = 0; i < programs.size(); ++i) {
                if (auto err = checkProgress(programs[i], 3000)) {
                    progressViolations += 1;
                    if (firstProgress.empty()) {
                        firstProgress = std::string(label) + "[" + std::to_string(i) +
                                        "]: " + *err;
                    }
                }
            }
        };
        progressPopulation(corpus, "corpus");
        progressPopulation(generated, "generated");
        std::ostringstream pdetail;
        pdetail << progressViolations << " violations over the same population";
        if (!firstProgress.empty()) pdetail << "; first: " << firstProgress;
        report(2, "progress", progressViolations == 0, pdetail.str());

        bool coverage = true;
        std::ostringstream cdetail;
        for (const char* rule : {"APP", "TAPP", "OPEN", "RENAME", "LIFT", "LET"}) {
            std::size_t n = ruleCounts[rule];
            cdetail << rule << "=" << n << " ";
            if (n < 10) coverage = false;
        }
        cdetail << "(each >= 10 required)";
        report(3, "machine rule coverage", coverage, cdetail.str());
    }

    // 4. exhaustive subcapture oracle equivalence
    {
        auto t = std::chrono::steady_clock::now();
        auto algo = [](const Env& g, const CaptureSet& a, const CaptureSet& b) {
            return subcapture(g, a, b);
        };
        EquivalenceStats two = compareSubcaptureOnSmallDomain(algo, 2, 2);
        EquivalenceStats three = compareSubcaptureOnSmallDomain(algo, 3, 3);
        long ms = msSince(t);
        std::size_t cases = two.cases + three.cases;
        std::size_t disagreements = two.disagreements + three.disagreements;
        std::ostringstream detail;
        detail << cases << " exhaustive cases (envs of <=3 bindings), " << disagreements
               << " disagreements, " << ms << " ms (< 30000 required)";
        report(4, "subcapture oracle equivalence", disagreements == 0 && ms < 30000,
               detail.str());
    }

    // 5. subtype reflexivity and transitivity
    {
        GenConfig cfg;
        std::size_t reflFailures = 0;
        std::size_t transFailures = 0;
        std::size_t premiseFailures = 0;
        ChoiceStream cs(5);
        for (int i = 0; i < 1000; ++i) {
            AtomSupply fresh{0};
            Env g = genWfEnv(cs, fresh, cfg.maxEnvDepth, 3);
            Type t = genWfType(cs, g, fresh, cfg.maxTypeDepth);
            if (!subtype(g, t, t)) reflFailures += 1;
            Type lo = mutateSubtype(cs, g, fresh, t);
            Type hi = mutateSupertype(cs, g, fresh, t);
            if (!subtype(g, lo, t) || !subtype(g, t, hi)) {
                premiseFailures += 1;
            } else if (!subtype(g, lo, hi)) {
                transFailures += 1;
            }
        }
        std::ostringstream detail;
        detail << "1000 reflexivity cases (" << reflFailures << " failures), "
               << "1000 chained triples (" << transFailures << " violations, "
               << premiseFailures << " premise construction failures)";
        report(5, "subtype reflexivity and transitivity",
               reflFailures == 0 && transFailures == 0 && premiseFailures == 0,
               detail.str());
    }

    // 6. purity stability
    {
        std::size_t violations = 0;
        ChoiceStream cs(6);
        for (int i = 0; i < 1000; ++i) {
            AtomSupply fresh{0};
            Env base = genWfEnv(cs, fresh, 2, 2);
            Atom tv = fresh.freshType("X");
            Env g = base.extendedType(tv, genWfPure(cs, base, fresh, 2));
            Type t = genWfType(cs, g, fresh, 4);
            Type r = genWfPure(cs, base, fresh, 2);
            Type substituted = substTypeAtomInType(t, tv, r);
            if (checkPure(t) && !checkPure(substituted)) violations += 1;
            if (checkType(t) && !checkType(substituted)) violations += 1;
        }
        // the fixed impure counterexample: {X -> CR}X = CR is not pure
        Atom tv(0, AtomKind::Type, "X");
        Atom c(1, AtomKind::Term, "c");
        Type impure = capt(CaptureSet::ofAtom(c), topType());
        bool counterexample = checkPure(tvar(tv)) &&
                              !checkPure(substTypeAtomInType(tvar(tv), tv, impure));
        std::ostringstream detail;
        detail << "1000 substitution cases, " << violations
               << " violations; impure-substitution counterexample "
               << (counterexample ? "confirmed" : "NOT confirmed");
        report(6, "purity stability", violations == 0 && counterexample, detail.str());
    }

    // 7. universal restriction and its boxed recovery
    {
        CheckOutcome reject = checkSource(*readFile(corpusFile("tapp_universal_reject.ccbox")));
        bool rejected = reject.exitCode == 1 && !reject.diagnostics.empty() &&
                        (reject.diagnostics.front().code == "E_UNIVERSAL_INSTANTIATION" ||
                         reject.diagnostics.front().code == "E_IMPURE_TYPE_ARGUMENT");
        CheckOutcome accept = checkSource(*readFile(corpusFile("box_universal_arg.ccbox")));
        std::ostringstream detail;
        detail << "reject file -> exit " << reject.exitCode << " ("
               << (reject.diagnostics.empty() ? "?" : reject.diagnostics.front().code)
               << "), boxed variant -> exit " << accept.exitCode;
        report(7, "universal restriction", rejected && accept.exitCode == 0, detail.str());
    }

    // 8. capture tunneling pair
    {
        CheckOutcome accept = checkSource(*readFile(corpusFile("pair_tunnel.ccbox")));
        CheckOutcome reject = checkSource(*readFile(corpusFile("pair_tunnel_reject.ccbox")));
        CheckOutcome nobox = checkSource(*readFile(corpusFile("pair_nobox_reject.ccbox")));
        bool pass = accept.exitCode == 0 && reject.exitCode == 1 &&
                    !reject.diagnostics.empty() &&
                    reject.diagnostics.front().code == "E_UNBOX_CAPTURE_MISMATCH" &&
                    nobox.exitCode == 1;
        std::ostringstream detail;
        detail << "boxed pair -> exit " << accept.exitCode
               << ", wrong-capability unbox -> exit " << reject.exitCode << " ("
               << (reject.diagnostics.empty() ? "?" : reject.diagnostics.front().code)
               << "), unboxed pair -> exit " << nobox.exitCode;
        report(8, "capture tunneling pair", pass, detail.str());
    }

    // 9. determinism across atom supplies, whole corpus
    {
        namespace fs = std::filesystem;
        std::size_t programs = 0;
        std::size_t violations = 0;
        for (const auto& entry : fs::directory_iterator(CCBOX_CORPUS_DIR)) {
            if (entry.path().extension() != ".ccbox") continue;
            auto text = readFile(entry.path().string());
            ParseResult r = parse(*text);
            if (!r.ok()) continue;  // malformed fixtures cannot run
            programs += 1;
            if (checkDeterminism(r.program->parsed, 3000).has_value()) violations += 1;
        }
        std::ostringstream detail;
        detail << programs << " runnable corpus programs, two atom supplies each, "
               << violations << " mismatches";
        report(9, "determinism up to renaming", violations == 0 && programs >= 15,
               detail.str());
    }

    // 10. frontend round trip and CLI exit-code matrix
    {
        namespace fs = std::filesystem;
        std::size_t roundTripFailures = 0;
        std::size_t checked = 0;
        for (const auto& entry : fs::directory_iterator(CCBOX_CORPUS_DIR)) {
            if (entry.path().extension() != ".ccbox") continue;
            auto text = readFile(entry.path().string());
            ParseResult r = parse(*text);
            if (!r.ok()) continue;
            checked += 1;
            ParseResult again = parse(prettyPrint(r.program->parsed));
            if (!again.ok() || !(again.program->parsed == r.program->parsed)) {
                roundTripFailures += 1;
            }
        }
        GenConfig cfg;
        ChoiceStream cs(10);
        for (int i = 0; i < 1000; ++i) {
            Term p = genWellTypedProgram(cs, cfg);
            ParseResult r = parse(prettyPrint(p));
            checked += 1;
            if (!r.ok() || !(r.program->parsed == p)) roundTripFailures += 1;
        }

        struct MatrixCase {
            std::string args;
            int expected;
        };
        std::vector<MatrixCase> matrix = {
            {"check " + corpusFile("identity.ccbox"), 0},
            {"check " + corpusFile("pair_tunnel.ccbox"), 0},
            {"type " + corpusFile("identity.ccbox"), 0},
            {"eval " + corpusFile("selfapp.ccbox"), 0},
            {"eval " + corpusFile("trace_demo.ccbox") + " --trace", 0},
            {"eval " + corpusFile("trace_demo.ccbox") + " --fuel 2", 1},
            {"check " + corpusFile("leak.ccbox"), 1},
            {"check " + corpusFile("stuck.ccbox"), 1},
            {"eval " + corpusFile("stuck.ccbox"), 1},
            {"check " + corpusFile("malformed.ccbox"), 2},
            {"check " + corpusFile("mnf_violation.ccbox"), 2},
            {"check " + corpusFile("no_such_file.ccbox"), 2},
            {"check --bogus-flag " + corpusFile("identity.ccbox"), 2},
            {"frobnicate", 2},
        };
        std::size_t matrixFailures = 0;
        std::string firstMatrix;
        for (const MatrixCase& c : matrix) {
            int got = runCli(c.args);
            if (got != c.expected) {
                matrixFailures += 1;
                if (firstMatrix.empty()) {
                    firstMatrix = "`" + c.args + "` -> " + std::to_string(got) +
                                  " (expected " + std::to_string(c.expected) + ")";
                }
            }
        }
        std::ostringstream detail;
        detail << checked << " round-trip cases (" << roundTripFailures << " failures), "
               << matrix.size() << " CLI cases (" << matrixFailures << " failures)";
        if (!firstMatrix.empty()) detail << "; first: " << firstMatrix;
        report(10, "frontend round trip and exit codes",
               roundTripFailures == 0 && matrixFailures == 0, detail.str());
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << (10 - failures) << "/10)\n";
    return failures == 0 ? 0 : 1;
}
