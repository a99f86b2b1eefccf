#include "ccbox/testkit/properties.hpp"

#include <functional>
#include <sstream>

#include "ccbox/binding.hpp"
#include "ccbox/classify.hpp"
#include "ccbox/parser.hpp"
#include "ccbox/printer.hpp"
#include "ccbox/subtyping.hpp"
#include "ccbox/testkit/oracle.hpp"
#include "ccbox/typing.hpp"

namespace ccbox::testkit {

bool PropertyReport::allPassed() const {
    for (const PropertyEntry& e : entries) {
        if (e.failures > 0) return false;
    }
    return true;
}

std::string PropertyReport::render() const {
    std::ostringstream out;
    for (const PropertyEntry& e : entries) {
        out << (e.failures == 0 ? "PASS" : "FAIL") << "  " << e.property;
        for (std::size_t i = e.property.size(); i < 28; ++i) out << ' ';
        out << " cases=" << e.cases << " failures=" << e.failures << "\n";
    }
    if (!machineRuleCounts.empty()) {
        out << "machine rules fired:";
        for (const auto& [rule, n] : machineRuleCounts) out << " " << rule << "=" << n;
        out << "\n";
    }
    for (const Counterexample& ce : counterexamples) {
        out << "counterexample (" << ce.property << (ce.shrunk ? ", shrunk" : "") << "):\n"
            << ce.rendering << "\n";
        if (ce.trace.has_value()) out << *ce.trace << "\n";
    }
    return out.str();
}

std::optional<std::string> checkPreservation(const Term& program, std::size_t fuel,
                                             std::vector<StepRule>* firedRules) {
    TypingResult t0 = inferType(Env{}, program);
    if (!t0.ok()) return "program does not type-check: " + t0.error->detail;

    MachineState state = initialState(program);
    TypingResult prev = typeState(state);
    if (!prev.ok()) return "initial state fails to type: " + prev.error->detail;

    AtomSupply supply{atomIdCeiling(freeAtoms(program))};
    for (std::size_t i = 0; i < fuel; ++i) {
        StepResult r = step(state, supply);
        if (const auto* stepped = std::get_if<Stepped>(&r)) {
            if (firedRules) firedRules->push_back(stepped->rule);
            TypingResult cur = typeState(stepped->next);
            if (!cur.ok()) {
                return std::string("state after step ") + std::to_string(i + 1) + " (" +
                       stepRuleName(stepped->rule) +
                       ") fails to type: " + cur.error->detail;
            }
            std::optional<Env> env = storeTypingEnv(stepped->next.store);
            if (!env.has_value()) return "store fails to type";
            if (!subtype(*env, *cur.type, *prev.type)) {
                return std::string("type not preserved by ") + stepRuleName(stepped->rule) +
                       ": " + prettyPrint(*cur.type) + " is not a subtype of " +
                       prettyPrint(*prev.type);
            }
            prev = cur;
            state = stepped->next;
            continue;
        }
        if (std::get_if<Final>(&r) != nullptr) return std::nullopt;
        return "well-typed state got stuck: " + std::get<Stuck>(r).reason;
    }
    return std::nullopt;  // fuel exhausted without a violation
}

std::optional<std::string> checkProgress(const Term& program, std::size_t fuel) {
    MachineState state = initialState(program);
    AtomSupply supply{atomIdCeiling(freeAtoms(program))};
    for (std::size_t i = 0; i < fuel; ++i) {
        bool welltyped = typeState(state).ok();
        StepResult r = step(state, supply);
        if (const auto* stepped = std::get_if<Stepped>(&r)) {
            state = stepped->next;
            continue;
        }
        if (std::get_if<Final>(&r) != nullptr) return std::nullopt;
        if (welltyped && !isFinalShaped(state)) {
            return "well-typed non-final state is stuck: " + std::get<Stuck>(r).reason;
        }
        return std::nullopt;  // ill-typed programs may get stuck
    }
    return std::nullopt;
}

std::optional<std::string> checkDeterminism(const Term& program, std::size_t fuel) {
    std::uint64_t ceiling = atomIdCeiling(freeAtoms(program));
    AtomSupply s1{ceiling};
    AtomSupply s2{ceiling + 1000};
    RunOutcome r1 = run(program, fuel, false, &s1);
    RunOutcome r2 = run(program, fuel, false, &s2);
    if (r1.rules != r2.rules) return "rule sequences differ between atom supplies";
    if (r1.status != r2.status) return "outcomes differ between atom supplies";
    if (r1.status == RunOutcome::Status::Answer) {
        if (!alphaEquivalentAnswers(r1.finalState.store, *r1.answer, r2.finalState.store,
                                    *r2.answer)) {
            return "answers are not alpha-equivalent";
        }
    }
    return std::nullopt;
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t caseSeed(std::uint64_t seed, std::string_view prop, std::uint64_t i) {
    SplitMix64 m(seed ^ fnv1a(prop));
    return m.next() + i * 0x9e3779b97f4a7c15ULL;
}

struct CaseResult {
    std::optional<std::string> failure;
    std::string rendering;
};

using CaseFn = std::function<CaseResult(ChoiceStream&, const GenConfig&)>;

struct PropertyDef {
    std::string name;
    CaseFn runCase;
};

std::string renderEnv(const Env& g) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const Binding& b : g.bindings()) {
        if (!first) out << ", ";
        first = false;
        if (const auto* tb = std::get_if<TermBinding>(&b)) {
            out << tb->atom.display() << " : " << prettyPrint(tb->type);
        } else {
            const auto& yb = std::get<TypeBinding>(b);
            out << yb.atom.display() << " <: " << prettyPrint(yb.bound);
        }
    }
    out << "]";
    return out.str();
}

// Random telescope of term bindings whose capture sets mention earlier
// atoms, the shape the subcapture judgment cares about.
Env genCaptureEnv(ChoiceStream& cs, std::vector<Atom>& atoms) {
    Env g;
    std::uint64_t n = cs.next(5);
    for (std::uint64_t i = 0; i < n; ++i) {
        Atom x(i, AtomKind::Term, "a" + std::to_string(i));
        CaptureSet c;
        for (const Atom& earlier : atoms) {
            if (cs.chance(35)) c = c.withAtom(earlier);
        }
        if (cs.chance(15)) c = c.withUniversal();
        g = g.extendedTerm(x, capt(c, topType()));
        atoms.push_back(x);
    }
    return g;
}

CaptureSet genCaptureOver(ChoiceStream& cs, const std::vector<Atom>& atoms) {
    CaptureSet c;
    for (const Atom& a : atoms) {
        if (cs.chance(40)) c = c.withAtom(a);
    }
    if (cs.chance(20)) c = c.withUniversal();
    return c;
}

std::vector<PropertyDef> buildProperties(std::map<std::string, std::size_t>& ruleCounts) {
    std::vector<PropertyDef> props;

    props.push_back({"purity-stability", [](ChoiceStream& cs, const GenConfig& cfg) {
        CaseResult res;
        AtomSupply fresh{0};
        Env base = genWfEnv(cs, fresh, 2, 2);
        Type xBound = genWfPure(cs, base, fresh, 2);
        Atom tv = fresh.freshType("X");
        Env g = base.extendedType(tv, xBound);
        Type t = genWfType(cs, g, fresh, cfg.maxTypeDepth);
        Type r = genWfPure(cs, base, fresh, 2);
        res.rendering = "T = " + prettyPrint(t) + ", R = " + prettyPrint(r) +
                        ", X = " + tv.display();
        Type substituted = substTypeAtomInType(t, tv, r);
        if (checkPure(t) && !checkPure(substituted)) {
            res.failure = "substituting a pure type broke purity: " +
                          prettyPrint(substituted);
            return res;
        }
        if (checkType(t) && !checkType(substituted)) {
            res.failure = "substituting a pure type broke the type judgment: " +
                          prettyPrint(substituted);
            return res;
        }
        // the same stability through opening
        Type closed = closeTypeVarInType(t, tv, 0);
        Type opened = openTypeVarInType(closed, 0, r);
        if (opened != substituted) {
            res.failure = "open after close disagrees with substitution";
        }
        return res;
    }});

    props.push_back({"open-close-roundtrip", [](ChoiceStream& cs, const GenConfig& cfg) {
        CaseResult res;
        AtomSupply fresh{0};
        Env g = genWfEnv(cs, fresh, 2, 2);
        Type param = genWfType(cs, g, fresh, 2);
        Atom x0 = fresh.freshTerm();
        Type resultOpen = genWfType(cs, g.extendedTerm(x0, param), fresh, 2);
        Type resultClosed = closeTermVarInType(resultOpen, x0, 0);
        res.rendering = "arrow result = " + prettyPrint(resultClosed);
        Atom y = fresh.freshTerm();
        if (closeTermVarInType(openTermVarInType(resultClosed, 0, y), y, 0) != resultClosed) {
            res.failure = "close(open(T)) differs from T";
            return res;
        }
        // substitution for a non-occurring atom is the identity
        Atom ghost = fresh.freshType();
        if (substTypeAtomInType(resultClosed, ghost, topType()) != resultClosed) {
            res.failure = "substitution for a fresh atom changed the type";
            return res;
        }
        // terms: round-trip the top-level let body of a generated program
        Term program = genWellTypedProgram(cs, cfg);
        if (const auto* l = program.get<LetTerm>()) {
            Atom z = fresh.freshTerm();
            if (closeTermVarInTerm(openTermVarInTerm(l->body, 0, z), z, 0) != l->body) {
                res.failure = "close(open(e)) differs from e";
                res.rendering = prettyPrint(program);
            }
        }
        return res;
    }});

    props.push_back({"wf-weakening", [](ChoiceStream& cs, const GenConfig& cfg) {
        CaseResult res;
        AtomSupply fresh{0};
        Env g = genWfEnv(cs, fresh, 3, 3);
        Type t = genWfType(cs, g, fresh, cfg.maxTypeDepth);
        Env extended = g;
        std::uint64_t extra = 1 + cs.next(2);
        for (std::uint64_t i = 0; i < extra; ++i) {
            if (cs.chance(60)) {
                extended = extended.extendedTerm(fresh.freshTerm("w"),
                                                 genWfType(cs, extended, fresh, 2));
            } else {
                extended = extended.extendedType(fresh.freshType("W"),
                                                 genWfPure(cs, extended, fresh, 2));
            }
        }
        res.rendering = renderEnv(extended) + " |- " + prettyPrint(t);
        if (!wfType(g, t)) {
            res.failure = "generated type is not well-formed in its own environment";
        } else if (!wfType(extended, t)) {
            res.failure = "well-formedness lost under weakening";
        }
        return res;
    }});

    props.push_back({"subcapture-oracle", [](ChoiceStream& cs, const GenConfig&) {
        CaseResult res;
        std::vector<Atom> atoms;
        Env g = genCaptureEnv(cs, atoms);
        CaptureSet c1 = genCaptureOver(cs, atoms);
        CaptureSet c2 = genCaptureOver(cs, atoms);
        res.rendering = renderEnv(g) + " |- " + prettyPrint(c1) + " <:C " + prettyPrint(c2);
        bool algo = subcapture(g, c1, c2);
        bool oracle = declarativeSubcapture(g, c1, c2,
                                            static_cast<std::uint32_t>(g.size()) + 2);
        if (algo != oracle) {
            res.failure = std::string("algorithmic says ") + (algo ? "true" : "false") +
                          ", declarative search says " + (oracle ? "true" : "false");
        }
        return res;
    }});

    props.push_back({"subcapture-monotonicity", [](ChoiceStream& cs, const GenConfig&) {
        CaseResult res;
        std::vector<Atom> atoms;
        Env g = genCaptureEnv(cs, atoms);
        if (atoms.empty()) return res;
        CaptureSet c1 = genCaptureOver(cs, atoms);
        CaptureSet c2 = genCaptureOver(cs, atoms);
        const Atom& x = atoms[cs.next(atoms.size())];
        res.rendering = renderEnv(g) + " |- " + prettyPrint(c1) + " <:C " + prettyPrint(c2) +
                        " + " + x.display();
        if (subcapture(g, c1, c2) && !subcapture(g, c1, c2.withAtom(x))) {
            res.failure = "enlarging the right-hand set lost the derivation";
        }
        return res;
    }});

    props.push_back({"subtype-reflexivity", [](ChoiceStream& cs, const GenConfig& cfg) {
        CaseResult res;
        AtomSupply fresh{0};
        Env g = genWfEnv(cs, fresh, cfg.maxEnvDepth, 3);
        Type t = genWfType(cs, g, fresh, cfg.maxTypeDepth);
        res.rendering = renderEnv(g) + " |- " + prettyPrint(t);
        if (!subtype(g, t, t)) res.failure = "subtype(T, T) is false";
        return res;
    }});

    props.push_back({"subtype-transitivity", [](ChoiceStream& cs, const GenConfig& cfg) {
        CaseResult res;
        AtomSupply fresh{0};
        Env g = genWfEnv(cs, fresh, cfg.maxEnvDepth, 3);
        Type mid = genWfType(cs, g, fresh, cfg.maxTypeDepth);
        Type lo = mutateSubtype(cs, g, fresh, mid);
        Type hi = mutateSupertype(cs, g, fresh, mid);
        res.rendering = renderEnv(g) + " |- " + prettyPrint(lo) + " <: " + prettyPrint(mid) +
                        " <: " + prettyPrint(hi);
        if (!subtype(g, lo, mid)) {
            res.failure = "mutation premise failed: lo is not a subtype of mid";
            return res;
        }
        if (!subtype(g, mid, hi)) {
            res.failure = "mutation premise failed: mid is not a subtype of hi";
            return res;
        }
        if (!subtype(g, lo, hi)) res.failure = "transitivity violated";
        return res;
    }});

    props.push_back({"parse-print-roundtrip", [](ChoiceStream& cs, const GenConfig& cfg) {
        CaseResult res;
        Term program = genWellTypedProgram(cs, cfg);
        std::string text = prettyPrint(program);
        res.rendering = text;
        ParseResult parsed = parse(text);
        if (!parsed.ok()) {
            res.failure = "printed program does not parse: " +
                          formatDiagnostic(parsed.diagnostics.front());
        } else if (parsed.program->parsed != program) {
            res.failure = "parse(print(e)) differs from e: " +
                          prettyPrint(parsed.program->parsed);
        }
        return res;
    }});

    props.push_back({"preservation", [&ruleCounts](ChoiceStream& cs, const GenConfig& cfg) {
        CaseResult res;
        Term program = genWellTypedProgram(cs, cfg);
        res.rendering = prettyPrint(program);
        std::vector<StepRule> fired;
        res.failure = checkPreservation(program, 2000, &fired);
        for (StepRule r : fired) ruleCounts[stepRuleName(r)] += 1;
        return res;
    }});

    props.push_back({"progress", [](ChoiceStream& cs, const GenConfig& cfg) {
        CaseResult res;
        Term program = genWellTypedProgram(cs, cfg);
        res.rendering = prettyPrint(program);
        res.failure = checkProgress(program, 2000);
        return res;
    }});

    props.push_back({"determinism", [](ChoiceStream& cs, const GenConfig& cfg) {
        CaseResult res;
        Term program = genWellTypedProgram(cs, cfg);
        res.rendering = prettyPrint(program);
        res.failure = checkDeterminism(program, 2000);
        return res;
    }});

    return props;
}

}  // namespace

std::vector<std::uint64_t> shrinkChoiceSequence(
    const std::function<bool(ChoiceStream&)>& fails, std::vector<std::uint64_t> start,
    int budget) {
    std::vector<std::uint64_t> best = std::move(start);

    auto attempt = [&](std::vector<std::uint64_t> candidate) {
        ChoiceStream replay(std::move(candidate));
        budget -= 1;
        if (!fails(replay)) return false;
        std::vector<std::uint64_t> reached = replay.recorded();
        if (reached.size() > best.size()) return false;  // padding grew the case back
        best = std::move(reached);
        return true;
    };

    bool improved = true;
    while (improved && budget > 0) {
        improved = false;
        if (best.size() > 1) {
            std::vector<std::uint64_t> half(best.begin(), best.begin() + best.size() / 2);
            if (attempt(std::move(half))) {
                improved = true;
                continue;
            }
        }
        for (std::size_t k = 0; k < best.size() && budget > 0; ++k) {
            if (best[k] == 0) continue;
            std::vector<std::uint64_t> zeroed = best;
            zeroed[k] = 0;
            if (attempt(std::move(zeroed))) {
                improved = true;
                break;
            }
        }
    }
    return best;
}

PropertyReport runPropertySuite(const GenConfig& cfg) {
    PropertyReport report;
    std::vector<PropertyDef> props = buildProperties(report.machineRuleCounts);

    for (const PropertyDef& prop : props) {
        PropertyEntry entry{prop.name, 0, 0};
        bool haveCounterexample = false;

        for (std::uint64_t i = 0; i < cfg.count; ++i) {
            ChoiceStream cs(caseSeed(cfg.seed, prop.name, i));
            CaseResult result = prop.runCase(cs, cfg);
            entry.cases += 1;
            if (!result.failure.has_value()) continue;
            entry.failures += 1;

            if (haveCounterexample) continue;
            haveCounterexample = true;

            // Shrink on the recorded choice sequence, then rerun to render
            // the reduced case.
            std::vector<std::uint64_t> initial = cs.recorded();
            std::vector<std::uint64_t> best = shrinkChoiceSequence(
                [&](ChoiceStream& replay) {
                    return prop.runCase(replay, cfg).failure.has_value();
                },
                initial);
            bool shrunk = best != initial;
            ChoiceStream replay(best);
            CaseResult reduced = prop.runCase(replay, cfg);
            std::string message =
                reduced.failure.has_value() ? *reduced.failure : *result.failure;
            std::string rendering =
                reduced.failure.has_value() ? reduced.rendering : result.rendering;

            report.counterexamples.push_back(Counterexample{
                prop.name, rendering + "\n  -> " + message, std::nullopt, shrunk, best});
        }
        report.entries.push_back(entry);
    }
    return report;
}

}  // namespace ccbox::testkit
