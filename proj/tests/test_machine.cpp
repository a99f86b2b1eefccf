#include <doctest.h>

#include "ccbox/testkit/oracle.hpp"
#include "ccbox/testkit/properties.hpp"
#include "helpers.hpp"

using namespace ccbox;

namespace {

Term identityTerm() { return abs(tt::emptyTop(), varBound(0)); }

// let f = fun (x : {} Top) => x in f f
Term selfAppProgram() {
    return let(identityTerm(), app(Var::bound(0), Var::bound(0)));
}

}  // namespace

TEST_CASE("LET pushes a frame and focuses the bound expression") {
    MachineState s = initialState(selfAppProgram());
    AtomSupply supply{100};
    StepResult r = step(s, supply);
    const auto* stepped = std::get_if<Stepped>(&r);
    REQUIRE(stepped != nullptr);
    CHECK(stepped->rule == StepRule::Let);
    CHECK(stepped->next.stack.size() == 1);
    CHECK(stepped->next.focus == identityTerm());
}

TEST_CASE("self-application runs as LET, LIFT, APP, then an answer") {
    RunOutcome out = run(selfAppProgram(), 10);
    REQUIRE(out.status == RunOutcome::Status::Answer);
    CHECK(out.steps == 3);
    CHECK(out.rules ==
          std::vector<StepRule>{StepRule::Let, StepRule::Lift, StepRule::App});
    // the answer is the store-resident variable, resolved to the lambda
    REQUIRE(out.answer.has_value());
    CHECK(out.answer->is<VarTerm>());
    REQUIRE(out.answerValue.has_value());
    CHECK(*out.answerValue == identityTerm());
    CHECK(out.finalState.store.size() == 1);
}

TEST_CASE("values at an empty stack are immediate answers") {
    RunOutcome out = run(identityTerm(), 10);
    CHECK(out.status == RunOutcome::Status::Answer);
    CHECK(out.steps == 0);
    CHECK(*out.answer == identityTerm());
}

TEST_CASE("OPEN discards the annotation and reveals the boxed variable") {
    Atom y = tt::termAtom(1, "y");
    Atom x = tt::termAtom(2, "x");
    Store store = Store{}.extended(y, identityTerm()).extended(x, boxVal(Var::free(y)));
    MachineState s{store, {}, unbox(CaptureSet::universal(), Var::free(x))};
    AtomSupply supply{50};
    StepResult r = step(s, supply);
    const auto* stepped = std::get_if<Stepped>(&r);
    REQUIRE(stepped != nullptr);
    CHECK(stepped->rule == StepRule::Open);
    CHECK(stepped->next.focus == varTerm(y));
}

TEST_CASE("RENAME feeds a store-bound variable to the innermost frame") {
    Atom x = tt::termAtom(1, "x");
    Store store = Store{}.extended(x, identityTerm());
    MachineState s{store, {Frame{varBound(0)}}, varTerm(x)};
    AtomSupply supply{50};
    StepResult r = step(s, supply);
    const auto* stepped = std::get_if<Stepped>(&r);
    REQUIRE(stepped != nullptr);
    CHECK(stepped->rule == StepRule::Rename);
    CHECK(stepped->next.stack.empty());
    CHECK(stepped->next.focus == varTerm(x));
}

TEST_CASE("stuck states carry the failed precondition") {
    // empty store: applying an unbound variable
    Atom x = tt::termAtom(1, "x");
    RunOutcome out = run(app(Var::free(x), Var::free(x)), 5);
    CHECK(out.status == RunOutcome::Status::Stuck);
    CHECK_FALSE(out.stuckReason.empty());

    // a box is not a lambda
    Term prog = tt::corpusProgram("stuck.ccbox");
    RunOutcome out2 = run(prog, 100);
    CHECK(out2.status == RunOutcome::Status::Stuck);
}

TEST_CASE("final shapes: value or store-bound variable at an empty stack") {
    Atom x = tt::termAtom(1, "x");
    Store store = Store{}.extended(x, identityTerm());
    CHECK(isFinalShaped(MachineState{store, {}, varTerm(x)}));
    CHECK(isFinalShaped(MachineState{store, {}, identityTerm()}));
    CHECK_FALSE(isFinalShaped(MachineState{store, {Frame{varBound(0)}}, varTerm(x)}));
    CHECK_FALSE(isFinalShaped(MachineState{Store{}, {}, varTerm(x)}));
    // an unbound variable at an empty stack is stuck, not final
    AtomSupply supply{10};
    StepResult r = step(MachineState{Store{}, {}, varTerm(x)}, supply);
    CHECK(std::get_if<Stuck>(&r) != nullptr);
}

TEST_CASE("typeState types store, focus and stack") {
    TypingResult r = typeState(initialState(identityTerm()));
    REQUIRE(r.ok());
    CHECK(*r.type ==
          capt(CaptureSet::empty(),
               arrow(tt::emptyTop(), capt(CaptureSet::ofBound(0), topType()))));

    TypingResult bad = typeState(initialState(varTerm(tt::termAtom(1, "x"))));
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.error->kind == TypingErrorKind::UnboundVariable);
}

TEST_CASE("preservation and progress along corpus runs") {
    using namespace ccbox::testkit;
    for (const char* name : {"selfapp_typed.ccbox", "box_basic.ccbox", "trace_demo.ccbox",
                             "pair_tunnel.ccbox"}) {
        CAPTURE(name);
        Term prog = tt::corpusProgram(name);
        CHECK(checkPreservation(prog, 2000) == std::nullopt);
        CHECK(checkProgress(prog, 2000) == std::nullopt);
    }
}

TEST_CASE("determinism up to renaming across atom supplies") {
    using namespace ccbox::testkit;
    Term prog = tt::corpusProgram("trace_demo.ccbox");
    CHECK(checkDeterminism(prog, 2000) == std::nullopt);

    std::uint64_t ceiling = atomIdCeiling(freeAtoms(prog));
    AtomSupply s1{ceiling};
    AtomSupply s2{ceiling + 5000};
    RunOutcome r1 = run(prog, 2000, false, &s1);
    RunOutcome r2 = run(prog, 2000, false, &s2);
    CHECK(r1.rules == r2.rules);
    // raw answers differ in atom identity but not after canonicalization
    CHECK(alphaEquivalentAnswers(r1.finalState.store, *r1.answer, r2.finalState.store,
                                 *r2.answer));
}

TEST_CASE("the store grows monotonically and fuel is monotone") {
    Term prog = tt::corpusProgram("box_basic.ccbox");
    AtomSupply supply{atomIdCeiling(freeAtoms(prog))};
    MachineState state = initialState(prog);
    std::size_t prevSize = 0;
    std::vector<MachineState> states;
    for (int i = 0; i < 200; ++i) {
        StepResult r = step(state, supply);
        const auto* stepped = std::get_if<Stepped>(&r);
        if (stepped == nullptr) break;
        CHECK(stepped->next.store.size() >= prevSize);
        // existing bindings never change
        for (std::size_t k = 0; k < prevSize; ++k) {
            CHECK(stepped->next.store.bindings()[k].first == state.store.bindings()[k].first);
            CHECK(stepped->next.store.bindings()[k].second ==
                  state.store.bindings()[k].second);
        }
        prevSize = stepped->next.store.size();
        state = stepped->next;
    }

    RunOutcome full = run(prog, 10000);
    REQUIRE(full.status == RunOutcome::Status::Answer);
    RunOutcome exact = run(prog, full.steps);
    CHECK(exact.status == RunOutcome::Status::Answer);
    CHECK(exact.rules == full.rules);
    if (full.steps > 0) {
        RunOutcome starved = run(prog, full.steps - 1);
        CHECK(starved.status == RunOutcome::Status::OutOfFuel);
    }
}

TEST_CASE("run keeps a bounded trace when asked") {
    RunOutcome out = run(selfAppProgram(), 10, true);
    REQUIRE(out.trace.has_value());
    CHECK(out.trace->size() == 3);
    CHECK((*out.trace)[0].rule == StepRule::Let);
    CHECK((*out.trace)[2].rule == StepRule::App);
}
