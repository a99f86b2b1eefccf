#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ccbox/atom.hpp"
#include "ccbox/term.hpp"
#include "ccbox/typing.hpp"

namespace ccbox {

// Store of value bindings; grows monotonically, never updated in place.
class Store {
public:
    const std::vector<std::pair<Atom, Term>>& bindings() const { return bindings_; }
    std::size_t size() const { return bindings_.size(); }

    std::optional<Term> lookup(const Atom& x) const;
    bool contains(const Atom& x) const;
    Store extended(Atom x, Term value) const;

private:
    std::vector<std::pair<Atom, Term>> bindings_;
};

// A pending let body, binder at term index 0.
struct Frame {
    Term body;
};

// ⟨S | E | e⟩: store, continuation stack (back = innermost), focus.
struct MachineState {
    Store store;
    std::vector<Frame> stack;
    Term focus;
};

enum class StepRule { App, TApp, Open, Rename, Lift, Let };
const char* stepRuleName(StepRule rule);

struct Stepped {
    MachineState next;
    StepRule rule;
};
struct Final {
    Term answer;  // a value, or a variable bound to a value
    Store store;
};
struct Stuck {
    std::string reason;
};
using StepResult = std::variant<Stepped, Final, Stuck>;

// One transition of the abstract machine; exactly the six rules APP,
// TAPP, OPEN, RENAME, LIFT, LET, plus the two answer shapes at an empty
// stack. Everything else is Stuck with the failed precondition.
StepResult step(const MachineState& s, AtomSupply& fresh);

struct TraceEntry {
    StepRule rule;
    MachineState state;  // state after the step
};

struct RunOutcome {
    enum class Status { Answer, OutOfFuel, Stuck };
    Status status;
    MachineState finalState;
    std::size_t steps = 0;
    std::vector<StepRule> rules = {};
    std::optional<std::vector<TraceEntry>> trace = {};
    std::string stuckReason = {};
    // For answers: the focus as left by the machine, and the value it
    // denotes (resolving a store-bound variable answer).
    std::optional<Term> answer = {};
    std::optional<Term> answerValue = {};
};

// Iterates step from ⟨[] | [] | program⟩ for at most `fuel` transitions.
// The fresh-name supply, if not given, starts above the program's atoms.
RunOutcome run(const Term& program, std::size_t fuel, bool keepTrace = false,
               AtomSupply* supply = nullptr);

MachineState initialState(const Term& program);
bool isFinalShaped(const MachineState& s);

// Store/stack typing: types each store value in its prefix, the focus
// under the full store environment, then folds the stack, each frame
// typed against the type produced so far with the usual avoidance check.
TypingResult typeState(const MachineState& s);

// The store environment typeState builds, exposed for the preservation
// harness; nullopt if some store value fails to type.
std::optional<Env> storeTypingEnv(const Store& store);

}  // namespace ccbox
