#include "ccbox/machine.hpp"

#include <algorithm>

#include "ccbox/binding.hpp"
#include "ccbox/classify.hpp"
#include "ccbox/env.hpp"
#include "ccbox/subtyping.hpp"

namespace ccbox {

std::optional<Term> Store::lookup(const Atom& x) const {
    for (const auto& [a, v] : bindings_) {
        if (a == x) return v;
    }
    return std::nullopt;
}

bool Store::contains(const Atom& x) const { return lookup(x).has_value(); }

Store Store::extended(Atom x, Term value) const {
    Store out = *this;
    out.bindings_.emplace_back(std::move(x), std::move(value));
    return out;
}

const char* stepRuleName(StepRule rule) {
    switch (rule) {
        case StepRule::App: return "APP";
        case StepRule::TApp: return "TAPP";
        case StepRule::Open: return "OPEN";
        case StepRule::Rename: return "RENAME";
        case StepRule::Lift: return "LIFT";
        case StepRule::Let: return "LET";
    }
    return "?";
}

MachineState initialState(const Term& program) {
    return MachineState{Store{}, {}, program};
}

bool isFinalShaped(const MachineState& s) {
    if (!s.stack.empty()) return false;
    if (isValue(s.focus)) return true;
    if (const auto* v = s.focus.get<VarTerm>()) {
        return v->var.isFree() && s.store.contains(v->var.atom());
    }
    return false;
}

namespace {

StepResult stuck(std::string reason) { return Stuck{std::move(reason)}; }

std::optional<Term> storeValue(const Store& store, const Var& v) {
    if (!v.isFree()) return std::nullopt;
    return store.lookup(v.atom());
}

}  // namespace

StepResult step(const MachineState& s, AtomSupply& fresh) {
    const Store& store = s.store;

    if (const auto* l = s.focus.get<LetTerm>()) {
        // (LET): push the body, focus the bound expression.
        MachineState next{store, s.stack, l->bound};
        next.stack.push_back(Frame{l->body});
        return Stepped{std::move(next), StepRule::Let};
    }

    if (const auto* ap = s.focus.get<AppTerm>()) {
        std::optional<Term> fn = storeValue(store, ap->fn);
        if (!fn.has_value()) return stuck("applied variable is not bound in the store");
        const auto* lam = fn->get<AbsTerm>();
        if (lam == nullptr) return stuck("applied variable is not bound to a lambda");
        std::optional<Term> arg = storeValue(store, ap->arg);
        if (!arg.has_value()) return stuck("argument variable is not bound in the store");
        // (APP): [0 -> y]e
        MachineState next{store, s.stack, openTermVarInTerm(lam->body, 0, ap->arg.atom())};
        return Stepped{std::move(next), StepRule::App};
    }

    if (const auto* ta = s.focus.get<TAppTerm>()) {
        std::optional<Term> fn = storeValue(store, ta->fn);
        if (!fn.has_value()) return stuck("instantiated variable is not bound in the store");
        const auto* lam = fn->get<TAbsTerm>();
        if (lam == nullptr) return stuck("instantiated variable is not bound to a type lambda");
        if (!checkPure(ta->typeArg)) return stuck("type argument is not pure");
        // (TAPP): {0 -> R}e with the applied argument.
        MachineState next{store, s.stack, openTypeVarInTerm(lam->body, 0, ta->typeArg)};
        return Stepped{std::move(next), StepRule::TApp};
    }

    if (const auto* u = s.focus.get<UnboxTerm>()) {
        std::optional<Term> operand = storeValue(store, u->operand);
        if (!operand.has_value()) return stuck("unboxed variable is not bound in the store");
        const auto* box = operand->get<BoxTerm>();
        if (box == nullptr) return stuck("unboxed variable is not bound to a box");
        if (!box->operand.isFree()) return stuck("stored box holds a dangling variable");
        // (OPEN): the annotation is erased at runtime.
        MachineState next{store, s.stack, varTerm(box->operand.atom())};
        return Stepped{std::move(next), StepRule::Open};
    }

    if (const auto* v = s.focus.get<VarTerm>()) {
        if (!v->var.isFree()) return stuck("focus is a dangling bound variable");
        if (!store.contains(v->var.atom())) {
            return stuck("focus variable is not bound in the store: " + v->var.atom().display());
        }
        if (s.stack.empty()) return Final{s.focus, store};
        // (RENAME): feed the variable to the innermost frame.
        MachineState next{store, s.stack, Term(s.focus)};
        Frame frame = next.stack.back();
        next.stack.pop_back();
        next.focus = openTermVarInTerm(frame.body, 0, v->var.atom());
        return Stepped{std::move(next), StepRule::Rename};
    }

    if (isValue(s.focus)) {
        if (s.stack.empty()) return Final{s.focus, store};
        // (LIFT): allocate the value, feed the new name to the frame.
        Atom x = fresh.freshTerm("r" + std::to_string(fresh.next));
        MachineState next{store.extended(x, s.focus), s.stack, s.focus};
        Frame frame = next.stack.back();
        next.stack.pop_back();
        next.focus = openTermVarInTerm(frame.body, 0, x);
        return Stepped{std::move(next), StepRule::Lift};
    }

    return stuck("focus is not a redex, a value, or a variable");
}

RunOutcome run(const Term& program, std::size_t fuel, bool keepTrace, AtomSupply* supply) {
    AtomSupply local{atomIdCeiling(freeAtoms(program))};
    AtomSupply& fresh = supply ? *supply : local;

    RunOutcome out{RunOutcome::Status::OutOfFuel, initialState(program)};
    if (keepTrace) out.trace.emplace();

    for (;;) {
        StepResult r = step(out.finalState, fresh);
        if (const auto* stepped = std::get_if<Stepped>(&r)) {
            if (out.steps == fuel) return out;  // OutOfFuel; the step is not applied
            out.finalState = stepped->next;
            out.rules.push_back(stepped->rule);
            out.steps += 1;
            if (keepTrace) out.trace->push_back(TraceEntry{stepped->rule, stepped->next});
            continue;
        }
        if (const auto* fin = std::get_if<Final>(&r)) {
            // answer detection does not consume fuel
            out.status = RunOutcome::Status::Answer;
            out.answer = fin->answer;
            if (const auto* v = fin->answer.get<VarTerm>()) {
                out.answerValue = fin->store.lookup(v->var.atom());
            } else {
                out.answerValue = fin->answer;
            }
            return out;
        }
        out.status = RunOutcome::Status::Stuck;
        out.stuckReason = std::get<Stuck>(r).reason;
        return out;
    }
}

std::optional<Env> storeTypingEnv(const Store& store) {
    Env env;
    for (const auto& [x, v] : store.bindings()) {
        TypingResult r = inferType(env, v);
        if (!r.ok()) return std::nullopt;
        env = env.extendedTerm(x, *r.type);
    }
    return env;
}

TypingResult typeState(const MachineState& s) {
    // Γ_S: each store value typed in its strict prefix.
    Env storeEnv;
    for (std::size_t i = 0; i < s.store.size(); ++i) {
        const auto& [x, v] = s.store.bindings()[i];
        TypingResult r = inferType(storeEnv, v);
        if (!r.ok()) {
            TypingError err = *r.error;
            err.detail = "store binding " + x.display() + ": " + err.detail;
            return TypingResult::failure(std::move(err));
        }
        storeEnv = storeEnv.extendedTerm(x, *r.type);
    }

    TypingResult focus = inferType(storeEnv, s.focus);
    if (!focus.ok()) return focus;
    Type current = *focus.type;

    std::uint64_t ceiling = atomIdCeiling(storeEnv.domain());
    ceiling = std::max(ceiling, atomIdCeiling(freeAtoms(current)));
    for (const Frame& f : s.stack) {
        ceiling = std::max(ceiling, atomIdCeiling(freeAtoms(f.body)));
    }
    AtomSupply fresh{ceiling};

    // Fold the stack innermost-first; each frame consumes the type
    // produced so far, with the let avoidance check.
    for (auto it = s.stack.rbegin(); it != s.stack.rend(); ++it) {
        Atom x = fresh.freshTerm();
        TypingResult r =
            inferType(storeEnv.extendedTerm(x, current), openTermVarInTerm(it->body, 0, x));
        if (!r.ok()) return r;
        if (atomSetContains(freeAtoms(*r.type), x)) {
            return TypingResult::failure(
                TypingError{TypingErrorKind::EscapingVariable,
                            {},
                            "frame result type mentions the frame binder"});
        }
        current = *r.type;
    }
    return TypingResult::success(std::move(current));
}

}  // namespace ccbox
