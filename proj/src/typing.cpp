#include "ccbox/typing.hpp"

#include <algorithm>

#include "ccbox/binding.hpp"
#include "ccbox/classify.hpp"
#include "ccbox/printer.hpp"
#include "ccbox/subtyping.hpp"

namespace ccbox {

const char* typingErrorKindName(TypingErrorKind kind) {
    switch (kind) {
        case TypingErrorKind::UnboundVariable: return "UnboundVariable";
        case TypingErrorKind::NotAFunction: return "NotAFunction";
        case TypingErrorKind::NotATypeFunction: return "NotATypeFunction";
        case TypingErrorKind::NotABox: return "NotABox";
        case TypingErrorKind::ArgumentMismatch: return "ArgumentMismatch";
        case TypingErrorKind::ImpureTypeArgument: return "ImpureTypeArgument";
        case TypingErrorKind::UniversalInstantiation: return "UniversalInstantiation";
        case TypingErrorKind::EscapingVariable: return "EscapingVariable";
        case TypingErrorKind::IllFormedAnnotation: return "IllFormedAnnotation";
        case TypingErrorKind::UnboxCaptureMismatch: return "UnboxCaptureMismatch";
    }
    return "?";
}

CaptureSet cv(const Term& e) {
    if (const auto* v = e.get<VarTerm>()) {
        if (v->var.isFree()) return CaptureSet::ofAtom(v->var.atom());
        return CaptureSet::empty();  // bound occurrence: dropped by its binder
    }
    if (const auto* a = e.get<AbsTerm>()) return cv(a->body);
    if (const auto* f = e.get<TAbsTerm>()) return cv(f->body);
    if (e.is<BoxTerm>()) return CaptureSet::empty();  // capture tunneling
    if (const auto* ap = e.get<AppTerm>()) {
        CaptureSet c;
        if (ap->fn.isFree()) c = c.withAtom(ap->fn.atom());
        if (ap->arg.isFree()) c = c.withAtom(ap->arg.atom());
        return c;
    }
    if (const auto* ta = e.get<TAppTerm>()) {
        return ta->fn.isFree() ? CaptureSet::ofAtom(ta->fn.atom()) : CaptureSet::empty();
    }
    if (const auto* u = e.get<UnboxTerm>()) {
        CaptureSet c = u->captures;
        if (u->operand.isFree()) c = c.withAtom(u->operand.atom());
        return c;
    }
    const auto* l = e.get<LetTerm>();
    return cv(l->bound).unionWith(cv(l->body));
}

namespace {

struct Infer {
    AtomSupply supply;

    static TypingResult fail(TypingErrorKind kind, TermPath path, std::string detail) {
        return TypingResult::failure(TypingError{kind, std::move(path), std::move(detail)});
    }

    // The VAR rule: a variable types with the precise singleton capture
    // set over its binding's pure part.
    TypingResult varRule(const Env& g, const Var& v, const TermPath& path) {
        if (v.isBound()) {
            return fail(TypingErrorKind::UnboundVariable, path,
                        "dangling bound variable #" + std::to_string(v.index()));
        }
        std::optional<Type> bound = g.lookupTerm(v.atom());
        if (!bound.has_value()) {
            return fail(TypingErrorKind::UnboundVariable, path,
                        "variable not in scope: " + v.atom().display());
        }
        SplitType s = splitCapturing(*bound);
        return TypingResult::success(capt(CaptureSet::ofAtom(v.atom()), s.pure));
    }

    TypingResult infer(const Env& g, const Term& e, TermPath& path) {
        if (const auto* v = e.get<VarTerm>()) return varRule(g, v->var, path);

        if (const auto* a = e.get<AbsTerm>()) {
            if (!checkType(a->paramType) || !wfType(g, a->paramType)) {
                return fail(TypingErrorKind::IllFormedAnnotation, path,
                            "parameter type is not well-formed: " +
                                prettyPrint(a->paramType));
            }
            Atom x = supply.freshTerm();
            path.push_back(0);
            TypingResult body = infer(g.extendedTerm(x, a->paramType),
                                      openTermVarInTerm(a->body, 0, x), path);
            path.pop_back();
            if (!body.ok()) return body;
            Type result = arrow(a->paramType, closeTermVarInType(*body.type, x, 0));
            return TypingResult::success(capt(cv(e), result));
        }

        if (const auto* f = e.get<TAbsTerm>()) {
            if (!checkPure(f->bound) || !wfType(g, f->bound)) {
                return fail(TypingErrorKind::IllFormedAnnotation, path,
                            "type bound must be a well-formed pure type: " +
                                prettyPrint(f->bound));
            }
            Atom tv = supply.freshType();
            path.push_back(0);
            TypingResult body = infer(g.extendedType(tv, f->bound),
                                      openTypeVarInTerm(f->body, 0, tvar(tv)), path);
            path.pop_back();
            if (!body.ok()) return body;
            Type result = tall(f->bound, closeTypeVarInType(*body.type, tv, 0));
            return TypingResult::success(capt(cv(e), result));
        }

        if (const auto* b = e.get<BoxTerm>()) {
            TypingResult operand = varRule(g, b->operand, path);
            if (!operand.ok()) return operand;
            // □x seals the singleton capture set; the box itself is pure.
            return TypingResult::success(capt(CaptureSet::empty(), boxOf(*operand.type)));
        }

        if (const auto* ap = e.get<AppTerm>()) {
            TypingResult fn = varRule(g, ap->fn, path);
            if (!fn.ok()) return fn;
            std::optional<Type> head = exposePure(g, splitCapturing(*fn.type).pure);
            const ArrowType* arr = head ? head->get<ArrowType>() : nullptr;
            if (arr == nullptr) {
                return fail(TypingErrorKind::NotAFunction, path,
                            "applied variable is not a function: " + prettyPrint(*fn.type));
            }
            TypingResult arg = varRule(g, ap->arg, path);
            if (!arg.ok()) return arg;
            if (!subtype(g, *arg.type, arr->param)) {
                return fail(TypingErrorKind::ArgumentMismatch, path,
                            "argument type " + prettyPrint(*arg.type) +
                                " is not a subtype of " + prettyPrint(arr->param));
            }
            return TypingResult::success(openTermVarInType(arr->result, 0, ap->arg.atom()));
        }

        if (const auto* ta = e.get<TAppTerm>()) {
            TypingResult fn = varRule(g, ta->fn, path);
            if (!fn.ok()) return fn;
            std::optional<Type> head = exposePure(g, splitCapturing(*fn.type).pure);
            const AllType* all = head ? head->get<AllType>() : nullptr;
            if (all == nullptr) {
                return fail(TypingErrorKind::NotATypeFunction, path,
                            "instantiated variable is not a type function: " +
                                prettyPrint(*fn.type));
            }
            if (const auto* c = ta->typeArg.get<CaptType>()) {
                // Type arguments must be pure; a universal capture set at
                // the top is the specific leak the restriction exists for.
                if (c->captures.isUniversal()) {
                    return fail(TypingErrorKind::UniversalInstantiation, path,
                                "type argument carries the universal capture set: " +
                                    prettyPrint(ta->typeArg));
                }
                return fail(TypingErrorKind::ImpureTypeArgument, path,
                            "type argument is not pure: " + prettyPrint(ta->typeArg));
            }
            if (!checkPure(ta->typeArg)) {
                return fail(TypingErrorKind::ImpureTypeArgument, path,
                            "type argument is not pure: " + prettyPrint(ta->typeArg));
            }
            if (!wfType(g, ta->typeArg)) {
                return fail(TypingErrorKind::IllFormedAnnotation, path,
                            "type argument is not well-formed: " + prettyPrint(ta->typeArg));
            }
            if (!subtype(g, ta->typeArg, all->bound)) {
                return fail(TypingErrorKind::ArgumentMismatch, path,
                            "type argument " + prettyPrint(ta->typeArg) +
                                " does not conform to bound " + prettyPrint(all->bound));
            }
            return TypingResult::success(openTypeVarInType(all->result, 0, ta->typeArg));
        }

        if (const auto* u = e.get<UnboxTerm>()) {
            TypingResult operand = varRule(g, u->operand, path);
            if (!operand.ok()) return operand;
            std::optional<Type> head = exposePure(g, splitCapturing(*operand.type).pure);
            const BoxType* box = head ? head->get<BoxType>() : nullptr;
            if (box == nullptr) {
                return fail(TypingErrorKind::NotABox, path,
                            "unboxed variable is not a box: " + prettyPrint(*operand.type));
            }
            if (!u->captures.isLocallyClosed()) {
                return fail(TypingErrorKind::IllFormedAnnotation, path,
                            "unbox annotation has dangling indices");
            }
            for (const Atom& a : u->captures.frees()) {
                if (!g.lookupTerm(a).has_value()) {
                    return fail(TypingErrorKind::IllFormedAnnotation, path,
                                "unbox annotation mentions a variable not in scope: " +
                                    a.display());
                }
            }
            SplitType inner = splitCapturing(box->inner);
            if (!subcapture(g, inner.captures, u->captures)) {
                return fail(TypingErrorKind::UnboxCaptureMismatch, path,
                            "annotation " + prettyPrint(u->captures) +
                                " does not cover the boxed capture set " +
                                prettyPrint(inner.captures));
            }
            return TypingResult::success(capt(u->captures, inner.pure));
        }

        const auto* l = e.get<LetTerm>();
        path.push_back(0);
        TypingResult bound = infer(g, l->bound, path);
        path.pop_back();
        if (!bound.ok()) return bound;
        Atom x = supply.freshTerm();
        path.push_back(1);
        TypingResult body =
            infer(g.extendedTerm(x, *bound.type), openTermVarInTerm(l->body, 0, x), path);
        path.pop_back();
        if (!body.ok()) return body;
        if (atomSetContains(freeAtoms(*body.type), x)) {
            // Avoidance: no minimal avoiding supertype is computed.
            return fail(TypingErrorKind::EscapingVariable, path,
                        "let-bound variable escapes in the body type: " +
                            prettyPrint(*body.type));
        }
        return TypingResult::success(*body.type);
    }
};

std::uint64_t inferCeiling(const Env& g, const Term& e) {
    std::uint64_t c = atomIdCeiling(g.domain());
    for (const Binding& b : g.bindings()) {
        const Type& t = std::holds_alternative<TermBinding>(b)
                            ? std::get<TermBinding>(b).type
                            : std::get<TypeBinding>(b).bound;
        c = std::max(c, atomIdCeiling(freeAtoms(t)));
    }
    return std::max(c, atomIdCeiling(freeAtoms(e)));
}

}  // namespace

TypingResult inferType(const Env& g, const Term& e) {
    Infer infer{AtomSupply{inferCeiling(g, e)}};
    TermPath path;
    return infer.infer(g, e, path);
}

bool checkAgainst(const Env& g, const Term& e, const Type& t) {
    TypingResult r = inferType(g, e);
    return r.ok() && subtype(g, *r.type, t);
}

}  // namespace ccbox
