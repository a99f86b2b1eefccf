#include "ccbox/term.hpp"

namespace ccbox {

Term varTerm(Var v) { return Term(TermNode{VarTerm{std::move(v)}}); }
Term varTerm(Atom a) { return varTerm(Var::free(std::move(a))); }
Term varBound(std::uint32_t index) { return varTerm(Var::bound(index)); }
Term abs(Type paramType, Term body) {
    return Term(TermNode{AbsTerm{std::move(paramType), std::move(body)}});
}
Term tabs(Type bound, Term body) {
    return Term(TermNode{TAbsTerm{std::move(bound), std::move(body)}});
}
Term boxVal(Var operand) { return Term(TermNode{BoxTerm{std::move(operand)}}); }
Term app(Var fn, Var arg) { return Term(TermNode{AppTerm{std::move(fn), std::move(arg)}}); }
Term tapp(Var fn, Type typeArg) {
    return Term(TermNode{TAppTerm{std::move(fn), std::move(typeArg)}});
}
Term unbox(CaptureSet c, Var operand) {
    return Term(TermNode{UnboxTerm{std::move(c), std::move(operand)}});
}
Term let(Term bound, Term body) {
    return Term(TermNode{LetTerm{std::move(bound), std::move(body)}});
}

bool operator==(const Term& a, const Term& b) {
    if (a.sameNode(b)) return true;
    if (a.node().v.index() != b.node().v.index()) return false;
    if (const auto* x = a.get<VarTerm>()) return x->var == b.get<VarTerm>()->var;
    if (const auto* x = a.get<AbsTerm>()) {
        const auto* y = b.get<AbsTerm>();
        return x->paramType == y->paramType && x->body == y->body;
    }
    if (const auto* x = a.get<TAbsTerm>()) {
        const auto* y = b.get<TAbsTerm>();
        return x->bound == y->bound && x->body == y->body;
    }
    if (const auto* x = a.get<BoxTerm>()) return x->operand == b.get<BoxTerm>()->operand;
    if (const auto* x = a.get<AppTerm>()) {
        const auto* y = b.get<AppTerm>();
        return x->fn == y->fn && x->arg == y->arg;
    }
    if (const auto* x = a.get<TAppTerm>()) {
        const auto* y = b.get<TAppTerm>();
        return x->fn == y->fn && x->typeArg == y->typeArg;
    }
    if (const auto* x = a.get<UnboxTerm>()) {
        const auto* y = b.get<UnboxTerm>();
        return x->captures == y->captures && x->operand == y->operand;
    }
    const auto* x = a.get<LetTerm>();
    const auto* y = b.get<LetTerm>();
    return x->bound == y->bound && x->body == y->body;
}

}  // namespace ccbox
