#include "ccbox/binding.hpp"

namespace ccbox {

Type openTypeVarInType(const Type& t, std::uint32_t depth, const Type& r) {
    if (const auto* v = t.get<TVarBound>()) {
        return v->index == depth ? r : t;
    }
    if (t.is<TVarFree>() || t.is<TopType>()) return t;
    if (const auto* b = t.get<BoxType>()) {
        return boxOf(openTypeVarInType(b->inner, depth, r));
    }
    if (const auto* c = t.get<CaptType>()) {
        // capture sets hold term indices only
        return capt(c->captures, openTypeVarInType(c->pure, depth, r));
    }
    if (const auto* a = t.get<ArrowType>()) {
        return arrow(openTypeVarInType(a->param, depth, r),
                     openTypeVarInType(a->result, depth, r));
    }
    const auto* f = t.get<AllType>();
    return tall(openTypeVarInType(f->bound, depth, r),
                openTypeVarInType(f->result, depth + 1, r));
}

Type openTermVarInType(const Type& t, std::uint32_t depth, const Atom& x) {
    if (t.is<TVarBound>() || t.is<TVarFree>() || t.is<TopType>()) return t;
    if (const auto* b = t.get<BoxType>()) {
        return boxOf(openTermVarInType(b->inner, depth, x));
    }
    if (const auto* c = t.get<CaptType>()) {
        return capt(c->captures.openBound(depth, x), openTermVarInType(c->pure, depth, x));
    }
    if (const auto* a = t.get<ArrowType>()) {
        return arrow(openTermVarInType(a->param, depth, x),
                     openTermVarInType(a->result, depth + 1, x));
    }
    const auto* f = t.get<AllType>();
    return tall(openTermVarInType(f->bound, depth, x),
                openTermVarInType(f->result, depth, x));
}

namespace {

Var openVar(const Var& v, std::uint32_t depth, const Atom& x) {
    if (v.isBound() && v.index() == depth) return Var::free(x);
    return v;
}

Var closeVar(const Var& v, const Atom& x, std::uint32_t depth) {
    if (v.isFree() && v.atom() == x) return Var::bound(depth);
    return v;
}

}  // namespace

Term openTermVarInTerm(const Term& e, std::uint32_t depth, const Atom& x) {
    if (const auto* v = e.get<VarTerm>()) {
        return varTerm(openVar(v->var, depth, x));
    }
    if (const auto* a = e.get<AbsTerm>()) {
        return abs(openTermVarInType(a->paramType, depth, x),
                   openTermVarInTerm(a->body, depth + 1, x));
    }
    if (const auto* f = e.get<TAbsTerm>()) {
        return tabs(openTermVarInType(f->bound, depth, x),
                    openTermVarInTerm(f->body, depth, x));
    }
    if (const auto* b = e.get<BoxTerm>()) {
        return boxVal(openVar(b->operand, depth, x));
    }
    if (const auto* ap = e.get<AppTerm>()) {
        return app(openVar(ap->fn, depth, x), openVar(ap->arg, depth, x));
    }
    if (const auto* ta = e.get<TAppTerm>()) {
        return tapp(openVar(ta->fn, depth, x), openTermVarInType(ta->typeArg, depth, x));
    }
    if (const auto* u = e.get<UnboxTerm>()) {
        return unbox(u->captures.openBound(depth, x), openVar(u->operand, depth, x));
    }
    const auto* l = e.get<LetTerm>();
    return let(openTermVarInTerm(l->bound, depth, x),
               openTermVarInTerm(l->body, depth + 1, x));
}

Term openTypeVarInTerm(const Term& e, std::uint32_t depth, const Type& r) {
    if (e.is<VarTerm>() || e.is<BoxTerm>() || e.is<AppTerm>()) return e;
    if (const auto* a = e.get<AbsTerm>()) {
        return abs(openTypeVarInType(a->paramType, depth, r),
                   openTypeVarInTerm(a->body, depth, r));
    }
    if (const auto* f = e.get<TAbsTerm>()) {
        return tabs(openTypeVarInType(f->bound, depth, r),
                    openTypeVarInTerm(f->body, depth + 1, r));
    }
    if (const auto* ta = e.get<TAppTerm>()) {
        return tapp(ta->fn, openTypeVarInType(ta->typeArg, depth, r));
    }
    if (e.is<UnboxTerm>()) return e;  // capture sets never mention type variables
    const auto* l = e.get<LetTerm>();
    return let(openTypeVarInTerm(l->bound, depth, r), openTypeVarInTerm(l->body, depth, r));
}

Type closeTypeVarInType(const Type& t, const Atom& x, std::uint32_t depth) {
    if (const auto* v = t.get<TVarFree>()) {
        return v->atom == x ? tvarBound(depth) : t;
    }
    if (t.is<TVarBound>() || t.is<TopType>()) return t;
    if (const auto* b = t.get<BoxType>()) {
        return boxOf(closeTypeVarInType(b->inner, x, depth));
    }
    if (const auto* c = t.get<CaptType>()) {
        return capt(c->captures, closeTypeVarInType(c->pure, x, depth));
    }
    if (const auto* a = t.get<ArrowType>()) {
        return arrow(closeTypeVarInType(a->param, x, depth),
                     closeTypeVarInType(a->result, x, depth));
    }
    const auto* f = t.get<AllType>();
    return tall(closeTypeVarInType(f->bound, x, depth),
                closeTypeVarInType(f->result, x, depth + 1));
}

Type closeTermVarInType(const Type& t, const Atom& x, std::uint32_t depth) {
    if (t.is<TVarBound>() || t.is<TVarFree>() || t.is<TopType>()) return t;
    if (const auto* b = t.get<BoxType>()) {
        return boxOf(closeTermVarInType(b->inner, x, depth));
    }
    if (const auto* c = t.get<CaptType>()) {
        return capt(c->captures.closeAtom(x, depth), closeTermVarInType(c->pure, x, depth));
    }
    if (const auto* a = t.get<ArrowType>()) {
        return arrow(closeTermVarInType(a->param, x, depth),
                     closeTermVarInType(a->result, x, depth + 1));
    }
    const auto* f = t.get<AllType>();
    return tall(closeTermVarInType(f->bound, x, depth),
                closeTermVarInType(f->result, x, depth));
}

Term closeTermVarInTerm(const Term& e, const Atom& x, std::uint32_t depth) {
    if (const auto* v = e.get<VarTerm>()) {
        return varTerm(closeVar(v->var, x, depth));
    }
    if (const auto* a = e.get<AbsTerm>()) {
        return abs(closeTermVarInType(a->paramType, x, depth),
                   closeTermVarInTerm(a->body, x, depth + 1));
    }
    if (const auto* f = e.get<TAbsTerm>()) {
        return tabs(closeTermVarInType(f->bound, x, depth),
                    closeTermVarInTerm(f->body, x, depth));
    }
    if (const auto* b = e.get<BoxTerm>()) {
        return boxVal(closeVar(b->operand, x, depth));
    }
    if (const auto* ap = e.get<AppTerm>()) {
        return app(closeVar(ap->fn, x, depth), closeVar(ap->arg, x, depth));
    }
    if (const auto* ta = e.get<TAppTerm>()) {
        return tapp(closeVar(ta->fn, x, depth), closeTermVarInType(ta->typeArg, x, depth));
    }
    if (const auto* u = e.get<UnboxTerm>()) {
        return unbox(u->captures.closeAtom(x, depth), closeVar(u->operand, x, depth));
    }
    const auto* l = e.get<LetTerm>();
    return let(closeTermVarInTerm(l->bound, x, depth),
               closeTermVarInTerm(l->body, x, depth + 1));
}

CaptureSet substAtomInCaptureSet(const CaptureSet& c, const Atom& from, const Atom& to) {
    return c.renameAtom(from, to);
}

Type substTypeAtomInType(const Type& t, const Atom& from, const Type& r) {
    if (const auto* v = t.get<TVarFree>()) {
        return v->atom == from ? r : t;
    }
    if (t.is<TVarBound>() || t.is<TopType>()) return t;
    if (const auto* b = t.get<BoxType>()) {
        return boxOf(substTypeAtomInType(b->inner, from, r));
    }
    if (const auto* c = t.get<CaptType>()) {
        return capt(c->captures, substTypeAtomInType(c->pure, from, r));
    }
    if (const auto* a = t.get<ArrowType>()) {
        return arrow(substTypeAtomInType(a->param, from, r),
                     substTypeAtomInType(a->result, from, r));
    }
    const auto* f = t.get<AllType>();
    return tall(substTypeAtomInType(f->bound, from, r),
                substTypeAtomInType(f->result, from, r));
}

}  // namespace ccbox
