#include "ccbox/classify.hpp"

#include "ccbox/binding.hpp"

namespace ccbox {

namespace {

// Classifier with a local fresh supply for the cofinite binder premises.
// All judgments here are equivariant, so one fresh atom per binder decides
// them.
struct Classifier {
    AtomSupply supply;

    bool pure(const Type& t) {
        if (t.is<TVarFree>() || t.is<TVarBound>() || t.is<TopType>()) return true;
        if (const auto* b = t.get<BoxType>()) return type(b->inner);
        if (const auto* a = t.get<ArrowType>()) {
            if (!type(a->param)) return false;
            Atom x = supply.freshTerm();
            return type(openTermVarInType(a->result, 0, x));
        }
        if (const auto* f = t.get<AllType>()) {
            if (!pure(f->bound)) return false;
            Atom tv = supply.freshType();
            return type(openTypeVarInType(f->result, 0, tvar(tv)));
        }
        return false;  // capture set at the root
    }

    bool type(const Type& t) {
        if (const auto* c = t.get<CaptType>()) {
            // C capt: no dangling indices survive once binders are opened.
            return c->captures.isLocallyClosed() && pure(c->pure);
        }
        return pure(t);  // injection from pure types
    }
};

Classifier classifierFor(const Type& t) {
    return Classifier{AtomSupply{atomIdCeiling(freeAtoms(t))}};
}

void collect(const CaptureSet& c, AtomSet& out) {
    for (const Atom& a : c.frees()) atomSetInsert(out, a);
}

void collect(const Type& t, AtomSet& out);

void collectVar(const Var& v, AtomSet& out) {
    if (v.isFree()) atomSetInsert(out, v.atom());
}

void collect(const Term& e, AtomSet& out) {
    if (const auto* v = e.get<VarTerm>()) {
        collectVar(v->var, out);
    } else if (const auto* a = e.get<AbsTerm>()) {
        collect(a->paramType, out);
        collect(a->body, out);
    } else if (const auto* f = e.get<TAbsTerm>()) {
        collect(f->bound, out);
        collect(f->body, out);
    } else if (const auto* b = e.get<BoxTerm>()) {
        collectVar(b->operand, out);
    } else if (const auto* ap = e.get<AppTerm>()) {
        collectVar(ap->fn, out);
        collectVar(ap->arg, out);
    } else if (const auto* ta = e.get<TAppTerm>()) {
        collectVar(ta->fn, out);
        collect(ta->typeArg, out);
    } else if (const auto* u = e.get<UnboxTerm>()) {
        collect(u->captures, out);
        collectVar(u->operand, out);
    } else if (const auto* l = e.get<LetTerm>()) {
        collect(l->bound, out);
        collect(l->body, out);
    }
}

void collect(const Type& t, AtomSet& out) {
    if (const auto* v = t.get<TVarFree>()) {
        atomSetInsert(out, v->atom);
    } else if (const auto* b = t.get<BoxType>()) {
        collect(b->inner, out);
    } else if (const auto* c = t.get<CaptType>()) {
        collect(c->captures, out);
        collect(c->pure, out);
    } else if (const auto* a = t.get<ArrowType>()) {
        collect(a->param, out);
        collect(a->result, out);
    } else if (const auto* f = t.get<AllType>()) {
        collect(f->bound, out);
        collect(f->result, out);
    }
}

}  // namespace

bool checkPure(const Type& t) { return classifierFor(t).pure(t); }

bool checkType(const Type& t) { return classifierFor(t).type(t); }

bool isValue(const Term& e) {
    return e.is<AbsTerm>() || e.is<TAbsTerm>() || e.is<BoxTerm>();
}

AtomSet freeAtoms(const Type& t) {
    AtomSet out;
    collect(t, out);
    return out;
}

AtomSet freeAtoms(const Term& e) {
    AtomSet out;
    collect(e, out);
    return out;
}

AtomSet freeAtoms(const CaptureSet& c) {
    AtomSet out;
    collect(c, out);
    return out;
}

}  // namespace ccbox
