#include "ccbox/subtyping.hpp"

#include <algorithm>

#include "ccbox/binding.hpp"
#include "ccbox/classify.hpp"

namespace ccbox {

SplitType splitCapturing(const Type& t) {
    if (const auto* c = t.get<CaptType>()) return {c->captures, c->pure};
    return {CaptureSet::empty(), t};
}

namespace {

bool subcaptureAtom(const Env& g, const Atom& x, const CaptureSet& c2, AtomSet& path);

bool subcaptureWith(const Env& g, const CaptureSet& c1, const CaptureSet& c2,
                    AtomSet& path) {
    if (c2.isUniversal()) return true;  // everything sits below {*}
    if (c1.isUniversal()) return false;
    if (!c1.isLocallyClosed() || !c2.isLocallyClosed()) return false;
    for (const Atom& x : c1.frees()) {
        if (!subcaptureAtom(g, x, c2, path)) return false;
    }
    return true;
}

bool subcaptureAtom(const Env& g, const Atom& x, const CaptureSet& c2, AtomSet& path) {
    if (c2.containsAtom(x)) return true;
    // Cycle cut along the current expansion path only; sibling
    // derivations may expand through the same atom again. Well-formed
    // telescopes cannot cycle, so this guards raw environments.
    if (atomSetContains(path, x)) return false;
    std::optional<Type> bound = g.lookupTerm(x);
    if (!bound.has_value()) return false;
    atomSetInsert(path, x);
    // (SC-VAR): expand x into its declared capture set.
    bool derivable = subcaptureWith(g, splitCapturing(*bound).captures, c2, path);
    atomSetErase(path, x);
    return derivable;
}

}  // namespace

bool subcapture(const Env& g, const CaptureSet& c1, const CaptureSet& c2) {
    AtomSet path;
    return subcaptureWith(g, c1, c2, path);
}

std::optional<Type> exposePure(const Env& g, Type r) {
    AtomSet visited;
    while (const auto* v = r.get<TVarFree>()) {
        if (atomSetContains(visited, v->atom)) return std::nullopt;
        atomSetInsert(visited, v->atom);
        std::optional<Type> bound = g.lookupTypeBound(v->atom);
        if (!bound.has_value()) return std::nullopt;
        r = *bound;
    }
    return r;
}

namespace {

std::uint64_t ceilingOf(const Env& g, const Type& a, const Type& b) {
    std::uint64_t c = atomIdCeiling(g.domain());
    for (const Binding& bind : g.bindings()) {
        const Type& t = std::holds_alternative<TermBinding>(bind)
                            ? std::get<TermBinding>(bind).type
                            : std::get<TypeBinding>(bind).bound;
        c = std::max(c, atomIdCeiling(freeAtoms(t)));
    }
    c = std::max(c, atomIdCeiling(freeAtoms(a)));
    c = std::max(c, atomIdCeiling(freeAtoms(b)));
    return c;
}

bool subtypeWith(const Env& g, const Type& t1, const Type& t2, AtomSupply& fresh);

// Both sides pure (capture sets already compared).
bool pureSubtype(const Env& g, const Type& r1, const Type& r2, AtomSupply& fresh) {
    if (r2.is<TopType>()) return true;  // (SUB-TOP)
    if (const auto* v1 = r1.get<TVarFree>()) {
        if (const auto* v2 = r2.get<TVarFree>()) {
            if (v1->atom == v2->atom) return true;  // (SUB-REFL-TVAR)
        }
        // (SUB-TRANS-TVAR): widen to the declared bound and retry.
        std::optional<Type> bound = g.lookupTypeBound(v1->atom);
        if (!bound.has_value()) return false;
        return pureSubtype(g, *bound, r2, fresh);
    }
    if (const auto* b1 = r1.get<BoxType>()) {
        const auto* b2 = r2.get<BoxType>();
        return b2 != nullptr && subtypeWith(g, b1->inner, b2->inner, fresh);  // (SUB-BOX)
    }
    if (const auto* a1 = r1.get<ArrowType>()) {
        const auto* a2 = r2.get<ArrowType>();
        if (a2 == nullptr) return false;
        // (SUB-FUN): contravariant parameters; results compared opened
        // with one fresh atom bound at the supertype's parameter type.
        if (!subtypeWith(g, a2->param, a1->param, fresh)) return false;
        Atom x = fresh.freshTerm();
        Env inner = g.extendedTerm(x, a2->param);
        return subtypeWith(inner, openTermVarInType(a1->result, 0, x),
                           openTermVarInType(a2->result, 0, x), fresh);
    }
    if (const auto* f1 = r1.get<AllType>()) {
        const auto* f2 = r2.get<AllType>();
        if (f2 == nullptr) return false;
        // (SUB-TFUN): contravariant pure bounds; results under X <: bound2.
        if (!pureSubtype(g, f2->bound, f1->bound, fresh)) return false;
        Atom tv = fresh.freshType();
        Env inner = g.extendedType(tv, f2->bound);
        Type x = tvar(tv);
        return subtypeWith(inner, openTypeVarInType(f1->result, 0, x),
                           openTypeVarInType(f2->result, 0, x), fresh);
    }
    return false;
}

bool subtypeWith(const Env& g, const Type& t1, const Type& t2, AtomSupply& fresh) {
    // (SUB-CAPT) with the pure/type injection: a bare pure type compares
    // as if it carried the empty capture set.
    SplitType s1 = splitCapturing(t1);
    SplitType s2 = splitCapturing(t2);
    if (!subcapture(g, s1.captures, s2.captures)) return false;
    return pureSubtype(g, s1.pure, s2.pure, fresh);
}

}  // namespace

bool subtype(const Env& g, const Type& t1, const Type& t2) {
    AtomSupply fresh{ceilingOf(g, t1, t2)};
    return subtypeWith(g, t1, t2, fresh);
}

}  // namespace ccbox
