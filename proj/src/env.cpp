#include "ccbox/env.hpp"

#include <stdexcept>

#include "ccbox/binding.hpp"
#include "ccbox/classify.hpp"

namespace ccbox {

const Atom& bindingAtom(const Binding& b) {
    if (const auto* t = std::get_if<TermBinding>(&b)) return t->atom;
    return std::get<TypeBinding>(b).atom;
}

Env Env::extended(Binding b) const {
    const Atom& a = bindingAtom(b);
    if (contains(a)) {
        throw std::invalid_argument("atom already bound: " + a.display());
    }
    bool kindOk = std::holds_alternative<TermBinding>(b) ? a.isTermVar() : a.isTypeVar();
    if (!kindOk) {
        throw std::invalid_argument("binding kind does not match atom kind: " + a.display());
    }
    Env out = *this;
    out.bindings_.push_back(std::move(b));
    return out;
}

Env Env::prefix(std::size_t n) const {
    Env out;
    out.bindings_.assign(bindings_.begin(), bindings_.begin() + static_cast<long>(n));
    return out;
}

bool Env::contains(const Atom& a) const {
    for (const Binding& b : bindings_) {
        if (bindingAtom(b) == a) return true;
    }
    return false;
}

std::optional<Type> Env::lookupTerm(const Atom& x) const {
    for (const Binding& b : bindings_) {
        if (const auto* t = std::get_if<TermBinding>(&b)) {
            if (t->atom == x) return t->type;
        }
    }
    return std::nullopt;
}

std::optional<Type> Env::lookupTypeBound(const Atom& x) const {
    for (const Binding& b : bindings_) {
        if (const auto* t = std::get_if<TypeBinding>(&b)) {
            if (t->atom == x) return t->bound;
        }
    }
    return std::nullopt;
}

AtomSet Env::domain() const {
    AtomSet out;
    for (const Binding& b : bindings_) atomSetInsert(out, bindingAtom(b));
    return out;
}

namespace {

std::uint64_t envAtomCeiling(const Env& g) {
    std::uint64_t ceiling = atomIdCeiling(g.domain());
    for (const Binding& b : g.bindings()) {
        const Type& t = std::holds_alternative<TermBinding>(b)
                            ? std::get<TermBinding>(b).type
                            : std::get<TypeBinding>(b).bound;
        std::uint64_t c = atomIdCeiling(freeAtoms(t));
        if (c > ceiling) ceiling = c;
    }
    return ceiling;
}

bool wfCaptureSet(const Env& g, const CaptureSet& c) {
    // C ⊆ dom(Γ) ∪ {*}; dangling indices are never well-formed.
    if (!c.isLocallyClosed()) return false;
    for (const Atom& a : c.frees()) {
        if (!g.lookupTerm(a).has_value()) return false;
    }
    return true;
}

bool wfWith(const Env& g, const Type& t, AtomSupply& fresh) {
    if (t.is<TopType>()) return true;
    if (t.is<TVarBound>()) return false;  // dangling
    if (const auto* v = t.get<TVarFree>()) {
        return g.lookupTypeBound(v->atom).has_value();
    }
    if (const auto* b = t.get<BoxType>()) {
        return wfWith(g, b->inner, fresh);
    }
    if (const auto* c = t.get<CaptType>()) {
        return wfCaptureSet(g, c->captures) && checkPure(c->pure) &&
               wfWith(g, c->pure, fresh);
    }
    if (const auto* a = t.get<ArrowType>()) {
        if (!wfWith(g, a->param, fresh)) return false;
        // The parameter goes into scope for the result, so the result's
        // capture sets may mention it.
        Atom x = fresh.freshTerm();
        return wfWith(g.extendedTerm(x, a->param),
                      openTermVarInType(a->result, 0, x), fresh);
    }
    const auto* f = t.get<AllType>();
    if (!checkPure(f->bound) || !wfWith(g, f->bound, fresh)) return false;
    Atom tv = fresh.freshType();
    return wfWith(g.extendedType(tv, f->bound), openTypeVarInType(f->result, 0, tvar(tv)),
                  fresh);
}

}  // namespace

bool wfType(const Env& g, const Type& t) {
    std::uint64_t ceiling = std::max(envAtomCeiling(g), atomIdCeiling(freeAtoms(t)));
    AtomSupply fresh{ceiling};
    return wfWith(g, t, fresh);
}

bool wfEnv(const Env& g) {
    AtomSet seen;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Binding& b = g.at(i);
        const Atom& a = bindingAtom(b);
        if (atomSetContains(seen, a)) return false;
        atomSetInsert(seen, a);
        Env pre = g.prefix(i);
        if (const auto* tb = std::get_if<TermBinding>(&b)) {
            if (!a.isTermVar()) return false;
            if (!checkType(tb->type) || !wfType(pre, tb->type)) return false;
        } else {
            const auto& yb = std::get<TypeBinding>(b);
            if (!a.isTypeVar()) return false;
            if (!checkPure(yb.bound) || !wfType(pre, yb.bound)) return false;
        }
    }
    return true;
}

}  // namespace ccbox
