#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ccbox/atom.hpp"
#include "ccbox/type.hpp"

namespace ccbox {

struct TermBinding {
    Atom atom;  // kind Term
    Type type;  // expected to satisfy checkType
};
struct TypeBinding {
    Atom atom;   // kind Type
    Type bound;  // expected pure
};
using Binding = std::variant<TermBinding, TypeBinding>;

const Atom& bindingAtom(const Binding& b);

// Ordered telescope of bindings, leftmost oldest. Extension is persistent
// and rejects duplicate atoms; lookup is a linear scan.
class Env {
public:
    Env() = default;

    // Throws std::invalid_argument if the atom is already bound or the
    // binding kind does not match the atom kind.
    Env extended(Binding b) const;
    Env extendedTerm(Atom x, Type t) const { return extended(TermBinding{std::move(x), std::move(t)}); }
    Env extendedType(Atom x, Type bound) const { return extended(TypeBinding{std::move(x), std::move(bound)}); }

    std::size_t size() const { return bindings_.size(); }
    bool isEmpty() const { return bindings_.empty(); }
    const std::vector<Binding>& bindings() const { return bindings_; }
    const Binding& at(std::size_t i) const { return bindings_[i]; }
    Env prefix(std::size_t n) const;

    bool contains(const Atom& a) const;
    std::optional<Type> lookupTerm(const Atom& x) const;
    std::optional<Type> lookupTypeBound(const Atom& x) const;

    AtomSet domain() const;

private:
    std::vector<Binding> bindings_;
};

// Γ ⊢ T wf: capture sets drawn from dom(Γ) ∪ {*}, pure parts pure, type
// variables bound; binder bodies checked opened with a fresh atom under
// the extended environment.
bool wfType(const Env& g, const Type& t);

// Every binding well-formed in its strict prefix, atoms distinct, type
// bounds pure.
bool wfEnv(const Env& g);

}  // namespace ccbox
