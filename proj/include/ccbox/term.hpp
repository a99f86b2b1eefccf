#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>

#include "ccbox/atom.hpp"
#include "ccbox/capture_set.hpp"
#include "ccbox/type.hpp"

namespace ccbox {

// A variable occurrence: bound index or free atom. Elimination forms take
// a Var, never a compound term (monadic normal form by construction).
class Var {
public:
    static Var bound(std::uint32_t index) { return Var(index); }
    static Var free(Atom atom) { return Var(std::move(atom)); }

    bool isBound() const { return !atom_.has_value(); }
    bool isFree() const { return atom_.has_value(); }
    std::uint32_t index() const { return index_; }
    const Atom& atom() const { return *atom_; }

    friend bool operator==(const Var& a, const Var& b) {
        if (a.isBound() != b.isBound()) return false;
        return a.isBound() ? a.index_ == b.index_ : *a.atom_ == *b.atom_;
    }
    friend bool operator!=(const Var& a, const Var& b) { return !(a == b); }

private:
    explicit Var(std::uint32_t index) : index_(index) {}
    explicit Var(Atom atom) : index_(0), atom_(std::move(atom)) {}

    std::uint32_t index_;
    std::optional<Atom> atom_;
};

struct TermNode;

class Term {
public:
    explicit Term(TermNode node);

    const TermNode& node() const { return *node_; }

    template <typename T>
    const T* get() const;
    template <typename T>
    bool is() const;

    bool sameNode(const Term& other) const { return node_ == other.node_; }

private:
    std::shared_ptr<const TermNode> node_;
};

struct VarTerm {
    Var var;
};
struct AbsTerm {
    Type paramType;
    Term body;  // binds term index 0
};
struct TAbsTerm {
    Type bound;  // expected pure
    Term body;   // binds type index 0
};
struct BoxTerm {
    Var operand;
};
struct AppTerm {
    Var fn;
    Var arg;
};
struct TAppTerm {
    Var fn;
    Type typeArg;
};
struct UnboxTerm {
    CaptureSet captures;
    Var operand;
};
struct LetTerm {
    Term bound;
    Term body;  // binds term index 0
};

struct TermNode {
    std::variant<VarTerm, AbsTerm, TAbsTerm, BoxTerm, AppTerm, TAppTerm, UnboxTerm,
                 LetTerm>
        v;
};

inline Term::Term(TermNode node)
    : node_(std::make_shared<const TermNode>(std::move(node))) {}

template <typename T>
const T* Term::get() const {
    return std::get_if<T>(&node_->v);
}
template <typename T>
bool Term::is() const {
    return std::holds_alternative<T>(node_->v);
}

// Factories.
Term varTerm(Var v);
Term varTerm(Atom a);
Term varBound(std::uint32_t index);
Term abs(Type paramType, Term body);
Term tabs(Type bound, Term body);
Term boxVal(Var operand);
Term app(Var fn, Var arg);
Term tapp(Var fn, Type typeArg);
Term unbox(CaptureSet c, Var operand);
Term let(Term bound, Term body);

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

}  // namespace ccbox
