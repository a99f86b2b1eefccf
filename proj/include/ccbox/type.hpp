#pragma once

#include <cstdint>
#include <memory>
#include <variant>

#include "ccbox/atom.hpp"
#include "ccbox/capture_set.hpp"

namespace ccbox {

struct TypeNode;

// Immutable shared handle to a type tree. Copies are cheap; all operations
// build new trees.
class Type {
public:
    explicit Type(TypeNode node);

    const TypeNode& node() const { return *node_; }

    template <typename T>
    const T* get() const;
    template <typename T>
    bool is() const;

    bool sameNode(const Type& other) const { return node_ == other.node_; }

private:
    std::shared_ptr<const TypeNode> node_;
};

// Raw type syntax, one inductive family for both capturing and pure types.
// Purity is the runtime predicate checkPure, not a separate syntax.
struct TVarBound {
    std::uint32_t index;  // de Bruijn index into enclosing type binders
};
struct TVarFree {
    Atom atom;  // kind Type
};
struct TopType {};
struct BoxType {
    Type inner;
};
struct CaptType {
    CaptureSet captures;
    Type pure;
};
struct ArrowType {
    Type param;
    Type result;  // binds term index 0 (dependent function type)
};
struct AllType {
    Type bound;   // expected pure
    Type result;  // binds type index 0
};

struct TypeNode {
    std::variant<TVarBound, TVarFree, TopType, BoxType, CaptType, ArrowType, AllType> v;
};

inline Type::Type(TypeNode node)
    : node_(std::make_shared<const TypeNode>(std::move(node))) {}

template <typename T>
const T* Type::get() const {
    return std::get_if<T>(&node_->v);
}
template <typename T>
bool Type::is() const {
    return std::holds_alternative<T>(node_->v);
}

// Factories.
Type topType();
Type tvar(Atom a);
Type tvarBound(std::uint32_t index);
Type boxOf(Type inner);
Type capt(CaptureSet c, Type pure);
Type arrow(Type param, Type result);
Type tall(Type bound, Type result);

// Structural equality; with locally-nameless binders this is α-equivalence.
bool operator==(const Type& a, const Type& b);
inline bool operator!=(const Type& a, const Type& b) { return !(a == b); }

}  // namespace ccbox
