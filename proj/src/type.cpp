#include "ccbox/type.hpp"

namespace ccbox {

Type topType() { return Type(TypeNode{TopType{}}); }
Type tvar(Atom a) { return Type(TypeNode{TVarFree{std::move(a)}}); }
Type tvarBound(std::uint32_t index) { return Type(TypeNode{TVarBound{index}}); }
Type boxOf(Type inner) { return Type(TypeNode{BoxType{std::move(inner)}}); }
Type capt(CaptureSet c, Type pure) {
    return Type(TypeNode{CaptType{std::move(c), std::move(pure)}});
}
Type arrow(Type param, Type result) {
    return Type(TypeNode{ArrowType{std::move(param), std::move(result)}});
}
Type tall(Type bound, Type result) {
    return Type(TypeNode{AllType{std::move(bound), std::move(result)}});
}

bool operator==(const Type& a, const Type& b) {
    if (a.sameNode(b)) return true;
    if (a.node().v.index() != b.node().v.index()) return false;
    if (const auto* x = a.get<TVarBound>()) return x->index == b.get<TVarBound>()->index;
    if (const auto* x = a.get<TVarFree>()) return x->atom == b.get<TVarFree>()->atom;
    if (a.is<TopType>()) return true;
    if (const auto* x = a.get<BoxType>()) return x->inner == b.get<BoxType>()->inner;
    if (const auto* x = a.get<CaptType>()) {
        const auto* y = b.get<CaptType>();
        return x->captures == y->captures && x->pure == y->pure;
    }
    if (const auto* x = a.get<ArrowType>()) {
        const auto* y = b.get<ArrowType>();
        return x->param == y->param && x->result == y->result;
    }
    const auto* x = a.get<AllType>();
    const auto* y = b.get<AllType>();
    return x->bound == y->bound && x->result == y->result;
}

}  // namespace ccbox
