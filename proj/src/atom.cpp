#include "ccbox/atom.hpp"

#include <algorithm>

namespace ccbox {

std::string Atom::display() const {
    if (!name_.empty()) return name_;
    return (kind_ == AtomKind::Term ? "v" : "V") + std::to_string(id_);
}

bool atomSetContains(const AtomSet& set, const Atom& a) {
    auto it = std::lower_bound(set.begin(), set.end(), a);
    return it != set.end() && *it == a;
}

void atomSetInsert(AtomSet& set, const Atom& a) {
    auto it = std::lower_bound(set.begin(), set.end(), a);
    if (it != set.end() && *it == a) return;
    set.insert(it, a);
}

void atomSetErase(AtomSet& set, const Atom& a) {
    auto it = std::lower_bound(set.begin(), set.end(), a);
    if (it != set.end() && *it == a) set.erase(it);
}

AtomSet atomSetUnion(const AtomSet& a, const AtomSet& b) {
    AtomSet out = a;
    for (const Atom& x : b) atomSetInsert(out, x);
    return out;
}

bool atomSetSubset(const AtomSet& sub, const AtomSet& super) {
    for (const Atom& x : sub) {
        if (!atomSetContains(super, x)) return false;
    }
    return true;
}

std::uint64_t atomIdCeiling(const AtomSet& set) {
    std::uint64_t ceiling = 0;
    for (const Atom& a : set) {
        if (a.id() >= ceiling) ceiling = a.id() + 1;
    }
    return ceiling;
}

}  // namespace ccbox
