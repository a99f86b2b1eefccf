#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccbox {

enum class AtomKind : std::uint8_t { Term, Type };

// A free variable name. Bound occurrences are de Bruijn indices, so every
// Atom in a tree is a free occurrence. Equality is (kind, id); the name is
// a display hint only.
class Atom {
public:
    Atom(std::uint64_t id, AtomKind kind, std::string name)
        : id_(id), kind_(kind), name_(std::move(name)) {}

    std::uint64_t id() const { return id_; }
    AtomKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    bool isTermVar() const { return kind_ == AtomKind::Term; }
    bool isTypeVar() const { return kind_ == AtomKind::Type; }

    friend bool operator==(const Atom& a, const Atom& b) {
        return a.id_ == b.id_ && a.kind_ == b.kind_;
    }
    friend bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }
    friend bool operator<(const Atom& a, const Atom& b) {
        if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
        return a.id_ < b.id_;
    }

    // Display form: the hint if present, otherwise a synthetic name.
    std::string display() const;

private:
    std::uint64_t id_;
    AtomKind kind_;
    std::string name_;
};

// Monotone counter handing out fresh atoms. Owned explicitly by whoever
// drives a pipeline (a machine run, a checker invocation, a test).
struct AtomSupply {
    std::uint64_t next = 0;

    Atom freshTerm(std::string name = "") {
        return Atom(next++, AtomKind::Term, std::move(name));
    }
    Atom freshType(std::string name = "") {
        return Atom(next++, AtomKind::Type, std::move(name));
    }
};

// Sorted-unique atom sets, kept as plain vectors (desk scale).
using AtomSet = std::vector<Atom>;

bool atomSetContains(const AtomSet& set, const Atom& a);
void atomSetInsert(AtomSet& set, const Atom& a);
void atomSetErase(AtomSet& set, const Atom& a);
AtomSet atomSetUnion(const AtomSet& a, const AtomSet& b);
bool atomSetSubset(const AtomSet& sub, const AtomSet& super);

// Smallest id strictly above every atom in the set; used to derive local
// fresh-name supplies (all judgments are equivariant).
std::uint64_t atomIdCeiling(const AtomSet& set);

}  // namespace ccbox
