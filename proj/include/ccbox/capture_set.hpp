#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccbox/atom.hpp"

namespace ccbox {

// A capture set C: free term atoms, bound term indices (only legal under a
// binder; local closure requires them gone), and the universal flag for {*}.
class CaptureSet {
public:
    CaptureSet() = default;

    static CaptureSet empty() { return CaptureSet(); }
    static CaptureSet universal() {
        CaptureSet c;
        c.universal_ = true;
        return c;
    }
    static CaptureSet ofAtom(const Atom& a);
    static CaptureSet ofAtoms(std::vector<Atom> atoms);
    static CaptureSet ofBound(std::uint32_t index);

    const AtomSet& frees() const { return frees_; }
    const std::vector<std::uint32_t>& bounds() const { return bounds_; }
    bool isUniversal() const { return universal_; }

    bool isEmpty() const { return frees_.empty() && bounds_.empty() && !universal_; }
    // Local closure: no dangling bound indices (the `capt` judgment).
    bool isLocallyClosed() const { return bounds_.empty(); }

    bool containsAtom(const Atom& a) const { return atomSetContains(frees_, a); }
    bool containsBound(std::uint32_t index) const;

    CaptureSet withAtom(const Atom& a) const;
    CaptureSet withBound(std::uint32_t index) const;
    CaptureSet withUniversal() const;
    CaptureSet unionWith(const CaptureSet& other) const;

    // Bound index `depth` becomes the free atom x (term-variable opening).
    CaptureSet openBound(std::uint32_t depth, const Atom& x) const;
    // Free atom x becomes bound index `depth` (closing).
    CaptureSet closeAtom(const Atom& x, std::uint32_t depth) const;
    // Every occurrence of `from` among the frees replaced by `to`.
    CaptureSet renameAtom(const Atom& from, const Atom& to) const;

    friend bool operator==(const CaptureSet& a, const CaptureSet& b) {
        return a.universal_ == b.universal_ && a.frees_ == b.frees_ &&
               a.bounds_ == b.bounds_;
    }
    friend bool operator!=(const CaptureSet& a, const CaptureSet& b) {
        return !(a == b);
    }

private:
    AtomSet frees_;
    std::vector<std::uint32_t> bounds_;
    bool universal_ = false;
};

}  // namespace ccbox
