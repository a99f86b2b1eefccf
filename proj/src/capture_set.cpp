#include "ccbox/capture_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccbox {

CaptureSet CaptureSet::ofAtom(const Atom& a) {
    return CaptureSet().withAtom(a);
}

CaptureSet CaptureSet::ofAtoms(std::vector<Atom> atoms) {
    CaptureSet c;
    for (const Atom& a : atoms) c = c.withAtom(a);
    return c;
}

CaptureSet CaptureSet::ofBound(std::uint32_t index) {
    return CaptureSet().withBound(index);
}

bool CaptureSet::containsBound(std::uint32_t index) const {
    return std::binary_search(bounds_.begin(), bounds_.end(), index);
}

CaptureSet CaptureSet::withAtom(const Atom& a) const {
    if (!a.isTermVar()) throw std::invalid_argument("capture sets hold term atoms only");
    CaptureSet out = *this;
    atomSetInsert(out.frees_, a);
    return out;
}

CaptureSet CaptureSet::withBound(std::uint32_t index) const {
    CaptureSet out = *this;
    auto it = std::lower_bound(out.bounds_.begin(), out.bounds_.end(), index);
    if (it == out.bounds_.end() || *it != index) out.bounds_.insert(it, index);
    return out;
}

CaptureSet CaptureSet::withUniversal() const {
    CaptureSet out = *this;
    out.universal_ = true;
    return out;
}

CaptureSet CaptureSet::unionWith(const CaptureSet& other) const {
    CaptureSet out = *this;
    out.frees_ = atomSetUnion(out.frees_, other.frees_);
    for (std::uint32_t b : other.bounds_) out = out.withBound(b);
    out.universal_ = out.universal_ || other.universal_;
    return out;
}

CaptureSet CaptureSet::openBound(std::uint32_t depth, const Atom& x) const {
    if (!containsBound(depth)) return *this;
    CaptureSet out = *this;
    out.bounds_.erase(std::remove(out.bounds_.begin(), out.bounds_.end(), depth),
                      out.bounds_.end());
    return out.withAtom(x);
}

CaptureSet CaptureSet::closeAtom(const Atom& x, std::uint32_t depth) const {
    if (!containsAtom(x)) return *this;
    CaptureSet out = *this;
    out.frees_.erase(std::remove(out.frees_.begin(), out.frees_.end(), x),
                     out.frees_.end());
    return out.withBound(depth);
}

CaptureSet CaptureSet::renameAtom(const Atom& from, const Atom& to) const {
    if (!containsAtom(from)) return *this;
    CaptureSet out = *this;
    out.frees_.erase(std::remove(out.frees_.begin(), out.frees_.end(), from),
                     out.frees_.end());
    return out.withAtom(to);
}

}  // namespace ccbox
