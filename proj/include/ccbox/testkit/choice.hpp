#pragma once

#include <cstdint>
#include <vector>

namespace ccbox::testkit {

// SplitMix64; fixed algorithm so identical seeds reproduce identical cases
// on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// Random source that records every draw, or replays a recorded sequence
// (padding with zeros when it runs out). Shrinking edits the recorded
// choice sequence and regenerates, so shrunk cases stay well-scoped.
class ChoiceStream {
public:
    explicit ChoiceStream(std::uint64_t seed) : rng_(seed), replaying_(false) {}
    explicit ChoiceStream(std::vector<std::uint64_t> replay)
        : rng_(0), replaying_(true), replay_(std::move(replay)) {}

    // Uniform draw in [0, bound); bound 0 is treated as 1.
    std::uint64_t next(std::uint64_t bound);
    bool chance(std::uint32_t percent) { return next(100) < percent; }

    const std::vector<std::uint64_t>& recorded() const { return recorded_; }

private:
    SplitMix64 rng_;
    bool replaying_;
    std::vector<std::uint64_t> replay_;
    std::size_t replayPos_ = 0;
    std::vector<std::uint64_t> recorded_;
};

}  // namespace ccbox::testkit
