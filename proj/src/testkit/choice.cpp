#include "ccbox/testkit/choice.hpp"

namespace ccbox::testkit {

std::uint64_t ChoiceStream::next(std::uint64_t bound) {
    if (bound == 0) bound = 1;
    std::uint64_t raw;
    if (replaying_) {
        raw = replayPos_ < replay_.size() ? replay_[replayPos_++] : 0;
    } else {
        raw = rng_.next();
    }
    std::uint64_t value = raw % bound;
    recorded_.push_back(value);
    return value;
}

}  // namespace ccbox::testkit
