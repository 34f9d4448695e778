#pragma once

#include <cstdint>
#include <random>

namespace coxwalls {

// Fair-bit source over std::mt19937_64. The mt19937_64 word sequence is fixed
// by the standard, so every seeded run replays the same bit stream on any
// platform. Consumers draw whole blocks (one attempt, one trial) so that
// attempts are contiguous, independent slices of the stream.
class BitSource {
public:
    explicit BitSource(std::uint64_t seed) : engine_(seed) {}

    bool bit() {
        if (left_ == 0) {
            buffer_ = engine_();
            left_ = 64;
        }
        bool b = buffer_ & 1u;
        buffer_ >>= 1;
        --left_;
        return b;
    }

    // n low-entropy bits packed little-endian, n <= 32
    std::uint32_t bits(int n) {
        std::uint32_t v = 0;
        for (int i = 0; i < n; ++i)
            v |= static_cast<std::uint32_t>(bit() ? 1u : 0u) << i;
        return v;
    }

    // uniform value in [0, n) by rejection on the minimal bit width
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        int width = 0;
        while ((1ull << width) < n) ++width;
        for (;;) {
            std::uint64_t v = 0;
            for (int i = 0; i < width; ++i)
                v |= static_cast<std::uint64_t>(bit() ? 1u : 0u) << i;
            if (v < n) return v;
        }
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t buffer_ = 0;
    int left_ = 0;
};

}  // namespace coxwalls
