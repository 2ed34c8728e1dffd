#ifndef SEMI2X2_RNG_HPP
#define SEMI2X2_RNG_HPP

#include <cstdint>

namespace semi2x2 {

// SplitMix64. Used for every random draw in the artifact so that reports are
// reproducible bit-for-bit across platforms (std:: distributions are not).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0; slight modulo bias is irrelevant here
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // uniform in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace semi2x2

#endif
