#ifndef NPOLY_RNG_HPP
#define NPOLY_RNG_HPP

#include <cstdint>
#include <random>

namespace npoly {

// Seeded generator for the sampling suites. mt19937_64 output is fixed by the
// standard, and we avoid std::uniform_int_distribution (implementation
// defined), so identical seeds give identical runs on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t u64() { return eng_(); }

    // uniform in [0, n), n > 0
    long below(long n) {
        const std::uint64_t un = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return static_cast<long>(x % un);
    }

    // uniform in [lo, hi]
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }

private:
    std::mt19937_64 eng_;
};

}  // namespace npoly

#endif
