#ifndef UMBILIC_RNG_HPP
#define UMBILIC_RNG_HPP

#include <cmath>
#include <cstdint>

namespace umbilic {

/// Counter-based stream: every (seed, stream, attempt) triple yields an
/// independent, platform-stable sequence, so batch results do not depend on
/// thread count or on how many items were drawn before.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t attempt = 0)
        : state_(mix(mix(seed ^ 0x9e3779b97f4a7c15ULL) ^ mix(stream + 0x632be59bd9b4e019ULL) ^
                     mix(attempt * 0xbf58476d1ce4e5b9ULL + 1))) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; the spare deviate is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double rad = std::sqrt(-2.0 * std::log(u1));
        const double ang = 6.283185307179586 * u2;
        spare_ = rad * std::sin(ang);
        has_spare_ = true;
        return rad * std::cos(ang);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace umbilic

#endif  // UMBILIC_RNG_HPP
