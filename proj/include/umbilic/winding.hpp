#ifndef UMBILIC_WINDING_HPP
#define UMBILIC_WINDING_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "umbilic/common.hpp"

namespace umbilic {

/// Winding number of a closed loop of samples (the last sample connects back
/// to the first). Throws CertificationError when a sample is zero, a phase
/// step reaches pi/2, or the total is not within 0.25 of an integer.
inline int winding_number(std::span<const cplx> samples) {
    if (samples.size() < 3) throw InputError("winding_number: need at least 3 samples");
    for (const auto& s : samples) {
        if (!(std::abs(s) > 0.0) || !std::isfinite(s.real()) || !std::isfinite(s.imag()))
            throw CertificationError("winding_number: zero or non-finite sample on loop");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const cplx next = samples[(j + 1) % samples.size()];
        const double step = std::arg(next / samples[j]);
        if (std::abs(step) >= kPi / 2)
            throw CertificationError("winding_number: phase step too large, refine sampling");
        total += step;
    }
    const double turns = total / (2 * kPi);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 0.25)
        throw CertificationError("winding_number: non-integer total " + std::to_string(turns));
    return static_cast<int>(rounded);
}

/// Winding of f around the circle |z - center| = radius. Starts at
/// `n_start` nodes and doubles up to `n_cap` until the loop certifies.
template <typename Func>
int circle_winding(Func&& f, cplx center, double radius, int n_start = 1024, int n_cap = 1 << 20,
                   int* n_used = nullptr) {
    std::vector<cplx> samples;
    for (int n = n_start;; n *= 2) {
        samples.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) samples[j] = f(center + std::polar(radius, 2 * kPi * j / n));
        try {
            const int w = winding_number(samples);
            if (n_used) *n_used = n;
            return w;
        } catch (const CertificationError&) {
            bool has_zero = false;
            for (const auto& s : samples) has_zero = has_zero || !(std::abs(s) > 0.0);
            if (has_zero || n * 2 > n_cap) throw;
        }
    }
}

}  // namespace umbilic

#endif  // UMBILIC_WINDING_HPP
