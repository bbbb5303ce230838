#include "umbilic/surfacegen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace umbilic {

cplx UmbilicSurface::layer_coefficient(int n) const {
    const int N = degree;
    if (n < 0 || n > N) return 0.0;
    if (n <= half + 1) return a_low[n];
    if (even && n == half + 2) return a_mid;
    // conjugate partner of a low coefficient
    return double(N - n + 2) / n * std::conj(a_low[N - n + 2]);
}

UmbilicSurface build_surface(const WeightedSymmetricProfile& profile, double scale, double support_constant,
                             double tol) {
    const int N = profile.degree();
    if (N < 2) throw InputError("build_surface: degree must be at least 2");
    if (!(scale > 0)) throw InputError("build_surface: scale must be positive");
    const auto relations = check_relations(profile, tol);
    if (!relations.pass)
        throw InputError("build_surface: coefficient relations fail (max defect " +
                         std::to_string(relations.max_defect()) + ")");

    UmbilicSurface s;
    s.degree = N;
    s.even = N % 2 == 0;
    s.half = (N - 1) / 2;
    s.scale = scale;
    s.phase = std::arg(profile(N - 2));
    s.a_n1 = std::polar(scale, -s.phase / 2);
    s.support_constant = support_constant;

    // A_{N-k,k+1} = C(N,k) A_{N1} Delta_k / (k+1)
    auto layer = [&](int k) { return binomial(N, k) * s.a_n1 * profile(k) / double(k + 1); };
    const int l = s.half;
    s.a_low.resize(l + 2);
    for (int n = 0; n <= l + 1; ++n) s.a_low[n] = layer(N - n);
    if (s.even) {
        const cplx mid = layer(l);
        if (std::abs(mid.imag()) > tol * (1.0 + std::abs(mid)))
            throw InputError("build_surface: middle coefficient is not real");
        s.a_mid = mid.real();
    }
    return s;
}

VectorXc effective_coeffs(const UmbilicSurface& s) {
    const int N = s.degree;
    VectorXc b(N + 1);
    for (int n = 0; n <= N; ++n) b[n] = double(N - n + 1) * s.layer_coefficient(n);
    return b;
}

SpacePoint embed(const UmbilicSurface& s, cplx xi) { return line_point({xi, eval_F(s, xi)}, eval_r(s, xi)); }

SectionSeries section_series(const UmbilicSurface& s) {
    const int N = s.degree;
    SectionSeries out;
    auto put = [&](int n, int m, cplx v) {
        if (v != cplx(0.0)) out.add(n, m, v);
    };
    for (int n = 0; n <= s.half + 1; ++n) {
        const cplx a = s.a_low[n];
        const double w = N - n + 2;
        put(n, N - n + 1, a);
        put(n + 1, N - n + 2, a * double(N - n + 1) / w);
        if (n > 0) put(N - n + 2, n - 1, std::conj(a) * double(n) / w);
        put(N - n + 3, n, std::conj(a) * double(n - 1) / w);
    }
    if (s.even) {
        const int l = s.half;
        put(l + 2, l + 1, s.a_mid);
        put(l + 3, l + 2, s.a_mid * double(l + 1) / (l + 2));
    }
    return out;
}

double section_peak(const UmbilicSurface& s, double r_max) {
    double peak = 0.0;
    constexpr int kRings = 32, kSpokes = 64;
    for (int i = 1; i <= kRings; ++i)
        for (int j = 0; j < kSpokes; ++j)
            peak = std::max(peak, std::abs(eval_F(s, std::polar(r_max * i / kRings, 2 * kPi * j / kSpokes))));
    return peak;
}

double default_support_constant(const UmbilicSurface& s, double r_max) {
    return std::max(1.0, 10.0 * section_peak(s, r_max));
}

double unit_peak_scale(const WeightedSymmetricProfile& profile, double r_max) {
    const double peak = section_peak(build_surface(profile, 1.0, 0.0), r_max);
    if (!(peak > 0)) throw CertificationError("unit_peak_scale: section vanishes on the disk");
    return 1.0 / peak;
}

}  // namespace umbilic
