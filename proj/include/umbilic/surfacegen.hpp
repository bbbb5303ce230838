#ifndef UMBILIC_SURFACEGEN_HPP
#define UMBILIC_SURFACEGEN_HPP

#include "umbilic/common.hpp"
#include "umbilic/complexpoly.hpp"
#include "umbilic/minitwistor.hpp"

namespace umbilic {

/// Convex surface with an isolated umbilic of order N at xi = 0, determined
/// by a constrained profile. The section F is a finite polynomial in xi and
/// conj(xi) whose lowest-order dbar-term reproduces the profile polynomial.
///
/// Stored data: the coefficients A_{n,N-n+1} for n = 0..l+1 (`a_low`), the
/// real middle coefficient A_{l+2,l+1} for even N (`a_mid`), the leading
/// coefficient A_{N1} = scale * exp(-i A / 2) where Delta_{N-2} = exp(i A),
/// and the additive support constant C.
struct UmbilicSurface {
    int degree = 0;
    int half = 0;  ///< l, with N = 2l+1 or 2l+2
    bool even = false;
    VectorXc a_low;
    double a_mid = 0.0;
    double scale = 1.0;
    double phase = 0.0;  ///< A
    cplx a_n1;
    double support_constant = 0.0;

    /// A_{n,N-n+1} for 0 <= n <= N (the coefficients of the order-N layer).
    cplx layer_coefficient(int n) const;
};

UmbilicSurface build_surface(const WeightedSymmetricProfile& profile, double scale = 1.0,
                             double support_constant = 0.0, double tol = 1e-12);

/// Closed-form section F; `Scalar` selects the evaluation precision.
template <typename Scalar>
std::complex<Scalar> eval_F(const UmbilicSurface& s, std::complex<Scalar> xi) {
    using C = std::complex<Scalar>;
    const int N = s.degree;
    const C xb = std::conj(xi);
    const Scalar q = std::norm(xi);
    C acc(0);
    for (int n = 0; n <= s.half + 1; ++n) {
        const C a(s.a_low[n]);
        const Scalar w = N - n + 2;
        acc += a * (Scalar(1) + Scalar(N - n + 1) / w * q) * ipow(xi, n) * ipow(xb, N - n + 1);
        // conj(a) (n + (n-1)|xi|^2) xi^(N-n+2) conj(xi)^(n-1) / (N-n+2), kept free of negative powers
        C partner = Scalar(n - 1) * ipow(xi, N - n + 3) * ipow(xb, n);
        if (n > 0) partner += Scalar(n) * ipow(xi, N - n + 2) * ipow(xb, n - 1);
        acc += std::conj(a) / w * partner;
    }
    if (s.even) {
        const int l = s.half;
        acc += Scalar(s.a_mid) * (Scalar(1) + Scalar(l + 1) / Scalar(l + 2) * q) * ipow(xi, l + 2) *
               ipow(xb, l + 1);
    }
    return acc;
}

/// Support function before discarding the (vanishing) imaginary part.
template <typename Scalar>
std::complex<Scalar> eval_r_complex(const UmbilicSurface& s, std::complex<Scalar> xi) {
    using C = std::complex<Scalar>;
    const int N = s.degree;
    const C xb = std::conj(xi);
    const Scalar q = std::norm(xi);
    C acc(0);
    for (int n = 0; n <= s.half + 1; ++n) {
        const C a(s.a_low[n]);
        const Scalar w = N - n + 2;
        acc += a / w * ipow(xi, n) * ipow(xb, N - n + 2);
        acc += std::conj(a) / w * ipow(xi, N - n + 2) * ipow(xb, n);
    }
    acc *= Scalar(2) / (1 + q);
    if (s.even) {
        const int l = s.half;
        Scalar qp = 1;
        for (int k = 0; k < l + 2; ++k) qp *= q;
        acc += Scalar(2) * Scalar(s.a_mid) * qp / ((1 + q) * Scalar(l + 2));
    }
    return acc + Scalar(s.support_constant);
}

template <typename Scalar>
Scalar eval_r(const UmbilicSurface& s, std::complex<Scalar> xi) {
    return eval_r_complex(s, xi).real();
}

/// B_0..B_N with dbar F = (1 + |xi|^2) sum_n B_n xi^n conj(xi)^(N-n).
VectorXc effective_coeffs(const UmbilicSurface& surface);

template <typename Scalar>
std::complex<Scalar> eval_dbarF(const UmbilicSurface& s, std::complex<Scalar> xi) {
    using C = std::complex<Scalar>;
    const int N = s.degree;
    const C xb = std::conj(xi);
    C acc(0);
    for (int n = 0; n <= N; ++n) acc += C(double(N - n + 1) * s.layer_coefficient(n)) * ipow(xi, n) * ipow(xb, N - n);
    return (1 + std::norm(xi)) * acc;
}

SpacePoint embed(const UmbilicSurface& surface, cplx xi);

/// Full coefficient table of F (finite).
SectionSeries section_series(const UmbilicSurface& surface);

/// max |F| on a 32 x 64 polar grid over |xi| <= r_max.
double section_peak(const UmbilicSurface& surface, double r_max = 2.0);

/// 10 x section_peak (at least 1).
double default_support_constant(const UmbilicSurface& surface, double r_max = 2.0);

/// Scale of A_{N1} for which section_peak is 1. F is linear in the scale.
double unit_peak_scale(const WeightedSymmetricProfile& profile, double r_max = 2.0);

// ---------------------------------------------------------------------------
// Ellipsoids x^2/a1 + y^2/a2 + z^2/a3 = 1 (a_i are squared semi-axes).

struct EllipsoidParams {
    double a1 = 1.0;
    double a2 = 1.0;
    double a3 = 1.0;

    void validate() const;
};

struct EllipsoidSection {
    cplx F;
    double r = 0.0;
};

EllipsoidSection ellipsoid_F_r(const EllipsoidParams& params, cplx xi);
SpacePoint ellipsoid_embed(const EllipsoidParams& params, cplx xi);

/// Closed form when a1 == a2; Richardson-refined central differences of F
/// otherwise.
cplx ellipsoid_dbarF(const EllipsoidParams& params, cplx xi, double h = 1e-3);

/// Positive radii R0 on the ray theta = 0 at which the triaxial ellipsoid has
/// umbilics; the remaining two sit at -R0. Sorted ascending.
std::vector<double> triaxial_umbilics(const EllipsoidParams& params);

/// Section seen after the rotation xi -> (xi - R0)/(1 + R0 xi), which moves
/// the line over xi = R0 to the chart origin.
ComplexField mobius_recenter(ComplexField section, double r0);

/// dbar of a generic section by Richardson-refined central differences.
cplx numeric_dbar(const ComplexField& section, cplx xi, double h = 1e-3);

}  // namespace umbilic

#endif  // UMBILIC_SURFACEGEN_HPP
