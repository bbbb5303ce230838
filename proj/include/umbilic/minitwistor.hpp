#ifndef UMBILIC_MINITWISTOR_HPP
#define UMBILIC_MINITWISTOR_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "umbilic/common.hpp"

namespace umbilic {

/// Oriented line in the (xi, eta) chart of the tangent bundle of S^2;
/// xi is the stereographic direction (from the south pole), eta the fibre.
struct OrientedLine {
    cplx xi;
    cplx eta;
};

/// z = x1 + i x2, t = x3.
struct SpacePoint {
    cplx z;
    double t = 0.0;

    Eigen::Vector3d xyz() const { return {z.real(), z.imag(), t}; }
};

/// Point at affine parameter r on the line.
template <typename Scalar>
void line_point(const std::complex<Scalar>& xi, const std::complex<Scalar>& eta, Scalar r,
                std::complex<Scalar>& z, Scalar& t) {
    const Scalar q = std::norm(xi);
    const Scalar denom = (1 + q) * (1 + q);
    z = (Scalar(2) * (eta - std::conj(eta) * xi * xi) + Scalar(2) * xi * (1 + q) * r) / denom;
    t = (-Scalar(2) * (eta * std::conj(xi) + std::conj(eta) * xi).real() + (1 - q * q) * r) / denom;
}

SpacePoint line_point(const OrientedLine& line, double r);

/// Unit direction of the lines over xi.
Eigen::Vector3d direction(cplx xi);

template <typename Scalar>
struct WirtingerPairT {
    std::complex<Scalar> d;     ///< d/d xi
    std::complex<Scalar> dbar;  ///< d/d conj(xi)
};
using WirtingerPair = WirtingerPairT<double>;

/// Central-difference Wirtinger derivatives from the four points xi +- h,
/// xi +- i h. Works for real- or complex-valued f.
template <typename Scalar, typename Func>
WirtingerPairT<Scalar> wirtinger(Func&& f, std::complex<Scalar> xi, Scalar h) {
    using C = std::complex<Scalar>;
    const C ih(0, h);
    const C fx = (C(f(xi + h)) - C(f(xi - h))) / (2 * h);
    const C fy = (C(f(xi + ih)) - C(f(xi - ih))) / (2 * h);
    const C i(0, 1);
    return {Scalar(0.5) * (fx - i * fy), Scalar(0.5) * (fx + i * fy)};
}

namespace detail {

template <typename Scalar>
std::complex<Scalar> checked(std::complex<Scalar> v, std::complex<Scalar> at) {
    using std::isfinite;
    if (!isfinite(v.real()) || !isfinite(v.imag()))
        throw CertificationError("field evaluation failed near xi = (" + std::to_string(double(at.real())) + ", " +
                                 std::to_string(double(at.imag())) + ")");
    return v;
}

}  // namespace detail

/// Max over points of |d g - conj(d g)| with g = F / (1 + |xi|^2)^2, which is
/// the defect of d[F/(1+|xi|^2)^2] = dbar[conj(F)/(1+|xi|^2)^2].
template <typename Scalar, typename Field>
Scalar lagrangian_pde_residual(const Field& f, std::span<const std::complex<Scalar>> points, Scalar h) {
    if (!(h > 0)) throw InputError("check_lagrangian_pde: step must be positive");
    auto weighted = [&](std::complex<Scalar> xi) {
        const Scalar w = 1 + std::norm(xi);
        return detail::checked(std::complex<Scalar>(f(xi)), xi) / (w * w);
    };
    Scalar worst = 0;
    for (const auto& xi : points) {
        const auto dg = wirtinger(weighted, xi, h).d;
        worst = std::max(worst, std::abs(dg - std::conj(dg)));
    }
    return worst;
}

/// Max over points of |dbar r - 2F/(1+|xi|^2)^2|.
template <typename Scalar, typename RField, typename CField>
Scalar support_relation_residual(const RField& r, const CField& f, std::span<const std::complex<Scalar>> points,
                                 Scalar h) {
    if (!(h > 0)) throw InputError("check_support_relation: step must be positive");
    using C = std::complex<Scalar>;
    auto real_field = [&](C xi) { return detail::checked(C(r(xi)), xi); };
    Scalar worst = 0;
    for (const auto& xi : points) {
        const Scalar w = 1 + std::norm(xi);
        const C lhs = wirtinger(real_field, xi, h).dbar;
        worst = std::max(worst, std::abs(lhs - Scalar(2) * detail::checked(C(f(xi)), xi) / (w * w)));
    }
    return worst;
}

/// Max over points of |d[F/(1+|xi|^2)^2] - dbar[conj(F)/(1+|xi|^2)^2]|.
double check_lagrangian_pde(const ComplexField& f, std::span<const cplx> points, double h = 1e-5);

/// Max over points of |dbar r - 2F/(1+|xi|^2)^2|.
double check_support_relation(const RealField& r, const ComplexField& f, std::span<const cplx> points,
                              double h = 1e-5);

/// Deterministic sunflower points in |xi| <= radius, dropping any within
/// `exclusion` of the listed singular points.
std::vector<cplx> probe_points(std::size_t count, double radius = 2.0, std::span<const cplx> singular = {},
                               double exclusion = 1e-3);

/// Finitely supported power series F = sum A_nm xi^n conj(xi)^m.
class SectionSeries {
public:
    using Key = std::pair<int, int>;

    cplx operator()(int n, int m) const;
    void set(int n, int m, cplx value);
    void add(int n, int m, cplx value);
    bool contains(int n, int m) const { return entries_.count({n, m}) != 0; }
    bool empty() const { return entries_.empty(); }

    const std::map<Key, cplx>& entries() const { return entries_; }
    /// Largest index appearing in either slot; -1 when empty.
    int max_index() const;

    cplx evaluate(cplx xi) const;

private:
    std::map<Key, cplx> entries_;
};

struct DefectList {
    std::vector<SectionSeries::Key> at;
    std::vector<double> defect;

    double max() const;
    void push(int n, int m, double d) {
        at.emplace_back(n, m);
        defect.push_back(d);
    }
};

/// Families "eq6", "eq7", "eq8" (coefficient relations of the Lagrangian
/// PDE) and "I".."V" in their stated range n > 1, 0 <= m < n. Instances of
/// I..V outside that range are kept in `boundary` and do not affect `pass`.
struct ConditionReport {
    std::map<std::string, DefectList> families;
    std::map<std::string, DefectList> boundary;
    double max_defect = 0.0;
    double max_boundary_defect = 0.0;
    bool pass = true;
};

ConditionReport check_series_conditions(const SectionSeries& series, double tol = 1e-12);

/// Coefficients of G_k(theta) over e^{2 i n theta}, n = 0..k.
VectorXc fourier_G(const SectionSeries& series, int k);

/// Evaluates sum_n c_n e^{2 i n theta}.
cplx evaluate_trig(const VectorXc& coeffs, double theta);

}  // namespace umbilic

#endif  // UMBILIC_MINITWISTOR_HPP
