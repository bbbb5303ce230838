#include "umbilic/complexpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "umbilic/winding.hpp"

namespace umbilic {

WeightedSymmetricProfile::WeightedSymmetricProfile(VectorXc delta) : delta_(std::move(delta)) {
    if (delta_.size() < 1) throw InputError("profile: degree must be positive");
}

cplx WeightedSymmetricProfile::operator()(int n) const {
    if (n == 0) return {1.0, 0.0};
    if (n < 0 || n > degree()) throw InputError("profile: Delta index out of range");
    return delta_[n - 1];
}

MonicPolynomial::MonicPolynomial(VectorXc coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 1) throw InputError("polynomial: degree must be positive");
}

double MonicPolynomial::max_coeff_modulus() const { return coeffs_.cwiseAbs().maxCoeff(); }

cplx MonicPolynomial::derivative(cplx z) const {
    const int n = degree();
    cplx acc = static_cast<double>(n);
    for (int k = n - 1; k >= 1; --k) acc = acc * z + static_cast<double>(k) * coeffs_[k];
    return acc;
}

double LagrangianCheckResult::max_defect() const {
    double m = std::max(modulus_defect, midline_defect);
    for (double d : relation_defects) m = std::max(m, d);
    return m;
}

WeightedSymmetricProfile symmetric_from_roots(std::span<const cplx> roots) {
    if (roots.empty()) throw InputError("symmetric_from_roots: empty root list");
    const int n = static_cast<int>(roots.size());
    // prod (zeta - zeta_i), ascending powers
    VectorXc prod = VectorXc::Zero(n + 1);
    prod[0] = 1.0;
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k >= 1; --k) prod[k] = prod[k - 1] - roots[i] * prod[k];
        prod[0] = -roots[i] * prod[0];
    }
    return profile_from_poly(MonicPolynomial(prod.head(n)));
}

MonicPolynomial poly_from_profile(const WeightedSymmetricProfile& profile) {
    const int n = profile.degree();
    VectorXc c(n);
    for (int k = 1; k <= n; ++k) c[n - k] = binomial(n, k) * profile(k);
    return MonicPolynomial(std::move(c));
}

WeightedSymmetricProfile profile_from_poly(const MonicPolynomial& poly) {
    const int n = poly.degree();
    VectorXc delta(n);
    for (int k = 1; k <= n; ++k) delta[k - 1] = poly.coeffs()[n - k] / binomial(n, k);
    return WeightedSymmetricProfile(std::move(delta));
}

namespace {

/// l with N = 2l+1 or N = 2l+2.
int half_index(int degree) { return (degree - 1) / 2; }

}  // namespace

LagrangianCheckResult check_relations(const WeightedSymmetricProfile& profile, double tol) {
    const int n = profile.degree();
    if (n < 2) throw InputError("check_relations: degree must be at least 2");
    const int l = half_index(n);
    const cplx pivot = profile(n - 2);

    LagrangianCheckResult out;
    out.modulus_defect = std::abs(std::abs(pivot) - 1.0);
    for (int k = 1; k <= l - 1; ++k)
        out.relation_defects.push_back(std::abs(profile(k) - std::conj(profile(n - 2 - k)) * pivot));
    if (n % 2 == 0) out.midline_defect = std::abs(profile(l) - std::conj(profile(l)) * pivot);
    out.pass = out.max_defect() <= tol;
    return out;
}

int constrained_param_count(int degree) { return degree + 2; }

WeightedSymmetricProfile sample_constrained(int degree, std::span<const double> params) {
    if (degree < 3) throw InputError("sample_constrained: degree must be at least 3");
    if (static_cast<int>(params.size()) != constrained_param_count(degree))
        throw InputError("sample_constrained: expected N+2 real parameters");

    const int n = degree;
    const int l = half_index(n);
    const bool even = n % 2 == 0;
    VectorXc delta = VectorXc::Zero(n);
    auto at = [&](int k) -> cplx& { return delta[k - 1]; };

    std::size_t p = 0;
    const double phase = params[p++];
    const cplx pivot = std::polar(1.0, phase);
    at(n - 2) = pivot;

    int first_free = l;
    if (even) {
        at(l) = params[p++] * std::polar(1.0, phase / 2);
        first_free = l + 1;
    }
    for (int k = first_free; k <= n - 3; ++k, p += 2) at(k) = {params[p], params[p + 1]};
    at(n - 1) = {params[p], params[p + 1]};
    at(n) = {params[p + 2], params[p + 3]};
    for (int k = 1; k <= l - 1; ++k) at(k) = std::conj(at(n - 2 - k)) * pivot;
    return WeightedSymmetricProfile(std::move(delta));
}

WeightedSymmetricProfile sample_constrained(int degree, Rng& rng) {
    if (degree < 3) throw InputError("sample_constrained: degree must be at least 3");
    std::vector<double> params(static_cast<std::size_t>(constrained_param_count(degree)));
    params[0] = 2 * kPi * rng.uniform();
    for (std::size_t i = 1; i < params.size(); ++i) params[i] = rng.normal();
    return sample_constrained(degree, params);
}

namespace {

/// Horner running error bound: sum |c_k| |z|^k + |z|^N.
double eval_bound(const VectorXc& c, cplx z) {
    const double az = std::abs(z);
    double acc = 1.0;
    for (Eigen::Index k = c.size() - 1; k >= 0; --k) acc = acc * az + std::abs(c[k]);
    return acc;
}

void cluster_roots(VectorXc& roots, double radius) {
    const Eigen::Index n = roots.size();
    std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Eigen::Index i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) < radius) parent[find(j)] = find(i);

    VectorXc sum = VectorXc::Zero(n);
    Eigen::VectorXi count = Eigen::VectorXi::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        sum[find(i)] += roots[i];
        ++count[find(i)];
    }
    for (Eigen::Index i = 0; i < n; ++i) roots[i] = sum[find(i)] / static_cast<double>(count[find(i)]);
}

}  // namespace

RootSet find_roots(const MonicPolynomial& poly, const RootFinderOptions& options) {
    const int n = poly.degree();
    const VectorXc& c = poly.coeffs();
    constexpr double eps = std::numeric_limits<double>::epsilon();

    VectorXc z(n);
    const double radius = 1.0 + poly.max_coeff_modulus();
    for (int k = 0; k < n; ++k) z[k] = std::polar(radius, 2 * kPi * k / n + 0.4);

    std::vector<bool> done(static_cast<std::size_t>(n), false);
    bool converged = false;
    int iter = 0;
    for (; iter < options.max_iter && !converged; ++iter) {
        converged = true;
        for (int k = 0; k < n; ++k) {
            if (done[k]) continue;
            const cplx p = poly(z[k]);
            if (std::abs(p) <= 4 * eps * eval_bound(c, z[k])) {
                done[k] = true;
                continue;
            }
            const cplx ratio = p / poly.derivative(z[k]);
            cplx repulsion = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            const cplx step = ratio / (1.0 - ratio * repulsion);
            z[k] -= step;
            if (std::abs(step) <= 4 * eps * (1.0 + std::abs(z[k])))
                done[k] = true;
            else
                converged = false;
        }
    }
    if (!converged) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "find_roots: no convergence after " << options.max_iter << " iterations; iterates:";
        for (int k = 0; k < n; ++k) msg << ' ' << z[k];
        throw CertificationError(msg.str());
    }

    cluster_roots(z, options.cluster_radius);

    RootSet out;
    out.roots = z;
    out.residuals.resize(n);
    out.circle_gap = std::numeric_limits<double>::infinity();
    const double scale = 1.0 + poly.max_coeff_modulus();
    for (int k = 0; k < n; ++k) {
        out.residuals[k] = std::abs(poly(z[k]));
        out.circle_gap = std::min(out.circle_gap, std::abs(std::abs(z[k]) - 1.0));
        const double allowed = options.tol * scale * std::pow(std::max(1.0, std::abs(z[k])), n);
        if (out.residuals[k] > allowed) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "find_roots: residual " << out.residuals[k] << " at " << z[k] << " exceeds " << allowed;
            throw CertificationError(msg.str());
        }
    }
    return out;
}

int count_inside(const RootSet& roots, double guard) {
    if (!(roots.circle_gap > guard))
        throw CertificationError("count_inside: root too close to unit circle");
    int k = 0;
    for (const auto& z : roots.roots) k += std::abs(z) < 1.0 ? 1 : 0;
    return k;
}

int argument_principle_count(const MonicPolynomial& poly, int n_samples) {
    if (n_samples < 8) throw InputError("argument_principle_count: too few samples");
    const double floor = 1e-14 * (1.0 + poly.coeffs().cwiseAbs().sum());
    auto eval = [&](cplx z) {
        const cplx v = poly(z);
        if (std::abs(v) <= floor) throw CertificationError("argument_principle_count: zero on contour");
        return v;
    };
    return circle_winding(eval, 0.0, 1.0, n_samples);
}

}  // namespace umbilic
