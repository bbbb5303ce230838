#ifndef UMBILIC_COMPLEXPOLY_HPP
#define UMBILIC_COMPLEXPOLY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "umbilic/common.hpp"
#include "umbilic/rng.hpp"

namespace umbilic {

/// Degree-N polynomial stored through its weighted symmetric coefficients
/// Delta_1..Delta_N, with Delta_0 = 1 implicit. The coefficient of
/// zeta^(N-n) is C(N, n) * Delta_n.
class WeightedSymmetricProfile {
public:
    WeightedSymmetricProfile() = default;
    explicit WeightedSymmetricProfile(VectorXc delta);

    int degree() const { return static_cast<int>(delta_.size()); }
    const VectorXc& delta() const { return delta_; }

    /// Delta_n for 0 <= n <= N.
    cplx operator()(int n) const;

private:
    VectorXc delta_;
};

/// P(zeta) = zeta^N + sum_{k<N} c_k zeta^k.
class MonicPolynomial {
public:
    MonicPolynomial() = default;
    explicit MonicPolynomial(VectorXc coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()); }
    const VectorXc& coeffs() const { return coeffs_; }
    double max_coeff_modulus() const;

    cplx operator()(cplx z) const { return evaluate(coeffs_, z); }
    cplx derivative(cplx z) const;

    /// Horner evaluation of the monic polynomial with lower coefficients `c`.
    template <typename Scalar>
    static std::complex<Scalar> evaluate(const ComplexVector<Scalar>& c, std::complex<Scalar> z) {
        std::complex<Scalar> acc(1);
        for (Eigen::Index k = c.size() - 1; k >= 0; --k) acc = acc * z + c[k];
        return acc;
    }

private:
    VectorXc coeffs_;
};

struct RootSet {
    VectorXc roots;
    Eigen::VectorXd residuals;
    double circle_gap = 0.0;  ///< min_i | |zeta_i| - 1 |
};

struct LagrangianCheckResult {
    double modulus_defect = 0.0;
    std::vector<double> relation_defects;
    double midline_defect = 0.0;  ///< even N only; zero otherwise
    bool pass = false;

    double max_defect() const;
};

struct RootFinderOptions {
    double tol = 1e-12;
    int max_iter = 500;
    double cluster_radius = 1e-6;
};

WeightedSymmetricProfile symmetric_from_roots(std::span<const cplx> roots);
MonicPolynomial poly_from_profile(const WeightedSymmetricProfile& profile);
WeightedSymmetricProfile profile_from_poly(const MonicPolynomial& poly);

LagrangianCheckResult check_relations(const WeightedSymmetricProfile& profile, double tol = 1e-12);

/// Number of real parameters of the constrained family at degree N (N + 2).
int constrained_param_count(int degree);

/// Parameter layout: [A, (t if N even), free Delta entries as (re, im) in
/// ascending index, Delta_{N-1} (re, im), Delta_N (re, im)].
WeightedSymmetricProfile sample_constrained(int degree, std::span<const double> params);
WeightedSymmetricProfile sample_constrained(int degree, Rng& rng);

/// Simultaneous (Aberth-Ehrlich) iteration. Throws CertificationError on
/// non-convergence, with the final iterates in the message.
RootSet find_roots(const MonicPolynomial& poly, const RootFinderOptions& options = {});

/// Roots inside the open unit disk, with multiplicity.
int count_inside(const RootSet& roots, double guard = 0.05);

/// Zero count inside |zeta| = 1 from the winding of P(e^{i theta}).
int argument_principle_count(const MonicPolynomial& poly, int n_samples = 1024);

}  // namespace umbilic

#endif  // UMBILIC_COMPLEXPOLY_HPP
