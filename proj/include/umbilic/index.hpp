#ifndef UMBILIC_INDEX_HPP
#define UMBILIC_INDEX_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umbilic/complexpoly.hpp"
#include "umbilic/surfacegen.hpp"
#include "umbilic/winding.hpp"

namespace umbilic {

/// Umbilic index at xi = 0, stored as the integer 2I (the winding of dbar F).
struct IndexResult {
    int winding = 0;
    std::vector<double> radii;
    std::vector<int> windings;
    std::vector<int> samples;

    double index() const { return winding / 2.0; }
};

/// R_k = 2^-k for k = 3..10.
std::vector<double> default_radius_schedule();

/// Winding of dbar F on each circle of the (decreasing) schedule; accepted
/// when the last two radii agree.
IndexResult index_at_origin(const ComplexField& dbar_f, std::span<const double> radii, int n_theta = 1024);

struct Nondegeneracy {
    int order = 0;
    double min_GN = 0.0;       ///< smallest |G_N| found on the refined grid
    double lower_bound = 0.0;  ///< certified lower bound for min_theta |G_N|
    int grid_points = 0;
};

/// Smallest k <= max_order with G_k not identically zero, and a certified
/// positive lower bound for |G_k| on the circle.
Nondegeneracy nondegeneracy(const SectionSeries& series, int max_order);
Nondegeneracy nondegeneracy(const UmbilicSurface& surface);

/// Certified minimum of |sum_n c_n e^{2 i n theta}|.
Nondegeneracy certify_trig_minimum(const VectorXc& coeffs, int start_points, int max_points = 1 << 22);

MonicPolynomial extract_PN(const UmbilicSurface& surface);

struct VerifyOptions {
    double scale = 1.0;
    std::optional<double> support_constant;
    double guard = 0.05;
    double relation_tol = 1e-12;
    RootFinderOptions roots;
    std::vector<double> radii{0.5, 0.1, 0.01};
    int n_theta = 1024;
    int contour_samples = 1024;
};

struct UmbilicReport {
    WeightedSymmetricProfile profile;
    int degree = 0;
    int twice_index = 0;
    int winding = 0;
    int K = 0;
    int K_contour = 0;
    double min_GN = 0.0;
    double min_GN_lower_bound = 0.0;
    double circle_gap = 0.0;
    double reconstruction_error = 0.0;
    double support_constant = 0.0;
    LagrangianCheckResult relations;
    RootSet roots;
    IndexResult index_detail;
    bool identity_ok = false;
    bool hamburger_ok = false;
    bool main_bound_ok = false;
    bool counts_agree = false;

    double index() const { return twice_index / 2.0; }
    bool all_ok() const { return identity_ok && hamburger_ok && main_bound_ok && counts_agree; }
};

/// Builds the surface for `profile`, computes its umbilic index as a
/// winding number and compares it with the interior root count.
UmbilicReport verify(const WeightedSymmetricProfile& profile, const VerifyOptions& options = {});

/// max_k |a_k - b_k| / max(1, max_k |b_k|).
double relative_coeff_error(const MonicPolynomial& a, const MonicPolynomial& b);

}  // namespace umbilic

#endif  // UMBILIC_INDEX_HPP
