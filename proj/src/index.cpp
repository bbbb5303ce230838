#include "umbilic/index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace umbilic {

std::vector<double> default_radius_schedule() {
    std::vector<double> out;
    for (int k = 3; k <= 10; ++k) out.push_back(std::ldexp(1.0, -k));
    return out;
}

IndexResult index_at_origin(const ComplexField& dbar_f, std::span<const double> radii, int n_theta) {
    if (radii.size() < 2) throw InputError("index_at_origin: need at least two radii");
    IndexResult out;
    for (double r : radii) {
        if (!(r > 0)) throw InputError("index_at_origin: radii must be positive");
        int used = 0;
        out.windings.push_back(circle_winding(dbar_f, 0.0, r, n_theta, 1 << 20, &used));
        out.radii.push_back(r);
        out.samples.push_back(used);
    }
    const auto n = out.windings.size();
    if (out.windings[n - 1] != out.windings[n - 2])
        throw CertificationError("index_at_origin: winding did not stabilise over the radius schedule");
    out.winding = out.windings.back();
    return out;
}

Nondegeneracy certify_trig_minimum(const VectorXc& coeffs, int start_points, int max_points) {
    // |T'(theta)| <= sum 2n |c_n|
    double lipschitz = 0.0;
    for (Eigen::Index n = 0; n < coeffs.size(); ++n) lipschitz += 2.0 * n * std::abs(coeffs[n]);

    for (int m = std::max(start_points, 3); m <= max_points; m *= 2) {
        const double step = 2 * kPi / m;
        Eigen::VectorXd values(m);
        for (int j = 0; j < m; ++j) values[j] = std::abs(evaluate_trig(coeffs, j * step));
        const double grid_min = values.minCoeff();
        const double slack = lipschitz * step / 2;
        if (grid_min - slack <= 0) continue;

        // Golden-section refinement inside every cell that could hold the minimum.
        double best = grid_min;
        const double phi = (std::sqrt(5.0) - 1) / 2;
        for (int j = 0; j < m; ++j) {
            if (values[j] - lipschitz * step > grid_min) continue;
            double a = (j - 1) * step, b = (j + 1) * step;
            auto f = [&](double t) { return std::abs(evaluate_trig(coeffs, t)); };
            double c = b - phi * (b - a), d = a + phi * (b - a);
            double fc = f(c), fd = f(d);
            for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
                if (fc < fd) {
                    b = d, d = c, fd = fc, c = b - phi * (b - a), fc = f(c);
                } else {
                    a = c, c = d, fc = fd, d = a + phi * (b - a), fd = f(d);
                }
            }
            best = std::min({best, fc, fd});
        }
        Nondegeneracy out;
        out.min_GN = best;
        out.lower_bound = grid_min - slack;
        out.grid_points = m;
        return out;
    }
    throw CertificationError("nondegeneracy: |G_N| not certifiably positive (root near the unit circle)");
}

Nondegeneracy nondegeneracy(const SectionSeries& series, int max_order) {
    double scale = 0.0;
    for (const auto& [key, value] : series.entries()) scale = std::max(scale, std::abs(value));
    for (int k = 0; k <= max_order; ++k) {
        const VectorXc g = fourier_G(series, k);
        if (g.cwiseAbs().maxCoeff() <= 1e-14 * scale || scale == 0.0) continue;
        auto out = certify_trig_minimum(g, 4 * k + 1);
        out.order = k;
        return out;
    }
    throw CertificationError("nondegeneracy: dbar F vanishes through order " + std::to_string(max_order) +
                             " (degenerate umbilic)");
}

Nondegeneracy nondegeneracy(const UmbilicSurface& surface) {
    const SectionSeries series = section_series(surface);
    const int N = surface.degree;
    // Layers below N must vanish identically.
    for (int k = 0; k < N; ++k)
        if (fourier_G(series, k).cwiseAbs().maxCoeff() != 0.0)
            throw CertificationError("nondegeneracy: lower-order layer G_" + std::to_string(k) + " is non-zero");
    auto out = certify_trig_minimum(fourier_G(series, N), 4 * N + 1);
    out.order = N;
    return out;
}

MonicPolynomial extract_PN(const UmbilicSurface& surface) {
    const int N = surface.degree;
    const cplx lead = surface.layer_coefficient(N);
    if (lead == cplx(0.0)) throw InputError("extract_PN: A_N1 vanishes");
    VectorXc c(N);
    for (int n = 0; n < N; ++n) c[n] = double(N - n + 1) * surface.layer_coefficient(n) / lead;
    return MonicPolynomial(std::move(c));
}

double relative_coeff_error(const MonicPolynomial& a, const MonicPolynomial& b) {
    if (a.degree() != b.degree()) return std::numeric_limits<double>::infinity();
    return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff() / std::max(1.0, b.max_coeff_modulus());
}

UmbilicReport verify(const WeightedSymmetricProfile& profile, const VerifyOptions& options) {
    UmbilicReport rep;
    rep.profile = profile;
    rep.degree = profile.degree();
    rep.relations = check_relations(profile, options.relation_tol);
    if (!rep.relations.pass)
        throw InputError("verify: coefficient relations fail (max defect " +
                         std::to_string(rep.relations.max_defect()) + ")");

    const MonicPolynomial poly = poly_from_profile(profile);
    rep.roots = find_roots(poly, options.roots);
    rep.circle_gap = rep.roots.circle_gap;
    rep.K = count_inside(rep.roots, options.guard);
    rep.K_contour = argument_principle_count(poly, options.contour_samples);
    rep.counts_agree = rep.K == rep.K_contour;

    UmbilicSurface surface = build_surface(profile, options.scale, 0.0, options.relation_tol);
    surface.support_constant = options.support_constant ? *options.support_constant
                                                        : default_support_constant(surface);
    rep.support_constant = surface.support_constant;

    rep.index_detail = index_at_origin([&](cplx xi) { return eval_dbarF(surface, xi); }, options.radii,
                                       options.n_theta);
    for (int w : rep.index_detail.windings)
        if (w != rep.index_detail.winding)
            throw CertificationError("verify: winding depends on the probe radius");
    rep.winding = rep.index_detail.winding;
    rep.twice_index = rep.winding;

    const auto nd = nondegeneracy(surface);
    rep.min_GN = nd.min_GN;
    rep.min_GN_lower_bound = nd.lower_bound;
    rep.reconstruction_error = relative_coeff_error(extract_PN(surface), poly);

    rep.identity_ok = rep.twice_index == 2 * rep.K - rep.degree;
    rep.hamburger_ok = rep.twice_index <= 2;
    rep.main_bound_ok = 2 * rep.K <= 2 + rep.degree;
    return rep;
}

}  // namespace umbilic
