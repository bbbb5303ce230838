#include <doctest.h>

#include "umbilic/minitwistor.hpp"
#include "umbilic/rng.hpp"
#include "umbilic/surfacegen.hpp"

using namespace umbilic;
using namespace std::complex_literals;

namespace {

WeightedSymmetricProfile profile(std::initializer_list<cplx> d) {
    VectorXc v(d.size());
    std::copy(d.begin(), d.end(), v.data());
    return WeightedSymmetricProfile(v);
}

double dist(const SpacePoint& a, const SpacePoint& b) { return (a.xyz() - b.xyz()).norm(); }

}  // namespace

TEST_CASE("line_point examples") {
    const auto p1 = line_point({0.0, 0.0}, 1.0);
    CHECK(std::abs(p1.z) == 0.0);
    CHECK(p1.t == 1.0);
    const auto p2 = line_point({0.0, 1.0}, 0.0);
    CHECK(std::abs(p2.z - 2.0) == 0.0);
    CHECK(p2.t == 0.0);
    const auto p3 = line_point({1.0, 0.0}, 0.0);
    CHECK(std::abs(p3.z) == 0.0);
    CHECK(p3.t == 0.0);
}

TEST_CASE("line_point is linear in eta and r") {
    Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const cplx xi(rng.normal(), rng.normal());
        const cplx e1(rng.normal(), rng.normal()), e2(rng.normal(), rng.normal());
        const double r1 = rng.normal(), r2 = rng.normal(), a = rng.normal(), b = rng.normal();
        const Eigen::Vector3d lhs = line_point({xi, a * e1 + b * e2}, a * r1 + b * r2).xyz();
        const Eigen::Vector3d rhs = a * line_point({xi, e1}, r1).xyz() + b * line_point({xi, e2}, r2).xyz();
        CHECK((lhs - rhs).norm() < 1e-12 * (1 + rhs.norm()));
    }
}

TEST_CASE("points move along the line direction") {
    CHECK((direction(0.0) - Eigen::Vector3d(0, 0, 1)).norm() < 1e-15);
    CHECK((direction(1.0) - Eigen::Vector3d(1, 0, 0)).norm() < 1e-15);
    CHECK((direction(1.0i) - Eigen::Vector3d(0, 1, 0)).norm() < 1e-15);
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const OrientedLine line{cplx(rng.normal(), rng.normal()), cplx(rng.normal(), rng.normal())};
        const double r = rng.normal(), r2 = rng.normal();
        const Eigen::Vector3d d = direction(line.xi);
        CHECK(std::abs(d.norm() - 1) < 1e-12);
        const Eigen::Vector3d step = line_point(line, r2).xyz() - line_point(line, r).xyz();
        CHECK((step - (r2 - r) * d).norm() < 1e-12);
        // the foot point r = 0 is the closest point to the origin
        CHECK(std::abs(line_point(line, 0.0).xyz().dot(d)) < 1e-12);
    }
}

TEST_CASE("Wirtinger derivatives of monomials") {
    const cplx xi(0.3, -0.7);
    const auto w = wirtinger([](cplx z) { return z * z * std::conj(z); }, xi, 1e-5);
    CHECK(std::abs(w.d - 2.0 * xi * std::conj(xi)) < 1e-9);
    CHECK(std::abs(w.dbar - xi * xi) < 1e-9);
}

TEST_CASE("check_lagrangian_pde examples") {
    const auto pts = probe_points(200);
    CHECK(check_lagrangian_pde([](cplx) { return cplx(0.0); }, pts) == 0.0);

    // F = i xi: d[F/(1+|xi|^2)^2] = i (1 - |xi|^2)/(1 + |xi|^2)^3, so the
    // defect is 2 (1 - |xi|^2)/(1 + |xi|^2)^3.
    const ComplexField f = [](cplx z) { return 1.0i * z; };
    const cplx half[] = {0.5};
    CHECK(check_lagrangian_pde(f, half) == doctest::Approx(2 * 0.75 / std::pow(1.25, 3)).epsilon(1e-8));
    const cplx one[] = {1.0};
    CHECK(check_lagrangian_pde(f, one) < 1e-9);
    CHECK(check_lagrangian_pde(f, pts) > 0.5);

    CHECK_THROWS_AS(check_lagrangian_pde(f, pts, 0.0), InputError);
    const ComplexField bad = [](cplx z) { return std::abs(z - 0.5) < 1e-3 ? cplx(NAN) : z; };
    CHECK_THROWS_AS(check_lagrangian_pde(bad, half), CertificationError);
}

TEST_CASE("check_support_relation examples") {
    const auto pts = probe_points(200);
    CHECK(check_support_relation([](cplx) { return 7.0; }, [](cplx) { return cplx(0.0); }, pts) == 0.0);
    // r = |xi|^2 / (1 + |xi|^2) needs F = xi/2
    const RealField r = [](cplx z) { return std::norm(z) / (1 + std::norm(z)); };
    CHECK(check_support_relation(r, [](cplx z) { return 0.5 * z; }, pts) < 1e-8);
    CHECK(check_support_relation(r, [](cplx z) { return z; }, pts) > 0.1);
}

TEST_CASE("probe points") {
    const cplx sing[] = {0.0};
    const auto pts = probe_points(500, 2.0, sing, 1e-3);
    CHECK(pts.size() <= 500);
    CHECK(pts.size() >= 499);
    for (const auto& p : pts) {
        CHECK(std::abs(p) <= 2.0 + 1e-12);
        CHECK(std::abs(p) > 1e-3);
    }
    CHECK(probe_points(500) == probe_points(500));
}

TEST_CASE("constructed surfaces satisfy the PDE with second-order error") {
    using LD = long double;
    for (int N = 2; N <= 8; ++N) {
        WeightedSymmetricProfile p;
        if (N == 2) {
            p = profile({0.0, 0.25});
        } else {
            Rng rng(9, N);
            p = sample_constrained(N, rng);
        }
        const auto s = build_surface(p, 0.2, 1.0);
        std::vector<std::complex<LD>> pts;
        for (const auto& z : probe_points(60)) pts.emplace_back(z.real(), z.imag());
        auto F = [&](std::complex<LD> z) { return eval_F(s, z); };
        auto R = [&](std::complex<LD> z) { return eval_r(s, z); };
        const LD e1 = lagrangian_pde_residual<LD>(F, pts, 1e-4L);
        const LD e2 = lagrangian_pde_residual<LD>(F, pts, 5e-5L);
        CHECK(double(e1 / e2) == doctest::Approx(4.0).epsilon(0.5));
        const LD s1 = support_relation_residual<LD>(R, F, pts, 1e-4L);
        const LD s2 = support_relation_residual<LD>(R, F, pts, 5e-5L);
        CHECK(double(s1 / s2) == doctest::Approx(4.0).epsilon(0.5));
    }
}

TEST_CASE("series conditions") {
    SectionSeries empty;
    const auto r0 = check_series_conditions(empty);
    CHECK(r0.pass);
    CHECK(r0.max_defect == 0.0);

    SectionSeries one;
    one.set(1, 0, 1.0i);
    const auto r1 = check_series_conditions(one);
    CHECK_FALSE(r1.pass);
    CHECK(r1.families.at("eq6").max() == doctest::Approx(2.0));

    SectionSeries real10;
    real10.set(1, 0, 3.0);
    CHECK(check_series_conditions(real10).families.at("eq6").max() == 0.0);

    for (int N = 2; N <= 8; ++N) {
        Rng rng(13, N);
        const auto p = N == 2 ? profile({0.0, 0.25}) : sample_constrained(N, rng);
        const auto series = section_series(build_surface(p, 1.0, 2.0));
        const auto rep = check_series_conditions(series, 1e-12);
        CHECK(rep.pass);
        CHECK(rep.max_boundary_defect < 1e-12);
        for (const char* fam : {"eq6", "eq7", "eq8", "I", "II", "III", "IV"}) CHECK(rep.families.count(fam) == 1);
    }
}

TEST_CASE("a series passing the conditions gives a Lagrangian section") {
    Rng rng(19, 5);
    const auto series = section_series(build_surface(sample_constrained(5, rng), 0.3));
    REQUIRE(check_series_conditions(series).pass);
    const ComplexField f = [&](cplx z) { return series.evaluate(z); };
    CHECK(check_lagrangian_pde(f, probe_points(100)) < 1e-6);

    SectionSeries broken = series;
    broken.add(2, 1, 0.5i);
    CHECK_FALSE(check_series_conditions(broken).pass);
    const ComplexField g = [&](cplx z) { return broken.evaluate(z); };
    CHECK(check_lagrangian_pde(g, probe_points(100)) > 1e-3);
}

TEST_CASE("fourier_G") {
    SectionSeries s;
    s.set(0, 1, 5.0);
    const auto g0 = fourier_G(s, 0);
    REQUIRE(g0.size() == 1);
    CHECK(g0[0] == cplx(5.0));
    CHECK(evaluate_trig(g0, 1.234) == cplx(5.0));

    for (int N = 2; N <= 7; ++N) {
        Rng rng(29, N);
        const auto p = N == 2 ? profile({0.0, 0.25}) : sample_constrained(N, rng);
        const auto surf = build_surface(p, 1.5, 1.0);
        const auto series = section_series(surf);
        for (int k = 0; k < N; ++k) CHECK(fourier_G(series, k).cwiseAbs().maxCoeff() < 1e-14);
        CHECK((fourier_G(series, N) - effective_coeffs(surf)).cwiseAbs().maxCoeff() < 1e-13);
    }
    CHECK_THROWS_AS(fourier_G(s, -1), InputError);
}
