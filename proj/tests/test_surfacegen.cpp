#include <doctest.h>

#include <sstream>

#include "umbilic/mesh.hpp"
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

const auto kN3 = profile({1.0, 0.0, 0.0});
const auto kN4 = profile({0.0, 1.0, 0.0, 0.0});
const auto kN2 = profile({0.0, 0.25});

WeightedSymmetricProfile seeded(int N, std::uint64_t s) {
    Rng rng(101, N, s);
    return sample_constrained(N, rng);
}

cplx random_point(Rng& rng, double radius = 2.0) {
    return std::polar(radius * std::sqrt(rng.uniform()), 2 * kPi * rng.uniform());
}

// Stereographic coordinate of a unit normal (inverse of direction()).
cplx stereo(const Eigen::Vector3d& n) { return cplx(n.x(), n.y()) / (1 + n.z()); }

}  // namespace

TEST_CASE("build_surface examples") {
    const auto s3 = build_surface(kN3, 1.0, 10.0);
    CHECK(std::abs(s3.a_n1 - 1.0) < 1e-15);
    CHECK(s3.phase == 0.0);
    REQUIRE(s3.a_low.size() == 3);
    CHECK(std::abs(s3.a_low[0]) < 1e-15);
    CHECK(std::abs(s3.a_low[1]) < 1e-15);
    CHECK(std::abs(s3.a_low[2] - 1.5) < 1e-15);
    CHECK(s3.support_constant == 10.0);

    const auto s2 = build_surface(kN2);
    REQUIRE(s2.a_low.size() == 2);
    CHECK(std::abs(s2.a_low[0] - 1.0 / 12) < 1e-15);
    CHECK(std::abs(s2.a_low[1]) < 1e-15);
    CHECK(s2.even);
    CHECK(s2.a_mid == doctest::Approx(1.0));

    CHECK_THROWS_AS(build_surface(profile({1.0i, 1.0, 0.0, 0.0})), InputError);
    CHECK_THROWS_AS(build_surface(kN3, 0.0), InputError);
}

TEST_CASE("leading coefficient phase and coefficient map") {
    for (int N = 3; N <= 9; ++N) {
        const auto p = seeded(N, 0);
        const auto s = build_surface(p, 2.5);
        CHECK(std::abs(std::abs(s.a_n1) - 2.5) < 1e-14);
        CHECK(std::abs(std::conj(s.a_n1) / s.a_n1 - p(N - 2)) < 1e-13);
        for (int n = 0; n <= N - 2; ++n) {
            const cplx expect = binomial(N, n) * s.a_n1 * p(n) / double(n + 1);
            CHECK(std::abs(s.layer_coefficient(N - n) - expect) < 1e-12 * (1 + std::abs(expect)));
        }
    }
}

TEST_CASE("eval_F, eval_r and eval_dbarF on the N=3 fixture") {
    const auto s = build_surface(kN3, 1.0, 10.0);
    CHECK(std::abs(eval_F(s, cplx(0.0))) == 0.0);
    CHECK(std::abs(eval_F(s, cplx(1.0)) - 4.0) < 1e-14);
    CHECK(eval_r(s, cplx(0.0)) == 10.0);
    CHECK(std::abs(eval_dbarF(s, cplx(0.0))) == 0.0);
    CHECK(std::abs(eval_dbarF(s, cplx(1.0)) - 8.0) < 1e-14);

    const auto e0 = embed(s, 0.0);
    CHECK(std::abs(e0.z) == 0.0);
    CHECK(e0.t == 10.0);
    const auto e1 = embed(s, 1.0);
    const auto ref = line_point({1.0, 4.0}, eval_r(s, cplx(1.0)));
    CHECK((e1.xyz() - ref.xyz()).norm() < 1e-14);
}

TEST_CASE("effective coefficients") {
    const VectorXc b3 = effective_coeffs(build_surface(kN3));
    VectorXc e3(4);
    e3 << 0.0, 0.0, 3.0, 1.0;
    CHECK((b3 - e3).cwiseAbs().maxCoeff() < 1e-14);
    const VectorXc b2 = effective_coeffs(build_surface(kN2));
    VectorXc e2(3);
    e2 << 0.25, 0.0, 1.0;
    CHECK((b2 - e2).cwiseAbs().maxCoeff() < 1e-14);

    for (int N = 3; N <= 10; ++N) {
        for (std::uint64_t k = 0; k < 10; ++k) {
            const auto p = seeded(N, k);
            const VectorXc b = effective_coeffs(build_surface(p, 0.7));
            const VectorXc c = poly_from_profile(p).coeffs();
            CHECK(std::abs(b[N] - build_surface(p, 0.7).a_n1) < 1e-15);
            const double err = (b.head(N) / b[N] - c).cwiseAbs().maxCoeff() / (1 + c.cwiseAbs().maxCoeff());
            CHECK(err < 1e-12);
        }
    }
}

TEST_CASE("support function is real and dbarF is homogeneous") {
    Rng rng(77);
    for (int N = 2; N <= 8; ++N) {
        const auto p = N == 2 ? kN2 : seeded(N, 3);
        const auto s = build_surface(p, unit_peak_scale(p), 5.0);
        double worst_im = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const cplx xi = random_point(rng);
            worst_im = std::max(worst_im, std::abs(eval_r_complex(s, xi).imag()));
        }
        CHECK(worst_im < 1e-13);
        for (int i = 0; i < 50; ++i) {
            const cplx xi = random_point(rng);
            const double lambda = 0.1 + 2 * rng.uniform();
            const cplx base = eval_dbarF(s, xi) / (1 + std::norm(xi));
            const cplx scaled = eval_dbarF(s, lambda * xi) / (1 + std::norm(lambda * xi));
            CHECK(std::abs(scaled - std::pow(lambda, N) * base) <= 1e-12 * std::abs(std::pow(lambda, N) * base) + 1e-300);
        }
    }
}

TEST_CASE("dbarF matches finite differences of F") {
    Rng rng(5);
    for (int N = 2; N <= 8; ++N) {
        const auto p = N == 2 ? kN2 : seeded(N, 1);
        const auto s = build_surface(p, unit_peak_scale(p));
        for (int i = 0; i < 40; ++i) {
            const cplx xi = random_point(rng);
            const cplx fd = wirtinger([&](cplx z) { return eval_F(s, z); }, xi, 1e-5).dbar;
            CHECK(std::abs(fd - eval_dbarF(s, xi)) < 1e-6);
        }
    }
}

TEST_CASE("section series reproduces F") {
    Rng rng(8);
    for (int N = 2; N <= 8; ++N) {
        const auto s = build_surface(N == 2 ? kN2 : seeded(N, 2), 1.3, 4.0);
        const auto series = section_series(s);
        for (int i = 0; i < 30; ++i) {
            const cplx xi = random_point(rng);
            CHECK(std::abs(series.evaluate(xi) - eval_F(s, xi)) < 1e-12 * (1 + std::abs(eval_F(s, xi))));
        }
    }
}

TEST_CASE("long double evaluation agrees with double") {
    const auto s = build_surface(seeded(6, 0), 1.0, 3.0);
    const cplx xi(0.7, -1.1);
    const std::complex<long double> xl(0.7L, -1.1L);
    const auto fl = eval_F(s, xl);
    CHECK(std::abs(cplx(double(fl.real()), double(fl.imag())) - eval_F(s, xi)) < 1e-12);
    CHECK(double(eval_r(s, xl)) == doctest::Approx(eval_r(s, xi)).epsilon(1e-13));
}

TEST_CASE("unit peak normalization") {
    for (int N = 3; N <= 8; ++N) {
        const auto p = seeded(N, 4);
        CHECK(section_peak(build_surface(p, unit_peak_scale(p))) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(unit_peak_scale(kN3) == doctest::Approx(1.0 / section_peak(build_surface(kN3))));
}

TEST_CASE("default support constant") {
    const auto s = build_surface(kN3);
    double biggest = 0.0;
    for (int i = 0; i <= 200; ++i)
        for (int j = 0; j < 200; ++j) biggest = std::max(biggest, std::abs(eval_F(s, std::polar(2.0 * i / 200, 2 * kPi * j / 200))));
    CHECK(default_support_constant(s) == doctest::Approx(10 * biggest).epsilon(0.02));
}

TEST_CASE("meshes and OBJ") {
    const EllipsoidParams sphere{2.0, 2.0, 2.0};
    const GridSpec grid{12, 24, 2.0};
    const auto m = mesh([&](cplx xi) { return ellipsoid_embed(sphere, xi); }, grid);
    CHECK(m.vertices.size() == 1 + 12 * 24);
    CHECK(m.faces.size() == 24 + 2 * 11 * 24);
    for (const auto& v : m.vertices) CHECK(std::abs(v.xyz().norm() - std::sqrt(2.0)) < 1e-10);
    for (const auto& f : m.faces)
        for (int idx : f) CHECK((idx >= 0 && idx < int(m.vertices.size())));

    std::stringstream buf;
    write_obj(m, buf);
    const auto back = read_obj(buf);
    REQUIRE(back.vertices.size() == m.vertices.size());
    REQUIRE(back.faces.size() == m.faces.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < m.vertices.size(); ++i) worst = std::max(worst, (back.vertices[i] - m.vertices[i].xyz()).norm());
    CHECK(worst < 1e-13);
    CHECK(back.faces == m.faces);

    CHECK_THROWS_AS(mesh([](cplx) { return SpacePoint{cplx(NAN), 0.0}; }, grid), CertificationError);
    CHECK_THROWS_AS(mesh([](cplx) { return SpacePoint{}; }, grid), CertificationError);
    CHECK_THROWS_AS(mesh([](cplx) { return SpacePoint{}; }, GridSpec{0, 10, 1.0}), InputError);
}

TEST_CASE("convexity probe") {
    const EllipsoidParams sphere{1.0, 1.0, 1.0};
    const auto rep = convexity_probe(mesh([&](cplx xi) { return ellipsoid_embed(sphere, xi); }, GridSpec{}));
    CHECK(rep.pass);
    CHECK(rep.worst_margin > 0);

    // Near the umbilic the constant dominates; far out the cubic terms need a
    // larger C than 10.
    const GridSpec inner{40, 80, 0.5};
    CHECK(convexity_probe(build_surface(kN3, 1.0, 10.0), inner).pass);
    CHECK_FALSE(convexity_probe(build_surface(kN3, 1.0, 0.01), inner).pass);
    CHECK_FALSE(convexity_probe(build_surface(kN3, 1.0, 10.0), GridSpec{}).pass);

    auto s = build_surface(kN3, 1.0, 10.0);
    const auto autorep = convexity_probe_auto(s, GridSpec{});
    CHECK(autorep.pass);
    CHECK(autorep.doublings > 0);
    CHECK(s.support_constant == autorep.support_constant);
    CHECK(convexity_probe(s, GridSpec{}).pass);

    auto tiny = build_surface(kN3, 1.0, 1e-6);
    CHECK_THROWS_AS(convexity_probe_auto(tiny, GridSpec{}, 2), CertificationError);

    const double c_default = default_support_constant(build_surface(kN3));
    CHECK(convexity_probe(build_surface(kN3, 1.0, c_default), GridSpec{}).pass);
}

TEST_CASE("ellipsoid section") {
    const EllipsoidParams round{3.0, 3.0, 3.0};
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const cplx xi = random_point(rng, 3.0);
        const auto sec = ellipsoid_F_r(round, xi);
        CHECK(sec.r == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
        CHECK(std::abs(sec.F) < 1e-14);
    }

    const EllipsoidParams rot{2.0, 2.0, 1.0};
    for (int i = 0; i < 100; ++i) {
        const double R = 2 * rng.uniform(), th = 2 * kPi * rng.uniform();
        const cplx F = ellipsoid_F_r(rot, std::polar(R, th)).F;
        const cplx expect = (2.0 - 1.0) * R * (1 - R * R) * std::polar(1.0, th) /
                            std::sqrt(4 * 2.0 * R * R + 1.0 * (1 - R * R) * (1 - R * R));
        CHECK(std::abs(F - expect) < 1e-13);
    }

    CHECK_THROWS_AS(ellipsoid_F_r({1.0, -1.0, 1.0}, 0.5), InputError);
}

TEST_CASE("ellipsoid embedding lies on the quadric") {
    for (const EllipsoidParams p : {EllipsoidParams{3, 2, 1}, EllipsoidParams{2, 2, 1}, EllipsoidParams{1, 4, 9}}) {
        double worst = 0.0;
        for (int i = 0; i <= 60; ++i)
            for (int j = 0; j < 60; ++j) {
                const auto x = ellipsoid_embed(p, std::polar(4.0 * i / 60, 2 * kPi * j / 60)).xyz();
                worst = std::max(worst, std::abs(x.x() * x.x() / p.a1 + x.y() * x.y() / p.a2 + x.z() * x.z() / p.a3 - 1));
            }
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("ellipsoid dbarF") {
    const EllipsoidParams rot{2.0, 2.0, 1.0};
    CHECK(std::abs(ellipsoid_dbarF(rot, 0.0)) == 0.0);
    Rng rng(21);
    for (int i = 0; i < 50; ++i) {
        const cplx xi = random_point(rng);
        const cplx fd = wirtinger([&](cplx z) { return ellipsoid_F_r(rot, z).F; }, xi, 1e-5).dbar;
        CHECK(std::abs(ellipsoid_dbarF(rot, xi) - fd) < 1e-6);
    }
    // same modulus and winding as the published closed form, opposite sign
    for (int i = 0; i < 20; ++i) {
        const double R = 2 * rng.uniform(), th = 2 * kPi * rng.uniform();
        const double D = 4 * 2.0 * R * R + (1 - R * R) * (1 - R * R);
        const cplx published = 2 * 2.0 * (2.0 - 1.0) * R * R * (1 + R * R) * std::polar(1.0, 2 * th) / std::pow(D, 1.5);
        CHECK(std::abs(ellipsoid_dbarF(rot, std::polar(R, th)) + published) < 1e-14);
    }
    const EllipsoidParams tri{3.0, 2.0, 1.0};
    CHECK(std::abs(ellipsoid_dbarF(tri, 0.0)) > 0.1);
    const cplx xi(0.4, 0.3);
    const cplx fd = wirtinger([&](cplx z) { return ellipsoid_F_r(tri, z).F; }, xi, 1e-5).dbar;
    CHECK(std::abs(ellipsoid_dbarF(tri, xi) - fd) < 1e-8);
}

TEST_CASE("triaxial umbilics") {
    const EllipsoidParams p{3.0, 2.0, 1.0};
    const auto r = triaxial_umbilics(p);
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - std::sqrt(7 - std::sqrt(48.0))) < 1e-10);
    CHECK(std::abs(r[1] - std::sqrt(7 + std::sqrt(48.0))) < 1e-10);
    CHECK(r[0] == doctest::Approx(0.26795).epsilon(1e-4));
    CHECK(r[1] == doctest::Approx(3.73205).epsilon(1e-5));

    // classical umbilic points of the quadric, mapped to their normals
    const double x = std::sqrt(p.a1 * (p.a1 - p.a2) / (p.a1 - p.a3));
    const double z = std::sqrt(p.a3 * (p.a2 - p.a3) / (p.a1 - p.a3));
    for (double sz : {1.0, -1.0}) {
        const Eigen::Vector3d n = Eigen::Vector3d(x / p.a1, 0, sz * z / p.a3).normalized();
        const double R = stereo(n).real();
        CHECK(std::min(std::abs(R - r[0]), std::abs(R - r[1])) < 1e-12);
    }

    for (double R : r) {
        for (double sign : {1.0, -1.0}) {
            const double local = std::abs(ellipsoid_dbarF(p, 0.9 * sign * R));
            CHECK(std::abs(ellipsoid_dbarF(p, sign * R)) < 1e-8 * local);
        }
    }

    CHECK_THROWS_AS(triaxial_umbilics({2.0, 2.0, 1.0}), InputError);
}

TEST_CASE("Mobius recentering") {
    const EllipsoidParams p{3.0, 2.0, 1.0};
    const ComplexField F = [&](cplx xi) { return ellipsoid_F_r(p, xi).F; };
    const auto same = mobius_recenter(F, 0.0);
    Rng rng(1);
    for (int i = 0; i < 20; ++i) {
        const cplx xi = random_point(rng);
        CHECK(same(xi) == F(xi));
    }
    for (double R : triaxial_umbilics(p)) {
        for (double sign : {1.0, -1.0}) {
            const auto G = mobius_recenter(F, sign * R);
            CHECK(std::abs(numeric_dbar(G, 0.0)) < 1e-8);
        }
    }
    const auto G = mobius_recenter(F, 0.5);
    CHECK_THROWS_AS(G(2.0), CertificationError);
}

TEST_CASE("ellipsoid sections satisfy the support relation and the PDE") {
    for (const EllipsoidParams p : {EllipsoidParams{3, 2, 1}, EllipsoidParams{2, 2, 1}, EllipsoidParams{1, 4, 9}}) {
        const auto pts = probe_points(300);
        const RealField r = [&](cplx xi) { return ellipsoid_F_r(p, xi).r; };
        const ComplexField F = [&](cplx xi) { return ellipsoid_F_r(p, xi).F; };
        CHECK(check_support_relation(r, F, pts) < 1e-6);
        CHECK(check_lagrangian_pde(F, pts) < 1e-6);
    }
}
