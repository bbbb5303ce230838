#include <cmath>
#include <utility>

#include "umbilic/surfacegen.hpp"

namespace umbilic {

void EllipsoidParams::validate() const {
    if (!(a1 > 0 && a2 > 0 && a3 > 0)) throw InputError("ellipsoid: squared semi-axes must be positive");
}

EllipsoidSection ellipsoid_F_r(const EllipsoidParams& p, cplx xi) {
    p.validate();
    const cplx xb = std::conj(xi);
    const double q = std::norm(xi);
    const double radicand = (p.a1 * (xi + xb) * (xi + xb) - p.a2 * (xi - xb) * (xi - xb)).real() +
                            p.a3 * (1 - q) * (1 - q);
    if (!(radicand > 0)) throw InputError("ellipsoid: non-positive radicand");
    const double root = std::sqrt(radicand);
    const cplx num = p.a1 * (xi + xb) * (1.0 - xi * xi) + p.a2 * (xi - xb) * (1.0 + xi * xi) -
                     2.0 * p.a3 * xi * (1 - q);
    return {num / (2 * root), root / (1 + q)};
}

SpacePoint ellipsoid_embed(const EllipsoidParams& p, cplx xi) {
    const auto sec = ellipsoid_F_r(p, xi);
    return line_point({xi, sec.F}, sec.r);
}

cplx numeric_dbar(const ComplexField& section, cplx xi, double h) {
    const cplx coarse = wirtinger(section, xi, h).dbar;
    const cplx fine = wirtinger(section, xi, h / 2).dbar;
    return (4.0 * fine - coarse) / 3.0;
}

cplx ellipsoid_dbarF(const EllipsoidParams& p, cplx xi, double h) {
    p.validate();
    if (p.a1 == p.a2) {
        const double a = p.a1;
        const double q = std::norm(xi);
        const double d = 4 * a * q + p.a3 * (1 - q) * (1 - q);
        return -2 * a * (a - p.a3) * (1 + q) * xi * xi / std::pow(d, 1.5);
    }
    return numeric_dbar([&](cplx z) { return ellipsoid_F_r(p, z).F; }, xi, h);
}

std::vector<double> triaxial_umbilics(const EllipsoidParams& p) {
    p.validate();
    if (p.a1 == p.a2) throw InputError("triaxial_umbilics: rotationally symmetric input");
    const double ratio = ((p.a1 + p.a2) * p.a3 - 2 * p.a1 * p.a2) / ((p.a1 - p.a2) * p.a3);
    const double inner = ratio * ratio - 1;
    if (inner < 0) throw InputError("triaxial_umbilics: no real umbilic parameters");
    std::vector<double> out;
    for (double sign : {-1.0, 1.0}) {
        const double r2 = -ratio + sign * std::sqrt(inner);
        if (r2 >= 0) out.push_back(std::sqrt(r2));
    }
    if (out.empty()) throw InputError("triaxial_umbilics: no real umbilic parameters");
    return out;
}

ComplexField mobius_recenter(ComplexField section, double r0) {
    if (r0 == 0.0) return section;
    return [section = std::move(section), r0](cplx w) -> cplx {
        const cplx back = 1.0 - r0 * w;
        if (std::abs(back) < 1e-12) throw CertificationError("mobius_recenter: pole of the rotation");
        const cplx xi = (w + r0) / back;
        const cplx lift = 1.0 + r0 * xi;
        return (1 + r0 * r0) * section(xi) / (lift * lift);
    };
}

}  // namespace umbilic
