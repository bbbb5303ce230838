#include "umbilic/minitwistor.hpp"

#include <cmath>
#include <string>

namespace umbilic {

SpacePoint line_point(const OrientedLine& line, double r) {
    SpacePoint p;
    line_point(line.xi, line.eta, r, p.z, p.t);
    return p;
}

Eigen::Vector3d direction(cplx xi) {
    const double q = std::norm(xi);
    return Eigen::Vector3d(2 * xi.real(), 2 * xi.imag(), 1 - q) / (1 + q);
}

double check_lagrangian_pde(const ComplexField& f, std::span<const cplx> points, double h) {
    return lagrangian_pde_residual<double>(f, points, h);
}

double check_support_relation(const RealField& r, const ComplexField& f, std::span<const cplx> points,
                              double h) {
    return support_relation_residual<double>(r, f, points, h);
}

std::vector<cplx> probe_points(std::size_t count, double radius, std::span<const cplx> singular,
                               double exclusion) {
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    std::vector<cplx> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const cplx xi = std::polar(radius * std::sqrt((k + 0.5) / count), golden * static_cast<double>(k));
        bool keep = true;
        for (const cplx& s : singular) keep = keep && std::abs(xi - s) > exclusion;
        if (keep) out.push_back(xi);
    }
    return out;
}

cplx evaluate_trig(const VectorXc& coeffs, double theta) {
    const cplx step = std::polar(1.0, 2 * theta);
    cplx acc = 0.0;
    for (Eigen::Index n = coeffs.size() - 1; n >= 0; --n) acc = acc * step + coeffs[n];
    return acc;
}

}  // namespace umbilic
