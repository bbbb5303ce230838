#include "umbilic/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace umbilic {

int MeshGrid::vertex_index(int ring, int spoke) const {
    if (ring == 0) return 0;
    return 1 + (ring - 1) * grid.n_angular + ((spoke % grid.n_angular) + grid.n_angular) % grid.n_angular;
}

MeshGrid mesh(const Embedding& embedding, const GridSpec& grid) {
    if (grid.n_radial < 1 || grid.n_angular < 3 || !(grid.r_max > 0))
        throw InputError("mesh: grid needs n_radial >= 1, n_angular >= 3, r_max > 0");
    MeshGrid m;
    m.grid = grid;
    m.params.push_back(0.0);
    for (int i = 1; i <= grid.n_radial; ++i)
        for (int j = 0; j < grid.n_angular; ++j)
            m.params.push_back(std::polar(grid.r_max * i / grid.n_radial, 2 * kPi * j / grid.n_angular));

    m.vertices.reserve(m.params.size());
    for (const cplx& xi : m.params) {
        const SpacePoint p = embedding(xi);
        if (!std::isfinite(p.z.real()) || !std::isfinite(p.z.imag()) || !std::isfinite(p.t))
            throw CertificationError("mesh: non-finite vertex");
        m.vertices.push_back(p);
    }

    for (int j = 0; j < grid.n_angular; ++j) m.faces.push_back({0, m.vertex_index(1, j), m.vertex_index(1, j + 1)});
    for (int i = 1; i < grid.n_radial; ++i)
        for (int j = 0; j < grid.n_angular; ++j) {
            const int a = m.vertex_index(i, j), b = m.vertex_index(i + 1, j);
            const int c = m.vertex_index(i + 1, j + 1), d = m.vertex_index(i, j + 1);
            m.faces.push_back({a, b, c});
            m.faces.push_back({a, c, d});
        }

    for (const auto& f : m.faces) {
        const Eigen::Vector3d p0 = m.vertices[f[0]].xyz();
        const double area = 0.5 * (m.vertices[f[1]].xyz() - p0).cross(m.vertices[f[2]].xyz() - p0).norm();
        if (area <= 1e-12) throw CertificationError("mesh: degenerate triangle");
    }
    return m;
}

void write_obj(const MeshGrid& m, std::ostream& out) {
    out << std::setprecision(15);
    for (const auto& v : m.vertices) out << "v " << v.z.real() << ' ' << v.z.imag() << ' ' << v.t << '\n';
    for (const auto& f : m.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

ObjData read_obj(std::istream& in) {
    ObjData data;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string tag;
        row >> tag;
        if (tag == "v") {
            Eigen::Vector3d v;
            if (!(row >> v.x() >> v.y() >> v.z())) throw InputError("read_obj: malformed vertex");
            data.vertices.push_back(v);
        } else if (tag == "f") {
            std::array<int, 3> f{};
            for (int& idx : f) {
                std::string token;
                if (!(row >> token)) throw InputError("read_obj: malformed face");
                idx = std::stoi(token.substr(0, token.find('/'))) - 1;
            }
            data.faces.push_back(f);
        }
    }
    for (const auto& f : data.faces)
        for (int idx : f)
            if (idx < 0 || idx >= static_cast<int>(data.vertices.size()))
                throw InputError("read_obj: face index out of range");
    return data;
}

ConvexityReport convexity_probe(const MeshGrid& m) {
    std::vector<std::set<int>> ring(m.vertices.size());
    for (const auto& f : m.faces)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (a != b) ring[f[a]].insert(f[b]);

    const int interior = 1 + (m.grid.n_radial - 1) * m.grid.n_angular;
    ConvexityReport report;
    report.worst_margin = std::numeric_limits<double>::infinity();
    for (int v = 0; v < interior; ++v) {
        const Eigen::Vector3d n = direction(m.params[v]);
        const Eigen::Vector3d p = m.vertices[v].xyz();
        for (int q : ring[v]) report.worst_margin = std::min(report.worst_margin, -(m.vertices[q].xyz() - p).dot(n));
    }
    report.pass = report.worst_margin > 0;
    return report;
}

ConvexityReport convexity_probe(const UmbilicSurface& surface, const GridSpec& grid) {
    auto report = convexity_probe(mesh([&](cplx xi) { return embed(surface, xi); }, grid));
    report.support_constant = surface.support_constant;
    return report;
}

ConvexityReport convexity_probe_auto(UmbilicSurface& surface, const GridSpec& grid, int max_doublings) {
    if (!(surface.support_constant > 0)) surface.support_constant = default_support_constant(surface, grid.r_max);
    for (int k = 0; k <= max_doublings; ++k) {
        auto report = convexity_probe(surface, grid);
        report.doublings = k;
        if (report.pass) return report;
        if (k < max_doublings) surface.support_constant *= 2;
    }
    throw CertificationError("convexity_probe_auto: not convex on the sampled domain after " +
                             std::to_string(max_doublings) + " doublings of C");
}

}  // namespace umbilic
