#ifndef UMBILIC_MESH_HPP
#define UMBILIC_MESH_HPP

#include <array>
#include <functional>
#include <iosfwd>
#include <vector>

#include "umbilic/surfacegen.hpp"

namespace umbilic {

struct GridSpec {
    int n_radial = 40;
    int n_angular = 80;
    double r_max = 2.0;
};

/// Polar grid in xi mapped through an embedding. Vertex 0 is xi = 0; ring i
/// (1-based) at radius r_max * i / n_radial holds n_angular vertices.
struct MeshGrid {
    std::vector<SpacePoint> vertices;
    std::vector<cplx> params;
    std::vector<std::array<int, 3>> faces;
    GridSpec grid;

    int vertex_index(int ring, int spoke) const;
};

using Embedding = std::function<SpacePoint(cplx)>;

MeshGrid mesh(const Embedding& embedding, const GridSpec& grid);

void write_obj(const MeshGrid& mesh, std::ostream& out);

struct ObjData {
    std::vector<Eigen::Vector3d> vertices;
    std::vector<std::array<int, 3>> faces;  ///< zero-based
};

ObjData read_obj(std::istream& in);

struct ConvexityReport {
    double worst_margin = 0.0;  ///< min over interior vertices of the distance of neighbours below the tangent plane
    bool pass = false;
    double support_constant = 0.0;
    int doublings = 0;
};

/// For every interior vertex p with outward direction n, every one-ring
/// neighbour q must satisfy (q - p) . n < 0.
ConvexityReport convexity_probe(const MeshGrid& mesh);
ConvexityReport convexity_probe(const UmbilicSurface& surface, const GridSpec& grid);

/// Doubles C from its current value until the probe passes; gives up after
/// `max_doublings` with CertificationError. The accepted C is written back.
ConvexityReport convexity_probe_auto(UmbilicSurface& surface, const GridSpec& grid, int max_doublings = 10);

}  // namespace umbilic

#endif  // UMBILIC_MESH_HPP
