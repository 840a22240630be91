#pragma once

#include "mixsing/mixed_poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mixsing {

struct SupportPoint {
    IVec point;                       // nu + mu
    std::vector<size_t> term_indices; // into f.terms
};

struct Face {
    int dim = 0;
    std::vector<SupportPoint> vertices;  // extreme points (n <= 2), else all points
    std::vector<SupportPoint> points;    // every support point on the face
    IVec weight;
    long long d_value = 0;
    std::vector<std::pair<IVec, IVec>> mixed_face;
};

struct NewtonBoundary2D {
    std::vector<SupportPoint> vertices;  // descending first coordinate
    std::vector<Face> edges;             // edges[i] joins vertices[i] and vertices[i+1]
    bool convenient = false;
};

struct DualDiagram2D {
    std::vector<IVec> rays;  // one per edge, in edge order
};

std::vector<SupportPoint> support_points(const MixedPolynomial& f);

Face face(const IVec& P, const MixedPolynomial& f);
MixedPolynomial face_function(const IVec& P, const MixedPolynomial& f);
long long min_rdeg(const IVec& P, const MixedPolynomial& f);

NewtonBoundary2D boundary2d(const MixedPolynomial& f);

// Subsets as sorted 0-based index lists, ordered by size then lexicographically.
std::vector<std::vector<int>> nv_sets(const MixedPolynomial& f);
bool is_k_convenient(const MixedPolynomial& f, int k);
bool is_convenient(const MixedPolynomial& f);

bool is_simple_vertex(const MixedPolynomial& f, const IVec& vertex);

struct PolarSections {
    std::optional<long long> a1;  // from the vertex on the z1-axis
    std::optional<long long> a2;  // from the vertex on the z2-axis
};
PolarSections polar_sections(const MixedPolynomial& f);

DualDiagram2D dual_diagram(const MixedPolynomial& f);

// Number of lattice points on the boundary polyline.
long long boundary_lattice_points(const NewtonBoundary2D& b);

}  // namespace mixsing
