#ifndef FANO_CONES_HPP
#define FANO_CONES_HPP

#include <optional>
#include <string>
#include <vector>

#include "fano/lattice.hpp"
#include "fano/planes.hpp"
#include "fano/weyl.hpp"

namespace fano {

/// Pointed, full-dimensional rational polyhedral cone in a fixed coordinate
/// system, carried as a dual pair: extremal rays and irredundant facet normals
/// (both primitive integer vectors, sorted lexicographically). All pairings
/// are the plain coordinate dot product; use dual_cone() for form-aware duals.
struct RationalCone {
    std::size_t dim = 0;
    std::vector<ZVec> rays;
    std::vector<ZVec> facets;

    bool operator==(const RationalCone& o) const { return rays == o.rays && facets == o.facets; }
};

/// Extremal rays of { x : a.x >= 0 for all a in halfspaces }, by incremental
/// double description. The cone must be pointed (rank of the normals = dim);
/// throws std::invalid_argument otherwise.
std::vector<ZVec> dual_rays(const std::vector<ZVec>& halfspaces, std::size_t dim);

RationalCone cone_from_rays(const std::vector<ZVec>& rays);
RationalCone cone_from_facets(const std::vector<ZVec>& normals);

bool membership(const RationalCone& c, const QVec& x);

/// The face { x in C : functional.x = 0 }, returned as its extremal-ray list.
/// The functional must be nonnegative on C; throws otherwise.
std::vector<ZVec> face_of(const RationalCone& c, const ZVec& functional);

/// Dual with respect to the bilinear form of `space`:
/// { y : pair(y, x) >= 0 for all x in C }.
RationalCone dual_cone(const RationalCone& c, const SpacePtr& space);

/// Full-dimensional bounded polytope in R^N: vertex list plus irredundant
/// facet inequalities c0 + c.alpha >= 0 (integer, primitive), both sorted.
struct AffinePolytope {
    int N = 0;
    std::vector<QVec> vertices;          // length-N points
    std::vector<ZVec> facets;            // length N+1: (c0, c1..cN)

    bool contains(const QVec& alpha) const;
    bool strictly_contains(const QVec& alpha) const;
    QVec vertex_barycenter() const;      // an interior point
};

AffinePolytope polytope_from_vertices(int N, const std::vector<QVec>& vertices);
AffinePolytope polytope_from_inequalities(int N, const std::vector<ZVec>& inequalities);

/// Convex hull of the odd-parity vertices of the cube [-1/2,1/2]^N; N >= 4.
AffinePolytope demihypercube(int N);

/// The odd/even-parity cube vertex v_I: coordinate i is +1/2 for i in I
/// (1-based), -1/2 otherwise.
QVec cube_vertex(const std::vector<int>& I, int N);

/// H_I(alpha) = sum_{j notin I} (1/2 + alpha_j) + sum_{i in I} (1/2 - alpha_i);
/// on cube vertices this is the graph distance |I delta J|.
Rat eval_H(const std::vector<int>& I, const QVec& alpha);

/// The cone spanned by all 2^{n+2} plane classes, in canonical eps
/// coordinates of the given Z-side space.
RationalCone cone_E(const SpacePtr& space);

/// Its dual with respect to the intersection form (same coordinates).
RationalCone cone_E_dual(const SpacePtr& space);

/// Generators of the dual cone as written out in closed form:
/// (1/2)eta +- eps_i, and (n+1)/2 eta + (-1)^m (sum_{j notin I} eps_j -
/// sum_{i in I} eps_i) for |I| even. Primitive integer vectors, sorted.
std::vector<ZVec> cone_E_dual_generators(int n);

/// All linear maps f with f(E) = E and f(x).eta = x.eta, found by searching
/// vertex permutations that preserve the pairwise intersection Gram matrix.
/// Every element is a signed permutation; refuses (throws) for n > n_cap.
std::vector<WeylElement> linear_symmetries(const SpacePtr& space, int n_cap = 4);

}  // namespace fano

#endif
