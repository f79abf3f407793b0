#ifndef FANO_MCD_HPP
#define FANO_MCD_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fano/cones.hpp"
#include "fano/lattice.hpp"

namespace fano {

/// The special subvariety J_{I,s}: the join of the span of the points indexed
/// by I with the (s-1)-st secant variety of the rational normal curve.
/// Divisorial exactly when |I| + 2s = n.
struct SpecialVariety {
    std::vector<int> I;  // sorted, 1-based
    int s = 0;

    int dim() const { return int(I.size()) + 2 * s - 1; }
    bool operator==(const SpecialVariety& o) const { return I == o.I && s == o.s; }
    bool operator<(const SpecialVariety& o) const {
        if (I.size() != o.I.size()) return I.size() < o.I.size();
        if (I != o.I) return I < o.I;
        return s < o.s;
    }
};

/// Hyperplane (H_I = k) of the chamber arrangement; valid when
/// 2 <= k <= (n+3)/2 and |I| and k have different parities.
struct WallDescriptor {
    std::vector<int> I;  // sorted, 1-based
    int k = 0;
};

/// Boundary wall of the moving polytope: (alpha_i = sign/2).
struct BoundaryWall {
    int i = 0;
    int sign = 0;  // +1 or -1
};

struct FiberWall {  // P^1-bundle over the (n-1)-dimensional Fano model
    int i = 0;
    int sign = 0;
    std::string fiber;  // description of the general fiber
};
struct DivisorialWall {  // blow-down of a point; exceptional divisor E_{I^c}
    std::vector<int> exceptional_I;  // the label I^c of the exceptional class
    LatticeClass exceptional_class;
};
struct FlipWall {  // flips a P^{k-2} into a P^{n+1-k}
    int from_dim = 0;  // k-2, on the Nef side
    int to_dim = 0;    // n+1-k
    SpecialVariety locus;       // J_{I,s} whose strict transform is flipped
    bool locus_on_nef_side = false;  // true when Nef(X) is on the (H_I <= k) side
};
using WallKind = std::variant<FiberWall, DivisorialWall, FlipWall>;

/// Sign pattern of a class against the full arrangement, in arrangement order.
struct ChamberDescriptor {
    bool effective = false;
    std::vector<int> signs;  // -1 / 0 / +1 per arrangement wall; empty if not effective
    bool in_mov = false, in_nef = false, in_fano = false;
    QVec sample;  // slice coordinates of the queried class (witness point)
};

/// The nested slice polytopes Delta (effective), Mov, Nef, Fano.
struct NamedPolytopes {
    AffinePolytope delta, mov, nef, fano;
};

/// The defining inequality rows (c0, c) of the same four polytopes, possibly
/// redundant. Cheap to build for any n, unlike the vertex enumeration.
struct NamedRows {
    std::vector<ZVec> delta, mov, nef, fano;
};

bool rows_contain(const std::vector<ZVec>& rows, const QVec& alpha);
bool rows_strictly_contain(const std::vector<ZVec>& rows, const QVec& alpha);

/// Divisor class E_I on the X side; requires |I^c| odd (|I| even). The case
/// I = {i}^c returns E_i.
LatticeClass class_E_I(const std::vector<int>& I, const SpacePtr& space);

/// Slice coordinates of a class: alpha_i = (y + x_i)/((n+1)y + sum x) - 1/2.
/// Throws when the class lies on the excluded hyperplane.
QVec radial_project(const LatticeClass& x);

/// Built once per n and cached. Enumerating the Mov vertices is expensive for
/// n >= 6; membership-only queries should use named_rows instead.
const NamedPolytopes& named_cones(int n);

const NamedRows& named_rows(int n);

/// Defining inequalities of the cone over the Fano polytope in the
/// {-K_X, E_i} coordinates (z, t_1..t_{n+3}): one row per subset I with
/// |I| = m mod 2, reading 2z + (|I|-m) sum t - 2 sum_{i in I} t_i >= 0.
std::vector<ZVec> fano_cone_inequalities_KE(int n);

/// All arrangement walls for this n, in a fixed deterministic order.
const std::vector<WallDescriptor>& arrangement(int n);

ChamberDescriptor chamber_of(const LatticeClass& x);

WallKind classify_wall(const WallDescriptor& w, int n);
WallKind classify_wall(const BoundaryWall& w, int n);

/// Steps of X -> X_Fano: step i (1-based) flips all J_{I,s} of dimension i,
/// i = 1..m-1. Also reports the two terminal counts of special P^m's.
struct FactorizationReport {
    std::vector<std::vector<SpecialVariety>> steps;
    Int terminal_m = 0;         // m-dimensional J_{I,s}
    Int terminal_m_minus_1 = 0; // (m-1)-dimensional J_{I,s}
};
FactorizationReport factorization(int n);

/// The intersection E_i cap J_{I,s} as a special subvariety J^i of
/// E_i = P^{n-1}; nullopt when the intersection is empty.
std::optional<SpecialVariety> restrict_to_E(int i, const SpecialVariety& j);

}  // namespace fano

#endif
