#ifndef FANO_BRIDGE_HPP
#define FANO_BRIDGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fano/cones.hpp"
#include "fano/lattice.hpp"
#include "fano/planes.hpp"
#include "fano/weyl.hpp"

namespace fano {

/// Linear map between lattice spaces, stored in canonical coordinates.
struct LatticeMap {
    SpacePtr source, target;
    QMat matrix;  // canonical(target) <- canonical(source)

    LatticeClass apply(const LatticeClass& x) const;
};

LatticeMap compose(const LatticeMap& a, const LatticeMap& b);  // a after b
LatticeMap inverse_map(const LatticeMap& f);

/// Divisor and curve classes on the G side both live in Z-lattice coordinates
/// (the two transport isomorphisms are coordinate identities in this chart);
/// the intersection number of a divisor and a curve is the Z-side pairing of
/// their representatives. CurveClass only marks the intended meaning.
struct CurveClass {
    LatticeClass cls;
};

Rat pair(const LatticeClass& divisor, const CurveClass& curve);

/// E_{M_L}: divisor class of the fixed prime divisor attached to the label.
LatticeClass beta_class(const PlaneLabel& L, const SpacePtr& zspace);

/// l_{M_L}: class of a line in the plane attached to the label.
CurveClass alpha_inv(const PlaneLabel& L, const SpacePtr& zspace);

/// -K_G in this chart is eta.
LatticeClass cls_minus_K_G(const SpacePtr& zspace);

enum class CurveKind {
    Line,      // l_M
    DM,        // d_M: degree n+1, orthogonal to all E_{sigma_i(M)}
    EM,        // e_M: line in the contracted divisor, E_M . e_M = -1
    Fiber,     // l_M + l_{sigma_i(M)}: fiber class of the i-th fibration at M
    Elliptic,  // c: the W-invariant class with -K_G . c = 4
};
CurveClass curve_class(CurveKind kind, const PlaneLabel& L, const SpacePtr& zspace, int i = 0);

/// delta_M = floor((m+1)/2) eta + (-1)^m M (divisor-side mate of d_M) and
/// eta_M = floor(m/2) eta + (-1)^{m-1} M (mate of e_M).
LatticeClass class_delta(const PlaneLabel& L, const SpacePtr& zspace);
LatticeClass class_eta_M(const PlaneLabel& L, const SpacePtr& zspace);

/// The transport isomorphism for the label: -K_X -> eta, E_i -> sigma_i(M_L).
LatticeMap h_tilde(const PlaneLabel& L, const SpacePtr& xspace, const SpacePtr& zspace);

/// H_{M_L} = m(-K_G) - (n-1) E_{M_L}; equals h_tilde applied to H.
LatticeClass class_H_M(const PlaneLabel& L, const SpacePtr& zspace);

/// Relabelling map on the X side: E_i -> E_{kappa(i)}, H fixed (kappa 1-based).
LatticeMap relabel_map(const std::vector<int>& kappa, const SpacePtr& xspace);

/// The six cones of the G side, all in Z-lattice coordinates.
struct GCones {
    RationalCone ne;        // curves: cone over the l_M
    RationalCone nef;       // divisors: dual of ne
    RationalCone eff;       // divisors: cone over the E_M
    RationalCone mov_curves;   // dual of eff
    RationalCone mov_div;      // movable divisors: transported cone over the Mov polytope
    RationalCone mov_div_dual; // curves: e_M and fiber classes
};
GCones g_cones(int n);

/// Human-readable name for a primitive ray vector of the G cones, if it is
/// one of the catalogued classes (E_M / l_M, D_M / d_M, eta_M / e_M, fiber
/// sums, eta). Empty string when unrecognized.
std::string name_ray(const ZVec& ray, int n);

/// Inverse of Prop-style pullback packaging: given f : X -> (G in Z chart)
/// with f = sigma_I o h_{M_0} o relabel(kappa), recover (canonical I, kappa).
/// nullopt when f is not of this shape.
std::optional<std::pair<PlaneLabel, std::vector<int>>> classify_pseudo_iso(const LatticeMap& f);

/// Pullback of the Cremona involution exchanging p_i and p_j (i != j):
/// fixes -K_X, swaps E_i and E_j, H -> nH - (n-1) sum_{h != i,j} E_h.
LatticeMap cremona_pullback(int i, int j, const SpacePtr& xspace);

struct AutBounds {
    Int lower = 0;  // 2^{n+2}
    Int upper = 0;  // 2^{n+2} (n+3)!
    bool sign_changes_preserve_cones = false;
    std::string note;
};
AutBounds aut_bounds(int n);

}  // namespace fano

#endif
