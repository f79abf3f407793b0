#ifndef FANO_LATTICE_HPP
#define FANO_LATTICE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fano/linalg.hpp"
#include "fano/rational.hpp"

namespace fano {

enum class Side { Z, X };

class LatticeSpace;
using SpacePtr = std::shared_ptr<const LatticeSpace>;

/// One of the two rank-(n+4) quadratic lattices, n = 2m even.
///
/// Z side: canonical basis "eps" = {eta, eps_1..eps_{n+3}}, Gram
/// diag(4, (-1)^m, ..., (-1)^m); registered Q-basis "M" = {eta, M_1..M_{n+3}}.
/// X side: canonical basis "HE" = {H, E_1..E_{n+3}}, Gram diag(n-1, -1, ..., -1);
/// registered bases "KE" = {-K_X, E_1..E_{n+3}} and "Keps" = {-K_X, epstilde_i}.
class LatticeSpace : public std::enable_shared_from_this<LatticeSpace> {
public:
    int n() const { return n_; }
    int m() const { return n_ / 2; }
    int points() const { return n_ + 3; }     // n+3 indices
    std::size_t rank() const { return static_cast<std::size_t>(n_) + 4; }
    Side side() const { return side_; }

    const std::string& canonical_basis() const { return canonical_; }
    bool has_basis(const std::string& name) const { return to_canonical_.count(name) != 0; }

    /// Columns of the returned matrix are the named basis vectors in canonical
    /// coordinates.
    const QMat& to_canonical(const std::string& basis) const;
    const QMat& from_canonical(const std::string& basis) const;

    /// Gram matrix of the bilinear form in canonical coordinates.
    const QMat& gram() const { return gram_; }
    const QMat& gram_inverse() const { return gram_inv_; }

    /// Z side only: the integer lattice spanned by all 2^{n+2} plane classes,
    /// scaled by 4 so that coordinates are integral. Built once, cached.
    const IntLattice& plane_lattice() const;

private:
    friend SpacePtr make_space(int n, Side side);
    LatticeSpace() = default;

    int n_ = 0;
    Side side_ = Side::Z;
    std::string canonical_;
    QMat gram_, gram_inv_;
    std::map<std::string, QMat> to_canonical_, from_canonical_;

    mutable std::once_flag lattice_once_;
    mutable std::unique_ptr<IntLattice> plane_lattice_;
};

/// Builds the space; n must be even and >= 2.
SpacePtr make_space(int n, Side side);

/// A class (vector) in a lattice space, held in a named basis.
class LatticeClass {
public:
    LatticeClass(SpacePtr space, std::string basis, QVec coords);

    const SpacePtr& space() const { return space_; }
    const std::string& basis() const { return basis_; }
    const QVec& coords() const { return coords_; }

    /// Same class in another registered basis.
    LatticeClass in_basis(const std::string& target) const;
    QVec canonical_coords() const;

    LatticeClass operator+(const LatticeClass& o) const;
    LatticeClass operator-(const LatticeClass& o) const;
    LatticeClass operator*(const Rat& s) const;
    LatticeClass operator-() const { return *this * Rat(-1); }
    bool operator==(const LatticeClass& o) const;
    bool operator<(const LatticeClass& o) const;  // canonical-coordinate order

private:
    SpacePtr space_;
    std::string basis_;
    QVec coords_;
};

/// The symmetric bilinear form; both classes must live in the same space.
Rat pair(const LatticeClass& x, const LatticeClass& y);

LatticeClass convert(const LatticeClass& x, const std::string& target_basis);

/// Z side: membership in the Z-span of the plane classes (HNF test).
bool is_integral(const LatticeClass& x);

// Named classes.
LatticeClass cls_eta(const SpacePtr& s);                 // Z side
LatticeClass cls_eps(const SpacePtr& s, int i);          // Z side, 1-based
LatticeClass cls_H(const SpacePtr& s);                   // X side
LatticeClass cls_E(const SpacePtr& s, int i);            // X side, 1-based
LatticeClass cls_minus_K(const SpacePtr& s);             // X side
LatticeClass cls_eps_tilde(const SpacePtr& s, int i);    // X side, 1-based

/// Plane class M_I in eps coordinates, I given as 1-based sorted indices.
/// Lives here (not in planes) so the space can build its own HNF cache.
QVec plane_coords(int n, const std::vector<int>& I);

}  // namespace fano

#endif
