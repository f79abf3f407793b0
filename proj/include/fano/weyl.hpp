#ifndef FANO_WEYL_HPP
#define FANO_WEYL_HPP

#include <optional>
#include <set>
#include <vector>

#include "fano/lattice.hpp"

namespace fano {

/// Element of W(D_N): a signed permutation with an even number of sign flips.
/// Acts on the eps-part of a Z-side class by w(eps_i) = signs[i] * eps_{perm[i]}
/// (0-based internally); eta is fixed.
struct WeylElement {
    int N = 0;
    std::vector<int> perm;   // i -> perm[i], 0-based
    std::vector<int> signs;  // +1 / -1, attached to the source index

    bool is_identity() const;
    bool operator==(const WeylElement& o) const { return N == o.N && perm == o.perm && signs == o.signs; }
    bool operator<(const WeylElement& o) const;
};

WeylElement weyl_identity(int N);

/// w(eps_i) must hold an even number of -1 signs; throws otherwise.
WeylElement make_weyl(std::vector<int> perm, std::vector<int> signs);

/// Composition a after b: (a*b)(x) = a(b(x)).
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);

/// Sign-change involution sigma_I, I as 1-based indices. Stored with the
/// even-cardinality flip set (sigma_I = sigma_{I^c} on the lattice).
WeylElement sigma(const std::vector<int>& I, int N);

/// Pure permutation (stabilizer of M_0), kappa 1-based: eps_i -> eps_{kappa(i)}.
WeylElement perm_element(const std::vector<int>& kappa_one_based);

/// Unique factorization w = sigma(I) o rho with rho in the stabilizer of M_0.
/// Returns (I as sorted 1-based even set, rho's permutation 1-based).
std::pair<std::vector<int>, std::vector<int>> decompose(const WeylElement& w);

LatticeClass act(const WeylElement& w, const LatticeClass& x);

/// Matrix of w in the canonical eps basis of a Z-side space.
QMat weyl_matrix(const WeylElement& w, const SpacePtr& space);

/// Converts a linear map back to a Weyl element; nullopt when the matrix is
/// not "eta fixed + signed permutation with even flips".
std::optional<WeylElement> weyl_from_matrix(const QMat& mat);

struct GroupHandle {
    int N = 0;
    std::vector<WeylElement> generators;
};

GroupHandle wprime_group(int n);      // the 2^{n+2} sign-change subgroup W'
GroupHandle weyl_group(int n);        // full W(D_{n+3})

std::set<LatticeClass> orbit(const GroupHandle& g, const LatticeClass& x);

/// Exhaustive element list (BFS closure); throws if it would exceed `cap`.
std::vector<WeylElement> elements(const GroupHandle& g, std::size_t cap = 1u << 22);

/// Exact order by a stabilizer chain on the 2N signed points; no enumeration.
/// Refuses (throws) when N exceeds `n_cap`.
Int group_order(const GroupHandle& g, int n_cap = 10);

}  // namespace fano

#endif
