#ifndef FANO_PLANES_HPP
#define FANO_PLANES_HPP

#include <vector>

#include "fano/lattice.hpp"
#include "fano/weyl.hpp"

namespace fano {

/// Label of one of the 2^{n+2} planes: a subset I of {1..n+3} modulo
/// complementation, stored as the unique representative with |rep| <= m+1
/// (n+3 is odd, so |I| = |I^c| cannot happen).
struct PlaneLabel {
    int n = 0;
    std::vector<int> rep;  // sorted, 1-based

    bool operator==(const PlaneLabel& o) const { return n == o.n && rep == o.rep; }
    bool operator<(const PlaneLabel& o) const {
        if (rep.size() != o.rep.size()) return rep.size() < o.rep.size();
        return rep < o.rep;
    }
};

enum class Family { Tphi, Tpsi };

/// Canonical label for I modulo complement.
PlaneLabel canonical(const std::vector<int>& I, int n);

/// All 2^{n+2} labels, sorted.
std::vector<PlaneLabel> all_labels(int n);

/// The class M_I of the labelled plane in the given Z-side space.
LatticeClass plane_class(const PlaneLabel& L, const SpacePtr& space);

/// dim(M_{L1} cap M_{L2}) = m - |symmetric difference| (taken mod complement);
/// -1 means the planes are disjoint.
int intersection_dim(const PlaneLabel& a, const PlaneLabel& b);

/// Connected family of the image of the labelled plane under the i-th double
/// cover: Tpsi iff the representative J of the label with i notin J has even
/// cardinality (the base label maps to Tpsi by convention).
Family family_parity(int i, const PlaneLabel& L);

/// Label of sigma_I(M_L) = M_{rep symmetric-difference I}.
PlaneLabel label_after_sigma(const std::vector<int>& I, const PlaneLabel& L);

}  // namespace fano

#endif
