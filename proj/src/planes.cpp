#include "fano/planes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fano {

PlaneLabel canonical(const std::vector<int>& I, int n) {
    const int N = n + 3;
    std::set<int> s;
    for (int i : I) {
        if (i < 1 || i > N) throw std::invalid_argument("canonical: index out of range");
        if (!s.insert(i).second) throw std::invalid_argument("canonical: repeated index");
    }
    PlaneLabel L;
    L.n = n;
    if (int(s.size()) <= (n / 2) + 1) {
        L.rep.assign(s.begin(), s.end());
    } else {
        for (int i = 1; i <= N; ++i)
            if (!s.count(i)) L.rep.push_back(i);
    }
    return L;
}

std::vector<PlaneLabel> all_labels(int n) {
    const int N = n + 3;
    std::vector<PlaneLabel> out;
    out.reserve(std::size_t(1) << (N - 1));
    for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
        std::vector<int> I;
        for (int i = 0; i < N; ++i)
            if (mask & (1ul << i)) I.push_back(i + 1);
        if (int(I.size()) <= (n / 2) + 1) {
            PlaneLabel L;
            L.n = n;
            L.rep = std::move(I);
            out.push_back(std::move(L));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LatticeClass plane_class(const PlaneLabel& L, const SpacePtr& space) {
    if (space->side() != Side::Z || space->n() != L.n) throw std::invalid_argument("plane_class: wrong space");
    return LatticeClass(space, space->canonical_basis(), plane_coords(L.n, L.rep));
}

int intersection_dim(const PlaneLabel& a, const PlaneLabel& b) {
    if (a.n != b.n) throw std::invalid_argument("intersection_dim: mismatched n");
    const int N = a.n + 3, m = a.n / 2;
    std::vector<int> sym;
    std::set_symmetric_difference(a.rep.begin(), a.rep.end(), b.rep.begin(), b.rep.end(), std::back_inserter(sym));
    int d = std::min<int>(int(sym.size()), N - int(sym.size()));
    return m - d;  // d = m+1 gives -1: disjoint planes
}

Family family_parity(int i, const PlaneLabel& L) {
    if (i < 1 || i > L.n + 3) throw std::invalid_argument("family_parity: index out of range");
    bool in_rep = std::binary_search(L.rep.begin(), L.rep.end(), i);
    // take the representative J with i notin J
    std::size_t J_size = in_rep ? std::size_t(L.n + 3) - L.rep.size() : L.rep.size();
    return (J_size % 2 == 0) ? Family::Tpsi : Family::Tphi;
}

PlaneLabel label_after_sigma(const std::vector<int>& I, const PlaneLabel& L) {
    std::vector<int> Is = I;
    std::sort(Is.begin(), Is.end());
    std::vector<int> sym;
    std::set_symmetric_difference(L.rep.begin(), L.rep.end(), Is.begin(), Is.end(), std::back_inserter(sym));
    return canonical(sym, L.n);
}

}  // namespace fano
