#include "fano/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace fano {

bool WeylElement::is_identity() const {
    for (int i = 0; i < N; ++i)
        if (perm[std::size_t(i)] != i || signs[std::size_t(i)] != 1) return false;
    return true;
}

bool WeylElement::operator<(const WeylElement& o) const {
    if (perm != o.perm) return perm < o.perm;
    return signs < o.signs;
}

WeylElement weyl_identity(int N) {
    WeylElement w;
    w.N = N;
    w.perm.resize(std::size_t(N));
    w.signs.assign(std::size_t(N), 1);
    for (int i = 0; i < N; ++i) w.perm[std::size_t(i)] = i;
    return w;
}

WeylElement make_weyl(std::vector<int> perm, std::vector<int> signs) {
    WeylElement w;
    w.N = int(perm.size());
    if (signs.size() != perm.size()) throw std::invalid_argument("make_weyl: size mismatch");
    std::vector<bool> seen(perm.size(), false);
    int flips = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] < 0 || perm[i] >= w.N || seen[std::size_t(perm[i])])
            throw std::invalid_argument("make_weyl: not a permutation");
        seen[std::size_t(perm[i])] = true;
        if (signs[i] == -1)
            ++flips;
        else if (signs[i] != 1)
            throw std::invalid_argument("make_weyl: signs must be +-1");
    }
    if (flips % 2 != 0) throw std::invalid_argument("make_weyl: odd number of sign flips");
    w.perm = std::move(perm);
    w.signs = std::move(signs);
    return w;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    if (a.N != b.N) throw std::invalid_argument("compose: size mismatch");
    WeylElement w;
    w.N = a.N;
    w.perm.resize(std::size_t(a.N));
    w.signs.resize(std::size_t(a.N));
    for (int i = 0; i < a.N; ++i) {
        int j = b.perm[std::size_t(i)];
        w.perm[std::size_t(i)] = a.perm[std::size_t(j)];
        w.signs[std::size_t(i)] = b.signs[std::size_t(i)] * a.signs[std::size_t(j)];
    }
    return w;
}

WeylElement inverse(const WeylElement& w) {
    WeylElement r;
    r.N = w.N;
    r.perm.resize(std::size_t(w.N));
    r.signs.resize(std::size_t(w.N));
    for (int i = 0; i < w.N; ++i) {
        r.perm[std::size_t(w.perm[std::size_t(i)])] = i;
        r.signs[std::size_t(w.perm[std::size_t(i)])] = w.signs[std::size_t(i)];
    }
    return r;
}

WeylElement sigma(const std::vector<int>& I, int N) {
    std::vector<bool> flip(std::size_t(N), false);
    std::size_t count = 0;
    for (int i : I) {
        if (i < 1 || i > N) throw std::invalid_argument("sigma: index out of range");
        if (!flip[std::size_t(i - 1)]) {
            flip[std::size_t(i - 1)] = true;
            ++count;
        }
    }
    if (count % 2 != 0)  // sigma_I = sigma_{I^c}; keep the even flip set
        for (std::size_t i = 0; i < flip.size(); ++i) flip[i] = !flip[i];
    WeylElement w = weyl_identity(N);
    for (std::size_t i = 0; i < flip.size(); ++i)
        if (flip[i]) w.signs[i] = -1;
    return w;
}

WeylElement perm_element(const std::vector<int>& kappa) {
    std::vector<int> p(kappa.size());
    for (std::size_t i = 0; i < kappa.size(); ++i) p[i] = kappa[i] - 1;
    return make_weyl(std::move(p), std::vector<int>(kappa.size(), 1));
}

std::pair<std::vector<int>, std::vector<int>> decompose(const WeylElement& w) {
    std::vector<int> I, rho(static_cast<std::size_t>(w.N));
    for (int i = 0; i < w.N; ++i) {
        rho[std::size_t(i)] = w.perm[std::size_t(i)] + 1;
        if (w.signs[std::size_t(i)] == -1) I.push_back(w.perm[std::size_t(i)] + 1);
    }
    std::sort(I.begin(), I.end());
    return {I, rho};
}

LatticeClass act(const WeylElement& w, const LatticeClass& x) {
    if (x.space()->side() != Side::Z) throw std::invalid_argument("act: Z-side classes only");
    if (w.N != x.space()->points()) throw std::invalid_argument("act: size mismatch");
    QVec c = x.canonical_coords();
    QVec r(c.size(), Rat(0));
    r[0] = c[0];
    for (int i = 0; i < w.N; ++i)
        r[std::size_t(w.perm[std::size_t(i)]) + 1] = c[std::size_t(i) + 1] * w.signs[std::size_t(i)];
    LatticeClass y(x.space(), x.space()->canonical_basis(), std::move(r));
    return y.in_basis(x.basis());
}

QMat weyl_matrix(const WeylElement& w, const SpacePtr& space) {
    if (space->side() != Side::Z || w.N != space->points()) throw std::invalid_argument("weyl_matrix: bad space");
    QMat m(space->rank(), space->rank());
    m(0, 0) = 1;
    for (int i = 0; i < w.N; ++i)
        m(std::size_t(w.perm[std::size_t(i)]) + 1, std::size_t(i) + 1) = w.signs[std::size_t(i)];
    return m;
}

std::optional<WeylElement> weyl_from_matrix(const QMat& mat) {
    if (mat.rows() != mat.cols() || mat.rows() < 2) return std::nullopt;
    const int N = int(mat.rows()) - 1;
    if (mat(0, 0) != 1) return std::nullopt;
    for (int i = 1; i <= N; ++i)
        if (mat(0, std::size_t(i)) != 0 || mat(std::size_t(i), 0) != 0) return std::nullopt;
    std::vector<int> perm(std::size_t(N), -1), signs(std::size_t(N), 1);
    for (int j = 0; j < N; ++j) {
        int hit = -1;
        for (int i = 0; i < N; ++i) {
            const Rat& v = mat(std::size_t(i) + 1, std::size_t(j) + 1);
            if (v == 0) continue;
            if (hit != -1 || (v != 1 && v != -1)) return std::nullopt;
            hit = i;
            signs[std::size_t(j)] = (v == 1) ? 1 : -1;
        }
        if (hit == -1) return std::nullopt;
        perm[std::size_t(j)] = hit;
    }
    try {
        return make_weyl(std::move(perm), std::move(signs));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

GroupHandle wprime_group(int n) {
    const int N = n + 3;
    GroupHandle g;
    g.N = N;
    for (int i = 2; i <= N; ++i) g.generators.push_back(sigma({1, i}, N));
    return g;
}

GroupHandle weyl_group(int n) {
    const int N = n + 3;
    GroupHandle g = wprime_group(n);
    for (int i = 1; i < N; ++i) {
        std::vector<int> kappa(static_cast<std::size_t>(N));
        for (int j = 1; j <= N; ++j) kappa[std::size_t(j - 1)] = j;
        std::swap(kappa[std::size_t(i - 1)], kappa[std::size_t(i)]);
        g.generators.push_back(perm_element(kappa));
    }
    return g;
}

std::set<LatticeClass> orbit(const GroupHandle& g, const LatticeClass& x) {
    std::set<LatticeClass> seen{x};
    std::deque<LatticeClass> queue{x};
    while (!queue.empty()) {
        LatticeClass cur = queue.front();
        queue.pop_front();
        for (const WeylElement& w : g.generators) {
            LatticeClass next = act(w, cur);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen;
}

std::vector<WeylElement> elements(const GroupHandle& g, std::size_t cap) {
    std::set<WeylElement> seen{weyl_identity(g.N)};
    std::deque<WeylElement> queue{weyl_identity(g.N)};
    while (!queue.empty()) {
        WeylElement cur = queue.front();
        queue.pop_front();
        for (const WeylElement& w : g.generators) {
            WeylElement next = compose(w, cur);
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw std::runtime_error("elements: cap exceeded");
                queue.push_back(next);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

// W(D_N) acts faithfully on the 2N signed points {+-eps_i}; point i+ is i,
// point i- is N+i. Orders come from a plain stabilizer chain over that action.
using PointPerm = std::vector<int>;

PointPerm to_point_perm(const WeylElement& w) {
    const int N = w.N;
    PointPerm p(static_cast<std::size_t>(2 * N));
    for (int i = 0; i < N; ++i) {
        int img = w.perm[std::size_t(i)];
        if (w.signs[std::size_t(i)] == 1) {
            p[std::size_t(i)] = img;
            p[std::size_t(N + i)] = N + img;
        } else {
            p[std::size_t(i)] = N + img;
            p[std::size_t(N + i)] = img;
        }
    }
    return p;
}

bool pp_identity(const PointPerm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != int(i)) return false;
    return true;
}

PointPerm pp_compose(const PointPerm& a, const PointPerm& b) {  // a after b
    PointPerm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[std::size_t(b[i])];
    return r;
}

PointPerm pp_inverse(const PointPerm& a) {
    PointPerm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[std::size_t(a[i])] = int(i);
    return r;
}

Int chain_order(std::vector<PointPerm> gens, int base_point) {
    gens.erase(std::remove_if(gens.begin(), gens.end(), pp_identity), gens.end());
    if (gens.empty()) return 1;
    const int k = int(gens[0].size());
    int b = base_point;
    while (b < k) {
        bool moved = false;
        for (const auto& g : gens)
            if (g[std::size_t(b)] != b) {
                moved = true;
                break;
            }
        if (moved) break;
        ++b;
    }
    if (b == k) return 1;

    // orbit of b with transversal
    std::map<int, PointPerm> transversal;
    PointPerm id(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) id[std::size_t(i)] = i;
    transversal[b] = id;
    std::deque<int> queue{b};
    while (!queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            int q = g[std::size_t(p)];
            if (!transversal.count(q)) {
                transversal[q] = pp_compose(g, transversal[p]);
                queue.push_back(q);
            }
        }
    }

    // Schreier generators for the stabilizer of b
    std::set<PointPerm> stab;
    for (const auto& [p, t] : transversal)
        for (const auto& g : gens) {
            const PointPerm gt = pp_compose(g, t);
            PointPerm s = pp_compose(pp_inverse(transversal.at(g[std::size_t(p)])), gt);
            if (!pp_identity(s)) stab.insert(std::move(s));
        }
    return Int(transversal.size()) * chain_order({stab.begin(), stab.end()}, b + 1);
}

}  // namespace

Int group_order(const GroupHandle& g, int n_cap) {
    if (g.N > n_cap) throw std::runtime_error("group_order: N exceeds cap, refusing");
    if (g.generators.empty()) return 1;
    std::vector<PointPerm> gens;
    gens.reserve(g.generators.size());
    for (const WeylElement& w : g.generators) gens.push_back(to_point_perm(w));
    return chain_order(std::move(gens), 0);
}

}  // namespace fano
