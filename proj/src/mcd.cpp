#include "fano/mcd.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace fano {

namespace {

std::vector<int> complement(const std::vector<int>& I, int N) {
    std::set<int> s(I.begin(), I.end());
    std::vector<int> out;
    for (int i = 1; i <= N; ++i)
        if (!s.count(i)) out.push_back(i);
    return out;
}

// H_I >= k over the alpha slice, as an integer row (c0, c): doubled so that
// H_I = N/2 + sum_{j notin I} a_j - sum_{i in I} a_i clears the halves.
ZVec row_H_ge(const std::vector<int>& I, int k, int N) {
    ZVec r(std::size_t(N) + 1, Int(2));
    r[0] = N - 2 * k;
    for (int i : I) r[std::size_t(i)] = -2;
    return r;
}

ZVec row_H_le(const std::vector<int>& I, int k, int N) {
    ZVec r = row_H_ge(I, k, N);
    for (Int& x : r) x = -x;
    return r;
}

std::vector<ZVec> cube_rows(int N) {
    std::vector<ZVec> rows;
    for (int i = 1; i <= N; ++i)
        for (int sign : {1, -1}) {
            // sign=+1: 1/2 - a_i >= 0;  sign=-1: 1/2 + a_i >= 0
            ZVec r(std::size_t(N) + 1, Int(0));
            r[0] = 1;
            r[std::size_t(i)] = -2 * sign;
            rows.push_back(std::move(r));
        }
    return rows;
}

std::vector<std::vector<int>> subsets_with_parity(int N, int parity) {
    std::vector<std::vector<int>> out;
    for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
        if (__builtin_popcountl(mask) % 2 != parity) continue;
        std::vector<int> I;
        for (int i = 0; i < N; ++i)
            if (mask & (1ul << i)) I.push_back(i + 1);
        out.push_back(std::move(I));
    }
    return out;
}

void check_even_n(int n, const char* who) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument(std::string(who) + ": n must be even and >= 2");
}

/// Interior point of the Nef slice, cached; avoids building the full
/// NamedPolytopes set (the Mov vertex enumeration is expensive for n >= 6).
const QVec& nef_interior_point(int n) {
    static std::mutex mu;
    static std::map<int, QVec> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    AffinePolytope nef = polytope_from_inequalities(n + 3, named_rows(n).nef);
    return cache.emplace(n, nef.vertex_barycenter()).first->second;
}

}  // namespace

LatticeClass class_E_I(const std::vector<int>& I, const SpacePtr& space) {
    if (space->side() != Side::X) throw std::invalid_argument("class_E_I: X side only");
    const int n = space->n(), N = n + 3;
    std::set<int> s;
    for (int i : I) {
        if (i < 1 || i > N) throw std::invalid_argument("class_E_I: index out of range");
        if (!s.insert(i).second) throw std::invalid_argument("class_E_I: repeated index");
    }
    if ((N - int(s.size())) % 2 == 0) throw std::invalid_argument("class_E_I: |I^c| must be odd");
    if (int(s.size()) == N - 1) {
        // I = {i}^c: the class is the exceptional divisor E_i itself
        for (int i = 1; i <= N; ++i)
            if (!s.count(i)) return cls_E(space, i);
    }
    const int sdeg = (n - int(s.size())) / 2;  // |I^c| = 2s+3
    QVec v(std::size_t(N) + 1, Rat(0));
    v[0] = sdeg + 1;
    for (int i = 1; i <= N; ++i) v[std::size_t(i)] = s.count(i) ? -(sdeg + 1) : -sdeg;
    return LatticeClass(space, "HE", std::move(v));
}

QVec radial_project(const LatticeClass& x) {
    if (x.space()->side() != Side::X) throw std::invalid_argument("radial_project: X side only");
    const int n = x.space()->n(), N = n + 3;
    QVec c = x.canonical_coords();  // (y, x_1..x_N) in {H, E_i}
    Rat S = Rat(n + 1) * c[0];
    for (int i = 1; i <= N; ++i) S += c[std::size_t(i)];
    if (S == 0) throw std::invalid_argument("radial_project: class on the excluded hyperplane");
    QVec alpha(static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i) alpha[std::size_t(i) - 1] = (c[0] + c[std::size_t(i)]) / S - Rat(1, 2);
    return alpha;
}

const NamedRows& named_rows(int n) {
    check_even_n(n, "named_rows");
    static std::mutex mu;
    static std::map<int, NamedRows> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const int N = n + 3, m = n / 2;
    NamedRows r;

    r.delta = cube_rows(N);
    for (const auto& I : subsets_with_parity(N, 0)) r.delta.push_back(row_H_ge(I, 1, N));

    r.mov = cube_rows(N);
    for (const auto& I : subsets_with_parity(N, 1)) r.mov.push_back(row_H_ge(I, 2, N));

    // the mov rows stay in the nef list: they are redundant for n >= 4, where
    // the facets are exactly H_{i} >= 2 and H_{ij} <= 3, but not for n = 2.
    // the binding constraints come first so the vertex enumeration never
    // passes through the much larger mov intermediate
    for (int i = 1; i <= N; ++i) r.nef.push_back(row_H_ge({i}, 2, N));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) r.nef.push_back(row_H_le({i, j}, 3, N));
    r.nef.insert(r.nef.end(), r.mov.begin(), r.mov.end());

    for (const auto& I : subsets_with_parity(N, m % 2)) r.fano.push_back(row_H_ge(I, m + 1, N));

    return cache.emplace(n, std::move(r)).first->second;
}

bool rows_contain(const std::vector<ZVec>& rows, const QVec& alpha) {
    for (const ZVec& f : rows) {
        Rat s = Rat(f[0]);
        for (std::size_t i = 0; i < alpha.size(); ++i) s += Rat(f[i + 1]) * alpha[i];
        if (s < 0) return false;
    }
    return true;
}

bool rows_strictly_contain(const std::vector<ZVec>& rows, const QVec& alpha) {
    for (const ZVec& f : rows) {
        Rat s = Rat(f[0]);
        for (std::size_t i = 0; i < alpha.size(); ++i) s += Rat(f[i + 1]) * alpha[i];
        if (s <= 0) return false;
    }
    return true;
}

const NamedPolytopes& named_cones(int n) {
    check_even_n(n, "named_cones");
    static std::mutex mu;
    static std::map<int, NamedPolytopes> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const int N = n + 3;
    const NamedRows& r = named_rows(n);
    NamedPolytopes p;
    p.delta = polytope_from_inequalities(N, r.delta);
    p.mov = polytope_from_inequalities(N, r.mov);
    p.nef = polytope_from_inequalities(N, r.nef);
    p.fano = polytope_from_inequalities(N, r.fano);
    return cache.emplace(n, std::move(p)).first->second;
}

std::vector<ZVec> fano_cone_inequalities_KE(int n) {
    check_even_n(n, "fano_cone_inequalities_KE");
    const int N = n + 3, m = n / 2;
    std::vector<ZVec> rows;
    for (const auto& I : subsets_with_parity(N, m % 2)) {
        ZVec r(std::size_t(N) + 1, Int(int(I.size()) - m));
        r[0] = 2;
        for (int i : I) r[std::size_t(i)] -= 2;
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

const std::vector<WallDescriptor>& arrangement(int n) {
    check_even_n(n, "arrangement");
    static std::mutex mu;
    static std::map<int, std::vector<WallDescriptor>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const int N = n + 3, m = n / 2;
    std::vector<WallDescriptor> walls;
    for (int k = 2; k <= m + 1; ++k)
        for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
            if (__builtin_popcountl(mask) % 2 == k % 2) continue;
            WallDescriptor w;
            w.k = k;
            for (int i = 0; i < N; ++i)
                if (mask & (1ul << i)) w.I.push_back(i + 1);
            walls.push_back(std::move(w));
        }
    return cache.emplace(n, std::move(walls)).first->second;
}

ChamberDescriptor chamber_of(const LatticeClass& x) {
    const int n = x.space()->n();
    const NamedRows& r = named_rows(n);
    ChamberDescriptor d;
    QVec alpha = radial_project(x);
    d.sample = alpha;
    if (!rows_contain(r.delta, alpha)) return d;  // not effective
    d.effective = true;
    for (const WallDescriptor& w : arrangement(n)) {
        Rat v = eval_H(w.I, alpha) - w.k;
        d.signs.push_back(v < 0 ? -1 : (v > 0 ? 1 : 0));
    }
    d.in_mov = rows_contain(r.mov, alpha);
    d.in_nef = rows_contain(r.nef, alpha);
    d.in_fano = rows_contain(r.fano, alpha);
    return d;
}

WallKind classify_wall(const WallDescriptor& w, int n) {
    check_even_n(n, "classify_wall");
    const int N = n + 3, m = n / 2;
    for (int i : w.I)
        if (i < 1 || i > N) throw std::invalid_argument("classify_wall: index out of range");
    if (w.k < 2 || w.k > m + 1 || int(w.I.size()) % 2 == w.k % 2)
        throw std::invalid_argument("classify_wall: hyperplane not in the arrangement");

    if (w.k == 2) {
        DivisorialWall d{complement(w.I, N),
                         class_E_I(complement(w.I, N), make_space(n, Side::X))};
        return d;
    }
    // flip wall; decide which side Nef(X) is on with an interior point
    QVec inner = nef_interior_point(n);
    Rat v = eval_H(w.I, inner);
    FlipWall f;
    f.from_dim = w.k - 2;
    f.to_dim = n + 1 - w.k;
    if (v < w.k) {
        f.locus_on_nef_side = true;
        f.locus.I = w.I;
        f.locus.s = (w.k - int(w.I.size()) - 1) / 2;
    } else if (v > w.k) {
        f.locus_on_nef_side = false;
        f.locus.I = complement(w.I, N);
        f.locus.s = (int(w.I.size()) - w.k - 1) / 2;
    } else {
        throw std::logic_error("classify_wall: arrangement hyperplane through the nef interior");
    }
    if (f.locus.s < 0) throw std::logic_error("classify_wall: negative secant index");
    return f;
}

WallKind classify_wall(const BoundaryWall& w, int n) {
    check_even_n(n, "classify_wall");
    if (w.i < 1 || w.i > n + 3 || (w.sign != 1 && w.sign != -1))
        throw std::invalid_argument("classify_wall: bad boundary wall");
    FiberWall f;
    f.i = w.i;
    f.sign = w.sign;
    f.fiber = (w.sign < 0)
                  ? "strict transform of a general line through p_" + std::to_string(w.i)
                  : "strict transform of a general rational normal curve through the points p_j, j != " +
                        std::to_string(w.i);
    return f;
}

FactorizationReport factorization(int n) {
    check_even_n(n, "factorization");
    const int N = n + 3, m = n / 2;
    FactorizationReport rep;
    for (int step = 1; step <= m - 1; ++step) {
        std::vector<SpecialVariety> flipped;
        // dimension = |I| + 2s - 1 = step
        for (int s = 0; 2 * s <= step + 1; ++s) {
            const int d = step + 1 - 2 * s;
            for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
                if (__builtin_popcountl(mask) != d) continue;
                SpecialVariety j;
                j.s = s;
                for (int i = 0; i < N; ++i)
                    if (mask & (1ul << i)) j.I.push_back(i + 1);
                flipped.push_back(std::move(j));
            }
        }
        std::sort(flipped.begin(), flipped.end());
        rep.steps.push_back(std::move(flipped));
    }
    for (int d = 0; d <= m + 1; ++d)
        if (d % 2 != m % 2) rep.terminal_m += binomial(N, d);
    for (int d = 0; d <= m; ++d)
        if (d % 2 == m % 2) rep.terminal_m_minus_1 += binomial(N, d);
    return rep;
}

std::optional<SpecialVariety> restrict_to_E(int i, const SpecialVariety& j) {
    const bool in = std::find(j.I.begin(), j.I.end(), i) != j.I.end();
    if (in) {
        SpecialVariety r;
        r.s = j.s;
        for (int x : j.I)
            if (x != i) r.I.push_back(x);
        return r;
    }
    if (j.s == 0) return std::nullopt;
    SpecialVariety r;
    r.s = j.s - 1;
    r.I = j.I;
    r.I.push_back(i);
    std::sort(r.I.begin(), r.I.end());
    return r;
}

}  // namespace fano
