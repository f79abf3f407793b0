#include "fano/cones.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace fano {

namespace {

using Bits = std::vector<std::uint64_t>;

void bits_push(Bits& b, std::size_t index, bool value) {
    const std::size_t word = index / 64;
    if (word >= b.size()) b.resize(word + 1, 0);
    if (value) b[word] |= (std::uint64_t(1) << (index % 64));
}

Bits bits_and(const Bits& a, const Bits& b) {
    Bits r(std::min(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

std::size_t bits_count(const Bits& a) {
    std::size_t c = 0;
    for (std::uint64_t w : a) c += std::size_t(__builtin_popcountll(w));
    return c;
}

bool bits_subset(const Bits& a, const Bits& b) {  // a subset of b
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t bw = (i < b.size()) ? b[i] : 0;
        if ((a[i] & ~bw) != 0) return false;
    }
    return true;
}

struct DDRay {
    ZVec v;
    std::vector<Int> dots;  // value of each processed constraint on v
    Bits tight;             // dots[i] == 0, as a bitset
};

Int content(const ZVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

/// Incremental row echelon with early exit, for rank filters.
class Echelon {
public:
    bool add(QVec v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rat& c = v[pivots_[r]];
            if (c != 0)
                for (std::size_t j = 0; j < v.size(); ++j) v[j] -= rows_[r][j] * c;
        }
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                Rat inv = Rat(1) / v[j];
                for (Rat& q : v) q *= inv;
                pivots_.push_back(j);
                rows_.push_back(std::move(v));
                return true;
            }
        return false;
    }
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<QVec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace

std::vector<ZVec> dual_rays(const std::vector<ZVec>& halfspaces, std::size_t dim) {
    if (halfspaces.empty()) throw std::invalid_argument("dual_rays: no halfspaces");
    std::set<ZVec> dedup;
    std::vector<ZVec> hs;
    for (const ZVec& h : halfspaces) {
        if (h.size() != dim) throw std::invalid_argument("dual_rays: dimension mismatch");
        if (is_zero(h)) throw std::invalid_argument("dual_rays: zero normal");
        ZVec p = primitive(h);
        if (dedup.insert(p).second) hs.push_back(std::move(p));
    }
    if (rank_of(hs) != dim) throw std::invalid_argument("dual_rays: cone is not pointed");

    // initial simplicial cone from `dim` linearly independent normals
    std::vector<std::size_t> init;
    std::vector<ZVec> chosen;
    for (std::size_t i = 0; i < hs.size() && init.size() < dim; ++i) {
        chosen.push_back(hs[i]);
        if (rank_of(chosen) == chosen.size())
            init.push_back(i);
        else
            chosen.pop_back();
    }
    QMat B(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) B(r, c) = Rat(hs[init[r]][c]);
    QMat Binv = inverse(B);

    // process the initial normals first, then the rest
    std::vector<ZVec> order;
    order.reserve(hs.size());
    for (std::size_t i : init) order.push_back(hs[i]);
    for (std::size_t i = 0; i < hs.size(); ++i)
        if (std::find(init.begin(), init.end(), i) == init.end()) order.push_back(hs[i]);

    std::vector<DDRay> rays;
    for (std::size_t j = 0; j < dim; ++j) {
        DDRay r;
        r.v = primitive(Binv.column(j));
        for (std::size_t i = 0; i < dim; ++i) {
            r.dots.push_back(dot(order[i], r.v));
            bits_push(r.tight, i, r.dots.back() == 0);
        }
        rays.push_back(std::move(r));
    }

    for (std::size_t t = dim; t < order.size(); ++t) {
        const ZVec& a = order[t];
        std::vector<Int> s(rays.size());
        bool any_neg = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = dot(a, rays[i].v);
            if (s[i] < 0) any_neg = true;
        }
        if (!any_neg) {
            for (std::size_t i = 0; i < rays.size(); ++i) {
                rays[i].dots.push_back(s[i]);
                bits_push(rays[i].tight, t, s[i] == 0);
            }
            continue;
        }

        // per-constraint lists of tight rays, to localize the adjacency scan
        std::vector<std::vector<std::uint32_t>> tight_on(t);
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (std::size_t c = 0; c < t; ++c)
                if (rays[i].dots[c] == 0) tight_on[c].push_back(std::uint32_t(i));

        std::vector<DDRay> next;
        // combine adjacent (positive, negative) pairs
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (s[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (s[q] >= 0) continue;
                Bits common = bits_and(rays[p].tight, rays[q].tight);
                if (bits_count(common) + 2 < dim) continue;
                // scan only rays tight on the least-populated common constraint
                std::size_t best = t, best_size = rays.size() + 1;
                for (std::size_t w = 0; w < common.size(); ++w)
                    for (std::uint64_t bits = common[w]; bits; bits &= bits - 1) {
                        std::size_t c = w * 64 + std::size_t(__builtin_ctzll(bits));
                        if (tight_on[c].size() < best_size) {
                            best_size = tight_on[c].size();
                            best = c;
                        }
                    }
                bool adjacent = true;
                if (best == t) continue;  // empty common set: only possible in dim <= 2
                for (std::uint32_t r : tight_on[best]) {
                    if (r == p || r == q) continue;
                    if (bits_subset(common, rays[r].tight)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;

                ZVec nv(dim);
                for (std::size_t c = 0; c < dim; ++c) nv[c] = s[p] * rays[q].v[c] - s[q] * rays[p].v[c];
                Int g = content(nv);
                DDRay nr;
                nr.v = std::move(nv);
                if (g > 1)
                    for (Int& xc : nr.v) xc /= g;
                nr.dots.reserve(t + 1);
                for (std::size_t c = 0; c < t; ++c) {
                    Int dv = s[p] * rays[q].dots[c] - s[q] * rays[p].dots[c];
                    if (g > 1) dv /= g;
                    nr.dots.push_back(std::move(dv));
                    bits_push(nr.tight, c, nr.dots.back() == 0);
                }
                nr.dots.push_back(0);
                bits_push(nr.tight, t, true);
                next.push_back(std::move(nr));
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (s[i] >= 0) {
                DDRay moved = std::move(rays[i]);
                moved.dots.push_back(s[i]);
                bits_push(moved.tight, t, s[i] == 0);
                next.push_back(std::move(moved));
            }
        rays = std::move(next);
    }

    std::vector<ZVec> out;
    out.reserve(rays.size());
    for (DDRay& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

/// Keeps exactly the generators whose tight set against `against` spans a
/// face of dimension dim-1 (extremal rays against facets, facets against rays).
std::vector<ZVec> extremal_filter(const std::vector<ZVec>& generators, const std::vector<ZVec>& against,
                                  std::size_t dim) {
    std::set<ZVec> dedup;
    std::vector<ZVec> out;
    for (const ZVec& g : generators) {
        ZVec p = primitive(g);
        if (!dedup.insert(p).second) continue;
        std::vector<const ZVec*> tight;
        for (const ZVec& a : against)
            if (dot(a, p) == 0) tight.push_back(&a);
        Echelon e;
        bool reaches = false;
        for (const ZVec* tp : tight)
            if (e.add(to_rational(*tp)) && e.rank() >= dim - 1) {
                reaches = true;
                break;
            }
        if (reaches) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RationalCone cone_from_rays(const std::vector<ZVec>& rays) {
    if (rays.empty()) throw std::invalid_argument("cone_from_rays: no rays");
    const std::size_t dim = rays[0].size();
    if (rank_of(rays) != dim) throw std::invalid_argument("cone_from_rays: cone is not full-dimensional");
    RationalCone c;
    c.dim = dim;
    c.facets = dual_rays(rays, dim);  // facets of the cone = rays of the dual
    c.rays = extremal_filter(rays, c.facets, dim);
    return c;
}

RationalCone cone_from_facets(const std::vector<ZVec>& normals) {
    if (normals.empty()) throw std::invalid_argument("cone_from_facets: no normals");
    const std::size_t dim = normals[0].size();
    RationalCone c;
    c.dim = dim;
    c.rays = dual_rays(normals, dim);
    if (rank_of(c.rays) != dim) throw std::invalid_argument("cone_from_facets: cone is not full-dimensional");
    c.facets = extremal_filter(normals, c.rays, dim);
    return c;
}

bool membership(const RationalCone& c, const QVec& x) {
    if (x.size() != c.dim) throw std::invalid_argument("membership: dimension mismatch");
    for (const ZVec& f : c.facets) {
        Rat s = 0;
        for (std::size_t i = 0; i < c.dim; ++i) s += Rat(f[i]) * x[i];
        if (s < 0) return false;
    }
    return true;
}

std::vector<ZVec> face_of(const RationalCone& c, const ZVec& functional) {
    if (functional.size() != c.dim) throw std::invalid_argument("face_of: dimension mismatch");
    std::vector<ZVec> face;
    for (const ZVec& r : c.rays) {
        Int s = dot(functional, r);
        if (s < 0) throw std::invalid_argument("face_of: functional is negative on the cone");
        if (s == 0) face.push_back(r);
    }
    return face;
}

RationalCone dual_cone(const RationalCone& c, const SpacePtr& space) {
    if (c.dim != space->rank()) throw std::invalid_argument("dual_cone: dimension mismatch");
    RationalCone d;
    d.dim = c.dim;
    for (const ZVec& f : c.facets) d.rays.push_back(primitive(space->gram_inverse().apply(to_rational(f))));
    for (const ZVec& r : c.rays) d.facets.push_back(primitive(space->gram().apply(to_rational(r))));
    std::sort(d.rays.begin(), d.rays.end());
    std::sort(d.facets.begin(), d.facets.end());
    return d;
}

bool AffinePolytope::contains(const QVec& alpha) const {
    for (const ZVec& f : facets) {
        Rat s = Rat(f[0]);
        for (int i = 0; i < N; ++i) s += Rat(f[std::size_t(i) + 1]) * alpha[std::size_t(i)];
        if (s < 0) return false;
    }
    return true;
}

bool AffinePolytope::strictly_contains(const QVec& alpha) const {
    for (const ZVec& f : facets) {
        Rat s = Rat(f[0]);
        for (int i = 0; i < N; ++i) s += Rat(f[std::size_t(i) + 1]) * alpha[std::size_t(i)];
        if (s <= 0) return false;
    }
    return true;
}

QVec AffinePolytope::vertex_barycenter() const {
    QVec b(std::size_t(N), Rat(0));
    for (const QVec& v : vertices)
        for (int i = 0; i < N; ++i) b[std::size_t(i)] += v[std::size_t(i)];
    for (Rat& q : b) q /= int(vertices.size());
    return b;
}

AffinePolytope polytope_from_vertices(int N, const std::vector<QVec>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("polytope_from_vertices: empty");
    std::vector<ZVec> homog;
    for (const QVec& v : vertices) {
        if (int(v.size()) != N) throw std::invalid_argument("polytope_from_vertices: bad vertex length");
        QVec h(std::size_t(N) + 1);
        h[0] = 1;
        for (int i = 0; i < N; ++i) h[std::size_t(i) + 1] = v[std::size_t(i)];
        homog.push_back(primitive(h));
    }
    RationalCone c = cone_from_rays(homog);
    AffinePolytope p;
    p.N = N;
    p.facets = c.facets;
    for (const ZVec& r : c.rays) {
        if (r[0] <= 0) throw std::logic_error("polytope_from_vertices: non-affine extremal ray");
        QVec v(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i) v[std::size_t(i)] = Rat(r[std::size_t(i) + 1], r[0]);
        p.vertices.push_back(std::move(v));
    }
    std::sort(p.vertices.begin(), p.vertices.end());
    return p;
}

AffinePolytope polytope_from_inequalities(int N, const std::vector<ZVec>& inequalities) {
    std::vector<ZVec> hs = inequalities;
    ZVec e0(std::size_t(N) + 1, Int(0));
    e0[0] = 1;
    hs.push_back(e0);  // homogenization halfspace; redundant for bounded polytopes
    std::vector<ZVec> rays = dual_rays(hs, std::size_t(N) + 1);
    AffinePolytope p;
    p.N = N;
    for (const ZVec& r : rays) {
        if (r[0] == 0) throw std::invalid_argument("polytope_from_inequalities: unbounded region");
        QVec v(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i) v[std::size_t(i)] = Rat(r[std::size_t(i) + 1], r[0]);
        p.vertices.push_back(std::move(v));
    }
    std::sort(p.vertices.begin(), p.vertices.end());
    p.facets = extremal_filter(inequalities, rays, std::size_t(N) + 1);
    return p;
}

QVec cube_vertex(const std::vector<int>& I, int N) {
    QVec v(std::size_t(N), Rat(-1, 2));
    for (int i : I) {
        if (i < 1 || i > N) throw std::invalid_argument("cube_vertex: index out of range");
        v[std::size_t(i) - 1] = Rat(1, 2);
    }
    return v;
}

AffinePolytope demihypercube(int N) {
    if (N < 4) throw std::invalid_argument("demihypercube: N must be >= 4");
    std::vector<QVec> vertices;
    for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
        if (__builtin_popcountl(mask) % 2 == 0) continue;
        QVec v(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i) v[std::size_t(i)] = (mask & (1ul << i)) ? Rat(1, 2) : Rat(-1, 2);
        vertices.push_back(std::move(v));
    }
    return polytope_from_vertices(N, vertices);
}

Rat eval_H(const std::vector<int>& I, const QVec& alpha) {
    const int N = int(alpha.size());
    std::vector<bool> in(std::size_t(N), false);
    for (int i : I) {
        if (i < 1 || i > N) throw std::invalid_argument("eval_H: index out of range");
        in[std::size_t(i) - 1] = true;
    }
    Rat s = 0;
    for (int i = 0; i < N; ++i)
        s += in[std::size_t(i)] ? (Rat(1, 2) - alpha[std::size_t(i)]) : (Rat(1, 2) + alpha[std::size_t(i)]);
    return s;
}

RationalCone cone_E(const SpacePtr& space) {
    if (space->side() != Side::Z) throw std::invalid_argument("cone_E: Z side only");
    std::vector<ZVec> rays;
    for (const PlaneLabel& L : all_labels(space->n()))
        rays.push_back(primitive(plane_coords(space->n(), L.rep)));
    return cone_from_rays(rays);
}

RationalCone cone_E_dual(const SpacePtr& space) { return dual_cone(cone_E(space), space); }

std::vector<ZVec> cone_E_dual_generators(int n) {
    const int N = n + 3, m = n / 2;
    std::vector<ZVec> out;
    for (int i = 1; i <= N; ++i)
        for (int sign : {1, -1}) {
            // 2 * (eta/2 +- eps_i)
            ZVec v(std::size_t(N) + 1, Int(0));
            v[0] = 1;
            v[std::size_t(i)] = 2 * sign;
            out.push_back(primitive(v));
        }
    for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
        if (__builtin_popcountl(mask) % 2 != 0) continue;
        // 2 * ((n+1)/2 eta + (-1)^m (sum_{j notin I} eps_j - sum_{i in I} eps_i))
        ZVec v(std::size_t(N) + 1);
        v[0] = n + 1;
        for (int i = 0; i < N; ++i) {
            int sgn = (mask & (1ul << i)) ? -1 : 1;
            if (m % 2 != 0) sgn = -sgn;
            v[std::size_t(i) + 1] = 2 * sgn;
        }
        out.push_back(primitive(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeylElement> linear_symmetries(const SpacePtr& space, int n_cap) {
    if (space->side() != Side::Z) throw std::invalid_argument("linear_symmetries: Z side only");
    const int n = space->n();
    if (n > n_cap) throw std::runtime_error("linear_symmetries: n exceeds cap, refusing");
    const std::size_t d = space->rank();

    std::vector<QVec> verts;
    for (const PlaneLabel& L : all_labels(n)) verts.push_back(plane_coords(n, L.rep));
    const std::size_t K = verts.size();

    std::vector<std::vector<Rat>> gram(K, std::vector<Rat>(K));
    for (std::size_t a = 0; a < K; ++a) {
        QVec ga = space->gram().apply(verts[a]);
        for (std::size_t b = 0; b < K; ++b) gram[a][b] = dot(ga, verts[b]);
    }

    // spanning subset used to solve for the linear map
    std::vector<std::size_t> basis_idx;
    std::vector<QVec> chosen;
    for (std::size_t a = 0; a < K && basis_idx.size() < d; ++a) {
        chosen.push_back(verts[a]);
        if (rank_of(chosen) == chosen.size())
            basis_idx.push_back(a);
        else
            chosen.pop_back();
    }
    if (basis_idx.size() != d) throw std::logic_error("linear_symmetries: vertices do not span");
    QMat Binv = inverse(QMat::from_columns(chosen));

    std::vector<WeylElement> found;
    std::vector<std::size_t> perm(K, 0);
    std::vector<bool> used(K, false);

    auto emit = [&]() {
        std::vector<QVec> imgs;
        for (std::size_t idx : basis_idx) imgs.push_back(verts[perm[idx]]);
        QMat T = QMat::from_columns(imgs) * Binv;
        for (std::size_t a = 0; a < K; ++a)
            if (T.apply(verts[a]) != verts[perm[a]]) return;
        if (auto w = weyl_from_matrix(T)) found.push_back(*w);
    };

    auto rec = [&](auto&& self, std::size_t a) -> void {
        if (a == K) {
            emit();
            return;
        }
        for (std::size_t cand = 0; cand < K; ++cand) {
            if (used[cand] || gram[cand][cand] != gram[a][a]) continue;
            bool ok = true;
            for (std::size_t b = 0; b < a && ok; ++b)
                if (gram[perm[b]][cand] != gram[b][a]) ok = false;
            if (!ok) continue;
            used[cand] = true;
            perm[a] = cand;
            self(self, a + 1);
            used[cand] = false;
        }
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace fano
