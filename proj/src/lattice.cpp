#include "fano/lattice.hpp"

#include <algorithm>

namespace fano {

namespace {

std::vector<std::vector<int>> all_subsets(int N) {
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t(1) << N);
    for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
        std::vector<int> I;
        for (int i = 0; i < N; ++i)
            if (mask & (1ul << i)) I.push_back(i + 1);
        out.push_back(std::move(I));
    }
    return out;
}

}  // namespace

QVec plane_coords(int n, const std::vector<int>& I) {
    const int N = n + 3;
    const Rat half(1, 2);
    QVec v(std::size_t(N) + 1, half);
    v[0] = Rat(1, 4);
    for (int i : I) {
        if (i < 1 || i > N) throw std::invalid_argument("plane_coords: index out of range");
        v[std::size_t(i)] = -half;
    }
    if (I.size() % 2 == 1)
        for (int j = 1; j <= N; ++j) v[std::size_t(j)] = -v[std::size_t(j)];
    return v;
}

SpacePtr make_space(int n, Side side) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("make_space: n must be even and >= 2");
    auto sp = std::shared_ptr<LatticeSpace>(new LatticeSpace());
    sp->n_ = n;
    sp->side_ = side;
    const std::size_t r = sp->rank();
    const int N = n + 3;
    const int m = n / 2;

    QMat gram(r, r);
    if (side == Side::Z) {
        sp->canonical_ = "eps";
        gram(0, 0) = 4;
        for (std::size_t i = 1; i < r; ++i) gram(i, i) = (m % 2 == 0) ? 1 : -1;

        // {eta, M_1..M_{n+3}}: M_i = 1/4 eta + 1/2 eps_i - 1/2 sum_{j != i} eps_j
        QMat toc = QMat::identity(r);
        QMat Mb(r, r);
        Mb(0, 0) = 1;
        for (int i = 1; i <= N; ++i) {
            QVec mi = plane_coords(n, {i});
            for (std::size_t row = 0; row < r; ++row) Mb(row, std::size_t(i)) = mi[row];
        }
        sp->to_canonical_["eps"] = toc;
        sp->to_canonical_["M"] = Mb;
    } else {
        sp->canonical_ = "HE";
        gram(0, 0) = n - 1;
        for (std::size_t i = 1; i < r; ++i) gram(i, i) = -1;

        QMat toc = QMat::identity(r);
        // {-K_X, E_i}: -K_X = (n+1)H - (n-1) sum E_i
        QMat KE = QMat::identity(r);
        KE(0, 0) = n + 1;
        for (int i = 1; i <= N; ++i) KE(std::size_t(i), 0) = -(n - 1);
        // {-K_X, epstilde_i}: epstilde_i = (H - sum_{j != i} E_j + E_i)/2
        QMat Keps(r, r);
        Keps(0, 0) = n + 1;
        for (int i = 1; i <= N; ++i) Keps(std::size_t(i), 0) = -(n - 1);
        for (int i = 1; i <= N; ++i) {
            Keps(0, std::size_t(i)) = Rat(1, 2);
            for (int j = 1; j <= N; ++j) Keps(std::size_t(j), std::size_t(i)) = Rat(j == i ? 1 : -1, 2);
        }
        sp->to_canonical_["HE"] = toc;
        sp->to_canonical_["KE"] = KE;
        sp->to_canonical_["Keps"] = Keps;
    }
    sp->gram_ = gram;
    sp->gram_inv_ = inverse(gram);
    for (const auto& [name, mat] : sp->to_canonical_) sp->from_canonical_[name] = inverse(mat);
    return sp;
}

const QMat& LatticeSpace::to_canonical(const std::string& basis) const {
    auto it = to_canonical_.find(basis);
    if (it == to_canonical_.end()) throw std::invalid_argument("unknown basis: " + basis);
    return it->second;
}

const QMat& LatticeSpace::from_canonical(const std::string& basis) const {
    auto it = from_canonical_.find(basis);
    if (it == from_canonical_.end()) throw std::invalid_argument("unknown basis: " + basis);
    return it->second;
}

const IntLattice& LatticeSpace::plane_lattice() const {
    if (side_ != Side::Z) throw std::logic_error("plane_lattice: Z side only");
    std::call_once(lattice_once_, [this] {
        std::vector<ZVec> gens;
        for (const auto& I : all_subsets(points())) {
            QVec v = plane_coords(n_, I);
            ZVec w(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
                Rat q = v[i] * 4;  // all plane classes have denominator dividing 4
                if (den(q) != 1) throw std::logic_error("plane_lattice: unexpected denominator");
                w[i] = num(q);
            }
            gens.push_back(std::move(w));
        }
        plane_lattice_ = std::make_unique<IntLattice>(gens);
    });
    return *plane_lattice_;
}

LatticeClass::LatticeClass(SpacePtr space, std::string basis, QVec coords)
    : space_(std::move(space)), basis_(std::move(basis)), coords_(std::move(coords)) {
    if (!space_->has_basis(basis_)) throw std::invalid_argument("unknown basis: " + basis_);
    if (coords_.size() != space_->rank()) throw std::invalid_argument("LatticeClass: bad coordinate length");
}

QVec LatticeClass::canonical_coords() const {
    if (basis_ == space_->canonical_basis()) return coords_;
    return space_->to_canonical(basis_).apply(coords_);
}

LatticeClass LatticeClass::in_basis(const std::string& target) const {
    if (target == basis_) return *this;
    return LatticeClass(space_, target, space_->from_canonical(target).apply(canonical_coords()));
}

LatticeClass convert(const LatticeClass& x, const std::string& target_basis) { return x.in_basis(target_basis); }

static void check_same_space(const LatticeClass& a, const LatticeClass& b) {
    if (a.space()->n() != b.space()->n() || a.space()->side() != b.space()->side())
        throw std::invalid_argument("classes live in different spaces");
}

LatticeClass LatticeClass::operator+(const LatticeClass& o) const {
    check_same_space(*this, o);
    QVec a = canonical_coords(), b = o.canonical_coords();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return LatticeClass(space_, space_->canonical_basis(), std::move(a));
}

LatticeClass LatticeClass::operator-(const LatticeClass& o) const { return *this + (o * Rat(-1)); }

LatticeClass LatticeClass::operator*(const Rat& s) const {
    QVec a = coords_;
    for (Rat& q : a) q *= s;
    return LatticeClass(space_, basis_, std::move(a));
}

bool LatticeClass::operator==(const LatticeClass& o) const {
    return space_->n() == o.space_->n() && space_->side() == o.space_->side() &&
           canonical_coords() == o.canonical_coords();
}

bool LatticeClass::operator<(const LatticeClass& o) const {
    return canonical_coords() < o.canonical_coords();
}

Rat pair(const LatticeClass& x, const LatticeClass& y) {
    check_same_space(x, y);
    QVec a = x.canonical_coords();
    QVec gb = x.space()->gram().apply(y.canonical_coords());
    return dot(a, gb);
}

bool is_integral(const LatticeClass& x) {
    if (x.space()->side() != Side::Z) throw std::invalid_argument("is_integral: Z side only");
    QVec c = x.canonical_coords();
    ZVec w(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rat q = c[i] * 4;
        if (den(q) != 1) return false;
        w[i] = num(q);
    }
    return x.space()->plane_lattice().contains(w);
}

static LatticeClass unit(const SpacePtr& s, Side want, std::size_t idx, const char* name) {
    if (s->side() != want) throw std::invalid_argument(std::string(name) + ": wrong side");
    QVec v(s->rank(), Rat(0));
    v[idx] = 1;
    return LatticeClass(s, s->canonical_basis(), std::move(v));
}

LatticeClass cls_eta(const SpacePtr& s) { return unit(s, Side::Z, 0, "cls_eta"); }
LatticeClass cls_eps(const SpacePtr& s, int i) { return unit(s, Side::Z, std::size_t(i), "cls_eps"); }
LatticeClass cls_H(const SpacePtr& s) { return unit(s, Side::X, 0, "cls_H"); }
LatticeClass cls_E(const SpacePtr& s, int i) { return unit(s, Side::X, std::size_t(i), "cls_E"); }

LatticeClass cls_minus_K(const SpacePtr& s) {
    if (s->side() != Side::X) throw std::invalid_argument("cls_minus_K: wrong side");
    QVec v(s->rank(), Rat(0));
    v[0] = 1;
    return LatticeClass(s, "KE", std::move(v));
}

LatticeClass cls_eps_tilde(const SpacePtr& s, int i) {
    if (s->side() != Side::X) throw std::invalid_argument("cls_eps_tilde: wrong side");
    if (i < 1 || i > s->points()) throw std::invalid_argument("cls_eps_tilde: index out of range");
    QVec v(s->rank(), Rat(0));
    v[std::size_t(i)] = 1;
    return LatticeClass(s, "Keps", std::move(v));
}

}  // namespace fano
