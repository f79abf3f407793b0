#include "fano/linalg.hpp"

#include <algorithm>

namespace fano {

std::size_t rank(QMat m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t rank_of(const std::vector<QVec>& vectors) {
    if (vectors.empty()) return 0;
    QMat m(vectors.size(), vectors[0].size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors[i].size(); ++j) m(i, j) = vectors[i][j];
    return rank(std::move(m));
}

std::size_t rank_of(const std::vector<ZVec>& vectors) {
    if (vectors.empty()) return 0;
    QMat m(vectors.size(), vectors[0].size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors[i].size(); ++j) m(i, j) = Rat(vectors[i][j]);
    return rank(std::move(m));
}

QMat inverse(const QMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    const std::size_t n = m.rows();
    QMat a = m, inv = QMat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rat d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

QVec solve(const QMat& a, const QVec& b) { return inverse(a).apply(b); }

IntLattice::IntLattice(const std::vector<ZVec>& generators) {
    if (generators.empty()) throw std::invalid_argument("IntLattice: no generators");
    dim_ = generators[0].size();
    std::vector<ZVec> cols = generators;
    std::size_t start = 0;
    for (std::size_t row = 0; row < dim_ && start < cols.size(); ++row) {
        // gcd elimination across columns start..end on this row
        while (true) {
            std::size_t best = cols.size();
            for (std::size_t j = start; j < cols.size(); ++j) {
                if (cols[j][row] == 0) continue;
                if (best == cols.size() ||
                    boost::multiprecision::abs(cols[j][row]) < boost::multiprecision::abs(cols[best][row]))
                    best = j;
            }
            if (best == cols.size()) break;  // row has no pivot
            std::swap(cols[start], cols[best]);
            bool done = true;
            for (std::size_t j = start + 1; j < cols.size(); ++j) {
                if (cols[j][row] == 0) continue;
                Int q = cols[j][row] / cols[start][row];
                for (std::size_t i = 0; i < dim_; ++i) cols[j][i] -= q * cols[start][i];
                if (cols[j][row] != 0) done = false;
            }
            if (done) {
                if (cols[start][row] < 0)
                    for (Int& x : cols[start]) x = -x;
                pivot_rows_.push_back(row);
                basis_.push_back(cols[start]);
                ++start;
                break;
            }
        }
    }
}

bool IntLattice::contains(const ZVec& v) const {
    if (v.size() != dim_) throw std::invalid_argument("IntLattice::contains: size mismatch");
    ZVec r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const std::size_t row = pivot_rows_[k];
        for (std::size_t i = (k == 0 ? 0 : pivot_rows_[k - 1] + 1); i < row; ++i)
            if (r[i] != 0) return false;
        if (r[row] % basis_[k][row] != 0) return false;
        Int q = r[row] / basis_[k][row];
        if (q != 0)
            for (std::size_t i = 0; i < dim_; ++i) r[i] -= q * basis_[k][i];
    }
    return is_zero(r);
}

}  // namespace fano
