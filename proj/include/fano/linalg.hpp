#ifndef FANO_LINALG_HPP
#define FANO_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

/// Dense rational matrix, row-major. Sized for ranks <= ~16; everything here
/// is plain Gaussian elimination over exact rationals.
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static QMat identity(std::size_t n) {
        QMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Matrix whose columns are the given vectors.
    static QMat from_columns(const std::vector<QVec>& cols) {
        if (cols.empty()) throw std::invalid_argument("from_columns: empty");
        QMat m(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) throw std::invalid_argument("from_columns: ragged input");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QVec column(std::size_t j) const {
        QVec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    QVec apply(const QVec& x) const {
        if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
        QVec y(rows_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (x[j] != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    QMat operator*(const QMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("mul: size mismatch");
        QMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    bool operator==(const QMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    QMat transpose() const {
        QMat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

std::size_t rank(QMat m);
std::size_t rank_of(const std::vector<QVec>& vectors);
std::size_t rank_of(const std::vector<ZVec>& vectors);

/// Gauss-Jordan inverse; throws std::domain_error on singular input.
QMat inverse(const QMat& m);

/// Solves A x = b for square invertible A.
QVec solve(const QMat& a, const QVec& b);

/// Column-style Hermite normal form of an integer matrix (columns generate a
/// lattice). Returns the pivot columns in column-echelon form, pivots positive.
class IntLattice {
public:
    explicit IntLattice(const std::vector<ZVec>& generators);

    bool contains(const ZVec& v) const;
    std::size_t rank() const { return basis_.size(); }
    const std::vector<ZVec>& basis() const { return basis_; }

private:
    std::size_t dim_ = 0;
    std::vector<ZVec> basis_;      // echelon basis, one per pivot row
    std::vector<std::size_t> pivot_rows_;
};

}  // namespace fano

#endif
