#ifndef LAPALG_LINALG_HPP
#define LAPALG_LINALG_HPP

#include <optional>
#include <vector>

#include "lapalg/rational.hpp"

namespace lapalg {

// Dense exact-rational matrix, row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
    const std::vector<Rational>& data() const { return a_; }

    QMatrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;
    bool is_identity() const;

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    friend QMatrix operator*(const Rational& c, const QMatrix& m);
    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const QMatrix& o) const { return !(*this == o); }
    bool operator<(const QMatrix& o) const;  // total order for containers

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<int> rref(QMatrix& m);

int rank(QMatrix m);

// Least structure that solves A x = b exactly; nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const QMatrix& A, const std::vector<Rational>& b);

// Deterministic nullspace basis (free variables in column order).
std::vector<std::vector<Rational>> nullspace(const QMatrix& A);

// Incrementally maintained row space of vectors in Q^width. Keeps the original
// inserted vectors (the span's basis) alongside an echelonized copy, and can
// report coordinates of a vector over that basis.
class RowSpan {
public:
    explicit RowSpan(int width) : width_(width) {}

    int width() const { return width_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<Rational>>& basis() const { return basis_; }

    bool contains(const std::vector<Rational>& v) const;
    // Coordinates of v over the inserted basis; nullopt if v is outside.
    std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;
    // Returns true if v enlarged the span (v is then recorded as a basis vector).
    bool insert(const std::vector<Rational>& v);

private:
    int width_;
    std::vector<std::vector<Rational>> basis_;    // original independent vectors
    std::vector<std::vector<Rational>> echelon_;  // reduced rows, augmented with basis coords
    std::vector<int> pivots_;
    // Reduces v against the echelon rows; returns (residual, coords over basis).
    std::pair<std::vector<Rational>, std::vector<Rational>> reduce(const std::vector<Rational>& v) const;
};

}  // namespace lapalg

#endif
