#include "lapalg/linalg.hpp"

#include "lapalg/errors.hpp"

namespace lapalg {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool QMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool QMatrix::is_zero() const {
    for (const Rational& x : a_)
        if (x != 0) return false;
    return true;
}

bool QMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw input_error("matrix product dimension mismatch");
    QMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix sum dimension mismatch");
    QMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix difference dimension mismatch");
    QMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

QMatrix operator*(const Rational& c, const QMatrix& m) {
    QMatrix r = m;
    for (Rational& x : r.a_) x *= c;
    return r;
}

bool QMatrix::operator<(const QMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        int c = cmp(a_[i], o.a_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw input_error("matrix apply dimension mismatch");
    std::vector<Rational> r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Rational inv = 1 / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

std::optional<std::vector<Rational>> solve(const QMatrix& A, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw input_error("solve dimension mismatch");
    QMatrix aug(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p == A.cols()) return std::nullopt;  // pivot in the constant column
    std::vector<Rational> x(A.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), A.cols());
    return x;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& A) {
    QMatrix m = A;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(A.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < A.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(A.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::pair<std::vector<Rational>, std::vector<Rational>> RowSpan::reduce(
    const std::vector<Rational>& v) const {
    std::vector<Rational> w = v;
    std::vector<Rational> coords(basis_.size(), 0);
    for (std::size_t r = 0; r < echelon_.size(); ++r) {
        const Rational& lead = w[pivots_[r]];
        if (lead == 0) continue;
        Rational f = lead;  // echelon rows are monic at their pivot
        for (int j = 0; j < width_; ++j) w[j] -= f * echelon_[r][j];
        for (std::size_t t = 0; t < basis_.size(); ++t)
            coords[t] += f * echelon_[r][width_ + static_cast<int>(t)];
    }
    return {std::move(w), std::move(coords)};
}

bool RowSpan::contains(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != width_) throw input_error("RowSpan width mismatch");
    auto [residual, coords] = reduce(v);
    for (const Rational& x : residual)
        if (x != 0) return false;
    return true;
}

std::optional<std::vector<Rational>> RowSpan::coordinates(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != width_) throw input_error("RowSpan width mismatch");
    auto [residual, coords] = reduce(v);
    for (const Rational& x : residual)
        if (x != 0) return std::nullopt;
    return coords;
}

bool RowSpan::insert(const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != width_) throw input_error("RowSpan width mismatch");
    auto [residual, coords] = reduce(v);
    int pivot = -1;
    for (int j = 0; j < width_; ++j)
        if (residual[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;

    // Augmented row: residual normalized to a monic pivot, tracking that it
    // came from v minus the combination already accounted for.
    std::vector<Rational> row(width_ + dim() + 1, 0);
    Rational inv = 1 / residual[pivot];
    for (int j = 0; j < width_; ++j) row[j] = residual[j] * inv;
    for (int t = 0; t < dim(); ++t) row[width_ + t] = -coords[t] * inv;
    row[width_ + dim()] = inv;

    // Existing rows gain a zero column for the new basis vector, then lose
    // their entry at the new pivot so the echelon stays fully reduced (the
    // single pass in reduce() relies on that).
    for (auto& r : echelon_) {
        r.push_back(0);
        const Rational f = r[pivot];
        if (f == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * row[j];
    }
    basis_.push_back(v);
    echelon_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace lapalg
