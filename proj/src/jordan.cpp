#include "lapalg/jordan.hpp"

#include "lapalg/errors.hpp"

namespace lapalg {

namespace {

std::vector<Rational> vectorize(const QMatrix& m) { return m.data(); }

void require_symmetric(const QMatrix& m, const char* who) {
    if (!m.is_symmetric()) throw input_error(std::string(who) + " requires symmetric matrices");
}

}  // namespace

QMatrix jordan_product(const QMatrix& M, const QMatrix& N) {
    require_symmetric(M, "jordan_product");
    require_symmetric(N, "jordan_product");
    if (M.rows() != N.rows()) throw input_error("jordan_product size mismatch");
    return Rational(1, 2) * (M * N + N * M);
}

bool MatrixSpan::contains(const QMatrix& m) const {
    if (m.rows() != n_ || m.cols() != n_) throw input_error("MatrixSpan size mismatch");
    return span_.contains(vectorize(m));
}

bool MatrixSpan::insert(const QMatrix& m) {
    if (m.rows() != n_ || m.cols() != n_) throw input_error("MatrixSpan size mismatch");
    if (!span_.insert(vectorize(m))) return false;
    basis_.push_back(m);
    return true;
}

MatrixSpan jordan_closure(const std::vector<QMatrix>& S) {
    if (S.empty()) throw input_error("jordan_closure needs at least one matrix");
    int n = S.front().rows();
    for (const QMatrix& m : S) {
        require_symmetric(m, "jordan_closure");
        if (m.rows() != n) throw input_error("jordan_closure size mismatch");
    }
    MatrixSpan span(n);
    span.insert(QMatrix::identity(n));
    for (const QMatrix& m : S) span.insert(m);
    // Basis completion under the Jordan product; the span dimension strictly
    // grows each round and is bounded by n(n+1)/2, so this terminates.
    std::size_t processed = 1;  // products among the first `processed` basis vectors are done
    while (processed < static_cast<std::size_t>(span.dim())) {
        std::size_t have = span.dim();
        for (std::size_t i = 0; i < have; ++i)
            for (std::size_t j = std::max(i, processed); j < have; ++j)
                span.insert(jordan_product(span.basis()[i], span.basis()[j]));
        processed = have;
    }
    return span;
}

MatrixSpan enveloping_algebra(const MatrixSpan& J) {
    int n = J.matrix_size();
    if (!J.contains(QMatrix::identity(n)))
        throw input_error("enveloping_algebra requires the identity in J");
    MatrixSpan span(n);
    for (const QMatrix& m : J.basis()) span.insert(m);
    std::size_t processed = 0;
    while (processed < static_cast<std::size_t>(span.dim())) {
        std::size_t have = span.dim();
        for (std::size_t i = 0; i < have; ++i)
            for (std::size_t j = 0; j < have; ++j) {
                if (i < processed && j < processed) continue;
                span.insert(span.basis()[i] * span.basis()[j]);
            }
        processed = have;
    }
    return span;
}

QuadraticHomogeneityReport quadratic_homogeneity_test(const std::vector<QMatrix>& S) {
    MatrixSpan J = jordan_closure(S);
    MatrixSpan U = enveloping_algebra(J);
    QuadraticHomogeneityReport report;
    report.jordan_dim = J.dim();
    report.enveloping_dim = U.dim();

    // Basis of Sym(U): combinations sum_t c_t B_t with sum_t c_t (B_t - B_t^T) = 0.
    int n = J.matrix_size();
    int u = U.dim();
    QMatrix constraint(n * n, u);
    for (int t = 0; t < u; ++t) {
        QMatrix skew = U.basis()[t] - U.basis()[t].transpose();
        for (int r = 0; r < n * n; ++r) constraint.at(r, t) = skew.data()[r];
    }
    report.homogeneous = true;
    for (const auto& coords : nullspace(constraint)) {
        QMatrix sym(n, n);
        for (int t = 0; t < u; ++t)
            if (coords[t] != 0) sym = sym + coords[t] * U.basis()[t];
        ++report.symmetric_enveloping_dim;
        if (report.homogeneous && !J.contains(sym)) {
            report.homogeneous = false;
            report.witness = sym;
        }
    }
    return report;
}

namespace {

// Anticommuting skew orthogonal complex structures on R^l used to extend a
// Clifford system past P_0, P_1. Quaternion left multiplications for l = 4.
std::vector<QMatrix> complex_structures(int l, int count) {
    std::vector<QMatrix> out;
    if (count <= 0) return out;
    auto from_rows = [](int size, std::vector<std::vector<int>> rows) {
        QMatrix m(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) m.at(i, j) = rows[i][j];
        return m;
    };
    if (l == 2 && count <= 1) {
        out.push_back(from_rows(2, {{0, -1}, {1, 0}}));
        return out;
    }
    if (l == 4 && count <= 3) {
        // L_i, L_j, L_k on the quaternions with basis (1, i, j, k).
        out.push_back(from_rows(4, {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}));
        if (count >= 2)
            out.push_back(from_rows(4, {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}));
        if (count >= 3)
            out.push_back(from_rows(4, {{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
        out.resize(count, QMatrix(0, 0));
        return out;
    }
    if (l == 8 && count <= 3) {
        // Two diagonal copies of the quaternionic structures.
        for (const QMatrix& e : complex_structures(4, count)) {
            QMatrix big(8, 8);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    big.at(i, j) = e.at(i, j);
                    big.at(4 + i, 4 + j) = e.at(i, j);
                }
            out.push_back(big);
        }
        return out;
    }
    throw input_error("no built-in Clifford representation of this size");
}

}  // namespace

CliffordSystem clifford_system(int m, int l) {
    if (m < 0 || m > 4) throw input_error("clifford_system supports 0 <= m <= 4");
    static const int table_l[5] = {1, 1, 2, 4, 8};
    int base = table_l[m];
    if (l == 0) l = base;
    if (l % base != 0)
        throw input_error("clifford_system size " + std::to_string(l) +
                          " is not a multiple of the minimal size " + std::to_string(base));

    CliffordSystem sys;
    sys.m = m;
    sys.l = l;
    int size = 2 * l;

    QMatrix p0(size, size);
    for (int i = 0; i < l; ++i) {
        p0.at(i, i) = 1;
        p0.at(l + i, l + i) = -1;
    }
    sys.mats.push_back(p0);
    if (m >= 1) {
        QMatrix p1(size, size);
        for (int i = 0; i < l; ++i) {
            p1.at(i, l + i) = 1;
            p1.at(l + i, i) = 1;
        }
        sys.mats.push_back(p1);
    }
    if (m >= 2) {
        int copies = l / base;
        for (const QMatrix& e_small : complex_structures(base, m - 1)) {
            QMatrix e(l, l);
            for (int c = 0; c < copies; ++c)
                for (int i = 0; i < base; ++i)
                    for (int j = 0; j < base; ++j) e.at(c * base + i, c * base + j) = e_small.at(i, j);
            QMatrix p(size, size);
            for (int i = 0; i < l; ++i)
                for (int j = 0; j < l; ++j) {
                    p.at(i, l + j) = e.at(i, j);
                    p.at(l + i, j) = e.at(j, i);  // E^T block keeps P symmetric
                }
            sys.mats.push_back(p);
        }
    }

    // The table is never trusted: re-verify the defining relations.
    QMatrix id = QMatrix::identity(size);
    for (std::size_t i = 0; i < sys.mats.size(); ++i) {
        if (!sys.mats[i].is_symmetric()) throw std::logic_error("clifford matrix not symmetric");
        if (sys.mats[i] * sys.mats[i] != id) throw std::logic_error("clifford matrix not an involution");
        for (std::size_t j = i + 1; j < sys.mats.size(); ++j)
            if (!(sys.mats[i] * sys.mats[j] + sys.mats[j] * sys.mats[i]).is_zero())
                throw std::logic_error("clifford matrices do not anticommute");
    }
    return sys;
}

std::vector<Polynomial> clifford_foliation_generators(const CliffordSystem& c) {
    std::vector<Polynomial> out;
    out.push_back(r_squared(2 * c.l));
    for (const QMatrix& p : c.mats) out.push_back(quadratic_form_poly(p));
    return out;
}

QMatrix quadratic_form_matrix(const Polynomial& f) {
    long d = 0;
    if (!is_homogeneous(f, &d) || (!f.is_zero() && d != 2))
        throw input_error("quadratic_form_matrix requires a homogeneous quadratic");
    int n = f.nvars();
    QMatrix m(n, n);
    for (const auto& [mono, c] : f.terms()) {
        int first = -1, second = -1;
        for (int i = 0; i < n; ++i) {
            if (mono.e[i] == 2) first = second = i;
            if (mono.e[i] == 1) (first < 0 ? first : second) = i;
        }
        if (first == second) {
            m.at(first, first) = c;
        } else {
            m.at(first, second) = c / 2;
            m.at(second, first) = c / 2;
        }
    }
    return m;
}

Polynomial quadratic_form_poly(const QMatrix& M) {
    require_symmetric(M, "quadratic_form_poly");
    int n = M.rows();
    Polynomial f(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational c = i == j ? M.at(i, i) : 2 * M.at(i, j);
            if (c == 0) continue;
            Monomial mono(n);
            mono.e[i] += 1;
            mono.e[j] += 1;
            f.add_term(mono, c);
        }
    return f;
}

}  // namespace lapalg
