#include "lapalg/polynomial.hpp"

#include <sstream>

#include "lapalg/errors.hpp"

namespace lapalg {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw input_error("variable index out of range");
    Monomial m(nvars);
    m.e[index] = 1;
    Polynomial p(nvars);
    p.add_term(m, 1);
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

long Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();  // descending grlex: first term is leading
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coeff(Monomial(nvars_)); }

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw input_error("zero polynomial has no leading monomial");
    return terms_.begin()->first;
}

Rational Polynomial::leading_coefficient() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw input_error("monomial length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_same_space(const Polynomial& o, const char* op) const {
    if (nvars_ != o.nvars_)
        throw input_error(std::string("variable count mismatch in ") + op + ": " +
                          std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_space(o, "addition");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_space(o, "subtraction");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_space(b, "multiplication");
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.nvars_);
    if (c == 0) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

bool Polynomial::operator<(const Polynomial& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return grlex_greater(jt->first, it->first);
        if (it->second != jt->second) return it->second < jt->second;
    }
    return jt != o.terms_.end();
}

Polynomial pow(const Polynomial& p, unsigned int e) {
    Polynomial r = Polynomial::constant(p.nvars(), 1);
    Polynomial b = p;
    while (e > 0) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Polynomial r_squared(int nvars) {
    Polynomial p(nvars);
    for (int i = 0; i < nvars; ++i) {
        Monomial m(nvars);
        m.e[i] = 2;
        p.add_term(m, 1);
    }
    return p;
}

Polynomial derivative(const Polynomial& p, int var) {
    if (var < 0 || var >= p.nvars()) throw input_error("derivative index out of range");
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        d.e[var] -= 1;
        r.add_term(d, c * m.e[var]);
    }
    return r;
}

Polynomial laplacian(const Polynomial& p) {
    Polynomial r(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) r += derivative(derivative(p, i), i);
    return r;
}

Polynomial grad_inner(const Polynomial& p, const Polynomial& q) {
    if (p.nvars() != q.nvars()) throw input_error("variable count mismatch in grad_inner");
    Polynomial r(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) r += derivative(p, i) * derivative(q, i);
    return r;
}

Polynomial apply_dual(const Polynomial& f, const Polynomial& g) {
    if (f.nvars() != g.nvars()) throw input_error("variable count mismatch in apply_dual");
    Polynomial r(g.nvars());
    for (const auto& [m, c] : f.terms()) {
        Polynomial part = g;
        for (int i = 0; i < m.nvars() && !part.is_zero(); ++i)
            for (int k = 0; k < m.e[i]; ++k) part = derivative(part, i);
        r += c * part;
    }
    return r;
}

Rational apolar_inner(const Polynomial& p, const Polynomial& q) {
    long dp = 0, dq = 0;
    if (!is_homogeneous(p, &dp) || !is_homogeneous(q, &dq))
        throw input_error("apolar_inner requires homogeneous arguments");
    if (p.is_zero() || q.is_zero()) return 0;
    if (dp != dq) throw input_error("apolar_inner requires equal degrees");
    if (p.nvars() != q.nvars()) throw input_error("variable count mismatch in apolar_inner");
    Rational acc = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational qc = q.coeff(m);
        if (qc == 0) continue;
        Integer norm2 = 1;
        for (int x : m.e) norm2 *= factorial(static_cast<unsigned int>(x));
        acc += c * qc * Rational(norm2);
    }
    return acc;
}

bool is_homogeneous(const Polynomial& p, long* degree_out) {
    if (p.is_zero()) {
        if (degree_out) *degree_out = -1;
        return true;
    }
    long d = p.terms().begin()->first.degree();
    for (const auto& [m, c] : p.terms())
        if (m.degree() != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

std::vector<std::pair<long, Polynomial>> homogeneous_components(const Polynomial& p) {
    std::map<long, Polynomial> buckets;
    for (const auto& [m, c] : p.terms()) {
        auto [it, fresh] = buckets.emplace(m.degree(), Polynomial(p.nvars()));
        it->second.add_term(m, c);
    }
    std::vector<std::pair<long, Polynomial>> out;
    out.reserve(buckets.size());
    for (auto& [d, q] : buckets) out.emplace_back(d, std::move(q));
    return out;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw input_error("evaluation point has wrong dimension");
    Rational acc = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (int i = 0; i < m.nvars(); ++i)
            if (m.e[i] > 0) t *= pow_rational(point[i], static_cast<unsigned int>(m.e[i]));
        acc += t;
    }
    return acc;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw input_error("substitute needs one image per variable");
    int target = images.empty() ? 0 : images[0].nvars();
    for (const auto& img : images)
        if (img.nvars() != target) throw input_error("substitution images live in different spaces");

    // Cache image powers up to the largest exponent that actually occurs.
    std::vector<int> max_exp(p.nvars(), 0);
    for (const auto& [m, c] : p.terms())
        for (int i = 0; i < m.nvars(); ++i) max_exp[i] = std::max(max_exp[i], m.e[i]);
    std::vector<std::vector<Polynomial>> powers(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) {
        powers[i].push_back(Polynomial::constant(target, 1));
        for (int k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i][k - 1] * images[i]);
    }

    Polynomial r(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (int i = 0; i < m.nvars(); ++i)
            if (m.e[i] > 0) t = t * powers[i][m.e[i]];
        r += t;
    }
    return r;
}

Polynomial normalize_generator(const Polynomial& p) {
    if (p.is_zero()) return p;
    std::vector<Rational> coeffs;
    coeffs.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) coeffs.push_back(c);
    Rational c = content(coeffs);  // signed like the leading coefficient
    return Rational(1 / c) * p;
}

std::string to_string(const Polynomial& p, const std::string& var_prefix) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool has_vars = !m.is_constant();
        bool coeff_shown = !has_vars || a != 1;
        if (coeff_shown) os << to_string(a);
        bool need_star = coeff_shown;
        for (int i = 0; i < m.nvars(); ++i) {
            if (m.e[i] == 0) continue;
            if (need_star) os << "*";
            os << var_prefix << (i + 1);
            if (m.e[i] > 1) os << "^" << m.e[i];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

}  // namespace lapalg
