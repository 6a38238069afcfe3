#include "lapalg/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "lapalg/errors.hpp"

namespace lapalg {

namespace {

using Term = std::pair<Monomial, Rational>;
using TermVec = std::vector<Term>;

struct Ctx {
    const TermOrder& ord;
    const std::vector<long>* weights = nullptr;
    long max_weight = -1;
    std::uint64_t steps = 0;
    std::uint64_t max_steps = 0;

    void tick(std::uint64_t k) {
        steps += k;
        if (steps > max_steps)
            throw budget_error("groebner step budget exhausted after " + std::to_string(steps) +
                               " steps; result would be INDETERMINATE");
    }
};

long wdeg(const Monomial& m, const std::vector<long>& w) {
    long d = 0;
    for (int i = 0; i < m.nvars(); ++i) d += static_cast<long>(m.e[i]) * w[i];
    return d;
}

TermVec to_termvec(const Polynomial& p, const TermOrder& ord) {
    TermVec tv(p.terms().begin(), p.terms().end());
    std::sort(tv.begin(), tv.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
    return tv;
}

Polynomial to_poly(const TermVec& tv, int nvars) {
    Polynomial p(nvars);
    for (const auto& [m, c] : tv) p.add_term(m, c);
    return p;
}

// Work estimate for one coefficient: scales with the operand bit length so
// the step budget tracks real cost when coefficients swell.
std::uint64_t coeff_cost(const Rational& c) {
    return 1 + (mpz_sizeinbase(c.get_num().get_mpz_t(), 2) +
                mpz_sizeinbase(c.get_den().get_mpz_t(), 2)) /
                   64;
}

// a - c * x^m * g, all term vectors sorted descending under ord.
TermVec sub_scaled(const TermVec& a, std::size_t a_from, const Rational& c, const Monomial& m,
                   const TermVec& g, Ctx& ctx) {
    ctx.tick((g.size() + (a.size() - a_from)) * coeff_cost(c));
    TermVec out;
    out.reserve(a.size() - a_from + g.size());
    std::size_t i = a_from, j = 0;
    while (i < a.size() && j < g.size()) {
        Monomial gm = monomial_mul(g[j].first, m);
        if (a[i].first == gm) {
            Rational v = a[i].second - c * g[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        } else if (ctx.ord.greater(a[i].first, gm)) {
            out.push_back(a[i]);
            ++i;
        } else {
            out.emplace_back(std::move(gm), -c * g[j].second);
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < g.size(); ++j) out.emplace_back(monomial_mul(g[j].first, m), -c * g[j].second);
    return out;
}

// Divides out content, makes the leading coefficient positive.
void make_primitive(TermVec& f) {
    if (f.empty()) return;
    std::vector<Rational> coeffs;
    coeffs.reserve(f.size());
    for (const auto& [m, c] : f) coeffs.push_back(c);
    Rational inv = 1 / content(coeffs);
    for (auto& [m, c] : f) c *= inv;
}

void make_monic(TermVec& f) {
    if (f.empty()) return;
    Rational inv = 1 / f.front().second;
    for (auto& [m, c] : f) c *= inv;
}

// Full normal form. The reducer with the fewest terms is chosen (ties by
// basis position), and the working remainder is kept content-free with the
// stripped factor tracked in `scale`, which limits coefficient swell without
// changing the result. Deterministic throughout.
TermVec normal_form_tv(TermVec f, const std::vector<TermVec>& basis, Ctx& ctx) {
    TermVec out;
    Rational scale = 1;
    std::size_t pos = 0;
    while (pos < f.size()) {
        const TermVec* reducer = nullptr;
        for (const TermVec& g : basis) {
            if (g.empty() || !divides(g.front().first, f[pos].first)) continue;
            if (!reducer || g.size() < reducer->size()) reducer = &g;
        }
        if (!reducer) {
            out.emplace_back(f[pos].first, scale * f[pos].second);
            ++pos;
            continue;
        }
        Rational c = f[pos].second / reducer->front().second;
        Monomial shift = monomial_div(f[pos].first, reducer->front().first);
        f = sub_scaled(f, pos, c, shift, *reducer, ctx);
        pos = 0;
        if (!f.empty()) {
            std::vector<Rational> coeffs;
            coeffs.reserve(f.size());
            for (const auto& [m, cf] : f) coeffs.push_back(cf);
            Rational content_f = content(coeffs);
            if (content_f != 1) {
                Rational inv = 1 / content_f;
                for (auto& [m, cf] : f) cf *= inv;
                scale *= content_f;
            }
        }
    }
    return out;
}

struct Pair {
    long key;  // (weighted) degree of the lcm, for normal selection
    int i, j;
    bool operator<(const Pair& o) const {
        return std::tie(key, i, j) < std::tie(o.key, o.i, o.j);
    }
};

class Buchberger {
public:
    Buchberger(std::vector<TermVec> gens, Ctx& ctx) : ctx_(ctx) {
        for (auto& g : gens) {
            if (g.empty()) continue;
            make_primitive(g);
            add_element(std::move(g));
        }
    }

    std::vector<TermVec> run() {
        while (!pairs_.empty()) {
            Pair p = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            TermVec s = s_poly(p.i, p.j);
            TermVec r = normal_form_tv(std::move(s), basis_, ctx_);
            if (!r.empty()) {
                make_primitive(r);
                add_element(std::move(r));
            }
        }
        return finalize();
    }

private:
    Ctx& ctx_;
    std::vector<TermVec> basis_;
    std::set<Pair> pairs_;

    const Monomial& lt(int i) const { return basis_[i].front().first; }

    long lcm_key(const Monomial& l) const {
        return ctx_.weights ? wdeg(l, *ctx_.weights) : l.degree();
    }

    TermVec s_poly(int i, int j) {
        Monomial l = monomial_lcm(lt(i), lt(j));
        Monomial mi = monomial_div(l, lt(i));
        Monomial mj = monomial_div(l, lt(j));
        // (1/lc_i) x^mi f_i - (1/lc_j) x^mj f_j, built as one merge
        TermVec scaled_i;
        scaled_i.reserve(basis_[i].size());
        Rational inv_i = 1 / basis_[i].front().second;
        for (const auto& [m, c] : basis_[i]) scaled_i.emplace_back(monomial_mul(m, mi), c * inv_i);
        Rational cj = 1 / basis_[j].front().second;
        return sub_scaled(scaled_i, 0, cj, mj, basis_[j], ctx_);
    }

    // Gebauer-Moller pair update for a new basis element.
    void add_element(TermVec g) {
        int t = static_cast<int>(basis_.size());
        basis_.push_back(std::move(g));
        ctx_.tick(1);

        std::vector<Monomial> lcm_with(t);
        for (int i = 0; i < t; ++i) lcm_with[i] = monomial_lcm(lt(i), lt(t));

        // Criterion B: drop pending pairs whose lcm is strictly refined by t.
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            Monomial l = monomial_lcm(lt(it->i), lt(it->j));
            if (divides(lt(t), l) && lcm_with[it->i] != l && lcm_with[it->j] != l)
                it = pairs_.erase(it);
            else
                ++it;
        }

        // Criterion M: drop (i,t) when some (j,t) has a strictly smaller lcm.
        std::vector<bool> keep(t, true);
        for (int i = 0; i < t; ++i) {
            if (!keep[i]) continue;
            for (int j = 0; j < t; ++j) {
                if (i == j || !keep[j]) continue;
                if (lcm_with[j] != lcm_with[i] && divides(lcm_with[j], lcm_with[i])) {
                    keep[i] = false;
                    break;
                }
            }
        }

        // Criterion F: one representative per equal lcm; a coprime pair kills
        // its whole group (its S-polynomial reduces to zero).
        std::map<std::vector<int>, int> rep;
        for (int i = 0; i < t; ++i) {
            if (!keep[i]) continue;
            auto [it, fresh] = rep.emplace(lcm_with[i].e, i);
            if (!fresh) keep[i] = false;
        }
        for (auto& [key, i] : rep) {
            if (coprime(lt(i), lt(t))) keep[i] = false;
        }

        for (int i = 0; i < t; ++i) {
            if (!keep[i]) continue;
            long key = lcm_key(lcm_with[i]);
            if (ctx_.max_weight >= 0 && key > ctx_.max_weight) continue;  // truncation
            pairs_.insert(Pair{key, i, t});
        }
    }

    std::vector<TermVec> finalize() {
        // Minimalize: drop elements whose leading monomial another one divides.
        std::vector<int> order_idx(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) order_idx[i] = static_cast<int>(i);
        std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
            return ctx_.ord.greater(lt(b), lt(a));  // ascending leading monomial
        });
        std::vector<TermVec> minimal;
        for (int idx : order_idx) {
            bool redundant = false;
            for (const TermVec& kept : minimal)
                if (divides(kept.front().first, lt(idx))) {
                    redundant = true;
                    break;
                }
            if (!redundant) minimal.push_back(basis_[idx]);
        }
        // Tail-reduce each element against the others, then make monic.
        std::vector<TermVec> reduced;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<TermVec> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            TermVec tail(minimal[i].begin() + 1, minimal[i].end());
            TermVec nf_tail = normal_form_tv(std::move(tail), others, ctx_);
            TermVec full;
            full.push_back(minimal[i].front());
            full.insert(full.end(), nf_tail.begin(), nf_tail.end());
            make_monic(full);
            reduced.push_back(std::move(full));
        }
        std::sort(reduced.begin(), reduced.end(), [&](const TermVec& a, const TermVec& b) {
            return ctx_.ord.greater(a.front().first, b.front().first);
        });
        return reduced;
    }
};

GroebnerBasis run_buchberger(const std::vector<Polynomial>& gens, const TermOrder& order,
                             const std::vector<long>* weights, long max_weight,
                             const GroebnerBudget& budget) {
    if (gens.empty()) throw input_error("groebner_basis needs a nonempty generator list");
    int nvars = gens.front().nvars();
    for (const Polynomial& g : gens)
        if (g.nvars() != nvars) throw input_error("groebner generators live in different spaces");
    order.validate(nvars);
    if (weights && static_cast<int>(weights->size()) != nvars)
        throw input_error("weight vector length mismatch");

    Ctx ctx{order, weights, max_weight, 0, budget.max_steps};
    std::vector<TermVec> input_tv;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        TermVec tv = to_termvec(g, order);
        if (weights) {
            long w = wdeg(tv.front().first, *weights);
            for (const auto& [m, c] : tv)
                if (wdeg(m, *weights) != w)
                    throw input_error("truncated groebner requires weight-homogeneous generators");
            if (w > max_weight) continue;  // cannot touch queries within the truncation
        }
        input_tv.push_back(std::move(tv));
    }

    Buchberger engine(std::move(input_tv), ctx);
    std::vector<TermVec> result = engine.run();

    GroebnerBasis gb;
    gb.nvars = nvars;
    gb.order = order;
    gb.input = gens;
    if (weights) {
        gb.weights = *weights;
        gb.truncation_weight = max_weight;
    }
    for (const TermVec& tv : result) gb.basis.push_back(to_poly(tv, nvars));
    return gb;
}

}  // namespace

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const TermOrder& order,
                             const GroebnerBudget& budget) {
    return run_buchberger(gens, order, nullptr, -1, budget);
}

GroebnerBasis groebner_basis_truncated(const std::vector<Polynomial>& gens, const TermOrder& order,
                                       const std::vector<long>& weights, long max_weight,
                                       const GroebnerBudget& budget) {
    return run_buchberger(gens, order, &weights, max_weight, budget);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, const GroebnerBudget& budget) {
    if (f.nvars() != gb.nvars) throw input_error("normal_form variable count mismatch");
    if (gb.truncation_weight >= 0) {
        long w = 0;
        for (const auto& [m, c] : f.terms()) {
            long mw = 0;
            for (int i = 0; i < m.nvars(); ++i) mw += static_cast<long>(m.e[i]) * gb.weights[i];
            w = std::max(w, mw);
        }
        if (w > gb.truncation_weight)
            throw input_error("normal_form query exceeds the basis truncation weight");
    }
    Ctx ctx{gb.order, nullptr, -1, 0, budget.max_steps};
    std::vector<TermVec> basis_tv;
    basis_tv.reserve(gb.basis.size());
    for (const Polynomial& g : gb.basis) basis_tv.push_back(to_termvec(g, gb.order));
    TermVec nf = normal_form_tv(to_termvec(f, gb.order), basis_tv, ctx);
    return to_poly(nf, gb.nvars);
}

}  // namespace lapalg
