#include "lapalg/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "lapalg/errors.hpp"
#include "lapalg/rng.hpp"
#include "lapalg/subalgebra.hpp"

namespace lapalg {

FiniteGroup group_closure(const std::vector<QMatrix>& generators, int cap) {
    if (generators.empty()) throw input_error("group_closure needs at least one generator");
    int n = generators.front().rows();
    QMatrix id = QMatrix::identity(n);
    for (const QMatrix& g : generators) {
        if (g.rows() != n || g.cols() != n) throw input_error("group generators have mixed sizes");
        if (g.transpose() * g != id)
            throw input_error("group generator is not orthogonal (M^T M != I)");
    }

    std::set<QMatrix> seen;
    std::deque<QMatrix> queue;
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        QMatrix cur = queue.front();
        queue.pop_front();
        for (const QMatrix& g : generators) {
            QMatrix next = cur * g;
            if (seen.insert(next).second) {
                if (static_cast<int>(seen.size()) > cap)
                    throw input_error("group closure exceeded the cap of " + std::to_string(cap) +
                                      " elements; the generated group is likely infinite");
                queue.push_back(std::move(next));
            }
        }
    }

    FiniteGroup G;
    G.dim = n;
    G.elements.assign(seen.begin(), seen.end());
    return G;
}

Polynomial compose_linear(const Polynomial& f, const QMatrix& M) {
    if (M.rows() != f.nvars() || M.cols() != f.nvars())
        throw input_error("compose_linear dimension mismatch");
    int n = f.nvars();
    std::vector<Polynomial> images;
    images.reserve(n);
    for (int a = 0; a < n; ++a) {
        Polynomial img(n);
        for (int b = 0; b < n; ++b) {
            if (M.at(a, b) == 0) continue;
            img += M.at(a, b) * Polynomial::variable(n, b);
        }
        images.push_back(std::move(img));
    }
    return substitute(f, images);
}

Polynomial reynolds(const FiniteGroup& G, const Polynomial& f) {
    if (f.nvars() != G.dim) throw input_error("reynolds dimension mismatch");
    Polynomial acc(G.dim);
    for (const QMatrix& g : G.elements) acc += compose_linear(f, g);
    return Rational(1, static_cast<unsigned long>(G.order())) * acc;
}

std::vector<Polynomial> reynolds_invariant_basis(const FiniteGroup& G, int degree_bound,
                                                 GroebnerBudget budget) {
    if (degree_bound <= 0) degree_bound = static_cast<int>(G.order());
    if (degree_bound < 1) throw input_error("degree bound must be >= 1");

    std::vector<Polynomial> kept;
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<Polynomial> candidates;
        for (const Monomial& m : monomials_of_degree(G.dim, d)) {
            Polynomial avg = normalize_generator(reynolds(G, Polynomial::term(m, 1)));
            if (avg.is_zero()) continue;
            if (std::find(candidates.begin(), candidates.end(), avg) == candidates.end())
                candidates.push_back(std::move(avg));
        }
        for (const Polynomial& c : candidates) {
            if (std::find(kept.begin(), kept.end(), c) != kept.end()) continue;
            if (!kept.empty()) {
                SubalgebraPresentation algebra(G.dim, kept, budget);
                if (algebra.membership(c).in) continue;
            }
            kept.push_back(c);
        }
    }
    return kept;
}

IitReport iit_pipeline(const FiniteGroup& G, int degree_bound, int trials, std::uint64_t seed,
                       GroebnerBudget budget) {
    IitReport report;
    report.generators = reynolds_invariant_basis(G, degree_bound, budget);

    // r^2 is always invariant; the Laplacian criterion requires it in the set.
    std::vector<Polynomial> with_r2 = report.generators;
    Polynomial r2 = r_squared(G.dim);
    if (std::find(with_r2.begin(), with_r2.end(), r2) == with_r2.end()) with_r2.push_back(r2);

    report.laplacian = is_laplacian_system(with_r2, budget);
    SubalgebraPresentation algebra(G.dim, with_r2, budget);
    report.trdeg = transcendence_degree(algebra, trials, seed);
    report.pass =
        report.laplacian.verdict == LapVerdict::Laplacian && report.trdeg == G.dim;
    return report;
}

namespace {

// Small deterministic integer grid with roughly 100 points per dimension
// budget, used to give S-value collisions a chance to appear.
std::vector<std::vector<Rational>> sample_grid(int n) {
    int radius = n <= 2 ? 4 : (n == 3 ? 2 : 1);
    std::vector<std::vector<Rational>> points;
    std::vector<int> idx(n, -radius);
    while (true) {
        std::vector<Rational> p;
        p.reserve(n);
        for (int v : idx) p.emplace_back(v);
        points.push_back(std::move(p));
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == radius) {
            idx[pos] = -radius;
            --pos;
        }
        if (pos < 0) break;
        ++idx[pos];
    }
    return points;
}

}  // namespace

OrbitSepReport orbit_separation_sample(const FiniteGroup& G, const std::vector<Polynomial>& S,
                                       int trials, std::uint64_t seed) {
    if (S.empty()) throw input_error("orbit separation needs a nonempty polynomial set");
    for (const Polynomial& f : S)
        if (f.nvars() != G.dim) throw input_error("orbit separation dimension mismatch");

    std::vector<std::vector<Rational>> points = sample_grid(G.dim);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) points.push_back(rng.int_point(G.dim, -20, 20));

    // Invariance precondition, checked exactly on every sampled point.
    for (const auto& p : points)
        for (const QMatrix& g : G.elements) {
            std::vector<Rational> gp = g.apply(p);
            for (const Polynomial& f : S)
                if (evaluate(f, gp) != evaluate(f, p))
                    throw input_error("orbit separation: input polynomial " + to_string(f) +
                                      " is not invariant under the group");
        }

    OrbitSepReport report;
    report.points_tested = static_cast<int>(points.size());

    std::map<std::vector<Rational>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<Rational> key;
        key.reserve(S.size());
        for (const Polynomial& f : S) key.push_back(evaluate(f, points[i]));
        buckets[key].push_back(i);
    }

    for (const auto& [key, members] : buckets) {
        if (members.size() < 2) continue;
        // All members must lie on the orbit of the first.
        const std::vector<Rational>& rep = points[members.front()];
        std::set<std::vector<Rational>> orbit;
        for (const QMatrix& g : G.elements) orbit.insert(g.apply(rep));
        for (std::size_t t = 1; t < members.size(); ++t) {
            if (!orbit.count(points[members[t]])) {
                report.counterexample = true;
                report.point_a = rep;
                report.point_b = points[members[t]];
                return report;
            }
        }
    }
    return report;
}

KnsReport kns_check(const std::vector<Polynomial>& A_gens, int k, int trials, std::uint64_t seed) {
    if (A_gens.empty()) throw input_error("kns_check needs generators");
    if (k < 1) throw input_error("kns_check needs k >= 1");
    if (trials < 1) throw input_error("kns_check needs trials >= 1");
    int n = A_gens.front().nvars();
    for (const Polynomial& g : A_gens)
        if (g.nvars() != n) throw input_error("generators live in different spaces");

    KnsReport report;
    report.k = k;
    report.trials = trials;
    report.dim = n;
    int m = static_cast<int>(A_gens.size());
    for (int t = 0; t < trials; ++t) {
        // One substream per trial; raising k extends the same point sequence,
        // which makes the monotonicity in k checkable with a fixed seed.
        Rng rng(seed, static_cast<std::uint64_t>(t));
        QMatrix rows(k * m, n);
        for (int b = 0; b < k; ++b) {
            std::vector<Rational> point = rng.int_point(n, -20, 20);
            for (int a = 0; a < m; ++a)
                for (int i = 0; i < n; ++i)
                    rows.at(b * m + a, i) = evaluate(derivative(A_gens[a], i), point);
        }
        report.max_rank = std::max(report.max_rank, rank(std::move(rows)));
        if (report.max_rank == n) break;
    }
    report.holds = report.max_rank == n;
    return report;
}

}  // namespace lapalg
