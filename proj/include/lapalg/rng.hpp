#ifndef LAPALG_RNG_HPP
#define LAPALG_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lapalg/rational.hpp"

namespace lapalg {

// Deterministic seeded generator. mt19937_64 output is fully specified by the
// standard and the bounded draw below avoids unspecified distributions, so
// streams are reproducible across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        eng_.seed(seq);
    }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % range);
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % range);
    }

    std::vector<Rational> int_point(int n, std::int64_t lo, std::int64_t hi) {
        std::vector<Rational> p;
        p.reserve(n);
        for (int i = 0; i < n; ++i) p.emplace_back(static_cast<long>(int_in(lo, hi)));
        return p;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace lapalg

#endif
