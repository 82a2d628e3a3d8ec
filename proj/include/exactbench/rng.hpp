#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rational.hpp"

namespace exb {

// Thin deterministic RNG wrapper.  mt19937_64 is fully specified by the
// standard, so every generator downstream is reproducible bit-for-bit per seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [lo, hi] inclusive
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
    }

    bool coin() { return uniform(0, 1) == 1; }

    // nonnegative rational with numerator <= num_max, denominator <= den_max
    Rational rational(std::int64_t num_max, std::int64_t den_max) {
        return Rational(Int(uniform(0, num_max)), Int(uniform(1, den_max)));
    }

    // random probability vector: normalized nonnegative integer weights, some
    // possibly zero so zero-probability corner cases get exercised
    std::vector<Rational> distribution(int n, std::int64_t weight_max = 20) {
        std::vector<Int> w(n);
        Int total = 0;
        while (total == 0) {
            total = 0;
            for (auto& wi : w) {
                wi = uniform(0, weight_max);
                total += wi;
            }
        }
        std::vector<Rational> y;
        y.reserve(n);
        for (auto& wi : w) y.emplace_back(wi, total);
        return y;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform(0, std::int64_t(i) - 1)]);
    }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace exb
