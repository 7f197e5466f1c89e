#pragma once

#include "momentum/poly.hpp"

#include <random>

namespace gen {

using momentum::Poly;
using momentum::Scalar;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng); }
    bool coin() { return integer(0, 1) == 1; }

    // p/q with |p| <= num_max, 1 <= q <= den_max
    Scalar rational(long num_max, long den_max) { return Scalar(integer(-num_max, num_max), integer(1, den_max)); }
    Scalar positive_rational(long num_max, long den_max) { return Scalar(integer(1, num_max), integer(1, den_max)); }
    Scalar negative_rational(long num_max, long den_max) { return -positive_rational(num_max, den_max); }

    Poly poly(int degree, long num_max, long den_max) {
        std::vector<Scalar> c;
        for (int i = 0; i <= degree; ++i) c.push_back(rational(num_max, den_max));
        if (c.back().is_zero()) c.back() = Scalar(1);
        return Poly(c);
    }
};

}  // namespace gen

#include "momentum/horizontal_data.hpp"

namespace gen {

// Data compatible with [0, inf): distinct betas <= 0.
inline momentum::HorizontalData half_line_data(Rng& rng, int max_blocks = 4, int max_mult = 3,
                                               bool allow_zero_beta = true) {
    using namespace momentum;
    int n = static_cast<int>(rng.integer(0, max_blocks));
    std::vector<Block> blocks;
    for (int i = 0; i < n; ++i) {
        Scalar beta = (allow_zero_beta && rng.integer(0, 5) == 0) ? Scalar(0) : rng.negative_rational(6, 4);
        bool dup = false;
        for (auto& b : blocks) dup = dup || b.beta == beta;
        if (dup) continue;
        blocks.push_back({beta, static_cast<int>(rng.integer(1, max_mult)), rng.rational(6, 3)});
    }
    return HorizontalData(blocks, HorizontalData::half_line());
}

// Data with r_i = k_i (lambda - beta_i) for the given lambda.
inline momentum::HorizontalData einstein_data(Rng& rng, const momentum::Scalar& lambda, int max_blocks = 4) {
    using namespace momentum;
    HorizontalData base = half_line_data(rng, max_blocks, 3);
    std::vector<Block> blocks;
    for (auto b : base.blocks()) {
        b.ricci_trace = Scalar(b.multiplicity) * (lambda - b.beta);
        blocks.push_back(b);
    }
    return HorizontalData(blocks, HorizontalData::half_line());
}

}  // namespace gen
