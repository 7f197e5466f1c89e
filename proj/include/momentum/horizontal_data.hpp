#pragma once

#include "momentum/roots.hpp"

#include <string>
#include <vector>

namespace momentum {

// Eigenvalue beta of the curvature endomorphism, with its multiplicity and the trace of
// the base Ricci form restricted to the eigenbundle.
struct Block {
    Scalar beta;
    int multiplicity = 1;
    Scalar ricci_trace;
};

class HorizontalData {
public:
    HorizontalData(std::vector<Block> blocks, Domain interval);

    static HorizontalData point(Domain interval = half_line());
    static Domain half_line() { return {Bound::at(Scalar(0)), Bound::pos_inf(), true, false}; }

    const std::vector<Block>& blocks() const { return blocks_; }
    const Domain& interval() const { return interval_; }
    int dimension() const;
    bool is_exact() const;

    Poly q() const;
    // R Q, always polynomial
    Poly rq() const;
    RationalFn r() const;
    // 2 Q R
    Poly p() const { return Scalar(2) * rq(); }
    Scalar r_infinity() const;
    Scalar r_at(const Scalar& t) const { return r().eval(t); }
    bool all_beta_zero() const;
    bool has_beta_zero() const;

    HorizontalData with_interval(Domain interval) const { return HorizontalData(blocks_, interval); }

private:
    std::vector<Block> blocks_;
    Domain interval_;
};

// Blocks with equal beta combined by summing multiplicities and traces.
std::vector<Block> merge_blocks(std::vector<Block> blocks);

// Why the data fails 1 - t*beta > 0 on the interval, or empty.
std::string compatibility_failure(const std::vector<Block>& blocks, const Domain& interval);

HorizontalData product(const HorizontalData& a, const HorizontalData& b);
// Shift of the background: new data in the variable t - a.
HorizontalData translate(const HorizontalData& d, const Scalar& a);
// t -> -t
HorizontalData invert(const HorizontalData& d);

enum class AtomReading { corrected, literal };
// Kahler-Einstein atom of dimension m, scalar curvature sigma, line bundle degree k, index alpha.
HorizontalData make_atom(int m, const Scalar& sigma, const Scalar& k, const Scalar& alpha,
                         AtomReading reading = AtomReading::corrected);
// Ruled surface over a genus g curve built from a stable rank n bundle of degree k.
// Scales are in units of 2*pi; blocks are relative to s_c w_C + s_f w_F.
HorizontalData make_stable_curve(int g, int n, const Scalar& k, const Scalar& s_c, const Scalar& s_f);
HorizontalData make_flat_plane(const Scalar& beta);

namespace families {
HorizontalData d1(const Scalar& k);
HorizontalData d2(const Scalar& beta);
HorizontalData d3(const Scalar& beta, const Scalar& lambda);
}  // namespace families

}  // namespace momentum
