#pragma once

#include "momentum/csc_solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace momentum {

// Horizontal blocks of P(E) relative to the background w(t0) = w_D - t0 gamma.
// The vertical block is implicit: eigenvalue t of multiplicity n - 1, Ricci eigenvalue n.
class VectorBundleData {
public:
    VectorBundleData(int rank, std::vector<Block> blocks, Scalar tau0 = Scalar(1));

    int rank() const { return rank_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Scalar& tau0() const { return tau0_; }
    int base_dim() const;
    bool is_exact() const;

    // (t/t0)^(n-1) prod (1 - (t - t0) beta)^k
    Poly q() const;
    Poly rq() const;
    // n(n-1)/t + sum r / (1 - (t - t0) beta)
    RationalFn r() const;
    Scalar r_infinity() const;

    // Same bundle, blocks re-expressed against w(t1).
    VectorBundleData rebase(const Scalar& t1) const;
    // Line-bundle data on P(E) with the vertical block made explicit, in the variable t - t0.
    HorizontalData as_line_bundle() const;

private:
    int rank_;
    std::vector<Block> blocks_;
    Scalar tau0_;
};

inline Poly q_vb(const VectorBundleData& v) { return v.q(); }
inline RationalFn r_vb(const VectorBundleData& v) { return v.r(); }

// Stable rank n bundle of degree k over a genus g curve, base scale in units of 2 pi.
VectorBundleData make_stable_curve_vb(int g, int n, const Scalar& k, const Scalar& sigma_d);

// phi Q = 2 int_0^t (t - x)(R - c) Q dx; jets (0, 2) are checked.
RationalFn csc_profile_c(const VectorBundleData& v, const Scalar& c);
RationalFn scalar_curvature_vb(const VectorBundleData& v, const RationalFn& phi);
// Coefficient of 1/t in the scalar curvature.
Scalar sigma_residue(const VectorBundleData& v, const RationalFn& phi);

CscSystem csc_system_vb(const VectorBundleData& v);
ThresholdAnalysis c_threshold_vb(const VectorBundleData& v);
ExceptionalSet exceptional_curvatures_vb(const VectorBundleData& v);

struct VbClassification {
    CscClassification base;
    std::string habitat;  // Delta(E), E, P(E+O), incomplete, invalid
    bool complete = false;
};
VbClassification classify_csc_vb(const VectorBundleData& v, const Scalar& c);

// u = (phi Q)'/2Q must be n - lambda t, and each block must satisfy r + n beta k = lambda (1 + t0 beta) k.
EinsteinVerdict einstein_check_vb(const VectorBundleData& v, const RationalFn& phi);
RationalFn einstein_profile_vb(const VectorBundleData& v, const Scalar& lambda);

}  // namespace momentum
