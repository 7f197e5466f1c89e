#pragma once

#include "momentum/geometry.hpp"
#include "momentum/horizontal_data.hpp"
#include "momentum/profile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace momentum {

// Everything the threshold analysis needs: phi_c Q = 2 (P1 - (c - R_inf) P2) with
// P1 = lin t + int int (R - R_inf) Q and P2 = int int Q over [0, t].
struct CscSystem {
    Poly q;
    Poly r0q;            // (R - R_inf) Q
    Scalar r_inf;
    Scalar lin;          // 1: smooth zero section, 0: cusp or forced jet
    Scalar lower_bound;  // R_inf + sum of negative block contributions
    std::optional<Scalar> r_at_zero;  // cusp variant cap
    int dimension = 0;
    bool flat_product = false;  // all betas zero: local product with a flat bundle
    std::string label;

    Poly p1() const;
    Poly p2() const;
    // C(t) = R_inf + P1 / P2
    RationalFn threshold_function() const;
    RationalFn phi(const Scalar& c) const;
    Poly phi_q(const Scalar& c) const;
};

CscSystem csc_system(const HorizontalData& d, Variant v);

struct ThresholdAnalysis {
    Scalar c0;
    bool c0_exact = true;
    Infimum infimum;
    bool attained = false;                  // C attains c0 inside (0, inf)
    std::string borderline_kind;            // positive-on-(0,inf) or first-zero
    bool j_closed = false;                  // c0 belongs to J
    std::optional<AlgebraicReal> borderline_zero;
    bool borderline_profile_zero = false;   // phi_{c0} vanishes identically
    std::vector<std::string> flags;
};

ThresholdAnalysis c_threshold(const CscSystem& s);
ThresholdAnalysis c_threshold(const HorizontalData& d, Variant v);

std::pair<Scalar, Scalar> c0_bounds(const CscSystem& s);
std::pair<Scalar, Scalar> c0_bounds(const HorizontalData& d);

struct ExceptionalEntry {
    int e = 0;                 // phi'(b): 0 cusp, -2 compactification
    AlgebraicReal b;
    Poly defining;             // square-free polynomial vanishing at b
    std::optional<Scalar> c;   // exact curvature when b is rational
    double c_approx = 0;
    bool verified = false;     // exact substitution into phi_c passed
    std::string kind() const { return e == 0 ? "cusp" : "compactification"; }
};

struct ExceptionalSet {
    std::vector<ExceptionalEntry> entries;
    std::vector<int> identically_satisfied;  // values of e for which the equation holds for every b
};

ExceptionalSet exceptional_curvatures(const CscSystem& s);
ExceptionalSet exceptional_curvatures(const HorizontalData& d, Variant v);

// Exact check, in Q[x]/(g), that phi_c(b) = 0 and phi_c'(b) = e when c = R_inf + P1(b)/P2(b).
bool verify_exceptional_substitution(const CscSystem& s, const Poly& g, int e);

struct FirstZero {
    AlgebraicReal b;
    int multiplicity = 1;
};

struct CscClassification {
    Scalar c;
    RationalFn phi;
    bool positive_on_half_line = false;
    std::optional<FirstZero> first_zero;
    Domain domain;                 // (0, inf) or (0, b)
    EndpointClass lower, upper;
    Habitat habitat;
    EinsteinVerdict einstein;
    bool fibre_area_finite = false;
    bool valid = true;             // phi positive near 0
    std::string note;
};

CscClassification classify_csc(const HorizontalData& d, const Scalar& c, Variant v);
CscClassification classify_csc(const CscSystem& s, const Scalar& c);

}  // namespace momentum
