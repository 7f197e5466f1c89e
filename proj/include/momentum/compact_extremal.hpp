#pragma once

#include "momentum/geometry.hpp"
#include "momentum/horizontal_data.hpp"

#include <string>
#include <vector>

namespace momentum {

// derived: boundary term of Ahat_n carries the factor 1/2 (what integrating the equation gives).
// literal: the boundary term without it.
enum class MomentConvention { derived, literal };
std::string to_string(MomentConvention c);

struct Moments {
    Scalar b;
    std::vector<Scalar> a;     // int x^n Q over [-b, b]
    std::vector<Scalar> ahat;  // int x^n Q R - k [x^n phi' Q]
    Scalar determinant() const { return a[0] * a[2] - a[1] * a[1]; }
};

// Boundary derivatives are phi'(-b) and phi'(b); (2, -2) closes both ends smoothly.
Moments moments(const HorizontalData& d, const Scalar& b, const Scalar& dphi_minus, const Scalar& dphi_plus,
                int max_n = 2, MomentConvention conv = MomentConvention::derived);

struct ExtremalSolution {
    Scalar b, sigma0, sigma1;
    RationalFn phi;
    Scalar dphi_minus, dphi_plus;
    bool positive = false;
    bool boundary_exact = false;  // phi(+-b) = 0 and phi'(+-b) as requested
    Scalar residual_value;        // phi(b); zero when boundary_exact
    Scalar residual_slope;        // phi'(b) - dphi_plus
    Moments m;
};

// sigma = sigma0 + sigma1 t on [-b, b] with phi(-b) = phi(b) = 0 and the given slopes.
// Under the derived convention every boundary identity and the curvature are checked exactly.
ExtremalSolution extremal_profile(const HorizontalData& d, const Scalar& b, const Scalar& dphi_minus,
                                  const Scalar& dphi_plus, MomentConvention conv = MomentConvention::derived);

// a0 Ahat1 - a1 Ahat0; zero exactly when sigma1 = 0.
Scalar futaki_like(const HorizontalData& d, const Scalar& b, const Scalar& dphi_minus, const Scalar& dphi_plus,
                   MomentConvention conv = MomentConvention::derived);
// The same quantity as a polynomial in b.
Poly futaki_polynomial(const HorizontalData& d, const Scalar& dphi_minus, const Scalar& dphi_plus,
                       MomentConvention conv = MomentConvention::derived);

struct CscClass {
    double b = 0;
    double futaki_at_b = 0;
    Scalar sigma0;
    double sigma1 = 0;
    bool positive = false;
    std::string habitat;
};

struct CscScan {
    bool identically_zero = false;
    bool family_positive = false;  // identically zero: positivity at every grid point
    std::vector<double> grid;
    std::vector<double> futaki;    // on the grid
    std::vector<CscClass> classes;
    int sturm_root_count = 0;      // distinct roots of the futaki polynomial in (b_min, b_max)
};

// Sign changes of futaki_like on a log-spaced grid, refined by bisection to 1e-10.
CscScan find_csc_classes(const HorizontalData& d, const Scalar& b_min, const Scalar& b_max,
                         const Scalar& dphi_minus = Scalar(2), const Scalar& dphi_plus = Scalar(-2), int grid = 64);

}  // namespace momentum
