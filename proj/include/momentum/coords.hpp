#pragma once

#include "momentum/geometry.hpp"

#include <string>
#include <vector>

namespace momentum {

// Value of an integral up to an end of the domain; infinite when the end is at infinite t or s.
struct EndValue {
    bool divergent = false;
    double value = 0;  // +-inf when divergent
    std::string certificate;
};

struct CoordRow {
    double tau, t, s, r, phi, phi_over_r;
};

struct CoordTable {
    double tau0 = 0, t0 = 0;
    std::vector<CoordRow> rows;
    std::string csv() const;
};

// t, s and f of a positive profile on an open interval, normalized by t(tau0) = t0.
class Coordinates {
public:
    Coordinates(RationalFn phi, Domain dom, double tau0, double t0 = 0);
    // tau0 at the maximum of phi on a bounded interval, else 1 (or an interior sample point).
    static double default_tau0(const RationalFn& phi, const Domain& dom);

    const RationalFn& phi() const { return phi_; }
    const Domain& domain() const { return dom_; }
    double tau0() const { return tau0_; }
    double t0() const { return t0_; }

    double phi_at(double tau) const { return phi_.eval_double(tau); }
    // integral of 1/phi from tau0
    double t_of_tau(double tau) const;
    // integral of 1/sqrt(phi) from tau0
    double s_of_tau(double tau) const;
    // integral of x/phi from tau0, i.e. f(t) - f(t0) with f' = tau
    double f_of_tau(double tau) const;
    double f_of_t(double t) const { return f_of_tau(tau_of_t(t)); }
    double tau_of_t(double t) const;
    // F with F' = t(tau), F(tau0) = t0 tau0: the Legendre dual of f
    double legendre_dual(double tau) const;

    // Limits at the ends of the domain; side -1 lower, +1 upper.
    EndValue t_end(int side) const;
    EndValue s_end(int side) const;
    double r_min() const;
    double r_max() const;

    CoordRow row_at_tau(double tau) const;
    CoordTable table_at_r(const std::vector<double>& r_values) const;
    CoordTable table_at_tau(const std::vector<double>& taus) const;

    // 2 pi int phi(tau(t)) dt over [t(tau1), t(tau2)]
    double fibre_area(double tau1, double tau2) const;

private:
    EndValue end_value(int side, bool distance) const;
    bool inside(double tau) const;

    RationalFn phi_;
    Domain dom_;
    double tau0_, t0_;
    double lo_, hi_;  // +-inf for infinite ends
};

// Numerical divergence test for int 1/phi (distance = false) or 1/sqrt(phi) toward an end,
// from the decay of increments over geometrically shrinking shells.
bool numeric_divergence(const RationalFn& phi, const Domain& dom, int side, bool distance);

}  // namespace momentum
