#pragma once

#include "momentum/coords.hpp"

#include <string>
#include <vector>

namespace momentum {

struct Table2Sample {
    double r = 0, tau = 0;
    double factor = 0;       // phi(tau)/r from the reconstructed coordinates
    double closed_form = 0;  // the tabulated expression in r
    double error = 0;
};

// One complete circle-invariant constant scalar curvature metric on a domain in P1.
struct Table2Row {
    std::string label;   // (i) ... (vi)
    std::string name;
    RationalFn phi;
    Domain interval;
    EndpointClass lower, upper;
    Habitat habitat;
    std::string distance_a, distance_b, area_a, area_b;  // finite / infinite
    Scalar sigma;
    bool sigma_constant = false;
    std::string domain;       // P1, C, Delta, Delta^x, C^x, Annulus
    std::string r_range;      // closed or open ends; numeric for the annulus
    double r_min = 0, r_max = 0;
    double t_range_length = 0;  // conformal modulus of the annulus; inf otherwise
    double tau0 = 0, t0 = 0;
    std::string normalization;
    std::string factor_formula;
    std::vector<Table2Sample> samples;
    double max_error = 0;
};

// The six canonical profiles with point-base data, parameters c and alpha.
std::vector<Table2Row> table2_generate(const Scalar& c = Scalar(1), const Scalar& alpha = Scalar(1),
                                       const std::vector<double>& r_samples = {0.1, 1.0, 10.0});
std::string table2_csv(const std::vector<Table2Row>& rows);

}  // namespace momentum
