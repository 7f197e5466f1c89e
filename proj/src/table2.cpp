#include "momentum/table2.hpp"

#include "momentum/error.hpp"
#include "momentum/profile.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace momentum {

namespace {

struct RowSpec {
    const char* label;
    const char* name;
    RationalFn phi;
    Domain interval;
    double tau0, t0;
    std::string normalization;
    std::string factor_formula;
    std::function<double(double)> closed_form;
};

std::string g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string domain_name(const std::string& fibre) {
    if (fibre == "P1") return "P1";
    if (fibre == "C") return "C";
    if (fibre == "disc") return "Delta";
    if (fibre == "punctured-disc") return "Delta^x";
    if (fibre == "C^x") return "C^x";
    if (fibre == "annulus") return "Annulus";
    return fibre;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::vector<Table2Row> table2_generate(const Scalar& c, const Scalar& alpha, const std::vector<double>& r_samples) {
    if (c.sign() <= 0 || alpha.sign() <= 0) throw InvalidInput("table parameters c and alpha must be positive");
    Poly x = Poly::x();
    Scalar c2 = c * c, a2 = alpha * alpha;
    double cd = c.to_double(), ad = alpha.to_double();
    double cc = cd * cd;
    Domain half = Domain::positive_reals();
    Domain line = Domain::open(Bound::neg_inf(), Bound::pos_inf());

    std::vector<RowSpec> specs = {
        {"(i)", "Fubini-Study", RationalFn(Scalar(2) * x - c2 * x * x),
         Domain::open(Bound::at(Scalar(0)), Bound::at(Scalar(2) / c2)), 1 / cc, 0,
         "r = c^2 tau/(2 - c^2 tau): tau0 = 1/c^2, t0 = 0", "4/(c^2 (1+r)^2)",
         [=](double r) { return 4 / (cc * (1 + r) * (1 + r)); }},
        {"(ii)", "flat plane", RationalFn(Scalar(2) * x), half, 0.5, 0, "tau = r/2: tau0 = 1/2, t0 = 0", "1",
         [](double) { return 1.0; }},
        {"(iii)", "Poincare disc", RationalFn(Scalar(2) * x + c2 * x * x), half, 2 / cc, -0.5 * std::log(2.0),
         "r = c^2 tau/(2 + c^2 tau): tau0 = 2/c^2, t0 = -log(2)/2", "4/(c^2 (1-r)^2)",
         [=](double r) { return 4 / (cc * (1 - r) * (1 - r)); }},
        {"(iv)", "hyperbolic cusp", RationalFn(c2 * x * x), half, 1 / cc, -1,
         "r = exp(-2/(c^2 tau)): tau0 = 1/c^2, t0 = -1", "4/(c^2 r (log r)^2)",
         [=](double r) { return 4 / (cc * r * std::log(r) * std::log(r)); }},
        {"(v)", "flat cylinder", RationalFn(Poly(a2)), line, 0, 0, "r = exp(2 tau/alpha^2): tau0 = 0, t0 = 0",
         "alpha^2/r", [=](double r) { return ad * ad / r; }},
        {"(vi)", "hyperbolic annulus", RationalFn(Poly(a2) + c2 * x * x), line, 0, 0,
         "t = arctan(c tau/alpha)/(c alpha): tau0 = 0, t0 = 0", "alpha^2/(r cos^2(c alpha log(r)/2))",
         [=](double r) {
             double k = std::cos(cd * ad * std::log(r) / 2);
             return ad * ad / (r * k * k);
         }},
    };

    std::vector<Table2Row> rows;
    for (const auto& sp : specs) {
        Table2Row row;
        row.label = sp.label;
        row.name = sp.name;
        row.phi = sp.phi;
        row.interval = sp.interval;
        row.lower = classify_endpoint(sp.phi, EndpointSpec::lower(sp.interval.lower));
        row.upper = classify_endpoint(sp.phi, EndpointSpec::upper(sp.interval.upper));
        row.habitat = habitat_of(row.lower, row.upper);
        row.distance_a = row.lower.distance_finite ? "finite" : "infinite";
        row.distance_b = row.upper.distance_finite ? "finite" : "infinite";
        row.area_a = row.lower.area_finite ? "finite" : "infinite";
        row.area_b = row.upper.area_finite ? "finite" : "infinite";
        RationalFn sigma = scalar_curvature(HorizontalData::point(sp.interval), sp.phi);
        row.sigma_constant = sigma.is_polynomial() && sigma.num().degree() <= 0;
        if (row.sigma_constant) row.sigma = sigma.eval(Scalar(0));
        row.domain = domain_name(row.habitat.fibre);
        row.tau0 = sp.tau0;
        row.t0 = sp.t0;
        row.normalization = sp.normalization;
        row.factor_formula = sp.factor_formula;

        Coordinates co(sp.phi, sp.interval, sp.tau0, sp.t0);
        EndValue lo = co.t_end(-1), hi = co.t_end(+1);
        row.r_min = std::exp(2 * lo.value);
        row.r_max = std::exp(2 * hi.value);
        row.t_range_length = hi.value - lo.value;
        row.r_range = row.habitat.kind == "annulus" ? "(" + g12(row.r_min) + "," + g12(row.r_max) + ")" : row.habitat.r_range;
        for (double r : r_samples) {
            if (!(r > row.r_min && r < row.r_max)) continue;
            Table2Sample s;
            s.r = r;
            s.tau = co.tau_of_t(0.5 * std::log(r));
            s.factor = co.phi_at(s.tau) / r;
            s.closed_form = sp.closed_form(r);
            s.error = std::fabs(s.factor - s.closed_form);
            row.max_error = std::max(row.max_error, s.error);
            row.samples.push_back(s);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string table2_csv(const std::vector<Table2Row>& rows) {
    std::ostringstream os;
    os << "row,name,I0,phi,r_range,distance_a,distance_b,area_a,area_b,sigma,factor,domain,max_factor_error\n";
    for (const auto& r : rows) {
        os << csv_field(r.label) << ',' << csv_field(r.name) << ',' << csv_field(r.interval.str()) << ','
           << csv_field(r.phi.str()) << ',' << csv_field(r.r_range) << ',' << r.distance_a << ',' << r.distance_b << ','
           << r.area_a << ',' << r.area_b << ',' << (r.sigma_constant ? r.sigma.str() : "non-constant") << ','
           << csv_field(r.factor_formula) << ',' << r.domain << ',' << g12(r.max_error) << '\n';
    }
    return os.str();
}

}  // namespace momentum
