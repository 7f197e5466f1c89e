#include "momentum/coords.hpp"

#include "momentum/error.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace momentum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTol = 1e-13;

double bound_value(const Bound& b, double inf_value) { return b.is_finite() ? b.value.to_double() : inf_value; }

// phi(a + dir u) as a rational function of u, with a taken exactly.
RationalFn shifted(const RationalFn& phi, double a, int dir) {
    Scalar ax{mpq_class(a)};
    Scalar d(dir);
    return RationalFn(phi.num().compose_affine(ax, d), phi.den().compose_affine(ax, d));
}

double weight(int kind, double x, double p) {
    if (kind == 0) return 1.0 / p;
    if (kind == 1) return 1.0 / std::sqrt(p);
    return x / p;
}

// int_a^b w(x, phi(x)) dx for a < b; either end may be infinite.
double quad(const RationalFn& phi, int kind, double a, double b) {
    if (!(a < b)) return 0;
    if (std::isinf(b) && std::isinf(a)) return quad(phi, kind, a, 0) + quad(phi, kind, 0, b);
    if (std::isinf(b)) {
        double m = a + std::max(1.0, std::fabs(a));
        boost::math::quadrature::exp_sinh<double> es;
        auto f = [&](double x) { return weight(kind, x, phi.eval_double(x)); };
        return quad(phi, kind, a, m) + es.integrate(f, m, kInf, kTol);
    }
    if (std::isinf(a)) {
        double m = b - std::max(1.0, std::fabs(b));
        boost::math::quadrature::exp_sinh<double> es;
        auto f = [&](double x) { return weight(kind, x, phi.eval_double(x)); };
        return es.integrate(f, -kInf, m, kTol) + quad(phi, kind, m, b);
    }
    RationalFn pa = shifted(phi, a, +1), pb = shifted(phi, b, -1);
    boost::math::quadrature::tanh_sinh<double> ts;
    // xc is a - x near a and b - x near b
    auto f = [&](double x, double xc) {
        double p, xx;
        if (xc <= 0) {
            p = pa.eval_double(-xc);
            xx = a - xc;
        } else {
            p = pb.eval_double(xc);
            xx = b - xc;
        }
        if (!(p > 0)) return 0.0;
        (void)x;
        return weight(kind, xx, p);
    };
    return ts.integrate(f, a, b, kTol);
}

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

std::string CoordTable::csv() const {
    std::ostringstream os;
    os << "tau,t,s,r,phi,phi_over_r\n";
    for (const auto& r : rows)
        os << fmt12(r.tau) << ',' << fmt12(r.t) << ',' << fmt12(r.s) << ',' << fmt12(r.r) << ',' << fmt12(r.phi) << ','
           << fmt12(r.phi_over_r) << '\n';
    return os.str();
}

Coordinates::Coordinates(RationalFn phi, Domain dom, double tau0, double t0)
    : phi_(std::move(phi)), dom_(std::move(dom)), tau0_(tau0), t0_(t0) {
    lo_ = bound_value(dom_.lower, -kInf);
    hi_ = bound_value(dom_.upper, kInf);
    if (phi_.is_zero()) throw InvalidInput("profile vanishes identically");
    if (!inside(tau0_)) throw InvalidInput("basepoint tau0 is not inside the domain");
    if (!is_positive_on(phi_, dom_.interior())) throw InvalidInput("profile is not positive on the open domain");
}

double Coordinates::default_tau0(const RationalFn& phi, const Domain& dom) {
    if (dom.lower.is_finite() && dom.upper.is_finite()) {
        Infimum m = infimum_on(-phi, dom.interior());
        if (m.attained && m.location) return m.location->approx();
        return dom.sample().to_double();
    }
    if (dom.interior().contains(Scalar(1))) return 1.0;
    return dom.sample().to_double();
}

bool Coordinates::inside(double tau) const { return lo_ < tau && tau < hi_; }

EndValue Coordinates::end_value(int side, bool distance) const {
    const Bound& b = side < 0 ? dom_.lower : dom_.upper;
    EndpointClass e = classify_endpoint(phi_, side < 0 ? EndpointSpec::lower(b) : EndpointSpec::upper(b));
    EndValue out;
    bool div = distance ? !e.distance_finite : e.t_divergent;
    const char* what = distance ? "s" : "t";
    if (div) {
        out.divergent = true;
        out.value = side < 0 ? -kInf : kInf;
        out.certificate = std::string(what) + " diverges: " + to_string(e.kind) +
                          (e.finite_end ? " end, vanishing order " : " end, growth degree ") + std::to_string(e.order);
        return out;
    }
    double end = side < 0 ? lo_ : hi_;
    int kind = distance ? 1 : 0;
    double v = side < 0 ? -quad(phi_, kind, end, tau0_) : quad(phi_, kind, tau0_, end);
    out.value = (distance ? 0 : t0_) + v;
    out.certificate = std::string(what) + " converges: " + to_string(e.kind) + " end";
    return out;
}

EndValue Coordinates::t_end(int side) const { return end_value(side, false); }
EndValue Coordinates::s_end(int side) const { return end_value(side, true); }

double Coordinates::r_min() const { return std::exp(2 * t_end(-1).value); }
double Coordinates::r_max() const { return std::exp(2 * t_end(+1).value); }

double Coordinates::t_of_tau(double tau) const {
    if (tau == lo_) return t_end(-1).value;
    if (tau == hi_) return t_end(+1).value;
    if (!inside(tau)) throw InvalidInput("tau = " + fmt12(tau) + " is outside the domain");
    return t0_ + (tau >= tau0_ ? quad(phi_, 0, tau0_, tau) : -quad(phi_, 0, tau, tau0_));
}

double Coordinates::s_of_tau(double tau) const {
    if (tau == lo_) return s_end(-1).value;
    if (tau == hi_) return s_end(+1).value;
    if (!inside(tau)) throw InvalidInput("tau = " + fmt12(tau) + " is outside the domain");
    return tau >= tau0_ ? quad(phi_, 1, tau0_, tau) : -quad(phi_, 1, tau, tau0_);
}

double Coordinates::f_of_tau(double tau) const {
    if (!inside(tau)) throw InvalidInput("tau = " + fmt12(tau) + " is outside the domain");
    return tau >= tau0_ ? quad(phi_, 2, tau0_, tau) : -quad(phi_, 2, tau, tau0_);
}

double Coordinates::tau_of_t(double t) const {
    if (t == t0_) return tau0_;
    int dir = t > t0_ ? 1 : -1;
    EndValue lim = t_end(dir);
    if ((dir > 0 && !(t < lim.value)) || (dir < 0 && !(t > lim.value)))
        throw InvalidInput("t = " + fmt12(t) + " is outside the t-range");
    double end = dir > 0 ? hi_ : lo_;
    // bracket [a, b] in tau with t(a) on the near side of t
    double a = tau0_, b = tau0_;
    double scale = std::max(1.0, std::fabs(tau0_));
    for (int k = 0;; ++k) {
        double cand = std::isinf(end) ? tau0_ + dir * scale * std::ldexp(1.0, k - 3) : tau0_ + (end - tau0_) * (1 - std::ldexp(1.0, -k - 1));
        if ((k > 0 && cand == a) || k > 1100) throw InvariantBreach("could not bracket t = " + fmt12(t));
        double tc = t_of_tau(cand);
        if ((tc - t) * dir >= 0) {
            b = cand;
            break;
        }
        a = cand;
    }
    double lo = std::min(a, b), hi = std::max(a, b);
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double tx = t_of_tau(x);
        double err = tx - t;
        if (std::fabs(err) < 1e-14 * std::max(1.0, std::fabs(t))) return x;
        if (err < 0) lo = x;
        else hi = x;
        if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(x))) return x;
        double nx = x - err * phi_at(x);  // dt/dtau = 1/phi
        x = (nx > lo && nx < hi) ? nx : 0.5 * (lo + hi);
    }
    return x;
}

double Coordinates::legendre_dual(double tau) const {
    if (!inside(tau)) throw InvalidInput("tau = " + fmt12(tau) + " is outside the domain");
    auto f = [&](double x) { return t_of_tau(x); };
    double a = std::min(tau0_, tau), b = std::max(tau0_, tau);
    double v = a == b ? 0 : boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 8, 1e-12);
    return t0_ * tau0_ + (tau >= tau0_ ? v : -v);
}

CoordRow Coordinates::row_at_tau(double tau) const {
    CoordRow r;
    r.tau = tau;
    r.t = t_of_tau(tau);
    r.s = s_of_tau(tau);
    r.r = std::exp(2 * r.t);
    r.phi = phi_at(tau);
    r.phi_over_r = r.phi / r.r;
    return r;
}

CoordTable Coordinates::table_at_r(const std::vector<double>& r_values) const {
    CoordTable out;
    out.tau0 = tau0_;
    out.t0 = t0_;
    for (double r : r_values) {
        if (!(r > 0)) throw InvalidInput("r must be positive");
        out.rows.push_back(row_at_tau(tau_of_t(0.5 * std::log(r))));
    }
    return out;
}

CoordTable Coordinates::table_at_tau(const std::vector<double>& taus) const {
    CoordTable out;
    out.tau0 = tau0_;
    out.t0 = t0_;
    for (double tau : taus) out.rows.push_back(row_at_tau(tau));
    return out;
}

double Coordinates::fibre_area(double tau1, double tau2) const {
    double t1 = t_of_tau(tau1), t2 = t_of_tau(tau2);
    auto f = [&](double t) { return phi_at(tau_of_t(t)); };
    return 2 * M_PI * boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, t1, t2, 10, 1e-13);
}

bool numeric_divergence(const RationalFn& phi, const Domain& dom, int side, bool distance) {
    const Bound& b = side < 0 ? dom.lower : dom.upper;
    int kind = distance ? 1 : 0;
    auto shell = [&](int k) {
        if (b.is_finite()) {
            // u = distance from the end, shells [10^-(k+1), 10^-k]
            RationalFn ph = shifted(phi, b.value.to_double(), side < 0 ? +1 : -1);
            return quad(ph, kind, std::pow(10.0, -(k + 1)), std::pow(10.0, -k));
        }
        double other = side < 0 ? bound_value(dom.upper, 0) : bound_value(dom.lower, 0);
        double base = std::max(1.0, std::fabs(other) + 1);
        double r0 = base * std::pow(10.0, k), r1 = base * std::pow(10.0, k + 1);
        if (side < 0) {
            RationalFn ph = shifted(phi, 0.0, -1);
            return quad(ph, kind, r0, r1);
        }
        return quad(phi, kind, r0, r1);
    };
    double d7 = shell(7), d8 = shell(8);
    return d8 >= 0.6 * d7;
}

}  // namespace momentum
