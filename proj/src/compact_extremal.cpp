#include "momentum/compact_extremal.hpp"

#include "momentum/error.hpp"
#include "momentum/profile.hpp"

#include <cmath>

namespace momentum {

namespace {

Scalar boundary_weight(MomentConvention conv) { return conv == MomentConvention::derived ? Scalar(mpq_class(1, 2)) : Scalar(1); }

void require_compatible(const HorizontalData& d, const Scalar& b) {
    if (b.sign() <= 0) throw InvalidInput("half-width b must be positive");
    std::string why = compatibility_failure(d.blocks(), Domain::closed(-b, b));
    if (!why.empty()) throw InvalidInput("data not compatible on [-b, b]: " + why);
}

Scalar ipow(const Scalar& x, int n) {
    Scalar r(1);
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
}

}  // namespace

std::string to_string(MomentConvention c) { return c == MomentConvention::derived ? "derived" : "literal"; }

Moments moments(const HorizontalData& d, const Scalar& b, const Scalar& dphi_minus, const Scalar& dphi_plus, int max_n,
                MomentConvention conv) {
    require_compatible(d, b);
    if (max_n < 2) max_n = 2;
    Poly q = d.q(), rq = d.rq();
    Scalar k = boundary_weight(conv);
    Moments m;
    m.b = b;
    for (int n = 0; n <= max_n; ++n) {
        Poly xn = Poly::monomial(Scalar(1), n);
        m.a.push_back((xn * q).antiderivative_from(-b).eval(b));
        // (phi Q)' = phi' Q at the ends since phi vanishes there
        Scalar edge = ipow(b, n) * dphi_plus * q.eval(b) - ipow(-b, n) * dphi_minus * q.eval(-b);
        m.ahat.push_back((xn * rq).antiderivative_from(-b).eval(b) - k * edge);
    }
    if (!(m.a[0].sign() > 0)) throw InvariantBreach("a0 is not positive");
    if (!(m.determinant().sign() > 0)) throw InvariantBreach("moment matrix is singular");
    return m;
}

ExtremalSolution extremal_profile(const HorizontalData& d, const Scalar& b, const Scalar& dphi_minus,
                                  const Scalar& dphi_plus, MomentConvention conv) {
    ExtremalSolution s;
    s.m = moments(d, b, dphi_minus, dphi_plus, 2, conv);
    const auto& a = s.m.a;
    const auto& h = s.m.ahat;
    Scalar det = s.m.determinant();
    s.b = b;
    s.dphi_minus = dphi_minus;
    s.dphi_plus = dphi_plus;
    s.sigma0 = (a[2] * h[0] - a[1] * h[1]) / det;
    s.sigma1 = (a[0] * h[1] - a[1] * h[0]) / det;

    Poly q = d.q();
    Poly sigma = Poly::linear(s.sigma0, s.sigma1);
    Poly phi_q = dphi_minus * q.eval(-b) * Poly::linear(b, Scalar(1)) +
                 Scalar(2) * (d.rq() - sigma * q).double_integral_from(-b);
    s.phi = RationalFn(phi_q, q);

    Poly dphi_q = phi_q.derivative();
    Scalar qb = q.eval(b);
    s.residual_value = phi_q.eval(b) / qb;
    s.residual_slope = dphi_q.eval(b) / qb - dphi_plus;
    bool left_ok = phi_q.eval(-b).is_zero() && (dphi_q.eval(-b) / q.eval(-b) - dphi_minus).is_zero();
    s.boundary_exact = left_ok && s.residual_value.is_zero() && s.residual_slope.is_zero();

    if (conv == MomentConvention::derived && d.is_exact() && b.is_exact()) {
        if (!s.boundary_exact) throw InvariantBreach("extremal profile misses a boundary condition");
        RationalFn check = scalar_curvature(d.with_interval(Domain::closed(-b, b)), s.phi) - RationalFn(sigma);
        if (!check.is_zero()) throw InvariantBreach("extremal profile has non-affine scalar curvature");
    }
    s.positive = !s.phi.is_zero() && is_positive_on(s.phi, Domain::open(Bound::at(-b), Bound::at(b)));
    return s;
}

Scalar futaki_like(const HorizontalData& d, const Scalar& b, const Scalar& dphi_minus, const Scalar& dphi_plus,
                   MomentConvention conv) {
    Moments m = moments(d, b, dphi_minus, dphi_plus, 1, conv);
    return m.a[0] * m.ahat[1] - m.a[1] * m.ahat[0];
}

Poly futaki_polynomial(const HorizontalData& d, const Scalar& dphi_minus, const Scalar& dphi_plus,
                       MomentConvention conv) {
    Poly q = d.q(), rq = d.rq();
    Scalar k = boundary_weight(conv);
    // G(B) - G(-B) for G an antiderivative
    auto sym = [](const Poly& p) {
        Poly g = p.antiderivative_from(Scalar(0));
        return g - g.compose_affine(Scalar(0), Scalar(-1));
    };
    Poly a[2], ah[2];
    for (int n = 0; n < 2; ++n) {
        Poly pn = Poly::monomial(Scalar(1), n) * q;
        a[n] = sym(pn);
        Poly edge = dphi_plus * pn - dphi_minus * pn.compose_affine(Scalar(0), Scalar(-1));
        ah[n] = sym(Poly::monomial(Scalar(1), n) * rq) - k * edge;
    }
    return a[0] * ah[1] - a[1] * ah[0];
}

CscScan find_csc_classes(const HorizontalData& d, const Scalar& b_min, const Scalar& b_max, const Scalar& dphi_minus,
                         const Scalar& dphi_plus, int grid) {
    if (!(b_min.sign() > 0) || !(b_min < b_max)) throw InvalidInput("b range must satisfy 0 < b_min < b_max");
    if (grid < 2) throw InvalidInput("grid needs at least two points");
    require_compatible(d, b_max);
    CscScan out;
    Poly fp = futaki_polynomial(d, dphi_minus, dphi_plus);
    out.identically_zero = fp.is_zero();

    double lo = b_min.to_double(), hi = b_max.to_double();
    for (int i = 0; i < grid; ++i) {
        double b = i == grid - 1 ? hi : lo * std::pow(hi / lo, double(i) / (grid - 1));
        out.grid.push_back(b);
        out.futaki.push_back(fp.eval_double(b));
    }
    auto exact = [](double x) { return Scalar(mpq_class(x)); };

    if (out.identically_zero) {
        out.family_positive = true;
        for (double b : out.grid)
            if (!extremal_profile(d, exact(b), dphi_minus, dphi_plus).positive) out.family_positive = false;
        return out;
    }
    if (fp.degree() > 0)
        out.sturm_root_count = static_cast<int>(
            isolate_real_roots(fp, Domain::open(Bound::at(exact(lo)), Bound::at(exact(hi)))).size());

    auto record = [&](double b) {
        CscClass c;
        c.b = b;
        c.futaki_at_b = fp.eval_double(b);
        ExtremalSolution s = extremal_profile(d, exact(b), dphi_minus, dphi_plus);
        c.sigma0 = s.sigma0;
        c.sigma1 = s.sigma1.to_double();
        c.positive = s.positive;
        if (s.positive) {
            Domain dom = Domain::open(Bound::at(exact(-b)), Bound::at(exact(b)));
            c.habitat = habitat_of(classify_endpoint(s.phi, EndpointSpec::lower(dom.lower)),
                                   classify_endpoint(s.phi, EndpointSpec::upper(dom.upper)))
                            .kind;
        } else {
            c.habitat = "not-positive";
        }
        out.classes.push_back(c);
    };
    for (int i = 0; i < grid; ++i) {
        double f = out.futaki[i];
        if (f == 0) {
            record(out.grid[i]);
            continue;
        }
        if (i + 1 < grid && out.futaki[i + 1] != 0 && (f < 0) != (out.futaki[i + 1] < 0)) {
            double a = out.grid[i], b = out.grid[i + 1], fa = f;
            while (b - a > 1e-10) {
                double m = 0.5 * (a + b), fm = fp.eval_double(m);
                if (fm == 0) a = b = m;
                else if ((fm < 0) == (fa < 0)) a = m, fa = fm;
                else b = m;
            }
            record(0.5 * (a + b));
        }
    }
    return out;
}

}  // namespace momentum
