#include "momentum/csc_solver.hpp"

#include "momentum/error.hpp"

#include <cmath>

namespace momentum {

namespace {

const Domain kHalfLine = Domain::positive_reals();

// Decides a == b for two real algebraic numbers.
bool same_algebraic(AlgebraicReal a, AlgebraicReal b) {
    if (a.is_rational() && b.is_rational()) return *a.exact() == *b.exact();
    if (a.is_rational()) std::swap(a, b);
    // a irrational from here on
    if (b.is_rational()) return a.sign_of(b.defining()) == 0;
    if (b.sign_of(a.defining()) != 0) return false;
    for (int it = 0; it < 400; ++it) {
        if (b.is_rational()) return false;
        if (a.lo() < b.lo() && b.hi() < a.hi()) return true;
        if (!(b.lo() < a.hi()) || !(a.lo() < b.hi())) return false;
        b.refine((b.hi() - b.lo()) / Scalar(2));
    }
    throw InvariantBreach("algebraic comparison did not converge");
}

// High-precision value of a rational function at an algebraic number.
double value_at(const RationalFn& f, AlgebraicReal a, mpq_class* exact_out = nullptr) {
    if (a.is_rational()) {
        Scalar v = f.eval(*a.exact());
        if (exact_out && v.is_exact()) *exact_out = v.exact();
        return v.to_double();
    }
    if (a.lo().is_exact()) {
        a.refine(Scalar(mpq_class("1/1000000000000000000000000000000")));
        mpq_class v = f.num().eval_exact(a.midpoint().exact()) / f.den().eval_exact(a.midpoint().exact());
        if (exact_out) *exact_out = v;
        return v.get_d();
    }
    return f.eval_double(a.approx());
}

bool algebraic_less(AlgebraicReal a, AlgebraicReal b) {
    for (int it = 0; it < 400; ++it) {
        if (a.hi() < b.lo() || (a.hi() == b.lo() && !(a.is_rational() && b.is_rational()))) return true;
        if (b.hi() < a.lo() || (b.hi() == a.lo() && !(a.is_rational() && b.is_rational()))) return false;
        if (a.is_rational() && b.is_rational()) return *a.exact() < *b.exact();
        if (!a.is_rational()) a.refine((a.hi() - a.lo()) / Scalar(2));
        if (!b.is_rational()) b.refine((b.hi() - b.lo()) / Scalar(2));
    }
    return false;
}

}  // namespace

Poly CscSystem::p1() const { return Poly::linear(Scalar(0), lin) + r0q.double_integral_from(Scalar(0)); }

Poly CscSystem::p2() const { return q.double_integral_from(Scalar(0)); }

RationalFn CscSystem::threshold_function() const { return RationalFn(r_inf) + RationalFn(p1(), p2()); }

Poly CscSystem::phi_q(const Scalar& c) const { return Scalar(2) * (p1() - (c - r_inf) * p2()); }

RationalFn CscSystem::phi(const Scalar& c) const { return RationalFn(phi_q(c), q); }

CscSystem csc_system(const HorizontalData& d, Variant v) {
    CscSystem s;
    s.q = d.q();
    s.r_inf = d.r_infinity();
    s.r0q = d.rq() - s.r_inf * s.q;
    s.lin = v == Variant::A ? Scalar(1) : Scalar(0);
    s.lower_bound = s.r_inf;
    Scalar r0(0);
    for (const auto& b : d.blocks()) {
        r0 += b.ricci_trace;
        if (!b.beta.is_zero()) s.lower_bound += min(Scalar(0), b.ricci_trace);
    }
    if (v == Variant::B) s.r_at_zero = r0;
    s.dimension = d.dimension();
    s.flat_product = d.dimension() > 0 && d.all_beta_zero();
    s.label = to_string(v);
    return s;
}

ThresholdAnalysis c_threshold(const CscSystem& s) {
    ThresholdAnalysis out;
    if (s.flat_product) out.flags.push_back("flat-bundle local product");
    if (s.p1().is_zero()) {
        out.c0 = s.r_inf;
        out.borderline_kind = "identically-zero";
        out.borderline_profile_zero = true;
        out.j_closed = false;
        out.infimum.value = s.r_inf;
        out.flags.push_back("borderline profile vanishes identically");
        return out;
    }
    RationalFn cfun = s.threshold_function();
    Infimum inf = infimum_on(cfun, kHalfLine);
    if (inf.minus_infinity) throw InvariantBreach("threshold function unbounded below");
    out.infimum = inf;
    out.c0 = inf.value;
    out.c0_exact = inf.exact;
    if (s.r_at_zero && *s.r_at_zero < out.c0) {
        out.c0 = *s.r_at_zero;
        out.c0_exact = true;
    }
    out.attained = inf.attained && inf.where == Infimum::Where::interior;
    out.borderline_kind = out.attained ? "first-zero" : "positive-on-(0,inf)";
    out.j_closed = !out.attained;
    if (out.attained) out.borderline_zero = inf.location;
    if (s.lin.sign() > 0 && !out.attained && !(out.c0 == s.r_inf))
        throw InvariantBreach("unattained threshold differs from R(inf)");
    return out;
}

ThresholdAnalysis c_threshold(const HorizontalData& d, Variant v) { return c_threshold(csc_system(d, v)); }

std::pair<Scalar, Scalar> c0_bounds(const CscSystem& s) {
    Scalar upper = s.r_inf;
    if (s.r_at_zero) upper = min(upper, *s.r_at_zero);
    return {s.lower_bound, upper};
}

std::pair<Scalar, Scalar> c0_bounds(const HorizontalData& d) { return c0_bounds(csc_system(d, Variant::A)); }

bool verify_exceptional_substitution(const CscSystem& s, const Poly& g, int e) {
    Poly p1 = s.p1(), p2 = s.p2();
    auto [gg, inv] = ext_gcd_inverse(p2, g);
    if (gg.degree() != 0) return false;
    auto red = [&](const Poly& p) { return divmod(p, g).second; };
    Poly ct = red(p1 * inv);  // c - R_inf as an element of Q[x]/(g)
    Poly phi_q_at_b = red(p1 - ct * p2);
    Poly dphi_q_at_b = red(p1.derivative() - ct * p2.derivative());
    // phi_c(b) = 0 and phi_c'(b) Q(b) = (phi_c Q)'(b) = 2 (P1' - c~ P2')(b)
    Poly slope = red(Scalar(2) * dphi_q_at_b - Scalar(e) * s.q);
    return phi_q_at_b.is_zero() && slope.is_zero();
}

ExceptionalSet exceptional_curvatures(const CscSystem& s) {
    ExceptionalSet out;
    Poly p1 = s.p1(), p2 = s.p2();
    if (p1.is_zero()) return out;
    Poly dd = p1.derivative() * p2 - p1 * p2.derivative();
    ThresholdAnalysis th = c_threshold(s);
    bool exact = p1.is_exact() && p2.is_exact() && s.q.is_exact();
    RationalFn ct(p1, p2);  // C - R_inf
    auto droots = isolate_real_roots(dd.is_zero() ? Poly(1) : dd, kHalfLine);

    // limit of C - R_inf at 0+
    int sign_at_zero = 1;
    std::optional<double> limit_at_zero;
    if (!p2.is_zero() && ct.den().eval(Scalar(0)).is_zero()) sign_at_zero = side_sign(ct, Scalar(0), +1);
    else limit_at_zero = ct.eval(Scalar(0)).to_double();

    for (int e : {0, -2}) {
        Poly f = Scalar(2) * dd - Scalar(e) * s.q * p2;
        if (f.is_zero()) {
            out.identically_satisfied.push_back(e);
            continue;
        }
        Poly g = square_free_part(f);
        Poly common = gcd(g, p2 * s.q);
        if (common.degree() >= 1) g = g.divide_exact(common);
        if (g.degree() < 1) continue;
        for (auto& r : isolate_real_roots(g, kHalfLine)) {
            ExceptionalEntry en{e, r.value, g, std::nullopt, 0, false};
            mpq_class cv;
            double ctb = value_at(ct, r.value, &cv);
            en.c_approx = (s.r_inf.to_double() + ctb);
            if (r.value.is_rational() && exact) en.c = s.r_inf + Scalar(cv);
            // strictly above the threshold
            if (th.attained && th.borderline_zero && same_algebraic(*th.borderline_zero, r.value)) continue;
            if (en.c && th.c0_exact) {
                if (!(th.c0 < *en.c)) continue;
            } else if (en.c_approx <= th.c0.to_double() + 1e-12 * std::max(1.0, std::fabs(th.c0.to_double()))) {
                continue;
            }
            // b is the first zero of phi_c: C - R_inf stays above its value at b on (0, b)
            if (sign_at_zero < 0) continue;
            if (limit_at_zero && *limit_at_zero <= ctb + 1e-25 * std::max(1.0, std::fabs(ctb))) continue;
            bool first = true;
            for (const auto& dr : droots) {
                if (!algebraic_less(dr.value, r.value)) continue;
                if (same_algebraic(dr.value, r.value)) continue;
                double v = value_at(ct, dr.value);
                if (v <= ctb + 1e-25 * std::max(1.0, std::fabs(ctb))) {
                    first = false;
                    break;
                }
            }
            if (!first) continue;
            if (exact) {
                Poly gb = g;
                en.verified = verify_exceptional_substitution(s, gb, e);
                if (!en.verified) throw InvariantBreach("exceptional curvature failed exact substitution");
            }
            out.entries.push_back(en);
        }
    }
    return out;
}

ExceptionalSet exceptional_curvatures(const HorizontalData& d, Variant v) {
    return exceptional_curvatures(csc_system(d, v));
}

CscClassification classify_csc(const CscSystem& s, const Scalar& c) {
    CscClassification out;
    out.c = c;
    out.phi = s.phi(c);
    out.domain = kHalfLine;
    if (out.phi.is_zero()) {
        out.valid = false;
        out.note = "profile vanishes identically";
        return out;
    }
    if (side_sign(out.phi, Scalar(0), +1) <= 0) {
        out.valid = false;
        out.note = "profile is negative just above 0";
        return out;
    }
    Poly pq = s.phi_q(c);
    auto roots = isolate_real_roots(pq, kHalfLine);
    out.lower = classify_endpoint(out.phi, EndpointSpec::lower(Bound::at(Scalar(0))));
    if (roots.empty()) {
        out.positive_on_half_line = true;
        out.upper = classify_endpoint(out.phi, EndpointSpec::upper(Bound::pos_inf()));
    } else {
        out.first_zero = FirstZero{roots.front().value, roots.front().multiplicity};
        const AlgebraicReal& b = roots.front().value;
        out.domain.upper = b.is_rational() ? Bound::at(*b.exact()) : Bound::at(b.midpoint());
        out.upper = classify_endpoint(out.phi, EndpointSpec::finite(+1, b));
    }
    out.habitat = habitat_of(out.lower, out.upper);
    out.fibre_area_finite = !out.positive_on_half_line;
    return out;
}

CscClassification classify_csc(const HorizontalData& d, const Scalar& c, Variant v) {
    CscClassification out = classify_csc(csc_system(d, v), c);
    if (!out.phi.is_zero()) out.einstein = is_einstein(d, out.phi);
    return out;
}

}  // namespace momentum
