#include "momentum/geometry.hpp"

#include "momentum/error.hpp"

#include <cmath>

namespace momentum {

std::string to_string(EndpointKind k) {
    switch (k) {
        case EndpointKind::incomplete: return "incomplete";
        case EndpointKind::smooth_extension: return "smooth-extension";
        case EndpointKind::cone: return "cone";
        case EndpointKind::finite_area_cusp: return "finite-area-cusp";
        case EndpointKind::infinite_area_cusp: return "infinite-area-cusp";
        case EndpointKind::cylindrical: return "cylindrical";
        case EndpointKind::planar_conical: return "planar-conical";
        case EndpointKind::hyperbolic: return "hyperbolic";
        case EndpointKind::incomplete_growth: return "incomplete-growth";
    }
    return "?";
}

EndpointSpec EndpointSpec::lower(const Bound& b) {
    if (b.is_finite()) return {-1, AlgebraicReal::rational(b.value)};
    return {-1, std::nullopt};
}

EndpointSpec EndpointSpec::upper(const Bound& b) {
    if (b.is_finite()) return {+1, AlgebraicReal::rational(b.value)};
    return {+1, std::nullopt};
}

namespace {

int vanishing_order(const Poly& num, AlgebraicReal& a) {
    if (a.is_rational()) return RationalFn(num).order_at(*a.exact());
    for (const auto& [f, m] : square_free_decomposition(num))
        if (a.sign_of(f) == 0) return m;
    return 0;
}

}  // namespace

EndpointClass classify_endpoint(const RationalFn& phi, EndpointSpec end) {
    if (phi.is_zero()) throw InvalidInput("cannot classify the zero profile");
    EndpointClass c;
    if (!end.is_finite()) {
        c.finite_end = false;
        int d = phi.growth_degree();
        c.order = d;
        c.area_finite = false;
        c.t_divergent = d <= 1;
        c.distance_finite = d >= 3;
        c.complete = d <= 2;
        if (d < 0) c.kind = EndpointKind::infinite_area_cusp;
        else if (d == 0) c.kind = EndpointKind::cylindrical;
        else if (d == 1) c.kind = EndpointKind::planar_conical;
        else if (d == 2) c.kind = EndpointKind::hyperbolic;
        else c.kind = EndpointKind::incomplete_growth;
        return c;
    }
    AlgebraicReal a = *end.at;
    if (a.sign_of(phi.den()) == 0) throw InvalidInput("profile has a pole at the endpoint");
    int l = vanishing_order(phi.num(), a);
    c.order = l;
    c.area_finite = true;
    c.t_divergent = l >= 1;
    c.distance_finite = l <= 1;
    if (l == 0) {
        c.kind = EndpointKind::incomplete;
        c.complete = false;
        return c;
    }
    if (l >= 2) {
        c.kind = EndpointKind::finite_area_cusp;
        c.complete = true;
        return c;
    }
    // simple zero: phi'(a) = N'(a) / D(a)
    const Poly& n = phi.num();
    const Poly& d = phi.den();
    Poly dn = n.derivative();
    bool is_plus2 = a.sign_of(dn - Scalar(2) * d) == 0;
    bool is_minus2 = a.sign_of(dn + Scalar(2) * d) == 0;
    if (a.is_rational()) {
        c.derivative = phi.derivative().eval(*a.exact());
        c.derivative_exact = c.derivative->is_exact();
    } else {
        a.refine(isolation_width() / Scalar(1000000));
        c.derivative = Scalar::from_double(dn.eval_double(a.approx()) / d.eval_double(a.approx()));
    }
    c.cone_angle_over_pi = std::fabs(c.derivative->to_double());
    if (is_plus2 || is_minus2) {
        c.cone_angle_over_pi = 2;
        c.kind = EndpointKind::smooth_extension;
        c.complete = true;
        c.adds_point = true;
    } else {
        c.kind = EndpointKind::cone;
        c.complete = false;
        c.adds_point = true;
    }
    return c;
}

namespace {

enum class EndShape { attached, punctured, bounded, slab };

EndShape shape(const EndpointClass& e) {
    if (e.finite_end) {
        if (e.order == 0) return EndShape::slab;
        if (e.order == 1) return EndShape::attached;
        return EndShape::punctured;
    }
    return e.t_divergent ? EndShape::punctured : EndShape::bounded;
}

}  // namespace

Habitat habitat_of(const EndpointClass& lower, const EndpointClass& upper) {
    EndShape lo = shape(lower), hi = shape(upper);
    if (lo == EndShape::slab || hi == EndShape::slab) return {"incomplete-slab", "slab", "bounded", false};
    bool dual = false;
    // the end reaching r = 0 is normalized to the lower one
    if ((lo == EndShape::bounded && hi != EndShape::bounded) ||
        (lo == EndShape::punctured && hi == EndShape::attached)) {
        std::swap(lo, hi);
        dual = true;
    }
    Habitat h;
    h.dual = dual;
    if (lo == EndShape::attached && hi == EndShape::attached) h = {"Lhat", "P1", "[0,inf]", dual};
    else if (lo == EndShape::attached && hi == EndShape::punctured) h = {"L", "C", "[0,inf)", dual};
    else if (lo == EndShape::punctured && hi == EndShape::punctured) h = {"Lx", "C^x", "(0,inf)", dual};
    else if (lo == EndShape::attached && hi == EndShape::bounded) h = {"Delta(L)", "disc", "[0,1)", dual};
    else if (lo == EndShape::punctured && hi == EndShape::bounded) h = {"Delta^x(L)", "punctured-disc", "(0,1)", dual};
    else h = {"annulus", "annulus", "(exp(-l),exp(l))", dual};
    return h;
}

bool is_nonnegative_on(const Poly& p, const Domain& dom) {
    if (p.is_zero()) return true;
    auto roots = isolate_real_roots(p, dom.interior());
    for (const auto& r : roots)
        if (r.multiplicity % 2 == 1) return false;
    // away from even roots the sign is constant; sample beside the first root or at the default point
    Scalar s = dom.sample();
    if (!roots.empty()) {
        AlgebraicReal a = roots.front().value;
        s = a.is_rational() ? *a.exact() : a.lo();
        if (dom.lower.is_finite()) s = (s + dom.lower.value) / Scalar(2);
        else s = s - Scalar(1);
    }
    return p.eval(s).sign() >= 0;
}

bool embeds_as_revolution(const RationalFn& phi, const Domain& dom) {
    RationalFn g = phi.derivative();
    // 4 den^2 - num^2 >= 0
    Poly h = Scalar(4) * g.den() * g.den() - g.num() * g.num();
    return is_nonnegative_on(h, dom);
}

}  // namespace momentum
