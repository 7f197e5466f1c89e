#include "generators.hpp"
#include "momentum/error.hpp"
#include "momentum/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>

using namespace momentum;

namespace {
Poly X() { return Poly::x(); }
RationalFn rf(const Poly& p) { return RationalFn(p); }

EndpointClass at_zero_from_right(const RationalFn& phi) { return classify_endpoint(phi, EndpointSpec::lower(Bound::at(Scalar(0)))); }
EndpointClass at_infinity(const RationalFn& phi) { return classify_endpoint(phi, EndpointSpec::upper(Bound::pos_inf())); }

// Composite Simpson in u = log(x - a), independent of the classifier.
double integral_near(const std::function<double(double)>& f, double a, double eps, double delta) {
    int n = 4000;
    double u0 = std::log(eps), u1 = std::log(delta), h = (u1 - u0) / n, s = 0;
    for (int i = 0; i <= n; ++i) {
        double u = u0 + i * h, x = a + std::exp(u);
        double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
        s += w * f(x) * std::exp(u);
    }
    return s * h / 3;
}
}  // namespace

TEST_CASE("round sphere profile") {
    RationalFn phi = rf(Scalar(2) * X() - X() * X());
    EndpointClass lo = at_zero_from_right(phi);
    EndpointClass hi = classify_endpoint(phi, EndpointSpec::upper(Bound::at(Scalar(2))));
    CHECK(lo.kind == EndpointKind::smooth_extension);
    CHECK(hi.kind == EndpointKind::smooth_extension);
    CHECK(*lo.derivative == Scalar(2));
    CHECK(*hi.derivative == Scalar(-2));
    Habitat h = habitat_of(lo, hi);
    CHECK(h.kind == "Lhat");
    CHECK(h.fibre == "P1");
    CHECK(embeds_as_revolution(phi, Domain::closed(Scalar(0), Scalar(2))));
}

TEST_CASE("flat plane, disc and punctured models") {
    RationalFn plane = rf(Scalar(2) * X());
    CHECK(at_infinity(plane).kind == EndpointKind::planar_conical);
    CHECK(habitat_of(at_zero_from_right(plane), at_infinity(plane)).kind == "L");
    CHECK(embeds_as_revolution(plane, Domain::positive_reals()));

    RationalFn disc = rf(Scalar(2) * X() + X() * X());
    EndpointClass inf = at_infinity(disc);
    CHECK(inf.kind == EndpointKind::hyperbolic);
    CHECK_FALSE(inf.t_divergent);
    CHECK_FALSE(inf.distance_finite);
    Habitat h = habitat_of(at_zero_from_right(disc), inf);
    CHECK(h.kind == "Delta(L)");
    CHECK(h.r_range == "[0,1)");
    CHECK_FALSE(embeds_as_revolution(disc, Domain::positive_reals()));

    RationalFn cusp = rf(X() * X());
    EndpointClass z = at_zero_from_right(cusp);
    CHECK(z.kind == EndpointKind::finite_area_cusp);
    CHECK(z.t_divergent);
    CHECK_FALSE(z.distance_finite);
    CHECK(habitat_of(z, at_infinity(cusp)).kind == "Delta^x(L)");

    RationalFn cyl = rf(Poly(Scalar(3)));
    EndpointClass a = classify_endpoint(cyl, EndpointSpec::lower(Bound::neg_inf()));
    EndpointClass b = at_infinity(cyl);
    CHECK(a.kind == EndpointKind::cylindrical);
    CHECK(habitat_of(a, b).kind == "Lx");

    RationalFn ann = rf(Poly(Scalar(1)) + X() * X());
    CHECK(habitat_of(classify_endpoint(ann, EndpointSpec::lower(Bound::neg_inf())), at_infinity(ann)).kind == "annulus");
}

TEST_CASE("dual habitat puts the attached end first") {
    // phi = 2(1 - t) near t = 1 from below, hyperbolic as t -> -inf
    RationalFn phi = rf(Scalar(2) * (Poly(Scalar(1)) - X()) + (Poly(Scalar(1)) - X()) * (Poly(Scalar(1)) - X()));
    EndpointClass lo = classify_endpoint(phi, EndpointSpec::lower(Bound::neg_inf()));
    EndpointClass hi = classify_endpoint(phi, EndpointSpec::upper(Bound::at(Scalar(1))));
    CHECK(hi.kind == EndpointKind::smooth_extension);
    Habitat h = habitat_of(lo, hi);
    CHECK(h.kind == "Delta(L)");
    CHECK(h.dual);
}

TEST_CASE("cones, incomplete ends and growth") {
    RationalFn cone = rf(Scalar(3) * X() - X() * X());
    EndpointClass c = at_zero_from_right(cone);
    CHECK(c.kind == EndpointKind::cone);
    CHECK(c.cone_angle_over_pi == doctest::Approx(3));
    CHECK_FALSE(embeds_as_revolution(cone, Domain::closed(Scalar(0), Scalar(3))));

    CHECK(at_zero_from_right(rf(Poly(Scalar(1)) + X())).kind == EndpointKind::incomplete);
    CHECK(habitat_of(at_zero_from_right(rf(Poly(Scalar(1)) + X())), at_infinity(rf(Poly(Scalar(1)) + X()))).kind ==
          "incomplete-slab");
    CHECK(at_infinity(rf(X().pow(3))).kind == EndpointKind::incomplete_growth);
    CHECK_FALSE(at_infinity(rf(X().pow(3))).complete);
    CHECK(at_infinity(RationalFn(Poly(Scalar(1)), X())).kind == EndpointKind::infinite_area_cusp);
    CHECK_THROWS_AS(classify_endpoint(RationalFn(), EndpointSpec::lower(Bound::at(Scalar(0)))), InvalidInput);
}

TEST_CASE("smooth extension at an irrational zero") {
    // (2 - t^2)/t has slope exactly -2 at sqrt 2
    RationalFn phi(Poly(Scalar(2)) - X() * X(), X());
    auto roots = isolate_real_roots(phi.num(), Domain::positive_reals());
    REQUIRE(roots.size() == 1);
    EndpointClass e = classify_endpoint(phi, EndpointSpec::finite(+1, roots[0].value));
    CHECK(e.kind == EndpointKind::smooth_extension);
    CHECK(e.derivative->to_double() == doctest::Approx(-2));

    RationalFn psi = rf(Poly(Scalar(2)) - X() * X());
    EndpointClass f = classify_endpoint(psi, EndpointSpec::finite(+1, roots[0].value));
    CHECK(f.kind == EndpointKind::cone);
    CHECK(f.cone_angle_over_pi == doctest::Approx(2 * std::sqrt(2.0)));
}

TEST_CASE("vanishing order against numerical divergence of dt") {
    gen::Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        int l = static_cast<int>(rng.integer(0, 3));
        Scalar a = rng.rational(4, 3);
        Scalar shift = rng.positive_rational(3, 2);
        // (x - a)^l (shift + (x - a)^2) is positive on (a, inf) away from a
        Poly xa = X() - Poly(a);
        Poly p = xa.pow(l) * (Poly(shift) + xa * xa);
        RationalFn phi(p);
        EndpointClass e = classify_endpoint(phi, EndpointSpec::lower(Bound::at(a)));
        CHECK(e.order == l);
        double ad = a.to_double();
        auto inv = [&](double x) { return 1.0 / p.eval_double(x); };
        auto inv_sqrt = [&](double x) { return 1.0 / std::sqrt(p.eval_double(x)); };
        double grow_t = integral_near(inv, ad, 1e-8, 0.5) - integral_near(inv, ad, 1e-4, 0.5);
        double grow_s = integral_near(inv_sqrt, ad, 1e-8, 0.5) - integral_near(inv_sqrt, ad, 1e-4, 0.5);
        CHECK(e.t_divergent == (grow_t > 1.0));
        CHECK(e.distance_finite == (grow_s < 0.1));
    }
}

TEST_CASE("growth degree against numerical tails") {
    gen::Rng rng(72);
    for (int trial = 0; trial < 30; ++trial) {
        int d = static_cast<int>(rng.integer(-1, 3));
        Poly num = Poly(Scalar(1)) + X() * X();
        Poly den = Poly(Scalar(1)) + X() * X();
        if (d >= 0) num = num * X().pow(d);
        else den = den * X();
        num = rng.positive_rational(5, 3) * num;
        RationalFn phi(num, den);
        EndpointClass e = at_infinity(phi);
        CHECK(e.order == d);
        auto inv = [&](double x) { return 1.0 / phi.eval_double(x); };
        // tail integral from 10 to 1e6 vs 10 to 1e12 via x = 10 e^u
        auto tail = [&](double upper) { return integral_near([&](double x) { return inv(x + 10); }, 0, 1e-6, upper); };
        double grow = tail(1e12) - tail(1e6);
        CHECK(e.t_divergent == (grow > 1.0));
    }
}

TEST_CASE("revolution test matches sampled slope") {
    gen::Rng rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        Scalar c = rng.rational(3, 2);
        Scalar k = rng.positive_rational(3, 1);
        Poly p = Scalar(2) * X() - c * X() * X();
        RationalFn phi(p, Poly::linear(Scalar(1), k));
        Domain dom = Domain::positive_reals();
        if (c.sign() > 0) dom.upper = Bound::at(Scalar(2) / c);
        RationalFn g = phi.derivative();
        double sup = 0;
        double top = dom.upper.is_finite() ? dom.upper.value.to_double() : 200.0;
        for (int i = 1; i < 4000; ++i) sup = std::max(sup, std::fabs(g.eval_double(top * i / 4000.0)));
        bool sampled = sup <= 2 + 1e-9;
        CHECK(embeds_as_revolution(phi, dom) == sampled);
    }
}
