#include "generators.hpp"
#include "momentum/error.hpp"
#include "momentum/roots.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace momentum;

namespace {

Scalar q(const char* s) { return Scalar::parse(s); }
Poly X() { return Poly::x(); }

// Dense sign scan used as an independent check of root-based decisions.
bool grid_positive(const Poly& p, double a, double b, int n = 10000) {
    for (int i = 1; i < n; ++i) {
        double t = a + (b - a) * i / n;
        if (!(p.eval_double(t) > 0)) return false;
    }
    return true;
}

double grid_min(const RationalFn& f, double a, double b, int n = 20000) {
    double m = INFINITY;
    for (int i = 0; i <= n; ++i) {
        double t = a + (b - a) * i / n;
        m = std::min(m, f.eval_double(t));
    }
    return m;
}

}  // namespace

TEST_CASE("scalar parsing is exact") {
    CHECK(q("3/6") == Scalar(1, 2));
    CHECK(q("0.05") == Scalar(1, 20));
    CHECK(q("-1e-3") == Scalar(-1, 1000));
    CHECK(q("2.5E2") == Scalar(250));
    CHECK(q("-7").str() == "-7");
    CHECK(q("4/-6").str() == "-2/3");
    CHECK_THROWS_AS(q("1/0"), InvalidInput);
    CHECK_THROWS_AS(q("abc"), InvalidInput);
    CHECK_THROWS_AS(q("1.2.3"), InvalidInput);
}

TEST_CASE("float scalars compare with tolerance") {
    Scalar a = Scalar::from_double(1.0, 1e-10);
    Scalar b = Scalar::from_double(1.0 + 1e-12, 1e-10);
    CHECK(a == b);
    CHECK((a - b).is_zero());
    CHECK_FALSE((a + Scalar(1, 1000)) == b);
    CHECK_FALSE((a * Scalar(3)).is_exact());
}

TEST_CASE("simplest rational between") {
    CHECK(Scalar(simplest_between(mpq_class(3, 10), mpq_class(4, 10))) == Scalar(1, 3));
    CHECK(Scalar(simplest_between(mpq_class(-1, 2), mpq_class(1, 2))) == Scalar(0));
    CHECK(Scalar(simplest_between(mpq_class(5, 2), mpq_class(7, 2))) == Scalar(3));
    CHECK(Scalar(simplest_between(mpq_class(-7, 2), mpq_class(-5, 2))) == Scalar(-3));
}

TEST_CASE("polynomial arithmetic") {
    Poly p = (X() + Poly(1)).pow(2);
    CHECK(p == Poly({Scalar(1), Scalar(2), Scalar(1)}));
    CHECK(p.derivative() == Poly({Scalar(2), Scalar(2)}));
    CHECK((Scalar(2) * X()).antiderivative_from(Scalar(1)) == X() * X() - Poly(1));
    CHECK(Poly(-2).double_integral_from(Scalar(0)) == -(X() * X()));
    CHECK(p.compose_affine(Scalar(-1), Scalar(1)) == X() * X());
    CHECK(Poly().degree() == -1);
    CHECK(Poly({Scalar(0), Scalar(0)}).is_zero());
    CHECK(p.eval(q("1/2")) == q("9/4"));
}

TEST_CASE("divmod identity on random polynomials") {
    gen::Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        Poly a = rng.poly(static_cast<int>(rng.integer(0, 8)), 9, 5);
        Poly b = rng.poly(static_cast<int>(rng.integer(0, 5)), 9, 5);
        auto [qq, r] = divmod(a, b);
        CHECK(qq * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd and square-free decomposition") {
    Poly g = gcd((X() - Poly(1)) * (X() - Poly(2)), (X() - Poly(1)) * (X() + Poly(3)));
    CHECK(g == X() - Poly(1));
    Poly p = Scalar(3) * (X() - Poly(1)).pow(3) * (X() + Poly(2));
    auto sf = square_free_decomposition(p);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].first == X() + Poly(2));
    CHECK(sf[0].second == 1);
    CHECK(sf[1].first == X() - Poly(1));
    CHECK(sf[1].second == 3);

    gen::Rng rng(5);
    for (int it = 0; it < 60; ++it) {
        Poly a = rng.poly(static_cast<int>(rng.integer(1, 3)), 6, 4);
        Poly b = rng.poly(static_cast<int>(rng.integer(1, 3)), 6, 4);
        Poly prod = a * a * b;
        Poly rebuilt(prod.leading());
        for (const auto& [f, m] : square_free_decomposition(prod)) rebuilt = rebuilt * f.pow(m);
        CHECK(rebuilt == prod);
    }
}

TEST_CASE("modular inverse") {
    Poly m = X() * X() - Poly(2);
    Poly a = X() + Poly(3);
    auto [g, s] = ext_gcd_inverse(a, m);
    CHECK(g == Poly(1));
    CHECK(divmod(s * a, m).second == Poly(1));
}

TEST_CASE("rational functions reduce and differentiate") {
    RationalFn f(X() * X() - Poly(1), Scalar(2) * (X() - Poly(1)));
    CHECK(f.is_polynomial());
    CHECK(f == RationalFn(X() + Poly(1), Poly(2)));
    CHECK(f.den() == Poly(1));
    RationalFn g(Poly(1), X() + Poly(1));
    CHECK(g.derivative() == RationalFn(Poly(-1), (X() + Poly(1)).pow(2)));
    // product rule agrees with quotient rule
    RationalFn h(X() * X() + Poly(3), X() - Poly(5));
    RationalFn k(X() + Poly(2), X() * X() + Poly(1));
    CHECK((h * k).derivative() == h.derivative() * k + h * k.derivative());
    CHECK(RationalFn(X().pow(3), (X() - Poly(1))).order_at(Scalar(0)) == 3);
    CHECK(RationalFn(Poly(1), (X() - Poly(1)).pow(2)).order_at(Scalar(1)) == -2);
    CHECK(RationalFn(X().pow(3), X() + Poly(1)).growth_degree() == 2);
}

TEST_CASE("root isolation examples") {
    auto r = isolate_real_roots(X() * X() - Poly(2), Domain::positive_reals());
    REQUIRE(r.size() == 1);
    CHECK(r[0].multiplicity == 1);
    CHECK_FALSE(r[0].value.is_rational());
    CHECK((r[0].value.hi() - r[0].value.lo()) <= isolation_width());
    CHECK(r[0].value.lo().to_double() <= std::sqrt(2.0));
    CHECK(r[0].value.hi().to_double() >= std::sqrt(2.0));

    auto r2 = isolate_real_roots((X() - Poly(1)).pow(2) * (X() + Poly(1)), Domain::positive_reals());
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].multiplicity == 2);
    REQUIRE(r2[0].value.is_rational());
    CHECK(*r2[0].value.exact() == Scalar(1));

    try {
        isolate_real_roots(Poly(), Domain::positive_reals());
        FAIL("expected error");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()) == "zero polynomial has no root isolation");
    }
}

TEST_CASE("root isolation recovers planted roots") {
    gen::Rng rng(2024);
    for (int it = 0; it < 80; ++it) {
        int n = static_cast<int>(rng.integer(1, 4));
        std::vector<std::pair<Scalar, int>> planted;
        Poly p(rng.positive_rational(5, 3));
        for (int i = 0; i < n; ++i) {
            Scalar root = rng.rational(20, 7);
            bool dup = false;
            for (auto& [x, m] : planted) dup = dup || x == root;
            if (dup) continue;
            int m = static_cast<int>(rng.integer(1, 3));
            planted.emplace_back(root, m);
            p = p * (X() - Poly(root)).pow(m);
        }
        // an irreducible quadratic factor with no real roots
        if (rng.coin()) p = p * (X() * X() + Poly(rng.positive_rational(5, 2)));
        Domain dom = Domain::closed(Scalar(-1), Scalar(2));
        if (rng.coin()) dom = Domain::positive_reals();
        auto roots = isolate_real_roots(p, dom);
        std::vector<std::pair<Scalar, int>> expected;
        for (auto& e : planted)
            if (dom.contains(e.first)) expected.push_back(e);
        std::sort(expected.begin(), expected.end(), [](auto& a, auto& b) { return a.first < b.first; });
        REQUIRE(roots.size() == expected.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            REQUIRE(roots[i].value.is_rational());
            CHECK(*roots[i].value.exact() == expected[i].first);
            CHECK(roots[i].multiplicity == expected[i].second);
        }
    }
}

TEST_CASE("irrational roots are bracketed") {
    gen::Rng rng(77);
    for (int it = 0; it < 40; ++it) {
        long a = rng.integer(2, 50);
        if (std::sqrt(double(a)) == std::floor(std::sqrt(double(a)))) continue;
        Poly p = (X() * X() - Poly(Scalar(a))) * (X() - Poly(rng.rational(10, 3)));
        auto roots = isolate_real_roots(p, Domain::open(Bound::neg_inf(), Bound::pos_inf()));
        int irr = 0;
        for (auto& r : roots) {
            if (r.value.is_rational()) continue;
            ++irr;
            double s = std::sqrt(double(a));
            double x = r.value.approx();
            CHECK(std::min(std::fabs(x - s), std::fabs(x + s)) < 1e-11);
        }
        CHECK(irr == 2);
    }
}

TEST_CASE("algebraic sign determination") {
    auto roots = isolate_real_roots(X() * X() - Poly(2), Domain::positive_reals());
    AlgebraicReal s2 = roots[0].value;
    CHECK(s2.sign_of(X() * X() - Poly(2)) == 0);
    CHECK(s2.sign_of((X() * X() - Poly(2)) * (X() + Poly(1))) == 0);
    CHECK(s2.sign_of(X() - q("1.41421356")) == 1);
    CHECK(s2.sign_of(X() - q("1.41421357")) == -1);
    // a polynomial whose root is extremely close to sqrt(2) but different
    CHECK(s2.sign_of(X() - q("1.4142135623730950488016887")) == 1);
    CHECK(s2.sign_of(X() - q("1.4142135623730950488016888")) == -1);
}

TEST_CASE("positivity examples") {
    Poly p = Scalar(2) * X() + X() * X();
    CHECK(is_positive_on(p, Domain::positive_reals()));
    Domain closed0{Bound::at(Scalar(0)), Bound::pos_inf(), true, false};
    CHECK_FALSE(is_positive_on(p, closed0));
    CHECK_FALSE(is_positive_on((X() - Poly(1)).pow(2), Domain::positive_reals()));
    CHECK(is_positive_on(Poly(1) - X() * X(), Domain::open(Bound::at(Scalar(-1)), Bound::at(Scalar(1)))));
    CHECK_FALSE(is_positive_on(Poly(), Domain::positive_reals()));
}

TEST_CASE("positivity agrees with a dense sign grid") {
    gen::Rng rng(99);
    int agreed = 0;
    for (int it = 0; it < 150; ++it) {
        Poly p = rng.poly(static_cast<int>(rng.integer(1, 6)), 10, 4);
        Scalar a = rng.rational(3, 2), b = a + rng.positive_rational(4, 2);
        Domain dom = Domain::open(Bound::at(a), Bound::at(b));
        bool exact = is_positive_on(p, dom);
        bool grid = grid_positive(p, a.to_double(), b.to_double());
        if (exact == grid) ++agreed;
        else {
            // disagreement only allowed when the minimum is numerically tangent to zero
            auto roots = isolate_real_roots(p, dom);
            CHECK(exact == false);
            CHECK(!roots.empty());
        }
    }
    CHECK(agreed >= 145);
}

TEST_CASE("infimum examples") {
    RationalFn c(Poly(2), X());
    Infimum inf = infimum_on(c, Domain::positive_reals());
    CHECK_FALSE(inf.minus_infinity);
    CHECK(inf.value == Scalar(0));
    CHECK_FALSE(inf.attained);
    CHECK(inf.where == Infimum::Where::upper_end);

    // (t - 1)^2 + 3 attains 3 at t = 1
    Infimum i2 = infimum_on(RationalFn((X() - Poly(1)).pow(2) + Poly(3)), Domain::positive_reals());
    CHECK(i2.attained);
    CHECK(i2.exact);
    CHECK(i2.value == Scalar(3));
    CHECK(*i2.location->exact() == Scalar(1));

    // -t is unbounded below
    CHECK(infimum_on(RationalFn(-X()), Domain::positive_reals()).minus_infinity);
    // pole approached from below
    CHECK(infimum_on(RationalFn(Poly(1), X() - Poly(1)), Domain::positive_reals()).minus_infinity);
    // even pole is ignored: 1/(t-1)^2 + t has an interior minimum or approaches 1/1 at 0
    Infimum i3 = infimum_on(RationalFn(Poly(1), (X() - Poly(1)).pow(2)) + RationalFn(X()), Domain::positive_reals());
    CHECK_FALSE(i3.minus_infinity);
    CHECK(i3.value == Scalar(1));
    CHECK(i3.where == Infimum::Where::lower_end);
}

TEST_CASE("infimum agrees with dense sampling") {
    gen::Rng rng(4242);
    for (int it = 0; it < 60; ++it) {
        // positive denominators keep f bounded on [0, 4]
        Poly num = rng.poly(static_cast<int>(rng.integer(1, 4)), 6, 3);
        Poly den = X() * X() + Poly(rng.positive_rational(4, 2));
        RationalFn f(num, den);
        Domain dom = Domain::open(Bound::at(Scalar(0)), Bound::at(Scalar(4)));
        Infimum inf = infimum_on(f, dom);
        REQUIRE_FALSE(inf.minus_infinity);
        double g = grid_min(f, 0.0, 4.0);
        CHECK(inf.value.to_double() <= g + 1e-12);
        CHECK(inf.value.to_double() >= g - 1e-6);
    }
}

TEST_CASE("float mode root isolation and infimum") {
    Poly p({Scalar::from_double(-2.0), Scalar(0), Scalar::from_double(1.0)});
    auto r = isolate_real_roots(p, Domain::positive_reals());
    REQUIRE(r.size() == 1);
    CHECK(std::fabs(r[0].value.approx() - std::sqrt(2.0)) < 1e-9);
    RationalFn f(Poly({Scalar::from_double(3.0), Scalar::from_double(-2.0), Scalar::from_double(1.0)}));
    Infimum inf = infimum_on(f, Domain::positive_reals());
    CHECK(std::fabs(inf.value.to_double() - 2.0) < 1e-10);
    CHECK(std::fabs(inf.location->approx() - 1.0) < 1e-6);
}
