#pragma once

#include "momentum/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace momentum {

struct Bound {
    enum class Kind { finite, neg_infinity, pos_infinity };
    Kind kind = Kind::finite;
    Scalar value;

    static Bound at(const Scalar& v) { return {Kind::finite, v}; }
    static Bound pos_inf() { return {Kind::pos_infinity, Scalar(0)}; }
    static Bound neg_inf() { return {Kind::neg_infinity, Scalar(0)}; }
    bool is_finite() const { return kind == Kind::finite; }
    std::string str() const;
};

// Real interval; closedness is ignored at infinite ends.
struct Domain {
    Bound lower = Bound::at(Scalar(0));
    Bound upper = Bound::pos_inf();
    bool closed_lower = false;
    bool closed_upper = false;

    static Domain open(const Bound& a, const Bound& b) { return {a, b, false, false}; }
    static Domain closed(const Scalar& a, const Scalar& b) { return {Bound::at(a), Bound::at(b), true, true}; }
    static Domain positive_reals() { return {}; }
    Domain interior() const { return {lower, upper, false, false}; }
    bool contains(const Scalar& t) const;
    // A point strictly inside.
    Scalar sample() const;
    std::string str() const;
};

// A real algebraic number: the unique root of a square-free polynomial inside (lo, hi),
// or an exactly known rational (lo == hi == *exact).
class AlgebraicReal {
public:
    AlgebraicReal(Poly defining, Scalar lo, Scalar hi, std::optional<Scalar> exact);
    static AlgebraicReal rational(const Scalar& x);

    const Poly& defining() const { return f_; }
    const Scalar& lo() const { return lo_; }
    const Scalar& hi() const { return hi_; }
    bool is_rational() const { return exact_.has_value(); }
    const std::optional<Scalar>& exact() const { return exact_; }
    Scalar midpoint() const;
    double approx() const { return midpoint().to_double(); }

    // Shrink the isolating interval below the given width.
    void refine(const Scalar& width);
    // Exact sign of h at this number.
    int sign_of(const Poly& h);
    std::string str() const;

private:
    Poly f_;
    Scalar lo_, hi_;
    std::optional<Scalar> exact_;
};

struct Root {
    AlgebraicReal value;
    int multiplicity;
};

Scalar isolation_width();

// Distinct real roots in the domain, ascending, each with multiplicity.
std::vector<Root> isolate_real_roots(const Poly& p, const Domain& dom);
int count_distinct_roots(const Poly& square_free, const Scalar& lo, const Scalar& hi);

bool is_positive_on(const Poly& p, const Domain& dom);
bool is_positive_on(const RationalFn& f, const Domain& dom);

struct Infimum {
    enum class Where { interior, lower_end, upper_end };
    bool minus_infinity = false;
    Scalar value;
    bool exact = true;
    bool attained = false;
    Where where = Where::interior;
    std::optional<AlgebraicReal> location;

    std::string where_str() const;
};

// Infimum over the domain; ends are limits unless closed. Interior poles contribute
// their one-sided limits: -inf makes the infimum -inf, +inf is ignored.
Infimum infimum_on(const RationalFn& f, const Domain& dom);

// Sign of f just inside a finite end a: side = +1 for the right of a, -1 for the left.
int side_sign(const RationalFn& f, const Scalar& a, int side);

}  // namespace momentum
