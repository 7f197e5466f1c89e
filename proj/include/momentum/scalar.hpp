#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <variant>

namespace momentum {

// Either an exact rational or a double carrying its own zero tolerance.
// Mixed arithmetic degrades to float.
class Scalar {
public:
    static constexpr double default_epsilon = 1e-10;

    Scalar() : v_(mpq_class(0)) {}
    Scalar(int x) : v_(mpq_class(x)) {}
    Scalar(long x) : v_(mpq_class(x)) {}
    Scalar(long long x) : v_(mpq_class(std::to_string(x))) {}
    Scalar(const mpq_class& q) : v_(q) { std::get<0>(v_).canonicalize(); }
    Scalar(const mpz_class& z) : v_(mpq_class(z)) {}
    Scalar(long num, long den);

    static Scalar from_double(double x, double eps = default_epsilon);
    // "p/q", integers, decimals and scientific notation parse exactly.
    static Scalar parse(const std::string& s);
    static Scalar parse_float(const std::string& s, double eps = default_epsilon);

    bool is_exact() const { return v_.index() == 0; }
    const mpq_class& exact() const;
    double to_double() const;
    double epsilon() const { return is_exact() ? 0.0 : eps_; }

    bool is_zero() const;
    int sign() const;
    bool is_integer() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    // Tolerance-aware in float mode.
    friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    Scalar abs() const { return sign() < 0 ? -*this : *this; }
    Scalar pow(unsigned e) const;

    // Exact: canonical "p/q" or "p". Float: shortest round-trip decimal.
    std::string str() const;
    std::string decimal(int significant = 17) const;

private:
    std::variant<mpq_class, double> v_;
    double eps_ = default_epsilon;
};

Scalar as_float(const Scalar& x, double eps = Scalar::default_epsilon);
Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

// Simplest rational strictly inside (lo, hi), or lo itself if lo == hi.
mpq_class simplest_between(const mpq_class& lo, const mpq_class& hi);

}  // namespace momentum
