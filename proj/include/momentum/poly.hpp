#pragma once

#include "momentum/scalar.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace momentum {

// Dense univariate polynomial, coefficients in ascending degree, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(const Scalar& c);
    Poly(int c) : Poly(Scalar(c)) {}
    explicit Poly(std::vector<Scalar> coeffs);
    Poly(std::initializer_list<Scalar> coeffs) : Poly(std::vector<Scalar>(coeffs)) {}

    static Poly x() { return Poly({Scalar(0), Scalar(1)}); }
    static Poly monomial(const Scalar& c, int k);
    // (a + b x)
    static Poly linear(const Scalar& a, const Scalar& b) { return Poly({a, b}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_exact() const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int i) const;
    Scalar leading() const;
    Scalar lowest_nonzero() const;
    // Multiplicity of the root x = 0.
    int zero_order() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b);

    Poly pow(unsigned e) const;
    Scalar operator()(const Scalar& t) const { return eval(t); }
    Scalar eval(const Scalar& t) const;
    double eval_double(double t) const;
    mpq_class eval_exact(const mpq_class& t) const;

    Poly derivative() const;
    // F with F' = p and F(lower) = 0.
    Poly antiderivative_from(const Scalar& lower) const;
    // G with G'' = p and G(lower) = G'(lower) = 0, i.e. the integral of (t - x) p(x) over [lower, t].
    Poly double_integral_from(const Scalar& lower) const;
    // p(a + b x)
    Poly compose_affine(const Scalar& a, const Scalar& b) const;
    Poly compose(const Poly& q) const;

    Poly monic() const;
    Poly divide_exact(const Poly& d) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
// Yun decomposition p = lc * prod f_i^i with f_i monic, square-free, pairwise coprime.
std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& p);
Poly square_free_part(const Poly& p);
// Extended Euclid: returns (g, s) with s a = g mod b.
std::pair<Poly, Poly> ext_gcd_inverse(const Poly& a, const Poly& b);

class RationalFn {
public:
    RationalFn() : num_(), den_(Poly(1)) {}
    RationalFn(const Poly& p) : num_(p), den_(Poly(1)) {}
    RationalFn(const Scalar& c) : num_(Poly(c)), den_(Poly(1)) {}
    RationalFn(int c) : RationalFn(Scalar(c)) {}
    RationalFn(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_exact() const { return num_.is_exact() && den_.is_exact(); }

    RationalFn operator-() const { return RationalFn(-num_, den_); }
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend bool operator==(const RationalFn& a, const RationalFn& b);

    Scalar eval(const Scalar& t) const;
    Scalar operator()(const Scalar& t) const { return eval(t); }
    double eval_double(double t) const;
    RationalFn derivative() const;
    // Vanishing order at a (negative for poles).
    int order_at(const Scalar& a) const;
    // deg num - deg den
    int growth_degree() const;
    // Limit of f(t) / t^growth_degree at infinity.
    Scalar leading_ratio() const;

    std::string str(const std::string& var = "t") const;

private:
    Poly num_, den_;
};

}  // namespace momentum
