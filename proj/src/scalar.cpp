#include "momentum/scalar.hpp"

#include "momentum/error.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace momentum {

namespace {

double q_to_double(const mpq_class& q) { return q.get_d(); }

mpq_class parse_exact(const std::string& raw) {
    std::string s = raw;
    if (s.empty()) throw InvalidInput("empty scalar string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class p, q;
        if (p.set_str(s.substr(0, slash), 10) != 0 || q.set_str(s.substr(slash + 1), 10) != 0)
            throw InvalidInput("malformed rational '" + raw + "'");
        if (q == 0) throw InvalidInput("zero denominator in '" + raw + "'");
        mpq_class r(p, q);
        r.canonicalize();
        return r;
    }
    // decimal with optional exponent
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    std::string digits;
    long frac = 0;
    bool seen_dot = false, any = false;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits += ch;
            any = true;
            if (seen_dot) ++frac;
        } else if (ch == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!any) throw InvalidInput("malformed scalar '" + raw + "'");
    long expo = 0;
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') throw InvalidInput("malformed scalar '" + raw + "'");
        ++i;
        std::string e = s.substr(i);
        if (e.empty()) throw InvalidInput("malformed exponent in '" + raw + "'");
        std::size_t used = 0;
        try {
            expo = std::stol(e, &used);
        } catch (...) {
            throw InvalidInput("malformed exponent in '" + raw + "'");
        }
        if (used != e.size()) throw InvalidInput("malformed exponent in '" + raw + "'");
        if (std::labs(expo) > 4000) throw InvalidInput("exponent out of range in '" + raw + "'");
    }
    mpz_class num(digits, 10);
    long shift = expo - frac;
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
    mpq_class r = shift >= 0 ? mpq_class(num * ten_pow) : mpq_class(num, ten_pow);
    r.canonicalize();
    return neg ? mpq_class(-r) : r;
}

}  // namespace

Scalar::Scalar(long num, long den) {
    if (den == 0) throw InvalidInput("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    v_ = q;
}

Scalar Scalar::from_double(double x, double eps) {
    Scalar s;
    s.v_ = x;
    s.eps_ = eps;
    return s;
}

Scalar Scalar::parse(const std::string& s) { return Scalar(parse_exact(s)); }

Scalar Scalar::parse_float(const std::string& s, double eps) {
    return from_double(q_to_double(parse_exact(s)), eps);
}

const mpq_class& Scalar::exact() const {
    if (!is_exact()) throw InvariantBreach("exact value requested from float scalar");
    return std::get<0>(v_);
}

double Scalar::to_double() const {
    return is_exact() ? q_to_double(std::get<0>(v_)) : std::get<1>(v_);
}

bool Scalar::is_zero() const {
    if (is_exact()) return sgn(std::get<0>(v_)) == 0;
    return std::fabs(std::get<1>(v_)) <= eps_;
}

int Scalar::sign() const {
    if (is_exact()) return sgn(std::get<0>(v_));
    double x = std::get<1>(v_);
    if (std::fabs(x) <= eps_) return 0;
    return x > 0 ? 1 : -1;
}

bool Scalar::is_integer() const {
    if (is_exact()) return std::get<0>(v_).get_den() == 1;
    double x = std::get<1>(v_);
    return std::fabs(x - std::round(x)) <= eps_;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (is_exact()) std::get<0>(r.v_) = -std::get<0>(v_);
    else std::get<1>(r.v_) = -std::get<1>(v_);
    return r;
}

#define MOMENTUM_SCALAR_OP(OPEQ, OP)                                          \
    Scalar& Scalar::OPEQ(const Scalar& o) {                                   \
        if (is_exact() && o.is_exact()) {                                     \
            std::get<0>(v_) = std::get<0>(v_) OP std::get<0>(o.v_);           \
            return *this;                                                     \
        }                                                                     \
        double a = to_double(), b = o.to_double();                            \
        double e = is_exact() ? o.eps_ : (o.is_exact() ? eps_ : std::max(eps_, o.eps_)); \
        v_ = a OP b;                                                          \
        eps_ = e;                                                             \
        return *this;                                                         \
    }

MOMENTUM_SCALAR_OP(operator+=, +)
MOMENTUM_SCALAR_OP(operator-=, -)
MOMENTUM_SCALAR_OP(operator*=, *)
#undef MOMENTUM_SCALAR_OP

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_exact() && sgn(std::get<0>(o.v_)) == 0) throw InvariantBreach("division by zero");
    if (is_exact() && o.is_exact()) {
        std::get<0>(v_) /= std::get<0>(o.v_);
        return *this;
    }
    double b = o.to_double();
    if (b == 0.0) throw InvariantBreach("division by zero");
    double e = is_exact() ? o.eps_ : (o.is_exact() ? eps_ : std::max(eps_, o.eps_));
    v_ = to_double() / b;
    eps_ = e;
    return *this;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Scalar Scalar::pow(unsigned e) const {
    Scalar r(1), b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

std::string Scalar::str() const {
    if (is_exact()) return std::get<0>(v_).get_str();
    return decimal(17);
}

std::string Scalar::decimal(int significant) const {
    double x = to_double();
    if (!is_exact() && std::fabs(x) <= eps_) x = 0.0;
    if (x == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, x);
    return buf;
}

Scalar as_float(const Scalar& x, double eps) { return Scalar::from_double(x.to_double(), eps); }

Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

mpq_class simplest_between(const mpq_class& lo, const mpq_class& hi) {
    if (lo > hi) return simplest_between(hi, lo);
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return mpq_class(0);
    if (sgn(hi) < 0) return mpq_class(-simplest_between(-hi, -lo));
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (mpq_class(f) == lo) return lo;
    if (mpq_class(f + 1) <= hi) return mpq_class(f + 1);
    mpq_class inner = simplest_between(1 / (hi - f), 1 / (lo - f));
    mpq_class r = f + 1 / inner;
    r.canonicalize();
    return r;
}

}  // namespace momentum
