#include "momentum/poly.hpp"

#include "momentum/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace momentum {

namespace {

double max_abs(const std::vector<Scalar>& c) {
    double m = 0;
    for (const auto& x : c) m = std::max(m, std::fabs(x.to_double()));
    return m;
}

}  // namespace

Poly::Poly(const Scalar& c) : c_{c} { trim(); }

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Scalar& c, int k) {
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar(0));
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Poly::is_exact() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_exact(); });
}

Scalar Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return Scalar(0);
    return c_[i];
}

Scalar Poly::leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

Scalar Poly::lowest_nonzero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return x;
    return Scalar(0);
}

int Poly::zero_order() const {
    if (is_zero()) throw InvalidInput("zero polynomial has no root order");
    int k = 0;
    while (c_[k].is_zero()) ++k;
    return k;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_exact() && a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Scalar& s, const Poly& p) {
    Poly r = p;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
}

bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }

Poly Poly::pow(unsigned e) const {
    Poly r(1), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

Scalar Poly::eval(const Scalar& t) const {
    Scalar r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

double Poly::eval_double(double t) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + it->to_double();
    return r;
}

mpq_class Poly::eval_exact(const mpq_class& t) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + it->exact();
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Scalar> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return Poly(std::move(r));
}

Poly Poly::antiderivative_from(const Scalar& lower) const {
    std::vector<Scalar> r(c_.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / Scalar(static_cast<long>(i + 1));
    Poly f(std::move(r));
    return f - Poly(f.eval(lower));
}

Poly Poly::double_integral_from(const Scalar& lower) const {
    return antiderivative_from(lower).antiderivative_from(lower);
}

Poly Poly::compose_affine(const Scalar& a, const Scalar& b) const { return compose(Poly::linear(a, b)); }

Poly Poly::compose(const Poly& q) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + Poly(*it);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Scalar lc = leading();
    Poly r = *this;
    for (auto& x : r.c_) x /= lc;
    r.c_.back() = Scalar(1);
    return r;
}

Poly Poly::divide_exact(const Poly& d) const {
    auto [q, r] = divmod(*this, d);
    if (!r.is_zero()) throw InvariantBreach("inexact polynomial division");
    return q;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Scalar& c = c_[i];
        if (c.is_zero()) continue;
        std::string s = c.str();
        bool neg = c.sign() < 0;
        if (neg) s = (-c).str();
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        bool unit = (c.abs() == Scalar(1)) && c.abs().is_exact();
        if (i == 0) os << s;
        else {
            if (!unit) os << (s.find('/') != std::string::npos ? "(" + s + ")" : s) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InvariantBreach("polynomial division by zero");
    bool exact = a.is_exact() && b.is_exact();
    double scale = exact ? 0.0 : std::max(1.0, max_abs(a.coeffs()));
    std::vector<Scalar> r = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {Poly(), a};
    std::vector<Scalar> q(static_cast<std::size_t>(da - db) + 1, Scalar(0));
    Scalar lb = b.leading();
    for (int k = da; k >= db; --k) {
        Scalar f = r[k] / lb;
        q[k - db] = f;
        if (f.is_exact() && f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
        r[k] = exact ? Scalar(0) : Scalar::from_double(0.0, r[k].epsilon());
    }
    r.resize(static_cast<std::size_t>(db));
    if (!exact) {
        for (auto& x : r) {
            if (std::fabs(x.to_double()) <= x.epsilon() * scale) x = Scalar::from_double(0.0, x.epsilon());
        }
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::pair<Poly, Poly> ext_gcd_inverse(const Poly& a, const Poly& b) {
    // invariant: s_i a = r_i (mod b)
    Poly r0 = b, r1 = divmod(a, b).second;
    Poly s0, s1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    Scalar lc = r0.leading();
    return {r0.monic(), divmod((Scalar(1) / lc) * s0, b).second};
}

std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& p) {
    if (p.is_zero()) throw InvalidInput("zero polynomial has no square-free decomposition");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() == 0) return out;
    Poly pm = p.monic();
    Poly dp = pm.derivative();
    Poly a0 = gcd(pm, dp);
    Poly b = pm.divide_exact(a0);
    Poly c = dp.divide_exact(a0);
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly a = gcd(b, d);
        b = b.divide_exact(a).monic();
        c = d.divide_exact(a);
        d = c - b.derivative();
        if (a.degree() > 0) out.emplace_back(a, i);
        ++i;
        if (i > p.degree() + 1) throw InvariantBreach("square-free decomposition did not terminate");
    }
    return out;
}

Poly square_free_part(const Poly& p) {
    Poly r(1);
    for (const auto& [f, m] : square_free_decomposition(p)) r = r * f;
    return r;
}

RationalFn::RationalFn(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw InvariantBreach("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return;
    }
    Poly g = gcd(num, den);
    Poly n = num, d = den;
    if (g.degree() > 0) {
        n = num.divide_exact(g);
        d = den.divide_exact(g);
    }
    Scalar lc = d.leading();
    num_ = (Scalar(1) / lc) * n;
    den_ = d.monic();
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw InvariantBreach("rational function division by zero");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFn& a, const RationalFn& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

Scalar RationalFn::eval(const Scalar& t) const {
    Scalar d = den_.eval(t);
    if (d.is_zero()) throw InvalidInput("rational function evaluated at a pole");
    return num_.eval(t) / d;
}

double RationalFn::eval_double(double t) const { return num_.eval_double(t) / den_.eval_double(t); }

RationalFn RationalFn::derivative() const {
    return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

int RationalFn::order_at(const Scalar& a) const {
    if (num_.is_zero()) throw InvalidInput("zero function has no vanishing order");
    auto mult = [&](Poly p) {
        int k = 0;
        Poly lin = Poly::linear(-a, Scalar(1));
        while (p.degree() >= 1) {
            auto [q, r] = divmod(p, lin);
            if (!r.is_zero()) break;
            p = q;
            ++k;
        }
        return k;
    };
    return mult(num_) - mult(den_);
}

int RationalFn::growth_degree() const {
    if (num_.is_zero()) throw InvalidInput("zero function has no growth degree");
    return num_.degree() - den_.degree();
}

Scalar RationalFn::leading_ratio() const { return num_.leading() / den_.leading(); }

std::string RationalFn::str(const std::string& var) const {
    if (is_polynomial()) return ((Scalar(1) / den_.leading()) * num_).str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace momentum
