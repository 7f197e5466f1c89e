#include "momentum/roots.hpp"

#include "momentum/error.hpp"

#include <algorithm>
#include <cmath>

namespace momentum {

namespace {

using Sturm = std::vector<Poly>;

Sturm sturm_sequence(const Poly& f) {
    Sturm s{f, f.derivative()};
    while (!s.back().is_zero()) {
        Poly r = divmod(s[s.size() - 2], s.back()).second;
        if (r.is_zero()) break;
        // rescaling by positive constants keeps sign patterns and tames exact coefficient growth
        Scalar lc = r.leading().abs();
        s.push_back((Scalar(-1) / lc) * r);
    }
    return s;
}

int variations(const Sturm& s, const Scalar& x) {
    int v = 0, prev = 0;
    for (const auto& p : s) {
        int sg = p.eval(x).sign();
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++v;
        prev = sg;
    }
    return v;
}

Scalar half(const Scalar& a, const Scalar& b) { return (a + b) / Scalar(2); }

// Cauchy bound, rounded up to an integer in exact mode.
Scalar root_bound(const Poly& f) {
    Scalar lc = f.leading().abs();
    Scalar m(0);
    for (int i = 0; i < f.degree(); ++i) m = max(m, f.coeff(i).abs() / lc);
    Scalar b = m + Scalar(1);
    if (b.is_exact()) {
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), b.exact().get_num_mpz_t(), b.exact().get_den_mpz_t());
        return Scalar(mpz_class(c + 1));
    }
    return b + Scalar(1);
}

AlgebraicReal refine_single(const Poly& f, Scalar lo, Scalar hi) {
    const Scalar width = isolation_width();
    int sl = f.eval(lo).sign();
    while (hi - lo > width) {
        Scalar m = half(lo, hi);
        int sm = f.eval(m).sign();
        if (sm == 0) return AlgebraicReal(f, m, m, m);
        if (sm == sl) lo = m;
        else hi = m;
    }
    if (f.is_exact()) {
        Scalar q(simplest_between(lo.exact(), hi.exact()));
        if (f.eval(q).is_zero()) return AlgebraicReal(f, q, q, q);
    }
    return AlgebraicReal(f, lo, hi, std::nullopt);
}

// Pushes a point e > 0 away from x (direction dir) so that (x, x + dir*e] holds no root and
// x + dir*e is not a root.
Scalar clear_neighbourhood(const Poly& f, const Sturm& s, const Scalar& x, int dir, Scalar e) {
    for (int it = 0; it < 400; ++it) {
        Scalar y = x + Scalar(dir) * e;
        if (!f.eval(y).is_zero()) {
            int n = dir > 0 ? variations(s, x) - variations(s, y) : variations(s, y) - variations(s, x);
            if (dir < 0 && f.eval(x).is_zero()) n -= 1;
            if (n <= 0) return y;
        }
        e = e / Scalar(2);
    }
    throw InvariantBreach("could not separate root neighbourhood");
}

void isolate_between(const Poly& f, const Sturm& s, const Scalar& lo, const Scalar& hi, int mult,
                     std::vector<Root>& out, int depth = 0) {
    if (!(lo < hi)) return;
    int n = variations(s, lo) - variations(s, hi);
    if (n <= 0) return;
    if (n == 1) {
        out.push_back({refine_single(f, lo, hi), mult});
        return;
    }
    if (depth > 2000) throw InvariantBreach("root isolation did not converge");
    Scalar m = half(lo, hi);
    if (f.eval(m).is_zero()) {
        out.push_back({AlgebraicReal(f, m, m, m), mult});
        Scalar a = clear_neighbourhood(f, s, m, -1, (hi - lo) / Scalar(4));
        Scalar b = clear_neighbourhood(f, s, m, +1, (hi - lo) / Scalar(4));
        isolate_between(f, s, lo, a, mult, out, depth + 1);
        isolate_between(f, s, b, hi, mult, out, depth + 1);
        return;
    }
    isolate_between(f, s, lo, m, mult, out, depth + 1);
    isolate_between(f, s, m, hi, mult, out, depth + 1);
}

void isolate_factor(const Poly& f, int mult, const Domain& dom, std::vector<Root>& out) {
    Sturm s = sturm_sequence(f);
    Scalar B = root_bound(f);
    Scalar lo = dom.lower.is_finite() ? dom.lower.value : -B;
    Scalar hi = dom.upper.is_finite() ? dom.upper.value : B;
    if (dom.lower.kind == Bound::Kind::pos_infinity || dom.upper.kind == Bound::Kind::neg_infinity) return;
    if (lo > hi) return;
    if (dom.lower.is_finite() && dom.upper.is_finite() && lo == hi) {
        if (dom.closed_lower && dom.closed_upper && f.eval(lo).is_zero())
            out.push_back({AlgebraicReal(f, lo, lo, lo), mult});
        return;
    }
    Scalar span = hi - lo;
    Scalar step = min(Scalar(1), span / Scalar(4));
    if (f.eval(lo).is_zero()) {
        if (dom.lower.is_finite() && dom.closed_lower) out.push_back({AlgebraicReal(f, lo, lo, lo), mult});
        lo = clear_neighbourhood(f, s, lo, +1, step);
    }
    std::vector<Root> tail;
    if (f.eval(hi).is_zero()) {
        if (dom.upper.is_finite() && dom.closed_upper) tail.push_back({AlgebraicReal(f, hi, hi, hi), mult});
        hi = clear_neighbourhood(f, s, hi, -1, step);
    }
    isolate_between(f, s, lo, hi, mult, out);
    out.insert(out.end(), tail.begin(), tail.end());
}

bool less_root(AlgebraicReal& a, AlgebraicReal& b) {
    for (int it = 0; it < 200; ++it) {
        if (a.hi() < b.lo() || (a.hi() == b.lo() && !(a.is_rational() && b.is_rational()))) return true;
        if (b.hi() < a.lo() || (b.hi() == a.lo() && !(a.is_rational() && b.is_rational()))) return false;
        if (a.is_rational() && b.is_rational()) return *a.exact() < *b.exact();
        Scalar wa = (a.hi() - a.lo()) / Scalar(2), wb = (b.hi() - b.lo()) / Scalar(2);
        if (!a.is_rational()) a.refine(wa);
        if (!b.is_rational()) b.refine(wb);
    }
    return a.midpoint() < b.midpoint();
}

Scalar golden_section_min(const RationalFn& f, Scalar a, Scalar b, double tol) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = a.to_double(), x4 = b.to_double();
    double x2 = x4 - g * (x4 - x1), x3 = x1 + g * (x4 - x1);
    double f2 = f.eval_double(x2), f3 = f.eval_double(x3);
    while (x4 - x1 > tol) {
        if (f2 < f3) {
            x4 = x3;
            x3 = x2;
            f3 = f2;
            x2 = x4 - g * (x4 - x1);
            f2 = f.eval_double(x2);
        } else {
            x1 = x2;
            x2 = x3;
            f2 = f3;
            x3 = x1 + g * (x4 - x1);
            f3 = f.eval_double(x3);
        }
    }
    return Scalar::from_double(0.5 * (x1 + x4), a.epsilon() > 0 ? a.epsilon() : Scalar::default_epsilon);
}

}  // namespace

std::string Bound::str() const {
    switch (kind) {
        case Kind::neg_infinity: return "-inf";
        case Kind::pos_infinity: return "inf";
        default: return value.str();
    }
}

bool Domain::contains(const Scalar& t) const {
    bool lo_ok = true, hi_ok = true;
    if (lower.kind == Bound::Kind::pos_infinity) return false;
    if (upper.kind == Bound::Kind::neg_infinity) return false;
    if (lower.is_finite()) lo_ok = closed_lower ? !(t < lower.value) : lower.value < t;
    if (upper.is_finite()) hi_ok = closed_upper ? !(upper.value < t) : t < upper.value;
    return lo_ok && hi_ok;
}

Scalar Domain::sample() const {
    if (lower.is_finite() && upper.is_finite()) return half(lower.value, upper.value);
    if (lower.is_finite()) return lower.value + Scalar(1);
    if (upper.is_finite()) return upper.value - Scalar(1);
    return Scalar(0);
}

std::string Domain::str() const {
    std::string l = (lower.is_finite() && closed_lower) ? "[" : "(";
    std::string r = (upper.is_finite() && closed_upper) ? "]" : ")";
    return l + lower.str() + ", " + upper.str() + r;
}

AlgebraicReal::AlgebraicReal(Poly defining, Scalar lo, Scalar hi, std::optional<Scalar> exact)
    : f_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)), exact_(std::move(exact)) {}

AlgebraicReal AlgebraicReal::rational(const Scalar& x) {
    return AlgebraicReal(Poly::linear(-x, Scalar(1)), x, x, x);
}

Scalar AlgebraicReal::midpoint() const {
    if (exact_) return *exact_;
    return half(lo_, hi_);
}

void AlgebraicReal::refine(const Scalar& width) {
    if (exact_) return;
    int sl = f_.eval(lo_).sign();
    while (hi_ - lo_ > width) {
        Scalar m = half(lo_, hi_);
        int sm = f_.eval(m).sign();
        if (sm == 0) {
            lo_ = hi_ = m;
            exact_ = m;
            return;
        }
        if (sm == sl) lo_ = m;
        else hi_ = m;
    }
}

int AlgebraicReal::sign_of(const Poly& h) {
    if (h.is_zero()) return 0;
    if (exact_) return h.eval(*exact_).sign();
    if (!f_.is_exact() || !h.is_exact()) return h.eval(midpoint()).sign();
    Poly g = gcd(f_, h);
    if (g.degree() >= 1 && count_distinct_roots(g, lo_, hi_) > 0) return 0;
    Poly hs = square_free_part(h);
    for (int it = 0; it < 400; ++it) {
        if (!h.eval(lo_).is_zero() && !h.eval(hi_).is_zero() && count_distinct_roots(hs, lo_, hi_) == 0)
            return h.eval(midpoint()).sign();
        refine((hi_ - lo_) / Scalar(2));
        if (exact_) return h.eval(*exact_).sign();
    }
    throw InvariantBreach("sign determination did not converge");
}

std::string AlgebraicReal::str() const {
    if (exact_) return exact_->str();
    return midpoint().decimal(15);
}

Scalar isolation_width() { return Scalar(mpq_class("1/1000000000000")); }

int count_distinct_roots(const Poly& square_free, const Scalar& lo, const Scalar& hi) {
    if (square_free.degree() < 1) return 0;
    Sturm s = sturm_sequence(square_free);
    return variations(s, lo) - variations(s, hi);
}

std::vector<Root> isolate_real_roots(const Poly& p, const Domain& dom) {
    if (p.is_zero()) throw InvalidInput("zero polynomial has no root isolation");
    std::vector<Root> out;
    for (const auto& [f, m] : square_free_decomposition(p)) isolate_factor(f, m, dom, out);
    for (std::size_t i = 1; i < out.size(); ++i) {
        for (std::size_t j = i; j > 0; --j) {
            if (less_root(out[j].value, out[j - 1].value)) std::swap(out[j], out[j - 1]);
            else break;
        }
    }
    return out;
}

bool is_positive_on(const Poly& p, const Domain& dom) {
    if (p.is_zero()) return false;
    if (!isolate_real_roots(p, dom).empty()) return false;
    return p.eval(dom.sample()).sign() > 0;
}

bool is_positive_on(const RationalFn& f, const Domain& dom) {
    if (f.is_zero()) return false;
    if (!isolate_real_roots(f.den(), dom).empty()) return false;
    return is_positive_on(f.num() * f.den(), dom);
}

int side_sign(const RationalFn& f, const Scalar& a, int side) {
    Poly n = f.num().compose_affine(a, Scalar(side));
    Poly d = f.den().compose_affine(a, Scalar(side));
    if (n.is_zero()) return 0;
    return n.lowest_nonzero().sign() * d.lowest_nonzero().sign();
}

std::string Infimum::where_str() const {
    switch (where) {
        case Where::lower_end: return attained ? "lower-end" : "limit-at-lower-end";
        case Where::upper_end: return attained ? "upper-end" : "limit-at-upper-end";
        default: return "interior";
    }
}

Infimum infimum_on(const RationalFn& f, const Domain& dom) {
    Domain inner = dom.interior();
    Infimum minus_inf;
    minus_inf.minus_infinity = true;
    minus_inf.exact = true;
    std::vector<Infimum> cands;
    bool exact_mode = f.is_exact();

    // interior poles
    if (f.den().degree() >= 1) {
        for (auto& r : isolate_real_roots(f.den(), inner)) {
            if (!r.value.is_rational()) r.value.refine(isolation_width() / Scalar(1000));
            Scalar p = r.value.midpoint();
            if (r.value.is_rational()) {
                if (side_sign(f, p, -1) < 0 || side_sign(f, p, +1) < 0) return minus_inf;
            } else {
                // numerator sign near an irrational pole, on both sides of the isolating interval
                if (f.eval(r.value.lo()).sign() < 0 || f.eval(r.value.hi()).sign() < 0) return minus_inf;
            }
        }
    }

    // ends
    auto end_candidate = [&](const Bound& b, bool closed, Infimum::Where where) -> std::optional<Infimum> {
        Infimum c;
        c.where = where;
        if (b.is_finite()) {
            int side = where == Infimum::Where::lower_end ? +1 : -1;
            if (f.den().eval(b.value).is_zero()) {
                if (side_sign(f, b.value, side) < 0) return minus_inf;
                return std::nullopt;
            }
            c.value = f.eval(b.value);
            c.attained = closed;
            if (closed) c.location = AlgebraicReal::rational(b.value);
            return c;
        }
        if (f.is_zero()) {
            c.value = Scalar(0);
            return c;
        }
        int d = f.growth_degree();
        if (d < 0) {
            c.value = exact_mode ? Scalar(0) : Scalar::from_double(0.0);
            return c;
        }
        if (d == 0) {
            c.value = f.leading_ratio();
            return c;
        }
        int s = f.leading_ratio().sign();
        if (b.kind == Bound::Kind::neg_infinity && (d % 2)) s = -s;
        if (s < 0) return minus_inf;
        return std::nullopt;
    };
    for (auto [b, closed, w] : {std::tuple{dom.lower, dom.closed_lower, Infimum::Where::lower_end},
                                std::tuple{dom.upper, dom.closed_upper, Infimum::Where::upper_end}}) {
        auto c = end_candidate(b, closed, w);
        if (!c) continue;
        if (c->minus_infinity) return *c;
        cands.push_back(*c);
    }

    // critical points
    RationalFn df = f.derivative();
    if (df.is_zero()) {
        Infimum c;
        c.value = f.eval(dom.sample());
        c.attained = true;
        c.location = AlgebraicReal::rational(dom.sample());
        return c;
    }
    for (auto& r : isolate_real_roots(df.num(), inner)) {
        if (r.value.sign_of(f.den()) == 0) continue;
        Infimum c;
        c.attained = true;
        c.where = Infimum::Where::interior;
        if (r.value.is_rational()) {
            c.value = f.eval(*r.value.exact());
        } else if (exact_mode) {
            c.value = f.eval(r.value.midpoint());
            c.exact = false;
        } else {
            Scalar w = Scalar::from_double(1e-6 * std::max(1.0, std::fabs(r.value.approx())));
            Scalar a = r.value.lo() - w, b = r.value.hi() + w;
            if (dom.lower.is_finite()) a = max(a, dom.lower.value);
            if (dom.upper.is_finite()) b = min(b, dom.upper.value);
            Scalar x = golden_section_min(f, a, b, 1e-10);
            c.value = min(f.eval(x), f.eval(r.value.midpoint()));
            c.exact = false;
        }
        c.location = r.value;
        cands.push_back(c);
    }
    if (cands.empty()) throw InvariantBreach("infimum has no candidates");

    auto value_less = [](const Infimum& a, const Infimum& b) {
        if (a.exact && b.exact) return a.value < b.value;
        double x = a.value.to_double(), y = b.value.to_double();
        double tol = 1e-20 * std::max(1.0, std::max(std::fabs(x), std::fabs(y)));
        if (!a.value.is_exact() || !b.value.is_exact()) tol = std::max(tol, 1e-12 * std::max(1.0, std::fabs(x)));
        return x < y - tol;
    };
    Infimum best = cands.front();
    for (std::size_t i = 1; i < cands.size(); ++i) {
        const Infimum& c = cands[i];
        if (value_less(c, best)) best = c;
        else if (!value_less(best, c) && c.attained && !best.attained) best = c;
    }
    return best;
}

}  // namespace momentum
