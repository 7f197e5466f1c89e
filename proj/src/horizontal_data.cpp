#include "momentum/horizontal_data.hpp"

#include "momentum/error.hpp"

#include <algorithm>

namespace momentum {

namespace {

Poly factor(const Block& b) { return Poly::linear(Scalar(1), -b.beta); }

// sign of 1 - a*beta required at a finite end
bool end_ok(const Scalar& a, const Scalar& beta, bool closed) {
    int s = (Scalar(1) - a * beta).sign();
    return closed ? s > 0 : s >= 0;
}

}  // namespace

std::vector<Block> merge_blocks(std::vector<Block> blocks) {
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.beta < b.beta; });
    std::vector<Block> out;
    for (auto& b : blocks) {
        if (!out.empty() && out.back().beta == b.beta) {
            out.back().multiplicity += b.multiplicity;
            out.back().ricci_trace += b.ricci_trace;
        } else {
            out.push_back(b);
        }
    }
    return out;
}

std::string compatibility_failure(const std::vector<Block>& blocks, const Domain& iv) {
    for (const auto& b : blocks) {
        if (iv.lower.is_finite() && !end_ok(iv.lower.value, b.beta, iv.closed_lower))
            return "1 - tau*beta fails to be positive at tau = " + iv.lower.value.str() + " for beta = " + b.beta.str();
        if (iv.upper.is_finite() && !end_ok(iv.upper.value, b.beta, iv.closed_upper))
            return "1 - tau*beta fails to be positive at tau = " + iv.upper.value.str() + " for beta = " + b.beta.str();
        if (iv.upper.kind == Bound::Kind::pos_infinity && b.beta.sign() > 0)
            return "positive beta " + b.beta.str() + " is incompatible with an unbounded interval";
        if (iv.lower.kind == Bound::Kind::neg_infinity && b.beta.sign() < 0)
            return "negative beta " + b.beta.str() + " is incompatible with an interval unbounded below";
    }
    return {};
}

HorizontalData::HorizontalData(std::vector<Block> blocks, Domain interval) : interval_(std::move(interval)) {
    for (const auto& b : blocks)
        if (b.multiplicity < 1) throw InvalidInput("block multiplicity must be at least 1");
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.beta < b.beta; });
    for (std::size_t i = 1; i < blocks.size(); ++i)
        if (blocks[i].beta == blocks[i - 1].beta) throw InvalidInput("duplicate beta " + blocks[i].beta.str());
    blocks_ = std::move(blocks);
    const auto& lo = interval_.lower;
    const auto& hi = interval_.upper;
    if (lo.kind == Bound::Kind::pos_infinity || hi.kind == Bound::Kind::neg_infinity)
        throw InvalidInput("empty momentum interval");
    if (lo.is_finite() && hi.is_finite() && !(lo.value < hi.value)) throw InvalidInput("empty momentum interval");
    auto why = compatibility_failure(blocks_, interval_);
    if (!why.empty()) throw InvalidInput("incompatible data: " + why);
}

HorizontalData HorizontalData::point(Domain interval) { return HorizontalData({}, std::move(interval)); }

int HorizontalData::dimension() const {
    int m = 0;
    for (const auto& b : blocks_) m += b.multiplicity;
    return m;
}

bool HorizontalData::is_exact() const {
    for (const auto& b : blocks_)
        if (!b.beta.is_exact() || !b.ricci_trace.is_exact()) return false;
    return true;
}

Poly HorizontalData::q() const {
    Poly q(1);
    for (const auto& b : blocks_) q = q * factor(b).pow(static_cast<unsigned>(b.multiplicity));
    return q;
}

Poly HorizontalData::rq() const {
    Poly out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        Poly term(blocks_[i].ricci_trace);
        for (std::size_t j = 0; j < blocks_.size(); ++j) {
            unsigned e = static_cast<unsigned>(blocks_[j].multiplicity) - (i == j ? 1u : 0u);
            term = term * factor(blocks_[j]).pow(e);
        }
        out += term;
    }
    return out;
}

RationalFn HorizontalData::r() const { return RationalFn(rq(), q()); }

Scalar HorizontalData::r_infinity() const {
    Scalar s(0);
    for (const auto& b : blocks_)
        if (b.beta.is_zero()) s += b.ricci_trace;
    return s;
}

bool HorizontalData::all_beta_zero() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.beta.is_zero(); });
}

bool HorizontalData::has_beta_zero() const {
    return std::any_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.beta.is_zero(); });
}

HorizontalData product(const HorizontalData& a, const HorizontalData& b) {
    std::vector<Block> all = a.blocks();
    all.insert(all.end(), b.blocks().begin(), b.blocks().end());
    const Domain& x = a.interval();
    const Domain& y = b.interval();
    // compare bounds as extended reals
    auto less = [](const Bound& u, const Bound& v) {
        auto rank = [](const Bound& w) { return w.kind == Bound::Kind::neg_infinity ? 0 : w.is_finite() ? 1 : 2; };
        if (rank(u) != rank(v)) return rank(u) < rank(v);
        return u.is_finite() && u.value < v.value;
    };
    Domain iv = x;
    if (less(x.lower, y.lower)) {
        iv.lower = y.lower;
        iv.closed_lower = y.closed_lower;
    } else if (!less(y.lower, x.lower)) {
        iv.closed_lower = x.closed_lower && y.closed_lower;
    }
    if (less(y.upper, x.upper)) {
        iv.upper = y.upper;
        iv.closed_upper = y.closed_upper;
    } else if (!less(x.upper, y.upper)) {
        iv.closed_upper = x.closed_upper && y.closed_upper;
    }
    return HorizontalData(merge_blocks(all), iv);
}

HorizontalData translate(const HorizontalData& d, const Scalar& a) {
    std::vector<Block> out;
    for (const auto& b : d.blocks()) {
        Scalar f = Scalar(1) - a * b.beta;
        if (f.sign() <= 0) throw InvalidInput("translation by " + a.str() + " leaves the compatible range");
        out.push_back({b.beta / f, b.multiplicity, b.ricci_trace / f});
    }
    Domain iv = d.interval();
    if (iv.lower.is_finite()) iv.lower.value -= a;
    if (iv.upper.is_finite()) iv.upper.value -= a;
    return HorizontalData(out, iv);
}

HorizontalData invert(const HorizontalData& d) {
    std::vector<Block> out;
    for (const auto& b : d.blocks()) out.push_back({-b.beta, b.multiplicity, b.ricci_trace});
    const Domain& iv = d.interval();
    auto flip = [](const Bound& b) {
        switch (b.kind) {
            case Bound::Kind::pos_infinity: return Bound::neg_inf();
            case Bound::Kind::neg_infinity: return Bound::pos_inf();
            default: return Bound::at(-b.value);
        }
    };
    return HorizontalData(out, Domain{flip(iv.upper), flip(iv.lower), iv.closed_upper, iv.closed_lower});
}

HorizontalData make_atom(int m, const Scalar& sigma, const Scalar& k, const Scalar& alpha, AtomReading reading) {
    if (m < 1) throw InvalidInput("atom dimension must be positive");
    if (alpha.sign() <= 0) throw InvalidInput("atom index alpha must be positive");
    Scalar ratio = k / alpha;
    if (reading == AtomReading::corrected) {
        if (ratio.sign() < 0) throw InvalidInput("atom with k < 0 is incompatible with [0, inf)");
        return HorizontalData({{-ratio, m, sigma}}, HorizontalData::half_line());
    }
    // literal sign: the factor (1 - (k/alpha) t) bounds the interval
    Domain iv = HorizontalData::half_line();
    if (ratio.sign() > 0) iv.upper = Bound::at(Scalar(1) / ratio);
    else if (ratio.sign() < 0) throw InvalidInput("literal atom reading needs k > 0");
    return HorizontalData({{ratio, m, sigma}}, iv);
}

HorizontalData make_stable_curve(int g, int n, const Scalar& k, const Scalar& s_c, const Scalar& s_f) {
    if (g < 2) throw InvalidInput("stable-curve data needs genus at least 2");
    if (n < 1) throw InvalidInput("rank must be positive");
    if (s_c.sign() <= 0 || s_f.sign() <= 0) throw InvalidInput("scales must be positive");
    if (k.sign() > 0) throw InvalidInput("degree k must be non-positive");
    std::vector<Block> blocks{{k / Scalar(n) / s_c, 1, Scalar(2 - 2 * g) / s_c}};
    if (n > 1) blocks.push_back({Scalar(-1) / s_f, n - 1, Scalar(n * (n - 1)) / s_f});
    return HorizontalData(merge_blocks(blocks), HorizontalData::half_line());
}

HorizontalData make_flat_plane(const Scalar& beta) {
    if (beta.sign() >= 0) throw InvalidInput("flat plane needs beta < 0");
    return HorizontalData({{beta, 1, Scalar(0)}}, HorizontalData::half_line());
}

namespace families {

HorizontalData d1(const Scalar& k) {
    if (k.sign() < 0) throw InvalidInput("D1 family needs k >= 0");
    return HorizontalData({{-k / Scalar(2), 1, Scalar(1)}}, HorizontalData::half_line());
}

HorizontalData d2(const Scalar& beta) { return make_flat_plane(beta); }

HorizontalData d3(const Scalar& beta, const Scalar& lambda) {
    if (beta.sign() > 0) throw InvalidInput("D3 family needs beta <= 0");
    return HorizontalData({{beta, 1, lambda}}, HorizontalData::half_line());
}

}  // namespace families

}  // namespace momentum
