#include "momentum/vector_bundle.hpp"

#include "momentum/error.hpp"

namespace momentum {

namespace {

// 1 - (t - t0) beta
Poly block_factor(const Block& b, const Scalar& t0) { return Poly::linear(Scalar(1) + t0 * b.beta, -b.beta); }

Poly vertical_factor(int n, const Scalar& t0) {
    return Poly::monomial((Scalar(1) / t0).pow(static_cast<unsigned>(n - 1)), n - 1);
}

}  // namespace

VectorBundleData::VectorBundleData(int rank, std::vector<Block> blocks, Scalar tau0)
    : rank_(rank), blocks_(merge_blocks(std::move(blocks))), tau0_(std::move(tau0)) {
    if (rank_ < 2) throw InvalidInput("vector bundle rank must be at least 2");
    if (tau0_.sign() <= 0) throw InvalidInput("background parameter tau0 must be positive");
    for (const auto& b : blocks_) {
        if (b.multiplicity < 1) throw InvalidInput("block multiplicity must be positive");
        if (b.beta.sign() > 0) throw InvalidInput("horizontal beta " + b.beta.str() + " is positive");
        if ((Scalar(1) + tau0_ * b.beta).sign() <= 0)
            throw InvalidInput("horizontal beta " + b.beta.str() + " violates 1 + tau0 beta > 0");
    }
}

int VectorBundleData::base_dim() const {
    int d = 0;
    for (const auto& b : blocks_) d += b.multiplicity;
    return d;
}

bool VectorBundleData::is_exact() const {
    if (!tau0_.is_exact()) return false;
    for (const auto& b : blocks_)
        if (!b.beta.is_exact() || !b.ricci_trace.is_exact()) return false;
    return true;
}

Poly VectorBundleData::q() const {
    Poly out = vertical_factor(rank_, tau0_);
    for (const auto& b : blocks_) out = out * block_factor(b, tau0_).pow(b.multiplicity);
    return out;
}

Poly VectorBundleData::rq() const {
    Scalar nn(rank_ * (rank_ - 1));
    Poly horiz(Scalar(1));
    for (const auto& b : blocks_) horiz = horiz * block_factor(b, tau0_).pow(b.multiplicity);
    // n(n-1)/t times the vertical factor
    Poly out = nn * Poly::monomial((Scalar(1) / tau0_).pow(static_cast<unsigned>(rank_ - 1)), rank_ - 2) * horiz;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        Poly term = blocks_[i].ricci_trace * vertical_factor(rank_, tau0_);
        for (size_t j = 0; j < blocks_.size(); ++j) {
            int e = blocks_[j].multiplicity - (i == j ? 1 : 0);
            term = term * block_factor(blocks_[j], tau0_).pow(e);
        }
        out = out + term;
    }
    return out;
}

RationalFn VectorBundleData::r() const { return RationalFn(rq(), q()); }

Scalar VectorBundleData::r_infinity() const {
    Scalar s(0);
    for (const auto& b : blocks_)
        if (b.beta.is_zero()) s += b.ricci_trace;
    return s;
}

VectorBundleData VectorBundleData::rebase(const Scalar& t1) const {
    std::vector<Block> out;
    for (const auto& b : blocks_) {
        Scalar f = Scalar(1) - (t1 - tau0_) * b.beta;
        if (f.sign() <= 0) throw InvalidInput("background t = " + t1.str() + " is degenerate for this bundle");
        out.push_back({b.beta / f, b.multiplicity, b.ricci_trace / f});
    }
    return VectorBundleData(rank_, out, t1);
}

HorizontalData VectorBundleData::as_line_bundle() const {
    std::vector<Block> blocks = blocks_;
    blocks.push_back({Scalar(-1) / tau0_, rank_ - 1, Scalar(rank_ * (rank_ - 1)) / tau0_});
    Domain iv = Domain::open(Bound::at(-tau0_), Bound::pos_inf());
    return HorizontalData(merge_blocks(blocks), iv);
}

VectorBundleData make_stable_curve_vb(int g, int n, const Scalar& k, const Scalar& sigma_d) {
    if (g < 2) throw InvalidInput("genus must be at least 2");
    if (n < 2) throw InvalidInput("rank must be at least 2");
    if (k.sign() > 0) throw InvalidInput("degree must be non-positive");
    Scalar kn = k / Scalar(n);
    Scalar s = sigma_d - kn;
    if (sigma_d.sign() <= 0) throw InvalidInput("base scale must be positive");
    return VectorBundleData(n, {{kn / s, 1, Scalar(2 - 2 * g) / s}});
}

RationalFn csc_profile_c(const VectorBundleData& v, const Scalar& c) {
    Poly q = v.q();
    Poly phiq = Scalar(2) * (v.rq() - c * q).double_integral_from(Scalar(0));
    RationalFn phi(phiq, q);
    if (phi.is_exact()) {
        if (!phi.eval(Scalar(0)).is_zero() || !(phi.derivative().eval(Scalar(0)) == Scalar(2)))
            throw InvariantBreach("vector bundle profile does not have jets (0, 2)");
        if (!(scalar_curvature_vb(v, phi) == RationalFn(c)))
            throw InvariantBreach("vector bundle profile failed its self-check");
    }
    return phi;
}

RationalFn scalar_curvature_vb(const VectorBundleData& v, const RationalFn& phi) {
    Poly q = v.q();
    RationalFn phiq = phi * RationalFn(q);
    return v.r() - phiq.derivative().derivative() / RationalFn(Scalar(2) * q);
}

Scalar sigma_residue(const VectorBundleData& v, const RationalFn& phi) {
    RationalFn t_sigma = RationalFn(Poly::x()) * scalar_curvature_vb(v, phi);
    if (t_sigma.den().eval(Scalar(0)).is_zero()) throw InvalidInput("scalar curvature has a pole of order > 1 at 0");
    return t_sigma.eval(Scalar(0));
}

CscSystem csc_system_vb(const VectorBundleData& v) {
    CscSystem s;
    s.q = v.q();
    s.r_inf = v.r_infinity();
    s.r0q = v.rq() - s.r_inf * s.q;
    s.lin = Scalar(0);
    s.lower_bound = s.r_inf;
    for (const auto& b : v.blocks())
        if (!b.beta.is_zero()) s.lower_bound += min(Scalar(0), b.ricci_trace / (Scalar(1) + v.tau0() * b.beta));
    s.dimension = v.base_dim() + v.rank() - 1;
    s.label = "C";
    return s;
}

ThresholdAnalysis c_threshold_vb(const VectorBundleData& v) { return c_threshold(csc_system_vb(v)); }

ExceptionalSet exceptional_curvatures_vb(const VectorBundleData& v) { return exceptional_curvatures(csc_system_vb(v)); }

VbClassification classify_csc_vb(const VectorBundleData& v, const Scalar& c) {
    VbClassification out;
    out.base = classify_csc(csc_system_vb(v), c);
    const CscClassification& b = out.base;
    if (!b.valid) {
        out.habitat = "invalid";
    } else if (b.positive_on_half_line) {
        out.complete = b.upper.complete;
        if (b.upper.kind == EndpointKind::hyperbolic) out.habitat = "Delta(E)";
        else if (b.upper.complete) out.habitat = "E";
        else out.habitat = "incomplete";
    } else if (b.upper.kind == EndpointKind::finite_area_cusp) {
        out.habitat = "E";
        out.complete = true;
    } else if (b.upper.kind == EndpointKind::smooth_extension) {
        out.habitat = "P(E+O)";
        out.complete = true;
    } else {
        out.habitat = "incomplete";
    }
    if (!b.phi.is_zero()) out.base.einstein = einstein_check_vb(v, b.phi);
    return out;
}

EinsteinVerdict einstein_check_vb(const VectorBundleData& v, const RationalFn& phi) {
    EinsteinVerdict out;
    Poly q = v.q();
    RationalFn u = (phi * RationalFn(q)).derivative() / RationalFn(Scalar(2) * q);
    if (!u.is_polynomial() || u.num().degree() > 1) {
        out.failure = "(phi Q)'/2Q is not affine in tau";
        return out;
    }
    Poly up = (Scalar(1) / u.den().leading()) * u.num();
    Scalar n(v.rank());
    if (!(up.coeff(0) == n)) {
        out.failure = "(phi Q)'/2Q at 0 is " + up.coeff(0).str() + ", not the rank";
        return out;
    }
    Scalar lambda = -up.coeff(1);
    for (const auto& b : v.blocks()) {
        Scalar k(b.multiplicity);
        if (!(b.ricci_trace + n * b.beta * k == lambda * (Scalar(1) + v.tau0() * b.beta) * k)) {
            out.failure = "block beta = " + b.beta.str() + " violates r + n beta k = lambda (1 + tau0 beta) k (lambda = " +
                          lambda.str() + ")";
            return out;
        }
    }
    // the vertical block, n/t0 + n (-1/t0) = lambda * 0, holds for every lambda
    out.einstein = true;
    out.lambda = lambda;
    return out;
}

RationalFn einstein_profile_vb(const VectorBundleData& v, const Scalar& lambda) {
    Poly q = v.q();
    Poly integrand = Poly::linear(Scalar(v.rank()), -lambda) * q;
    RationalFn phi(Scalar(2) * integrand.antiderivative_from(Scalar(0)), q);
    EinsteinVerdict e = einstein_check_vb(v, phi);
    if (!e.einstein) throw InvalidInput("bundle data is not Einstein for lambda = " + lambda.str() + ": " + e.failure);
    return phi;
}

}  // namespace momentum
