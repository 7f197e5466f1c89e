#include "momentum/profile.hpp"

#include "momentum/error.hpp"

namespace momentum {

std::string to_string(Variant v) { return v == Variant::A ? "A" : "B"; }

RationalFn solve_prescribed(const HorizontalData& d, const Poly& sigma, const Scalar& phi0, const Scalar& dphi0) {
    Poly q = d.q();
    Poly integrand = d.rq() - sigma * q;
    Poly phi_q = Poly::linear(phi0, dphi0 + phi0 * q.coeff(1)) + Scalar(2) * integrand.double_integral_from(Scalar(0));
    return RationalFn(phi_q, q);
}

RationalFn scalar_curvature(const HorizontalData& d, const RationalFn& phi) {
    Poly q = d.q();
    RationalFn phi_q = phi * RationalFn(q);
    return d.r() - phi_q.derivative().derivative() / RationalFn(Scalar(2) * q);
}

RationalFn csc_profile(const HorizontalData& d, const Scalar& c, Variant v) {
    Scalar dphi0 = v == Variant::A ? Scalar(2) : Scalar(0);
    RationalFn phi = solve_prescribed(d, Poly(c), Scalar(0), dphi0);
    if (phi.is_exact() && !(scalar_curvature(d, phi) == RationalFn(c)))
        throw InvariantBreach("constant scalar curvature profile failed its self-check");
    return phi;
}

RationalFn einstein_profile(const HorizontalData& d, const Scalar& lambda, Variant v) {
    Poly q = d.q();
    Poly integrand;
    if (v == Variant::A) {
        if (lambda.sign() > 0) throw InvalidInput("Einstein profile of type A needs lambda <= 0");
        integrand = Poly::linear(Scalar(1), -lambda) * q;
    } else {
        if (lambda.sign() >= 0) throw InvalidInput("Einstein profile of type B needs lambda < 0");
        integrand = Poly::linear(Scalar(0), -lambda) * q;
    }
    RationalFn phi(Scalar(2) * integrand.antiderivative_from(Scalar(0)), q);
    EinsteinVerdict e = is_einstein(d, phi);
    if (!e.einstein) throw InvalidInput("data is not Einstein for lambda = " + lambda.str() + ": " + e.failure);
    return phi;
}

EinsteinVerdict is_einstein(const HorizontalData& d, const RationalFn& phi) {
    EinsteinVerdict out;
    Poly q = d.q();
    RationalFn u = (phi * RationalFn(q)).derivative() / RationalFn(Scalar(2) * q);
    if (!u.is_polynomial() || u.num().degree() > 1) {
        out.failure = "(phi Q)'/2Q is not affine in tau";
        return out;
    }
    Poly up = (Scalar(1) / u.den().leading()) * u.num();
    Scalar u0 = up.coeff(0), u1 = up.coeff(1);
    Scalar lambda = -u1;
    for (const auto& b : d.blocks()) {
        Scalar k(b.multiplicity);
        if (!(b.ricci_trace + u0 * k * b.beta == lambda * k)) {
            out.failure = "block beta = " + b.beta.str() + " violates r + u0 k beta = lambda k (u0 = " + u0.str() +
                          ", lambda = " + lambda.str() + ")";
            return out;
        }
    }
    out.einstein = true;
    out.lambda = lambda;
    return out;
}

bool einstein_identity_check(const HorizontalData& d, const Scalar& lambda) {
    Poly q = d.q();
    Scalar c = lambda * Scalar(d.dimension() + 1);
    Poly lhs = d.rq() - c * q - (Poly::linear(Scalar(1), -lambda) * q).derivative();
    return lhs.is_zero();
}

bool einstein_identity_check_b(const HorizontalData& d, const Scalar& lambda) {
    Poly q = d.q();
    Scalar c = lambda * Scalar(d.dimension() + 1);
    Poly lhs = d.rq() - c * q + lambda * (Poly::x() * q).derivative();
    return lhs.is_zero();
}

RicciComponents ricci_components(const HorizontalData& d, const RationalFn& phi) {
    Poly q = d.q();
    RationalFn dphiq = (phi * RationalFn(q)).derivative();
    RicciComponents rc;
    rc.u = dphiq / RationalFn(Scalar(2) * q);
    rc.vertical = RationalFn(Scalar(-1, 2)) * (dphiq / RationalFn(q)).derivative();
    for (const auto& b : d.blocks()) {
        RationalFn top = RationalFn(b.ricci_trace) + rc.u * RationalFn(Scalar(b.multiplicity) * b.beta);
        rc.horizontal.push_back(top / RationalFn(Poly::linear(Scalar(1), -b.beta)));
    }
    return rc;
}

RationalFn laplacian_from_derivative(const HorizontalData& d, const RationalFn& phi, const RationalFn& dpsi) {
    Poly q = d.q();
    return (phi * RationalFn(q) * dpsi).derivative() / RationalFn(Scalar(2) * q);
}

RationalFn laplacian_invariant(const HorizontalData& d, const RationalFn& phi, const RationalFn& psi) {
    return laplacian_from_derivative(d, phi, psi.derivative());
}

Poly Profile::phi_q() const {
    RationalFn pq = phi_ * RationalFn(data_.q());
    if (!pq.is_polynomial()) throw InvariantBreach("phi Q is not polynomial");
    return (Scalar(1) / pq.den().leading()) * pq.num();
}

std::variant<Profile, ProfileDiagnostic> Profile::make(const HorizontalData& d, const RationalFn& phi) {
    const Domain& iv = d.interval();
    Domain closed = iv;
    closed.closed_lower = closed.closed_upper = true;
    if (phi.den().degree() >= 1) {
        auto poles = isolate_real_roots(phi.den(), closed);
        if (!poles.empty()) return ProfileDiagnostic{"denominator vanishes on the closed domain", poles.front().value};
    }
    if (phi.is_zero()) return ProfileDiagnostic{"profile is identically zero", std::nullopt};
    Poly sign_poly = phi.num() * phi.den();
    auto roots = isolate_real_roots(sign_poly, iv.interior());
    if (!roots.empty()) return ProfileDiagnostic{"profile vanishes inside the interval", roots.front().value};
    if (sign_poly.eval(iv.sample()).sign() <= 0)
        return ProfileDiagnostic{"profile is negative inside the interval", std::nullopt};
    return Profile(d, phi);
}

}  // namespace momentum
