#pragma once

#include "momentum/horizontal_data.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace momentum {

// A: smooth zero section at t = 0 (phi(0) = 0, phi'(0) = 2).
// B: cusp at t = 0 (phi(0) = phi'(0) = 0).
enum class Variant { A, B };
std::string to_string(Variant v);

// phi with prescribed scalar curvature sigma and jets phi(0), phi'(0).
RationalFn solve_prescribed(const HorizontalData& d, const Poly& sigma, const Scalar& phi0, const Scalar& dphi0);

RationalFn scalar_curvature(const HorizontalData& d, const RationalFn& phi);

// Constant scalar curvature c; the result is checked to have scalar curvature exactly c.
RationalFn csc_profile(const HorizontalData& d, const Scalar& c, Variant v);

RationalFn einstein_profile(const HorizontalData& d, const Scalar& lambda, Variant v);

struct EinsteinVerdict {
    bool einstein = false;
    Scalar lambda;
    std::string failure;
};
EinsteinVerdict is_einstein(const HorizontalData& d, const RationalFn& phi);

// (R - c) Q - [(1 - lambda t) Q]' == 0 with c = lambda (m + 1).
bool einstein_identity_check(const HorizontalData& d, const Scalar& lambda);
// (R - c) Q + lambda (t Q)' == 0 with c = lambda (m + 1).
bool einstein_identity_check_b(const HorizontalData& d, const Scalar& lambda);

struct RicciComponents {
    std::vector<RationalFn> horizontal;  // per block, trace over the eigenbundle
    RationalFn vertical;
    RationalFn u;  // (phi Q)' / 2Q, the coefficient of the curvature form
};
RicciComponents ricci_components(const HorizontalData& d, const RationalFn& phi);

// Laplacian of a function of t: (1/2Q) (phi Q psi')'.
RationalFn laplacian_invariant(const HorizontalData& d, const RationalFn& phi, const RationalFn& psi);
RationalFn laplacian_from_derivative(const HorizontalData& d, const RationalFn& phi, const RationalFn& dpsi);

struct ProfileDiagnostic {
    std::string reason;
    std::optional<AlgebraicReal> witness;
};

class Profile {
public:
    const HorizontalData& data() const { return data_; }
    const RationalFn& phi() const { return phi_; }
    Poly phi_q() const;

    // Validates positivity on the interior and a pole-free closed domain.
    static std::variant<Profile, ProfileDiagnostic> make(const HorizontalData& d, const RationalFn& phi);

private:
    Profile(HorizontalData d, RationalFn phi) : data_(std::move(d)), phi_(std::move(phi)) {}
    HorizontalData data_;
    RationalFn phi_;
};

}  // namespace momentum
