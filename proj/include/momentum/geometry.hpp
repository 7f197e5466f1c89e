#pragma once

#include "momentum/roots.hpp"

#include <optional>
#include <string>

namespace momentum {

enum class EndpointKind {
    incomplete,          // finite end, phi > 0
    smooth_extension,    // simple zero, |phi'| = 2
    cone,                // simple zero, |phi'| != 2
    finite_area_cusp,    // zero of order >= 2
    infinite_area_cusp,  // phi -> 0 at infinity
    cylindrical,         // phi -> const
    planar_conical,      // linear growth
    hyperbolic,          // quadratic growth
    incomplete_growth,   // growth of degree >= 3
};
std::string to_string(EndpointKind k);

struct EndpointSpec {
    int side = -1;  // -1 lower end, +1 upper end
    std::optional<AlgebraicReal> at;  // empty for an infinite end

    static EndpointSpec lower(const Bound& b);
    static EndpointSpec upper(const Bound& b);
    static EndpointSpec finite(int side, AlgebraicReal a) { return {side, std::move(a)}; }
    bool is_finite() const { return at.has_value(); }
};

struct EndpointClass {
    EndpointKind kind = EndpointKind::incomplete;
    bool finite_end = true;
    int order = 0;              // vanishing order (finite end) or growth degree (infinite end)
    std::optional<Scalar> derivative;  // phi' at a simple zero; exact when the zero is rational
    bool derivative_exact = false;
    double cone_angle_over_pi = 0;
    bool t_divergent = false;    // integral of 1/phi
    bool distance_finite = true; // integral of 1/sqrt(phi)
    bool area_finite = true;
    bool complete = false;
    bool adds_point = false;     // fibre closes up with a smooth point
};

EndpointClass classify_endpoint(const RationalFn& phi, EndpointSpec end);

struct Habitat {
    std::string kind;       // Lhat, L, Lx, Delta(L), Delta^x(L), annulus, incomplete-slab
    std::string fibre;      // P1, C, C^x, disc, punctured-disc, annulus, slab
    std::string r_range;    // normalized image of the radial coordinate
    bool dual = false;      // the attached or punctured end sits at r = infinity
};

Habitat habitat_of(const EndpointClass& lower, const EndpointClass& upper);

// sup |phi'| <= 2 on the domain.
bool embeds_as_revolution(const RationalFn& phi, const Domain& dom);

// p >= 0 on the domain.
bool is_nonnegative_on(const Poly& p, const Domain& dom);

}  // namespace momentum
