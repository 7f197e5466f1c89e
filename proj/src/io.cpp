#include "momentum/io.hpp"

#include "momentum/error.hpp"

namespace momentum {

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw InvalidInput(where + " must be an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw InvalidInput("unknown field '" + k + "' in " + where);
}

Scalar scalar_from_json(const Json& j, const NumericMode& mode, const std::string& what) {
    std::string s;
    if (j.is_string()) s = j.get<std::string>();
    else if (j.is_number_integer()) s = std::to_string(j.get<long long>());
    else if (j.is_number_float() && !mode.exact) return Scalar::from_double(j.get<double>(), mode.epsilon);
    else throw InvalidInput(what + " must be a string \"p/q\" or decimal");
    try {
        return mode.exact ? Scalar::parse(s) : Scalar::parse_float(s, mode.epsilon);
    } catch (const InvalidInput& e) {
        throw InvalidInput(what + ": " + e.what());
    }
}

Json to_json(const Scalar& s) { return s.str(); }

Bound bound_from_json(const Json& j, const NumericMode& mode, const std::string& what) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return Bound::pos_inf();
        if (s == "-inf") return Bound::neg_inf();
    }
    return Bound::at(scalar_from_json(j, mode, what));
}

Json to_json(const Bound& b) {
    if (b.kind == Bound::Kind::pos_infinity) return "inf";
    if (b.kind == Bound::Kind::neg_infinity) return "-inf";
    return to_json(b.value);
}

Domain domain_from_json(const Json& j, const NumericMode& mode) {
    reject_unknown(j, {"lower", "upper", "closed_lower", "closed_upper"}, "interval");
    Domain d;
    if (j.contains("lower")) d.lower = bound_from_json(j["lower"], mode, "interval.lower");
    if (j.contains("upper")) d.upper = bound_from_json(j["upper"], mode, "interval.upper");
    d.closed_lower = j.value("closed_lower", false);
    d.closed_upper = j.value("closed_upper", false);
    return d;
}

Json to_json(const Domain& d) {
    Json j;
    j["lower"] = to_json(d.lower);
    j["upper"] = to_json(d.upper);
    j["closed_lower"] = d.closed_lower && d.lower.is_finite();
    j["closed_upper"] = d.closed_upper && d.upper.is_finite();
    return j;
}

Block block_from_json(const Json& j, const NumericMode& mode) {
    reject_unknown(j, {"beta", "multiplicity", "ricci_trace", "horizontal"}, "block");
    if (!j.contains("beta") || !j.contains("ricci_trace")) throw InvalidInput("block needs beta and ricci_trace");
    Block b;
    b.beta = scalar_from_json(j["beta"], mode, "block.beta");
    b.ricci_trace = scalar_from_json(j["ricci_trace"], mode, "block.ricci_trace");
    const Json& m = j.contains("multiplicity") ? j["multiplicity"] : Json(1);
    if (!m.is_number_integer() || m.get<long long>() < 1) throw InvalidInput("block.multiplicity must be a positive integer");
    b.multiplicity = static_cast<int>(m.get<long long>());
    if (j.contains("horizontal") && !j["horizontal"].is_boolean()) throw InvalidInput("block.horizontal must be boolean");
    if (j.value("horizontal", true) == false) throw InvalidInput("vertical blocks are implicit; list horizontal blocks only");
    return b;
}

Json to_json(const Block& b) {
    Json j;
    j["beta"] = to_json(b.beta);
    j["multiplicity"] = b.multiplicity;
    j["ricci_trace"] = to_json(b.ricci_trace);
    return j;
}

namespace {

std::vector<Block> blocks_from(const Json& j, const NumericMode& mode) {
    std::vector<Block> out;
    if (!j.contains("blocks")) return out;
    if (!j["blocks"].is_array()) throw InvalidInput("blocks must be an array");
    for (const auto& b : j["blocks"]) out.push_back(block_from_json(b, mode));
    return out;
}

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) throw InvalidInput(std::string("data.") + key + " must be an integer");
    return static_cast<int>(j[key].get<long long>());
}

}  // namespace

AnyData data_from_json(const Json& j, const NumericMode& mode) {
    if (!j.is_object()) throw InvalidInput("data must be an object");
    std::string kind = j.value("kind", std::string("horizontal"));
    if (kind == "horizontal") {
        reject_unknown(j, {"kind", "blocks", "interval"}, "data");
        Domain iv = j.contains("interval") ? domain_from_json(j["interval"], mode) : HorizontalData::half_line();
        return HorizontalData(blocks_from(j, mode), iv);
    }
    if (kind == "point") {
        reject_unknown(j, {"kind", "interval"}, "data");
        Domain iv = j.contains("interval") ? domain_from_json(j["interval"], mode) : HorizontalData::half_line();
        return HorizontalData::point(iv);
    }
    if (kind == "family") {
        reject_unknown(j, {"kind", "family", "k", "beta", "lambda"}, "data");
        std::string f = j.value("family", std::string());
        if (f == "D1") return families::d1(scalar_from_json(j.value("k", Json()), mode, "data.k"));
        if (f == "D2") return families::d2(scalar_from_json(j.value("beta", Json()), mode, "data.beta"));
        if (f == "D3")
            return families::d3(scalar_from_json(j.value("beta", Json()), mode, "data.beta"),
                                scalar_from_json(j.value("lambda", Json()), mode, "data.lambda"));
        throw InvalidInput("unknown family '" + f + "' (D1, D2, D3)");
    }
    if (kind == "vector_bundle") {
        reject_unknown(j, {"kind", "rank", "blocks", "tau0"}, "data");
        Scalar t0 = j.contains("tau0") ? scalar_from_json(j["tau0"], mode, "data.tau0") : Scalar(1);
        return VectorBundleData(int_field(j, "rank"), blocks_from(j, mode), t0);
    }
    if (kind == "stable_curve") {
        reject_unknown(j, {"kind", "genus", "rank", "degree", "sigma_d"}, "data");
        return make_stable_curve_vb(int_field(j, "genus"), int_field(j, "rank"),
                                    scalar_from_json(j.value("degree", Json()), mode, "data.degree"),
                                    scalar_from_json(j.value("sigma_d", Json()), mode, "data.sigma_d"));
    }
    throw InvalidInput("unknown data kind '" + kind + "'");
}

Json to_json(const HorizontalData& d) {
    Json j;
    j["kind"] = "horizontal";
    j["blocks"] = Json::array();
    for (const auto& b : d.blocks()) j["blocks"].push_back(to_json(b));
    j["interval"] = to_json(d.interval());
    return j;
}

Json to_json(const VectorBundleData& v) {
    Json j;
    j["kind"] = "vector_bundle";
    j["rank"] = v.rank();
    j["blocks"] = Json::array();
    for (const auto& b : v.blocks()) j["blocks"].push_back(to_json(b));
    j["tau0"] = to_json(v.tau0());
    return j;
}

Json to_json(const AlgebraicReal& a) {
    Json j;
    j["value"] = a.str();
    j["approx"] = a.approx();
    j["rational"] = a.is_rational();
    return j;
}

Json to_json(const EndpointClass& e) {
    Json j;
    j["kind"] = to_string(e.kind);
    j["finite_end"] = e.finite_end;
    j[e.finite_end ? "vanishing_order" : "growth_degree"] = e.order;
    j["derivative"] = e.derivative ? to_json(*e.derivative) : Json();
    if (e.kind == EndpointKind::cone || e.kind == EndpointKind::smooth_extension)
        j["cone_angle_over_pi"] = e.cone_angle_over_pi;
    j["t_divergent"] = e.t_divergent;
    j["distance_finite"] = e.distance_finite;
    j["area_finite"] = e.area_finite;
    j["complete"] = e.complete;
    j["adds_point"] = e.adds_point;
    return j;
}

Json to_json(const Habitat& h) {
    Json j;
    j["kind"] = h.kind;
    j["fibre"] = h.fibre;
    j["r_range"] = h.r_range;
    j["dual"] = h.dual;
    return j;
}

Json to_json(const Infimum& m) {
    Json j;
    j["minus_infinity"] = m.minus_infinity;
    j["value"] = m.minus_infinity ? Json() : to_json(m.value);
    j["exact"] = m.exact;
    j["attained"] = m.attained;
    j["where"] = m.where_str();
    j["location"] = m.location ? to_json(*m.location) : Json();
    return j;
}

Json to_json(const ThresholdAnalysis& t) {
    Json j;
    j["c0"] = to_json(t.c0);
    j["c0_exact"] = t.c0_exact;
    j["c0_approx"] = t.c0.to_double();
    j["attained"] = t.attained;
    j["borderline_kind"] = t.borderline_kind;
    j["j_closed"] = t.j_closed;
    j["borderline_zero"] = t.borderline_zero ? to_json(*t.borderline_zero) : Json();
    j["borderline_profile_zero"] = t.borderline_profile_zero;
    j["flags"] = t.flags;
    j["infimum"] = to_json(t.infimum);
    return j;
}

Json to_json(const EinsteinVerdict& v) {
    Json j;
    j["einstein"] = v.einstein;
    j["lambda"] = v.einstein ? to_json(v.lambda) : Json();
    if (!v.einstein) j["failure"] = v.failure;
    return j;
}

Json to_json(const ExceptionalSet& s) {
    Json j;
    j["entries"] = Json::array();
    for (const auto& e : s.entries) {
        Json x;
        x["e"] = e.e;
        x["kind"] = e.kind();
        x["b"] = to_json(e.b);
        x["defining"] = e.defining.str("x");
        x["c"] = e.c ? to_json(*e.c) : Json();
        x["c_approx"] = e.c_approx;
        x["verified"] = e.verified;
        j["entries"].push_back(x);
    }
    j["identically_satisfied"] = s.identically_satisfied;
    return j;
}

Json to_json(const CscClassification& c) {
    Json j;
    j["c"] = to_json(c.c);
    j["phi"] = c.phi.str();
    j["valid"] = c.valid;
    j["positive_on_half_line"] = c.positive_on_half_line;
    j["first_zero"] = c.first_zero ? to_json(c.first_zero->b) : Json();
    if (c.first_zero) j["first_zero_multiplicity"] = c.first_zero->multiplicity;
    j["domain"] = to_json(c.domain);
    j["lower"] = to_json(c.lower);
    j["upper"] = to_json(c.upper);
    j["habitat"] = to_json(c.habitat);
    j["einstein"] = to_json(c.einstein);
    j["fibre_area_finite"] = c.fibre_area_finite;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

Json to_json(const VbClassification& c) {
    Json j = to_json(c.base);
    j["bundle_habitat"] = c.habitat;
    j["complete"] = c.complete;
    return j;
}

Json to_json(const EndValue& e) {
    Json j;
    j["divergent"] = e.divergent;
    j["value"] = e.divergent ? Json(e.value > 0 ? "inf" : "-inf") : Json(e.value);
    j["certificate"] = e.certificate;
    return j;
}

Json to_json(const Moments& m) {
    Json j;
    j["b"] = to_json(m.b);
    j["a"] = Json::array();
    for (const auto& x : m.a) j["a"].push_back(to_json(x));
    j["ahat"] = Json::array();
    for (const auto& x : m.ahat) j["ahat"].push_back(to_json(x));
    j["determinant"] = to_json(m.determinant());
    return j;
}

Json to_json(const ExtremalSolution& s) {
    Json j;
    j["b"] = to_json(s.b);
    j["sigma0"] = to_json(s.sigma0);
    j["sigma1"] = to_json(s.sigma1);
    j["phi"] = s.phi.str();
    j["boundary"] = {to_json(s.dphi_minus), to_json(s.dphi_plus)};
    j["positive"] = s.positive;
    j["boundary_exact"] = s.boundary_exact;
    j["residual_value"] = to_json(s.residual_value);
    j["residual_slope"] = to_json(s.residual_slope);
    j["moments"] = to_json(s.m);
    return j;
}

Json to_json(const CscClass& c) {
    Json j;
    j["b"] = c.b;
    j["sigma0"] = c.sigma0.to_double();
    j["sigma1"] = c.sigma1;
    j["futaki"] = c.futaki_at_b;
    j["positive"] = c.positive;
    j["habitat"] = c.habitat;
    return j;
}

Json to_json(const Table2Row& r) {
    Json j;
    j["row"] = r.label;
    j["name"] = r.name;
    j["phi"] = r.phi.str();
    j["I0"] = r.interval.str();
    j["r_range"] = r.r_range;
    j["distance"] = {r.distance_a, r.distance_b};
    j["area"] = {r.area_a, r.area_b};
    j["sigma"] = r.sigma_constant ? to_json(r.sigma) : Json("non-constant");
    j["domain"] = r.domain;
    j["habitat"] = to_json(r.habitat);
    j["lower"] = to_json(r.lower);
    j["upper"] = to_json(r.upper);
    j["normalization"] = r.normalization;
    j["factor"] = r.factor_formula;
    j["t_range_length"] = std::isinf(r.t_range_length) ? Json("inf") : Json(r.t_range_length);
    j["samples"] = Json::array();
    for (const auto& s : r.samples) j["samples"].push_back({{"r", s.r}, {"tau", s.tau}, {"factor", s.factor}, {"closed_form", s.closed_form}});
    j["max_factor_error"] = r.max_error;
    return j;
}

}  // namespace momentum
