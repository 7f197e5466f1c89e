#pragma once

#include "momentum/compact_extremal.hpp"
#include "momentum/coords.hpp"
#include "momentum/csc_solver.hpp"
#include "momentum/table2.hpp"
#include "momentum/vector_bundle.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <variant>

namespace momentum {

using Json = nlohmann::ordered_json;

struct NumericMode {
    bool exact = true;
    double epsilon = Scalar::default_epsilon;
};

// Throws InvalidInput naming the first key of j outside allowed.
void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where);

// "p/q", a decimal string, or a JSON integer.
Scalar scalar_from_json(const Json& j, const NumericMode& mode, const std::string& what);
Json to_json(const Scalar& s);
Bound bound_from_json(const Json& j, const NumericMode& mode, const std::string& what);
Json to_json(const Bound& b);
Domain domain_from_json(const Json& j, const NumericMode& mode);
Json to_json(const Domain& d);

Block block_from_json(const Json& j, const NumericMode& mode);
Json to_json(const Block& b);

using AnyData = std::variant<HorizontalData, VectorBundleData>;
AnyData data_from_json(const Json& j, const NumericMode& mode);
Json to_json(const HorizontalData& d);
Json to_json(const VectorBundleData& v);

Json to_json(const AlgebraicReal& a);
Json to_json(const EndpointClass& e);
Json to_json(const Habitat& h);
Json to_json(const Infimum& m);
Json to_json(const ThresholdAnalysis& t);
Json to_json(const EinsteinVerdict& v);
Json to_json(const ExceptionalSet& s);
Json to_json(const CscClassification& c);
Json to_json(const VbClassification& c);
Json to_json(const EndValue& e);
Json to_json(const Moments& m);
Json to_json(const ExtremalSolution& s);
Json to_json(const CscClass& c);
Json to_json(const Table2Row& r);

}  // namespace momentum
