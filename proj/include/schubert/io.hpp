#pragma once

#include <string>

#include <json.hpp>

#include "schubert/bp.hpp"
#include "schubert/order.hpp"
#include "schubert/smooth.hpp"
#include "schubert/spherical.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;

// Type A: "4231" or "4,2,3,1". Any type: "s1 s2 s1", "e", "id".
// G2 also takes s and t for s1 and s2, spaced or run together ("sts").
WeylElement parse_element(const RootSystem& sys, const std::string& text);
// Type A in one-line notation, otherwise the smallest reduced word.
std::string format_element(const WeylElement& w);

// "s3" or "3" or "a3" -> 2
int parse_generator(const RootSystem& sys, const std::string& token);
// "a1,a3", "s1 s3", "1,3" or "" (empty set)
SimpleSubset parse_subset(const RootSystem& sys, const std::string& text);

Json simple_names(const RootSystem& sys, const SimpleSubset& s);
Json root_names(const RootSystem& sys, const RootMask& m);
Json root_indices(const RootSystem& sys, const RootMask& m);
Json to_json(const PoincarePolynomial& p);
Json to_json(const SmoothnessReport& r);
Json to_json(const BPDecomposition& d);
Json to_json(const RootSystem& sys, const PairCheck& p);
Json to_json(const SphericalCertificate& c);

}  // namespace schubert
