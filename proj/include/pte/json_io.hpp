#pragma once

#include "pte/instance.hpp"
#include "pte/verify.hpp"

#include <json.hpp>

#include <string>

namespace pte {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings ("p" when integral). Plain JSON integers
/// are accepted on input as well.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const Point& p);
Point point_from_json(const Json& j);

/// {"dimension": r, "degree": m, "classes": [[[...], ...], ...]}, classes in
/// canonical order.
Json to_json(const PteInstance& instance);
/// Throws InvalidInput on malformed documents, ragged dimensions, or shape
/// violations.
PteInstance instance_from_json(const Json& j);

Json to_json(const Exponent& k);
Json to_json(const VerificationReport& report);

/// Reads and parses a JSON file; throws InvalidInput when it cannot.
Json read_json_file(const std::string& path);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

} // namespace pte
