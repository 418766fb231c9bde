#pragma once

// JSON encodings. Key order is fixed so that output is byte-stable.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "rotarr/arrangements.hpp"
#include "rotarr/groups.hpp"
#include "rotarr/linalg.hpp"

namespace rotarr {

using json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Rational& q);
json to_json(const CycNum& a);
json to_json(const MatrixF& m);
json to_json(const Subspace& u);
json to_json(const Provenance& p);
json to_json(const Arrangement& a);
// {"name", "ambient", "conductor", "generators"}; elements are not stored.
json group_to_json(const MatrixGroup& g);

Rational rational_from_json(const json& j);
CycNum cycnum_from_json(const json& j);
MatrixF matrix_from_json(const json& j);
Subspace subspace_from_json(const json& j);
// Recomputes the element set by closure.
MatrixGroup group_from_json(const json& j, std::size_t cap = kDefaultClosureCap);

json read_json_file(const std::filesystem::path& path);
// Two-space indentation and a trailing newline.
void write_json_file(const std::filesystem::path& path, const json& j);
std::string dump(const json& j);

}  // namespace rotarr
