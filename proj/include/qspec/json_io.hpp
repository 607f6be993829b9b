#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qspec/qmatrix.hpp"
#include "qspec/slicefun.hpp"

namespace qspec {

using Json = nlohmann::ordered_json;

// Malformed input raises ErrorKind::Config.

Json to_json(const Quaternion& q);
Json to_json(const UnitImaginary& u);
Json to_json(const QMatrix& a);
Json to_json(const QVector& x);

Quaternion quaternion_from_json(const Json& j);
UnitImaginary unit_from_json(const Json& j);
/// {"n": n, "entries": [[[w,x,y,z], ...], ...]}, row-major.
QMatrix matrix_from_json(const Json& j);
/// {"n": n, "entries": [[w,x,y,z], ...]}.
QVector vector_from_json(const Json& j);
/// [[m, [w,x,y,z]], ...].
TrigPoly trigpoly_from_json(const Json& j);

Json read_json_file(const std::string& path);

/// "w,x,y,z" -> Quaternion, "x,y,z" -> UnitImaginary, "0,2" -> indices.
Quaternion parse_quaternion(const std::string& text);
UnitImaginary parse_unit(const std::string& text);
std::vector<std::size_t> parse_indices(const std::string& text);

}  // namespace qspec
