#include "qspec/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qspec/error.hpp"

namespace qspec {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Config, what); }

double number(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + ": expected a number");
  return j.get<double>();
}

std::size_t declared_size(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    bad("expected an object with \"n\" and \"entries\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) bad("\"n\" must be a positive integer");
  const auto n = static_cast<std::size_t>(j["n"].get<long long>());
  if (!j["entries"].is_array() || j["entries"].size() != n) {
    bad("\"entries\" must be an array of length n = " + std::to_string(n));
  }
  return n;
}

std::vector<double> split_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      bad("cannot parse number '" + item + "' in '" + text + "'");
    }
    if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos) {
      bad("cannot parse number '" + item + "' in '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

namespace {

// -0.0 prints as "-0.0"; adding +0.0 turns it into +0.0 and leaves the rest alone.
double unsigned_zero(double v) { return v + 0.0; }

}  // namespace

Json to_json(const Quaternion& q) {
  return Json::array({unsigned_zero(q.w), unsigned_zero(q.x), unsigned_zero(q.y), unsigned_zero(q.z)});
}

Json to_json(const UnitImaginary& u) { return Json::array({u.x(), u.y(), u.z()}); }

Json to_json(const QMatrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.dim(); ++c) row.push_back(to_json(a(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", a.dim()}, {"entries", std::move(rows)}};
}

Json to_json(const QVector& x) {
  Json entries = Json::array();
  for (const auto& q : x.entries()) entries.push_back(to_json(q));
  return Json{{"n", x.size()}, {"entries", std::move(entries)}};
}

Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) bad("quaternion must be [w, x, y, z]");
  return {number(j[0], "w"), number(j[1], "x"), number(j[2], "y"), number(j[3], "z")};
}

UnitImaginary unit_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) bad("imaginary unit must be [x, y, z]");
  try {
    return UnitImaginary::normalized(number(j[0], "x"), number(j[1], "y"), number(j[2], "z"));
  } catch (const Error& e) {
    bad(e.what());
  }
}

QMatrix matrix_from_json(const Json& j) {
  const std::size_t n = declared_size(j);
  if (n > kMaxDim) bad("matrix dimension exceeds " + std::to_string(kMaxDim));
  QMatrix a(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = j["entries"][r];
    if (!row.is_array() || row.size() != n) bad("row " + std::to_string(r) + " must have n entries");
    for (std::size_t c = 0; c < n; ++c) a(r, c) = quaternion_from_json(row[c]);
  }
  return a;
}

QVector vector_from_json(const Json& j) {
  const std::size_t n = declared_size(j);
  QVector x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = quaternion_from_json(j["entries"][k]);
  return x;
}

TrigPoly trigpoly_from_json(const Json& j) {
  if (!j.is_array()) bad("trig coefficients must be [[m, [w,x,y,z]], ...]");
  std::vector<std::pair<int, Quaternion>> terms;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer()) {
      bad("each trig term must be [m, [w,x,y,z]]");
    }
    terms.emplace_back(term[0].get<int>(), quaternion_from_json(term[1]));
  }
  return TrigPoly::from_terms(terms);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    bad("cannot parse '" + path + "': " + e.what());
  }
}

Quaternion parse_quaternion(const std::string& text) {
  const auto v = split_numbers(text);
  if (v.size() != 4) bad("expected w,x,y,z but got '" + text + "'");
  return {v[0], v[1], v[2], v[3]};
}

UnitImaginary parse_unit(const std::string& text) {
  const auto v = split_numbers(text);
  if (v.size() != 3) bad("expected x,y,z but got '" + text + "'");
  try {
    return UnitImaginary::normalized(v[0], v[1], v[2]);
  } catch (const Error& e) {
    bad(e.what());
  }
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  for (double v : split_numbers(text)) {
    if (v < 0 || v != static_cast<double>(static_cast<long long>(v))) {
      bad("indices must be nonnegative integers: '" + text + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace qspec
