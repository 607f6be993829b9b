#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "qspec/error.hpp"
#include "qspec/json_io.hpp"
#include "qspec/random.hpp"

using namespace qspec;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Domain;
}

}  // namespace

TEST_CASE("matrix and vector round trip") {
  const QMatrix a = random_unitary(3, 9);
  CHECK(matrix_from_json(Json::parse(to_json(a).dump())) == a);
  QuaternionRng rng(1);
  const QVector x = rng.vector(4);
  CHECK(vector_from_json(Json::parse(to_json(x).dump())) == x);
  CHECK(to_json(kJ).dump() == "[0.0,0.0,1.0,0.0]");
  CHECK(to_json(UnitImaginary::normalized(0, 0, 2)).dump() == "[0.0,0.0,1.0]");
}

TEST_CASE("malformed input is a configuration error") {
  CHECK(kind_of([] { matrix_from_json(Json::parse(R"({"n":2,"entries":[[[1,0,0,0]]]})")); }) ==
        ErrorKind::Config);
  CHECK(kind_of([] { matrix_from_json(Json::parse(R"({"entries":[]})")); }) == ErrorKind::Config);
  CHECK(kind_of([] { vector_from_json(Json::parse(R"({"n":1,"entries":[[1,0,0]]})")); }) ==
        ErrorKind::Config);
  CHECK(kind_of([] { quaternion_from_json(Json::parse(R"([1,"a",0,0])")); }) == ErrorKind::Config);
  CHECK(kind_of([] { read_json_file("/nonexistent/file.json"); }) == ErrorKind::Config);
  CHECK(kind_of([] { parse_quaternion("1,2,3"); }) == ErrorKind::Config);
  CHECK(kind_of([] { parse_unit("0,0,0"); }) == ErrorKind::Config);
  CHECK(kind_of([] { parse_indices("1,-2"); }) == ErrorKind::Config);
  CHECK(kind_of([] { parse_quaternion("1,2,x,4"); }) == ErrorKind::Config);
}

TEST_CASE("argument parsing") {
  CHECK(parse_quaternion("1,2,3,4") == Quaternion{1, 2, 3, 4});
  CHECK(parse_unit("0,2,0") == UnitImaginary::normalized(0, 1, 0));
  CHECK(parse_indices("0,2") == std::vector<std::size_t>{0, 2});
}

TEST_CASE("trig coefficients") {
  const TrigPoly p = trigpoly_from_json(Json::parse(R"([[1,[0.5,0,0,0]],[-1,[0.5,0,0,0]]])"));
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == Quaternion{});
  CHECK(p.coeff(-1) == Quaternion{0.5});
}

TEST_CASE("file reading") {
  const std::string path = "qspec_json_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"n":1,"entries":[[[0,1,0,0]]]})";
  }
  CHECK(matrix_from_json(read_json_file(path)) == QMatrix{{kI}});
  std::remove(path.c_str());
}
