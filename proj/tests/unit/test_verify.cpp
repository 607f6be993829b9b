#include <map>
#include <set>

#include "helpers.hpp"
#include "qspec/verify.hpp"

using namespace qspec;

namespace {

std::string dump(const std::vector<VerificationRecord>& records) {
  Json j = Json::array();
  for (const auto& r : records) j.push_back(to_json(r));
  return j.dump();
}

}  // namespace

TEST_CASE("theorem ids are unique") {
  const auto& ids = theorem_ids();
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(ids.size() >= 30);
}

TEST_CASE("verify_all covers every id with one record per instance") {
  RunConfig cfg;
  const auto records = verify_all(cfg);
  std::map<std::string, int> count;
  for (const auto& r : records) ++count[r.theorem_id];
  CHECK(count.size() == theorem_ids().size());
  for (const auto& id : theorem_ids()) {
    INFO(id);
    CHECK(count[id] == cfg.instances);
  }
  // one record per (id, instance)
  std::set<std::pair<std::string, std::uint64_t>> keys;
  for (const auto& r : records) keys.insert({r.theorem_id, r.instance_seed});
  CHECK(keys.size() == records.size());
  for (const auto& r : records) {
    INFO(r.theorem_id << " residual " << r.residual);
    CHECK(r.pass);
  }
  CHECK(exit_code(records) == 0);
}

TEST_CASE("verify_all is deterministic") {
  RunConfig cfg;
  cfg.seed = 11;
  CHECK(dump(verify_all(cfg)) == dump(verify_all(cfg)));
  RunConfig other = cfg;
  other.seed = 12;
  CHECK(dump(verify_all(other)) != dump(verify_all(cfg)));
}

TEST_CASE("sixteen nodes are too few") {
  RunConfig cfg;
  cfg.nodes_per_loop = 16;
  const auto records = verify_all(cfg);
  CHECK(exit_code(records) == 1);
  bool contour_failed = false;
  for (const auto& g : report(records))
    if (g.theorem.rfind("contour_identity.", 0) == 0 && !g.pass) contour_failed = true;
  CHECK(contour_failed);
}

TEST_CASE("dimension cap one still exercises every id") {
  RunConfig cfg;
  cfg.dim_cap = 1;
  const auto groups = report(verify_all(cfg));
  REQUIRE(groups.size() == theorem_ids().size());
  for (std::size_t k = 0; k < groups.size(); ++k) {
    INFO(groups[k].theorem);
    CHECK(groups[k].theorem == theorem_ids()[k]);
    CHECK(groups[k].instances > 0);
    CHECK(groups[k].pass);
  }
}

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.dim_cap = 0;
  CHECK(test::kind_of([&] { cfg.validate(); }) == ErrorKind::Config);
  cfg = {};
  cfg.nodes_per_loop = 8;
  CHECK(test::kind_of([&] { cfg.validate(); }) == ErrorKind::Config);
  cfg = {};
  cfg.tol.quad = -1.0;
  CHECK(test::kind_of([&] { cfg.validate(); }) == ErrorKind::Config);
  cfg = {};
  cfg.instances = 0;
  CHECK(test::kind_of([&] { cfg.validate(); }) == ErrorKind::Config);
}

TEST_CASE("report oracles") {
  CHECK(report({}).empty());

  const auto one = report({{"a.b", 1, 0.5, 0.1, false}});
  REQUIRE(one.size() == 1);
  CHECK(one[0].theorem == "a.b");
  CHECK(one[0].instances == 1);
  CHECK(one[0].max_residual == 0.5);
  CHECK_FALSE(one[0].pass);
  CHECK(exit_code({{"a.b", 1, 0.5, 0.1, false}}) == 1);

  const std::vector<VerificationRecord> mixed = {
      {"x", 1, 1e-12, 1e-9, true}, {"y", 1, 2e-3, 1e-9, false}, {"x", 2, 3e-11, 1e-9, true}};
  const auto groups = report(mixed);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].theorem == "x");
  CHECK(groups[0].instances == 2);
  CHECK(groups[0].max_residual == 3e-11);
  CHECK(groups[0].tolerance == 1e-9);
  CHECK(groups[0].pass);
  CHECK_FALSE(groups[1].pass);

  const Json j = to_json(groups[0]);
  CHECK(j.dump() == R"({"theorem":"x","instances":2,"max_residual":3e-11,"tolerance":1e-09,"pass":true})");
  const Json inf = to_json(VerificationRecord{"z", 3, std::numeric_limits<double>::infinity(), 1.0, false});
  CHECK(inf["residual"].is_null());
  CHECK(report_text(groups).find("FAIL") != std::string::npos);
}
