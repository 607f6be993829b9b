#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qspec/json_io.hpp"
#include "qspec/tolerances.hpp"

namespace qspec {

struct RunConfig {
  std::uint64_t seed = 1;
  int nodes_per_loop = 256;
  Tolerances tol{};
  UnitImaginary plane{};
  std::size_t dim_cap = 4;
  int instances = 3;  ///< random instances per theorem id

  /// Throws ErrorKind::Config for non-positive tolerances, a dimension cap
  /// outside 1..64, fewer than 16 nodes or no instances.
  void validate() const;
};

struct VerificationRecord {
  std::string theorem_id;
  std::uint64_t instance_seed = 0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Every id verify_all emits, in emission order.
const std::vector<std::string>& theorem_ids();

/// Runs the full suite. Failures, including numerical exceptions, become
/// records with pass = false; nothing is thrown after validation.
std::vector<VerificationRecord> verify_all(const RunConfig& cfg);

struct GroupSummary {
  std::string theorem;
  int instances = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

/// Groups by theorem id in first-seen order.
std::vector<GroupSummary> report(const std::vector<VerificationRecord>& records);

Json to_json(const VerificationRecord& r);
Json to_json(const GroupSummary& g);
/// Fixed-width table, one line per group, failing groups flagged.
std::string report_text(const std::vector<GroupSummary>& groups);
/// 0 if every record passes, 1 otherwise.
int exit_code(const std::vector<VerificationRecord>& records);

/// Deterministic per-instance seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

}  // namespace qspec
