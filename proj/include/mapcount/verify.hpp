#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mapcount/oracle.hpp"
#include "mapcount/output.hpp"
#include "mapcount/recurrences.hpp"

namespace mapcount {

enum class VerifyStatus { pass, fail, discrepancy_expected };

std::string to_string(VerifyStatus s);

/// One formula-versus-oracle comparison.
struct VerifyRow {
  std::string model;
  std::vector<std::pair<std::string, OutputRecord::Param>> params;
  /// Formula value, or empty when the formula raised (see `error`).
  std::string formula;
  std::string oracle;
  /// Face-refined rows also carry the printed-variant value (or its error).
  std::string printed;
  std::string error;
  VerifyStatus status = VerifyStatus::pass;
  Provenance provenance = Provenance::formula;

  OutputRecord record() const;
};

struct VerifyOptions {
  std::int64_t max_size = 1;
  std::int64_t max_genus = 0;
  std::int64_t m = 3;
  std::int64_t k = 2;
  unsigned threads = 1;
  double work_cap = oracle::kDefaultWorkCap;
};

/// Every profile with 1..max_size edges, every genus 0..max_genus.
std::vector<VerifyRow> verify_bipartite(Counter& counter, const VerifyOptions& opt);
/// Profiles {f_k = n}, n = 1..max_size.
std::vector<VerifyRow> verify_angulation(Counter& counter, const VerifyOptions& opt);
/// Per (g, n) totals, then per (g, n, f) refined rows with both variants.
std::vector<VerifyRow> verify_constellation(Counter& counter, const VerifyOptions& opt);
/// One-faced; rows for m >= 3 that disagree are marked discrepancy-expected.
std::vector<VerifyRow> verify_onefaced(Counter& counter, const VerifyOptions& opt);
std::vector<VerifyRow> verify_monotone(Counter& counter, const VerifyOptions& opt);

bool all_pass(const std::vector<VerifyRow>& rows);

}  // namespace mapcount
