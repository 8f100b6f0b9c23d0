#include "mapcount/verify.hpp"

#include <functional>

namespace mapcount {

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::pass: return "pass";
    case VerifyStatus::fail: return "fail";
    case VerifyStatus::discrepancy_expected: return "discrepancy-expected";
  }
  return "?";
}

OutputRecord VerifyRow::record() const {
  OutputRecord r;
  r.model = model;
  r.params = params;
  r.params.emplace_back("oracle", oracle);
  if (!printed.empty()) r.params.emplace_back("printed", printed);
  if (!error.empty()) r.params.emplace_back("error", error);
  r.params.emplace_back("status", to_string(status));
  r.value = formula.empty() ? "n/a" : formula;
  r.provenance = provenance;
  return r;
}

bool all_pass(const std::vector<VerifyRow>& rows) {
  for (const auto& r : rows)
    if (r.status == VerifyStatus::fail) return false;
  return true;
}

namespace {

// Evaluates a formula, capturing exactness violations as row errors.
void fill_formula(VerifyRow& row, const std::function<std::string()>& eval) {
  try {
    row.formula = eval();
  } catch (const ExactnessViolation& e) {
    row.error = e.what();
  }
}

void judge(VerifyRow& row, bool experimental) {
  const bool agree = row.error.empty() && row.formula == row.oracle;
  if (agree)
    row.status = VerifyStatus::pass;
  else
    row.status = experimental ? VerifyStatus::discrepancy_expected : VerifyStatus::fail;
}

oracle::OracleQuery base_query(const VerifyOptions& opt, int m, std::int64_t n) {
  oracle::OracleQuery q;
  q.model = oracle::Model::constellation;
  q.m = m;
  q.n = static_cast<int>(n);
  q.threads = opt.threads;
  q.work_cap = opt.work_cap;
  return q;
}

}  // namespace

std::vector<VerifyRow> verify_bipartite(Counter& counter, const VerifyOptions& opt) {
  std::vector<VerifyRow> rows;
  for (std::int64_t n = 1; n <= opt.max_size; ++n) {
    const auto brute = oracle::enumerate_constellations(base_query(opt, 2, n));
    for (const auto& f : profiles_with_edges(n)) {
      const auto key = f.str();
      for (std::int64_t g = 0; g <= opt.max_genus; ++g) {
        VerifyRow row;
        row.model = "bipartite";
        row.params = {{"g", g}, {"profile", key}};
        row.oracle = brute.rooted_where(g, [&](const std::string& s) { return s == key; }).str();
        fill_formula(row, [&] { return counter.bipartite(g, f).str(); });
        judge(row, false);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<VerifyRow> verify_angulation(Counter& counter, const VerifyOptions& opt) {
  std::vector<VerifyRow> rows;
  for (std::int64_t n = 1; n <= opt.max_size; ++n) {
    const auto profile = DegreeProfile::single(opt.k, n);
    auto q = base_query(opt, 2, profile.edges());
    q.model = oracle::Model::bipartite_profile;
    q.filter = oracle::FaceFilter::type(profile);
    const auto brute = oracle::enumerate_constellations(q);
    for (std::int64_t g = 0; g <= opt.max_genus; ++g) {
      VerifyRow row;
      row.model = "angulation";
      row.params = {{"k", opt.k}, {"g", g}, {"n", n}};
      row.oracle = brute.rooted(g).str();
      fill_formula(row, [&] { return counter.angulation(opt.k, g, n).str(); });
      judge(row, false);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<VerifyRow> verify_constellation(Counter& counter, const VerifyOptions& opt) {
  std::vector<VerifyRow> totals, refined;
  for (std::int64_t n = 1; n <= opt.max_size; ++n) {
    const auto brute = oracle::enumerate_constellations(base_query(opt, static_cast<int>(opt.m), n));
    for (std::int64_t g = 0; g <= opt.max_genus; ++g) {
      VerifyRow row;
      row.model = "constellation";
      row.params = {{"m", opt.m}, {"g", g}, {"n", n}};
      row.oracle = brute.rooted(g).str();
      fill_formula(row, [&] { return counter.constellation(opt.m, g, n).str(); });
      judge(row, false);
      totals.push_back(std::move(row));

      for (std::int64_t f = 1; f <= n; ++f) {
        VerifyRow r;
        r.model = "constellation";
        r.params = {{"m", opt.m}, {"g", g}, {"n", n}, {"f", f}, {"variant", std::string("corrected")}};
        r.oracle = brute
                       .rooted_where(g,
                                     [&](const std::string& s) {
                                       // The face statistic is a cycle type; count its parts.
                                       return parse_profile(s).faces() == f;
                                     })
                       .str();
        fill_formula(r, [&] { return counter.constellation_by_faces(opt.m, g, n, f, FaceVariant::corrected).str(); });
        try {
          r.printed = counter.constellation_by_faces(opt.m, g, n, f, FaceVariant::printed).str();
        } catch (const ExactnessViolation& e) {
          r.printed = std::string("error: ") + e.what();
        }
        judge(r, false);
        refined.push_back(std::move(r));
      }
    }
  }
  totals.insert(totals.end(), std::make_move_iterator(refined.begin()), std::make_move_iterator(refined.end()));
  return totals;
}

std::vector<VerifyRow> verify_onefaced(Counter& counter, const VerifyOptions& opt) {
  std::vector<VerifyRow> rows;
  const bool experimental = one_faced_is_experimental(opt.m);
  for (std::int64_t n = 1; n <= opt.max_size; ++n) {
    auto q = base_query(opt, static_cast<int>(opt.m), n);
    q.model = oracle::Model::one_faced;
    const auto brute = oracle::enumerate_constellations(q);
    for (std::int64_t g = 0; g <= opt.max_genus; ++g) {
      VerifyRow row;
      row.model = "onefaced";
      row.params = {{"m", opt.m}, {"g", g}, {"n", n}};
      row.oracle = brute.rooted(g).str();
      row.provenance = experimental ? Provenance::formula_experimental : Provenance::formula;
      fill_formula(row, [&] { return counter.one_faced(opt.m, g, n, experimental).str(); });
      judge(row, experimental);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<VerifyRow> verify_monotone(Counter& counter, const VerifyOptions& opt) {
  std::vector<VerifyRow> rows;
  for (std::int64_t n = 1; n <= opt.max_size; ++n) {
    for (std::int64_t g = 0; g <= opt.max_genus; ++g) {
      const auto brute = oracle::enumerate_monotone(static_cast<int>(n), g, opt.threads);
      VerifyRow row;
      row.model = "monotone";
      row.params = {{"g", g}, {"n", n}};
      row.oracle = brute.rooted(g).str();
      fill_formula(row, [&] { return counter.monotone(g, n).str(); });
      judge(row, false);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace mapcount
