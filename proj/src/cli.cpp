#include "mapcount/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "mapcount/cache.hpp"
#include "mapcount/oracle.hpp"
#include "mapcount/output.hpp"
#include "mapcount/recurrences.hpp"
#include "mapcount/series.hpp"
#include "mapcount/verify.hpp"

namespace mapcount::cli {

namespace {

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool is_range = false;
};

// "a" or "a..b".
Range parse_range(const std::string& text, std::string_view what, std::int64_t min) {
  auto to_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
      throw std::invalid_argument("bad " + std::string(what) + " '" + text + "'");
    return v;
  };
  Range r;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(std::string_view(text).substr(0, dots));
    r.hi = to_int(std::string_view(text).substr(dots + 2));
    r.is_range = true;
  }
  if (r.lo < min) throw std::invalid_argument(std::string(what) + " must be at least " + std::to_string(min));
  if (r.hi < r.lo) throw std::invalid_argument("empty " + std::string(what) + " range '" + text + "'");
  return r;
}

struct Globals {
  std::string format = "plain";
  std::string cache;
  unsigned threads = 1;
  bool stats = false;
  double work_cap = oracle::kDefaultWorkCap;
};

struct ModelArgs {
  std::string genus;
  std::string n;
  std::string profile;
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::string faces;
  std::string variant;
  bool experimental = false;
  std::int64_t max_size = 0;
  std::int64_t max_genus = 0;
  std::int64_t order = 0;
  bool check = false;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  Globals globals;
  CountTable table;
  std::ostream& out;
  std::ostream& err;
  Format format() const { return parse_format(globals.format); }
};

void emit(Context& ctx, const std::vector<OutputRecord>& records, bool single, std::span<const std::string> extra = {}) {
  write_records(ctx.out, records, ctx.format(), single, extra);
}

// --- counting subcommands -------------------------------------------------

void cmd_bipartite(Context& ctx, const ModelArgs& a) {
  Counter counter(ctx.table, ctx.globals.threads);
  const auto f = parse_profile(a.profile);
  const auto genus = parse_range(a.genus, "genus", 0);
  std::vector<OutputRecord> recs;
  for (auto g = genus.lo; g <= genus.hi; ++g)
    recs.push_back({"bipartite", {{"g", g}, {"profile", f.str()}}, counter.bipartite(g, f).str(), Provenance::formula});
  emit(ctx, recs, !genus.is_range);
}

void cmd_angulation(Context& ctx, const ModelArgs& a) {
  Counter counter(ctx.table, ctx.globals.threads);
  const auto genus = parse_range(a.genus, "genus", 0);
  const auto n = parse_range(a.n, "n", 1);
  std::vector<OutputRecord> recs;
  for (auto g = genus.lo; g <= genus.hi; ++g)
    for (auto nn = n.lo; nn <= n.hi; ++nn)
      recs.push_back({"angulation", {{"k", a.k}, {"g", g}, {"n", nn}}, counter.angulation(a.k, g, nn).str(), Provenance::formula});
  emit(ctx, recs, !genus.is_range && !n.is_range);
}

void cmd_constellation(Context& ctx, const ModelArgs& a) {
  Counter counter(ctx.table, ctx.globals.threads);
  const auto genus = parse_range(a.genus, "genus", 0);
  const auto n = parse_range(a.n, "n", 1);
  std::vector<OutputRecord> recs;
  bool single = !genus.is_range && !n.is_range;
  if (a.faces.empty()) {
    if (!a.variant.empty()) throw std::invalid_argument("--variant requires --faces");
    for (auto g = genus.lo; g <= genus.hi; ++g)
      for (auto nn = n.lo; nn <= n.hi; ++nn)
        recs.push_back(
            {"constellation", {{"m", a.m}, {"g", g}, {"n", nn}}, counter.constellation(a.m, g, nn).str(), Provenance::formula});
  } else {
    const auto faces = parse_range(a.faces, "faces", 1);
    const auto variant = parse_variant(a.variant.empty() ? "corrected" : a.variant);
    single = single && !faces.is_range;
    for (auto g = genus.lo; g <= genus.hi; ++g)
      for (auto nn = n.lo; nn <= n.hi; ++nn)
        for (auto f = faces.lo; f <= faces.hi; ++f)
          recs.push_back({"constellation",
                          {{"m", a.m}, {"g", g}, {"n", nn}, {"f", f}, {"variant", to_string(variant)}},
                          counter.constellation_by_faces(a.m, g, nn, f, variant).str(),
                          Provenance::formula});
  }
  emit(ctx, recs, single);
}

void cmd_onefaced(Context& ctx, const ModelArgs& a) {
  Counter counter(ctx.table, ctx.globals.threads);
  const auto genus = parse_range(a.genus, "genus", 0);
  const auto n = parse_range(a.n, "n", 1);
  const auto prov = one_faced_is_experimental(a.m) ? Provenance::formula_experimental : Provenance::formula;
  std::vector<OutputRecord> recs;
  for (auto g = genus.lo; g <= genus.hi; ++g)
    for (auto nn = n.lo; nn <= n.hi; ++nn)
      recs.push_back({"onefaced", {{"m", a.m}, {"g", g}, {"n", nn}}, counter.one_faced(a.m, g, nn, a.experimental).str(), prov});
  emit(ctx, recs, !genus.is_range && !n.is_range);
}

void cmd_monotone(Context& ctx, const ModelArgs& a) {
  Counter counter(ctx.table, ctx.globals.threads);
  const auto genus = parse_range(a.genus, "genus", 0);
  const auto n = parse_range(a.n, "n", 1);
  std::vector<OutputRecord> recs;
  for (auto g = genus.lo; g <= genus.hi; ++g)
    for (auto nn = n.lo; nn <= n.hi; ++nn)
      recs.push_back({"monotone", {{"g", g}, {"n", nn}}, counter.monotone(g, nn).str(), Provenance::formula});
  emit(ctx, recs, !genus.is_range && !n.is_range);
}

// --- oracle -----------------------------------------------------------------

void report_work(Context& ctx, std::uint64_t work) {
  if (ctx.format() == Format::plain)
    ctx.out << "# work: " << work << '\n';
  else
    ctx.err << "work: " << work << '\n';
}

void cmd_oracle(Context& ctx, const std::string& model, const ModelArgs& a) {
  std::optional<Range> genus;
  if (!a.genus.empty()) genus = parse_range(a.genus, "genus", 0);
  auto genus_ok = [&](std::int64_t g) { return !genus || (g >= genus->lo && g <= genus->hi); };

  std::vector<OutputRecord> recs;
  std::uint64_t work = 0;
  oracle::OracleQuery q;
  q.threads = ctx.globals.threads;
  q.work_cap = ctx.globals.work_cap;

  auto per_genus = [&](const oracle::OracleResult& res, auto make_params) {
    work += res.work;
    for (const auto& [g, v] : res.rooted_by_genus())
      if (genus_ok(g)) recs.push_back({model, make_params(g), v.str(), Provenance::oracle});
  };

  if (model == "bipartite") {
    const auto f = parse_profile(a.profile);
    q.model = oracle::Model::bipartite_profile;
    q.n = static_cast<int>(f.edges());
    q.filter = oracle::FaceFilter::type(f);
    per_genus(oracle::enumerate_constellations(q),
              [&](std::int64_t g) { return std::vector<std::pair<std::string, OutputRecord::Param>>{{"g", g}, {"profile", f.str()}}; });
  } else if (model == "angulation") {
    const auto n = parse_range(a.n, "n", 1);
    for (auto nn = n.lo; nn <= n.hi; ++nn) {
      const auto f = DegreeProfile::single(a.k, nn);
      q.model = oracle::Model::bipartite_profile;
      q.n = static_cast<int>(f.edges());
      q.filter = oracle::FaceFilter::type(f);
      per_genus(oracle::enumerate_constellations(q), [&](std::int64_t g) {
        return std::vector<std::pair<std::string, OutputRecord::Param>>{{"k", a.k}, {"g", g}, {"n", nn}};
      });
    }
  } else if (model == "constellation" || model == "onefaced") {
    const auto n = parse_range(a.n, "n", 1);
    std::optional<Range> faces;
    if (!a.faces.empty()) faces = parse_range(a.faces, "faces", 1);
    for (auto nn = n.lo; nn <= n.hi; ++nn) {
      q.model = model == "onefaced" ? oracle::Model::one_faced : oracle::Model::constellation;
      q.m = static_cast<int>(a.m);
      q.n = static_cast<int>(nn);
      const auto res = oracle::enumerate_constellations(q);
      work += res.work;
      if (faces) {
        for (auto f = faces->lo; f <= faces->hi; ++f) {
          std::map<std::int64_t, ExactRational> by_genus;
          for (const auto& [key, t] : res.table)
            if (parse_profile(key.second).faces() == f) by_genus[key.first] += t.rooted;
          for (const auto& [g, v] : by_genus)
            if (genus_ok(g)) recs.push_back({model, {{"m", a.m}, {"g", g}, {"n", nn}, {"f", f}}, v.str(), Provenance::oracle});
        }
      } else {
        for (const auto& [g, v] : res.rooted_by_genus())
          if (genus_ok(g)) recs.push_back({model, {{"m", a.m}, {"g", g}, {"n", nn}}, v.str(), Provenance::oracle});
      }
    }
  } else if (model == "monotone") {
    if (!genus) throw std::invalid_argument("oracle monotone requires --genus");
    const auto n = parse_range(a.n, "n", 1);
    for (auto g = genus->lo; g <= genus->hi; ++g)
      for (auto nn = n.lo; nn <= n.hi; ++nn) {
        const auto res = oracle::enumerate_monotone(static_cast<int>(nn), g, ctx.globals.threads);
        work += res.work;
        recs.push_back({model, {{"g", g}, {"n", nn}}, res.rooted(g).str(), Provenance::oracle});
      }
  }
  emit(ctx, recs, false);
  report_work(ctx, work);
}

// --- verify and series -----------------------------------------------------

void cmd_verify(Context& ctx, const std::string& model, const ModelArgs& a) {
  Counter counter(ctx.table, ctx.globals.threads);
  VerifyOptions opt;
  opt.max_size = a.max_size;
  opt.max_genus = a.max_genus;
  opt.threads = ctx.globals.threads;
  opt.work_cap = ctx.globals.work_cap;
  if (a.m) opt.m = a.m;
  if (a.k) opt.k = a.k;
  if (opt.max_size < 1) throw std::invalid_argument("--max-size must be at least 1");
  if (opt.max_genus < 0) throw std::invalid_argument("--max-genus must be nonnegative");

  std::vector<VerifyRow> rows;
  if (model == "bipartite")
    rows = verify_bipartite(counter, opt);
  else if (model == "angulation")
    rows = verify_angulation(counter, opt);
  else if (model == "constellation")
    rows = verify_constellation(counter, opt);
  else if (model == "onefaced") {
    if (!a.m) opt.m = 2;
    rows = verify_onefaced(counter, opt);
  } else
    rows = verify_monotone(counter, opt);

  std::vector<OutputRecord> recs;
  for (const auto& r : rows) recs.push_back(r.record());
  static const std::vector<std::string> extra{"oracle", "printed", "status"};
  emit(ctx, recs, false, extra);

  std::size_t failed = 0, expected = 0;
  for (const auto& r : rows) {
    failed += r.status == VerifyStatus::fail;
    expected += r.status == VerifyStatus::discrepancy_expected;
  }
  ctx.err << "verify " << model << ": " << rows.size() << " rows, " << failed << " failed, " << expected
          << " discrepancy-expected\n";
  if (failed > 0) throw VerificationFailed("verification failed");
}

void cmd_series(Context& ctx, const ModelArgs& a) {
  if (a.k < 2) throw std::invalid_argument("-k must be at least 2");
  if (a.order < 0) throw std::invalid_argument("--order must be nonnegative");
  const auto f0 = planar_angulation_series(a.k, a.order);
  Counter counter(ctx.table, ctx.globals.threads);
  std::vector<OutputRecord> recs;
  bool ok = true;
  for (std::int64_t n = 0; n <= a.order; ++n) {
    OutputRecord r{"series", {{"k", a.k}, {"g", std::int64_t{0}}, {"n", n}}, f0[n].str(), Provenance::series};
    if (a.check) {
      const auto expected = n == 0 ? ExactInt{} : counter.angulation(a.k, 0, n);
      const bool match = expected == f0[n];
      ok = ok && match;
      r.params.emplace_back("recurrence", expected.str());
      r.params.emplace_back("status", std::string(match ? "pass" : "fail"));
    }
    recs.push_back(std::move(r));
  }
  static const std::vector<std::string> extra_check{"recurrence", "status"};
  emit(ctx, recs, false, a.check ? std::span<const std::string>(extra_check) : std::span<const std::string>{});
  if (!ok) throw VerificationFailed("series check failed");
}

// --- option wiring -----------------------------------------------------------

enum Need : unsigned {
  kGenus = 1u << 0,
  kGenusRequired = 1u << 1,
  kN = 1u << 2,
  kProfile = 1u << 3,
  kK = 1u << 4,
  kM = 1u << 5,
  kFaces = 1u << 6,
  kExperimental = 1u << 7,
};

void add_model_options(CLI::App* sub, ModelArgs& a, unsigned need) {
  if (need & kGenus) {
    auto* o = sub->add_option("--genus,-g", a.genus, "genus G or range 0..G");
    if (need & kGenusRequired) o->required();
  }
  if (need & kN) sub->add_option("-n", a.n, "size N or range 1..N")->required();
  if (need & kProfile)
    sub->add_option("--profile,-p", a.profile, "face profile i:f_i,... (f_i faces of degree 2i)")->required();
  if (need & kK) sub->add_option("-k", a.k, "half face degree k (faces of degree 2k)")->required()->check(CLI::Range(2, 1 << 20));
  if (need & kM) sub->add_option("-m", a.m, "number of colors m")->required()->check(CLI::Range(2, 1 << 20));
  if (need & kFaces) {
    sub->add_option("--faces,-f", a.faces, "face count F or range");
    sub->add_option("--variant", a.variant, "corrected|printed (with --faces)");
  }
  if (need & kExperimental) sub->add_flag("--experimental", a.experimental, "allow the experimental m >= 3 path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of bipartite maps, constellations and monotone Hurwitz numbers", "mapcount"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "plain|json|csv")->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--cache", g.cache, "memo cache file (defaults to $MAPCOUNT_CACHE)");
  app.add_option("--threads", g.threads, "parallelism hint")->check(CLI::Range(1u, 1024u));
  app.add_flag("--stats", g.stats, "print memo statistics to stderr");
  app.add_option("--work-cap", g.work_cap, "oracle work cap in tuples")->check(CLI::PositiveNumber);

  ModelArgs a;
  std::function<void(Context&)> action;

  auto* bip = app.add_subcommand("bipartite", "bipartite maps by face-degree profile");
  add_model_options(bip, a, kGenus | kGenusRequired | kProfile);
  bip->callback([&] { action = [&](Context& c) { cmd_bipartite(c, a); }; });

  auto* ang = app.add_subcommand("angulation", "bipartite 2k-angulations");
  add_model_options(ang, a, kGenus | kGenusRequired | kN | kK);
  ang->callback([&] { action = [&](Context& c) { cmd_angulation(c, a); }; });

  auto* con = app.add_subcommand("constellation", "m-constellations, optionally by face count");
  add_model_options(con, a, kGenus | kGenusRequired | kN | kM | kFaces);
  con->callback([&] { action = [&](Context& c) { cmd_constellation(c, a); }; });

  auto* one = app.add_subcommand("onefaced", "one-faced m-constellations");
  add_model_options(one, a, kGenus | kGenusRequired | kN | kM | kExperimental);
  one->callback([&] { action = [&](Context& c) { cmd_onefaced(c, a); }; });

  auto* mono = app.add_subcommand("monotone", "unramified monotone Hurwitz numbers");
  add_model_options(mono, a, kGenus | kGenusRequired | kN);
  mono->callback([&] { action = [&](Context& c) { cmd_monotone(c, a); }; });

  auto* orc = app.add_subcommand("oracle", "brute-force permutation enumeration");
  orc->require_subcommand(1);
  struct ModelSpec {
    const char* name;
    unsigned oracle_need;
  };
  const std::vector<ModelSpec> models{{"bipartite", kGenus | kProfile},
                                      {"angulation", kGenus | kN | kK},
                                      {"constellation", kGenus | kN | kM | kFaces},
                                      {"onefaced", kGenus | kN | kM},
                                      {"monotone", kGenus | kN}};
  for (const auto& spec : models) {
    auto* s = orc->add_subcommand(spec.name, std::string("oracle for ") + spec.name);
    add_model_options(s, a, spec.oracle_need);
    std::string name = spec.name;
    s->callback([&, name] { action = [&, name](Context& c) { cmd_oracle(c, name, a); }; });
  }

  auto* ver = app.add_subcommand("verify", "formula versus oracle over a grid");
  ver->require_subcommand(1);
  for (const auto& spec : models) {
    auto* s = ver->add_subcommand(spec.name, std::string("verify ") + spec.name);
    s->add_option("--max-size", a.max_size, "largest size (edges, faces or star vertices)")->required();
    s->add_option("--max-genus", a.max_genus, "largest genus")->required();
    std::string name = spec.name;
    if (name == "angulation") s->add_option("-k", a.k, "half face degree")->check(CLI::Range(2, 1 << 20));
    if (name == "constellation" || name == "onefaced") s->add_option("-m", a.m, "number of colors")->check(CLI::Range(2, 1 << 20));
    s->callback([&, name] { action = [&, name](Context& c) { cmd_verify(c, name, a); }; });
  }

  auto* ser = app.add_subcommand("series", "planar 2k-angulation series coefficients");
  ser->add_option("-k", a.k, "half face degree")->required();
  ser->add_option("--order", a.order, "truncation order N")->required();
  ser->add_flag("--check", a.check, "compare against the recurrence");
  ser->callback([&] { action = [&](Context& c) { cmd_series(c, a); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (g.cache.empty())
    if (const char* env = std::getenv("MAPCOUNT_CACHE")) g.cache = env;

  Context ctx{g, {}, out, err};
  int code = kSuccess;
  try {
    if (!g.cache.empty()) {
      auto loaded = load_cache(g.cache, ctx.table);
      if (!loaded.warning.empty()) err << "warning: " << loaded.warning << '\n';
    }
    action(ctx);
  } catch (const VerificationFailed& e) {
    err << "error: " << e.what() << '\n';
    code = kVerificationFailure;
  } catch (const ExactnessViolation& e) {
    err << "fatal: exactness violation: " << e.what() << '\n' << "state: " << e.state() << '\n';
    return kExactnessViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "fatal: internal error: " << e.what() << '\n';
    return kExactnessViolation;
  } catch (const oracle::WorkCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (g.stats) {
    const auto s = ctx.table.stats();
    err << "stats: hits=" << s.hits << " misses=" << s.misses << " entries=" << s.entries << '\n';
  }
  if (!g.cache.empty()) {
    try {
      save_cache(g.cache, ctx.table);
    } catch (const std::exception& e) {
      err << "warning: " << e.what() << '\n';
    }
  }
  return code;
}

}  // namespace mapcount::cli
