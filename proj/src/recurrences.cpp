#include "mapcount/recurrences.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <numeric>
#include <sstream>

#include "mapcount/oracle.hpp"
#include "parallel.hpp"

namespace mapcount {

std::string to_string(CountModel m) {
  switch (m) {
    case CountModel::bipartite: return "bipartite";
    case CountModel::angulation: return "angulation";
    case CountModel::constellation: return "constellation";
    case CountModel::constellation_faces: return "constellation_faces";
    case CountModel::onefaced: return "onefaced";
    case CountModel::monotone: return "monotone";
  }
  return "?";
}

std::string to_string(FaceVariant v) { return v == FaceVariant::corrected ? "corrected" : "printed"; }

FaceVariant parse_variant(std::string_view text) {
  if (text == "corrected") return FaceVariant::corrected;
  if (text == "printed") return FaceVariant::printed;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "' (expected corrected or printed)");
}

// ---------------------------------------------------------------------------
// Keys and table

namespace {

std::string field(std::string_view name, std::int64_t v) { return " " + std::string(name) + "=" + std::to_string(v); }

std::int64_t to_int(std::string_view s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw std::invalid_argument("bad integer '" + std::string(s) + "' in key");
  return v;
}

}  // namespace

CountKey CountKey::bipartite(std::int64_t g, const DegreeProfile& f) {
  return {CountModel::bipartite, "bipartite" + field("g", g) + " f=" + f.str()};
}
CountKey CountKey::angulation(std::int64_t k, std::int64_t g, std::int64_t n) {
  return {CountModel::angulation, "angulation" + field("k", k) + field("g", g) + field("n", n)};
}
CountKey CountKey::constellation(std::int64_t m, std::int64_t g, std::int64_t n) {
  return {CountModel::constellation, "constellation" + field("m", m) + field("g", g) + field("n", n)};
}
CountKey CountKey::constellation_faces(std::int64_t m, std::int64_t g, std::int64_t n, std::int64_t f, FaceVariant v) {
  return {CountModel::constellation_faces,
          "constellation_faces" + field("m", m) + field("g", g) + field("n", n) + field("f", f) + " variant=" + to_string(v)};
}
CountKey CountKey::onefaced(std::int64_t m, std::int64_t g, std::int64_t n) {
  return {CountModel::onefaced, "onefaced" + field("m", m) + field("g", g) + field("n", n)};
}
CountKey CountKey::monotone(std::int64_t g, std::int64_t n) {
  return {CountModel::monotone, "monotone" + field("g", g) + field("n", n)};
}

CountKey CountKey::parse(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> fields;
  std::istringstream in{std::string(text)};
  std::string model, tok;
  in >> model;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed key field '" + tok + "'");
    fields.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  auto get = [&](std::size_t i, std::string_view name) -> const std::string& {
    if (i >= fields.size() || fields[i].first != name) throw std::invalid_argument("key '" + std::string(text) + "' lacks field " + std::string(name));
    return fields[i].second;
  };
  auto expect_fields = [&](std::size_t n) {
    if (fields.size() != n) throw std::invalid_argument("key '" + std::string(text) + "' has the wrong number of fields");
  };
  std::optional<CountKey> key;
  if (model == "bipartite") {
    expect_fields(2);
    key = bipartite(to_int(get(0, "g")), parse_profile(get(1, "f")));
  } else if (model == "angulation") {
    expect_fields(3);
    key = angulation(to_int(get(0, "k")), to_int(get(1, "g")), to_int(get(2, "n")));
  } else if (model == "constellation") {
    expect_fields(3);
    key = constellation(to_int(get(0, "m")), to_int(get(1, "g")), to_int(get(2, "n")));
  } else if (model == "constellation_faces") {
    expect_fields(5);
    key = constellation_faces(to_int(get(0, "m")), to_int(get(1, "g")), to_int(get(2, "n")), to_int(get(3, "f")),
                              parse_variant(get(4, "variant")));
  } else if (model == "onefaced") {
    expect_fields(3);
    key = onefaced(to_int(get(0, "m")), to_int(get(1, "g")), to_int(get(2, "n")));
  } else if (model == "monotone") {
    expect_fields(2);
    key = monotone(to_int(get(0, "g")), to_int(get(1, "n")));
  } else {
    throw std::invalid_argument("unknown model in key '" + std::string(text) + "'");
  }
  if (key->text() != text) throw std::invalid_argument("non-canonical key '" + std::string(text) + "'");
  return *key;
}

std::string render(const CountValue& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

std::optional<CountValue> CountTable::find(const CountKey& key) const {
  auto v = peek(key);
  (v ? hits_ : misses_).fetch_add(1, std::memory_order_relaxed);
  return v;
}

std::optional<CountValue> CountTable::peek(const CountKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = store_.find(key.text());
  if (it == store_.end()) return std::nullopt;
  return it->second;
}

void CountTable::insert(const CountKey& key, CountValue value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = store_.try_emplace(key.text(), std::move(value));
  if (!inserted && it->second != value)
    throw std::logic_error("write-once violation for '" + key.text() + "': " + render(it->second) + " vs " + render(value));
}

std::size_t CountTable::size() const {
  std::shared_lock lock(mutex_);
  return store_.size();
}

CountTable::Stats CountTable::stats() const { return {hits_.load(), misses_.load(), static_cast<std::uint64_t>(size())}; }

void CountTable::reset_stats() {
  hits_ = 0;
  misses_ = 0;
}

std::vector<std::pair<std::string, std::string>> CountTable::sorted_entries() const {
  std::vector<std::pair<std::string, std::string>> out;
  {
    std::shared_lock lock(mutex_);
    out.reserve(store_.size());
    for (const auto& [k, v] : store_) out.emplace_back(k, render(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExactnessViolation::ExactnessViolation(Kind kind, std::string state, const std::string& detail)
    : std::runtime_error((kind == Kind::divisor_zero ? "zero divisor" : "inexact division") + std::string(" at state [") + state +
                         "]: " + detail),
      kind_(kind),
      state_(std::move(state)) {}

// ---------------------------------------------------------------------------
// Engines

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

ExactInt solve(const ExactInt& rhs, const ExactInt& divisor, const CountKey& key) {
  if (divisor.is_zero()) throw ExactnessViolation(ExactnessViolation::Kind::divisor_zero, key.text(), "rhs = " + rhs.str());
  auto q = rhs.divide_exact(divisor);
  if (!q)
    throw ExactnessViolation(ExactnessViolation::Kind::inexact_division, key.text(),
                             "rhs = " + rhs.str() + ", divisor = " + divisor.str());
  return *q;
}

// Looks `key` up; on a miss computes and records it.
template <class Value, class Compute>
Value memo(CountTable& table, const CountKey& key, Compute&& compute) {
  if (auto hit = table.find(key)) return std::get<Value>(*hit);
  Value v = compute();
  table.insert(key, v);
  return v;
}

// Dense rows indexed [genus][size].
template <class T>
using Grid = std::vector<std::vector<T>>;

template <class T>
Grid<T> make_grid(std::int64_t genera, std::int64_t sizes) {
  return Grid<T>(static_cast<std::size_t>(genera), std::vector<T>(static_cast<std::size_t>(sizes)));
}

inline std::size_t at(std::int64_t i) { return static_cast<std::size_t>(i); }

}  // namespace

ExactInt Counter::bipartite(std::int64_t g, const DegreeProfile& f) {
  require(g >= 0, "genus must be nonnegative");
  require(f.edges() <= kMaxProfileEdges, "profile exceeds the edge cap");
  if (f.empty()) return ExactInt{};
  const auto top_key = CountKey::bipartite(g, f);
  if (auto hit = table_.find(top_key)) return std::get<ExactInt>(*hit);

  // Sub-profiles of f are indexed in mixed radix over f's multiplicities with
  // the last entry varying fastest; the complement of index i is total - i.
  const auto& entries = f.entries();
  const std::size_t J = entries.size();
  std::vector<std::int64_t> stride(J, 1);
  for (std::size_t j = J - 1; j-- > 0;) stride[j] = stride[j + 1] * (entries[j + 1].multiplicity + 1);
  const std::int64_t states = stride[0] * (entries[0].multiplicity + 1);

  std::vector<std::vector<std::int64_t>> digits(at(states), std::vector<std::int64_t>(J));
  std::vector<std::int64_t> edges(at(states)), faces(at(states));
  std::vector<DegreeProfile> profile(at(states));
  for (std::int64_t idx = 0; idx < states; ++idx) {
    std::vector<DegreeProfile::Entry> e;
    std::int64_t rem = idx;
    for (std::size_t j = 0; j < J; ++j) {
      auto d = rem / stride[j];
      rem %= stride[j];
      digits[at(idx)][j] = d;
      edges[at(idx)] += d * entries[j].half_degree;
      faces[at(idx)] += d;
      e.push_back({entries[j].half_degree, d});
    }
    profile[at(idx)] = DegreeProfile(std::move(e));
  }

  // Levels of equal edge count, ascending.
  std::vector<std::int64_t> order(at(states));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return edges[at(a)] < edges[at(b)]; });

  BinomialTable binom(2 * g + 2);
  binom.reserve(f.edges() + 2);
  auto val = make_grid<ExactInt>(g + 1, states);

  auto compute = [&](std::int64_t gg, std::int64_t p) -> ExactInt {
    const std::int64_t n = edges[at(p)];
    const std::int64_t F = faces[at(p)];
    const std::int64_t v = 2 - 2 * gg + n - F;
    if (gg == 0 && F == 1) return catalan(n);
    const auto key = CountKey::bipartite(gg, profile[at(p)]);
    ExactInt rhs, inner, prod;
    // Odometer over s <= p componentwise, skipping s = 0 and s = p.
    std::vector<std::int64_t> s(J, 0);
    const auto& pd = digits[at(p)];
    while (true) {
      std::size_t j = J;
      while (j-- > 0) {
        if (s[j] < pd[j]) {
          ++s[j];
          break;
        }
        s[j] = 0;
      }
      if (j == static_cast<std::size_t>(-1)) break;
      std::int64_t si = 0;
      for (std::size_t q = 0; q < J; ++q) si += s[q] * stride[q];
      if (si == p) continue;
      const std::int64_t ti = p - si;
      const std::int64_t n1 = edges[at(si)];
      const std::int64_t n2 = edges[at(ti)];
      const std::int64_t f2 = faces[at(ti)];
      for (std::int64_t g2 = 0; g2 <= gg; ++g2) {
        const auto& right = val[at(g2)][at(ti)];
        if (right.is_zero()) continue;
        const std::int64_t v2 = 2 - 2 * g2 + n2 - f2;
        inner = 0;
        for (std::int64_t g1 = 0; g1 + g2 <= gg; ++g1) {
          const auto gs = gg - g1 - g2;
          const auto& b = binom(v2, 2 * gs + 2);
          const auto& left = val[at(g1)][at(si)];
          if (b.is_zero() || left.is_zero()) continue;
          prod = b;
          prod *= left;
          inner += prod;
        }
        if (inner.is_zero()) continue;
        inner.scale(1 + n1);
        rhs.add_product(inner, right);
      }
    }
    for (std::int64_t gs = 1; gs <= gg; ++gs) rhs.add_product(binom(v + 2 * gs, 2 * gs + 2), val[at(gg - gs)][at(p)]);
    const ExactInt divisor = binom(n + 1, 2) - binom(v, 2);
    return solve(rhs, divisor, key);
  };

  std::size_t begin = 0;
  while (begin < order.size()) {
    auto end = begin;
    while (end < order.size() && edges[at(order[end])] == edges[at(order[begin])]) ++end;
    if (edges[at(order[begin])] > 0) {
      for (std::int64_t gg = 0; gg <= g; ++gg) {
        detail::parallel_for(end - begin, threads_, [&](std::size_t i) {
          const auto p = order[begin + i];
          val[at(gg)][at(p)] = memo<ExactInt>(table_, CountKey::bipartite(gg, profile[at(p)]), [&] { return compute(gg, p); });
        });
      }
    }
    begin = end;
  }
  return val[at(g)][at(states - 1)];
}

ExactInt Counter::angulation(std::int64_t k, std::int64_t g, std::int64_t n) {
  require(k >= 2, "angulation needs k >= 2");
  require(n >= 1, "angulation needs n >= 1");
  require(g >= 0, "genus must be nonnegative");
  if (auto hit = table_.find(CountKey::angulation(k, g, n))) return std::get<ExactInt>(*hit);

  BinomialTable binom(2 * g + 2);
  binom.reserve(k * n + 2);
  auto A = make_grid<ExactInt>(g + 1, n + 1);

  auto compute = [&](std::int64_t gg, std::int64_t nn) -> ExactInt {
    if (gg == 0 && nn == 1) return catalan(k);
    ExactInt rhs, inner, prod;
    for (std::int64_t n1 = 1; n1 < nn; ++n1) {
      const auto n2 = nn - n1;
      for (std::int64_t g2 = 0; g2 <= gg; ++g2) {
        const auto& right = A[at(g2)][at(n2)];
        if (right.is_zero()) continue;
        const auto v2 = (k - 1) * n2 + 2 - 2 * g2;
        inner = 0;
        for (std::int64_t g1 = 0; g1 + g2 <= gg; ++g1) {
          const auto& b = binom(v2, 2 * (gg - g1 - g2) + 2);
          const auto& left = A[at(g1)][at(n1)];
          if (b.is_zero() || left.is_zero()) continue;
          prod = b;
          prod *= left;
          inner += prod;
        }
        if (inner.is_zero()) continue;
        inner.scale(k * n1 + 1);
        rhs.add_product(inner, right);
      }
    }
    for (std::int64_t gs = 1; gs <= gg; ++gs)
      rhs.add_product(binom((k - 1) * nn + 2 - 2 * (gg - gs), 2 * gs + 2), A[at(gg - gs)][at(nn)]);
    const ExactInt divisor = binom(k * nn + 1, 2) - binom((k - 1) * nn + 2 - 2 * gg, 2);
    return solve(rhs, divisor, CountKey::angulation(k, gg, nn));
  };

  for (std::int64_t nn = 1; nn <= n; ++nn)
    for (std::int64_t gg = 0; gg <= g; ++gg)
      A[at(gg)][at(nn)] = memo<ExactInt>(table_, CountKey::angulation(k, gg, nn), [&] { return compute(gg, nn); });
  return A[at(g)][at(n)];
}

ExactInt Counter::constellation(std::int64_t m, std::int64_t g, std::int64_t n) {
  require(m >= 2, "constellation needs m >= 2");
  require(n >= 1, "constellation needs n >= 1");
  require(g >= 0, "genus must be nonnegative");
  if (auto hit = table_.find(CountKey::constellation(m, g, n))) return std::get<ExactInt>(*hit);

  BinomialTable binom(2 * g + 2);
  binom.reserve((m - 1) * n + 2);
  auto C = make_grid<ExactInt>(g + 1, n + 1);

  auto compute = [&](std::int64_t gg, std::int64_t nn) -> ExactInt {
    if (nn == 1) return gg == 0 ? ExactInt(1) : ExactInt{};
    ExactInt rhs, inner, prod;
    for (std::int64_t n1 = 1; n1 < nn; ++n1) {
      const auto n2 = nn - n1;
      for (std::int64_t g2 = 0; g2 <= gg; ++g2) {
        const auto& right = C[at(g2)][at(n2)];
        if (right.is_zero()) continue;
        const auto v2 = (m - 1) * n2 + 2 - 2 * g2;
        inner = 0;
        for (std::int64_t g1 = 0; g1 + g2 <= gg; ++g1) {
          const auto& b = binom(v2, 2 * (gg - g1 - g2) + 2);
          const auto& left = C[at(g1)][at(n1)];
          if (b.is_zero() || left.is_zero()) continue;
          prod = b;
          prod *= left;
          inner += prod;
        }
        if (inner.is_zero()) continue;
        inner.scale(n1);
        rhs.add_product(inner, right);
      }
    }
    return solve(rhs, binom(nn, 2), CountKey::constellation(m, gg, nn));
  };

  for (std::int64_t nn = 1; nn <= n; ++nn)
    detail::parallel_for(at(g + 1), threads_, [&](std::size_t gi) {
      const auto gg = static_cast<std::int64_t>(gi);
      C[gi][at(nn)] = memo<ExactInt>(table_, CountKey::constellation(m, gg, nn), [&] { return compute(gg, nn); });
    });
  return C[at(g)][at(n)];
}

ExactInt Counter::constellation_by_faces(std::int64_t m, std::int64_t g, std::int64_t n, std::int64_t f, FaceVariant variant) {
  require(m >= 2, "constellation needs m >= 2");
  require(n >= 1, "constellation needs n >= 1");
  require(g >= 0, "genus must be nonnegative");
  require(f >= 1, "face count must be at least 1");
  if (auto hit = table_.find(CountKey::constellation_faces(m, g, n, f, variant))) return std::get<ExactInt>(*hit);

  // The face permutation lives in S_n, so no state has more than n faces.
  const std::int64_t fmax = std::max(n, f);
  BinomialTable binom(2 * g + 2);
  binom.reserve((m - 1) * n + 2 * g + fmax + 2);
  // C[g][n][f]
  std::vector<Grid<ExactInt>> C(at(g + 1), make_grid<ExactInt>(n + 1, fmax + 1));

  auto top = [&](std::int64_t n2, std::int64_t g2, std::int64_t f2) {
    return variant == FaceVariant::corrected ? (m - 1) * n2 + 2 - 2 * g2 - f2 : 2 * g2 - f2 + (m - 1) * n2;
  };

  auto compute = [&](std::int64_t gg, std::int64_t nn, std::int64_t ff) -> ExactInt {
    if (nn == 1) return (gg == 0 && ff == 1) ? ExactInt(1) : ExactInt{};
    ExactInt rhs, term;
    for (std::int64_t n1 = 1; n1 < nn; ++n1) {
      const auto n2 = nn - n1;
      for (std::int64_t g2 = 0; g2 <= gg; ++g2) {
        for (std::int64_t f2 = 1; f2 <= n2; ++f2) {
          const auto& right = C[at(g2)][at(n2)][at(f2)];
          if (right.is_zero()) continue;
          for (std::int64_t g1 = 0; g1 + g2 <= gg; ++g1) {
            const auto gs = gg - g1 - g2;
            for (std::int64_t kk = 0; kk <= 2 * gs + 2; ++kk) {
              const auto f1 = ff + kk - f2;
              if (f1 < 1 || f1 > n1) continue;
              const auto& left = C[at(g1)][at(n1)][at(f1)];
              if (left.is_zero()) continue;
              const auto& b1 = binom(f2, kk);
              const auto& b2 = binom(top(n2, g2, f2), 2 * gs + 2 - kk);
              if (b1.is_zero() || b2.is_zero()) continue;
              term = b1;
              term *= b2;
              term *= left;
              term *= right;
              term.scale(n1);
              rhs += term;
            }
          }
        }
      }
    }
    return solve(rhs, binom(nn, 2), CountKey::constellation_faces(m, gg, nn, ff, variant));
  };

  for (std::int64_t nn = 1; nn < n; ++nn) {
    // States (g, f) at the same n are independent.
    const std::int64_t width = fmax;
    detail::parallel_for(at((g + 1) * width), threads_, [&](std::size_t i) {
      const auto gg = static_cast<std::int64_t>(i) / width;
      const auto ff = static_cast<std::int64_t>(i) % width + 1;
      C[at(gg)][at(nn)][at(ff)] =
          memo<ExactInt>(table_, CountKey::constellation_faces(m, gg, nn, ff, variant), [&] { return compute(gg, nn, ff); });
    });
  }
  // Nothing at the top level feeds the target, so only the target is evaluated there.
  return memo<ExactInt>(table_, CountKey::constellation_faces(m, g, n, f, variant), [&] { return compute(g, n, f); });
}

ExactInt Counter::one_faced(std::int64_t m, std::int64_t g, std::int64_t n, bool allow_experimental) {
  require(m >= 2, "one-faced constellations need m >= 2");
  require(n >= 1, "one-faced constellations need n >= 1");
  require(g >= 0, "genus must be nonnegative");
  if (one_faced_is_experimental(m) && !allow_experimental)
    throw ExperimentalDisabled("one-faced counts for m >= 3 are experimental; pass the experimental flag to evaluate them");
  if (auto hit = table_.find(CountKey::onefaced(m, g, n))) return std::get<ExactInt>(*hit);

  BinomialTable binom(2 * g + 2);
  binom.reserve((m - 1) * n + 2);
  std::vector<ExactInt> U(at(g + 1));

  // n (n+1)^{m-1} / 2; n(n+1) is even.
  ExactInt marked = ExactInt(n) * ExactInt(n + 1);
  for (std::int64_t i = 2; i < m; ++i) marked.scale(n + 1);
  marked = *marked.divide_exact(ExactInt(2));

  auto base = [&]() -> ExactInt {
    if (m == 2) return catalan(n);
    oracle::OracleQuery q;
    q.model = oracle::Model::one_faced;
    q.m = static_cast<int>(m);
    q.n = static_cast<int>(n);
    q.genus = 0;
    q.threads = threads_;
    return oracle::enumerate_constellations(q).rooted(0).numerator();
  };

  auto compute = [&](std::int64_t gg) -> ExactInt {
    if (gg == 0) return base();
    ExactInt rhs;
    for (std::int64_t gs = 1; gs <= gg; ++gs)
      rhs.add_product(binom((m - 1) * n + 1 - 2 * (gg - gs), 2 + 2 * gs), U[at(gg - gs)]);
    const ExactInt divisor = marked - binom((m - 1) * n + 1 - 2 * gg, 2);
    return solve(rhs, divisor, CountKey::onefaced(m, gg, n));
  };

  for (std::int64_t gg = 0; gg <= g; ++gg)
    U[at(gg)] = memo<ExactInt>(table_, CountKey::onefaced(m, gg, n), [&] { return compute(gg); });
  return U[at(g)];
}

ExactRational Counter::monotone(std::int64_t g, std::int64_t n) {
  require(n >= 1, "monotone Hurwitz numbers need n >= 1");
  require(g >= 0, "genus must be nonnegative");
  if (auto hit = table_.find(CountKey::monotone(g, n))) return std::get<ExactRational>(*hit);

  BinomialTable binom(2 * g + 2);
  binom.reserve(3 * n + 4 * g + 2);
  auto H = make_grid<ExactRational>(g + 1, n + 1);

  auto compute = [&](std::int64_t gg, std::int64_t nn) -> ExactRational {
    if (nn == 1) return gg == 0 ? ExactRational(1) : ExactRational{};
    ExactRational rhs;
    for (std::int64_t n1 = 1; n1 < nn; ++n1) {
      const auto n2 = nn - n1;
      for (std::int64_t g2 = 0; g2 <= gg; ++g2) {
        const auto& right = H[at(g2)][at(n2)];
        if (right.sign() == 0) continue;
        ExactRational inner;
        for (std::int64_t g1 = 0; g1 + g2 <= gg; ++g1) {
          const auto gs = gg - g1 - g2;
          const auto& b = binom(3 * n2 + 2 * g2 + 2 * gs - 1, 2 * gs + 2);
          const auto& left = H[at(g1)][at(n1)];
          if (b.is_zero() || left.sign() == 0) continue;
          inner += ExactRational(b) * left;
        }
        if (inner.sign() == 0) continue;
        rhs += inner * right * ExactRational(n1 * n1 * n2);
      }
    }
    return rhs / ExactRational(ExactInt(nn) * binom(nn, 2));
  };

  for (std::int64_t nn = 1; nn <= n; ++nn)
    detail::parallel_for(at(g + 1), threads_, [&](std::size_t gi) {
      const auto gg = static_cast<std::int64_t>(gi);
      H[gi][at(nn)] = memo<ExactRational>(table_, CountKey::monotone(gg, nn), [&] { return compute(gg, nn); });
    });
  return H[at(g)][at(n)];
}

ExactInt count_bipartite(std::int64_t g, const DegreeProfile& f) {
  CountTable t;
  return Counter(t).bipartite(g, f);
}
ExactInt count_angulation(std::int64_t k, std::int64_t g, std::int64_t n) {
  CountTable t;
  return Counter(t).angulation(k, g, n);
}
ExactInt count_constellation(std::int64_t m, std::int64_t g, std::int64_t n) {
  CountTable t;
  return Counter(t).constellation(m, g, n);
}
ExactInt count_constellation_by_faces(std::int64_t m, std::int64_t g, std::int64_t n, std::int64_t f, FaceVariant variant) {
  CountTable t;
  return Counter(t).constellation_by_faces(m, g, n, f, variant);
}
ExactInt count_one_faced(std::int64_t m, std::int64_t g, std::int64_t n, bool allow_experimental) {
  CountTable t;
  return Counter(t).one_faced(m, g, n, allow_experimental);
}
ExactRational count_monotone(std::int64_t g, std::int64_t n) {
  CountTable t;
  return Counter(t).monotone(g, n);
}

}  // namespace mapcount
