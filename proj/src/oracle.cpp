#include "mapcount/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace mapcount::oracle {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

ExactInt factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(std::max(n, 0)));
  return ExactInt(std::move(f));
}

std::vector<int> cycle_lengths(std::span<const int> p) {
  std::vector<int> lens;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::string cycle_type_key(const std::vector<int>& lens) {
  std::vector<std::int64_t> l(lens.begin(), lens.end());
  return DegreeProfile::from_cycle_lengths(l).str();
}

void validate_n(int n) {
  if (n < 1) throw std::invalid_argument("oracle needs n >= 1");
  if (n > 20) throw std::invalid_argument("oracle n out of range");
}

// Partitions of n, largest part first.
std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxp) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Size of the conjugacy class with the given cycle type: n! / prod(i^{m_i} m_i!).
std::uint64_t class_size(int n, const std::vector<int>& lambda) {
  std::map<int, int> mult;
  for (int p : lambda) ++mult[p];
  std::uint64_t z = 1;
  for (auto [i, mi] : mult) {
    for (int r = 0; r < mi; ++r) z *= static_cast<std::uint64_t>(i);
    z *= factorial_u64(mi);
  }
  return factorial_u64(n) / z;
}

struct LocalTally {
  std::map<std::pair<std::int64_t, std::vector<int>>, std::uint64_t> counts;
  std::uint64_t work = 0;
};

bool accepts(const FaceFilter& f, const std::vector<int>& lens) {
  switch (f.kind) {
    case FaceFilter::Kind::none:
      return true;
    case FaceFilter::Kind::face_count:
      return static_cast<std::int64_t>(lens.size()) == f.face_count;
    case FaceFilter::Kind::cycle_type: {
      std::vector<std::int64_t> l(lens.begin(), lens.end());
      return DegreeProfile::from_cycle_lengths(l) == f.cycle_type;
    }
    case FaceFilter::Kind::single_cycle:
      return lens.size() == 1;
  }
  return false;
}

template <class Fn>
void run_workers(unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1) {
    fn(0u, 1u);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back([&, w] { fn(w, threads); });
  for (auto& t : pool) t.join();
}

}  // namespace

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& c : cycles)
    for (int x : c) {
      if (x < 0 || x >= n) throw std::invalid_argument("cycle point " + std::to_string(x) + " out of range");
      if (used[static_cast<std::size_t>(x)]) throw std::invalid_argument("cycle point " + std::to_string(x) + " repeated");
      used[static_cast<std::size_t>(x)] = true;
    }
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
  return p;
}

int cycle_count(std::span<const int> p) { return static_cast<int>(cycle_lengths(p).size()); }

bool is_transitive(std::span<const Permutation> perms, int n) {
  if (n <= 1) return true;
  UnionFind uf(n);
  int components = n;
  for (const auto& p : perms)
    for (int x = 0; x < n; ++x)
      if (uf.unite(x, p[static_cast<std::size_t>(x)])) --components;
  return components == 1;
}

std::string to_string(Model m) {
  switch (m) {
    case Model::constellation: return "constellation";
    case Model::bipartite_profile: return "bipartite_profile";
    case Model::one_faced: return "one_faced";
    case Model::monotone: return "monotone";
  }
  return "?";
}

std::map<std::int64_t, ExactRational> OracleResult::rooted_by_genus() const {
  std::map<std::int64_t, ExactRational> out;
  for (const auto& [key, t] : table) out[key.first] += t.rooted;
  return out;
}

double estimated_work(const OracleQuery& q) {
  double nf = std::tgamma(q.n + 1.0);
  if (q.reduce_first) return static_cast<double>(partitions(q.n).size()) * std::pow(nf, q.m - 1);
  return std::pow(nf, q.m);
}

OracleResult enumerate_constellations(const OracleQuery& q_in) {
  OracleQuery q = q_in;
  if (q.model == Model::monotone) throw std::invalid_argument("enumerate_constellations does not handle the monotone model");
  if (q.model == Model::bipartite_profile) {
    if (q.m != 2) throw std::invalid_argument("bipartite_profile requires m = 2");
    if (q.filter.kind != FaceFilter::Kind::cycle_type) throw std::invalid_argument("bipartite_profile requires a cycle-type filter");
    if (q.filter.cycle_type.edges() != q.n) throw std::invalid_argument("profile edge count must equal n");
  }
  if (q.model == Model::one_faced) q.filter = FaceFilter::one_face();
  if (q.m < 1) throw std::invalid_argument("oracle needs m >= 1");
  validate_n(q.n);
  const double est = estimated_work(q);
  if (est > q.work_cap)
    throw WorkCapExceeded("oracle work estimate " + std::to_string(static_cast<long double>(est)) + " exceeds cap " +
                          std::to_string(static_cast<long double>(q.work_cap)));

  const int n = q.n;
  const int m = q.m;
  // All permutations, lexicographic, flattened.
  std::vector<int> all;
  std::vector<int> cyc;
  {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      all.insert(all.end(), p.begin(), p.end());
      cyc.push_back(cycle_count(p));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  const auto count = static_cast<std::int64_t>(cyc.size());
  auto perm_at = [&](std::int64_t idx) { return std::span<const int>(all.data() + idx * n, static_cast<std::size_t>(n)); };

  // First-factor choices with their weights.
  std::vector<std::pair<std::int64_t, std::uint64_t>> firsts;
  std::vector<Permutation> reps;
  if (q.reduce_first) {
    for (const auto& lambda : partitions(n)) {
      std::vector<std::vector<int>> cycles;
      int next = 0;
      for (int len : lambda) {
        std::vector<int> c;
        for (int i = 0; i < len; ++i) c.push_back(next++);
        cycles.push_back(c);
      }
      auto rep = from_cycles(n, cycles);
      // Locate rep's index among `all`.
      for (std::int64_t i = 0; i < count; ++i) {
        auto p = perm_at(i);
        if (std::equal(p.begin(), p.end(), rep.begin())) {
          firsts.emplace_back(i, class_size(n, lambda));
          break;
        }
      }
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) firsts.emplace_back(i, 1);
  }

  std::vector<LocalTally> locals(std::max(1u, q.threads));
  run_workers(q.threads, [&](unsigned w, unsigned stride) {
    auto& local = locals[w];
    std::vector<std::int64_t> idx(static_cast<std::size_t>(m), 0);
    // prefix[l] holds sigma_1 ... sigma_{l+1} in one-line form.
    std::vector<std::vector<int>> prefix(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n)));
    UnionFind uf(n);
    for (std::size_t fi = w; fi < firsts.size(); fi += stride) {
      auto [first, weight] = firsts[fi];
      idx.assign(static_cast<std::size_t>(m), 0);
      idx[0] = first;
      int dirty = 0;
      while (true) {
        for (int l = dirty; l < m; ++l) {
          auto s = perm_at(idx[static_cast<std::size_t>(l)]);
          auto& out = prefix[static_cast<std::size_t>(l)];
          if (l == 0) {
            std::copy(s.begin(), s.end(), out.begin());
          } else {
            const auto& prev = prefix[static_cast<std::size_t>(l - 1)];
            for (int x = 0; x < n; ++x) out[static_cast<std::size_t>(x)] = prev[static_cast<std::size_t>(s[static_cast<std::size_t>(x)])];
          }
        }
        ++local.work;

        std::iota(uf.parent.begin(), uf.parent.end(), 0);
        int components = n;
        std::int64_t colored = 0;
        for (int l = 0; l < m; ++l) {
          auto s = perm_at(idx[static_cast<std::size_t>(l)]);
          colored += cyc[static_cast<std::size_t>(idx[static_cast<std::size_t>(l)])];
          for (int x = 0; x < n && components > 1; ++x)
            if (uf.unite(x, s[static_cast<std::size_t>(x)])) --components;
        }
        if (components == 1) {
          auto lens = cycle_lengths(prefix[static_cast<std::size_t>(m - 1)]);
          const std::int64_t vertices = n + colored;
          const std::int64_t edges = static_cast<std::int64_t>(m) * n;
          const std::int64_t chi = vertices - edges + static_cast<std::int64_t>(lens.size());
          if ((chi % 2) != 0) throw std::logic_error("odd Euler characteristic in oracle");
          const std::int64_t genus = (2 - chi) / 2;
          if (genus < 0) throw std::logic_error("negative genus in oracle");
          if ((!q.genus || *q.genus == genus) && accepts(q.filter, lens))
            local.counts[{genus, std::move(lens)}] += weight;
        }

        // Odometer over factors 2..m.
        int l = m - 1;
        while (l >= 1 && ++idx[static_cast<std::size_t>(l)] == count) idx[static_cast<std::size_t>(l--)] = 0;
        if (l < 1) break;
        dirty = l;
      }
    }
  });

  OracleResult result;
  std::map<std::pair<std::int64_t, std::vector<int>>, std::uint64_t> merged;
  for (const auto& local : locals) {
    result.work += local.work;
    for (const auto& [k, v] : local.counts) merged[k] += v;
  }
  const ExactInt rooting = factorial(n - 1);
  for (const auto& [k, v] : merged) {
    Tally t;
    t.labeled = ExactInt(static_cast<std::int64_t>(v));
    auto rooted = t.labeled.divide_exact(rooting);
    if (!rooted) throw std::logic_error("labeled count not divisible by (n-1)! in oracle");
    t.rooted = ExactRational(*rooted);
    result.table[{k.first, cycle_type_key(k.second)}] = t;
  }
  return result;
}

OracleResult enumerate_monotone(int n, std::int64_t genus, unsigned threads) {
  validate_n(n);
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  const std::int64_t r = 2 * static_cast<std::int64_t>(n) - 2 + 2 * genus;
  if (r > kMaxMonotoneDepth)
    throw WorkCapExceeded("monotone search depth " + std::to_string(r) + " exceeds " + std::to_string(kMaxMonotoneDepth));

  struct Transposition {
    int a, b;  // a < b; b is the maximum
  };
  std::vector<Transposition> ts;
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < b; ++a) ts.push_back({a, b});

  struct Worker {
    std::uint64_t found = 0;
    std::uint64_t work = 0;
  };
  std::vector<Worker> workers(std::max(1u, threads));

  run_workers(threads, [&](unsigned w, unsigned stride) {
    auto& me = workers[w];
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Transposition> seq;
    // Minimal transposition count to reach the identity: n - cycles(perm).
    auto distance = [&] { return n - cycle_count(perm); };
    auto dfs = [&](auto&& self, std::int64_t depth, std::size_t from) -> void {
      if (depth > 0 || w == 0) ++me.work;
      const std::int64_t remaining = r - depth;
      const int d = distance();
      if (d > remaining || ((remaining - d) % 2) != 0) return;
      if (remaining == 0) {
        UnionFind uf(n);
        int components = n;
        for (const auto& t : seq)
          if (uf.unite(t.a, t.b)) --components;
        if (components == 1) ++me.found;
        return;
      }
      for (std::size_t i = from; i < ts.size(); ++i) {
        if (depth == 0 && (i % stride) != w) continue;
        const auto& t = ts[i];
        std::swap(perm[static_cast<std::size_t>(t.a)], perm[static_cast<std::size_t>(t.b)]);
        seq.push_back(t);
        // Transpositions are ordered by their maximum, so the next admissible
        // choices start at the first transposition sharing this maximum.
        std::size_t next = static_cast<std::size_t>(t.b) * static_cast<std::size_t>(t.b - 1) / 2;
        self(self, depth + 1, next);
        seq.pop_back();
        std::swap(perm[static_cast<std::size_t>(t.a)], perm[static_cast<std::size_t>(t.b)]);
      }
    };
    if (r == 0) {
      if (w == 0) {
        ++me.work;
        if (n == 1) ++me.found;
      }
      return;
    }
    dfs(dfs, 0, 0);
  });

  std::uint64_t found = 0;
  OracleResult result;
  for (const auto& wk : workers) {
    found += wk.found;
    result.work += wk.work;
  }
  if (found > 0) {
    Tally t;
    t.labeled = ExactInt(static_cast<std::int64_t>(found));
    t.rooted = ExactRational(t.labeled, factorial(n));
    result.table[{genus, ""}] = t;
  }
  return result;
}

OracleResult run(const OracleQuery& q) {
  if (q.model == Model::monotone) {
    if (!q.genus) throw std::invalid_argument("monotone oracle requires a genus");
    return enumerate_monotone(q.n, *q.genus, q.threads);
  }
  return enumerate_constellations(q);
}

}  // namespace mapcount::oracle
