#include "mapenum/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "mapenum/error.hpp"

namespace mapenum {

namespace {

constexpr int kMaxWickLegs = 12;

/// A map as seen by the enumeration hot loop: 0-based sigma images, alpha
/// fixed to i <-> i^1.
struct RawMap {
  const int* sigma = nullptr;
  int half_edges = 0;
  int vertices = 0;
  int faces = 0;
  int genus = 0;
  const DegreeProfile* profile = nullptr;
  /// Index of the profile in cycle_types(2m, filter).
  std::size_t type_index = 0;
};

using RawVisitor = std::function<void(int worker, const RawMap&)>;

void check_edge_cap(int m, const EnumerationOptions& options) {
  if (m < 1) throw Error(Errc::invalid_argument, "edge count must be >= 1");
  const int cap = std::min(options.max_edges, kHardEdgeCap);
  if (m > cap)
    throw Error(Errc::too_large, std::to_string(m) + " edges exceeds the enumeration cap of " +
                                     std::to_string(cap));
}

int resolve_threads(const EnumerationOptions& options) {
  int n = options.threads;
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(n, 1);
}

long odd_double_factorial(int n) {
  long out = 1;
  for (int k = n; k > 1; k -= 2) out *= k;
  return out;
}

void partitions(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

/// Generates each permutation of {0..p-1} with a prescribed cycle type
/// exactly once: the cycle through the smallest unused point is chosen
/// first, starting at that point.
class ClassGenerator {
 public:
  ClassGenerator(int p, const DegreeProfile& type, std::function<void(const int*)> emit)
      : p_(p), counts_(static_cast<std::size_t>(p + 1), 0), emit_(std::move(emit)) {
    for (auto [len, k] : type.counts()) counts_[static_cast<std::size_t>(len)] = k;
    full_ = (p == 32) ? ~0u : ((1u << p) - 1);
  }

  /// Runs the sub-enumeration where the cycle through 0 has length `len` and
  /// sigma(0) = `second` (ignored when len == 1).
  void run(int len, int second) {
    used_ = 1u;
    --counts_[static_cast<std::size_t>(len)];
    if (len == 1) {
      sigma_[0] = 0;
      fill();
    } else {
      sigma_[0] = second;
      used_ |= 1u << second;
      extend(0, second, len - 2);
    }
    ++counts_[static_cast<std::size_t>(len)];
  }

 private:
  void fill() {
    if (used_ == full_) {
      emit_(sigma_);
      return;
    }
    const int a = __builtin_ctz(~used_);
    for (int len = 1; len <= p_; ++len) {
      auto& k = counts_[static_cast<std::size_t>(len)];
      if (k == 0) continue;
      --k;
      used_ |= 1u << a;
      extend(a, a, len - 1);
      used_ &= ~(1u << a);
      ++k;
    }
  }

  void extend(int first, int last, int remaining) {
    if (remaining == 0) {
      sigma_[last] = first;
      fill();
      return;
    }
    for (int b = 0; b < p_; ++b) {
      if (used_ & (1u << b)) continue;
      sigma_[last] = b;
      used_ |= 1u << b;
      extend(first, b, remaining - 1);
      used_ &= ~(1u << b);
    }
  }

  int p_;
  std::vector<int> counts_;
  std::function<void(const int*)> emit_;
  int sigma_[2 * kHardEdgeCap] = {};
  unsigned used_ = 0;
  unsigned full_ = 0;
};

bool transitive_with(const int* sigma, const int* alpha, int p) {
  unsigned reached = 1u;
  int stack[2 * kHardEdgeCap];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const int x = stack[--top];
    for (int y : {sigma[x], alpha[x]}) {
      if (!(reached & (1u << y))) {
        reached |= 1u << y;
        stack[top++] = y;
      }
    }
  }
  return reached == ((1u << p) - 1);
}

int face_count(const int* sigma, const int* alpha, int p) {
  unsigned seen = 0;
  int faces = 0;
  for (int start = 0; start < p; ++start) {
    if (seen & (1u << start)) continue;
    ++faces;
    for (int i = start; !(seen & (1u << i)); i = sigma[alpha[i]]) seen |= 1u << i;
  }
  return faces;
}

std::vector<DegreeProfile> cycle_types(int p, const MapFilter& filter) {
  std::vector<DegreeProfile> types;
  if (filter.vertices) {
    if (filter.vertices->total_degree() == p) types.push_back(*filter.vertices);
    return types;
  }
  std::vector<std::vector<int>> parts;
  std::vector<int> current;
  partitions(p, p, current, parts);
  for (const auto& lam : parts) types.push_back(DegreeProfile::from_parts(lam));
  return types;
}

/// Runs the fixed-alpha enumeration, calling `visit` from worker threads.
/// Returns the number of workers used (visitor worker ids are below it).
int enumerate_raw(int m, const MapFilter& filter, const EnumerationOptions& options,
                  int workers, const RawVisitor& visit) {
  const int p = 2 * m;
  struct Task {
    std::size_t type;
    int len;
    int second;
  };
  const auto types = cycle_types(p, filter);
  std::vector<Task> tasks;
  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    for (auto [len, k] : types[ti].counts()) {
      if (len == 1) {
        tasks.push_back({ti, 1, 0});
      } else {
        for (int second = 1; second < p; ++second) tasks.push_back({ti, len, second});
      }
    }
  }

  int alpha[2 * kHardEdgeCap];
  for (int i = 0; i < p; ++i) alpha[i] = i ^ 1;

  std::atomic<std::size_t> next{0};
  auto work = [&](int worker) {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const auto& task = tasks[t];
      const DegreeProfile& type = types[task.type];
      const int vertices = type.total_count();
      ClassGenerator gen(p, type, [&](const int* sigma) {
        if (!transitive_with(sigma, alpha, p)) return;
        const int faces = face_count(sigma, alpha, p);
        const int chi = vertices - m + faces;
        const int genus = (2 - chi) / 2;
        if (filter.genus && *filter.genus != genus) return;
        visit(worker, RawMap{sigma, p, vertices, faces, genus, &type, task.type});
      });
      gen.run(task.len, task.second);
    }
  };
  (void)options;

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  return workers;
}

CombMap to_map(const RawMap& raw) {
  std::vector<int> s(static_cast<std::size_t>(raw.half_edges));
  std::vector<int> a(static_cast<std::size_t>(raw.half_edges));
  for (int i = 0; i < raw.half_edges; ++i) {
    s[static_cast<std::size_t>(i)] = raw.sigma[i] + 1;
    a[static_cast<std::size_t>(i)] = (i ^ 1) + 1;
  }
  return make_map(Permutation(std::move(s)), Permutation(std::move(a)));
}

}  // namespace

std::vector<WeightedMap> enumerate_maps(int m, const MapFilter& filter,
                                        const EnumerationOptions& options) {
  check_edge_cap(m, options);
  const int workers = resolve_threads(options);
  const long multiplicity = odd_double_factorial(2 * m - 1);
  std::vector<std::vector<WeightedMap>> per_worker(static_cast<std::size_t>(workers));
  enumerate_raw(m, filter, options, workers, [&](int w, const RawMap& raw) {
    per_worker[static_cast<std::size_t>(w)].push_back({to_map(raw), multiplicity});
  });
  std::vector<WeightedMap> out;
  for (auto& chunk : per_worker)
    for (auto& wm : chunk) out.push_back(std::move(wm));
  std::sort(out.begin(), out.end(),
            [](const WeightedMap& a, const WeightedMap& b) { return a.map < b.map; });
  return out;
}

std::vector<WeightedMap> enumerate_map_pairs(int m, const MapFilter& filter) {
  if (m < 1 || m > 3)
    throw Error(Errc::too_large, "explicit (sigma, alpha) enumeration is limited to m <= 3");
  const int p = 2 * m;

  // All fixed-point-free involutions of {0..p-1}.
  std::vector<std::vector<int>> pairings;
  std::vector<int> alpha(static_cast<std::size_t>(p), -1);
  std::function<void()> pair_up = [&] {
    auto it = std::find(alpha.begin(), alpha.end(), -1);
    if (it == alpha.end()) {
      pairings.push_back(alpha);
      return;
    }
    const int a = static_cast<int>(it - alpha.begin());
    for (int b = a + 1; b < p; ++b) {
      if (alpha[static_cast<std::size_t>(b)] != -1) continue;
      alpha[static_cast<std::size_t>(a)] = b;
      alpha[static_cast<std::size_t>(b)] = a;
      pair_up();
      alpha[static_cast<std::size_t>(a)] = -1;
      alpha[static_cast<std::size_t>(b)] = -1;
    }
  };
  pair_up();

  std::vector<WeightedMap> out;
  std::vector<int> perm(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    for (const auto& pa : pairings) {
      if (!transitive_with(perm.data(), pa.data(), p)) continue;
      std::vector<int> s(perm.size());
      std::vector<int> a(pa.size());
      for (int i = 0; i < p; ++i) {
        s[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i)] + 1;
        a[static_cast<std::size_t>(i)] = pa[static_cast<std::size_t>(i)] + 1;
      }
      CombMap map = make_map(Permutation(std::move(s)), Permutation(std::move(a)));
      if (filter.vertices && degree_profile(map, CellKind::vertex) != *filter.vertices) continue;
      if (filter.genus && euler_genus(map).genus != *filter.genus) continue;
      out.push_back({std::move(map), 1});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

MapCensus map_census(int m, const MapFilter& filter, const EnumerationOptions& options) {
  check_edge_cap(m, options);
  const int workers = resolve_threads(options);
  using LocalKey = std::tuple<std::size_t, int, int>;
  std::vector<std::map<LocalKey, long>> per_worker(static_cast<std::size_t>(workers));
  enumerate_raw(m, filter, options, workers, [&](int w, const RawMap& raw) {
    ++per_worker[static_cast<std::size_t>(w)][{raw.type_index, raw.genus, raw.faces}];
  });
  const auto types = cycle_types(2 * m, filter);
  const BigInt multiplicity = odd_double_factorial(2 * m - 1);
  MapCensus census;
  for (const auto& local : per_worker)
    for (const auto& [key, count] : local) {
      const auto& [type, genus, faces] = key;
      census[CensusKey{genus, faces, types[type]}] += BigInt(count) * multiplicity;
    }
  return census;
}

BigInt labelled_count(const MapCensus& census) {
  BigInt total = 0;
  for (const auto& [key, count] : census) total += count;
  return total;
}

WPolynomial weight_monomial(const DegreeProfile& vertices) {
  return WPolynomial(Monomial(vertices.counts()), Rat(1));
}

GenusSeries labelled_free_energy(int m_max, const EnumerationOptions& options) {
  if (m_max >= 1) check_edge_cap(m_max, options);
  GenusSeries f(std::max(m_max, 0));
  for (int m = 1; m <= m_max; ++m) {
    const Rat norm(BigInt(1), factorial(2 * m));
    for (const auto& [key, count] : map_census(m, {}, options))
      f.add(key.genus, m, weight_monomial(key.vertices) * (Rat(count) * norm));
  }
  return f;
}

GenusSeries rooted_counts(int m_max, std::optional<int> root_degree,
                          const EnumerationOptions& options) {
  if (m_max >= 1) check_edge_cap(m_max, options);
  GenusSeries out(std::max(m_max, 0));
  if (!root_degree || *root_degree == 0) out.add(0, 0, 1);
  if (root_degree && *root_degree == 0) return out;
  for (int m = 1; m <= m_max; ++m) {
    const Rat norm(BigInt(1), factorial(2 * m));
    for (const auto& [key, count] : map_census(m, {}, options)) {
      const Rat base = Rat(count) * norm;
      if (!root_degree) {
        out.add(key.genus, m, weight_monomial(key.vertices) * (base * (2 * m)));
        continue;
      }
      const int n = *root_degree;
      const int k = key.vertices.count(n);
      if (k == 0) continue;
      auto rest = key.vertices.counts();
      --rest[n];
      // n half-edges at each of the k root candidates.
      out.add(key.genus, m, weight_monomial(DegreeProfile(rest)) * (base * (k * n)));
    }
  }
  return out;
}

TSeries two_leaf_counts(int m_max, const EnumerationOptions& options) {
  if (m_max >= 1) check_edge_cap(m_max, options);
  TSeries out(std::max(m_max, 0));
  for (int m = 1; m <= m_max; ++m) {
    const Rat norm(BigInt(1), factorial(2 * m));
    for (const auto& [key, count] : map_census(m, {0, std::nullopt}, options)) {
      const int k1 = key.vertices.count(1);
      if (k1 < 2) continue;
      auto rest = key.vertices.counts();
      rest[1] -= 2;
      // A marked degree-1 vertex roots the map, so dividing by (2m)! is exact.
      out[m] += weight_monomial(DegreeProfile(rest)) * (Rat(count) * norm * (k1 * (k1 - 1)));
    }
  }
  return out;
}

TSeries leaf_face_counts(int m_max, const EnumerationOptions& options) {
  if (m_max >= 1) check_edge_cap(m_max, options);
  TSeries out(std::max(m_max, 0));
  for (int m = 1; m <= m_max; ++m) {
    const Rat norm(BigInt(1), factorial(2 * m));
    for (const auto& [key, count] : map_census(m, {0, std::nullopt}, options)) {
      const int k1 = key.vertices.count(1);
      if (k1 < 1) continue;
      auto rest = key.vertices.counts();
      rest[1] -= 1;
      out[m] += weight_monomial(DegreeProfile(rest)) * (Rat(count) * norm * (k1 * key.faces));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wick expectations

Rat NGradedValue::coefficient(int n_exponent) const {
  auto it = by_n_exponent.find(n_exponent);
  return it == by_n_exponent.end() ? Rat(0) : it->second;
}

WPolynomial NGradedValue::as_polynomial() const {
  WPolynomial out;
  for (const auto& [e, c] : by_n_exponent) out += WPolynomial::n_power(e) * c;
  return out;
}

std::string NGradedValue::to_string() const {
  if (empty()) return "0";
  return "(" + as_polynomial().to_string() + ")*t^" + std::to_string(t_power);
}

NGradedValue wick_cycle_expectation(std::span<const int> cycle_lengths) {
  int p = 0;
  for (int len : cycle_lengths) {
    if (len < 1) throw Error(Errc::invalid_argument, "cycle lengths must be positive");
    p += len;
  }
  if (p > kMaxWickLegs)
    throw Error(Errc::too_large, "Wick sum over " + std::to_string(p) + " legs exceeds the cap");
  NGradedValue out;
  if (p % 2 != 0) return out;
  out.t_power = p / 2;

  // sigma: consecutive cycles of the requested lengths.
  std::vector<int> sigma(static_cast<std::size_t>(p));
  int start = 0;
  for (int len : cycle_lengths) {
    for (int i = 0; i < len; ++i) sigma[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    start += len;
  }

  std::map<int, long> by_faces;
  std::vector<int> alpha(static_cast<std::size_t>(p), -1);
  std::function<void()> pair_up = [&] {
    auto it = std::find(alpha.begin(), alpha.end(), -1);
    if (it == alpha.end()) {
      ++by_faces[face_count(sigma.data(), alpha.data(), p)];
      ++out.pairings;
      return;
    }
    const int a = static_cast<int>(it - alpha.begin());
    for (int b = a + 1; b < p; ++b) {
      if (alpha[static_cast<std::size_t>(b)] != -1) continue;
      alpha[static_cast<std::size_t>(a)] = b;
      alpha[static_cast<std::size_t>(b)] = a;
      pair_up();
      alpha[static_cast<std::size_t>(a)] = -1;
      alpha[static_cast<std::size_t>(b)] = -1;
    }
  };
  if (p == 0) {
    out.by_n_exponent[0] = 1;
    out.pairings = 1;
    return out;
  }
  pair_up();
  // (t/N)^{p/2} N^{c(sigma o alpha)}
  for (auto [faces, count] : by_faces) out.by_n_exponent[faces - p / 2] += Rat(count);
  return out;
}

NGradedValue partition_coefficient(const DegreeProfile& k) {
  const auto parts = k.parts();
  NGradedValue wick = wick_cycle_expectation(parts);
  if (wick.empty()) return wick;
  BigInt denom = 1;
  for (auto [n, kn] : k.counts()) {
    BigInt nk;
    mpz_ui_pow_ui(nk.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(kn));
    denom *= nk * factorial(kn);
  }
  const int shift = k.total_count();
  NGradedValue out;
  out.t_power = wick.t_power;
  out.pairings = wick.pairings;
  for (const auto& [e, c] : wick.by_n_exponent) out.by_n_exponent[e + shift] = c / Rat(denom);
  return out;
}

std::vector<SymmetryClass> symmetry_census(int m, const MapFilter& filter,
                                           const EnumerationOptions& options) {
  std::map<CanonicalCode, SymmetryClass> classes;
  for (const auto& [map, mult] : enumerate_maps(m, filter, options)) {
    auto code = canonical_code(map);
    auto it = classes.find(code);
    if (it == classes.end()) {
      SymmetryClass cls;
      cls.code = code;
      cls.gamma = automorphism_count(map);
      cls.labelled = 0;
      cls.genus = euler_genus(map).genus;
      cls.vertices = degree_profile(map, CellKind::vertex);
      it = classes.emplace(std::move(code), std::move(cls)).first;
    }
    it->second.labelled += mult;
  }
  const BigInt total = factorial(2 * m);
  std::vector<SymmetryClass> out;
  for (auto& [code, cls] : classes) {
    if (cls.labelled * cls.gamma != total)
      throw Error(Errc::internal, "class " + code.to_string() + " has " + cls.labelled.get_str() +
                                      " labelled maps, expected (2m)!/" + std::to_string(cls.gamma));
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace mapenum
