#include "mapenum/combmap.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

#include "mapenum/error.hpp"

namespace mapenum {

// ---------------------------------------------------------------------------
// DegreeProfile

DegreeProfile::DegreeProfile(const std::map<int, int>& counts) {
  for (auto [degree, k] : counts) {
    if (degree < 1) throw Error(Errc::invalid_argument, "degree must be >= 1");
    if (k < 0) throw Error(Errc::invalid_argument, "negative degree count");
    if (k > 0) counts_[degree] = k;
  }
}

DegreeProfile DegreeProfile::from_parts(std::span<const int> parts) {
  std::map<int, int> counts;
  for (int n : parts) ++counts[n];
  return DegreeProfile(counts);
}

DegreeProfile DegreeProfile::parse(std::string_view text) {
  std::map<int, int> counts;
  auto read_int = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error(Errc::parse, "bad integer '" + std::string(s) + "' in degree profile");
    return value;
  };
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw Error(Errc::parse, "expected degree:count in '" + std::string(item) + "'");
    counts[read_int(item.substr(0, colon))] += read_int(item.substr(colon + 1));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return DegreeProfile(counts);
}

int DegreeProfile::count(int degree) const {
  auto it = counts_.find(degree);
  return it == counts_.end() ? 0 : it->second;
}

int DegreeProfile::total_degree() const noexcept {
  int sum = 0;
  for (auto [n, k] : counts_) sum += n * k;
  return sum;
}

int DegreeProfile::total_count() const noexcept {
  int sum = 0;
  for (auto [n, k] : counts_) sum += k;
  return sum;
}

int DegreeProfile::max_degree() const noexcept {
  return counts_.empty() ? 0 : counts_.rbegin()->first;
}

std::vector<int> DegreeProfile::parts() const {
  std::vector<int> out;
  for (auto [n, k] : counts_) out.insert(out.end(), static_cast<std::size_t>(k), n);
  return out;
}

std::string DegreeProfile::to_string() const {
  std::string out;
  for (auto [n, k] : counts_) {
    if (!out.empty()) out += ',';
    out += std::to_string(n) + ':' + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CombMap

namespace {

bool is_transitive(const Permutation& sigma, const Permutation& alpha) {
  const int p = sigma.size();
  std::vector<char> seen(static_cast<std::size_t>(p), 0);
  std::vector<int> stack{1};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : {sigma(x), alpha(x)}) {
      if (!seen[static_cast<std::size_t>(y - 1)]) {
        seen[static_cast<std::size_t>(y - 1)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == p;
}

}  // namespace

CombMap make_map(Permutation sigma, Permutation alpha) {
  if (sigma.size() != alpha.size())
    throw Error(Errc::invalid_size, "sigma and alpha act on different ground sets");
  if (sigma.size() == 0 || sigma.size() % 2 != 0)
    throw Error(Errc::invalid_size,
                "ground set size " + std::to_string(sigma.size()) + " is not a positive even number");
  if (!alpha.is_fixed_point_free_involution())
    throw Error(Errc::violates_a, "alpha is not a fixed-point-free involution");
  if (!is_transitive(sigma, alpha))
    throw Error(Errc::violates_b, "<sigma, alpha> does not act transitively");
  return CombMap(std::move(sigma), std::move(alpha));
}

MapInvariants euler_genus(const CombMap& map) {
  MapInvariants inv;
  inv.vertices = map.sigma().cycle_count();
  inv.edges = map.alpha().cycle_count();
  inv.faces = map.phi().cycle_count();
  inv.chi = inv.vertices - inv.edges + inv.faces;
  if (inv.chi % 2 != 0 || inv.chi > 2)
    throw Error(Errc::internal, "Euler characteristic " + std::to_string(inv.chi) +
                                    " is impossible for a valid map");
  inv.genus = (2 - inv.chi) / 2;
  return inv;
}

CombMap dual(const CombMap& map) { return make_map(map.phi(), map.alpha()); }

DegreeProfile degree_profile(const CombMap& map, CellKind kind) {
  const auto lengths =
      kind == CellKind::vertex ? map.sigma().cycle_type() : map.phi().cycle_type();
  return DegreeProfile::from_parts(lengths);
}

CombMap relabel(const CombMap& map, const Permutation& rho) {
  return make_map(conjugate(map.sigma(), rho), conjugate(map.alpha(), rho));
}

long automorphism_count(const CombMap& map) {
  const int p = map.half_edges();
  const auto& sigma = map.sigma();
  const auto& alpha = map.alpha();
  std::vector<int> image(static_cast<std::size_t>(p + 1));
  std::vector<int> preimage(static_cast<std::size_t>(p + 1));
  std::vector<int> stack;
  long count = 0;

  for (int target = 1; target <= p; ++target) {
    std::fill(image.begin(), image.end(), 0);
    std::fill(preimage.begin(), preimage.end(), 0);
    image[1] = target;
    preimage[static_cast<std::size_t>(target)] = 1;
    stack.assign(1, 1);
    bool ok = true;
    while (ok && !stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      const int rx = image[static_cast<std::size_t>(x)];
      // rho(sigma(x)) = sigma(rho(x)), rho(alpha(x)) = alpha(rho(x))
      const std::pair<int, int> steps[] = {{sigma(x), sigma(rx)}, {alpha(x), alpha(rx)}};
      for (auto [y, ry] : steps) {
        auto& slot = image[static_cast<std::size_t>(y)];
        if (slot == 0) {
          if (preimage[static_cast<std::size_t>(ry)] != 0) {
            ok = false;
            break;
          }
          slot = ry;
          preimage[static_cast<std::size_t>(ry)] = y;
          stack.push_back(y);
        } else if (slot != ry) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

std::string CanonicalCode::to_string() const {
  return Permutation(sigma).to_cycle_string() + "|" + Permutation(alpha).to_cycle_string();
}

std::vector<int> rooted_labelling(const CombMap& map, int root) {
  const int p = map.half_edges();
  if (root < 1 || root > p) throw Error(Errc::invalid_argument, "root half-edge out of range");
  const auto& sigma = map.sigma();
  const auto& alpha = map.alpha();

  std::vector<int> label(static_cast<std::size_t>(p + 1), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(p));
  label[static_cast<std::size_t>(root)] = 1;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int x = order[head];
    for (int y : {sigma(x), alpha(x)}) {
      if (label[static_cast<std::size_t>(y)] == 0) {
        order.push_back(y);
        label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
      }
    }
  }
  return std::vector<int>(label.begin() + 1, label.end());
}

CanonicalCode rooted_code(const CombMap& map, int root) {
  const int p = map.half_edges();
  const auto label = rooted_labelling(map, root);
  const auto& sigma = map.sigma();
  const auto& alpha = map.alpha();
  auto at = [&](int x) { return label[static_cast<std::size_t>(x - 1)]; };

  CanonicalCode code;
  code.sigma.resize(static_cast<std::size_t>(p));
  code.alpha.resize(static_cast<std::size_t>(p));
  for (int x = 1; x <= p; ++x) {
    const auto lx = static_cast<std::size_t>(at(x) - 1);
    code.sigma[lx] = at(sigma(x));
    code.alpha[lx] = at(alpha(x));
  }
  return code;
}

CanonicalCode canonical_code(const CombMap& map) {
  CanonicalCode best = rooted_code(map, 1);
  for (int root = 2; root <= map.half_edges(); ++root) {
    auto code = rooted_code(map, root);
    if (code < best) best = std::move(code);
  }
  return best;
}

std::vector<int> vertex_ids(const CombMap& map) {
  std::vector<int> ids(static_cast<std::size_t>(map.half_edges()));
  int id = 0;
  for (const auto& cycle : map.sigma().cycles()) {
    for (int h : cycle) ids[static_cast<std::size_t>(h - 1)] = id;
    ++id;
  }
  return ids;
}

std::vector<int> vertex_distances(const CombMap& map, int source) {
  const auto cycles = map.sigma().cycles();
  const int n = static_cast<int>(cycles.size());
  if (source < 0 || source >= n)
    throw Error(Errc::invalid_argument, "unknown vertex id " + std::to_string(source));
  const auto ids = vertex_ids(map);
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::queue<int> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int h : cycles[static_cast<std::size_t>(v)]) {
      const int w = ids[static_cast<std::size_t>(map.alpha()(h) - 1)];
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

int graph_distance(const CombMap& map, int va, int vb) {
  const auto dist = vertex_distances(map, va);
  if (vb < 0 || vb >= static_cast<int>(dist.size()))
    throw Error(Errc::invalid_argument, "unknown vertex id " + std::to_string(vb));
  return dist[static_cast<std::size_t>(vb)];
}

}  // namespace mapenum
