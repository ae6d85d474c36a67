#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mapenum/permutation.hpp"

namespace mapenum {

/// Multiset of degrees: degree n >= 1 -> number k_n of cells of that degree.
/// Zero counts are never stored, so equal multisets compare equal.
class DegreeProfile {
 public:
  DegreeProfile() = default;
  explicit DegreeProfile(const std::map<int, int>& counts);
  DegreeProfile(std::initializer_list<std::pair<const int, int>> counts)
      : DegreeProfile(std::map<int, int>(counts)) {}

  static DegreeProfile from_parts(std::span<const int> parts);
  /// Parses "4:1,3:2" (degree:count pairs). The empty string is the empty profile.
  static DegreeProfile parse(std::string_view text);

  const std::map<int, int>& counts() const noexcept { return counts_; }
  int count(int degree) const;
  bool empty() const noexcept { return counts_.empty(); }
  /// Sum of n * k_n.
  int total_degree() const noexcept;
  /// Sum of k_n.
  int total_count() const noexcept;
  int max_degree() const noexcept;
  /// Expanded parts, ascending.
  std::vector<int> parts() const;

  std::string to_string() const;

  auto operator<=>(const DegreeProfile&) const = default;

 private:
  std::map<int, int> counts_;
};

enum class CellKind { vertex, face };

struct MapInvariants {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int chi = 0;
  int genus = 0;
};

/// A labelled combinatorial map: sigma rotates half-edges around vertices,
/// alpha pairs them into edges, and sigma o alpha traces faces. Half-edges
/// are labelled 1..2m.
///
/// Invariants (checked by make_map): alpha is a fixed-point-free involution
/// and <sigma, alpha> acts transitively.
class CombMap {
 public:
  const Permutation& sigma() const noexcept { return sigma_; }
  const Permutation& alpha() const noexcept { return alpha_; }
  /// sigma o alpha; its cycles are the faces.
  Permutation phi() const { return compose(sigma_, alpha_); }

  int half_edges() const noexcept { return sigma_.size(); }
  int edges() const noexcept { return sigma_.size() / 2; }

  auto operator<=>(const CombMap&) const = default;

 private:
  friend CombMap make_map(Permutation sigma, Permutation alpha);
  CombMap(Permutation sigma, Permutation alpha)
      : sigma_(std::move(sigma)), alpha_(std::move(alpha)) {}

  Permutation sigma_;
  Permutation alpha_;
};

/// Validates and builds a map. Errors: invalid_size (odd or empty ground
/// set, or size mismatch), violates_a, violates_b.
CombMap make_map(Permutation sigma, Permutation alpha);

MapInvariants euler_genus(const CombMap& map);

/// (sigma o alpha, alpha). No orientation correction is applied, so
/// dual(dual(m)) equals m only up to relabelling.
CombMap dual(const CombMap& map);

DegreeProfile degree_profile(const CombMap& map, CellKind kind);

/// Applies the relabelling rho: (rho sigma rho^-1, rho alpha rho^-1).
CombMap relabel(const CombMap& map, const Permutation& rho);

/// Number of permutations commuting with both sigma and alpha.
///
/// An automorphism of a transitive pair is fixed by the image of half-edge 1,
/// so each of the 2m candidates is propagated along sigma and alpha and
/// checked for consistency: O((2m)^2) overall.
long automorphism_count(const CombMap& map);

/// A relabelled (sigma, alpha) pair used as an isomorphism-class key.
struct CanonicalCode {
  std::vector<int> sigma;
  std::vector<int> alpha;

  auto operator<=>(const CanonicalCode&) const = default;
  /// "<sigma cycles>|<alpha cycles>", e.g. "(1 2)|(1 2)".
  std::string to_string() const;
};

/// Relabels by breadth-first traversal from `root`: the root gets label 1,
/// and each dequeued half-edge x enqueues sigma(x) then alpha(x) if unseen.
/// Two maps rooted at r and r' are isomorphic by an isomorphism sending r to
/// r' iff their rooted codes agree.
CanonicalCode rooted_code(const CombMap& map, int root);

/// The labelling behind rooted_code: entry x-1 is the new label of half-edge x.
std::vector<int> rooted_labelling(const CombMap& map, int root);

/// Lexicographically least rooted_code over all 2m roots. Two maps are
/// isomorphic iff their canonical codes are equal.
CanonicalCode canonical_code(const CombMap& map);

/// Vertex id of every half-edge (index i-1 for half-edge i). Vertex ids are
/// 0-based ranks of each sigma-cycle's minimal half-edge.
std::vector<int> vertex_ids(const CombMap& map);

/// BFS distances (in edges) from vertex `source` to every vertex.
std::vector<int> vertex_distances(const CombMap& map, int source);

/// Graph distance between two vertices; invalid_argument on unknown ids.
int graph_distance(const CombMap& map, int va, int vb);

}  // namespace mapenum
