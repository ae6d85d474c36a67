#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mapenum/combmap.hpp"
#include "mapenum/rational.hpp"
#include "mapenum/series.hpp"

namespace mapenum {

/// Hard limit on exhaustive enumeration: (2*6)! ~ 4.8e8 permutations.
inline constexpr int kHardEdgeCap = 6;

struct EnumerationOptions {
  /// Soft cap on the number of edges; may be raised up to kHardEdgeCap.
  int max_edges = 5;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  int threads = 0;
};

struct MapFilter {
  std::optional<int> genus;
  /// Required vertex degree profile (cycle type of sigma).
  std::optional<DegreeProfile> vertices;
};

/// One labelled map emitted by the enumeration, with the number of labelled
/// maps it stands for.
struct WeightedMap {
  CombMap map;
  long multiplicity = 1;
};

/// Every labelled map with m edges passing `filter`, each exactly once up to
/// the multiplicity shortcut: alpha is fixed to (1 2)(3 4)...(2m-1 2m),
/// sigma runs over S_2m (conjugacy class by conjugacy class), and each map
/// carries multiplicity (2m-1)!!. Errc::too_large above the edge cap.
std::vector<WeightedMap> enumerate_maps(int m, const MapFilter& filter = {},
                                        const EnumerationOptions& options = {});

/// The same set of labelled maps with every alpha in I_2m listed
/// explicitly (multiplicity 1). Only for m <= 3.
std::vector<WeightedMap> enumerate_map_pairs(int m, const MapFilter& filter = {});

/// Aggregated labelled counts for all maps with m edges, keyed by the
/// statistics every downstream sum needs.
struct CensusKey {
  int genus = 0;
  int faces = 0;
  DegreeProfile vertices;

  auto operator<=>(const CensusKey&) const = default;
};
using MapCensus = std::map<CensusKey, BigInt>;

/// Labelled counts (multiplicity applied) grouped by CensusKey. Enumeration is
/// partitioned across worker threads; results are merged exactly, so the
/// output does not depend on scheduling.
MapCensus map_census(int m, const MapFilter& filter = {}, const EnumerationOptions& options = {});

/// Sum of map_census counts.
BigInt labelled_count(const MapCensus& census);

/// prod_n v_n^{k_n}.
WPolynomial weight_monomial(const DegreeProfile& vertices);

/// F^(g)(t, V) = sum_m t^m / (2m)! * (sum over labelled genus-g maps of the
/// product of vertex weights), for m = 1..m_max.
GenusSeries labelled_free_energy(int m_max, const EnumerationOptions& options = {});

/// Rooted-map generating functions by genus. Without `root_degree` every
/// vertex carries its weight and the genus-0 series has constant term 1 (the
/// empty map). With `root_degree` = n, only maps whose root vertex has degree
/// n are counted and the root vertex carries no weight; n = 0 gives W_0 = 1.
GenusSeries rooted_counts(int m_max, std::optional<int> root_degree = std::nullopt,
                          const EnumerationOptions& options = {});

/// Planar maps with two ordered distinguished (unweighted) vertices of
/// degree 1, weight t per edge and v_n per other vertex.
TSeries two_leaf_counts(int m_max, const EnumerationOptions& options = {});

/// Planar maps with one distinguished (unweighted) degree-1 vertex and one
/// distinguished face.
TSeries leaf_face_counts(int m_max, const EnumerationOptions& options = {});

/// A Laurent polynomial in N times a power of t. Disconnected contributions
/// are stored by total N-exponent, not by genus.
struct NGradedValue {
  int t_power = 0;
  std::map<int, Rat> by_n_exponent;
  /// Number of Wick pairings summed (0 when not applicable).
  long pairings = 0;

  bool empty() const noexcept { return by_n_exponent.empty(); }
  Rat coefficient(int n_exponent) const;
  /// As a polynomial in the label-0 variable N.
  WPolynomial as_polynomial() const;
  std::string to_string() const;
};

/// <prod_n (Tr M^n)^{c_n}> for a permutation with the given cycle lengths:
/// (t/N)^{p/2} * sum over fixed-point-free involutions alpha of
/// N^{c(sigma o alpha)}. Empty when p is odd; Errc::too_large for p > 12.
NGradedValue wick_cycle_expectation(std::span<const int> cycle_lengths);

/// [v^k] Xi_N(t, V) = N^{sum k_n} / prod_n (n^{k_n} k_n!) times the Wick
/// expectation of the corresponding trace product. Includes disconnected
/// diagrams.
NGradedValue partition_coefficient(const DegreeProfile& k);

struct SymmetryClass {
  CanonicalCode code;
  long gamma = 0;
  BigInt labelled;
  int genus = 0;
  DegreeProfile vertices;
};

/// Isomorphism classes of maps with m edges, each with its automorphism count
/// and labelled size. Throws Errc::internal if a class size differs from
/// (2m)!/gamma.
std::vector<SymmetryClass> symmetry_census(int m, const MapFilter& filter = {},
                                           const EnumerationOptions& options = {});

}  // namespace mapenum
