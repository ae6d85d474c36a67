#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mapenum/combmap.hpp"
#include "mapenum/series.hpp"
#include "mapenum/solver.hpp"

namespace mapenum {

/// Largest t-order accepted by the tree enumerations.
inline constexpr int kMaxTreeOrder = 11;

enum class TreeClass { R, S };

/// A blossom tree or subtree. A node's children are R-subtrees, S-subtrees
/// or black leaves; a lone white leaf is an R-tree.
struct BlossomTree {
  enum class Kind { white_leaf, black_leaf, node };

  Kind kind = Kind::node;
  /// R or S for nodes; R for white leaves; unused for black leaves.
  TreeClass cls = TreeClass::R;
  std::vector<BlossomTree> children;

  static BlossomTree white() { return {Kind::white_leaf, TreeClass::R, {}}; }
  static BlossomTree black() { return {Kind::black_leaf, TreeClass::R, {}}; }
  static BlossomTree node(TreeClass cls, std::vector<BlossomTree> children) {
    return {Kind::node, cls, std::move(children)};
  }

  /// Number of nodes plus white leaves.
  int weight() const;
  /// prod over nodes of v_{children + 1}.
  WPolynomial vertex_weight(const WeightSpec& V) const;
  /// Checks the black/R balance at every node.
  bool valid() const;
  /// Internal node degrees (children + 1).
  DegreeProfile node_degrees() const;
  /// "W", "B", or "R[...]" / "S[...]" with comma-separated children.
  std::string to_string() const;

  auto operator<=>(const BlossomTree&) const = default;
};

struct BlossomEnumeration {
  std::vector<BlossomTree> trees;
  TSeries series;
};

/// All trees of class `cls` with weight <= order whose node arities carry
/// nonzero weights, together with sum t^weight * vertex_weight.
/// Errc::too_large for order > kMaxTreeOrder.
BlossomEnumeration enumerate_blossom(TreeClass cls, int order, const WeightSpec& V);

/// A closed blossom tree. `root` is the half-edge of the new degree-1 vertex
/// attached to the tree root. For S-trees `marked` is a half-edge of the
/// distinguished face; for R-trees it is the half-edge of the unmatched
/// white leaf, the second distinguished degree-1 vertex.
struct ClosureResult {
  CombMap map;
  int root = 1;
  int marked = 1;
};

/// Matches each black leaf to the next free white leaf along the contour
/// (cyclically) and merges each pair into an edge.
ClosureResult closure(const BlossomTree& tree);
/// Errc::wrong_class unless the tree is an S-tree.
ClosureResult closure_s(const BlossomTree& tree);

/// Isomorphism key of a closure with its marked data: the rooted code at
/// `root` and, for faces, the least relabelled half-edge of the marked face.
std::pair<CanonicalCode, int> marked_code(const ClosureResult& closed, TreeClass cls);

/// Rooted plane tree with positive labels; adjacent labels differ by at most 1.
struct WellLabeledTree {
  int label = 1;
  std::vector<WellLabeledTree> children;

  int edges() const;
  bool valid() const;
  std::string to_string() const;

  auto operator<=>(const WellLabeledTree&) const = default;
};

struct WellLabeledEnumeration {
  std::vector<WellLabeledTree> trees;
  /// Weight t per vertex and per edge.
  TSeries series;
};

/// All well-labeled trees with root label `ell` and 2 * edges + 1 <= order.
WellLabeledEnumeration enumerate_well_labeled(int ell, int order);

}  // namespace mapenum
