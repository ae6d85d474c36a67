#include "mapenum/bijections.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "mapenum/error.hpp"

namespace mapenum {

namespace {

void check_order(int order) {
  if (order < 0) throw Error(Errc::invalid_argument, "order must be >= 0");
  if (order > kMaxTreeOrder)
    throw Error(Errc::too_large, "tree enumeration is limited to order " + std::to_string(kMaxTreeOrder));
}

bool counts_as_r(const BlossomTree& t) {
  return t.kind == BlossomTree::Kind::white_leaf ||
         (t.kind == BlossomTree::Kind::node && t.cls == TreeClass::R);
}

class BlossomGenerator {
 public:
  explicit BlossomGenerator(const WeightSpec& V) : V_(V), max_arity_(V.max_degree() - 1) {}

  /// Trees of class `cls` with weight exactly w.
  const std::vector<BlossomTree>& exact(TreeClass cls, int w) {
    const auto key = std::make_pair(cls, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<BlossomTree> out;
    if (cls == TreeClass::R && w == 1) out.push_back(BlossomTree::white());
    if (w >= 1 && max_arity_ >= 0) {
      std::vector<BlossomTree> children;
      sequences(cls, w - 1, 0, 0, children, out);
    }
    return memo_[key] = std::move(out);
  }

 private:
  void sequences(TreeClass cls, int remaining, int n_r, int n_b, std::vector<BlossomTree>& children,
                 std::vector<BlossomTree>& out) {
    const int arity = static_cast<int>(children.size());
    if (remaining == 0 && !V_.v(arity + 1).is_zero() &&
        n_b == (cls == TreeClass::R ? n_r - 1 : n_r))
      out.push_back(BlossomTree::node(cls, children));
    if (arity >= max_arity_) return;
    children.push_back(BlossomTree::black());
    sequences(cls, remaining, n_r, n_b + 1, children, out);
    children.pop_back();
    for (int w = 1; w <= remaining; ++w) {
      for (TreeClass sub : {TreeClass::R, TreeClass::S}) {
        // Copy: the memo may rehash while recursing.
        const auto subtrees = exact(sub, w);
        for (const auto& st : subtrees) {
          children.push_back(st);
          sequences(cls, remaining - w, n_r + (sub == TreeClass::R), n_b, children, out);
          children.pop_back();
        }
      }
    }
  }

  const WeightSpec& V_;
  int max_arity_;
  std::map<std::pair<TreeClass, int>, std::vector<BlossomTree>> memo_;
};

struct LeafInfo {
  int half_edge;
  BlossomTree::Kind kind;
};

/// The tree as a plane map: each vertex lists its half-edges in rotation
/// order, parent side first.
struct TreeMap {
  std::vector<std::vector<int>> rotations;
  std::vector<int> alpha;  // 1-based, index 0 unused
  std::vector<LeafInfo> leaves;
  int next = 1;

  int fresh() {
    alpha.push_back(0);
    return next++;
  }

  void pair(int a, int b) {
    alpha[static_cast<std::size_t>(a)] = b;
    alpha[static_cast<std::size_t>(b)] = a;
  }

  void add(const BlossomTree& t, int parent_half) {
    const int h = fresh();
    pair(parent_half, h);
    std::vector<int> rot{h};
    if (t.kind != BlossomTree::Kind::node) {
      rotations.push_back(rot);
      leaves.push_back({h, t.kind});
      return;
    }
    std::vector<int> child_halves;
    for (std::size_t i = 0; i < t.children.size(); ++i) child_halves.push_back(fresh());
    rot.insert(rot.end(), child_halves.begin(), child_halves.end());
    rotations.push_back(rot);
    for (std::size_t i = 0; i < t.children.size(); ++i) add(t.children[i], child_halves[i]);
  }
};

}  // namespace

int BlossomTree::weight() const {
  if (kind == Kind::black_leaf) return 0;
  int w = 1;
  for (const auto& c : children) w += c.weight();
  return w;
}

WPolynomial BlossomTree::vertex_weight(const WeightSpec& V) const {
  if (kind != Kind::node) return WPolynomial(1);
  WPolynomial w = V.v(static_cast<int>(children.size()) + 1);
  for (const auto& c : children) w = w * c.vertex_weight(V);
  return w;
}

bool BlossomTree::valid() const {
  if (kind == Kind::white_leaf) return children.empty() && cls == TreeClass::R;
  if (kind == Kind::black_leaf) return children.empty();
  int n_r = 0;
  int n_b = 0;
  for (const auto& c : children) {
    if (c.kind == Kind::black_leaf) ++n_b;
    if (counts_as_r(c)) ++n_r;
    if (!c.valid()) return false;
  }
  return n_b == (cls == TreeClass::R ? n_r - 1 : n_r);
}

DegreeProfile BlossomTree::node_degrees() const {
  std::vector<int> parts;
  std::function<void(const BlossomTree&)> walk = [&](const BlossomTree& t) {
    if (t.kind != Kind::node) return;
    parts.push_back(static_cast<int>(t.children.size()) + 1);
    for (const auto& c : t.children) walk(c);
  };
  walk(*this);
  return DegreeProfile::from_parts(parts);
}

std::string BlossomTree::to_string() const {
  if (kind == Kind::white_leaf) return "W";
  if (kind == Kind::black_leaf) return "B";
  std::string s = cls == TreeClass::R ? "R[" : "S[";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0) s += ",";
    s += children[i].to_string();
  }
  return s + "]";
}

BlossomEnumeration enumerate_blossom(TreeClass cls, int order, const WeightSpec& V) {
  check_order(order);
  BlossomGenerator gen(V);
  BlossomEnumeration out{{}, TSeries(order)};
  for (int w = 1; w <= order; ++w) {
    for (const auto& t : gen.exact(cls, w)) {
      out.series[w] += t.vertex_weight(V);
      out.trees.push_back(t);
    }
  }
  return out;
}

ClosureResult closure(const BlossomTree& tree) {
  if (tree.kind == BlossomTree::Kind::black_leaf || !tree.valid())
    throw Error(Errc::invalid_argument, "not a valid blossom tree: " + tree.to_string());
  const TreeClass cls = tree.kind == BlossomTree::Kind::white_leaf ? TreeClass::R : tree.cls;

  TreeMap tm;
  tm.alpha.push_back(0);
  const int hd = tm.fresh();
  tm.rotations.push_back({hd});
  tm.add(tree, hd);
  const int p = tm.next - 1;

  std::vector<int> sigma(static_cast<std::size_t>(p + 1));
  for (const auto& rot : tm.rotations)
    for (std::size_t i = 0; i < rot.size(); ++i)
      sigma[static_cast<std::size_t>(rot[i])] = rot[(i + 1) % rot.size()];
  auto at = [](const std::vector<int>& v, int x) { return v[static_cast<std::size_t>(x)]; };

  // Contour of the single face, from the new root vertex.
  std::vector<int> contour;
  std::vector<int> pos(static_cast<std::size_t>(p + 1));
  for (int x = hd;;) {
    pos[static_cast<std::size_t>(x)] = static_cast<int>(contour.size());
    contour.push_back(x);
    x = at(sigma, at(tm.alpha, x));
    if (x == hd) break;
  }
  const int L = static_cast<int>(contour.size());

  std::vector<LeafInfo> leaves = tm.leaves;
  std::sort(leaves.begin(), leaves.end(), [&](const LeafInfo& a, const LeafInfo& b) {
    return at(pos, a.half_edge) < at(pos, b.half_edge);
  });

  // Black opens, white closes, cyclically.
  const int n_leaves = static_cast<int>(leaves.size());
  std::vector<int> partner(static_cast<std::size_t>(n_leaves), -1);
  std::vector<int> stack;
  for (int i = 0; i < 2 * n_leaves; ++i) {
    const int k = i % n_leaves;
    if (leaves[static_cast<std::size_t>(k)].kind == BlossomTree::Kind::black_leaf) {
      if (i < n_leaves) stack.push_back(k);
    } else if (partner[static_cast<std::size_t>(k)] < 0 && !stack.empty()) {
      const int b = stack.back();
      stack.pop_back();
      partner[static_cast<std::size_t>(k)] = b;
      partner[static_cast<std::size_t>(b)] = k;
    }
  }
  int unmatched_white = -1;
  int unmatched = 0;
  for (int k = 0; k < n_leaves; ++k) {
    if (partner[static_cast<std::size_t>(k)] >= 0) continue;
    ++unmatched;
    if (leaves[static_cast<std::size_t>(k)].kind == BlossomTree::Kind::white_leaf) unmatched_white = k;
  }
  const int expected_unmatched = cls == TreeClass::R ? 1 : 0;
  if (unmatched != expected_unmatched || (cls == TreeClass::R && unmatched_white < 0))
    throw Error(Errc::internal, "leaf matching left " + std::to_string(unmatched) + " leaves unmatched");

  // Merge matched pairs and drop their leaf half-edges.
  std::vector<int> alpha = tm.alpha;
  std::vector<bool> removed(static_cast<std::size_t>(p + 1), false);
  std::vector<std::pair<int, int>> arcs;  // contour positions (black, white)
  for (int k = 0; k < n_leaves; ++k) {
    const auto& leaf = leaves[static_cast<std::size_t>(k)];
    const int j = partner[static_cast<std::size_t>(k)];
    if (j < 0 || leaf.kind != BlossomTree::Kind::black_leaf) continue;
    const int hb = leaf.half_edge;
    const int hw = leaves[static_cast<std::size_t>(j)].half_edge;
    const int pb = at(tm.alpha, hb);
    const int pw = at(tm.alpha, hw);
    alpha[static_cast<std::size_t>(pb)] = pw;
    alpha[static_cast<std::size_t>(pw)] = pb;
    removed[static_cast<std::size_t>(hb)] = true;
    removed[static_cast<std::size_t>(hw)] = true;
    arcs.emplace_back(at(pos, hb), at(pos, hw));
  }
  std::vector<int> relabel(static_cast<std::size_t>(p + 1), 0);
  int q = 0;
  for (int x = 1; x <= p; ++x)
    if (!removed[static_cast<std::size_t>(x)]) relabel[static_cast<std::size_t>(x)] = ++q;
  std::vector<int> s_new(static_cast<std::size_t>(q));
  std::vector<int> a_new(static_cast<std::size_t>(q));
  for (int x = 1; x <= p; ++x) {
    if (removed[static_cast<std::size_t>(x)]) continue;
    const auto i = static_cast<std::size_t>(at(relabel, x) - 1);
    s_new[i] = at(relabel, at(sigma, x));
    a_new[i] = at(relabel, at(alpha, x));
  }
  ClosureResult out{make_map(Permutation(std::move(s_new)), Permutation(std::move(a_new))),
                    at(relabel, hd), 1};

  if (cls == TreeClass::R) {
    out.marked = at(relabel, leaves[static_cast<std::size_t>(unmatched_white)].half_edge);
    return out;
  }

  // The distinguished face: corners outside every arc black -> white.
  std::vector<bool> enclosed(static_cast<std::size_t>(L), false);
  for (auto [b, w] : arcs)
    for (int i = (b + 1) % L; i != w; i = (i + 1) % L) enclosed[static_cast<std::size_t>(i)] = true;
  const Permutation phi = out.map.phi();
  int face_rep = 0;
  std::vector<bool> in_face;
  for (int i = 0; i < L; ++i) {
    const int x = contour[static_cast<std::size_t>(i)];
    if (enclosed[static_cast<std::size_t>(i)] || removed[static_cast<std::size_t>(x)]) continue;
    const int y = at(relabel, x);
    if (face_rep == 0) {
      face_rep = y;
      in_face.assign(static_cast<std::size_t>(q + 1), false);
      for (int z = y; !in_face[static_cast<std::size_t>(z)]; z = phi(z)) in_face[static_cast<std::size_t>(z)] = true;
    } else if (!in_face[static_cast<std::size_t>(y)]) {
      throw Error(Errc::internal, "outer corners of " + tree.to_string() + " span several faces");
    }
  }
  if (face_rep == 0) throw Error(Errc::internal, "no outer corner in " + tree.to_string());
  out.marked = face_rep;
  return out;
}

ClosureResult closure_s(const BlossomTree& tree) {
  if (tree.kind != BlossomTree::Kind::node || tree.cls != TreeClass::S)
    throw Error(Errc::wrong_class, "closure_s needs an S-tree, got " + tree.to_string());
  return closure(tree);
}

std::pair<CanonicalCode, int> marked_code(const ClosureResult& closed, TreeClass cls) {
  const auto label = rooted_labelling(closed.map, closed.root);
  auto code = rooted_code(closed.map, closed.root);
  auto lab = [&](int x) { return label[static_cast<std::size_t>(x - 1)]; };
  if (cls == TreeClass::R) return {std::move(code), lab(closed.marked)};
  const Permutation phi = closed.map.phi();
  int best = lab(closed.marked);
  for (int z = phi(closed.marked); z != closed.marked; z = phi(z)) best = std::min(best, lab(z));
  return {std::move(code), best};
}

int WellLabeledTree::edges() const {
  int e = 0;
  for (const auto& c : children) e += 1 + c.edges();
  return e;
}

bool WellLabeledTree::valid() const {
  if (label < 1) return false;
  for (const auto& c : children)
    if (std::abs(c.label - label) > 1 || !c.valid()) return false;
  return true;
}

std::string WellLabeledTree::to_string() const {
  std::string s = std::to_string(label);
  if (children.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0) s += ",";
    s += children[i].to_string();
  }
  return s + ")";
}

WellLabeledEnumeration enumerate_well_labeled(int ell, int order) {
  if (ell < 1) throw Error(Errc::invalid_argument, "root label must be >= 1");
  check_order(order);
  std::map<std::pair<int, int>, std::vector<WellLabeledTree>> memo;
  std::function<const std::vector<WellLabeledTree>&(int, int)> exact = [&](int label, int e)
      -> const std::vector<WellLabeledTree>& {
    const auto key = std::make_pair(label, e);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<WellLabeledTree> out;
    std::vector<WellLabeledTree> children;
    std::function<void(int)> fill = [&](int remaining) {
      if (remaining == 0) {
        out.push_back({label, children});
        return;
      }
      for (int child_label = std::max(label - 1, 1); child_label <= label + 1; ++child_label)
        for (int ce = 0; ce < remaining; ++ce) {
          const auto subtrees = exact(child_label, ce);
          for (const auto& st : subtrees) {
            children.push_back(st);
            fill(remaining - ce - 1);
            children.pop_back();
          }
        }
    };
    fill(e);
    return memo[key] = std::move(out);
  };

  WellLabeledEnumeration out{{}, TSeries(order)};
  for (int e = 0; 2 * e + 1 <= order; ++e) {
    const auto& trees = exact(ell, e);
    out.series[2 * e + 1] = WPolynomial(static_cast<long>(trees.size()));
    out.trees.insert(out.trees.end(), trees.begin(), trees.end());
  }
  return out;
}

}  // namespace mapenum
