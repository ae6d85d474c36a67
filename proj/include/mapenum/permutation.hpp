#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mapenum {

/// A bijection of {1, ..., p}, stored as its image sequence.
///
/// Labels are 1-based throughout the public interface: `perm(i)` is the
/// image of i, and `images()[i - 1] == perm(i)`.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Errc::invalid_argument unless `images` is a bijection of {1..p}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int size);

  /// Builds a permutation of {1..size} from disjoint cycles; omitted points
  /// are fixed.
  static Permutation from_cycles(int size,
                                 const std::vector<std::vector<int>>& cycles);

  /// Parses cycle notation such as "(1 2)(3 4 5)". Points not mentioned are
  /// fixed; `size` of 0 means "largest label mentioned".
  static Permutation parse(std::string_view text, int size = 0);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  bool is_fixed_point_free_involution() const noexcept;

  /// Cycles ordered by their minimal element, each starting at that element.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const noexcept;
  /// Cycle lengths, sorted ascending.
  std::vector<int> cycle_type() const;

  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// (p o q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

/// rho o p o rho^-1, i.e. p with its points renamed by rho.
Permutation conjugate(const Permutation& p, const Permutation& rho);

}  // namespace mapenum
