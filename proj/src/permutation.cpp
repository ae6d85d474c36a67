#include "mapenum/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "mapenum/error.hpp"

namespace mapenum {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int p = size();
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > p || seen[static_cast<std::size_t>(v - 1)])
      throw Error(Errc::invalid_argument,
                  "image sequence is not a bijection of {1.." +
                      std::to_string(p) + "}");
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int size) {
  if (size < 0) throw Error(Errc::invalid_size, "negative permutation size");
  std::vector<int> images(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    int size, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(size), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || from > size || to < 1 || to > size)
        throw Error(Errc::invalid_argument,
                    "cycle entry outside {1.." + std::to_string(size) + "}");
      auto& slot = images[static_cast<std::size_t>(from - 1)];
      if (slot != 0)
        throw Error(Errc::invalid_argument,
                    "point " + std::to_string(from) + " appears twice");
      slot = to;
    }
  }
  for (int i = 0; i < size; ++i)
    if (images[static_cast<std::size_t>(i)] == 0)
      images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, int size) {
  std::vector<std::vector<int>> cycles;
  int largest = 0;
  bool open = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(') {
      if (open) throw Error(Errc::parse, "nested '(' in cycle notation");
      open = true;
      cycles.emplace_back();
      ++i;
    } else if (c == ')') {
      if (!open) throw Error(Errc::parse, "unbalanced ')' in cycle notation");
      open = false;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) throw Error(Errc::parse, "label outside parentheses");
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) throw Error(Errc::parse, "bad label");
      i = static_cast<std::size_t>(ptr - text.data());
      cycles.back().push_back(value);
      largest = std::max(largest, value);
    } else {
      throw Error(Errc::parse, std::string("unexpected character '") + c + "'");
    }
  }
  if (open) throw Error(Errc::parse, "unterminated cycle");
  if (size == 0) size = largest;
  return from_cycles(size, cycles);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool Permutation::is_fixed_point_free_involution() const noexcept {
  for (int i = 1; i <= size(); ++i) {
    const int j = (*this)(i);
    if (j == i || (*this)(j) != i) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    auto& cycle = out.emplace_back();
    for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = (*this)(i)) {
      seen[static_cast<std::size_t>(i - 1)] = 1;
      cycle.push_back(i);
    }
  }
  return out;
}

int Permutation::cycle_count() const noexcept {
  int count = 0;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    ++count;
    for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = (*this)(i))
      seen[static_cast<std::size_t>(i - 1)] = 1;
  }
  return count;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw Error(Errc::invalid_argument, "compose: permutations of different sizes");
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) images[static_cast<std::size_t>(i - 1)] = p(q(i));
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& rho) {
  if (p.size() != rho.size())
    throw Error(Errc::invalid_argument, "conjugate: permutations of different sizes");
  // (rho p rho^-1)(rho(i)) = rho(p(i))
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i)
    images[static_cast<std::size_t>(rho(i) - 1)] = rho(p(i));
  return Permutation(std::move(images));
}

}  // namespace mapenum
