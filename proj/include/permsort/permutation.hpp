#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations in one-line notation, standardization and the two
 *        sorting operators (stack-sort, bubble-sort).
 *
 * Positions and values are 1-based at every public interface: `pi(i)` is the
 * value in position i, matching the point diagram {(i, pi(i))}. Storage is a
 * plain 0-based vector which callers only see through `values()`.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permsort/errors.hpp"

namespace permsort {

/// Pairwise-distinct integers, not necessarily 1..n.
class IntegerWord {
public:
  IntegerWord() = default;

  explicit IntegerWord(std::vector<int> letters) : letters_(std::move(letters)) {
    std::vector<int> sorted = letters_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("integer word has repeated letters");
  }

  const std::vector<int> &letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  auto operator<=>(const IntegerWord &) const = default;

private:
  std::vector<int> letters_;
};

class Permutation {
public:
  Permutation() = default;

  /// Throws InvalidInput unless `values` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<char> seen(values_.size() + 1, 0);
    for (int v : values_) {
      if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v])
        throw InvalidInput("not a permutation of 1.." +
                           std::to_string(values_.size()));
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), Unchecked{});
  }

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  /// Value at 1-based position i.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int> &values() const noexcept { return values_; }

  Permutation inverse() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
      inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(inv), Unchecked{});
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] != static_cast<int>(i + 1))
        return false;
    return true;
  }

  auto operator<=>(const Permutation &) const = default;

  // Internal fast path for values already known to be a bijection.
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}

private:
  std::vector<int> values_;
};

/// Order-preserving relabeling onto 1..k.
inline Permutation standardize(std::span<const int> letters) {
  std::vector<std::size_t> order(letters.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return letters[a] < letters[b]; });
  std::vector<int> out(letters.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && letters[order[rank]] == letters[order[rank - 1]])
      throw InvalidInput("cannot standardize a word with repeated letters");
    out[order[rank]] = static_cast<int>(rank + 1);
  }
  return Permutation(std::move(out), Permutation::Unchecked{});
}

inline Permutation standardize(const IntegerWord &word) {
  return standardize(std::span<const int>(word.letters()));
}

inline Permutation standardize(const Permutation &pi) { return pi; }

enum class SortOp { stack, bubble };

inline std::string_view to_string(SortOp op) {
  return op == SortOp::stack ? "stack" : "bubble";
}

inline SortOp parse_sort_op(std::string_view name) {
  if (name == "stack")
    return SortOp::stack;
  if (name == "bubble")
    return SortOp::bubble;
  throw InvalidInput("unknown sorting operator '" + std::string(name) + "'");
}

/// One pass through a stack that is kept increasing from top to bottom.
inline Permutation stack_sort(const Permutation &pi) {
  std::vector<int> out;
  std::vector<int> stack;
  out.reserve(static_cast<std::size_t>(pi.size()));
  stack.reserve(static_cast<std::size_t>(pi.size()));
  for (int x : pi.values()) {
    while (!stack.empty() && stack.back() < x) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(x);
  }
  while (!stack.empty()) {
    out.push_back(stack.back());
    stack.pop_back();
  }
  return Permutation(std::move(out), Permutation::Unchecked{});
}

/// One left-to-right pass of adjacent compare-and-swap.
inline Permutation bubble_sort(const Permutation &pi) {
  std::vector<int> v = pi.values();
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] > v[i])
      std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v), Permutation::Unchecked{});
}

inline Permutation apply_sort(SortOp op, const Permutation &pi) {
  return op == SortOp::stack ? stack_sort(pi) : bubble_sort(pi);
}

/// k-fold composition of the operator; k = 0 is the identity map.
inline Permutation sort_power(SortOp op, int k, Permutation pi) {
  if (k < 0)
    throw InvalidInput("number of passes must be non-negative");
  for (int pass = 0; pass < k; ++pass)
    pi = apply_sort(op, pi);
  return pi;
}

inline bool is_identity_after(SortOp op, int k, const Permutation &pi) {
  if (k < 1)
    throw InvalidInput("number of passes must be at least 1");
  return sort_power(op, k, pi).is_identity();
}

using ValuePair = std::pair<int, int>;

/// Value pairs (u, v) with u to the left of v. Both lists are ordered by
/// the positions of (u, v).
struct ValuePairSets {
  std::vector<ValuePair> inversions;
  std::vector<ValuePair> noninversions;
};

inline ValuePairSets inversion_tables(const Permutation &p) {
  ValuePairSets sets;
  const auto &v = p.values();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      (v[i] > v[j] ? sets.inversions : sets.noninversions).emplace_back(v[i], v[j]);
  return sets;
}

inline std::size_t inversion_count(const Permutation &p) {
  std::size_t count = 0;
  const auto &v = p.values();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      count += v[i] > v[j];
  return count;
}

/// Standardization of the subsequence of `pi` made of exactly `values`,
/// read in position order. Repeated entries in `values` count once.
inline Permutation pattern_of_values(const Permutation &pi,
                                     std::span<const int> values) {
  std::vector<char> wanted(static_cast<std::size_t>(pi.size()) + 1, 0);
  for (int v : values) {
    if (v < 1 || v > pi.size())
      throw InvalidInput("value " + std::to_string(v) + " outside 1.." +
                         std::to_string(pi.size()));
    wanted[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> sub;
  for (int v : pi.values())
    if (wanted[static_cast<std::size_t>(v)])
      sub.push_back(v);
  return standardize(std::span<const int>(sub));
}

/// Canonical text form: contiguous digits when n <= 9, otherwise
/// comma-separated integers.
inline std::string to_string(const Permutation &pi) {
  std::string out;
  const bool compact = pi.size() <= 9;
  for (std::size_t i = 0; i < pi.values().size(); ++i) {
    if (!compact && i > 0)
      out += ',';
    out += std::to_string(pi.values()[i]);
  }
  return out;
}

/// Accepts both the digit form ("526413") and the comma form ("10,2,...").
inline Permutation parse_permutation(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty())
    throw InvalidInput("empty permutation");
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw InvalidInput("bad character '" + std::string(1, c) +
                           "' in permutation '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos)
        end = text.size();
      std::string_view item = trim(text.substr(start, end - start));
      if (item.empty() || item.size() > 9 ||
          !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InvalidInput("bad entry '" + std::string(item) + "' in permutation");
      values.push_back(std::stoi(std::string(item)));
      start = end + 1;
    }
  }
  return Permutation(std::move(values));
}

} // namespace permsort
