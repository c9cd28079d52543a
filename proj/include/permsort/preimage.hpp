#pragma once

/**
 * @file preimage.hpp
 * @brief Stack-sort preimages of classical pattern classes.
 *
 * Pipeline: `un_s` lists every classical pattern that one stack pass can
 * turn into p; `shade_and_mark` constrains each candidate with shaded boxes
 * (pairs that must be reordered) and minimal marked regions (pairs that
 * must be kept apart by a larger popping element), or rejects it. The
 * accepted candidates form a basis P with S^-1(Av(p)) = Av(P).
 *
 * `expand_marks` rewrites marked patterns as plain mesh patterns and
 * `prune_basis` drops patterns implied by the rest, certified by
 * enumeration up to a bound.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "permsort/enumeration.hpp"
#include "permsort/errors.hpp"
#include "permsort/matching.hpp"
#include "permsort/pattern.hpp"
#include "permsort/permutation.hpp"

namespace permsort {

namespace detail {

// Raw words: the recursion runs on distinct integers, never standardized.
inline std::set<std::vector<int>> un_s_raw(std::span<const int> p) {
  if (p.empty())
    return {std::vector<int>{}};
  const auto max_it = std::max_element(p.begin(), p.end());
  const int m = *max_it;
  const std::size_t i = static_cast<std::size_t>(max_it - p.begin());
  std::vector<int> rest;
  std::set<std::vector<int>> out;
  for (std::size_t j = 0; j <= i; ++j) {
    // gamma from a_1..a_j, delta from a_{j+1}..a_i followed by beta
    rest.assign(p.begin() + static_cast<std::ptrdiff_t>(j), p.begin() + static_cast<std::ptrdiff_t>(i));
    rest.insert(rest.end(), max_it + 1, p.end());
    const auto lefts = un_s_raw(p.first(j));
    const auto rights = un_s_raw(rest);
    for (const auto &gamma : lefts)
      for (const auto &delta : rights) {
        std::vector<int> word = gamma;
        word.push_back(m);
        word.insert(word.end(), delta.begin(), delta.end());
        out.insert(std::move(word));
      }
  }
  return out;
}

} // namespace detail

/// Candidates that one stack pass can turn into `p`, standardized, sorted
/// lexicographically.
inline std::vector<Permutation> un_s(const IntegerWord &p) {
  std::vector<Permutation> out;
  for (const auto &word : detail::un_s_raw(p.letters()))
    out.push_back(standardize(std::span<const int>(word)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Permutation> un_s(const Permutation &p) {
  return un_s(IntegerWord(p.values()));
}

struct ShadeMarkResult {
  Permutation lambda;
  std::vector<Box> shades;   // sorted
  std::vector<Region> marks; // sorted, pairwise inclusion-incomparable

  /// Marked pattern with every mark at count 1, canonicalized (mesh or
  /// classical when nothing is marked).
  Pattern to_pattern() const {
    std::vector<Mark> ms;
    for (const Region &r : marks)
      ms.push_back(Mark{r, 1});
    return canonicalize(Pattern::marked(lambda, shades, std::move(ms)));
  }

  bool operator==(const ShadeMarkResult &) const = default;
};

/// Runs the shading and marking procedure with the inversions of `p`
/// visited in `inversion_order` (each an inversion (u, v) of p, u > v).
/// Returns nullopt when some required mark region is entirely shaded.
inline std::optional<ShadeMarkResult>
shade_and_mark(const Permutation &lambda, const Permutation &p,
               std::span<const ValuePair> inversion_order) {
  const int n = p.size();
  if (lambda.size() != n)
    throw PreconditionError("candidate and pattern differ in length");
  const Permutation pos = lambda.inverse(); // pos(v) = position of v in lambda
  const ValuePairSets pairs = inversion_tables(p);
  for (auto [u, v] : pairs.inversions)
    if (pos(u) > pos(v))
      throw PreconditionError("inversion (" + std::to_string(u) + "," + std::to_string(v) +
                              ") of the pattern is not an inversion of the candidate");

  std::vector<Box> shades;
  for (auto [u, v] : pairs.noninversions)
    for (int c = pos(v); c <= pos(u) - 1; ++c)
      for (int r = v; r <= n; ++r)
        shades.push_back(Box{c, r});
  std::sort(shades.begin(), shades.end());
  shades.erase(std::unique(shades.begin(), shades.end()), shades.end());

  std::vector<Region> marks;
  for (auto [u, v] : inversion_order) {
    const int i = pos(u);
    const int j = pos(v);
    bool popped_late = true;
    for (int l = i + 1; l <= j; ++l)
      if (lambda(l) >= u) {
        popped_late = false;
        break;
      }
    if (!popped_late)
      continue;
    std::vector<Box> boxes;
    for (int c = i; c <= j - 1; ++c)
      for (int r = u; r <= n; ++r)
        if (!std::binary_search(shades.begin(), shades.end(), Box{c, r}))
          boxes.push_back(Box{c, r});
    if (boxes.empty())
      return std::nullopt;
    Region region(std::move(boxes));
    const bool covered = std::any_of(marks.begin(), marks.end(),
                                     [&](const Region &m) { return m.is_subset_of(region); });
    if (covered)
      continue;
    std::erase_if(marks, [&](const Region &m) { return region.is_subset_of(m); });
    marks.push_back(std::move(region));
  }
  std::sort(marks.begin(), marks.end());
  return ShadeMarkResult{lambda, std::move(shades), std::move(marks)};
}

/// Default order: inversions by (position of u, position of v) in lambda.
inline std::optional<ShadeMarkResult> shade_and_mark(const Permutation &lambda,
                                                     const Permutation &p) {
  if (lambda.size() != p.size())
    throw PreconditionError("candidate and pattern differ in length");
  std::vector<ValuePair> order = inversion_tables(p).inversions;
  const Permutation pos = lambda.inverse();
  std::sort(order.begin(), order.end(), [&](ValuePair a, ValuePair b) {
    return std::pair(pos(a.first), pos(a.second)) < std::pair(pos(b.first), pos(b.second));
  });
  return shade_and_mark(lambda, p, order);
}

/// Set of mesh or marked patterns in canonical order. `verified_up_to` is
/// set once `prune_basis` has run: redundancy was only certified up to
/// that length.
struct MarkedBasis {
  std::vector<Pattern> patterns;
  std::optional<int> verified_up_to;

  bool operator==(const MarkedBasis &) const = default;
};

struct PreimageCandidate {
  Permutation lambda;
  std::optional<ShadeMarkResult> result; // nullopt: rejected
};

inline std::vector<PreimageCandidate> stack_preimage_candidates(const Permutation &p) {
  std::vector<PreimageCandidate> out;
  for (const Permutation &lambda : un_s(p))
    out.push_back(PreimageCandidate{lambda, shade_and_mark(lambda, p)});
  return out;
}

inline MarkedBasis stack_preimage_basis(const Permutation &p) {
  std::vector<Pattern> patterns;
  for (const auto &cand : stack_preimage_candidates(p))
    if (cand.result)
      patterns.push_back(cand.result->to_pattern());
  return MarkedBasis{canonical_set(std::move(patterns)), std::nullopt};
}

namespace detail {

inline std::vector<int> split_coord(int a, int at) {
  if (a < at)
    return {a};
  if (a > at)
    return {a + 1};
  return {a, a + 1};
}

inline std::vector<Box> split_boxes(const std::vector<Box> &boxes, Box at) {
  std::vector<Box> out;
  for (Box b : boxes)
    for (int c : split_coord(b.col, at.col))
      for (int r : split_coord(b.row, at.row))
        out.push_back(Box{c, r});
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

/// Adds a point inside box `box`: new column box.col+1, new value
/// box.row+1. Boxes on the cut lines split in two (or four). A mark whose
/// region holds `box` has one of its points supplied by the new one: its
/// count drops by one and it disappears at zero.
inline Pattern insert_point(const Pattern &pat, Box box) {
  if (pat.kind() != PatternKind::classical && pat.kind() != PatternKind::mesh &&
      pat.kind() != PatternKind::marked)
    throw UnsupportedPattern("points can only be inserted into classical, mesh or marked patterns");
  const int k = pat.length();
  if (box.col < 0 || box.col > k || box.row < 0 || box.row > k)
    throw InvalidInsertion("box outside the pattern grid");
  if (std::find(pat.shade().begin(), pat.shade().end(), box) != pat.shade().end())
    throw InvalidInsertion("cannot insert a point into a shaded box");

  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) {
    if (i == box.col + 1)
      values.push_back(box.row + 1);
    const int v = pat.perm()(i);
    values.push_back(v > box.row ? v + 1 : v);
  }
  if (box.col == k)
    values.push_back(box.row + 1);

  std::vector<Box> shade = detail::split_boxes(pat.shade(), box);
  std::vector<Mark> marks;
  for (const Mark &m : pat.marks()) {
    const bool hit = m.region.contains(box);
    if (hit && m.min_count == 1)
      continue;
    marks.push_back(Mark{Region(detail::split_boxes(m.region.boxes(), box)),
                         hit ? m.min_count - 1 : m.min_count});
  }
  return canonicalize(
      Pattern::marked(Permutation(std::move(values)), std::move(shade), std::move(marks)));
}

/// Containment-equivalent set of mesh patterns (classical when unshaded).
/// Expands the first region in canonical order, one branch per box.
inline std::vector<Pattern> expand_marks(const Pattern &pat) {
  const Pattern canon = canonicalize(pat);
  if (canon.kind() != PatternKind::marked) {
    if (canon.kind() != PatternKind::classical && canon.kind() != PatternKind::mesh)
      throw UnsupportedPattern("only mesh and marked patterns can be expanded");
    return {canon};
  }
  for (const Mark &m : canon.marks())
    if (m.min_count != 1)
      throw UnsupportedPattern("mark expansion supports only 'at least 1' marks");

  std::vector<Pattern> out;
  const Region &first = canon.marks().front().region;
  for (Box b : first.boxes()) {
    auto sub = expand_marks(insert_point(canon, b));
    out.insert(out.end(), std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
  }
  return canonical_set(std::move(out));
}

inline MarkedBasis expand_basis(const MarkedBasis &basis) {
  std::vector<Pattern> out;
  for (const Pattern &p : basis.patterns) {
    auto sub = expand_marks(p);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return MarkedBasis{canonical_set(std::move(out)), basis.verified_up_to};
}

/// Greedily drops, in canonical order, every pattern whose avoidance is
/// implied by the remaining ones for all lengths up to `n_max`. Beyond
/// `n_max` the result is not certified.
inline MarkedBasis prune_basis(const MarkedBasis &basis, int n_max, int jobs = 1) {
  std::vector<Pattern> patterns = canonical_set(basis.patterns);
  int longest = 0;
  for (const Pattern &p : patterns)
    longest = std::max(longest, p.length());
  if (n_max < longest)
    throw InvalidBound("pruning bound " + std::to_string(n_max) +
                       " is smaller than the longest pattern (" + std::to_string(longest) + ")");

  // For every permutation up to n_max that contains something, the list
  // of basis indices it contains.
  std::vector<std::vector<std::uint32_t>> hits;
  for (int n = 1; n <= n_max; ++n) {
    auto blocks = for_each_permutation_blocks<std::vector<std::vector<std::uint32_t>>>(
        n, jobs, [&](auto &acc, const Permutation &pi) {
          const PreparedPermutation prepared(pi);
          std::vector<std::uint32_t> in;
          for (std::size_t q = 0; q < patterns.size(); ++q)
            if (prepared.contains(patterns[q]))
              in.push_back(static_cast<std::uint32_t>(q));
          if (!in.empty())
            acc.push_back(std::move(in));
        });
    for (auto &b : blocks)
      hits.insert(hits.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  }

  std::vector<char> alive(patterns.size(), 1);
  for (std::size_t q = 0; q < patterns.size(); ++q) {
    bool redundant = true;
    for (const auto &in : hits) {
      if (!std::binary_search(in.begin(), in.end(), static_cast<std::uint32_t>(q)))
        continue;
      const bool other = std::any_of(in.begin(), in.end(), [&](std::uint32_t x) {
        return x != q && alive[x];
      });
      if (!other) {
        redundant = false;
        break;
      }
    }
    if (redundant)
      alive[q] = 0;
  }
  MarkedBasis out;
  for (std::size_t q = 0; q < patterns.size(); ++q)
    if (alive[q])
      out.patterns.push_back(patterns[q]);
  out.verified_up_to = n_max;
  return out;
}

} // namespace permsort
