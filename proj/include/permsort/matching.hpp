#pragma once

/**
 * @file matching.hpp
 * @brief Occurrence engine for every pattern kind.
 *
 * Occurrences are found by extending a partial column selection one
 * position at a time, keeping only selections order-isomorphic to the
 * pattern's prefix. Once the skeleton is complete the row injection is
 * fixed, and box constraints are tested through a dominance (2-D prefix
 * count) table so each rectangle count costs O(1).
 */

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "permsort/errors.hpp"
#include "permsort/pattern.hpp"
#include "permsort/permutation.hpp"

namespace permsort {

/// Witness of containment. `alpha` maps pattern positions to columns of the
/// text permutation, `beta` maps pattern values to rows; both are 1-based
/// and strictly increasing. `omega` lists the selected points
/// (alpha(i), beta(p(i))) in column order.
struct Occurrence {
  std::vector<int> alpha;
  std::vector<int> beta;
  std::vector<std::pair<int, int>> omega;

  auto operator<=>(const Occurrence &) const = default;
};

/// Closed integer rectangle [col_lo, col_hi] x [row_lo, row_hi] of cells.
struct Rect {
  int col_lo = 1, col_hi = 0, row_lo = 1, row_hi = 0;

  bool empty() const noexcept { return col_lo > col_hi || row_lo > row_hi; }
  bool contains(int col, int row) const noexcept {
    return col >= col_lo && col <= col_hi && row >= row_lo && row <= row_hi;
  }
  auto operator<=>(const Rect &) const = default;
};

namespace detail {

inline Rect box_rectangle(std::span<const int> alpha, std::span<const int> beta, Box box,
                          int n) {
  const int k = static_cast<int>(alpha.size());
  auto a = [&](int i) { return i == 0 ? 0 : i == k + 1 ? n + 1 : alpha[static_cast<std::size_t>(i - 1)]; };
  auto b = [&](int j) { return j == 0 ? 0 : j == k + 1 ? n + 1 : beta[static_cast<std::size_t>(j - 1)]; };
  return Rect{a(box.col) + 1, a(box.col + 1) - 1, b(box.row) + 1, b(box.row + 1) - 1};
}

} // namespace detail

/// The cells of the text permutation that pattern box `box` stands for
/// under `occ`. Empty when the bounding injection values are adjacent.
inline Rect box_rectangle(const Occurrence &occ, Box box, int n) {
  const int k = static_cast<int>(occ.alpha.size());
  if (box.col < 0 || box.col > k || box.row < 0 || box.row > k)
    throw InvalidInput("box outside the pattern grid");
  return detail::box_rectangle(occ.alpha, occ.beta, box, n);
}

/// Dominance table over the point diagram of a permutation:
/// `below(c, r)` = #{ i <= c : pi(i) <= r }.
class PointGrid {
public:
  explicit PointGrid(const Permutation &pi) : n_(pi.size()) {
    const std::size_t w = static_cast<std::size_t>(n_) + 1;
    table_.assign(w * w, 0);
    for (int c = 1; c <= n_; ++c) {
      for (int r = 1; r <= n_; ++r)
        table_[idx(c, r)] = table_[idx(c - 1, r)] + table_[idx(c, r - 1)] -
                            table_[idx(c - 1, r - 1)] + (pi(c) == r ? 1 : 0);
    }
  }

  int count(const Rect &rect) const noexcept {
    if (rect.empty())
      return 0;
    return below(rect.col_hi, rect.row_hi) - below(rect.col_lo - 1, rect.row_hi) -
           below(rect.col_hi, rect.row_lo - 1) + below(rect.col_lo - 1, rect.row_lo - 1);
  }

private:
  std::size_t idx(int c, int r) const noexcept {
    return static_cast<std::size_t>(c) * (static_cast<std::size_t>(n_) + 1) +
           static_cast<std::size_t>(r);
  }
  int below(int c, int r) const noexcept { return table_[idx(c, r)]; }

  int n_;
  std::vector<int> table_;
};

inline bool contains(const Permutation &pi, const Pattern &pat);

namespace detail {

/// Calls `visit(alpha)` (1-based, length k) for each occurrence of the
/// classical pattern `p` in `pi`, in lexicographic order of alpha. Stops
/// early when `visit` returns false. Returns false iff stopped early.
template <class Visit>
bool for_each_classical(const Permutation &pi, const Permutation &p, Visit &&visit) {
  const int n = pi.size();
  const int k = p.size();
  if (k > n)
    return true;
  std::vector<int> alpha(static_cast<std::size_t>(k));
  if (k == 0)
    return visit(std::span<const int>(alpha));
  const auto &pv = p.values();
  const auto &tv = pi.values();

  auto extend = [&](auto &self, int depth, int start) -> bool {
    const std::size_t d = static_cast<std::size_t>(depth);
    for (int pos = start; pos <= n - (k - depth - 1); ++pos) {
      const int x = tv[static_cast<std::size_t>(pos - 1)];
      bool ok = true;
      for (std::size_t s = 0; s < d; ++s) {
        const int y = tv[static_cast<std::size_t>(alpha[s] - 1)];
        if ((x < y) != (pv[d] < pv[s])) {
          ok = false;
          break;
        }
      }
      if (!ok)
        continue;
      alpha[d] = pos;
      if (depth + 1 == k) {
        if (!visit(std::span<const int>(alpha)))
          return false;
      } else if (!self(self, depth + 1, pos + 1)) {
        return false;
      }
    }
    return true;
  };
  return extend(extend, 0, 1);
}

inline std::vector<int> rows_of(const Permutation &pi, const Permutation &p,
                                std::span<const int> alpha) {
  std::vector<int> beta(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    beta[static_cast<std::size_t>(p.values()[i] - 1)] = pi(alpha[i]);
  return beta;
}

inline int region_count(const PointGrid &grid, std::span<const int> alpha,
                        std::span<const int> beta, const Region &region, int n) {
  // Rectangles of distinct boxes are disjoint, so counts add up.
  int total = 0;
  for (Box b : region.boxes())
    total += grid.count(box_rectangle(alpha, beta, b, n));
  return total;
}

/// Standardized sub-permutation of the points of `pi` inside the union of
/// the region's rectangles.
inline Permutation region_contents(const Permutation &pi, std::span<const int> alpha,
                                   std::span<const int> beta, const Region &region) {
  const int n = pi.size();
  std::vector<Rect> rects;
  for (Box b : region.boxes()) {
    Rect r = box_rectangle(alpha, beta, b, n);
    if (!r.empty())
      rects.push_back(r);
  }
  std::vector<int> letters;
  for (int c = 1; c <= n; ++c) {
    const int v = pi(c);
    for (const Rect &r : rects)
      if (r.contains(c, v)) {
        letters.push_back(v);
        break;
      }
  }
  return standardize(std::span<const int>(letters));
}

/// True iff `pi` restricted to columns `alpha` plus one more column
/// reproduces the full barred pattern with the extra column at the barred
/// position. Tested directly on the values, independently of any box
/// geometry.
inline bool extends_to_full(const Permutation &pi, const Permutation &full, int bar,
                            std::span<const int> alpha) {
  const int n = pi.size();
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (int a : alpha)
    used[static_cast<std::size_t>(a)] = 1;
  std::vector<int> cols(alpha.begin(), alpha.end());
  cols.push_back(0);
  std::vector<int> letters(cols.size());
  for (int x = 1; x <= n; ++x) {
    if (used[static_cast<std::size_t>(x)])
      continue;
    cols.back() = x;
    std::vector<int> sorted = cols;
    std::sort(sorted.begin(), sorted.end());
    if (sorted[static_cast<std::size_t>(bar - 1)] != x)
      continue;
    for (std::size_t i = 0; i < sorted.size(); ++i)
      letters[i] = pi(sorted[i]);
    if (standardize(std::span<const int>(letters)) == full)
      return true;
  }
  return false;
}

inline Permutation unbarred_part(const Pattern &pat) {
  std::vector<int> letters;
  const auto &bars = pat.bars();
  for (int i = 1; i <= pat.length(); ++i)
    if (std::find(bars.begin(), bars.end(), i) == bars.end())
      letters.push_back(pat.perm()(i));
  return standardize(std::span<const int>(letters));
}

/// Walks all occurrences of `pat` in `pi`; `visit(alpha, beta)` returns
/// false to stop.
template <class Visit>
void for_each_occurrence(const Permutation &pi, const PointGrid &grid, const Pattern &pat,
                         Visit &&visit) {
  const int n = pi.size();
  switch (pat.kind()) {
  case PatternKind::classical:
    for_each_classical(pi, pat.perm(), [&](std::span<const int> alpha) {
      return visit(alpha, rows_of(pi, pat.perm(), alpha));
    });
    return;
  case PatternKind::mesh:
  case PatternKind::marked:
    for_each_classical(pi, pat.perm(), [&](std::span<const int> alpha) {
      const std::vector<int> beta = rows_of(pi, pat.perm(), alpha);
      for (Box b : pat.shade())
        if (grid.count(box_rectangle(alpha, beta, b, n)) != 0)
          return true;
      for (const Mark &m : pat.marks())
        if (region_count(grid, alpha, beta, m.region, n) < m.min_count)
          return true;
      return visit(alpha, beta);
    });
    return;
  case PatternKind::decorated:
    for_each_classical(pi, pat.perm(), [&](std::span<const int> alpha) {
      const std::vector<int> beta = rows_of(pi, pat.perm(), alpha);
      for (const Decoration &d : pat.decorations()) {
        const Pattern &avoid = d.avoid_pattern();
        // Fewer points than the avoid-pattern needs: vacuously avoided.
        if (region_count(grid, alpha, beta, d.region, n) < avoid.length())
          continue;
        if (contains(region_contents(pi, alpha, beta, d.region), avoid))
          return true;
      }
      return visit(alpha, beta);
    });
    return;
  case PatternKind::barred: {
    if (pat.bars().size() != 1)
      throw UnsupportedPattern("barred patterns with more than one bar are not supported");
    const Permutation skeleton = unbarred_part(pat);
    const int bar = pat.bars().front();
    for_each_classical(pi, skeleton, [&](std::span<const int> alpha) {
      if (extends_to_full(pi, pat.perm(), bar, alpha))
        return true;
      return visit(alpha, rows_of(pi, skeleton, alpha));
    });
    return;
  }
  }
}

inline std::vector<std::pair<int, int>> omega_of(const Permutation &skeleton,
                                                 std::span<const int> alpha,
                                                 std::span<const int> beta) {
  std::vector<std::pair<int, int>> omega;
  omega.reserve(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    omega.emplace_back(alpha[i], beta[static_cast<std::size_t>(skeleton.values()[i] - 1)]);
  return omega;
}

} // namespace detail

/// A permutation prepared for repeated matching: the dominance table is
/// built once and shared by every pattern tested against it.
class PreparedPermutation {
public:
  explicit PreparedPermutation(Permutation pi) : pi_(std::move(pi)), grid_(pi_) {}

  const Permutation &perm() const noexcept { return pi_; }

  bool contains(const Pattern &pat) const {
    bool found = false;
    detail::for_each_occurrence(pi_, grid_, pat, [&](auto &&, auto &&) {
      found = true;
      return false;
    });
    return found;
  }

  bool avoids_all(std::span<const Pattern> basis) const {
    for (const Pattern &p : basis)
      if (contains(p))
        return false;
    return true;
  }

  std::vector<Occurrence> occurrences(const Pattern &pat) const {
    const Permutation skeleton =
        pat.kind() == PatternKind::barred && pat.bars().size() == 1 ? detail::unbarred_part(pat)
                                                                    : pat.perm();
    std::vector<Occurrence> out;
    detail::for_each_occurrence(
        pi_, grid_, pat, [&](std::span<const int> alpha, const std::vector<int> &beta) {
          out.push_back(Occurrence{std::vector<int>(alpha.begin(), alpha.end()), beta,
                                   detail::omega_of(skeleton, alpha, beta)});
          return true;
        });
    return out;
  }

  std::size_t count(const Pattern &pat) const {
    std::size_t total = 0;
    detail::for_each_occurrence(pi_, grid_, pat, [&](auto &&, auto &&) {
      ++total;
      return true;
    });
    return total;
  }

private:
  Permutation pi_;
  PointGrid grid_;
};

/// All occurrences, ordered lexicographically by alpha. Throws
/// UnsupportedPattern for barred patterns with several bars.
inline std::vector<Occurrence> occurrences(const Permutation &pi, const Pattern &pat) {
  return PreparedPermutation(pi).occurrences(pat);
}

inline bool contains(const Permutation &pi, const Pattern &pat) {
  return PreparedPermutation(pi).contains(pat);
}

inline bool avoids_all(const Permutation &pi, std::span<const Pattern> basis) {
  return PreparedPermutation(pi).avoids_all(basis);
}

/// A barred pattern with a single bar as the equivalent mesh pattern: the
/// unbarred letters standardized, with the one box where the barred letter
/// used to sit shaded.
inline Pattern barred_to_mesh(const Pattern &pat) {
  if (pat.kind() != PatternKind::barred)
    throw UnsupportedPattern("barred_to_mesh expects a barred pattern");
  if (pat.bars().size() != 1)
    throw UnsupportedPattern("only patterns with exactly one bar convert to mesh patterns");
  const int pos = pat.bars().front();
  const int value = pat.perm()(pos);
  return Pattern::mesh(detail::unbarred_part(pat), {Box{pos - 1, value - 1}});
}

} // namespace permsort
