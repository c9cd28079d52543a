#pragma once

/**
 * @file pattern.hpp
 * @brief Pattern values: classical, mesh, marked mesh, barred and decorated.
 *
 * A pattern of length k lives on a (k+1) x (k+1) grid of boxes. Box (c, r)
 * is addressed by its lower-left corner, so (0, 0) is the bottom-left box,
 * column c sits between pattern positions c and c+1 and row r between
 * values r and r+1.
 *
 * Patterns are immutable once built. Factory functions validate shape;
 * `canonicalize` fixes element order and collapses kinds whose extra data
 * is empty (a mesh pattern without shading is classical, etc.).
 */

#include <algorithm>
#include <compare>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "permsort/errors.hpp"
#include "permsort/permutation.hpp"

namespace permsort {

struct Box {
  int col = 0;
  int row = 0;
  auto operator<=>(const Box &) const = default;
};

/// Nonempty set of boxes, kept sorted lexicographically by (col, row).
class Region {
public:
  Region() = default;
  explicit Region(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
    std::sort(boxes_.begin(), boxes_.end());
    boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
  }
  Region(std::initializer_list<Box> boxes) : Region(std::vector<Box>(boxes)) {}

  const std::vector<Box> &boxes() const noexcept { return boxes_; }
  bool empty() const noexcept { return boxes_.empty(); }
  std::size_t size() const noexcept { return boxes_.size(); }

  bool contains(Box b) const {
    return std::binary_search(boxes_.begin(), boxes_.end(), b);
  }
  bool is_subset_of(const Region &other) const {
    return std::includes(other.boxes_.begin(), other.boxes_.end(), boxes_.begin(),
                         boxes_.end());
  }
  bool intersects(const std::vector<Box> &sorted_boxes) const {
    for (const Box &b : boxes_)
      if (std::binary_search(sorted_boxes.begin(), sorted_boxes.end(), b))
        return true;
    return false;
  }

  auto operator<=>(const Region &) const = default;

private:
  std::vector<Box> boxes_;
};

/// The region's instantiated cells must hold at least `min_count` points.
struct Mark {
  Region region;
  int min_count = 1;
  auto operator<=>(const Mark &) const = default;
};

class Pattern;

/// The points falling inside `region` must avoid `avoid`.
struct Decoration {
  Region region;
  std::shared_ptr<const Pattern> avoid;

  const Pattern &avoid_pattern() const { return *avoid; }
};

bool operator==(const Decoration &a, const Decoration &b);
std::strong_ordering operator<=>(const Decoration &a, const Decoration &b);

enum class PatternKind { classical, mesh, marked, barred, decorated };

inline std::string_view to_string(PatternKind kind) {
  switch (kind) {
  case PatternKind::classical: return "classical";
  case PatternKind::mesh: return "mesh";
  case PatternKind::marked: return "marked";
  case PatternKind::barred: return "barred";
  case PatternKind::decorated: return "decorated";
  }
  return "?";
}

inline PatternKind parse_pattern_kind(std::string_view name) {
  for (auto k : {PatternKind::classical, PatternKind::mesh, PatternKind::marked,
                 PatternKind::barred, PatternKind::decorated})
    if (to_string(k) == name)
      return k;
  throw InvalidInput("unknown pattern kind '" + std::string(name) + "'");
}

class Pattern {
public:
  static Pattern classical(Permutation perm) {
    return Pattern(PatternKind::classical, std::move(perm), {}, {}, {}, {});
  }
  static Pattern mesh(Permutation perm, std::vector<Box> shade) {
    return Pattern(PatternKind::mesh, std::move(perm), std::move(shade), {}, {}, {});
  }
  static Pattern marked(Permutation perm, std::vector<Box> shade, std::vector<Mark> marks) {
    return Pattern(PatternKind::marked, std::move(perm), std::move(shade),
                   std::move(marks), {}, {});
  }
  /// `perm` is the full pattern, barred letters included; `bars` are
  /// 1-based positions of the barred letters.
  static Pattern barred(Permutation perm, std::vector<int> bars) {
    return Pattern(PatternKind::barred, std::move(perm), {}, {}, {}, std::move(bars));
  }
  static Pattern decorated(Permutation perm, std::vector<Decoration> decorations) {
    return Pattern(PatternKind::decorated, std::move(perm), {}, {},
                   std::move(decorations), {});
  }

  PatternKind kind() const noexcept { return kind_; }
  const Permutation &perm() const noexcept { return perm_; }
  int length() const noexcept { return perm_.size(); }
  const std::vector<Box> &shade() const noexcept { return shade_; }
  const std::vector<Mark> &marks() const noexcept { return marks_; }
  const std::vector<Decoration> &decorations() const noexcept { return decorations_; }
  const std::vector<int> &bars() const noexcept { return bars_; }

  friend bool operator==(const Pattern &a, const Pattern &b) {
    return a.kind_ == b.kind_ && a.perm_ == b.perm_ && a.shade_ == b.shade_ &&
           a.marks_ == b.marks_ && a.decorations_ == b.decorations_ &&
           a.bars_ == b.bars_;
  }
  friend std::strong_ordering operator<=>(const Pattern &a, const Pattern &b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.perm_.size() <=> b.perm_.size(); c != 0) return c;
    if (auto c = a.perm_ <=> b.perm_; c != 0) return c;
    if (auto c = a.shade_ <=> b.shade_; c != 0) return c;
    if (auto c = a.marks_ <=> b.marks_; c != 0) return c;
    if (auto c = a.bars_ <=> b.bars_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.decorations_.begin(), a.decorations_.end(), b.decorations_.begin(),
        b.decorations_.end());
  }

private:
  Pattern(PatternKind kind, Permutation perm, std::vector<Box> shade,
          std::vector<Mark> marks, std::vector<Decoration> decorations,
          std::vector<int> bars)
      : kind_(kind), perm_(std::move(perm)), shade_(std::move(shade)),
        marks_(std::move(marks)), decorations_(std::move(decorations)),
        bars_(std::move(bars)) {
    validate();
  }

  void check_box(Box b) const {
    const int k = perm_.size();
    if (b.col < 0 || b.col > k || b.row < 0 || b.row > k)
      throw InvalidInput("box (" + std::to_string(b.col) + "," + std::to_string(b.row) +
                         ") outside 0.." + std::to_string(k));
  }

  void validate() const {
    for (Box b : shade_)
      check_box(b);
    for (const Mark &m : marks_) {
      if (m.region.empty())
        throw InvalidInput("mark region is empty");
      if (m.min_count < 1)
        throw InvalidInput("mark count must be at least 1");
      for (Box b : m.region.boxes())
        check_box(b);
    }
    for (const Decoration &d : decorations_) {
      if (d.region.empty())
        throw InvalidInput("decoration region is empty");
      for (Box b : d.region.boxes())
        check_box(b);
      if (!d.avoid)
        throw InvalidInput("decoration without an avoid-pattern");
      if (d.avoid->kind() != PatternKind::classical &&
          d.avoid->kind() != PatternKind::decorated)
        throw UnsupportedPattern("decoration avoid-pattern must be classical or decorated, got " +
                                 std::string(to_string(d.avoid->kind())));
    }
    switch (kind_) {
    case PatternKind::classical:
      if (!shade_.empty() || !marks_.empty() || !decorations_.empty() || !bars_.empty())
        throw InvalidInput("classical pattern carries extra data");
      break;
    case PatternKind::mesh:
      if (!marks_.empty() || !decorations_.empty() || !bars_.empty())
        throw InvalidInput("mesh pattern carries marks, decorations or bars");
      break;
    case PatternKind::marked: {
      if (!decorations_.empty() || !bars_.empty())
        throw InvalidInput("marked pattern carries decorations or bars");
      std::vector<Box> sorted = shade_;
      std::sort(sorted.begin(), sorted.end());
      for (const Mark &m : marks_)
        if (m.region.intersects(sorted))
          throw InvalidInput("mark region overlaps the shading");
      break;
    }
    case PatternKind::decorated:
      if (!shade_.empty() || !marks_.empty() || !bars_.empty())
        throw InvalidInput("decorated pattern carries shading, marks or bars");
      break;
    case PatternKind::barred: {
      if (bars_.empty())
        throw InvalidInput("barred pattern without bars");
      std::vector<int> sorted = bars_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInput("repeated bar position");
      for (int pos : bars_)
        if (pos < 1 || pos > perm_.size())
          throw InvalidInput("bar position " + std::to_string(pos) + " outside 1.." +
                             std::to_string(perm_.size()));
      break;
    }
    }
  }

  PatternKind kind_;
  Permutation perm_;
  std::vector<Box> shade_;
  std::vector<Mark> marks_;
  std::vector<Decoration> decorations_;
  std::vector<int> bars_;
};

inline bool operator==(const Decoration &a, const Decoration &b) {
  if (a.region != b.region)
    return false;
  if (a.avoid == b.avoid)
    return true;
  return a.avoid && b.avoid && *a.avoid == *b.avoid;
}

inline std::strong_ordering operator<=>(const Decoration &a, const Decoration &b) {
  if (auto c = a.region <=> b.region; c != 0)
    return c;
  if (!a.avoid || !b.avoid)
    return static_cast<bool>(a.avoid) <=> static_cast<bool>(b.avoid);
  return *a.avoid <=> *b.avoid;
}

inline Decoration make_decoration(Region region, Pattern avoid) {
  return Decoration{std::move(region), std::make_shared<const Pattern>(std::move(avoid))};
}

/// Sorted, duplicate-free copy; collapses kinds whose extra data is empty.
/// Idempotent.
inline Pattern canonicalize(const Pattern &pat) {
  std::vector<Box> shade = pat.shade();
  std::sort(shade.begin(), shade.end());
  shade.erase(std::unique(shade.begin(), shade.end()), shade.end());

  switch (pat.kind()) {
  case PatternKind::classical:
    return pat;
  case PatternKind::mesh:
    if (shade.empty())
      return Pattern::classical(pat.perm());
    return Pattern::mesh(pat.perm(), std::move(shade));
  case PatternKind::marked: {
    std::vector<Mark> marks = pat.marks();
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    if (marks.empty())
      return canonicalize(Pattern::mesh(pat.perm(), std::move(shade)));
    return Pattern::marked(pat.perm(), std::move(shade), std::move(marks));
  }
  case PatternKind::barred: {
    std::vector<int> bars = pat.bars();
    std::sort(bars.begin(), bars.end());
    return Pattern::barred(pat.perm(), std::move(bars));
  }
  case PatternKind::decorated: {
    std::vector<Decoration> decorations;
    for (const Decoration &d : pat.decorations())
      decorations.push_back(make_decoration(d.region, canonicalize(d.avoid_pattern())));
    std::sort(decorations.begin(), decorations.end());
    decorations.erase(std::unique(decorations.begin(), decorations.end()),
                      decorations.end());
    if (decorations.empty())
      return Pattern::classical(pat.perm());
    return Pattern::decorated(pat.perm(), std::move(decorations));
  }
  }
  return pat;
}

/// Canonical, duplicate-free, sorted set of patterns.
inline std::vector<Pattern> canonical_set(std::vector<Pattern> patterns) {
  for (Pattern &p : patterns)
    p = canonicalize(p);
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  return patterns;
}

} // namespace permsort
