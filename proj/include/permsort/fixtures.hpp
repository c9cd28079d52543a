#pragma once

/**
 * @file fixtures.hpp
 * @brief Known pattern bases, transcribed from their published pictures.
 *
 * Box coordinates follow the lower-left-corner convention of pattern.hpp.
 * A shaded box inside a decorated pattern is written as a decoration whose
 * avoid-pattern is the single point 1.
 */

#include <string>
#include <string_view>
#include <vector>

#include "permsort/errors.hpp"
#include "permsort/pattern.hpp"
#include "permsort/permutation.hpp"

namespace permsort {

enum class FixtureName {
  west2,
  west3,
  bubble1243,
  stack_len3_123,
  stack_len3_132,
  stack_len3_213,
  stack_len3_231,
  stack_len3_312,
  stack_len3_321,
};

inline constexpr FixtureName all_fixtures[] = {
    FixtureName::west2,          FixtureName::west3,          FixtureName::bubble1243,
    FixtureName::stack_len3_123, FixtureName::stack_len3_132, FixtureName::stack_len3_213,
    FixtureName::stack_len3_231, FixtureName::stack_len3_312, FixtureName::stack_len3_321,
};

inline std::string_view to_string(FixtureName name) {
  switch (name) {
  case FixtureName::west2: return "west2";
  case FixtureName::west3: return "west3";
  case FixtureName::bubble1243: return "bubble1243";
  case FixtureName::stack_len3_123: return "stack_len3_123";
  case FixtureName::stack_len3_132: return "stack_len3_132";
  case FixtureName::stack_len3_213: return "stack_len3_213";
  case FixtureName::stack_len3_231: return "stack_len3_231";
  case FixtureName::stack_len3_312: return "stack_len3_312";
  case FixtureName::stack_len3_321: return "stack_len3_321";
  }
  return "?";
}

inline FixtureName parse_fixture_name(std::string_view name) {
  for (FixtureName f : all_fixtures)
    if (to_string(f) == name)
      return f;
  throw InvalidInput("unknown fixture '" + std::string(name) + "'");
}

/// The sorting question a fixture answers: permutations pi with
/// op^passes(pi) avoiding `target` are exactly Av(builtin_basis(name)).
struct FixtureTarget {
  SortOp op;
  int passes;
  Permutation target;
};

inline FixtureTarget fixture_target(FixtureName name) {
  switch (name) {
  case FixtureName::west2: return {SortOp::stack, 2, parse_permutation("21")};
  case FixtureName::west3: return {SortOp::stack, 3, parse_permutation("21")};
  case FixtureName::bubble1243: return {SortOp::bubble, 1, parse_permutation("1243")};
  case FixtureName::stack_len3_123: return {SortOp::stack, 1, parse_permutation("123")};
  case FixtureName::stack_len3_132: return {SortOp::stack, 1, parse_permutation("132")};
  case FixtureName::stack_len3_213: return {SortOp::stack, 1, parse_permutation("213")};
  case FixtureName::stack_len3_231: return {SortOp::stack, 1, parse_permutation("231")};
  case FixtureName::stack_len3_312: return {SortOp::stack, 1, parse_permutation("312")};
  case FixtureName::stack_len3_321: return {SortOp::stack, 1, parse_permutation("321")};
  }
  throw InvalidInput("unknown fixture");
}

namespace detail {

inline Pattern cl(std::string_view p) { return Pattern::classical(parse_permutation(p)); }

inline Pattern mesh(std::string_view p, std::vector<Box> shade) {
  return Pattern::mesh(parse_permutation(p), std::move(shade));
}

inline Pattern marked(std::string_view p, std::vector<Box> shade, std::vector<std::vector<Box>> regions) {
  std::vector<Mark> marks;
  for (auto &r : regions)
    marks.push_back(Mark{Region(std::move(r)), 1});
  return Pattern::marked(parse_permutation(p), std::move(shade), std::move(marks));
}

// Shaded boxes become a decoration avoiding 1; `descending` must hold its
// points in decreasing order (avoid 12).
inline Pattern decorated(std::string_view p, std::vector<Box> shade, std::vector<Box> descending) {
  return Pattern::decorated(parse_permutation(p),
                            {make_decoration(Region(std::move(shade)), cl("1")),
                             make_decoration(Region(std::move(descending)), cl("12"))});
}

} // namespace detail

inline std::vector<Pattern> builtin_basis(FixtureName name) {
  using detail::cl;
  using detail::decorated;
  using detail::marked;
  using detail::mesh;
  std::vector<Pattern> out;
  switch (name) {
  case FixtureName::west2:
    // 2341 and the barred pattern 3-5bar-241 in mesh form.
    out = {cl("2341"), mesh("3241", {{1, 4}})};
    break;
  case FixtureName::west3:
    // West-3-stack-sortable basis: six mesh patterns of length 5, four
    // decorated patterns of lengths 6 and 7.
    out = {
        cl("23451"),
        mesh("24351", {{2, 4}, {2, 5}}),
        mesh("32451", {{1, 3}, {1, 4}, {1, 5}}),
        mesh("42351", {{1, 4}, {1, 5}, {2, 4}, {2, 5}}),
        mesh("43251", {{1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}),
        mesh("34251", {{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}}),
        decorated("362451", {{0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 6}},
                  {{2, 5}}),
        decorated("364251",
                  {{0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 6}, {3, 4}, {3, 5}, {3, 6}},
                  {{2, 5}}),
        decorated("7362451",
                  {{1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 6}, {3, 7}},
                  {{3, 5}}),
        decorated("7364251",
                  {{1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7},
                   {3, 4}, {3, 6}, {3, 7}, {4, 4}, {4, 5}, {4, 6}, {4, 7}},
                  {{3, 5}}),
    };
    break;
  case FixtureName::bubble1243:
    // B^-1(Av(1243)); not describable by classical patterns alone.
    out = {
        marked("1243", {}, {{{0, 4}, {1, 4}, {2, 4}, {3, 4}}}),
        marked("1423", {{0, 4}, {1, 4}, {2, 4}}, {{{3, 4}}}),
        marked("2143", {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, {{{2, 4}, {3, 4}}}),
        marked("4123", {{0, 4}, {1, 4}, {2, 4}}, {{{3, 4}}}),
    };
    break;
  case FixtureName::stack_len3_123:
    out = {cl("123"), mesh("132", {{2, 3}}), mesh("213", {{1, 2}, {1, 3}}),
           mesh("312", {{1, 3}, {2, 3}}), mesh("321", {{1, 3}, {2, 2}, {2, 3}})};
    break;
  case FixtureName::stack_len3_132:
    out = {marked("132", {}, {{{2, 3}}}), marked("312", {{1, 3}}, {{{2, 3}}})};
    break;
  case FixtureName::stack_len3_213:
    out = {marked("213", {}, {{{1, 2}, {1, 3}}}), mesh("231", {{2, 3}}),
           marked("321", {{1, 3}, {2, 3}}, {{{2, 2}}})};
    break;
  case FixtureName::stack_len3_231:
    out = {marked("231", {}, {{{2, 3}}}), marked("321", {{1, 3}}, {{{2, 3}}})};
    break;
  case FixtureName::stack_len3_312:
    out = {marked("312", {}, {{{1, 3}}}), marked("321", {{2, 2}, {2, 3}}, {{{1, 3}}})};
    break;
  case FixtureName::stack_len3_321:
    out = {marked("321", {}, {{{1, 3}}, {{2, 2}, {2, 3}}})};
    break;
  }
  return canonical_set(std::move(out));
}

} // namespace permsort
