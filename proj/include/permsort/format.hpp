#pragma once

/**
 * @file format.hpp
 * @brief Text forms of patterns, bases and verification reports.
 *
 * Line form (classical, mesh, marked):
 *
 *     PERM [ | shade: (c,r),(c,r),... ] [ | mark: {(c,r),...} >= N ]*
 *
 * e.g. `132 | shade: (2,2) | mark: {(1,0),(1,1),(2,0),(2,1)} >= 1`.
 *
 * JSON form (every kind): {"kind", "perm", "shade", "marks", "decor",
 * "bars"} with integer arrays only, everything in canonical order.
 */

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "permsort/errors.hpp"
#include "permsort/oracle.hpp"
#include "permsort/pattern.hpp"
#include "permsort/permutation.hpp"
#include "permsort/preimage.hpp"

namespace permsort {

enum class PatternFormat { line, json };

namespace detail {

class LineParser {
public:
  explicit LineParser(std::string_view text) : s_(text) {}

  Pattern parse() {
    skip_ws();
    const std::size_t perm_start = i_;
    while (i_ < s_.size() && s_[i_] != '|')
      ++i_;
    Permutation perm;
    try {
      perm = parse_permutation(s_.substr(perm_start, i_ - perm_start));
    } catch (const InvalidInput &e) {
      throw ParseError(e.what(), perm_start);
    }
    std::vector<Box> shade;
    std::vector<Mark> marks;
    while (i_ < s_.size()) {
      expect('|');
      skip_ws();
      if (consume_word("shade:")) {
        auto boxes = box_list('|');
        shade.insert(shade.end(), boxes.begin(), boxes.end());
      } else if (consume_word("mark:")) {
        skip_ws();
        expect('{');
        auto boxes = box_list('}');
        expect('}');
        skip_ws();
        expect('>');
        expect('=');
        skip_ws();
        const std::size_t at = i_;
        const int count = integer();
        if (boxes.empty())
          throw ParseError("mark with no boxes", at);
        marks.push_back(Mark{Region(std::move(boxes)), count});
      } else {
        throw ParseError("expected 'shade:' or 'mark:'", i_);
      }
      skip_ws();
    }
    try {
      if (!marks.empty())
        return canonicalize(Pattern::marked(std::move(perm), std::move(shade), std::move(marks)));
      return canonicalize(Pattern::mesh(std::move(perm), std::move(shade)));
    } catch (const Error &e) {
      throw ParseError(std::string("invalid pattern: ") + e.what(), 0);
    }
  }

private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }
  void expect(char c) {
    skip_ws();
    if (i_ >= s_.size() || s_[i_] != c)
      throw ParseError(std::string("expected '") + c + "'", i_);
    ++i_;
  }
  bool consume_word(std::string_view w) {
    if (s_.substr(i_, w.size()) == w) {
      i_ += w.size();
      return true;
    }
    return false;
  }
  int integer() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
      ++i_;
    if (start == i_ || i_ - start > 6)
      throw ParseError("expected a small non-negative integer", start);
    return std::stoi(std::string(s_.substr(start, i_ - start)));
  }
  Box box() {
    expect('(');
    const int c = integer();
    expect(',');
    const int r = integer();
    expect(')');
    return Box{c, r};
  }
  std::vector<Box> box_list(char terminator) {
    std::vector<Box> out;
    skip_ws();
    if (i_ >= s_.size() || s_[i_] == terminator)
      return out;
    out.push_back(box());
    skip_ws();
    while (i_ < s_.size() && s_[i_] == ',') {
      ++i_;
      out.push_back(box());
      skip_ws();
    }
    return out;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

inline nlohmann::json boxes_json(const std::vector<Box> &boxes) {
  auto arr = nlohmann::json::array();
  for (Box b : boxes)
    arr.push_back({b.col, b.row});
  return arr;
}

inline std::vector<Box> boxes_from_json(const nlohmann::json &j) {
  std::vector<Box> out;
  for (const auto &b : j) {
    if (!b.is_array() || b.size() != 2)
      throw InvalidInput("box must be a [col, row] pair");
    out.push_back(Box{b.at(0).get<int>(), b.at(1).get<int>()});
  }
  return out;
}

} // namespace detail

/// Canonical JSON object for `pat`.
inline nlohmann::json pattern_to_json(const Pattern &input) {
  const Pattern pat = canonicalize(input);
  nlohmann::json j;
  j["kind"] = std::string(to_string(pat.kind()));
  j["perm"] = pat.perm().values();
  j["shade"] = detail::boxes_json(pat.shade());
  j["marks"] = nlohmann::json::array();
  for (const Mark &m : pat.marks())
    j["marks"].push_back({{"boxes", detail::boxes_json(m.region.boxes())}, {"min", m.min_count}});
  j["decor"] = nlohmann::json::array();
  for (const Decoration &d : pat.decorations())
    j["decor"].push_back(
        {{"boxes", detail::boxes_json(d.region.boxes())}, {"avoid", pattern_to_json(d.avoid_pattern())}});
  j["bars"] = pat.bars();
  return j;
}

/// Throws InvalidInput / UnsupportedPattern on semantic problems.
inline Pattern pattern_from_json(const nlohmann::json &j) {
  try {
    if (!j.is_object())
      throw InvalidInput("pattern must be a JSON object");
    const PatternKind kind = parse_pattern_kind(j.at("kind").get<std::string>());
    Permutation perm(j.at("perm").get<std::vector<int>>());
    std::vector<Box> shade = detail::boxes_from_json(j.value("shade", nlohmann::json::array()));
    std::vector<Mark> marks;
    for (const auto &m : j.value("marks", nlohmann::json::array()))
      marks.push_back(Mark{Region(detail::boxes_from_json(m.at("boxes"))), m.value("min", 1)});
    std::vector<Decoration> decor;
    for (const auto &d : j.value("decor", nlohmann::json::array()))
      decor.push_back(make_decoration(Region(detail::boxes_from_json(d.at("boxes"))),
                                      pattern_from_json(d.at("avoid"))));
    std::vector<int> bars = j.value("bars", std::vector<int>{});
    auto require_empty = [&](bool empty, const char *what) {
      if (!empty)
        throw InvalidInput(std::string(to_string(kind)) + " pattern cannot carry " + what);
    };
    switch (kind) {
    case PatternKind::classical:
      require_empty(shade.empty() && marks.empty() && decor.empty() && bars.empty(), "extra data");
      return Pattern::classical(std::move(perm));
    case PatternKind::mesh:
      require_empty(marks.empty() && decor.empty() && bars.empty(), "marks, decorations or bars");
      return canonicalize(Pattern::mesh(std::move(perm), std::move(shade)));
    case PatternKind::marked:
      require_empty(decor.empty() && bars.empty(), "decorations or bars");
      return canonicalize(Pattern::marked(std::move(perm), std::move(shade), std::move(marks)));
    case PatternKind::barred:
      require_empty(shade.empty() && marks.empty() && decor.empty(), "shading, marks or decorations");
      return canonicalize(Pattern::barred(std::move(perm), std::move(bars)));
    case PatternKind::decorated:
      require_empty(shade.empty() && marks.empty() && bars.empty(), "shading, marks or bars");
      return canonicalize(Pattern::decorated(std::move(perm), std::move(decor)));
    }
  } catch (const nlohmann::json::exception &e) {
    throw InvalidInput(std::string("malformed pattern object: ") + e.what());
  }
  throw InvalidInput("unknown pattern kind");
}

inline Pattern parse_pattern(std::string_view text, PatternFormat format) {
  if (format == PatternFormat::line)
    return detail::LineParser(text).parse();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("JSON syntax error: ") + e.what(), e.byte);
  }
  try {
    return pattern_from_json(j);
  } catch (const Error &e) {
    if (dynamic_cast<const ParseError *>(&e))
      throw;
    throw ParseError(std::string("invalid pattern: ") + e.what(), 0);
  }
}

/// JSON when the first non-blank character is '{', line form otherwise.
inline Pattern parse_pattern(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)))
      continue;
    return parse_pattern(text, c == '{' ? PatternFormat::json : PatternFormat::line);
  }
  throw ParseError("empty pattern text", 0);
}

inline bool has_line_form(const Pattern &pat) {
  const PatternKind k = canonicalize(pat).kind();
  return k == PatternKind::classical || k == PatternKind::mesh || k == PatternKind::marked;
}

inline std::string format_pattern(const Pattern &input, PatternFormat format) {
  const Pattern pat = canonicalize(input);
  if (format == PatternFormat::json)
    return pattern_to_json(pat).dump();
  if (!has_line_form(pat))
    throw UnsupportedFormat(std::string(to_string(pat.kind())) +
                            " patterns have no line form; use JSON");
  auto box_list = [](const std::vector<Box> &boxes) {
    std::string s;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      if (i)
        s += ',';
      s += '(' + std::to_string(boxes[i].col) + ',' + std::to_string(boxes[i].row) + ')';
    }
    return s;
  };
  std::string out = to_string(pat.perm());
  if (!pat.shade().empty())
    out += " | shade: " + box_list(pat.shade());
  for (const Mark &m : pat.marks())
    out += " | mark: {" + box_list(m.region.boxes()) + "} >= " + std::to_string(m.min_count);
  return out;
}

/// Line form when available, JSON otherwise.
inline std::string format_pattern_preferred(const Pattern &pat) {
  return format_pattern(pat, has_line_form(pat) ? PatternFormat::line : PatternFormat::json);
}

/// One pattern per line, plus a trailing comment when the basis was pruned.
inline std::string format_basis(const MarkedBasis &basis, bool json = false) {
  std::string out;
  if (json) {
    auto arr = nlohmann::json::array();
    for (const Pattern &p : basis.patterns)
      arr.push_back(pattern_to_json(p));
    out = arr.dump() + "\n";
  } else {
    for (const Pattern &p : basis.patterns)
      out += format_pattern_preferred(p) + "\n";
  }
  if (basis.verified_up_to)
    out += "# pruned: verified up to n=" + std::to_string(*basis.verified_up_to) + "\n";
  return out;
}

/// Reads a basis file: blank lines and '#' comments are skipped, a file
/// whose first significant character is '[' is a JSON array, anything
/// else holds one pattern per line (line or JSON form).
inline std::vector<Pattern> parse_basis(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first])))
    ++first;
  std::vector<Pattern> out;
  if (first < text.size() && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
      throw ParseError(std::string("JSON syntax error: ") + e.what(), e.byte);
    }
    for (const auto &item : j) {
      try {
        out.push_back(pattern_from_json(item));
      } catch (const Error &e) {
        throw ParseError(std::string("invalid pattern: ") + e.what(), 0);
      }
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead])))
      ++lead;
    if (lead < line.size() && line[lead] != '#') {
      try {
        out.push_back(parse_pattern(line));
      } catch (const ParseError &e) {
        throw ParseError(e.what(), pos + e.position());
      }
    }
    pos = end + 1;
  }
  return out;
}

enum class RenderStyle { ascii, box_drawing };

/// Grid of (2k+1) x (2k+1) cells, top row first. Even cells are boxes
/// ('#' shaded, mark count digit, 'd' decorated), odd/odd cells are line
/// crossings ('*' for a pattern point, 'o' for a barred point).
/// Decorations get one footnote each.
inline std::string render_grid(const Pattern &input, RenderStyle style = RenderStyle::ascii) {
  const Pattern pat = canonicalize(input);
  const int k = pat.length();
  if (k > 20)
    throw UnsupportedFormat("refusing to render a pattern of length " + std::to_string(k) +
                            " (limit 20)");
  const bool fancy = style == RenderStyle::box_drawing;
  const std::string point = fancy ? "●" : "*";
  const std::string bar_point = fancy ? "○" : "o";
  const std::string cross = fancy ? "┼" : "+";
  const std::string vline = fancy ? "│" : "|";
  const std::string hline = fancy ? "─" : "-";
  const std::string shaded = fancy ? "█" : "#";

  auto box_cell = [&](Box b) -> std::string {
    if (std::find(pat.shade().begin(), pat.shade().end(), b) != pat.shade().end())
      return shaded;
    for (const Mark &m : pat.marks())
      if (m.region.contains(b))
        return m.min_count < 10 ? std::to_string(m.min_count) : "+";
    for (const Decoration &d : pat.decorations())
      if (d.region.contains(b))
        return "d";
    return " ";
  };

  std::string out;
  for (int y = 2 * k; y >= 0; --y) {
    for (int x = 0; x <= 2 * k; ++x) {
      const bool xo = x % 2 == 1;
      const bool yo = y % 2 == 1;
      if (xo && yo) {
        const int pos = (x + 1) / 2;
        const int val = (y + 1) / 2;
        if (pat.perm()(pos) == val) {
          const bool barred =
              std::find(pat.bars().begin(), pat.bars().end(), pos) != pat.bars().end();
          out += barred ? bar_point : point;
        } else {
          out += cross;
        }
      } else if (xo) {
        out += vline;
      } else if (yo) {
        out += hline;
      } else {
        out += box_cell(Box{x / 2, y / 2});
      }
    }
    out += '\n';
  }
  int index = 1;
  for (const Decoration &d : pat.decorations()) {
    out += "d" + std::to_string(index++) + ": {";
    for (std::size_t i = 0; i < d.region.boxes().size(); ++i) {
      if (i)
        out += ',';
      out += '(' + std::to_string(d.region.boxes()[i].col) + ',' +
             std::to_string(d.region.boxes()[i].row) + ')';
    }
    out += "} avoids " + format_pattern(d.avoid_pattern(), has_line_form(d.avoid_pattern())
                                                               ? PatternFormat::line
                                                               : PatternFormat::json) +
           "\n";
  }
  return out;
}

/// Plain-text table followed by `PASS` or `FAIL <perm> <reason>`.
inline std::string report_to_text(const VerificationReport &report) {
  std::ostringstream os;
  os << "n\t|Av|\t|preimage|\tequal?\n";
  for (const auto &r : report.rows)
    os << r.n << '\t' << r.av_count << '\t' << r.preimage_count << '\t'
       << (r.equal ? "yes" : "no") << '\n';
  if (report.passed())
    os << "PASS\n";
  else
    os << "FAIL " << to_string(report.counterexample->perm) << ' '
       << to_string(report.counterexample->reason) << '\n';
  return os.str();
}

inline nlohmann::json report_to_json(const VerificationReport &report) {
  nlohmann::json j;
  j["checked_n"] = report.checked_n();
  j["status"] = report.passed() ? "PASS" : "FAIL";
  j["counts"] = nlohmann::json::array();
  for (const auto &r : report.rows)
    j["counts"].push_back(
        {{"n", r.n}, {"av", r.av_count}, {"preimage", r.preimage_count}, {"equal", r.equal}});
  if (report.counterexample)
    j["counterexample"] = {{"perm", to_string(report.counterexample->perm)},
                           {"reason", std::string(to_string(report.counterexample->reason))}};
  else
    j["counterexample"] = nullptr;
  return j;
}

} // namespace permsort
