#pragma once

// Command-line front end. `run_cli` is kept separate from main() so the
// test suite can drive it in-process.
//
// Exit codes: 0 success / PASS, 1 verification FAIL, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "permsort/permsort.hpp"

namespace permsort::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool file_exists(const std::string &path) {
  std::ifstream in(path);
  return static_cast<bool>(in);
}

/// A basis argument: a file, or an inline set `{p1; p2; ...}`.
inline std::vector<Pattern> load_basis(const std::string &arg) {
  if (file_exists(arg))
    return parse_basis(read_file(arg));
  std::string_view s = arg;
  while (!s.empty() && s.front() == ' ')
    s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ')
    s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
    std::string_view inner = s.substr(1, s.size() - 2);
    std::size_t lead = inner.find_first_not_of(' ');
    if (lead != std::string_view::npos && inner[lead] == '"')
      return {parse_pattern(s, PatternFormat::json)};
    std::vector<Pattern> out;
    std::size_t pos = 0;
    while (pos <= inner.size()) {
      std::size_t end = inner.find(';', pos);
      if (end == std::string_view::npos)
        end = inner.size();
      std::string_view item = inner.substr(pos, end - pos);
      if (item.find_first_not_of(' ') != std::string_view::npos)
        out.push_back(parse_pattern(item));
      pos = end + 1;
    }
    return out;
  }
  throw InvalidInput("basis '" + arg + "' is neither a readable file nor an inline set {p; q; ...}");
}

inline std::string join_positions(const std::vector<int> &alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(alpha[i]);
  }
  return s;
}

} // namespace detail

inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Permutation patterns, sorting operators and their preimages"};
  app.require_subcommand(1);

  // sort
  auto *sort_cmd = app.add_subcommand("sort", "Apply a sorting operator");
  std::string sort_op = "stack";
  int sort_passes = 1;
  std::string sort_perm;
  sort_cmd->add_option("--op", sort_op, "stack or bubble")->check(CLI::IsMember({"stack", "bubble"}));
  sort_cmd->add_option("--passes", sort_passes, "number of passes")->check(CLI::NonNegativeNumber);
  sort_cmd->add_option("PERM", sort_perm, "permutation")->required();

  // match
  auto *match_cmd = app.add_subcommand("match", "Find occurrences of a pattern");
  std::string match_perm, match_file, match_inline;
  bool match_count = false, match_list = false;
  match_cmd->add_option("PERM", match_perm)->required();
  auto *mf = match_cmd->add_option("--pattern", match_file, "pattern file");
  auto *mi = match_cmd->add_option("--inline", match_inline, "pattern text");
  mf->excludes(mi);
  auto *mc = match_cmd->add_flag("--count", match_count, "print the number of occurrences");
  auto *ml = match_cmd->add_flag("--list", match_list, "print the column positions of each occurrence");
  mc->excludes(ml);

  // preimage
  auto *pre_cmd = app.add_subcommand("preimage", "Stack-sort preimage basis of Av(p)");
  std::string pre_pattern;
  bool pre_expand = false, pre_rejected = false, pre_json = false;
  std::optional<int> pre_prune;
  int pre_jobs = 1;
  pre_cmd->add_option("PATTERN", pre_pattern, "classical pattern")->required();
  pre_cmd->add_flag("--expand", pre_expand, "expand marks into mesh patterns");
  pre_cmd->add_option("--prune", pre_prune, "drop patterns implied by the rest, checked up to length N");
  pre_cmd->add_flag("--show-rejected", pre_rejected, "list candidates that cannot be marked");
  pre_cmd->add_flag("--json", pre_json, "print a JSON array");
  pre_cmd->add_option("--jobs", pre_jobs)->check(CLI::PositiveNumber);

  // verify
  auto *ver_cmd = app.add_subcommand("verify", "Check S^-k(Av(p)) = Av(basis) exhaustively");
  std::string ver_builtin, ver_pattern, ver_basis;
  std::optional<std::string> ver_op;
  std::optional<int> ver_passes;
  int ver_upto = 0, ver_jobs = 1;
  bool ver_json = false;
  auto *vb = ver_cmd->add_option("--builtin", ver_builtin, "fixture name");
  auto *vp = ver_cmd->add_option("--pattern", ver_pattern, "target pattern p");
  auto *vB = ver_cmd->add_option("--basis", ver_basis, "basis file or inline {p; q}");
  vb->excludes(vp)->excludes(vB);
  vp->needs(vB);
  vB->needs(vp);
  ver_cmd->add_option("--op", ver_op)->check(CLI::IsMember({"stack", "bubble"}));
  ver_cmd->add_option("--passes", ver_passes)->check(CLI::PositiveNumber);
  ver_cmd->add_option("--upto", ver_upto)->required()->check(CLI::PositiveNumber);
  ver_cmd->add_option("--jobs", ver_jobs)->check(CLI::PositiveNumber);
  ver_cmd->add_flag("--json", ver_json, "print the JSON report");

  // census
  auto *cen_cmd = app.add_subcommand("census", "Count permutations sorted by k passes");
  std::string cen_op = "stack";
  int cen_passes = 1, cen_upto = 0, cen_jobs = 1;
  cen_cmd->add_option("--op", cen_op)->check(CLI::IsMember({"stack", "bubble"}));
  cen_cmd->add_option("--passes", cen_passes)->check(CLI::PositiveNumber);
  cen_cmd->add_option("--upto", cen_upto)->required()->check(CLI::PositiveNumber);
  cen_cmd->add_option("--jobs", cen_jobs)->check(CLI::PositiveNumber);

  // builtin
  auto *bi_cmd = app.add_subcommand("builtin", "Print a built-in basis");
  std::string bi_name;
  bool bi_json = false;
  bi_cmd->add_option("NAME", bi_name)->required();
  bi_cmd->add_flag("--json", bi_json);

  // render
  auto *ren_cmd = app.add_subcommand("render", "Draw a pattern as a text grid");
  std::string ren_pattern, ren_file;
  bool ren_unicode = false;
  auto *rp = ren_cmd->add_option("PATTERN", ren_pattern);
  auto *rf = ren_cmd->add_option("--file", ren_file);
  rp->excludes(rf);
  ren_cmd->add_flag("--unicode", ren_unicode, "box-drawing glyphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  std::string buffer;
  int code = exit_ok;
  try {
    if (*sort_cmd) {
      const Permutation pi = parse_permutation(sort_perm);
      buffer = to_string(sort_power(parse_sort_op(sort_op), sort_passes, pi)) + "\n";
    } else if (*match_cmd) {
      if (match_file.empty() && match_inline.empty())
        throw InvalidInput("match needs --pattern FILE or --inline TEXT");
      const Permutation pi = parse_permutation(match_perm);
      const Pattern pat =
          parse_pattern(match_file.empty() ? match_inline : detail::read_file(match_file));
      const auto occs = occurrences(pi, pat);
      if (match_list) {
        for (const auto &o : occs)
          buffer += detail::join_positions(o.alpha) + "\n";
      } else {
        buffer = std::to_string(occs.size()) + "\n";
      }
    } else if (*pre_cmd) {
      const Pattern p = parse_pattern(pre_pattern);
      if (p.kind() != PatternKind::classical)
        throw InvalidInput("preimage needs a classical pattern");
      MarkedBasis basis;
      for (const auto &cand : stack_preimage_candidates(p.perm())) {
        if (cand.result)
          basis.patterns.push_back(cand.result->to_pattern());
        else if (pre_rejected)
          buffer += "# rejected: " + to_string(cand.lambda) + "\n";
      }
      basis.patterns = canonical_set(std::move(basis.patterns));
      if (pre_expand)
        basis = expand_basis(basis);
      if (pre_prune)
        basis = prune_basis(basis, *pre_prune, pre_jobs);
      buffer += format_basis(basis, pre_json);
    } else if (*ver_cmd) {
      std::vector<Pattern> p_basis, candidate;
      SortOp op = SortOp::stack;
      int passes = 1;
      if (!ver_builtin.empty()) {
        const FixtureName name = parse_fixture_name(ver_builtin);
        const FixtureTarget target = fixture_target(name);
        p_basis = {Pattern::classical(target.target)};
        candidate = builtin_basis(name);
        op = target.op;
        passes = target.passes;
      } else if (!ver_pattern.empty()) {
        p_basis = {parse_pattern(ver_pattern)};
        candidate = detail::load_basis(ver_basis);
      } else {
        throw InvalidInput("verify needs --builtin NAME or --pattern P --basis FILE");
      }
      if (ver_op)
        op = parse_sort_op(*ver_op);
      if (ver_passes)
        passes = *ver_passes;
      const auto report = verify_preimage(p_basis, candidate, op, passes, ver_upto, ver_jobs);
      buffer = ver_json ? report_to_json(report).dump(2) + "\n" : report_to_text(report);
      code = report.passed() ? exit_ok : exit_fail;
    } else if (*cen_cmd) {
      const SortOp op = parse_sort_op(cen_op);
      buffer = "n\tcount\n";
      for (int n = 1; n <= cen_upto; ++n)
        buffer += std::to_string(n) + "\t" + std::to_string(census(op, cen_passes, n, cen_jobs)) + "\n";
    } else if (*bi_cmd) {
      buffer = format_basis(MarkedBasis{builtin_basis(parse_fixture_name(bi_name)), std::nullopt},
                            bi_json);
    } else if (*ren_cmd) {
      if (ren_pattern.empty() && ren_file.empty())
        throw InvalidInput("render needs PATTERN or --file FILE");
      const Pattern pat = parse_pattern(ren_file.empty() ? ren_pattern : detail::read_file(ren_file));
      buffer = render_grid(pat, ren_unicode ? RenderStyle::box_drawing : RenderStyle::ascii);
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  out << buffer;
  return code;
}

} // namespace permsort::cli
