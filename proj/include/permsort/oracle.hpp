#pragma once

/**
 * @file oracle.hpp
 * @brief Exhaustive checks over S_n: avoidance classes, sorting preimages,
 *        West-k census and closed-form reference counts.
 *
 * Every function takes a `jobs` count. Work is split into lexicographic
 * rank blocks and merged in block order, so results never depend on it.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permsort/enumeration.hpp"
#include "permsort/errors.hpp"
#include "permsort/matching.hpp"
#include "permsort/pattern.hpp"
#include "permsort/permutation.hpp"

namespace permsort {

using BigInt = boost::multiprecision::cpp_int;

/// Av_n(basis), in lexicographic order.
inline std::vector<Permutation> av_set(int n, std::span<const Pattern> basis, int jobs = 1) {
  auto blocks = for_each_permutation_blocks<std::vector<Permutation>>(
      n, jobs, [&](std::vector<Permutation> &acc, const Permutation &pi) {
        if (avoids_all(pi, basis))
          acc.push_back(pi);
      });
  std::vector<Permutation> out;
  for (auto &b : blocks)
    out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  return out;
}

inline std::uint64_t av_count(int n, std::span<const Pattern> basis, int jobs = 1) {
  auto blocks = for_each_permutation_blocks<std::uint64_t>(
      n, jobs, [&](std::uint64_t &acc, const Permutation &pi) { acc += avoids_all(pi, basis); });
  std::uint64_t total = 0;
  for (auto b : blocks)
    total += b;
  return total;
}

/// { pi in S_n : sort_power(op, passes, pi) avoids every pattern in basis }.
inline std::vector<Permutation> preimage_av_set(int n, SortOp op, int passes,
                                                std::span<const Pattern> basis, int jobs = 1) {
  if (passes < 1)
    throw InvalidInput("number of passes must be at least 1");
  auto blocks = for_each_permutation_blocks<std::vector<Permutation>>(
      n, jobs, [&](std::vector<Permutation> &acc, const Permutation &pi) {
        if (avoids_all(sort_power(op, passes, pi), basis))
          acc.push_back(pi);
      });
  std::vector<Permutation> out;
  for (auto &b : blocks)
    out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  return out;
}

enum class FailureReason {
  in_av_but_bad_image,        // avoids the candidate basis, image contains p
  image_good_but_contains_basis,
};

inline std::string_view to_string(FailureReason r) {
  return r == FailureReason::in_av_but_bad_image ? "in-Av-but-bad-image"
                                                 : "image-good-but-contains-basis";
}

struct Counterexample {
  Permutation perm;
  FailureReason reason;
};

struct VerificationRow {
  int n = 0;
  std::uint64_t av_count = 0;       // |Av_n(candidate basis)|
  std::uint64_t preimage_count = 0; // |{pi : op^passes(pi) avoids p}|
  bool equal = true;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  std::optional<Counterexample> counterexample;

  bool passed() const noexcept { return !counterexample.has_value(); }
  std::vector<int> checked_n() const {
    std::vector<int> out;
    for (const auto &r : rows)
      out.push_back(r.n);
    return out;
  }
};

/// Compares Av_n(candidate_basis) against the preimage of Av_n(p_basis)
/// for n = 1..n_max. On failure the counterexample is the
/// lexicographically least mismatch at the least failing n.
inline VerificationReport verify_preimage(std::span<const Pattern> p_basis,
                                          std::span<const Pattern> candidate_basis, SortOp op,
                                          int passes, int n_max, int jobs = 1) {
  if (n_max < 1)
    throw InvalidBound("verification bound must be at least 1");
  if (passes < 1)
    throw InvalidInput("number of passes must be at least 1");

  struct Acc {
    std::uint64_t av = 0;
    std::uint64_t pre = 0;
    std::optional<Counterexample> first;
  };

  VerificationReport report;
  for (int n = 1; n <= n_max; ++n) {
    auto blocks = for_each_permutation_blocks<Acc>(n, jobs, [&](Acc &acc, const Permutation &pi) {
      const bool in_av = avoids_all(pi, candidate_basis);
      const bool image_ok = avoids_all(sort_power(op, passes, pi), p_basis);
      acc.av += in_av;
      acc.pre += image_ok;
      if (in_av != image_ok && !acc.first)
        acc.first = Counterexample{pi, in_av ? FailureReason::in_av_but_bad_image
                                             : FailureReason::image_good_but_contains_basis};
    });
    VerificationRow row{n, 0, 0, true};
    std::optional<Counterexample> first;
    for (auto &b : blocks) {
      row.av_count += b.av;
      row.preimage_count += b.pre;
      if (b.first && !first)
        first = b.first;
    }
    row.equal = !first.has_value();
    report.rows.push_back(row);
    if (first && !report.counterexample)
      report.counterexample = first;
  }
  return report;
}

/// |{ pi in S_n : op^passes(pi) = id }| by exhaustive enumeration.
inline std::uint64_t census(SortOp op, int passes, int n, int jobs = 1) {
  if (n < 1)
    throw InvalidInput("census length must be at least 1");
  if (passes < 1)
    throw InvalidInput("number of passes must be at least 1");
  auto blocks = for_each_permutation_blocks<std::uint64_t>(
      n, jobs, [&](std::uint64_t &acc, const Permutation &pi) {
        acc += sort_power(op, passes, pi).is_identity();
      });
  std::uint64_t total = 0;
  for (auto b : blocks)
    total += b;
  return total;
}

enum class ReferenceClass { catalan, west2 };

inline ReferenceClass parse_reference_class(std::string_view name) {
  if (name == "catalan")
    return ReferenceClass::catalan;
  if (name == "west2")
    return ReferenceClass::west2;
  throw InvalidInput("unknown reference class '" + std::string(name) + "'");
}

inline BigInt big_factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

/// Closed forms in exact integer arithmetic:
/// catalan(n) = (2n)! / (n! (n+1)!), west2(n) = 2 (3n)! / ((n+1)! (2n+1)!).
inline BigInt reference_count(ReferenceClass cls, int n) {
  if (n < 1)
    throw InvalidInput("reference counts are defined for n >= 1");
  switch (cls) {
  case ReferenceClass::catalan:
    return big_factorial(2 * n) / (big_factorial(n) * big_factorial(n + 1));
  case ReferenceClass::west2:
    return 2 * big_factorial(3 * n) / (big_factorial(n + 1) * big_factorial(2 * n + 1));
  }
  throw InvalidInput("unknown reference class");
}

} // namespace permsort
