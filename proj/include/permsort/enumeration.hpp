#pragma once

/**
 * @file enumeration.hpp
 * @brief Lexicographic enumeration of S_n, optionally split into contiguous
 *        rank blocks processed by separate threads.
 *
 * Each block owns an accumulator; results come back in block order so a
 * caller that merges them left to right sees exactly what a single-threaded
 * run would produce.
 */

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numeric>
#include <thread>
#include <vector>

#include "permsort/errors.hpp"
#include "permsort/permutation.hpp"

namespace permsort {

inline std::uint64_t factorial(int n) {
  if (n < 0 || n > 20)
    throw InvalidBound("factorial argument outside 0..20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

/// The permutation of rank `rank` (0-based) in lexicographic order of S_n.
inline Permutation unrank_lex(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int remaining = n; remaining > 0; --remaining) {
    const std::uint64_t f = factorial(remaining - 1);
    const std::size_t digit = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(out), Permutation::Unchecked{});
}

/// Visits every permutation of length n in lexicographic order, split into
/// at most `jobs` contiguous blocks. `visit(acc, pi)` is called with the
/// block's own accumulator. Returns the accumulators in block order.
template <class Acc, class Visit>
std::vector<Acc> for_each_permutation_blocks(int n, int jobs, Visit visit) {
  if (n < 0)
    throw InvalidBound("negative permutation length");
  const std::uint64_t total = factorial(n);
  const std::uint64_t blocks =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), total));
  std::vector<Acc> accs(static_cast<std::size_t>(blocks));

  auto run_block = [&](std::size_t b) {
    using wide = unsigned __int128;
    const auto first = static_cast<std::uint64_t>(wide{total} * b / blocks);
    const auto last = static_cast<std::uint64_t>(wide{total} * (b + 1) / blocks);
    if (first == last)
      return;
    std::vector<int> cur = unrank_lex(n, first).values();
    for (std::uint64_t r = first; r < last; ++r) {
      visit(accs[b], Permutation(cur, Permutation::Unchecked{}));
      std::next_permutation(cur.begin(), cur.end());
    }
  };

  if (blocks == 1) {
    run_block(0);
    return accs;
  }
  std::vector<std::exception_ptr> errors(accs.size());
  {
    std::vector<std::jthread> workers;
    workers.reserve(accs.size());
    for (std::size_t b = 0; b < accs.size(); ++b)
      workers.emplace_back([&, b] {
        try {
          run_block(b);
        } catch (...) {
          errors[b] = std::current_exception();
        }
      });
  }
  for (const auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  return accs;
}

} // namespace permsort
