#ifndef DYCKBIJ_CORPUS_HPP
#define DYCKBIJ_CORPUS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "dyckbij/dyckpath.hpp"
#include "dyckbij/permutation.hpp"

namespace dyckbij {

// Desk-scale guard for the exhaustive generators; callers may raise it
// explicitly (the CLI honors DYCKBIJ_MAX_N).
inline constexpr int kDefaultCap = 10;

std::uint64_t factorial(int n);
std::uint64_t catalan(int n);

// Lexicographic rank <-> permutation, via the factorial number system.
// Used to carve the rank space into chunks for the parallel kernels.
Permutation permutation_at_rank(int n, std::uint64_t rank);

// Enumeration in lexicographic order, each object exactly once. Throw when
// n exceeds the cap or is negative.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn,
                          int cap = kDefaultCap);

// Prefix-pruned backtracking: a prefix is extended only while its longest
// increasing subsequence stays below pattern_len (3 or 4).
void for_each_avoiding(int n, int pattern_len,
                       const std::function<void(const Permutation&)>& fn,
                       int cap = kDefaultCap);

void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& fn,
                        int cap = kDefaultCap);

std::vector<DyckPath> all_dyck_paths(int n, int cap = kDefaultCap);

// Counted by generation, never by closed form; catalan(n) is the only
// formula trusted, as a cross-check.
std::uint64_t count_avoiding(int n, int pattern_len, int cap = kDefaultCap);

}  // namespace dyckbij

#endif
