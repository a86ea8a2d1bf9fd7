#ifndef DYCKBIJ_KERNELS_HPP
#define DYCKBIJ_KERNELS_HPP

#include <cstdint>
#include <string>

namespace dyckbij::kernels {

// Exhaustive sweeps over the rank space of S_n. Each kernel exists twice:
// a serial reference and an OpenMP version that carves [0, n!) into
// contiguous chunks, unranks the chunk head and walks the rest with
// next_permutation. The pair is compared in the test suite and in the
// benchmark target; run() dispatches on jobs.

struct SweepResult {
    std::uint64_t checked = 0;     // objects inspected
    std::uint64_t violations = 0;  // property failures
    std::string counterexample;    // first failing object, if any
};

// |{sigma in S_n : LIS(sigma) < pattern_len}|.
SweepResult count_avoiding_serial(int n, int pattern_len);
SweepResult count_avoiding_parallel(int n, int pattern_len);

// Disagreements between the LIS fast path and the generic
// contains_pattern oracle on the increasing pattern of length pattern_len.
SweepResult pattern_oracle_mismatches_serial(int n, int pattern_len);
SweepResult pattern_oracle_mismatches_parallel(int n, int pattern_len);

// Violations of mu = L' o lambda over S_n(123).
SweepResult theorem6_violations_serial(int n);
SweepResult theorem6_violations_parallel(int n);

// Violations of nu_inv(nu(alpha)) = alpha, and of agreement between the
// componentwise and global merges, over S_n(1234).
SweepResult roundtrip_violations_serial(int n);
SweepResult roundtrip_violations_parallel(int n);

// Violations of the reverse-complement and inversion symmetries of nu over
// all of S_n.
SweepResult prop3_violations_serial(int n);
SweepResult prop3_violations_parallel(int n);

// Violations of the concatenation rule over the right-connected split
// (lambda componentwise in order, mu componentwise reversed), over S_n.
SweepResult prop4_violations_serial(int n);
SweepResult prop4_violations_parallel(int n);

// Violations of the intrinsic-profile orders matching the path-poset
// comparison, over all ordered pairs in S_n x S_n (parallel over the first
// operand).
SweepResult prop5_violations_serial(int n);
SweepResult prop5_violations_parallel(int n);

// Violations of the equivalence-class structure: the canonical
// representative is an equivalent, idempotent 1234-avoider, and class
// counting matches the avoider count.
SweepResult equiv_class_violations_serial(int n);
SweepResult equiv_class_violations_parallel(int n);

using Kernel = SweepResult (*)(int);

// jobs <= 1 selects the serial reference; otherwise the OpenMP variant runs
// under the requested thread count.
SweepResult run(Kernel serial, Kernel parallel, int n, int jobs);

}  // namespace dyckbij::kernels

#endif
