#include "dyckbij/kernels.hpp"

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dyckbij/bijection.hpp"
#include "dyckbij/corpus.hpp"
#include "dyckbij/involution.hpp"
#include "dyckbij/permutation.hpp"
#include "dyckbij/poset.hpp"

namespace dyckbij::kernels {

namespace {

// Per-permutation predicate sweeps. checker returns true when the property
// holds (or does not apply) for the given permutation.
template <typename Check>
SweepResult sweep_serial(int n, Check check) {
    SweepResult res;
    std::vector<int> vals(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = i + 1;
    do {
        const Permutation sigma(vals);
        ++res.checked;
        if (!check(sigma)) {
            if (res.violations == 0) res.counterexample = sigma.str();
            ++res.violations;
        }
    } while (std::next_permutation(vals.begin(), vals.end()));
    return res;
}

template <typename Check>
SweepResult sweep_parallel(int n, Check check) {
    const std::uint64_t total = factorial(n);
    SweepResult res;
    res.checked = total;
#pragma omp parallel
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
        const int nthreads = omp_get_num_threads();
#else
        const int tid = 0;
        const int nthreads = 1;
#endif
        const std::uint64_t lo = total * static_cast<std::uint64_t>(tid) /
                                 static_cast<std::uint64_t>(nthreads);
        const std::uint64_t hi = total * (static_cast<std::uint64_t>(tid) + 1) /
                                 static_cast<std::uint64_t>(nthreads);
        if (lo < hi) {
            std::vector<int> vals = permutation_at_rank(n, lo).values();
            for (std::uint64_t r = lo; r < hi; ++r) {
                const Permutation sigma(vals);
                if (!check(sigma)) {
#pragma omp critical
                    {
                        if (res.violations == 0 || sigma.str() < res.counterexample)
                            res.counterexample = sigma.str();
                        ++res.violations;
                    }
                }
                std::next_permutation(vals.begin(), vals.end());
            }
        }
    }
    return res;
}

bool theorem6_check(const Permutation& sigma) {
    if (!avoids_123(sigma)) return true;
    return mu_map(sigma) == lprime(lambda_map(sigma));
}

bool roundtrip_check(const Permutation& sigma) {
    if (!avoids_1234(sigma)) return true;
    const PathPair pair = nu(sigma);
    try {
        return nu_inv(pair) == sigma && nu_inv_global(pair) == sigma;
    } catch (const std::exception&) {
        return false;
    }
}

bool prop3_check(const Permutation& sigma) {
    return rc_symmetry_holds(sigma) && inverse_symmetry_holds(sigma);
}

bool prop4_check(const Permutation& sigma) {
    const std::vector<Permutation> comps = right_connected_components(sigma);
    DyckPath lam, mu;
    for (const Permutation& c : comps) lam = concat(lam, lambda_map(c));
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) mu = concat(mu, mu_map(*it));
    return lam == lambda_map(sigma) && mu == mu_map(sigma);
}

bool equiv_class_check(const Permutation& sigma) {
    const Permutation canon = canonical_representative(sigma);
    return avoids_1234(canon) && equivalent(sigma, canon) &&
           canonical_representative(canon) == canon &&
           (!avoids_1234(sigma) || canon == sigma);
}

// Pairwise sweep for the intrinsic orders: for a fixed sigma, compare
// against every tau.
bool prop5_check(const Permutation& sigma) {
    const int n = sigma.size();
    const DyckPath lam_s = lambda_map(sigma);
    const DyckPath mu_s = mu_map(sigma);
    bool ok = true;
    for_each_permutation(n, [&](const Permutation& tau) {
        if (!ok) return;
        if (leq_lambda(sigma, tau) != leq(lam_s, lambda_map(tau))) ok = false;
        if (leq_mu(sigma, tau) != leq(mu_s, mu_map(tau))) ok = false;
    }, n);
    return ok;
}

}  // namespace

// For the counting kernels "violations" holds the avoider count.
SweepResult count_avoiding_serial(int n, int pattern_len) {
    SweepResult res = sweep_serial(n, [&](const Permutation& s) {
        return lis_length(s) >= pattern_len;
    });
    res.counterexample.clear();
    return res;
}

SweepResult count_avoiding_parallel(int n, int pattern_len) {
    SweepResult res = sweep_parallel(n, [&](const Permutation& s) {
        return lis_length(s) >= pattern_len;
    });
    res.counterexample.clear();
    return res;
}

SweepResult pattern_oracle_mismatches_serial(int n, int pattern_len) {
    const Permutation pattern = Permutation::identity(pattern_len);
    return sweep_serial(n, [&](const Permutation& s) {
        return (lis_length(s) < pattern_len) == !contains_pattern(s, pattern);
    });
}

SweepResult pattern_oracle_mismatches_parallel(int n, int pattern_len) {
    const Permutation pattern = Permutation::identity(pattern_len);
    return sweep_parallel(n, [&](const Permutation& s) {
        return (lis_length(s) < pattern_len) == !contains_pattern(s, pattern);
    });
}

SweepResult theorem6_violations_serial(int n) { return sweep_serial(n, theorem6_check); }
SweepResult theorem6_violations_parallel(int n) { return sweep_parallel(n, theorem6_check); }

SweepResult roundtrip_violations_serial(int n) { return sweep_serial(n, roundtrip_check); }
SweepResult roundtrip_violations_parallel(int n) { return sweep_parallel(n, roundtrip_check); }

SweepResult prop3_violations_serial(int n) { return sweep_serial(n, prop3_check); }
SweepResult prop3_violations_parallel(int n) { return sweep_parallel(n, prop3_check); }

SweepResult prop4_violations_serial(int n) { return sweep_serial(n, prop4_check); }
SweepResult prop4_violations_parallel(int n) { return sweep_parallel(n, prop4_check); }

SweepResult prop5_violations_serial(int n) { return sweep_serial(n, prop5_check); }
SweepResult prop5_violations_parallel(int n) { return sweep_parallel(n, prop5_check); }

SweepResult equiv_class_violations_serial(int n) { return sweep_serial(n, equiv_class_check); }
SweepResult equiv_class_violations_parallel(int n) { return sweep_parallel(n, equiv_class_check); }

SweepResult run(Kernel serial, Kernel parallel, int n, int jobs) {
    if (jobs <= 1) return serial(n);
#ifdef _OPENMP
    const int prev = omp_get_max_threads();
    omp_set_num_threads(jobs);
    SweepResult res = parallel(n);
    omp_set_num_threads(prev);
    return res;
#else
    return parallel(n);
#endif
}

}  // namespace dyckbij::kernels
