#include "dyckbij/verify.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "dyckbij/bijection.hpp"
#include "dyckbij/corpus.hpp"
#include "dyckbij/involution.hpp"
#include "dyckbij/kernels.hpp"
#include "dyckbij/permutation.hpp"
#include "dyckbij/poset.hpp"

namespace dyckbij::verify {

namespace {

using kernels::SweepResult;

CheckResult from_sweep(const std::string& name, const SweepResult& res) {
    CheckResult out{name, res.violations == 0, {}};
    if (out.pass)
        out.detail = std::to_string(res.checked) + " objects checked";
    else
        out.detail = std::to_string(res.violations) +
                     " violations, first at: " + res.counterexample;
    return out;
}

CheckResult check_counts(int n_max, int jobs) {
    for (int n = 1; n <= n_max; ++n) {
        const std::uint64_t c123 = count_avoiding(n, 3, n_max);
        const std::uint64_t paths = all_dyck_paths(n, n_max).size();
        if (c123 != catalan(n) || paths != catalan(n))
            return {"counts", false,
                    "n=" + std::to_string(n) + ": |S_n(123)|=" + std::to_string(c123) +
                        ", #paths=" + std::to_string(paths) +
                        ", catalan=" + std::to_string(catalan(n))};
        const std::uint64_t c1234 = count_avoiding(n, 4, n_max);
        const SweepResult lis = jobs <= 1 ? kernels::count_avoiding_serial(n, 4)
                                          : kernels::count_avoiding_parallel(n, 4);
        if (c1234 != lis.violations)
            return {"counts", false,
                    "n=" + std::to_string(n) + ": generator " + std::to_string(c1234) +
                        " vs LIS sweep " + std::to_string(lis.violations)};
    }
    return {"counts", true, "sizes 1.." + std::to_string(n_max)};
}

CheckResult check_involution(int n_max) {
    std::uint64_t checked = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (const DyckPath& p : all_dyck_paths(n, n_max)) {
            ++checked;
            if (lprime(lprime(p)) != p)
                return {"involution", false, "L' not involutive at " + p.steps()};
            if (kreweras(kreweras(p)) != p)
                return {"involution", false, "L not involutive at " + p.steps()};
            if (lprime(p).semilength() != n ||
                irreducible_components(lprime(p)).size() != irreducible_components(p).size())
                return {"involution", false, "L' changed shape at " + p.steps()};
            if (lprime_geometric(p) != lprime(p))
                return {"involution", false, "geometric L' disagrees at " + p.steps()};
            if (kreweras_geometric(p) != kreweras(p))
                return {"involution", false, "geometric L disagrees at " + p.steps()};
        }
    }
    return {"involution", true, std::to_string(checked) + " paths checked"};
}

CheckResult check_theorem7(int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        std::set<std::pair<std::string, std::string>> image;
        std::uint64_t avoiders = 0;
        bool dup = false;
        std::string dup_at;
        for_each_avoiding(n, 4, [&](const Permutation& alpha) {
            ++avoiders;
            const PathPair pair = nu(alpha);
            if (!image.emplace(pair.first.steps(), pair.second.steps()).second) {
                dup = true;
                dup_at = alpha.str();
            }
        }, n_max);
        if (dup) return {"theorem7", false, "nu not injective at " + dup_at};
        if (image.size() != avoiders)
            return {"theorem7", false, "image size mismatch at n=" + std::to_string(n)};
        std::uint64_t admissible = 0;
        const std::vector<DyckPath> paths = all_dyck_paths(n, n_max);
        for (const DyckPath& p : paths) {
            for (const DyckPath& q : paths) {
                const bool adm = is_admissible({p, q});
                const bool in_image = image.count({p.steps(), q.steps()}) > 0;
                if (adm != in_image)
                    return {"theorem7", false,
                            std::string(adm ? "admissible outside image" : "image not admissible") +
                                ": (" + p.steps() + ", " + q.steps() + ")"};
                admissible += adm;
            }
        }
        if (admissible != avoiders)
            return {"theorem7", false, "count mismatch at n=" + std::to_string(n)};
    }
    return {"theorem7", true, "image equals admissible set, sizes 0.." + std::to_string(n_max)};
}

CheckResult check_poset_oracle(int n_max) {
    std::uint64_t pairs = 0;
    for (int n = 0; n <= n_max; ++n) {
        const std::vector<DyckPath> paths = all_dyck_paths(n, n_max);
        // Direct criterion vs literal closure, plus partial-order sanity.
        for (const DyckPath& p : paths) {
            for (const DyckPath& q : paths) {
                ++pairs;
                if (leq(p, q) != leq_oracle(p, q))
                    return {"poset-oracle", false,
                            "direct/closure disagree: (" + p.steps() + ", " + q.steps() + ")"};
                if (p != q && leq(p, q) && leq(q, p))
                    return {"poset-oracle", false,
                            "antisymmetry broken: (" + p.steps() + ", " + q.steps() + ")"};
            }
            if (!leq(p, p)) return {"poset-oracle", false, "not reflexive: " + p.steps()};
        }
        for (const DyckPath& p : paths)
            for (const DyckPath& q : paths)
                for (const DyckPath& r : paths)
                    if (leq(p, q) && leq(q, r) && !leq(p, r))
                        return {"poset-oracle", false,
                                "transitivity broken: (" + p.steps() + ", " + q.steps() + ", " +
                                    r.steps() + ")"};
    }
    return {"poset-oracle", true, std::to_string(pairs) + " ordered pairs checked"};
}

CheckResult check_bijectivity(int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        std::set<std::string> lam, mu;
        std::uint64_t avoiders = 0;
        for_each_avoiding(n, 3, [&](const Permutation& s) {
            ++avoiders;
            lam.insert(lambda_map(s).steps());
            mu.insert(mu_map(s).steps());
        }, n_max);
        if (lam.size() != avoiders || mu.size() != avoiders || avoiders != catalan(n))
            return {"bijectivity", false, "lambda/mu not bijective at n=" + std::to_string(n)};
        bool bad = false;
        for_each_avoiding(n, 3, [&](const Permutation& s) {
            if (lambda_inv_123(lambda_map(s)) != s || mu_inv_123(mu_map(s)) != s) bad = true;
        }, n_max);
        if (bad) return {"bijectivity", false, "inverse round trip failed at n=" + std::to_string(n)};
    }
    return {"bijectivity", true, "sizes 0.." + std::to_string(n_max)};
}

CheckResult sweep_check(const std::string& name, kernels::Kernel serial,
                        kernels::Kernel parallel, int n_max, int jobs) {
    std::uint64_t checked = 0;
    for (int n = 1; n <= n_max; ++n) {
        const SweepResult res = kernels::run(serial, parallel, n, jobs);
        if (res.violations != 0) return from_sweep(name, res);
        checked += res.checked;
    }
    return {name, true, std::to_string(checked) + " permutations checked"};
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, int n_max, int jobs, int cap) {
    if (n_max < 1 || n_max > cap)
        throw std::invalid_argument("verify: n_max must lie in [1, " + std::to_string(cap) + "]");
    const std::set<std::string> known{"all",       "counts",  "theorem6",     "theorem7",
                                      "roundtrip", "involution", "poset-oracle", "prop3",
                                      "prop4",     "prop5",   "equiv",        "bijectivity"};
    if (!known.count(suite)) throw std::invalid_argument("verify: unknown suite '" + suite + "'");
    auto want = [&suite](const char* name) { return suite == "all" || suite == name; };

    std::vector<CheckResult> out;
    if (want("counts")) out.push_back(check_counts(n_max, jobs));
    if (want("theorem6"))
        out.push_back(sweep_check("theorem6", kernels::theorem6_violations_serial,
                                  kernels::theorem6_violations_parallel, n_max, jobs));
    if (want("theorem7")) out.push_back(check_theorem7(n_max));
    if (want("roundtrip"))
        out.push_back(sweep_check("roundtrip", kernels::roundtrip_violations_serial,
                                  kernels::roundtrip_violations_parallel, n_max, jobs));
    if (want("involution")) out.push_back(check_involution(n_max));
    if (want("poset-oracle")) out.push_back(check_poset_oracle(n_max));
    if (want("prop3"))
        out.push_back(sweep_check("prop3", kernels::prop3_violations_serial,
                                  kernels::prop3_violations_parallel, n_max, jobs));
    if (want("prop4"))
        out.push_back(sweep_check("prop4", kernels::prop4_violations_serial,
                                  kernels::prop4_violations_parallel, n_max, jobs));
    if (want("prop5"))
        out.push_back(sweep_check("prop5", kernels::prop5_violations_serial,
                                  kernels::prop5_violations_parallel, n_max, jobs));
    if (want("equiv"))
        out.push_back(sweep_check("equiv", kernels::equiv_class_violations_serial,
                                  kernels::equiv_class_violations_parallel, n_max, jobs));
    if (want("bijectivity")) out.push_back(check_bijectivity(n_max));
    return out;
}

}  // namespace dyckbij::verify
