#ifndef DYCKBIJ_VERIFY_HPP
#define DYCKBIJ_VERIFY_HPP

#include <string>
#include <vector>

namespace dyckbij::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counts on success, counterexample on failure
};

// Suite selectors: "all", "counts", "theorem6", "theorem7", "roundtrip",
// "involution", "poset-oracle", "prop3", "prop4", "prop5", "equiv",
// "bijectivity". Sizes run from 1 up to n_max. Throws std::invalid_argument
// on an unknown selector or n_max outside [1, cap].
std::vector<CheckResult> run_suite(const std::string& suite, int n_max, int jobs,
                                   int cap);

}  // namespace dyckbij::verify

#endif
