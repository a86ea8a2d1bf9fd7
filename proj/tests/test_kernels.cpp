#include <doctest.h>

#include "dyckbij/corpus.hpp"
#include "dyckbij/kernels.hpp"

using namespace dyckbij;
using namespace dyckbij::kernels;

namespace {

void check_agreement(const SweepResult& a, const SweepResult& b) {
    CHECK(a.checked == b.checked);
    CHECK(a.violations == b.violations);
    CHECK(a.counterexample == b.counterexample);
}

}  // namespace

TEST_CASE("count_avoiding kernels") {
    for (int n = 0; n <= 7; ++n) {
        const SweepResult s = count_avoiding_serial(n, 4);
        CHECK(s.checked == factorial(n));
        CHECK(s.violations == count_avoiding(n, 4));
        check_agreement(s, count_avoiding_parallel(n, 4));
        check_agreement(count_avoiding_serial(n, 3), count_avoiding_parallel(n, 3));
    }
}

TEST_CASE("property kernels find no violations and match their parallel twins") {
    struct Case {
        Kernel serial;
        Kernel parallel;
    };
    const Case cases[] = {
        {theorem6_violations_serial, theorem6_violations_parallel},
        {roundtrip_violations_serial, roundtrip_violations_parallel},
        {prop3_violations_serial, prop3_violations_parallel},
        {prop4_violations_serial, prop4_violations_parallel},
        {equiv_class_violations_serial, equiv_class_violations_parallel},
    };
    for (int n = 0; n <= 6; ++n) {
        for (const Case& c : cases) {
            const SweepResult s = c.serial(n);
            CHECK(s.violations == 0);
            CHECK(s.counterexample.empty());
            check_agreement(s, c.parallel(n));
        }
    }
}

TEST_CASE("pairwise kernels") {
    for (int n = 0; n <= 5; ++n) {
        const SweepResult s = prop5_violations_serial(n);
        CHECK(s.violations == 0);
        check_agreement(s, prop5_violations_parallel(n));
        check_agreement(pattern_oracle_mismatches_serial(n, 4),
                        pattern_oracle_mismatches_parallel(n, 4));
        CHECK(pattern_oracle_mismatches_serial(n, 3).violations == 0);
    }
}

TEST_CASE("run dispatch") {
    const SweepResult serial = run(theorem6_violations_serial, theorem6_violations_parallel, 6, 1);
    const SweepResult parallel = run(theorem6_violations_serial, theorem6_violations_parallel, 6, 4);
    check_agreement(serial, parallel);
    CHECK(serial.checked == factorial(6));
    CHECK(serial.violations == 0);
}
