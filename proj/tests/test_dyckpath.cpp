#include <doctest.h>

#include <stdexcept>

#include "dyckbij/corpus.hpp"
#include "dyckbij/dyckpath.hpp"

using namespace dyckbij;

TEST_CASE("step validation") {
    CHECK(DyckPath::from_steps("UUDD").semilength() == 2);
    CHECK(DyckPath::from_steps("").semilength() == 0);
    CHECK_THROWS_AS(DyckPath::from_steps("UDD"), std::invalid_argument);   // unbalanced
    CHECK_THROWS_AS(DyckPath::from_steps("DU"), std::invalid_argument);    // below axis
    CHECK_THROWS_AS(DyckPath::from_steps("UX"), std::invalid_argument);
}

TEST_CASE("to_code") {
    // Ascent runs (3,3,1), descent runs (2,1,4): cumulative sums, final n dropped.
    const DyckPath fig1 = DyckPath::from_steps("UUUDDUUUDUDDDD");
    CHECK(to_code(fig1) == AscentDescentCode{7, {3, 6}, {2, 3}});
    CHECK(to_code(DyckPath::pyramid(4)) == AscentDescentCode{4, {}, {}});
    CHECK(to_code(DyckPath::from_steps("UUDUUDDD")) == AscentDescentCode{4, {2}, {1}});
}

TEST_CASE("from_code") {
    CHECK(from_code({7, {2, 6}, {1, 3}}) == DyckPath::from_steps("UUDUUUUDDUDDDD"));
    CHECK(from_code({3, {}, {}}) == DyckPath::from_steps("UUUDDD"));
    CHECK_THROWS_WITH_AS(static_cast<void>(from_code({5, {2, 3}, {3, 4}})), "code: A_1 < D_1",
                         std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(from_code({5, {3, 2}, {1, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(from_code({5, {1, 2}, {2, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(from_code({5, {1, 5}, {1, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(from_code({5, {1, 2}, {1}})), std::invalid_argument);
    // k = 1 (pyramid) and k = n (zigzag) are both valid codes.
    CHECK(from_code({1, {}, {}}) == DyckPath::from_steps("UD"));
    CHECK(from_code({3, {1, 2}, {1, 2}}) == DyckPath::zigzag(3));
}

TEST_CASE("code literals") {
    CHECK(AscentDescentCode::parse("n=7;A=2,6;D=1,3") == AscentDescentCode{7, {2, 6}, {1, 3}});
    CHECK(AscentDescentCode::parse("n=3;A=;D=") == AscentDescentCode{3, {}, {}});
    CHECK(AscentDescentCode{7, {2, 6}, {1, 3}}.str() == "n=7;A=2,6;D=1,3");
    CHECK(DyckPath::parse("n=3;A=;D=") == DyckPath::pyramid(3));
    CHECK(DyckPath::parse("UUDD") == DyckPath::pyramid(2));
    CHECK_THROWS_AS(DyckPath::parse("n=3;A=1"), std::invalid_argument);
}

TEST_CASE("code round trip, exhaustive") {
    for (int n = 0; n <= 8; ++n) {
        std::uint64_t count = 0;
        for_each_dyck_path(n, [&](const DyckPath& p) {
            ++count;
            const AscentDescentCode code = to_code(p);
            CHECK(code.n == n);
            CHECK(from_code(code) == p);
            for (size_t i = 0; i < code.ascents.size(); ++i)
                CHECK(code.ascents[i] >= code.descents[i]);
        });
        CHECK(count == catalan(n));
    }
}

TEST_CASE("returns and irreducibility") {
    CHECK(returns(DyckPath::from_steps("UUUDDDUD")) == std::vector<int>{6, 8});
    const auto comps = irreducible_components(DyckPath::from_steps("UUUDDDUD"));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == DyckPath::pyramid(3));
    CHECK(comps[1] == DyckPath::pyramid(1));
    CHECK(is_irreducible(DyckPath::from_steps("UUUDDUUUDDDD")));
    CHECK(is_irreducible(DyckPath::from_steps("UD")));
    // is_irreducible iff A_i > D_i throughout, iff exactly one return.
    for_each_dyck_path(7, [](const DyckPath& p) {
        const AscentDescentCode code = to_code(p);
        bool strict = true;
        for (size_t i = 0; i < code.ascents.size(); ++i)
            strict = strict && code.ascents[i] > code.descents[i];
        CHECK(is_irreducible(p) == strict);
        CHECK(is_irreducible(p) == (returns(p).size() == 1));
        DyckPath glued;
        for (const DyckPath& c : irreducible_components(p)) {
            CHECK(is_irreducible(c));
            glued = concat(glued, c);
        }
        CHECK(glued == p);
    });
}

TEST_CASE("reverse") {
    CHECK(reverse(DyckPath::from_steps("UUDDUD")) == DyckPath::from_steps("UDUUDD"));
    CHECK(reverse(DyckPath::pyramid(5)) == DyckPath::pyramid(5));
    for_each_dyck_path(6, [](const DyckPath& p) { CHECK(reverse(reverse(p)) == p); });
}

TEST_CASE("concat") {
    CHECK(concat(DyckPath::pyramid(1), DyckPath::pyramid(2)) == DyckPath::from_steps("UDUUDD"));
    CHECK(concat(DyckPath::pyramid(3), DyckPath()) == DyckPath::pyramid(3));
}

TEST_CASE("render") {
    CHECK(render_ascii(DyckPath::pyramid(2)) == " /\\\n/  \\\n");
    CHECK(render_ascii(DyckPath::zigzag(2)) == "/\\/\\\n");
    CHECK(render_ascii(DyckPath()) == "");
}
