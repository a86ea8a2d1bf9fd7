#include <doctest.h>

#include <stdexcept>

#include "dyckbij/corpus.hpp"
#include "dyckbij/poset.hpp"

using namespace dyckbij;

TEST_CASE("covers, worked examples") {
    const DyckPath p = from_code({7, {2, 6}, {1, 3}});
    const DyckPath q = from_code({7, {6}, {3}});
    CHECK(covers(q, p));
    CHECK_FALSE(covers(p, q));
    CHECK_FALSE(covers(p, p));
    // The pyramid has an empty code: nothing can be deleted from it.
    for_each_dyck_path(5, [](const DyckPath& other) {
        if (is_irreducible(other)) CHECK_FALSE(covers(other, DyckPath::pyramid(5)));
    });
    CHECK_THROWS_AS(covers(DyckPath::zigzag(2), DyckPath::zigzag(2)), std::invalid_argument);
    CHECK_THROWS_AS(covers(DyckPath::pyramid(2), DyckPath::pyramid(3)), std::invalid_argument);
}

TEST_CASE("leq, worked examples") {
    CHECK(leq(from_code({9, {4, 7, 8}, {3, 4, 7}}), from_code({9, {7, 8}, {3, 7}})));
    const DyckPath p = from_code({9, {3, 5, 6, 7, 8}, {1, 3, 4, 5, 7}});
    CHECK(leq(p, p));
    CHECK_FALSE(leq(p, from_code({9, {6, 8}, {2, 6}})));
    CHECK_THROWS_AS(leq(DyckPath::pyramid(2), DyckPath::pyramid(3)), std::invalid_argument);
    // A ground-level valley may be closed, merging two components.
    CHECK(leq(DyckPath::zigzag(2), DyckPath::pyramid(2)));
}

TEST_CASE("direct criterion equals the BFS closure, exhaustive") {
    for (int n = 0; n <= 6; ++n) {
        const std::vector<DyckPath> paths = all_dyck_paths(n);
        for (const DyckPath& p : paths)
            for (const DyckPath& q : paths) CHECK(leq(p, q) == leq_oracle(p, q));
    }
}

TEST_CASE("partial order axioms") {
    for (int n = 0; n <= 5; ++n) {
        const std::vector<DyckPath> paths = all_dyck_paths(n);
        for (const DyckPath& p : paths) {
            CHECK(leq(p, p));
            for (const DyckPath& q : paths) {
                const bool antisym = p == q || !(leq(p, q) && leq(q, p));
                CHECK(antisym);
                for (const DyckPath& r : paths)
                    if (leq(p, q) && leq(q, r)) CHECK(leq(p, r));
            }
        }
    }
}

TEST_CASE("pyramid is the unique maximum among irreducible paths") {
    for (int n = 1; n <= 6; ++n) {
        std::size_t maximal = 0;
        for_each_dyck_path(n, [&](const DyckPath& p) {
            if (!is_irreducible(p)) return;
            CHECK(leq(p, DyckPath::pyramid(n)));
            bool has_upper = false;
            for (const DyckPath& u : upper_covers(p)) has_upper = has_upper || u != p;
            if (!has_upper) ++maximal;
        });
        CHECK(maximal == 1);
    }
}

TEST_CASE("upper covers") {
    CHECK(upper_covers(DyckPath::pyramid(4)).empty());
    const auto ups = upper_covers(DyckPath::zigzag(2));
    REQUIRE(ups.size() == 1);
    CHECK(ups[0] == DyckPath::pyramid(2));
    // Successors are exactly the single-step reachability frontier.
    for_each_dyck_path(5, [](const DyckPath& p) {
        for (const DyckPath& u : upper_covers(p)) {
            CHECK(leq(p, u));
            CHECK(u != p);
        }
    });
}

TEST_CASE("hasse dot output") {
    const std::string dot = hasse_dot(all_dyck_paths(2));
    CHECK(dot.find("digraph hasse") != std::string::npos);
    CHECK(dot.find("UDUD") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
