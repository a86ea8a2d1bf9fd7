#include <doctest.h>

#include <set>
#include <stdexcept>

#include "dyckbij/corpus.hpp"

using namespace dyckbij;

TEST_CASE("factorial and catalan") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == 2432902008176640000ULL);
    CHECK_THROWS_AS(factorial(21), std::invalid_argument);
    const std::uint64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 0; n <= 10; ++n) CHECK(catalan(n) == expected[n]);
}

TEST_CASE("permutation_at_rank") {
    CHECK(permutation_at_rank(3, 0) == Permutation::parse("1 2 3"));
    CHECK(permutation_at_rank(3, 5) == Permutation::parse("3 2 1"));
    CHECK(permutation_at_rank(4, 13) == Permutation::parse("3 1 4 2"));
    // Ranks enumerate S_n in lexicographic order.
    std::uint64_t rank = 0;
    for_each_permutation(5, [&rank](const Permutation& s) {
        CHECK(permutation_at_rank(5, rank) == s);
        ++rank;
    });
    CHECK(rank == factorial(5));
}

TEST_CASE("permutation generator") {
    std::vector<Permutation> all;
    for_each_permutation(4, [&all](const Permutation& s) { all.push_back(s); });
    CHECK(all.size() == 24);
    CHECK(all.front() == Permutation::identity(4));
    CHECK(all.back() == Permutation::parse("4 3 2 1"));
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].values() < all[i].values());
    CHECK_THROWS_AS(for_each_permutation(11, [](const Permutation&) {}), std::invalid_argument);
    CHECK_THROWS_AS(for_each_permutation(-1, [](const Permutation&) {}), std::invalid_argument);
}

TEST_CASE("avoider generator matches the filtered sweep") {
    const std::uint64_t counts1234[] = {1, 1, 2, 6, 23, 103, 513, 2761, 15767};
    for (int n = 0; n <= 8; ++n) CHECK(count_avoiding(n, 4) == counts1234[n]);
    for (int n = 0; n <= 7; ++n) CHECK(count_avoiding(n, 3) == catalan(n));
    for (int n = 0; n <= 6; ++n) {
        std::vector<Permutation> generated;
        for_each_avoiding(n, 4, [&generated](const Permutation& s) { generated.push_back(s); });
        std::vector<Permutation> filtered;
        for_each_permutation(n, [&filtered](const Permutation& s) {
            if (avoids_1234(s)) filtered.push_back(s);
        });
        CHECK(generated == filtered);  // same objects, same lexicographic order
    }
    CHECK_THROWS_AS(for_each_avoiding(2, 5, [](const Permutation&) {}), std::invalid_argument);
}

TEST_CASE("dyck path generator") {
    std::vector<DyckPath> paths;
    for_each_dyck_path(3, [&paths](const DyckPath& p) { paths.push_back(p); });
    CHECK(paths.size() == 5);
    CHECK(paths == all_dyck_paths(3));
    std::set<DyckPath> distinct(paths.begin(), paths.end());
    CHECK(distinct.size() == paths.size());
    for (size_t i = 1; i < paths.size(); ++i) CHECK(paths[i - 1].steps() < paths[i].steps());
    CHECK(all_dyck_paths(0).size() == 1);
    CHECK_THROWS_AS(all_dyck_paths(11), std::invalid_argument);
    CHECK(all_dyck_paths(11, 11).size() == catalan(11));
}
