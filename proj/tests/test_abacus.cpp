#include "doctest.h"
#include "oracles.hpp"
#include "schur/abacus.hpp"
#include "schur/poset.hpp"

using namespace schur;

TEST_CASE("beta numbers: fixtures and inversion") {
    CHECK(beta_numbers(Partition{4, 4, 3, 1}, 6).beads == std::vector<int>{9, 8, 6, 3, 1, 0});
    CHECK(beta_numbers(Partition{4, 2}, 6).beads == std::vector<int>{9, 6, 3, 2, 1, 0});
    CHECK(beta_numbers(Partition{}, 3).beads == std::vector<int>{2, 1, 0});
    CHECK_THROWS_AS(beta_numbers(Partition{4, 4, 3, 1}, 3), InputError);
    CHECK_THROWS_AS(BetaSet({3, 3, 1}), InputError);

    CHECK(partition_from_betas(BetaSet({9, 8, 6, 3, 1, 0})) == Partition{4, 4, 3, 1});
    CHECK(partition_from_betas(BetaSet({2, 1, 0})) == Partition{});
    CHECK(partition_from_betas(BetaSet({3, 1})) == Partition{2, 1});

    for (int r = 0; r <= 10; ++r)
        for (const Partition& mu : all_partitions(r))
            for (int l = mu.length(); l <= mu.length() + 3; ++l)
                CHECK(partition_from_betas(beta_numbers(mu, l)) == mu);
}

TEST_CASE("e-core fixtures and greedy-removal oracle") {
    CHECK(e_core(Partition{4, 4, 3, 1}, 3) == Partition{4, 2});
    CHECK(e_core(Partition{9, 2}, 2) == Partition{1});
    CHECK(e_core(Partition{34, 5}, 6) == Partition{10, 5});
    CHECK(e_core(Partition{6, 3, 2}, 1) == Partition{});

    for (int r = 0; r <= 10; ++r)
        for (const Partition& mu : all_partitions(r))
            for (int e = 2; e <= 5; ++e) CHECK(e_core(mu, e) == oracle::e_core(mu, e));
}

TEST_CASE("e-weight and core predicates") {
    CHECK(e_weight(Partition{4, 4, 3, 1}, 3) == 2);
    CHECK(e_weight(Partition{4, 2}, 3) == 0);
    CHECK(e_weight(Partition{30, 7, 2}, 24) == 0);

    CHECK(same_e_core(Partition{3}, Partition{1, 1, 1}, 3));
    CHECK_FALSE(same_e_core(Partition{35, 3, 1}, Partition{37, 2}, 3));
    CHECK_FALSE(same_e_core(Partition{2}, Partition{1, 1}, 3));

    for (int r = 0; r <= 12; ++r)
        for (const Partition& mu : all_partitions(r))
            for (int e = 2; e <= 5; ++e) {
                bool divisible = false;
                for (int a = 1; a <= mu.length() && !divisible; ++a)
                    for (int b = 1; b <= mu.part(a); ++b)
                        if (hook_length(mu, {a, b}) % e == 0) {
                            divisible = true;
                            break;
                        }
                CHECK(is_e_core(mu, e) == !divisible);
                CHECK(is_e_core(mu, e) == (e_weight(mu, e) == 0));
            }
}

TEST_CASE("core computation does not depend on the bead count") {
    for (int r = 0; r <= 12; ++r)
        for (const Partition& mu : all_partitions(r))
            for (int e = 2; e <= 5; ++e) {
                const Partition core = e_core(mu, e);
                for (int pad : {1, e, e + 1}) {
                    const BetaSet padded = beta_numbers(mu, mu.length() + pad);
                    std::vector<int> per_runner(e, 0);
                    for (int beta : padded.beads) ++per_runner[beta % e];
                    std::vector<int> pushed;
                    for (int runner = 0; runner < e; ++runner)
                        for (int row = 0; row < per_runner[runner]; ++row)
                            pushed.push_back(runner + row * e);
                    std::sort(pushed.begin(), pushed.end(), std::greater<int>());
                    CHECK(partition_from_betas(BetaSet(pushed)) == core);
                }
            }
}

TEST_CASE("abacus rendering is stable") {
    CHECK(render_abacus(Partition{4, 4, 3, 1}, 3, 6) ==
          "●●·\n"
          "●··\n"
          "●·●\n"
          "●··\n");
    CHECK(render_abacus(Partition{4, 2}, 3, 6) ==
          "●●●\n"
          "●··\n"
          "●··\n"
          "●··\n");
    CHECK(render_abacus(Partition{}, 2, 2) == "●●\n");
}
