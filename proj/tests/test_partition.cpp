#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "schur/partition.hpp"
#include "schur/poset.hpp"

using namespace schur;

TEST_CASE("partition construction and text round-trip") {
    CHECK(Partition{}.empty());
    CHECK(Partition{3, 1}.size() == 4);
    CHECK(Partition({4, 2, 0, 0}) == Partition{4, 2});
    CHECK(Partition::parse("29,6,4").parts() == std::vector<int>{29, 6, 4});
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("29, 6, 4").str() == "29,6,4");
    CHECK(Partition{}.str() == "0");
    CHECK_THROWS_AS(Partition({1, 2}), InputError);
    CHECK_THROWS_AS(Partition({3, -1}), InputError);
    CHECK_THROWS_AS(Partition::parse("3,,1"), InputError);
    CHECK_THROWS_AS(Partition::parse("a"), InputError);
    CHECK(Partition{4, 2}.part(1) == 4);
    CHECK(Partition{4, 2}.part(7) == 0);
}

TEST_CASE("conjugate fixtures and involution") {
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{4, 4, 3, 1}) == Partition{4, 3, 3, 2});
    CHECK(conjugate(Partition{3}) == Partition{1, 1, 1});
    for (int r = 0; r <= 14; ++r)
        for (const Partition& mu : all_partitions(r)) {
            CHECK(conjugate(conjugate(mu)) == mu);
            if (r <= 10) CHECK(conjugate(mu) == oracle::conjugate(mu));
        }
}

TEST_CASE("dominance fixtures, order axioms and conjugate duality") {
    CHECK(dominates(Partition{3}, Partition{3}));
    CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{4, 1, 1}, Partition{3, 3}));
    CHECK_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_THROWS_AS(dominates(Partition{3}, Partition{2}), SizeMismatchError);

    for (int r = 0; r <= 12; ++r) {
        const auto parts = all_partitions(r);
        for (const Partition& a : parts)
            for (const Partition& b : parts) {
                const bool fwd = dominates(a, b);
                if (fwd && dominates(b, a)) CHECK(a == b);
                CHECK(fwd == dominates(conjugate(b), conjugate(a)));
            }
    }
    for (int r = 0; r <= 8; ++r) {
        const auto parts = all_partitions(r);
        for (const Partition& a : parts)
            for (const Partition& b : parts)
                for (const Partition& c : parts)
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
    }
}

TEST_CASE("hook lengths and residues") {
    CHECK(hook_length(Partition{1}, {1, 1}) == 1);
    CHECK(hook_length(Partition{4, 4, 3, 1}, {1, 1}) == 7);
    CHECK(hook_length(Partition{3, 2}, {1, 2}) == 3);
    CHECK_THROWS_AS(hook_length(Partition{3, 2}, {1, 4}), InputError);
    CHECK_THROWS_AS(hook_length(Partition{3, 2}, {3, 1}), InputError);

    CHECK(residue({1, 1}, 3) == 0);
    CHECK(residue({2, 1}, 3) == 2);
    CHECK(residue({1, 4}, 3) == 0);
}

TEST_CASE("rim hooks match the literal rim walk") {
    const RimHookInfo seven_four = rim_hook(Partition{7, 4}, {1, 5}, 3);
    CHECK(seven_four.size == 3);
    CHECK(seven_four.hand == Node{1, 7});
    CHECK(seven_four.foot == Node{1, 5});
    CHECK(seven_four.leg == 0);

    const RimHookInfo three_two = rim_hook(Partition{3, 2}, {1, 2}, 3);
    CHECK(three_two.size == 3);
    CHECK(three_two.hand == Node{1, 3});
    CHECK(three_two.foot == Node{2, 2});
    CHECK(three_two.leg == 1);

    const RimHookInfo single = rim_hook(Partition{1}, {1, 1}, 2);
    CHECK(single.size == 1);
    CHECK(single.hand == Node{1, 1});
    CHECK(single.foot == Node{1, 1});
    CHECK(single.leg == 0);

    for (int r = 1; r <= 12; ++r)
        for (const Partition& mu : all_partitions(r))
            for (int a = 1; a <= mu.length(); ++a)
                for (int b = 1; b <= mu.part(a); ++b) {
                    const auto walk = oracle::rim_walk(mu, {a, b});
                    CHECK(static_cast<int>(walk.size()) == hook_length(mu, {a, b}));
                }
}

TEST_CASE("rim hook removal: fixtures and diagram oracle") {
    CHECK(remove_rim_hook(Partition{7, 4}, {1, 5}) == Partition{4, 4});
    CHECK(remove_rim_hook(Partition{4, 4}, {1, 3}) == Partition{3, 2});
    CHECK(remove_rim_hook(Partition{3, 2}, {1, 2}) == Partition{1, 1});
    CHECK_THROWS_AS(remove_rim_hook(Partition{3, 2}, {2, 3}), InputError);

    for (int r = 1; r <= 10; ++r)
        for (const Partition& mu : all_partitions(r))
            for (int a = 1; a <= mu.length(); ++a)
                for (int b = 1; b <= mu.part(a); ++b)
                    CHECK(remove_rim_hook(mu, {a, b}) == oracle::remove_hook(mu, {a, b}));
}

namespace {

std::set<Partition> wrap_results(const Partition& nu, int h) {
    std::set<Partition> out;
    for (const WrapCandidate& cand : wrap_hook_candidates(nu, h)) out.insert(cand.result);
    return out;
}

// Independent route: mu is a wrap of nu by an h-hook iff some corner of mu
// rim-walks to exactly nu with walk length h.
std::set<Partition> oracle_wraps(const Partition& nu, int h) {
    std::set<Partition> out;
    for (const Partition& mu : all_partitions(nu.size() + h)) {
        for (int a = 1; a <= mu.length() && !out.count(mu); ++a)
            for (int b = 1; b <= mu.part(a); ++b) {
                if (static_cast<int>(oracle::rim_walk(mu, {a, b}).size()) != h) continue;
                if (oracle::remove_hook(mu, {a, b}) == nu) {
                    out.insert(mu);
                    break;
                }
            }
    }
    return out;
}

}  // namespace

TEST_CASE("wrap candidates: fixtures, oracle, and round-trips") {
    CHECK(wrap_results(Partition{2}, 1) == std::set<Partition>{{3}, {2, 1}});
    CHECK(wrap_results(Partition{1}, 2) == std::set<Partition>{{3}, {1, 1, 1}});
    CHECK(wrap_results(Partition{}, 3) == std::set<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK_THROWS_AS(wrap_hook_candidates(Partition{2}, 0), InputError);

    for (const WrapCandidate& cand : wrap_hook_candidates(Partition{2}, 1)) {
        if (cand.result == Partition{3}) CHECK(cand.hook.hand == Node{1, 3});
        if (cand.result == Partition{2, 1}) CHECK(cand.hook.hand == Node{2, 1});
    }

    for (int r = 0; r <= 8; ++r)
        for (const Partition& nu : all_partitions(r))
            for (int h = 1; h <= 4; ++h) {
                CHECK(wrap_results(nu, h) == oracle_wraps(nu, h));
                for (const WrapCandidate& cand : wrap_hook_candidates(nu, h))
                    CHECK(remove_rim_hook(cand.result, cand.hook.corner) == nu);
            }

    // Each removal is matched by exactly one wrap candidate restoring it.
    for (int r = 1; r <= 9; ++r)
        for (const Partition& mu : all_partitions(r))
            for (int a = 1; a <= mu.length(); ++a)
                for (int b = 1; b <= mu.part(a); ++b) {
                    const int h = hook_length(mu, {a, b});
                    const Partition down = remove_rim_hook(mu, {a, b});
                    CHECK(wrap_results(down, h).count(mu) == 1);
                }
}

TEST_CASE("horizontal hook criteria") {
    CHECK(only_horizontal_hooks(Partition{4, 2}, 3));
    CHECK_FALSE(only_horizontal_hooks(Partition{7, 4}, 3));
    CHECK(only_horizontal_hooks(Partition{35, 3, 1}, 3));

    CHECK(horizontal_condition_a(Partition{4, 2}, 3));
    CHECK_FALSE(horizontal_condition_a(Partition{7, 4}, 3));
    CHECK(horizontal_condition_a(Partition{3}, 3));

    CHECK(horizontal_condition_c(Partition{4, 2}, 3));
    CHECK(horizontal_condition_c(Partition{35, 3, 1}, 3));
    CHECK_FALSE(horizontal_condition_c(Partition{7, 4}, 3));

    for (int r = 0; r <= 9; ++r)
        for (const Partition& mu : all_partitions(r))
            for (int e = 2; e <= 5; ++e) {
                const bool b = only_horizontal_hooks(mu, e);
                CHECK(horizontal_condition_a(mu, e) == b);
                CHECK(horizontal_condition_c(mu, e) == b);
            }
}

TEST_CASE("poset member generation") {
    CHECK(generate_poset_members(PosetSpec::all(3)) ==
          std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(generate_poset_members(PosetSpec::max_length(2, 4)) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}});

    const auto ten = generate_poset_members(
        PosetSpec::dominating(Partition{29, 6, 4}).with_nonempty_core(3));
    const std::set<Partition> expected{{34, 5}, {31, 5, 3}, {31, 8}, {37, 2},
                                       {30, 7, 2}, {33, 4, 2}, {29, 6, 4}, {29, 9, 1},
                                       {32, 6, 1}, {35, 3, 1}};
    CHECK(std::set<Partition>(ten.begin(), ten.end()) == expected);
    CHECK(ten.size() == 10);
    CHECK(std::is_sorted(ten.begin(), ten.end(), std::greater<Partition>()));

    CHECK_THROWS_AS(
        generate_poset_members(PosetSpec::explicit_list({Partition{3}, Partition{2}})),
        InputError);
    CHECK_THROWS_AS(generate_poset_members(PosetSpec::all(65)), InputError);
    CHECK(generate_poset_members(PosetSpec::all(0)) == std::vector<Partition>{{}});
}
