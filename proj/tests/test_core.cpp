#include <doctest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "partlog/enumerate.hpp"
#include "partlog/errors.hpp"
#include "partlog/partition.hpp"
#include "partlog/relation.hpp"
#include "partlog/text.hpp"
#include "test_support.hpp"

using namespace partlog;
using testsupport::part;

TEST_CASE("universe construction and names") {
    UniversePtr u = make_universe(3);
    CHECK(u->size() == 3);
    CHECK(u->name(0) == "e0");
    CHECK(u->name(2) == "e2");

    UniversePtr named = make_universe({"a", "b", "c", "d"});
    CHECK(named->index_of("c") == 2);
    CHECK(named->index_of("z") == Universe::npos);

    CHECK_THROWS_AS(make_universe(0), Error);
    CHECK_THROWS_AS(make_universe({"a", "a"}), Error);
}

TEST_CASE("partition_from_blocks canonicalizes and validates") {
    UniversePtr u = make_universe({"a", "b", "c", "d"});

    Partition sigma = partition_from_blocks(u, {{0}, {1, 2, 3}});
    CHECK(sigma.rgs() == std::vector<std::uint32_t>{0, 1, 1, 1});

    Partition zero = partition_from_blocks(u, {{0, 1, 2, 3}});
    CHECK(zero.rgs() == std::vector<std::uint32_t>{0, 0, 0, 0});
    CHECK(zero.is_indiscrete());

    CHECK_THROWS_AS(partition_from_blocks(u, {{0, 1}, {0, 2}}), OverlapError);
    CHECK_THROWS_AS(partition_from_blocks(u, {{0, 1, 2, 3}, {}}), EmptyBlockError);
    CHECK_THROWS_AS(partition_from_blocks(u, {{0, 1}}), CoverageError);
    CHECK_THROWS_AS(partition_from_blocks(u, {{0, 1, 2, 9}}), IndexError);

    // Block order in the listing is by least element.
    Partition p = partition_from_blocks(u, {{3}, {1, 0}, {2}});
    auto blocks = p.blocks();
    CHECK(blocks[0] == std::vector<std::uint32_t>{0, 1});
    CHECK(blocks[1] == std::vector<std::uint32_t>{2});
    CHECK(blocks[2] == std::vector<std::uint32_t>{3});
}

TEST_CASE("canonicality: blocks -> partition_from_blocks round-trips") {
    UniversePtr u = make_letter_universe(4);
    for_each_partition(u, [&](const Partition& p) {
        CHECK(partition_from_blocks(u, p.blocks()) == p);
    });
}

TEST_CASE("indit and dit") {
    UniversePtr u3 = make_letter_universe(3);
    CHECK(indit(indiscrete_partition(u3)).pair_count() == 9);
    CHECK(indit(discrete_partition(u3)) == BinaryRelation::diagonal(u3));
    CHECK(dit(indiscrete_partition(u3)).pair_count() == 0);

    UniversePtr u2 = make_letter_universe(2);
    BinaryRelation d1 = dit(discrete_partition(u2));
    CHECK(d1.pair_count() == 2);
    CHECK(d1.contains(0, 1));
    CHECK(d1.contains(1, 0));

    UniversePtr u4 = make_letter_universe(4);
    Partition p = part(u4, "{a,b|c,d}");
    BinaryRelation in = indit(p);
    CHECK(in.pair_count() == 8);  // diagonal + (a,b),(b,a),(c,d),(d,c)
    CHECK(in.contains(0, 1));
    CHECK(in.contains(3, 2));
    CHECK_FALSE(in.contains(1, 2));
}

TEST_CASE("complementation holds for every partition up to n=5") {
    for (std::size_t n = 1; n <= 5; ++n) {
        UniversePtr u = make_letter_universe(n);
        for_each_partition(u, [&](const Partition& p) {
            BinaryRelation in = indit(p);
            BinaryRelation di = dit(p);
            CHECK(relation_union(in, di) == BinaryRelation::full(u));
            CHECK(relation_intersection(in, di).pair_count() == 0);
            CHECK(in.pair_count() + di.pair_count() == n * n);
            CHECK(in.is_equivalence());
        });
    }
}

TEST_CASE("refines basics") {
    UniversePtr u = make_letter_universe(4);
    Partition zero = indiscrete_partition(u);
    Partition one = discrete_partition(u);
    for_each_partition(u, [&](const Partition& p) {
        CHECK(refines(zero, p));
        CHECK(refines(p, one));
    });

    Partition sigma = part(u, "{a|b,c,d}");
    Partition pi = part(u, "{a,b|c,d}");
    CHECK_FALSE(refines(sigma, pi));  // {a,b} lies in no block of sigma

    UniversePtr other = make_universe(4);
    CHECK_THROWS_AS(refines(sigma, discrete_partition(other)), UniverseMismatchError);
}

TEST_CASE("order agreement: block containment equals ditset inclusion on all pairs, n<=4") {
    set_debug_order_checks(true);
    for (std::size_t n = 2; n <= 4; ++n) {
        UniversePtr u = make_letter_universe(n);
        std::vector<Partition> parts = all_partitions(u);
        for (const Partition& sigma : parts) {
            for (const Partition& pi : parts) {
                // The debug mode itself asserts agreement of both routes.
                bool ref = refines(sigma, pi);
                CHECK(ref == relation_subset(dit(sigma), dit(pi)));
            }
        }
    }
    set_debug_order_checks(false);
}

TEST_CASE("enumeration counts, order, and uniqueness") {
    std::vector<std::uint64_t> bell{1, 1, 2, 5, 15, 52, 203};
    for (std::size_t n = 1; n <= 5; ++n) {
        UniversePtr u = make_letter_universe(n);
        std::vector<Partition> parts = all_partitions(u);
        CHECK(parts.size() == bell[n]);
        CHECK(parts.size() == bell_number(n));
        CHECK(parts.size() == testsupport::bell_by_recurrence(n));

        // First is the indiscrete 0, last the discrete 1, order strictly
        // lexicographic, no duplicates.
        CHECK(parts.front().is_indiscrete());
        CHECK(parts.back().is_discrete());
        std::set<std::string> keys;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            CHECK(keys.insert(parts[i].key()).second);
            if (i)
                CHECK(parts[i - 1] < parts[i]);
        }

        // Independent recursive oracle generates the same set.
        std::set<std::string> oracle = testsupport::insertion_partitions(n);
        CHECK(oracle == keys);
    }
}

TEST_CASE("enumeration cap") {
    UniversePtr u = make_universe(5);
    CHECK_THROWS_AS(all_partitions(u, 4), CapExceededError);
    CHECK_THROWS_AS(bell_number(26), CapExceededError);
    CHECK(bell_number(10) == 115975);
}

TEST_CASE("components of link sets") {
    UniversePtr u4 = make_letter_universe(4);
    CHECK(components(u4, {}) == discrete_partition(u4));
    CHECK(components(u4, {{0, 1}}) == part(u4, "{a,b|c|d}"));

    UniversePtr u3 = make_letter_universe(3);
    CHECK(components(u3, {{0, 1}, {1, 2}}) == indiscrete_partition(u3));

    CHECK_THROWS_AS(components(u3, {{0, 7}}), IndexError);
}

TEST_CASE("components agree with a BFS oracle on random link sets") {
    std::mt19937 rng(7);
    for (std::size_t n = 2; n <= 5; ++n) {
        UniversePtr u = make_letter_universe(n);
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> links;
            std::uniform_int_distribution<int> count(0, static_cast<int>(n + 2));
            int m = count(rng);
            for (int i = 0; i < m; ++i)
                links.emplace_back(pick(rng), pick(rng));
            CHECK(components(u, links) == testsupport::bfs_components(u, links));
        }
    }
}

TEST_CASE("rst_closure basics") {
    UniversePtr u3 = make_letter_universe(3);
    BinaryRelation empty(u3);
    CHECK(rst_closure(empty) == BinaryRelation::diagonal(u3));

    // Closure of an equivalence relation is itself.
    for_each_partition(u3, [&](const Partition& p) {
        BinaryRelation in = indit(p);
        CHECK(rst_closure(in) == in);
    });

    BinaryRelation chain(u3);
    chain.add(0, 1);
    chain.add(1, 2);
    CHECK(rst_closure(chain) == BinaryRelation::full(u3));
}

TEST_CASE("closure is a closure operator and matches the matrix oracle") {
    std::mt19937 rng(13);
    for (std::size_t n = 2; n <= 5; ++n) {
        UniversePtr u = make_letter_universe(n);
        for (int trial = 0; trial < 30; ++trial) {
            BinaryRelation r = testsupport::random_relation(u, rng);
            BinaryRelation closed = rst_closure(r);
            CHECK(closed == testsupport::matrix_closure(r));
            CHECK(relation_subset(r, closed));          // extensive
            CHECK(rst_closure(closed) == closed);       // idempotent
            BinaryRelation bigger = relation_union(r, testsupport::random_relation(u, rng));
            CHECK(relation_subset(closed, rst_closure(bigger)));  // monotone

            // Interiors are open: fixed under interior, complement closed.
            BinaryRelation open = interior(r);
            CHECK(interior(open) == open);
            CHECK(relation_complement(open).is_equivalence());
        }
    }
}

TEST_CASE("components/closure duality on random link sets") {
    std::mt19937 rng(17);
    for (std::size_t n = 2; n <= 5; ++n) {
        UniversePtr u = make_letter_universe(n);
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> links;
            for (int i = 0; i < static_cast<int>(n); ++i)
                links.emplace_back(pick(rng), pick(rng));
            BinaryRelation r(u);
            for (auto [a, b] : links)
                r.add(a, b);
            CHECK(indit(components(u, links)) == rst_closure(r));
        }
    }
}

TEST_CASE("interior") {
    for (std::size_t n = 2; n <= 4; ++n) {
        UniversePtr u = make_letter_universe(n);
        CHECK(interior(BinaryRelation::full(u)) == dit(discrete_partition(u)));
        CHECK(interior(BinaryRelation::diagonal(u)).pair_count() == 0);
        // Ditsets are open sets.
        for_each_partition(u, [&](const Partition& p) {
            CHECK(interior(dit(p)) == dit(p));
        });
    }
}

TEST_CASE("partition literals parse and print") {
    UniversePtr u = make_universe({"a", "b", "c", "d"});
    CHECK(part(u, "{a,b|c,d}").rgs() == std::vector<std::uint32_t>{0, 0, 1, 1});
    CHECK(part(u, "{ a , b | c , d }").rgs() == std::vector<std::uint32_t>{0, 0, 1, 1});
    CHECK(part(u, "[0,0,1,1]") == part(u, "{a,b|c,d}"));
    CHECK(part(u, "0").is_indiscrete());
    CHECK(part(u, "1").is_discrete());
    CHECK(format_partition(part(u, "{a,b|c|d}")) == "{a,b|c|d}");
    CHECK(format_rgs(part(u, "{a,b|c|d}")) == "[0,0,1,2]");

    CHECK_THROWS_AS(part(u, "{a,b|c}"), CoverageError);
    CHECK_THROWS_AS(part(u, "{a,x|b,c,d}"), SyntaxError);
    CHECK_THROWS_AS(part(u, "[0,2,1,1]"), SyntaxError);
    CHECK_THROWS_AS(part(u, "[0,0,1]"), SyntaxError);
    CHECK_THROWS_AS(part(u, "a,b"), SyntaxError);
}
