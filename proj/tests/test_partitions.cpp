#include <doctest.h>

#include "rcdkit/errors.hpp"
#include "rcdkit/falsifier.hpp"
#include "rcdkit/partition.hpp"

using namespace rcdkit;

namespace {
Partition parts(int n, std::vector<std::vector<int>> blocks) {
    std::vector<EventSet> sets;
    for (const auto& b : blocks) sets.push_back(EventSet::from_indices(n, b));
    return Partition::from_blocks(n, std::move(sets));
}
}  // namespace

TEST_CASE("from_blocks validates and canonicalizes") {
    Partition p = parts(4, {{3, 1}, {0}, {2}});
    CHECK(p.block_count() == 3);
    // Canonical order: blocks sorted by smallest member.
    CHECK(p.block(0) == EventSet::of(4, {0}));
    CHECK(p.block(1) == EventSet::of(4, {1, 3}));
    CHECK(p.block(2) == EventSet::of(4, {2}));
    CHECK(p.block_index_of(3) == 1);
    CHECK(p.block_of(3) == EventSet::of(4, {1, 3}));
    CHECK(p == parts(4, {{0}, {2}, {1, 3}}));

    CHECK_THROWS_AS(parts(3, {{0, 1}}), Error);          // state 2 uncovered
    CHECK_THROWS_AS(parts(3, {{0, 1}, {1, 2}}), Error);  // overlap
    CHECK_THROWS_AS(parts(3, {{0, 1, 2}, {}}), Error);   // empty block
    CHECK_THROWS_AS(Partition::from_blocks(3, {EventSet::of(2, {0, 1})}), Error);
}

TEST_CASE("discrete, trivial, from_labels") {
    CHECK(Partition::discrete(3) == parts(3, {{0}, {1}, {2}}));
    CHECK(Partition::trivial(3) == parts(3, {{0, 1, 2}}));
    CHECK(Partition::from_labels({0, 1, 0, 2}) == parts(4, {{0, 2}, {1}, {3}}));
    // Sparse, non-dense label ids are fine; only grouping matters.
    CHECK(Partition::from_labels({7, 3, 7}) == parts(3, {{0, 2}, {1}}));
}

TEST_CASE("generated_by groups states by membership signature") {
    // Sets {0,1} and {1,2} over 4 states split off 1, {0}, {2}, and the rest.
    Partition p = generated_by(4, {EventSet::of(4, {0, 1}), EventSet::of(4, {1, 2})});
    CHECK(p == parts(4, {{0}, {1}, {2}, {3}}));
    CHECK(generated_by(3, {}) == Partition::trivial(3));
    CHECK(generated_by(3, {EventSet::of(3, {0})}) == parts(3, {{0}, {1, 2}}));
    // Order and complements do not change the generated partition.
    CHECK(generated_by(3, {EventSet::of(3, {0}), EventSet::of(3, {1, 2})}) ==
          parts(3, {{0}, {1, 2}}));
}

TEST_CASE("refines") {
    CHECK(refines(Partition::discrete(4), Partition::trivial(4)));
    CHECK(refines(parts(4, {{0, 1}, {2, 3}}), Partition::trivial(4)));
    CHECK_FALSE(refines(Partition::trivial(4), parts(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(refines(parts(4, {{0, 2}, {1, 3}}), parts(4, {{0, 1}, {2, 3}})));
    CHECK(refines(parts(4, {{0}, {1}, {2, 3}}), parts(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("meet and join on a worked example") {
    Partition p = parts(5, {{0, 1, 2}, {3, 4}});
    Partition q = parts(5, {{0, 1}, {2, 3}, {4}});
    CHECK(meet(p, q) == parts(5, {{0, 1}, {2}, {3}, {4}}));
    CHECK(join(p, q) == Partition::trivial(5));

    Partition r = parts(5, {{0}, {1}, {2}, {3, 4}});
    CHECK(join(r, parts(5, {{0, 1}, {2}, {3}, {4}})) == parts(5, {{0, 1}, {2}, {3, 4}}));
}

TEST_CASE("lattice laws hold on random partitions") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 6);
        Partition p = gen_partition(n, seed * 2 + 1);
        Partition q = gen_partition(n, seed * 2 + 2);
        Partition m = meet(p, q);
        Partition j = join(p, q);

        CHECK(refines(m, p));
        CHECK(refines(m, q));
        CHECK(refines(p, j));
        CHECK(refines(q, j));
        CHECK(meet(p, q) == meet(q, p));
        CHECK(join(p, q) == join(q, p));
        CHECK(meet(p, p) == p);
        CHECK(join(p, p) == p);
        // Absorption ties the two operations together.
        CHECK(meet(p, j) == p);
        CHECK(join(p, m) == p);
        // refines(p, q) is exactly "meet is p" and exactly "join is q".
        CHECK(refines(p, q) == (m == p));
        CHECK(refines(p, q) == (j == q));
    }
}

TEST_CASE("trace restricts a partition to a carrier") {
    Partition p = parts(4, {{0, 1}, {2, 3}});
    TracePartition t = trace(p, EventSet::of(4, {1, 2}));
    CHECK(t.blocks == std::vector<EventSet>{EventSet::of(4, {1}), EventSet::of(4, {2})});
    CHECK(trace(p, EventSet::of(4, {0, 1})).blocks == std::vector<EventSet>{EventSet::of(4, {0, 1})});
    CHECK(trace(p, EventSet(4)).blocks.empty());
}

TEST_CASE("essential equality ignores null states") {
    Measure nu({Rat(1, 2), Rat(1, 2), Rat(0)});
    Partition a = parts(3, {{0}, {1}, {2}});
    Partition b = parts(3, {{0}, {1, 2}});
    Partition c = parts(3, {{0, 1}, {2}});
    CHECK(essentially_equal(a, b, nu));   // differ only at the null state 2
    CHECK_FALSE(essentially_equal(a, c, nu));
    CHECK(essentially_equal(a, a, nu));

    Measure full({Rat(1, 3), Rat(1, 3), Rat(1, 3)});
    CHECK_FALSE(essentially_equal(a, b, full));
}
