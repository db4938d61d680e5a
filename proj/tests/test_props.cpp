#include <doctest.h>

#include "fixtures.hpp"
#include "rcdkit/falsifier.hpp"
#include "rcdkit/properties.hpp"
#include "rcdkit/rcd.hpp"

using namespace rcdkit;

TEST_CASE("stationarity, exact witnesses") {
    Kernel k = fx::leaky_head_kernel();
    PropertyVerdict v = check_stationary(k, uniform_measure(4));
    REQUIRE_FALSE(v.holds);
    // First violated singleton: state 0 receives nothing but holds 1/4.
    CHECK(v.witness->B == EventSet::of(4, {0}));
    CHECK(v.witness->lhs == Rat(0));
    CHECK(v.witness->rhs == Rat(1, 4));

    CHECK(check_stationary(k, fx::leaky_head_fixpoint()).holds);
    CHECK(check_stationary(Kernel::identity(3), Measure({Rat(1, 2), Rat(1, 3), Rat(1, 6)})).holds);
}

TEST_CASE("restricted stationarity quantifies over the scope blocks only") {
    Kernel k = fx::merged_tail_kernel();
    Measure skew({Rat(1, 3), Rat(1, 2), Rat(1, 6)});
    CHECK_FALSE(check_stationary(k, skew).holds);

    // Blocks {0} and {1,2} each conserve their mass, so the restricted check
    // passes even though mass moves between states 1 and 2.
    RestrictionScope scope;
    scope.partition = fx::merged_tail_sigma();
    CHECK(check_stationary(k, skew, scope).holds);

    RestrictionScope fine;
    fine.partition = Partition::discrete(3);
    PropertyVerdict v = check_stationary(k, skew, fine);
    REQUIRE_FALSE(v.holds);
    CHECK(v.witness->B == EventSet::of(3, {1}));
}

TEST_CASE("reversibility, exact witnesses") {
    Kernel k = fx::leaky_head_kernel();
    PropertyVerdict v = check_reversible(k, uniform_measure(4));
    REQUIRE_FALSE(v.holds);
    CHECK(v.witness->x == 0);
    CHECK(v.witness->y == 1);
    CHECK(v.witness->lhs == Rat(1, 12));  // nu(0) R(0,1)
    CHECK(v.witness->rhs == Rat(0));      // nu(1) R(1,0)

    Kernel m = fx::merged_tail_kernel();
    PropertyVerdict w = check_reversible(m, Measure({Rat(1, 3), Rat(1, 2), Rat(1, 6)}));
    REQUIRE_FALSE(w.holds);
    CHECK(w.witness->x == 1);
    CHECK(w.witness->y == 2);
    CHECK(w.witness->lhs == Rat(1, 4));
    CHECK(w.witness->rhs == Rat(1, 12));

    CHECK(check_reversible(m, Measure({Rat(1, 2), Rat(1, 4), Rat(1, 4)})).holds);
    CHECK(check_reversible(k, fx::leaky_head_fixpoint()).holds);
}

TEST_CASE("restricted reversibility compares block-pair flows") {
    Kernel m = fx::merged_tail_kernel();
    Measure skew({Rat(1, 3), Rat(1, 2), Rat(1, 6)});
    RestrictionScope scope;
    scope.partition = fx::merged_tail_sigma();
    CHECK(check_reversible(m, skew, scope).holds);

    // A kernel pushing mass 0 -> 1 across blocks with no return flow.
    Kernel push({{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
    RestrictionScope pairs;
    pairs.partition = Partition::discrete(3);
    PropertyVerdict v = check_reversible(push, uniform_measure(3), pairs);
    REQUIRE_FALSE(v.holds);
    CHECK(v.witness->A == EventSet::of(3, {0}));
    CHECK(v.witness->B == EventSet::of(3, {1}));
}

TEST_CASE("self-compatibility is idempotence from the support") {
    CHECK(check_self_compatible(fx::leaky_head_kernel(), uniform_measure(4)).holds);
    CHECK(check_self_compatible(fx::merged_tail_kernel(), uniform_measure(3)).holds);
    CHECK(check_self_compatible(Kernel::identity(3), uniform_measure(3)).holds);

    Kernel swap({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    PropertyVerdict v = check_self_compatible(swap, uniform_measure(2));
    REQUIRE_FALSE(v.holds);
    CHECK(v.witness->x == 0);
    CHECK(v.witness->z == 0);

    // Non-idempotent rows off the support are forgiven.
    Kernel half({{Rat(1), Rat(0)}, {Rat(1, 2), Rat(1, 2)}});
    CHECK_FALSE(check_self_compatible(half, uniform_measure(2)).holds);
    CHECK(check_self_compatible(half, point_mass(0, 2)).holds);
}

TEST_CASE("self-reversibility, frozen first witness") {
    CHECK(check_self_reversible(fx::leaky_head_kernel(), uniform_measure(4)).holds);

    // Perturb row 0: the first violating triple in scan order is x=0, y=2, z=3
    // with R(0,y)R(y,z) = 1/3 * 1/2 = 1/6 against R(0,z)R(z,y) = 0.
    Kernel bad({{Rat(0), Rat(2, 3), Rat(1, 3), Rat(0)},
                {Rat(0), Rat(1), Rat(0), Rat(0)},
                {Rat(0), Rat(0), Rat(1, 2), Rat(1, 2)},
                {Rat(0), Rat(0), Rat(1, 2), Rat(1, 2)}});
    PropertyVerdict v = check_self_reversible(bad, uniform_measure(4));
    REQUIRE_FALSE(v.holds);
    CHECK(v.witness->x == 0);
    CHECK(v.witness->y == 2);
    CHECK(v.witness->z == 3);
    CHECK(v.witness->lhs == Rat(1, 6));
    CHECK(v.witness->rhs == Rat(0));

    // Same kernel, but all mass on the states whose rows are untouched.
    CHECK(check_self_reversible(bad, Measure({Rat(0), Rat(1, 3), Rat(1, 3), Rat(1, 3)})).holds);
}

TEST_CASE("properness and totality against a partition") {
    Kernel k = fx::leaky_head_kernel();
    Partition sigma = fx::leaky_head_sigma();

    PropertyVerdict t = check_total(k, uniform_measure(4), sigma);
    REQUIRE_FALSE(t.holds);
    CHECK(t.witness->x == 0);
    CHECK(t.witness->A == EventSet::of(4, {0}));
    CHECK(t.witness->lhs == Rat(0));
    CHECK(t.witness->rhs == Rat(1));

    PropertyVerdict p = check_proper(k, uniform_measure(4), sigma);
    CHECK_FALSE(p.holds);

    // Null blocks are exempt: kill state 0's mass and both hold.
    Measure fix = fx::leaky_head_fixpoint();
    PropertyVerdict t2 = check_total(k, fix, sigma);
    PropertyVerdict p2 = check_proper(k, fix, sigma);
    CHECK(t2.holds);
    CHECK(p2.holds);
    // The certificate names the positive-mass blocks the verdict rests on.
    CHECK(t2.certificate == EventSet::of(4, {1, 2, 3}));
    CHECK(p2.certificate == EventSet::of(4, {1, 2, 3}));

    // Against the one-block partition both checks are vacuous.
    CHECK(check_total(k, uniform_measure(4), Partition::trivial(4)).holds);
    CHECK(check_proper(k, uniform_measure(4), Partition::trivial(4)).holds);

    // Two positive blocks: row 0 keeps only 1/3 of its mass in its own half.
    Partition halves = Partition::from_blocks(4, {EventSet::of(4, {0, 1}), EventSet::of(4, {2, 3})});
    CHECK_FALSE(check_proper(k, uniform_measure(4), halves).holds);
    CHECK_FALSE(check_total(k, uniform_measure(4), halves).holds);
    CHECK_FALSE(check_proper(Kernel::constant(uniform_measure(4)), uniform_measure(4), halves).holds);
    CHECK(check_proper(Kernel::identity(4), uniform_measure(4), halves).holds);
}

TEST_CASE("triviality allows all-or-nothing own-block mass") {
    Kernel k = fx::leaky_head_kernel();
    CHECK(check_trivial(k, uniform_measure(4), fx::leaky_head_sigma()).holds);

    Kernel mixed({{Rat(1, 2), Rat(1, 2)}, {Rat(0), Rat(1)}});
    PropertyVerdict v = check_trivial(mixed, uniform_measure(2), Partition::discrete(2));
    REQUIRE_FALSE(v.holds);
    CHECK(v.witness->x == 0);
    CHECK(v.witness->lhs == Rat(1, 2));

    // The offending state is forgiven once it carries no mass.
    CHECK(check_trivial(mixed, point_mass(1, 2), Partition::discrete(2)).holds);
}

TEST_CASE("absolute continuity of rows started on the support") {
    Kernel k = fx::merged_tail_kernel();
    CHECK(check_abs_continuous(k, Measure({Rat(1, 2), Rat(1, 4), Rat(1, 4)})).holds);

    // State 1 has mass and sends half its row to the null state 2.
    Measure nu({Rat(1, 2), Rat(1, 2), Rat(0)});
    PropertyVerdict v = check_abs_continuous(k, nu);
    REQUIRE_FALSE(v.holds);
    CHECK(v.witness->x == 1);
    CHECK(v.witness->y == 2);

    // Rows on null states may do anything.
    CHECK(check_abs_continuous(k, Measure({Rat(1), Rat(0), Rat(0)})).holds);
}

TEST_CASE("profile agrees with the individual checkers") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 2 + static_cast<int>(seed % 4);
        Kernel k = gen_kernel_dense(n, seed);
        Measure nu = gen_measure(n, seed + 1000, true);
        Partition g = gen_partition(n, seed + 2000);

        PropertyProfile prof = profile(k, nu, g);
        CHECK(prof.sigma == sigma_of_kernel(k));
        CHECK(prof.conditioning == g);
        CHECK(prof.stationary.holds == check_stationary(k, nu).holds);
        CHECK(prof.reversible.holds == check_reversible(k, nu).holds);
        CHECK(prof.self_compatible.holds == check_self_compatible(k, nu).holds);
        CHECK(prof.self_reversible.holds == check_self_reversible(k, nu).holds);
        CHECK(prof.proper.holds == check_proper(k, nu, g).holds);
        CHECK(prof.total.holds == check_total(k, nu, g).holds);
        CHECK(prof.trivial.holds == check_trivial(k, nu, g).holds);
        CHECK(prof.abs_continuous.holds == check_abs_continuous(k, nu).holds);

        PropertyProfile bare = profile(k, nu);
        CHECK(bare.conditioning == bare.sigma);
    }
}

TEST_CASE("verdict JSON carries the witness") {
    PropertyVerdict v = check_stationary(fx::leaky_head_kernel(), uniform_measure(4));
    nlohmann::ordered_json j = verdict_to_json(v);
    CHECK(j["holds"] == false);
    CHECK(j["witness"]["B"] == nlohmann::ordered_json::array({0}));
    CHECK(j["witness"]["lhs"] == "0");
    CHECK(j["witness"]["rhs"] == "1/4");

    nlohmann::ordered_json p = partition_to_json(fx::leaky_head_sigma());
    CHECK(p.dump() == "[[0],[1],[2,3]]");
}

TEST_CASE("tolerance mode forgives epsilon-sized defects") {
    NumericMode loose = NumericMode::within(Rat(1, 1000));
    Kernel near_id = Kernel::unchecked({{Rat(999, 1000), Rat(1, 1000)}, {Rat(0), Rat(1)}});
    CHECK_FALSE(check_stationary(near_id, uniform_measure(2)).holds);
    CHECK(check_stationary(near_id, uniform_measure(2), {}, loose).holds);
    CHECK_FALSE(check_self_compatible(near_id, uniform_measure(2)).holds);
    CHECK(check_self_compatible(near_id, uniform_measure(2), loose).holds);
    CHECK(check_total(near_id, uniform_measure(2), Partition::discrete(2), loose).holds);
}
