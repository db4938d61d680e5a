#include <doctest.h>

#include "rcdkit/errors.hpp"
#include "rcdkit/event_set.hpp"
#include "rcdkit/instance.hpp"
#include "rcdkit/kernel.hpp"
#include "rcdkit/measure.hpp"
#include "rcdkit/rational.hpp"

using namespace rcdkit;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(6, 3).str() == "2");
    CHECK(Rat(1, 3).str() == "1/3");
    CHECK(Rat(-1, 3).str() == "-1/3");
    CHECK(Rat(5).is_integer());
    CHECK_FALSE(Rat(1, 2).is_integer());
}

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 2) - Rat(2, 3) == Rat(-1, 6));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
    CHECK(-Rat(1, 2) == Rat(-1, 2));
    CHECK(Rat(-1, 2).abs() == Rat(1, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1) < Rat(0));
    CHECK_THROWS_AS(Rat(1) / Rat(0), Error);

    // No silent overflow: 2^80 stays exact.
    Rat big(1);
    for (int i = 0; i < 80; ++i) big *= Rat(2);
    CHECK(big * Rat(1, BigInt(1) << 80) == Rat(1));
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-3/4") == Rat(-3, 4));
    CHECK(parse_rational("+7") == Rat(7));
    CHECK(parse_rational("0") == Rat(0));
    CHECK(parse_rational("10/4") == Rat(5, 2));
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1/"), Error);
    CHECK_THROWS_AS(parse_rational("a/b"), Error);
    CHECK_THROWS_AS(parse_rational("1 / 2"), Error);
}

TEST_CASE("parse_decimal is exact") {
    CHECK(parse_decimal("0.25") == Rat(1, 4));
    CHECK(parse_decimal("-0.5") == Rat(-1, 2));
    CHECK(parse_decimal(".5") == Rat(1, 2));
    CHECK(parse_decimal("1e-3") == Rat(1, 1000));
    CHECK(parse_decimal("2.5e2") == Rat(250));
    CHECK(parse_decimal("1E+2") == Rat(100));
    CHECK(parse_decimal("0.1") == Rat(1, 10));  // exact, unlike binary floating point
    CHECK_THROWS_AS(parse_decimal("1e"), Error);
    CHECK_THROWS_AS(parse_decimal("1.2.3"), Error);
    CHECK_THROWS_AS(parse_decimal("1e9999999"), Error);
}

TEST_CASE("numeric modes compare differently") {
    NumericMode exact = NumericMode::exact_mode();
    NumericMode loose = NumericMode::within(Rat(1, 100));
    CHECK(exact.eq(Rat(1, 3), Rat(1, 3)));
    CHECK_FALSE(exact.eq(Rat(1, 3), Rat(333, 1000)));
    CHECK(loose.eq(Rat(1, 3), Rat(333, 1000)));
    CHECK_FALSE(loose.eq(Rat(1, 3), Rat(3, 10)));
    CHECK(loose.is_one(Rat(995, 1000)));
    CHECK(loose.is_zero(Rat(1, 200)));
}

TEST_CASE("event sets") {
    EventSet a = EventSet::of(5, {0, 2, 4});
    CHECK(a.count() == 3);
    CHECK(a.contains(2));
    CHECK_FALSE(a.contains(1));
    CHECK(a.members() == std::vector<int>{0, 2, 4});
    CHECK(a.min_member() == 0);
    CHECK(a.complement() == EventSet::of(5, {1, 3}));
    CHECK(a.intersect(EventSet::of(5, {2, 3})) == EventSet::of(5, {2}));
    CHECK(a.unite(EventSet::of(5, {1})) == EventSet::of(5, {0, 1, 2, 4}));
    CHECK(EventSet::of(5, {0, 2}).subset_of(a));
    CHECK_FALSE(a.subset_of(EventSet::of(5, {0, 2})));
    CHECK(a.intersects(EventSet::of(5, {4})));
    CHECK_FALSE(a.intersects(EventSet::of(5, {1, 3})));
    CHECK(EventSet(3).empty());
    CHECK(EventSet(3).min_member() == -1);
    CHECK_THROWS_AS(EventSet(3).add(3), Error);
    CHECK_THROWS_AS(a.intersect(EventSet(4)), Error);
}

TEST_CASE("measure validation") {
    CHECK_THROWS_AS(Measure({Rat(1, 2), Rat(1, 3)}), Error);
    CHECK_THROWS_AS(Measure({Rat(3, 2), Rat(-1, 2)}), Error);
    Measure m({Rat(1, 2), Rat(1, 3), Rat(1, 6)});
    CHECK(m.size() == 3);
    CHECK(m[1] == Rat(1, 3));
    CHECK_THROWS_AS(m.at(3), Error);

    // A tolerance mode accepts near-1 totals that exact mode rejects.
    NumericMode loose = NumericMode::within(Rat(1, 100));
    std::vector<Rat> near{Rat(499, 1000), Rat(1, 2)};
    CHECK_THROWS_AS((Measure(near)), Error);
    CHECK_NOTHROW(Measure(near, loose));
}

TEST_CASE("measure helpers") {
    Measure m({Rat(1, 2), Rat(0), Rat(1, 2)});
    CHECK(support(m) == EventSet::of(3, {0, 2}));
    CHECK(measure_of_set(m, EventSet::of(3, {0, 1})) == Rat(1, 2));
    CHECK(point_mass(1, 3)[1] == Rat(1));
    CHECK(uniform_measure(4)[3] == Rat(1, 4));

    Measure cond = conditional_measure(m, EventSet::of(3, {0, 1}));
    CHECK(cond[0] == Rat(1));
    CHECK(cond[1] == Rat(0));
    CHECK_THROWS_AS(conditional_measure(m, EventSet::of(3, {1})), Error);
}

TEST_CASE("kernel validation and accessors") {
    CHECK_THROWS_AS(Kernel({{Rat(1)}, {Rat(1)}}), Error);                      // not square
    CHECK_THROWS_AS(Kernel({{Rat(1, 2), Rat(1, 3)}, {Rat(0), Rat(1)}}), Error);  // bad row sum
    CHECK_THROWS_AS(Kernel({{Rat(3, 2), Rat(-1, 2)}, {Rat(0), Rat(1)}}), Error);

    Kernel k({{Rat(1, 4), Rat(3, 4)}, {Rat(1), Rat(0)}});
    CHECK(k.size() == 2);
    CHECK(k.entry(0, 1) == Rat(3, 4));
    CHECK(k.row_mass(0, EventSet::of(2, {0, 1})) == Rat(1));
    CHECK(k.row_measure(1)[0] == Rat(1));
    CHECK_THROWS_AS(k.entry(2, 0), Error);

    CHECK(Kernel::identity(3).entry(2, 2) == Rat(1));
    Measure mu({Rat(1, 3), Rat(2, 3)});
    CHECK(Kernel::constant(mu).row(1) == mu.weights());
}

TEST_CASE("propagate and compose") {
    Measure nu({Rat(1, 2), Rat(1, 2)});
    Kernel swap({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    CHECK(propagate(nu, swap) == nu);
    CHECK(propagate(Measure({Rat(1), Rat(0)}), swap) == Measure({Rat(0), Rat(1)}));
    CHECK(compose(swap, swap) == Kernel::identity(2));

    Kernel k({{Rat(1, 2), Rat(1, 2)}, {Rat(0), Rat(1)}});
    // Associativity on a couple of mixed products.
    CHECK(compose(compose(k, swap), k) == compose(k, compose(swap, k)));
    CHECK_THROWS_AS(propagate(Measure({Rat(1)}), swap), Error);
}

TEST_CASE("instance parsing accepts the documented shape") {
    Instance inst = parse_instance(R"({
        "n": 2,
        "nu": ["1/3", "2/3"],
        "R": [[0, 1], ["1/2", "1/2"]],
        "partition": [[0], [1]]
    })");
    CHECK(inst.n == 2);
    CHECK(inst.mode == Mode::rational);
    CHECK(inst.nu[0] == Rat(1, 3));
    CHECK(inst.kernel->entry(1, 0) == Rat(1, 2));
    CHECK(inst.partition->block_count() == 2);
    CHECK_FALSE(inst.epsilon.has_value());
}

TEST_CASE("instance parsing rejects malformed documents") {
    CHECK_THROWS_AS(parse_instance("not json"), Error);
    CHECK_THROWS_AS(parse_instance(R"([1,2])"), Error);
    CHECK_THROWS_AS(parse_instance(R"({"nu": ["1"]})"), Error);                       // missing n
    CHECK_THROWS_AS(parse_instance(R"({"n": 0, "nu": []})"), Error);
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "nu": ["1/2","1/2"], "x": 1})"), Error);  // unknown key
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "nu": ["1/2"]})"), Error);             // wrong length
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "nu": ["1/2","1/3"]})"), Error);       // not a probability
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "nu": ["0.5","0.5"]})"), Error);       // decimal, rational mode
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "nu": [0.5, 0.5]})"), Error);          // raw float
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "nu": ["1/2","1/2"], "R": [[1,0]]})"), Error);
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "nu": ["1/2","1/2"], "partition": [[0]]})"), Error);
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "nu": ["1/2","1/2"], "partition": [[0],[2]]})"), Error);
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "nu": ["1/2","1/2"], "mode": "exact"})"), Error);
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "nu": ["1/2","1/2"], "epsilon": "1e-9"})"), Error);  // epsilon without float
}

TEST_CASE("float mode documents") {
    Instance inst = parse_instance(R"({
        "n": 2,
        "nu": ["0.5", "0.5"],
        "mode": "float"
    })");
    CHECK(inst.mode == Mode::floating);
    CHECK(inst.epsilon == parse_decimal("1e-9"));  // default injected
    CHECK(inst.nu[0] == Rat(1, 2));

    Instance tight = parse_instance(R"({
        "n": 2,
        "nu": ["0.333", "0.667"],
        "mode": "float",
        "epsilon": "1e-2"
    })");
    CHECK(tight.epsilon == Rat(1, 100));
    CHECK(tight.numeric_mode().eq(Rat(333, 1000), Rat(1, 3)));

    // The same weights are rejected once the tolerance is tightened.
    CHECK_THROWS_AS(parse_instance(R"({
        "n": 2,
        "nu": ["0.333", "0.666"],
        "mode": "float",
        "epsilon": "1e-9"
    })"),
                    Error);
}

TEST_CASE("serialize then parse is the identity") {
    const char* docs[] = {
        R"({"n": 1, "nu": [1]})",
        R"({"n": 3, "nu": ["1/2","1/4","1/4"], "R": [[1,0,0],[0,"1/2","1/2"],[0,"1/2","1/2"]]})",
        R"({"n": 2, "nu": ["1/2","1/2"], "partition": [[0,1]]})",
        R"({"n": 2, "nu": ["0.5","0.5"], "mode": "float", "epsilon": "1e-6"})",
    };
    for (const char* doc : docs) {
        Instance inst = parse_instance(doc);
        std::string text = serialize_instance(inst);
        Instance again = parse_instance(text);
        CHECK(again == inst);
        CHECK(serialize_instance(again) == text);
    }
}

TEST_CASE("serialization is deterministic and ends with a newline") {
    Instance inst = parse_instance(R"({"n": 2, "nu": ["1/2","1/2"]})");
    std::string a = serialize_instance(inst);
    std::string b = serialize_instance(inst);
    CHECK(a == b);
    CHECK(a.back() == '\n');
}
