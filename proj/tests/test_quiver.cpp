#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ctfrob/generators.hpp"
#include "ctfrob/quiver.hpp"

using namespace ctf;

namespace {

Quiver make(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<Arrow> arrows;
    for (auto [s, t] : arcs)
        arrows.push_back({"a" + std::to_string(s) + "_" + std::to_string(t), s, t});
    return Quiver(n, std::move(arrows));
}

}  // namespace

TEST_CASE("construction rejects invalid quivers") {
    CHECK_THROWS_AS(make(2, {{1, 1}}), QuiverError);            // loop
    CHECK_THROWS_AS(make(2, {{1, 2}, {2, 1}}), QuiverError);    // 2-cycle
    CHECK_THROWS_AS(Quiver(2, {{"a", 1, 2}, {"b", 1, 2}}), QuiverError);
    CHECK_THROWS_AS(make(2, {{1, 3}}), QuiverError);            // vertex range
    CHECK_THROWS_AS(Quiver(2, {{"a", 1, 2}, {"a", 2, 1}}), QuiverError);
    CHECK_THROWS_AS(Quiver(0, {}), QuiverError);
}

TEST_CASE("adjacency and degree queries") {
    Quiver q = gen::example_pair_first();  // 1->2, 2->5, 5->1, 2->3, 4->3
    CHECK(q.has_arrow(1, 2));
    CHECK_FALSE(q.has_arrow(2, 1));
    CHECK(q.valency(2) == 3);
    CHECK(q.valency(4) == 1);
    CHECK(q.is_source(4));
    CHECK(q.is_sink(3));
    CHECK(q.out_neighbors(2) == std::vector<int>{3, 5});
    CHECK(q.in_neighbors(3) == std::vector<int>{2, 4});
    CHECK(q.is_path({1, 2, 3}));
    CHECK_FALSE(q.is_path({1, 3}));
    CHECK(q.is_path({5}));
    CHECK(q.connected());
    CHECK_FALSE(q.acyclic());
    CHECK(gen::linear_A(4).acyclic());
}

TEST_CASE("cycle detection") {
    Quiver q = gen::example_pair_first();
    auto tc = q.three_cycles();
    REQUIRE(tc.size() == 1);
    CHECK(tc[0] == std::array<int, 3>{1, 2, 5});
    CHECK(q.on_three_cycle(1, 2));
    CHECK_FALSE(q.on_three_cycle(2, 3));

    Quiver c4 = gen::d3_cycle();
    CHECK(c4.three_cycles().empty());
    auto sc = c4.simple_cycles();
    REQUIRE(sc.size() == 1);
    CHECK(sc[0] == std::vector<int>{1, 2, 3, 4});

    Quiver big = gen::big_example();
    CHECK(big.three_cycles().size() == 4);
}

TEST_CASE("sink mutation reverses arrows") {
    Quiver q = make(2, {{1, 2}});
    Quiver m = mutate(q, 2);
    CHECK(m.has_arrow(2, 1));
    CHECK_FALSE(m.has_arrow(1, 2));
}

TEST_CASE("mutation reproduces the five-vertex example") {
    Quiver q = gen::example_pair_first();
    Quiver m = mutate(q, 4);
    auto iso = is_isomorphic(m, gen::example_pair_first_mutated());
    REQUIRE(iso.has_value());
    // Here the two quivers agree vertex for vertex.
    CHECK(m == gen::example_pair_first_mutated());
}

TEST_CASE("mutation is an involution up to identity") {
    for (const Quiver& q : {gen::example_pair_first(), gen::example_pair_second(),
                            gen::lineal_freecycle(2), gen::d2_example(1, 1)}) {
        for (int k = 1; k <= q.num_vertices(); ++k) {
            Quiver twice = mutate(mutate(q, k), k);
            auto iso = is_isomorphic(twice, q);
            REQUIRE(iso.has_value());
            for (int v = 1; v <= q.num_vertices(); ++v) CHECK((*iso)[v] == v);
        }
    }
}

TEST_CASE("isomorphism and canonical forms") {
    Quiver a = make(3, {{1, 2}, {2, 3}});
    Quiver b = make(3, {{2, 1}, {1, 3}});  // relabeled copy
    Quiver c = make(3, {{1, 2}, {3, 2}});  // different shape
    auto iso = is_isomorphic(a, b);
    REQUIRE(iso.has_value());
    CHECK((*iso)[1] == 2);
    CHECK_FALSE(is_isomorphic(a, c).has_value());
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(c));

    auto witness = is_isomorphic(gen::big_example(), gen::big_example());
    CHECK(witness.has_value());
}

TEST_CASE("mutation class of A_3 has four members") {
    auto cls = enumerate_mutation_class(gen::linear_A(3), 100);
    CHECK(cls.size() == 4);
}

TEST_CASE("mutation class is closed under mutation") {
    auto cls = enumerate_mutation_class(gen::linear_A(4), 100);
    for (const Quiver& q : cls) {
        for (int k = 1; k <= q.num_vertices(); ++k) {
            Quiver m = mutate(q, k);
            bool found = false;
            for (const Quiver& other : cls)
                if (is_isomorphic(m, other)) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("enumeration aborts beyond the limit") {
    CHECK_THROWS_AS(enumerate_mutation_class(gen::linear_A(5), 3), QuiverError);
}
