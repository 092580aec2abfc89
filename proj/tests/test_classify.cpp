#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "ctfrob/classify.hpp"
#include "ctfrob/generators.hpp"
#include "ctfrob/io.hpp"

using namespace ctf;

namespace {

Quiver make(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<Arrow> arrows;
    for (auto [s, t] : arcs)
        arrows.push_back({"a" + std::to_string(s) + "_" + std::to_string(t), s, t});
    return Quiver(n, std::move(arrows));
}

}  // namespace

TEST_CASE("membership in the A class") {
    CHECK(is_mutation_class_A(gen::linear_A(5)).ok);
    CHECK(is_mutation_class_A(gen::linear_A(5, 0b0101)).ok);
    CHECK(is_mutation_class_A(gen::saturated_three_cycle()).ok);
    CHECK(is_mutation_class_A(gen::lineal_freecycle(3)).ok);
    CHECK(is_mutation_class_A(gen::example_pair_first()).ok);
    CHECK(is_mutation_class_A(gen::example_pair_second()).ok);
    CHECK(is_mutation_class_A(gen::big_example()).ok);

    ACheck long_cycle = is_mutation_class_A(gen::d3_cycle());
    CHECK_FALSE(long_cycle.ok);
    CHECK(long_cycle.reason.find("cycle of length 4") != std::string::npos);

    ACheck shared = is_mutation_class_A(gen::d2_core());
    CHECK_FALSE(shared.ok);
    CHECK(shared.reason.find("valency three") != std::string::npos);

    ACheck tree3 = is_mutation_class_A(gen::e6_tree());
    CHECK_FALSE(tree3.ok);
    CHECK(tree3.reason.find("valency three") != std::string::npos);

    Quiver star = make(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}});
    ACheck high = is_mutation_class_A(star);
    CHECK_FALSE(high.ok);
    CHECK(high.reason.find("valency 5") != std::string::npos);

    CHECK_THROWS_AS(is_mutation_class_A(make(3, {{1, 2}})), QuiverError);
}

TEST_CASE("connecting vertices") {
    CHECK(connecting_vertices(gen::linear_A(3)) == std::vector<int>{1, 3});
    CHECK(connecting_vertices(gen::saturated_three_cycle()) == std::vector<int>{1, 2, 3});
    // On the freecycle the tail start and every triangle vertex of valency 2.
    Quiver fc = gen::lineal_freecycle(2);  // tail 1->2->a, triangle a,b,c
    CHECK(connecting_vertices(fc) == std::vector<int>{1, 4, 5});
}

TEST_CASE("type D sub-type I") {
    auto w = classify_D(gen::d1_fork(2));
    REQUIRE(w.has_value());
    CHECK(w->subtype == 1);
    CHECK(w->c == 3);
    CHECK(std::min(w->a, w->b) == 4);
    CHECK(std::max(w->a, w->b) == 5);
    CHECK(classify(gen::d1_fork(1)).tag == ClassLabel::Tag::TypeD_I);
    CHECK(classify(gen::d1_fork(1)).hereditary);
}

TEST_CASE("type D sub-type II") {
    auto w = classify_D(gen::d2_example(1, 1));
    REQUIRE(w.has_value());
    CHECK(w->subtype == 2);
    CHECK(w->d == 1);
    CHECK(w->c == 2);
    CHECK(w->b == 3);
    CHECK(w->a == 4);
    CHECK(classify(gen::d2_example(2, 0)).tag == ClassLabel::Tag::TypeD_II);
}

TEST_CASE("type D sub-type III") {
    auto w = classify_D(gen::d3_example(1, 1, 1, 1));
    REQUIRE(w.has_value());
    CHECK(w->subtype == 3);
    CHECK(w->c == 1);
    CHECK(w->b == 2);
    CHECK(w->d == 3);
    CHECK(w->a == 4);
}

TEST_CASE("type D sub-type IV") {
    auto w = classify_D(gen::d4_cycle(5, 0b00101));
    REQUIRE(w.has_value());
    CHECK(w->subtype == 4);
    CHECK(w->central == std::vector<int>{1, 2, 3, 4, 5});
    REQUIRE(w->spike.size() == 5);
    CHECK(w->spike[0] != 0);
    CHECK(w->spike[1] == 0);
    CHECK(w->spike[2] != 0);
    CHECK(w->spike[3] == 0);
    CHECK(w->spike[4] == 0);

    // The bare cores with no residual parts also land in sub-type IV.
    CHECK(classify(gen::d2_core()).tag == ClassLabel::Tag::TypeD_IV);
    CHECK(classify(gen::d3_cycle()).tag == ClassLabel::Tag::TypeD_IV);
}

TEST_CASE("classification of A members and unknowns") {
    ClassLabel a = classify(gen::linear_A(4));
    CHECK(a.tag == ClassLabel::Tag::TypeA);
    CHECK(a.hereditary);
    ClassLabel fc = classify(gen::lineal_freecycle(1));
    CHECK(fc.tag == ClassLabel::Tag::TypeA);
    CHECK_FALSE(fc.hereditary);

    Quiver star = make(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}});
    CHECK(classify(star).tag == ClassLabel::Tag::Unknown);

    CHECK_THROWS_AS(classify(make(3, {{1, 2}})), QuiverError);
}

TEST_CASE("E6 template matching") {
    const auto& tpls = e6_templates();
    REQUIRE(tpls.size() == 21);
    for (std::size_t i = 0; i < tpls.size(); ++i) CHECK(tpls[i].index == static_cast<int>(i) + 1);

    auto m = match_E6(gen::e6_tree());
    REQUIRE(m.has_value());
    CHECK(m->template_index == 1);
    REQUIRE(m->map.size() == 7);

    ClassLabel l = classify(gen::e6_tree());
    CHECK(l.tag == ClassLabel::Tag::TypeE6);
    CHECK(l.hereditary);
    REQUIRE(l.e6.has_value());

    CHECK_FALSE(match_E6(gen::linear_A(6)).has_value());
    CHECK_FALSE(match_E6(gen::d3_cycle()).has_value());

    std::string data = e6_template_data_text();
    CHECK(data.find("template 1") != std::string::npos);
    CHECK(data.find("template 21") != std::string::npos);
}

TEST_CASE("mutating the tree stays inside the template table") {
    Quiver q = gen::e6_tree();
    for (int k : {3, 1, 6, 4}) {
        q = mutate(q, k);
        auto m = match_E6(q);
        REQUIRE(m.has_value());
    }
}
