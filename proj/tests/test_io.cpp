#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "ctfrob/io.hpp"

using namespace ctf;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_quiver_file(text);
    } catch (const QuiverError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse a plain quiver") {
    ParsedFile pf = parse_quiver_file(
        "# a triangle\n"
        "vertices 3\n"
        "arrow a 1 2\n"
        "arrow b 2 3   # inline comment\n"
        "arrow c 3 1\n");
    CHECK(pf.quiver.num_vertices() == 3);
    CHECK(pf.quiver.arrows().size() == 3);
    CHECK(pf.quiver.has_arrow(3, 1));
    CHECK(pf.relations.empty());
}

TEST_CASE("parse explicit relations") {
    ParsedFile pf = parse_quiver_file(
        "vertices 4\n"
        "arrow a 1 2\narrow b 2 3\narrow c 3 1\narrow d 2 4\narrow e 4 1\n"
        "zero 1 2 3\n"
        "comm 1 2 3 = 1 2 3\n");
    REQUIRE(pf.relations.size() == 2);
    CHECK(pf.relations[0].kind == Relation::Kind::Zero);
    CHECK(pf.relations[0].first == Path{1, 2, 3});
    CHECK(pf.relations[1].kind == Relation::Kind::Comm);
    CHECK(pf.relations[1].second == Path{1, 2, 3});
}

TEST_CASE("error messages carry line numbers") {
    CHECK(error_of("vertices 2\nfrobnicate\n").find("line 2") != std::string::npos);
    CHECK(error_of("arrow a 1 2\n").find("line 1") != std::string::npos);
    CHECK(error_of("vertices 2\narrow a 1 x\n").find("'x'") != std::string::npos);
    CHECK(error_of("vertices 2\narrow a 1 2 junk\n").find("'junk'") != std::string::npos);
    CHECK(error_of("vertices 2\nvertices 3\n").find("duplicate") != std::string::npos);
    CHECK(error_of("vertices 2\narrow a 1 2\nzero 1 2\n").find("line 3") != std::string::npos);
    CHECK(error_of("vertices 2\narrow a 1 2\ncomm 1 2 1 2\n").find("'='") != std::string::npos);
    CHECK(error_of("").find("vertices") != std::string::npos);
    // Relation lines are checked against the quiver.
    CHECK(error_of("vertices 3\narrow a 1 2\nzero 1 2 3\n").find("line 3") !=
          std::string::npos);
}

TEST_CASE("invalid quivers are rejected at parse time") {
    CHECK_THROWS_AS(parse_quiver_file("vertices 1\narrow a 1 1\n"), QuiverError);
    CHECK_THROWS_AS(parse_quiver_file("vertices 2\narrow a 1 2\narrow b 2 1\n"),
                    QuiverError);
    CHECK_THROWS_AS(parse_quiver_file("vertices 2\narrow a 1 3\n"), QuiverError);
}

TEST_CASE("print and reparse round-trips") {
    ParsedFile pf = parse_quiver_file(
        "vertices 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\nzero 1 2 3\n");
    std::string text = print_quiver(pf.quiver);
    for (const Relation& r : pf.relations) text += print_relation(r) + "\n";
    ParsedFile again = parse_quiver_file(text);
    CHECK(again.quiver == pf.quiver);
    CHECK(again.relations == pf.relations);
}

TEST_CASE("path and relation printing") {
    CHECK(print_path({1, 2, 3}) == "1 2 3");
    CHECK(print_path({7}) == "7");
    Relation z{Relation::Kind::Zero, {1, 2, 3}, {}};
    CHECK(print_relation(z) == "zero 1 2 3");
    Relation c{Relation::Kind::Comm, {1, 2, 4}, {1, 3, 4}};
    CHECK(print_relation(c) == "comm 1 2 4 = 1 3 4");
}
