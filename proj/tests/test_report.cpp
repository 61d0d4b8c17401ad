#include <doctest.h>

#include "hopfkit/gallery.hpp"
#include "hopfkit/report.hpp"

using namespace hopfkit;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_SUITE("report") {

TEST_CASE("empty merge is empty; merging a failure flips the summary") {
    Report a, b;
    a.merge(b);
    CHECK(a.checks.empty());
    CHECK(a.ok());
    a.add(Check::ok("x", "law"));
    b.add(Check::fail("y", "law", {1, 2}, "lhs = [0], rhs = [1]"));
    a.merge(b);
    CHECK(a.checks.size() == 2);
    CHECK(!a.ok());
    CHECK(a.passed() == 1);
    CHECK(a.failed() == 1);
}

TEST_CASE("failures always carry their witness in both renderings") {
    Report r;
    r.add(Check::fail("some.check", "lhs = rhs", {0, 3}, "lhs = [1], rhs = [0]"));
    std::string table = r.render_table();
    CHECK(table.find("witness (0,3)") != std::string::npos);
    std::string json = r.render_json();
    CHECK(json.find("\"witness\"") != std::string::npos);
}

TEST_CASE("JSON rendering round-trips losslessly") {
    Report r;
    r.add(Check::ok("a.b", "x = y", "note"));
    r.add(Check::fail("c.d", "u = v", {1, 0, 2}, "lhs = [1/2], rhs = [0]"));
    r.solution_space_dim = 5;
    Report back = Report::parse_json(r.render_json());
    REQUIRE(back.checks.size() == r.checks.size());
    for (size_t i = 0; i < r.checks.size(); ++i) {
        CHECK(back.checks[i].id == r.checks[i].id);
        CHECK(back.checks[i].law == r.checks[i].law);
        CHECK(back.checks[i].pass == r.checks[i].pass);
        CHECK(back.checks[i].witness == r.checks[i].witness);
        CHECK(back.checks[i].detail == r.checks[i].detail);
    }
    CHECK(back.solution_space_dim == r.solution_space_dim);
}

TEST_CASE("a galois-check report survives the JSON round-trip") {
    Report rep = yd::is_quantum_galois(gallery::build_bicomodule("kc2_delta_delta", Q));
    Report back = Report::parse_json(rep.render_json());
    CHECK(back.checks.size() == rep.checks.size());
    CHECK(back.ok() == rep.ok());
    CHECK(Report::parse_json(back.render_json()).render_json() == rep.render_json());
}

TEST_CASE("tampered summary counts are rejected on parse") {
    Report r;
    r.add(Check::ok("a", "l"));
    std::string json = r.render_json();
    auto pos = json.find("\"pass\": 1");
    REQUIRE(pos != std::string::npos);
    json.replace(pos, 9, "\"pass\": 7");
    CHECK_THROWS_AS(Report::parse_json(json), std::invalid_argument);
}

TEST_CASE("render rejects unknown formats") {
    Report r;
    CHECK_THROWS_AS(r.render("xml"), std::invalid_argument);
}

}  // TEST_SUITE
