#include <catch2/catch_amalgamated.hpp>

#include <concordia/concordia.hpp>

#include <string>
#include <vector>

using namespace concordia;
using knotdsl::ParseError;

namespace {

struct GoldenCase {
    const char* src;
    const char* canonical;
};

// canonical prints for well-formed sources
const std::vector<GoldenCase> golden_valid = {
    {"unknot", "unknot"},
    {"trefoil", "trefoil"},
    {"ltrefoil", "ltrefoil"},
    {"fig8", "fig8"},
    {"twist(2)", "twist(2)"},
    {"twist(10)", "twist(10)"},
    {"trefoil#fig8", "trefoil # fig8"},
    {"trefoil # fig8 # unknot", "trefoil # fig8 # unknot"},
    {"trefoil # (fig8 # unknot)", "trefoil # (fig8 # unknot)"},
    {"(trefoil)", "trefoil"},
    {"-trefoil", "-trefoil"},
    {"--trefoil", "--trefoil"},
    {"-(trefoil # fig8)", "-(trefoil # fig8)"},
    {"3 * ltrefoil", "3*ltrefoil"},
    {"0*trefoil", "0*trefoil"},
    {"1*unknot", "1*unknot"},
    {"2*(trefoil # -fig8)", "2*(trefoil # -fig8)"},
    {"mirror( trefoil )", "mirror(trefoil)"},
    {"rev(fig8)", "rev(fig8)"},
    {"rev(mirror(twist(2)))", "rev(mirror(twist(2)))"},
    {"cable(2; trefoil)", "cable(2; trefoil)"},
    {"cable(-2; twist(3))", "cable(-2; twist(3))"},
    {"cable(2; trefoil # fig8)", "cable(2; trefoil # fig8)"},
    {"sat(0, 2; trefoil; fig8)", "sat(0, 2; trefoil; fig8)"},
    {"sat(-1,3;unknot;trefoil)", "sat(-1, 3; unknot; trefoil)"},
    {"sat(2, 4; fig8; trefoil)", "sat(2, 4; fig8; trefoil)"},
};

struct ErrorCase {
    const char* src;
    size_t line;
    size_t col;
    const char* fragment;
};

const std::vector<ErrorCase> golden_errors = {
    {"", 1, 1, "expected a knot expression, found end of input"},
    {"trefoil #", 1, 10, "expected a knot expression, found end of input"},
    {"bogus", 1, 1, "unknown name 'bogus'"},
    {"twist(0)", 1, 1, "twist parameter must be >= 1"},
    {"twist()", 1, 7, "expected integer, found ')'"},
    {"sat(2, 1; unknot; unknot)", 1, 1, "satellite needs geometric winding >= |winding|"},
    {"sat(1, 2; unknot; unknot)", 1, 1, "satellite windings must agree mod 2"},
    {"cable(2 trefoil)", 1, 9, "expected ';', found 'trefoil'"},
    {"cable(2; )", 1, 10, "expected a knot expression, found ')'"},
    {"trefoil )", 1, 9, "expected '#' or end of input, found ')'"},
    {"3*", 1, 3, "expected a knot expression, found end of input"},
    {"((trefoil)", 1, 11, "expected ')', found end of input"},
    {"twist(99999999999999999999)", 1, 7, "integer literal out of range"},
    {"5trefoil", 1, 2, "expected '*', found 'trefoil'"},
    {"trefoil @ fig8", 1, 9, "unexpected character '@'"},
    {"mirror trefoil", 1, 8, "expected '(', found 'trefoil'"},
    {"trefoil #\n  bogus", 2, 3, "unknown name 'bogus'"},
};

}  // namespace

TEST_CASE("golden sources print canonically") {
    for (const auto& g : golden_valid) {
        INFO(g.src);
        CHECK(knotdsl::print(*knotdsl::parse(g.src)) == g.canonical);
    }
}

TEST_CASE("printing then parsing is the identity on canonical forms") {
    for (const auto& g : golden_valid) {
        INFO(g.src);
        std::string once = knotdsl::print(*knotdsl::parse(g.src));
        CHECK(knotdsl::print(*knotdsl::parse(once)) == once);
        KnotValue a = knotdsl::eval_string(g.src);
        KnotValue b = knotdsl::eval_string(once);
        CHECK(sigfn_equal(a.sigfn, b.sigfn));
        CHECK(a.slice_ub == b.slice_ub);
        CHECK(a.label == once);
    }
}

TEST_CASE("golden errors carry position and message") {
    for (const auto& e : golden_errors) {
        INFO(e.src);
        try {
            knotdsl::parse(e.src);
            FAIL("expected a parse error for: " << e.src);
        } catch (const ParseError& err) {
            CHECK(err.line == e.line);
            CHECK(err.col == e.col);
            CHECK(std::string(err.what()).find(e.fragment) != std::string::npos);
            // what() leads with the position
            std::string head =
                "line " + std::to_string(e.line) + ", col " + std::to_string(e.col) + ": ";
            CHECK(std::string(err.what()).substr(0, head.size()) == head);
        }
    }
}

TEST_CASE("evaluation is a homomorphism on sums and multiples") {
    KnotValue sum = knotdsl::eval_string("trefoil # fig8");
    SignatureFunction expect = combine({{Int(1), knotdsl::eval_string("trefoil").sigfn},
                                        {Int(1), knotdsl::eval_string("fig8").sigfn}});
    CHECK(sigfn_equal(sum.sigfn, expect));
    REQUIRE(sum.seifert.has_value());
    CHECK(sum.seifert->n == 4);

    KnotValue twice = knotdsl::eval_string("2*trefoil");
    KnotValue sum2 = knotdsl::eval_string("trefoil # trefoil");
    CHECK(sigfn_equal(twice.sigfn, sum2.sigfn));
    CHECK(twice.slice_ub == sum2.slice_ub);

    KnotValue three = knotdsl::eval_string("3*ltrefoil");
    CHECK(sup_abs(three.sigfn) == 6);
    CHECK(three.slice_ub == 3);
    KnotValue iterated = knotdsl::eval_string("ltrefoil # ltrefoil # ltrefoil");
    CHECK(sigfn_equal(three.sigfn, iterated.sigfn));

    KnotValue zero = knotdsl::eval_string("0*trefoil");
    CHECK(sup_abs(zero.sigfn) == 0);
    CHECK(zero.slice_ub == 0);
}

TEST_CASE("evaluation of involutions") {
    KnotValue t = knotdsl::eval_string("trefoil");
    CHECK(sigfn_equal(knotdsl::eval_string("-trefoil").sigfn, sigfn_negate(t.sigfn)));
    CHECK(sigfn_equal(knotdsl::eval_string("mirror(trefoil)").sigfn, sigfn_negate(t.sigfn)));
    CHECK(sigfn_equal(knotdsl::eval_string("rev(trefoil)").sigfn, t.sigfn));
    CHECK(sigfn_equal(knotdsl::eval_string("--trefoil").sigfn, t.sigfn));
    CHECK(sigfn_equal(knotdsl::eval_string("mirror(trefoil)").sigfn,
                      knotdsl::eval_string("ltrefoil").sigfn));
}

TEST_CASE("evaluation of satellites") {
    KnotValue c2 = knotdsl::eval_string("cable(2; trefoil)");
    CHECK(sigfn_equal(c2.sigfn, pullback_power(knotdsl::eval_string("trefoil").sigfn, 2)));
    CHECK_FALSE(c2.seifert.has_value());
    CHECK(c2.label == "cable(2; trefoil)");

    KnotValue cu = knotdsl::eval_string("cable(3; unknot)");
    REQUIRE(cu.seifert.has_value());
    CHECK(cu.seifert->n == 0);

    // winding zero satellites evaluate to the pattern's function
    KnotValue s0 = knotdsl::eval_string("sat(0, 2; trefoil; fig8)");
    CHECK(sigfn_equal(s0.sigfn, knotdsl::eval_string("trefoil").sigfn));

    KnotValue s11 = knotdsl::eval_string("sat(1, 1; fig8; trefoil)");
    CHECK(sigfn_equal(s11.sigfn, knotdsl::eval_string("fig8 # trefoil").sigfn));
    CHECK_FALSE(s11.seifert.has_value());

    KnotValue s24 = knotdsl::eval_string("sat(2, 4; fig8; trefoil)");
    SignatureFunction expect =
        combine({{Int(1), knotdsl::eval_string("fig8").sigfn},
                 {Int(1), pullback_power(knotdsl::eval_string("trefoil").sigfn, 2)}});
    CHECK(sigfn_equal(s24.sigfn, expect));
}

TEST_CASE("labels are the canonical print") {
    CHECK(knotdsl::eval_string("cable(2;trefoil)").label == "cable(2; trefoil)");
    CHECK(knotdsl::eval_string("twist(3)").label == "twist(3)");
    CHECK(knotdsl::eval_string("trefoil#trefoil").label == "trefoil # trefoil");
}

TEST_CASE("ast json carries kinds, parameters and spans") {
    ordered_json j = knotdsl::ast_to_json(*knotdsl::parse("3*ltrefoil"));
    CHECK(j["kind"] == "times");
    CHECK(j["n"] == 3);
    CHECK(j["span"]["line"] == 1);
    CHECK(j["span"]["col"] == 1);
    CHECK(j["kids"][0]["kind"] == "generator");
    CHECK(j["kids"][0]["name"] == "ltrefoil");
    CHECK(j["kids"][0]["span"]["col"] == 3);

    ordered_json s = knotdsl::ast_to_json(*knotdsl::parse("sat(0, 2; trefoil; fig8)"));
    CHECK(s["kind"] == "sat");
    CHECK(s["w"] == 0);
    CHECK(s["gw"] == 2);
    CHECK(s["kids"].size() == 2);

    ordered_json t = knotdsl::ast_to_json(*knotdsl::parse("twist(4)"));
    CHECK(t["kind"] == "generator");
    CHECK(t["param"] == 4);

    ordered_json two = knotdsl::ast_to_json(*knotdsl::parse("trefoil #\nfig8"));
    CHECK(two["kids"][1]["span"]["line"] == 2);
}
