#include <catch2/catch_amalgamated.hpp>

#include <concordia/concordia.hpp>

using namespace concordia;

namespace {

KnotValue trefoil() { return knot_from_matrix(trefoil_matrix(), "trefoil"); }

std::vector<KnotValue> names(std::initializer_list<const char*> ls) {
    std::vector<KnotValue> out;
    for (const char* s : ls) out.push_back(knotdsl::eval_string(s));
    return out;
}

}  // namespace

TEST_CASE("merging jump sets dedupes and separates") {
    SignatureFunction t = signature_function(trefoil_matrix());
    SignatureFunction t3 = signature_function(twist_matrix(3));
    SignatureFunction l = signature_function(left_trefoil_matrix());

    auto both = merge_jump_sets({&t, &t3});
    REQUIRE(both.size() == 2);
    CHECK(both[0].iv.hi < both[1].iv.lo);
    CHECK(compare_root_to_point(both[0].poly, both[0].iv, make_rational(1, 2)) == 0);
    CHECK(compare_root_to_point(both[1].poly, both[1].iv, make_rational(5, 6)) == 0);

    // the trefoil and its mirror share the jump location
    CHECK(merge_jump_sets({&t, &l}).size() == 1);
    CHECK(merge_jump_sets({&t, &t}).size() == 1);
    CHECK(merge_jump_sets({}).empty());

    SignatureFunction spread = pullback_power(t, 2);
    auto three = merge_jump_sets({&spread, &t});
    REQUIRE(three.size() == 3);
    CHECK(three[0].iv.hi < three[1].iv.lo);
    CHECK(three[1].iv.hi < three[2].iv.lo);
}

TEST_CASE("pythagorean witness points between algebraic cuts") {
    SignatureFunction t = signature_function(trefoil_matrix());
    SignatureFunction spread = pullback_power(t, 2);
    auto cuts = merge_jump_sets({&spread, &t});
    REQUIRE(cuts.size() == 3);

    // between 1/2 and sqrt(3)/2 the minimal point is (3/5, 4/5)
    CirclePoint mid = pythagorean_point_between(&cuts[1], &cuts[2]);
    CHECK(mid.c == make_rational(3, 5));
    CHECK(mid.s == make_rational(4, 5));

    // open ends fall back to the circle boundary
    CirclePoint leftmost = pythagorean_point_between(nullptr, &cuts[0]);
    CHECK(leftmost.c < cuts[0].iv.lo);
    CirclePoint rightmost = pythagorean_point_between(&cuts[2], nullptr);
    CHECK(rightmost.c > cuts[2].iv.hi);
    CirclePoint whole = pythagorean_point_between(nullptr, nullptr);
    CHECK(whole.c == 0);
    CHECK(whole.s == 1);
}

TEST_CASE("witness selection does not depend on interval width") {
    // shrink the isolating intervals far below the rational gap and confirm
    // the same minimal point is found through exact root comparisons
    SignatureFunction t = signature_function(trefoil_matrix());
    SignatureFunction spread = pullback_power(t, 2);
    auto cuts = merge_jump_sets({&spread, &t});
    for (int i = 0; i < 25; ++i) {
        cuts[1].iv = refine_interval(cuts[1].poly, cuts[1].iv);
        cuts[2].iv = refine_interval(cuts[2].poly, cuts[2].iv);
    }
    CirclePoint mid = pythagorean_point_between(&cuts[1], &cuts[2]);
    CHECK(mid.c == make_rational(3, 5));
    CHECK(mid.s == make_rational(4, 5));
}

TEST_CASE("circle point json round trip") {
    CirclePoint w(make_rational(-4, 5), make_rational(3, 5));
    ordered_json j = circle_point_to_json(w);
    CHECK(j["c"] == "-4/5");
    CHECK(j["s"] == "3/5");
    CirclePoint back = circle_point_from_json(j);
    CHECK(back.c == w.c);
    CHECK(back.s == w.s);
    ordered_json off = j;
    off["s"] = "4/5";
    CHECK_THROWS_AS(circle_point_from_json(off), std::domain_error);
}

TEST_CASE("operator records round trip") {
    for (const SatelliteOperator& op :
         {make_cable_operator(-2), make_connected_sum_operator(trefoil()),
          make_satellite_operator(2, 4, knotdsl::eval_string("fig8 # trefoil"), "fig8 # trefoil")}) {
        ordered_json rec = operator_record(op);
        SatelliteOperator back = operator_from_record(rec);
        CHECK(back.w == op.w);
        CHECK(back.gw == op.gw);
        CHECK(sigfn_equal(back.pattern.sigfn, op.pattern.sigfn));
        CHECK(operator_record(back).dump() == rec.dump());
    }
}

TEST_CASE("separation certificate for the pinned instance") {
    Certificate c = operator_separation(2, 1, Rational(3));
    REQUIRE(c.pass);
    ordered_json j = certificate_to_json(c);
    CHECK(j["schema"] == "concordia.certificate/1");
    CHECK(j["kind"] == "separation");
    CHECK(j["parameters"]["companion"] == "7*ltrefoil");
    CHECK(j["parameters"]["E"] == "3/1");
    const auto& w = j["witnesses"][0];
    CHECK(w["omega"]["c"] == "3/5");
    CHECK(w["omega"]["s"] == "4/5");
    CHECK(w["sigma_m"] == 14);
    CHECK(w["sigma_n"] == 0);
    CHECK(w["difference"] == 14);
    CHECK(w["threshold"] == "6/1");
    CHECK(reverify(j));
}

TEST_CASE("separation works across further windings") {
    CHECK(operator_separation(3, 2, Rational(1)).pass);
    CHECK(operator_separation(-2, 3, Rational(2)).pass);
    CHECK(operator_separation(0, 2, make_rational(1, 2)).pass);
    CHECK_THROWS_AS(operator_separation(2, 2, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(operator_separation(2, -2, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(operator_separation(2, 1, Rational(-1)), std::domain_error);
    CHECK_THROWS_AS(operator_separation(2, 1, Rational(1), 0), std::domain_error);
}

TEST_CASE("oversized margins fail without building the stack") {
    // margin 100 would need 201 left trefoils, past the default cap of 64
    Certificate sep = operator_separation(1, 2, Rational(100));
    CHECK_FALSE(sep.pass);
    REQUIRE(sep.witnesses.size() == 1);
    CHECK(sep.witnesses[0]["stage"] == "search");
    CHECK(std::string(sep.witnesses[0]["reason"]).find("exceeds the search cap") !=
          std::string::npos);
    CHECK_FALSE(reverify(certificate_to_json(sep)));

    CHECK_FALSE(operator_separation(1, 2, Rational(3), 5).pass);
    CHECK(operator_separation(1, 2, Rational(3), 7).pass);

    Certificate nm = not_multiplication(2, 2, Rational(100));
    CHECK_FALSE(nm.pass);
    REQUIRE(nm.witnesses.size() == 1);
    CHECK(nm.witnesses[0]["stage"] == "search");
    CHECK(not_multiplication(2, 2, Rational(3), 7).pass);
}

TEST_CASE("separation reverification rejects tampering") {
    ordered_json j = certificate_to_json(operator_separation(2, 1, Rational(3)));
    ordered_json bad = j;
    bad["witnesses"][0]["sigma_m"] = 12;
    CHECK_FALSE(reverify(bad));
    ordered_json moved = j;
    moved["witnesses"][0]["omega"]["c"] = "0/1";
    moved["witnesses"][0]["omega"]["s"] = "1/1";
    CHECK_FALSE(reverify(moved));
    ordered_json fake_verdict = j;
    fake_verdict["verdict"] = "fail";
    CHECK_FALSE(reverify(fake_verdict));
    ordered_json schema = j;
    schema["schema"] = "concordia.certificate/2";
    CHECK_FALSE(reverify(schema));
    ordered_json kind = j;
    kind["kind"] = "mystery";
    CHECK_FALSE(reverify(kind));
}

TEST_CASE("not multiplication certificates for the pinned instances") {
    Certificate a = not_multiplication(2, 1, Rational(2));
    REQUIRE(a.pass);
    ordered_json ja = certificate_to_json(a);
    CHECK(ja["witnesses"][0]["k"] == 5);
    CHECK(ja["witnesses"][0]["companion"] == "5*ltrefoil");
    CHECK(ja["witnesses"][0]["omega"]["c"] == "-1/1");
    CHECK(ja["witnesses"][0]["defect"] == -10);
    CHECK(ja["witnesses"][0]["threshold"] == "4/1");
    CHECK(reverify(ja));

    Certificate b = not_multiplication(0, 2, Rational(1));
    REQUIRE(b.pass);
    ordered_json jb = certificate_to_json(b);
    CHECK(jb["witnesses"][0]["k"] == 2);
    CHECK(jb["witnesses"][0]["omega"]["c"] == "0/1");
    CHECK(jb["witnesses"][0]["sigma"] == 4);
    CHECK(jb["witnesses"][0]["sigma_pullback"] == 4);
    CHECK(reverify(jb));

    Certificate c = not_multiplication(1, 2, Rational(1));
    REQUIRE(c.pass);
    ordered_json jc = certificate_to_json(c);
    CHECK(jc["witnesses"][0]["k"] == 2);
    CHECK(jc["witnesses"][0]["companion"] == "2*ltrefoil");
    CHECK(jc["witnesses"][0]["omega"]["c"] == "3/5");
    CHECK(jc["witnesses"][0]["sigma"] == 0);
    CHECK(jc["witnesses"][0]["sigma_pullback"] == 4);
    CHECK(jc["witnesses"][0]["defect"] == 4);
    CHECK(reverify(jc));
}

TEST_CASE("not multiplication guards and the search cap") {
    CHECK_THROWS_AS(not_multiplication(0, 0, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(not_multiplication(1, 1, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(not_multiplication(1, -1, Rational(1)), std::domain_error);

    Certificate capped = not_multiplication(0, 2, Rational(5), 1);
    CHECK_FALSE(capped.pass);
    CHECK_FALSE(reverify(certificate_to_json(capped)));
}

TEST_CASE("not multiplication reverification rejects tampering") {
    ordered_json j = certificate_to_json(not_multiplication(1, 2, Rational(1)));
    ordered_json bad = j;
    bad["witnesses"][0]["defect"] = 6;
    CHECK_FALSE(reverify(bad));
    ordered_json widened = j;
    widened["parameters"]["E"] = "3/1";
    CHECK_FALSE(reverify(widened));
}

TEST_CASE("quasiflat certificate for the pinned instance") {
    Certificate c = quasiflat_certificate(3, 2);
    REQUIRE(c.pass);
    ordered_json j = certificate_to_json(c);
    CHECK(j["parameters"]["n"] == 3);
    CHECK(j["parameters"]["radius"] == 2);
    CHECK(j["parameters"]["knots"].dump() == "[\"twist(1)\",\"twist(2)\",\"twist(3)\"]");
    CHECK(j["parameters"]["matrix"].dump() == "[[-2,-2,-2],[0,-2,-2],[0,0,-2]]");
    CHECK(j["parameters"]["basis"].dump() == "[[1,-1,0],[0,1,-1],[0,0,1]]");
    CHECK(j["parameters"]["omegas"][0]["c"] == "5/13");
    CHECK(j["parameters"]["omegas"][1]["c"] == "3/5");
    CHECK(j["parameters"]["omegas"][2]["c"] == "4/5");
    // 5^3 - 1 lattice points
    CHECK(j["witnesses"].size() == 124);
    const auto& first = j["witnesses"][0];
    CHECK(first["x"].dump() == "[-2,-2,-2]");
    CHECK(first["lower_bound"] == "2/1");
    CHECK(first["lower"] == "2/1");
    CHECK(first["upper"] == "2/1");
    CHECK(first["upper_bound"] == "18/1");
    CHECK(first["ok"] == true);
    for (const auto& w : j["witnesses"]) CHECK(w["ok"] == true);
    CHECK(reverify(j));
}

TEST_CASE("quasiflat output is independent of the job count") {
    ordered_json a = certificate_to_json(quasiflat_certificate(3, 2, 1));
    ordered_json b = certificate_to_json(quasiflat_certificate(3, 2, 3));
    CHECK(a.dump() == b.dump());
}

TEST_CASE("quasiflat csv export") {
    ordered_json j = certificate_to_json(quasiflat_certificate(3, 2));
    std::string csv = quasiflat_csv(j);
    size_t nl = csv.find('\n');
    CHECK(csv.substr(0, nl) == "x1,x2,x3,lower_bound,lower,upper,upper_bound,ok");
    size_t nl2 = csv.find('\n', nl + 1);
    CHECK(csv.substr(nl + 1, nl2 - nl - 1) == "-2,-2,-2,2/1,2/1,2/1,18/1,true");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 125);
    CHECK_THROWS_AS(quasiflat_csv(certificate_to_json(operator_separation(2, 1, Rational(1)))),
                    std::domain_error);
}

TEST_CASE("quasiflat guards") {
    CHECK_THROWS_AS(quasiflat_certificate(0, 2), std::domain_error);
    CHECK_THROWS_AS(quasiflat_certificate(3, 0), std::domain_error);
    CHECK_THROWS_AS(quasiflat_certificate_with({}, 1), std::domain_error);
}

TEST_CASE("quasiflat fails honestly on a duplicated generator") {
    std::vector<KnotValue> ks;
    ks.push_back(knot_from_matrix(twist_matrix(1), "twist(1)"));
    ks.push_back(knot_from_matrix(twist_matrix(1), "twist(1)"));
    ks.push_back(knot_from_matrix(twist_matrix(2), "twist(2)"));
    Certificate c = quasiflat_certificate_with(ks, 1);
    CHECK_FALSE(c.pass);
    CHECK(c.witnesses[0]["stage"] == "triangularization");
    CHECK_FALSE(reverify(certificate_to_json(c)));
}

TEST_CASE("quasiflat reverification rejects tampering") {
    ordered_json j = certificate_to_json(quasiflat_certificate(2, 1));
    CHECK(reverify(j));
    ordered_json bad = j;
    bad["parameters"]["matrix"][0][0] = -4;
    CHECK_FALSE(reverify(bad));
    ordered_json row = j;
    row["witnesses"][0]["upper"] = "100/1";
    CHECK_FALSE(reverify(row));
    ordered_json knots = j;
    knots["parameters"]["knots"][0] = "bogus";
    CHECK_FALSE(reverify(knots));
}

TEST_CASE("winding zero certificate") {
    SatelliteOperator op = make_satellite_operator(0, 2, trefoil(), "pat0");
    Certificate c = winding_zero_bounded(
        op, names({"unknot", "trefoil", "ltrefoil", "fig8", "twist(2)"}));
    REQUIRE(c.pass);
    ordered_json j = certificate_to_json(c);
    CHECK(j["parameters"]["bound"] == "4/1");
    CHECK(j["parameters"]["op"]["w"] == 0);
    CHECK(j["parameters"]["op"]["gw"] == 2);
    CHECK(j["parameters"]["op"]["pattern"] == "trefoil");
    CHECK(reverify(j));

    // every image carries the pattern's function, byte for byte
    std::string image_dump;
    size_t images = 0;
    for (const auto& w : j["witnesses"]) {
        if (w["type"] != "image") continue;
        ++images;
        if (image_dump.empty()) image_dump = w["sigfn"].dump();
        CHECK(w["sigfn"].dump() == image_dump);
    }
    CHECK(images == 5);

    CHECK_THROWS_AS(winding_zero_bounded(make_cable_operator(2), names({"unknot", "trefoil"})),
                    std::domain_error);
    CHECK_THROWS_AS(winding_zero_bounded(op, names({"unknot"})), std::domain_error);
}

TEST_CASE("bounded distance certificates") {
    auto sample = names({"unknot", "trefoil", "ltrefoil", "fig8", "twist(2)", "twist(3)"});

    Certificate c2 = bounded_distance_consistency(make_cable_operator(2), sample);
    REQUIRE(c2.pass);
    ordered_json j2 = certificate_to_json(c2);
    CHECK_FALSE(j2["parameters"].contains("reported_constants"));
    CHECK(reverify(j2));

    Certificate cs = bounded_distance_consistency(make_connected_sum_operator(trefoil()), sample);
    REQUIRE(cs.pass);
    ordered_json js = certificate_to_json(cs);
    REQUIRE(js["parameters"].contains("reported_constants"));
    CHECK(js["parameters"]["reported_constants"]["A"] == "1/1");
    CHECK(js["parameters"]["reported_constants"]["B"] == "2/1");
    CHECK(js["parameters"]["reported_constants"]["C"] == "1/1");
    CHECK(js["parameters"]["bound"] == "1/1");
    CHECK(reverify(js));

    Certificate rv = bounded_distance_consistency(make_reverse_operator(), sample);
    CHECK(rv.pass);
    Certificate z = bounded_distance_consistency(make_zero_operator(), sample);
    CHECK(z.pass);

    CHECK_THROWS_AS(bounded_distance_consistency(make_cable_operator(2), {}), std::domain_error);

    ordered_json bad = js;
    bad["parameters"]["bound"] = "9/1";
    CHECK_FALSE(reverify(bad));
}

TEST_CASE("reverify rejects garbage") {
    CHECK_FALSE(reverify(ordered_json::object()));
    CHECK_FALSE(reverify(ordered_json::parse(R"({"schema":"x","kind":"separation"})")));
}
