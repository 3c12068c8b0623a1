#include <doctest.h>

#include "yb/io.hpp"
#include "yb/refdata.hpp"

using namespace yb;

TEST_CASE("matrix JSON round trip preserves exact rationals") {
    Mat m(2, 3);
    m.at(0, 0) = Scalar::parse("1/2");
    m.at(0, 2) = Scalar::parse("-3/7");
    m.at(1, 1) = Scalar(5);
    const Json j = matrix_to_json(m);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    CHECK(j["entries"][0][0] == "1/2");
    CHECK(matrix_from_json(j) == m);

    // Integer literals are accepted on input alongside strings.
    const Json mixed = parse_json_text(
        R"({"rows":1,"cols":2,"entries":[[3,"4/6"]]})", "inline");
    const Mat got = matrix_from_json(mixed);
    CHECK(got.at(0, 0) == Scalar(3));
    CHECK(got.at(0, 1) == Scalar::parse("2/3"));  // canonicalized
}

TEST_CASE("matrix CSV round trip and malformed CSV rejection") {
    Mat m(2, 2);
    m.at(0, 0) = Scalar::parse("-1/3");
    m.at(1, 1) = Scalar(2);
    const std::string csv = matrix_to_csv(m);
    CHECK(csv == "-1/3,0\n0,2\n");
    CHECK(matrix_from_csv(csv) == m);

    CHECK_THROWS_AS(matrix_from_csv("1,2\n3\n"), ParseError);     // ragged row
    CHECK_THROWS_AS(matrix_from_csv("1,x\n"), ParseError);        // bad literal
}

TEST_CASE("algebra JSON round trips for both arities") {
    const LeibnizAlgebra e = two_dim_leibniz(2);
    const AnyAlgebra back = algebra_from_json(algebra_to_json(e));
    REQUIRE(std::holds_alternative<LeibnizAlgebra>(back));
    CHECK(std::get<LeibnizAlgebra>(back) == e);

    const ThreeLeibnizAlgebra oct = octonion_3leibniz();
    const Json j = algebra_to_json(oct);
    CHECK(j["arity"] == 3);
    CHECK(j["dim"] == 8);
    const AnyAlgebra back3 = algebra_from_json(j);
    REQUIRE(std::holds_alternative<ThreeLeibnizAlgebra>(back3));
    CHECK(std::get<ThreeLeibnizAlgebra>(back3) == oct);

    // Repeated entries accumulate instead of overwriting.
    const Json split = parse_json_text(
        R"({"dim":1,"arity":2,"brackets":[
             {"in":[1,1],"out":[{"basis":1,"coeff":"1/3"}]},
             {"in":[1,1],"out":[{"basis":1,"coeff":"2/3"}]}]})",
        "inline");
    const auto acc = std::get<LeibnizAlgebra>(algebra_from_json(split));
    CHECK(sparse_str(acc.bracket_basis(0, 0)) == "1*b1");
}

TEST_CASE("rack JSON round trips for both arities") {
    const FiniteRack r = s3_conjugation_rack();
    const AnyRack back = rack_from_json(rack_to_json(r));
    REQUIRE(std::holds_alternative<FiniteRack>(back));
    CHECK(std::get<FiniteRack>(back).table == r.table);

    const Finite3Rack t = z4_module_3rack();
    const AnyRack back3 = rack_from_json(rack_to_json(t));
    REQUIRE(std::holds_alternative<Finite3Rack>(back3));
    CHECK(std::get<Finite3Rack>(back3).table == t.table);
}

TEST_CASE("coalgebra and rack-structure JSON round trips") {
    const Coalgebra c = primitive_coalgebra(2);
    const Coalgebra cb = coalgebra_from_json(coalgebra_to_json(c));
    CHECK(cb.dim == c.dim);
    CHECK(cb.delta == c.delta);
    CHECK(cb.counit == c.counit);

    const LinearRackStruct lr = leibniz_linear_rack(two_dim_leibniz(3));
    const LinearRackStruct lrb = linear_rack_from_json(linear_rack_to_json(lr));
    CHECK(lrb.op == lr.op);
    CHECK(lrb.tilde == lr.tilde);
    CHECK(lrb.coalg.delta == lr.coalg.delta);

    const TrilinearRackStruct tr = threeleibniz_trilinear_rack(two_dim_3leibniz());
    const TrilinearRackStruct trb = trilinear_rack_from_json(trilinear_rack_to_json(tr));
    CHECK(trb.t == tr.t);
    CHECK(trb.ttilde == tr.ttilde);
    CHECK(trb.coalg.counit == tr.coalg.counit);
}

TEST_CASE("verification reports and diffs serialize with 1-based witnesses") {
    Mat perm(4, 4);
    const long img[4] = {0, 1, 3, 2};
    for (long c = 0; c < 4; ++c) perm.at(img[c], c) = Scalar(1);
    const Json rep = report_to_json(verify_ybe(perm, 2));
    CHECK(rep["subject"] == "Yang-Baxter relation");
    CHECK(rep["ok"] == false);
    CHECK(rep["index_base"] == 1);
    CHECK(rep["violations"][0]["rule"] == "braid-relation");
    CHECK(rep["violations"][0]["where"] == Json::array({1, 2, 1}));

    const YbeOperator r = solution_3lei_fundamental(two_dim_3leibniz());
    const Json diff = diff_to_json(compare_to_reference(r, ref_matrix_25x25()));
    CHECK(diff["rows"] == 25);
    CHECK(diff["index_base"] == 1);
    CHECK(diff["cells"].size() == 2);
    CHECK(diff["cells"][0]["row"] == 18);
    CHECK(diff["cells"][0]["col"] == 14);
    CHECK(diff["cells"][0].contains("note"));
}

TEST_CASE("operator exports are self-describing and byte-stable") {
    auto build = [] {
        LeibnizAlgebra abelian1;
        abelian1.dim = 1;
        abelian1.c.assign(1, Scalar(0));
        Mat omega(1, 1);
        omega.at(0, 0) = Scalar(1);
        CentralWitness one(2);
        one[0] = Scalar(1);
        return solution_from_central_leibniz(central_extension(abelian1, omega), one);
    };
    const std::string src = "{\"dim\":1}";
    const YbeOperator r = build();
    const Json j = operator_to_json(r, src, "inline.json");
    CHECK(j["provenance"]["builder"] == "solution_from_central_leibniz");
    CHECK(j["provenance"]["source"] == "inline.json");
    CHECK(j["provenance"]["source_hash"] ==
          "fnv1a64:" + fnv1a64_hex(src));
    CHECK(std::string(j["provenance"]["basis_order"]).find("left factor most significant") !=
          std::string::npos);
    CHECK(j["base_dim"] == 2);
    CHECK(matrix_from_json(j["matrix"]) == r.matrix());
    CHECK(matrix_from_json(j["inverse"]) == invert(r.matrix()));

    // Rebuilding from scratch yields byte-identical text.
    const std::string text = json_to_text(j);
    CHECK(text == json_to_text(operator_to_json(build(), src, "inline.json")));
    CHECK(text.back() == '\n');
    // Parsing and re-dumping is also stable.
    CHECK(json_to_text(parse_json_text(text, "roundtrip")) == text);
}

TEST_CASE("malformed inputs are rejected with typed parse errors") {
    CHECK_THROWS_AS(matrix_from_json(parse_json_text(R"({"cols":1,"entries":[]})", "x")),
                    ParseError);
    CHECK_THROWS_AS(
        matrix_from_json(parse_json_text(R"({"rows":1,"cols":1,"entries":[["q"]]})", "x")),
        ParseError);
    CHECK_THROWS_AS(
        algebra_from_json(parse_json_text(R"({"dim":2,"arity":4,"brackets":[]})", "x")),
        ParseError);
    CHECK_THROWS_AS(algebra_from_json(parse_json_text(
                        R"({"dim":2,"arity":2,"brackets":[
                             {"in":[1,3],"out":[{"basis":1,"coeff":"1"}]}]})",
                        "x")),
                    ParseError);
    CHECK_THROWS_AS(algebra_from_json(parse_json_text(
                        R"({"dim":2,"arity":2,"brackets":[
                             {"in":[1,2],"out":[{"basis":5,"coeff":"1"}]}]})",
                        "x")),
                    ParseError);
    CHECK_THROWS_AS(rack_from_json(parse_json_text(R"({"size":2,"arity":2,"table":[0,1]})", "x")),
                    ParseError);
    CHECK_THROWS_AS(parse_json_text("{not json", "somewhere"), ParseError);
    CHECK_THROWS_AS(read_text_file("/nonexistent/path/file.json"), ParseError);

    try {
        parse_json_text("{", "ctx-label");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("ctx-label") != std::string::npos);
    }
}

TEST_CASE("the export fingerprint matches the published test vectors") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}
