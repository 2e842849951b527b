#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "traceforms/json_io.hpp"

using namespace traceforms;

TEST_CASE("series JSON carries exact rationals both ways") {
    QSeries g2 = g2_series(12);
    Json j = to_json(g2);
    CHECK(j.at("offset24").get<long>() == 0);
    CHECK(j.at("prec").get<long>() == 12);
    CHECK(j.at("coeffs")[0].get<std::string>() == "-1/12");
    CHECK(qseries_from_json(j) == g2);

    QSeries eta = eta_pow(1, 8);
    CHECK(to_json(eta).at("offset24").get<long>() == 1);
    CHECK(qseries_from_json(to_json(eta)) == eta);

    // Round-trip through the printed byte stream, not just the DOM.
    std::string text = to_json(j_series(20)).dump();
    CHECK(qseries_from_json(Json::parse(text)) == j_series(20));
}

TEST_CASE("series JSON roundtrip on random rationals") {
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<long> num(-400, 400), den(1, 60), off(-48, 48), len(1, 25);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rat> coeffs;
        long n = len(rng);
        for (long i = 0; i < n; ++i) coeffs.push_back(frac(num(rng), den(rng)));
        QSeries f(off(rng), coeffs);
        CHECK(qseries_from_json(Json::parse(to_json(f).dump())) == f);
    }
}

TEST_CASE("series JSON rejects malformed input") {
    CHECK_THROWS_AS(qseries_from_json(Json::parse(R"({"coeffs": ["1"]})")), ParseError);
    CHECK_THROWS_AS(qseries_from_json(Json::parse(R"({"offset24": 0, "coeffs": ["1"], "prec": 7})")),
                    ParseError);
    CHECK_THROWS_AS(qseries_from_json(Json::parse(R"({"offset24": 0, "coeffs": ["x/y"]})")),
                    ParseError);
}

TEST_CASE("conversion table JSON roundtrip") {
    for (long wt = 1; wt <= 4; ++wt)
        for (long n = -1; n <= 3; ++n) {
            ConversionTable t = square_from_round(wt, n, 9);
            ConversionTable back = conversion_table_from_json(Json::parse(to_json(t).dump()));
            CHECK(back.wt == t.wt);
            CHECK(back.n == t.n);
            CHECK(back.mmax == t.mmax);
            for (long m = t.n; m <= t.mmax; ++m) CHECK(back.at(m) == t.at(m));
        }

    Json j = to_json(square_from_round(1, -1, 4));
    CHECK(j.at("entries").at("-1").get<std::string>() == "1");
    CHECK(j.at("entries").at("1").get<std::string>() == "-1/12");
    CHECK(j.at("entries").at("3").get<std::string>() == "-19/720");
}

TEST_CASE("form space JSON lists an exact basis") {
    Json j = to_json(mk_space(12, 20));
    CHECK(j.at("weight").get<long>() == 12);
    CHECK(j.at("dim").get<long>() == 2);
    REQUIRE(j.at("basis").size() == 2);
    for (const auto& b : j.at("basis")) {
        QSeries f = qseries_from_json(b);
        CHECK(membership(mk_space(12, 20), f).member);
    }
}

TEST_CASE("oracle report JSON keeps status and witness discipline") {
    OracleReport rep;
    rep.check = "square_bracket_expansion";
    rep.algebra = "sl2";
    rep.level = frac(5, 2);
    rep.draws = 20;
    rep.seed = 20260814;
    rep.pass = true;
    Json j = to_json(rep);
    CHECK(j.at("level").get<std::string>() == "5/2");
    CHECK(j.at("status").get<std::string>() == "pass");
    CHECK(!j.contains("witness"));
    OracleReport back = oracle_report_from_json(j);
    CHECK(back.check == rep.check);
    CHECK(back.level == rep.level);
    CHECK(back.pass);
    CHECK(back.seed == rep.seed);

    rep.pass = false;
    rep.witness = "q^2 coefficient of h(-1)h(-1)|0> differs";
    Json jf = to_json(rep);
    CHECK(jf.at("status").get<std::string>() == "fail");
    CHECK(jf.at("witness").get<std::string>() == rep.witness);
    CHECK_FALSE(oracle_report_from_json(jf).pass);
    CHECK(oracle_report_from_json(jf).witness == rep.witness);

    jf["status"] = "maybe";
    CHECK_THROWS_AS(oracle_report_from_json(jf), ParseError);
}
