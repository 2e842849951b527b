#include "traceforms/json_io.hpp"

#include "traceforms/common.hpp"

namespace traceforms {

Json to_json(const QSeries& f) {
    Json coeffs = Json::array();
    for (const Rat& c : f.coeffs()) coeffs.push_back(rat_str(c));
    return Json{{"offset24", f.offset24()}, {"coeffs", std::move(coeffs)}, {"prec", f.prec()}};
}

QSeries qseries_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("offset24") || !j.contains("coeffs"))
        throw ParseError("series JSON needs offset24 and coeffs");
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rat(c.get<std::string>()));
    if (j.contains("prec") && j.at("prec").get<long>() != (long)coeffs.size())
        throw ParseError("series JSON prec disagrees with coefficient count");
    return QSeries(j.at("offset24").get<long>(), std::move(coeffs));
}

Json to_json(const ConversionTable& t) {
    Json entries = Json::object();
    for (long m = t.n; m <= t.mmax; ++m) entries[std::to_string(m)] = rat_str(t.at(m));
    return Json{{"wt", t.wt}, {"n", t.n}, {"entries", std::move(entries)}};
}

ConversionTable conversion_table_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("wt") || !j.contains("n") || !j.contains("entries"))
        throw ParseError("conversion table JSON needs wt, n, entries");
    ConversionTable t;
    t.wt = j.at("wt").get<long>();
    t.n = j.at("n").get<long>();
    t.mmax = t.n - 1;
    for (const auto& [key, value] : j.at("entries").items()) {
        long m = 0;
        try {
            m = std::stol(key);
        } catch (...) {
            throw ParseError("bad mode index '" + key + "' in conversion table JSON");
        }
        if (m < t.n) throw ParseError("conversion table entry below its starting mode");
        t.entries[m] = parse_rat(value.get<std::string>());
        t.mmax = std::max(t.mmax, m);
    }
    return t;
}

Json to_json(const FormSpace& space) {
    Json basis = Json::array();
    for (const QSeries& f : space.basis) basis.push_back(to_json(f));
    return Json{{"weight", space.weight}, {"dim", space.dim()}, {"basis", std::move(basis)}};
}

Json to_json(const OracleReport& rep) {
    Json j{{"check", rep.check},
           {"algebra", rep.algebra},
           {"level", rat_str(rep.level)},
           {"draws", rep.draws},
           {"seed", rep.seed},
           {"status", rep.pass ? "pass" : "fail"}};
    if (!rep.pass) j["witness"] = rep.witness;
    return j;
}

OracleReport oracle_report_from_json(const Json& j) {
    OracleReport rep;
    rep.check = j.at("check").get<std::string>();
    rep.algebra = j.at("algebra").get<std::string>();
    rep.level = parse_rat(j.at("level").get<std::string>());
    rep.draws = j.at("draws").get<int>();
    rep.seed = j.value("seed", 0UL);
    std::string status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw ParseError("status must be pass or fail");
    rep.pass = (status == "pass");
    rep.witness = j.value("witness", std::string());
    return rep;
}

}  // namespace traceforms
