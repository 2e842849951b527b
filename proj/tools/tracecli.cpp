// Command-line front end: exact q-expansions, modular-form bases, root-system
// trace tables, and the verification suites, all with machine-readable output.
// Exit codes: 0 success, 1 check failure, 2 usage error.
#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "traceforms/json_io.hpp"
#include "traceforms/verify.hpp"
#include "traceforms/voatrace.hpp"

using namespace traceforms;

namespace {

// Render `terms` successive grid exponents starting at the leading one,
// e.g. "q^-1 + 0 + 196884q" or "q^(1/24) - q^(25/24)".
std::string render_series(const QSeries& f, long terms) {
    terms = std::min(terms, f.prec());
    std::string s;
    for (long i = 0; i < terms; ++i) {
        const Rat& c = f.coeffs()[i];
        long e24 = f.offset24() + 24 * i;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;

        std::string power;
        if (e24 != 0) {
            if (e24 % 24 == 0) {
                long e = e24 / 24;
                power = (e == 1) ? "q" : "q^" + std::to_string(e);
            } else {
                power = "q^(" + rat_str(frac(e24, 24)) + ")";
            }
        }
        std::string term;
        if (c == 0)
            term = "0", neg = false;
        else if (power.empty())
            term = rat_str(a);
        else if (a == 1)
            term = power;
        else
            term = rat_str(a) + power;

        if (s.empty())
            s = (neg ? "-" : "") + term;
        else
            s += (neg ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<Rat> parse_levels(const std::string& levels_str) {
    if (levels_str.empty()) return {Rat(1), Rat(2), frac(5, 2), Rat(3), frac(7, 3)};
    return parse_rat_list(levels_str);
}

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

// --------------------------------------------------------------------------

int cmd_qexp(const std::string& form_name, long terms, long dim_v1, const std::string& fmt) {
    NamedForm form = NamedForm::parse(form_name);  // ParseError -> usage
    if (form.kind == NamedForm::Kind::Z1) form.param = dim_v1;
    QSeries f = form.expand(std::max<long>(terms, 1));
    if (fmt == "json")
        emit(to_json(f));
    else
        std::cout << render_series(f, terms) << "\n";
    return 0;
}

int cmd_basis(long weight, bool cusp, long prec, const std::string& fmt) {
    FormSpace space = cusp ? cusp_space(weight, prec) : mk_space(weight, prec);
    if (fmt == "json") {
        emit(to_json(space));
    } else {
        std::cout << (cusp ? "cusp forms" : "forms") << ", weight " << space.weight << ", dim "
                  << space.dim() << "\n";
        for (const QSeries& f : space.basis) std::cout << "  " << render_series(f, 8) << "\n";
    }
    return 0;
}

int cmd_pspace(long charge, long weight, long prec, const std::string& fmt) {
    PSpace ps = p_space(charge, weight, prec);
    if (fmt == "json") {
        Json basis = Json::array();
        for (const QSeries& f : ps.basis) basis.push_back(to_json(f));
        emit(Json{{"charge", ps.c},
                  {"weight", ps.k},
                  {"form_weight", ps.form_weight},
                  {"dim", ps.dim()},
                  {"basis", std::move(basis)}});
    } else {
        std::cout << "charge " << ps.c << ", weight " << ps.k << " (form weight "
                  << ps.form_weight << "), dim " << ps.dim() << "\n";
        for (const QSeries& f : ps.basis) std::cout << "  " << render_series(f, 8) << "\n";
    }
    return 0;
}

int cmd_delta_module(const std::string& gen_name, long wmax, long prec, const std::string& fmt) {
    NamedForm form = NamedForm::parse(gen_name);
    long weight = 0;
    switch (form.kind) {
        case NamedForm::Kind::One: weight = 0; break;
        case NamedForm::Kind::Eisenstein: weight = form.param; break;
        case NamedForm::Kind::Delta: weight = 12; break;
        default:
            throw ParseError("generator must be a holomorphic form: 1, G<k> or delta");
    }
    DeltaModuleReport rep = delta_module_closure({{form.expand(prec), weight}}, wmax, prec);
    if (fmt == "json") {
        Json dims = Json::object();
        for (const auto& [w, d] : rep.dims) dims[std::to_string(w)] = d;
        emit(Json{{"generator", form.name()}, {"wmax", wmax}, {"dims", std::move(dims)}});
    } else if (fmt == "csv") {
        std::cout << "weight,dim\n";
        for (const auto& [w, d] : rep.dims) std::cout << w << "," << d << "\n";
    } else {
        for (const auto& [w, d] : rep.dims)
            std::cout << "weight " << w << ": dim " << d << "\n";
    }
    return 0;
}

int cmd_convert(long wt, long mode, long mmax, const std::string& fmt) {
    if (mmax < mode) mmax = mode + 6;
    ConversionTable sq = square_from_round(wt, mode, mmax);
    ConversionTable rd = round_from_square(wt, mode, mmax);
    if (fmt == "json") {
        emit(Json{{"square_from_round", to_json(sq)}, {"round_from_square", to_json(rd)}});
    } else {
        std::cout << "a[" << mode << "] in round modes, weight " << wt << ":\n";
        for (long m = mode; m <= mmax; ++m)
            std::cout << "  a(" << m << "): " << rat_str(sq.at(m)) << "\n";
        std::cout << "a(" << mode << ") in square modes, weight " << wt << ":\n";
        for (long m = mode; m <= mmax; ++m)
            std::cout << "  a[" << m << "]: " << rat_str(rd.at(m)) << "\n";
    }
    return 0;
}

struct TraceRow {
    std::string type;
    int rank;
    long dim;
    long kappa;
    Rat trace;
    std::string level;  // "p/q" or "undefined" at dim 24
    bool match;
};

TraceRow trace_row(RootType t, const std::string& letter, int rank) {
    SweepRow row = classical_sweep(t, rank, rank).at(0);
    RootSystem rs = RootSystem::build(t, rank);
    TraceRow r{letter, rank, rs.lie_dim(), kappa_hh(rs), row.trace, "", row.match};
    try {
        r.level = rat_str(level_ratio(rs));
    } catch (const DegenerateRatio&) {
        r.level = "undefined";
    }
    return r;
}

int cmd_trace(const std::string& type_str, int rank, const std::string& fmt) {
    RootType t = parse_root_type(type_str);
    int lmin, lmax;
    if (rank > 0) {
        lmin = lmax = rank;
    } else {
        lmin = (t == RootType::B) ? 2 : (t == RootType::D) ? 4 : 3;
        lmax = 12;
    }
    std::vector<TraceRow> rows;
    for (int l = lmin; l <= lmax; ++l) rows.push_back(trace_row(t, type_str, l));

    if (fmt == "json") {
        Json arr = Json::array();
        for (const TraceRow& r : rows)
            arr.push_back(Json{{"type", r.type},
                               {"rank", r.rank},
                               {"dim", r.dim},
                               {"kappa", r.kappa},
                               {"trace", rat_str(r.trace)},
                               {"level", r.level},
                               {"closed_form_match", r.match}});
        emit(arr);
    } else if (fmt == "csv") {
        std::cout << "type,rank,dim,kappa,trace,level\n";
        for (const TraceRow& r : rows)
            std::cout << r.type << "," << r.rank << "," << r.dim << "," << r.kappa << ","
                      << rat_str(r.trace) << "," << r.level << "\n";
    } else if (rank > 0) {
        std::cout << rat_str(rows[0].trace) << "\n";
    } else {
        for (const TraceRow& r : rows)
            std::cout << r.type << r.rank << ": " << rat_str(r.trace) << "\n";
    }
    for (const TraceRow& r : rows)
        if (!r.match) return 1;
    return 0;
}

int cmd_four_design(int draws, unsigned long seed, const std::string& fmt) {
    std::vector<FourDesignReport> reports;
    for (const RootSystem& rs : augmented_types())
        reports.push_back(four_design_check(rs, draws, seed));
    if (fmt == "json") {
        Json arr = Json::array();
        for (const FourDesignReport& r : reports)
            arr.push_back(Json{{"name", r.name},
                               {"trials", r.trials},
                               {"failures", r.failures},
                               {"degenerate", r.degenerate},
                               {"seed", r.seed},
                               {"all_zero", r.all_zero}});
        emit(arr);
    } else if (fmt == "csv") {
        std::cout << "name,trials,failures,degenerate,seed,all_zero\n";
        for (const FourDesignReport& r : reports)
            std::cout << r.name << "," << r.trials << "," << r.failures << "," << r.degenerate
                      << "," << r.seed << "," << (r.all_zero ? "true" : "false") << "\n";
    } else {
        for (const FourDesignReport& r : reports)
            std::cout << r.name << ": " << (r.all_zero ? "all zero" : "NONZERO") << " ("
                      << r.trials << " trials, " << r.degenerate << " degenerate, seed "
                      << r.seed << ")\n";
    }
    for (const FourDesignReport& r : reports)
        if (!r.all_zero) return 1;
    return 0;
}

int cmd_level(bool all, const std::string& type_str, const std::string& fmt) {
    std::vector<RootSystem> systems;
    if (!type_str.empty())
        systems.push_back(RootSystem::parse(type_str));
    else if (all)
        systems = augmented_types();
    else
        return usage_error("level needs --all or --type");

    struct Row {
        std::string name, level;
        bool integral;
    };
    std::vector<Row> rows;
    for (const RootSystem& rs : systems) {
        try {
            Rat level = level_ratio(rs);
            rows.push_back({rs.name, rat_str(level), level.get_den() == 1});
        } catch (const DegenerateRatio&) {
            rows.push_back({rs.name, "undefined", false});
        }
    }
    if (fmt == "json") {
        Json arr = Json::array();
        for (const Row& r : rows)
            arr.push_back(Json{{"name", r.name}, {"level", r.level}, {"integral", r.integral}});
        emit(arr);
    } else if (fmt == "csv") {
        std::cout << "name,level,integral\n";
        for (const Row& r : rows)
            std::cout << r.name << "," << r.level << "," << (r.integral ? "true" : "false")
                      << "\n";
    } else {
        for (const Row& r : rows)
            std::cout << r.name << " " << r.level << (r.integral ? " (integral)" : "") << "\n";
    }
    return 0;
}

int cmd_y_alpha(const std::string& fmt) {
    std::vector<YAlphaReport> rows = y_alpha_all();
    if (fmt == "json") {
        Json arr = Json::array();
        for (const YAlphaReport& r : rows)
            arr.push_back(Json{{"name", r.name},
                               {"n", rat_str(r.n)},
                               {"kappa", rat_str(r.kappa)},
                               {"trace_h4", rat_str(r.tr_h4)},
                               {"C", rat_str(r.C)},
                               {"v0", rat_str(r.v0)},
                               {"v1", rat_str(r.v1_direct)},
                               {"factor1", rat_str(r.factor1)},
                               {"factor2", rat_str(r.factor2)},
                               {"vanishes", r.vanishes}});
        emit(arr);
    } else if (fmt == "csv") {
        std::cout << "name,n,kappa,trace_h4,C,v0,v1,factor1,factor2,vanishes\n";
        for (const YAlphaReport& r : rows)
            std::cout << r.name << "," << rat_str(r.n) << "," << rat_str(r.kappa) << ","
                      << rat_str(r.tr_h4) << "," << rat_str(r.C) << "," << rat_str(r.v0) << ","
                      << rat_str(r.v1_direct) << "," << rat_str(r.factor1) << ","
                      << rat_str(r.factor2) << "," << (r.vanishes ? "true" : "false") << "\n";
    } else {
        for (const YAlphaReport& r : rows)
            std::cout << r.name << ": C = " << rat_str(r.C) << ", v0 = " << rat_str(r.v0)
                      << ", v1 = " << rat_str(r.v1_direct)
                      << (r.vanishes ? "  [VANISHES]" : "") << "\n";
    }
    for (const YAlphaReport& r : rows)
        if (r.v0 != 0 || r.v1_direct != r.v1_composed || r.v1_direct != r.v1_factored) return 1;
    return 0;
}

int cmd_abelian(long prec, const std::string& fmt) {
    AbelianReport rep = abelian_report(prec);
    if (fmt == "json") {
        emit(Json{{"a4_v0", rep.a4_v0.str()},
                  {"a4_v1", rep.a4_v1.str()},
                  {"a22_v0", rep.a22_v0.str()},
                  {"a22_v1", rep.a22_v1.str()},
                  {"combo_v0", rep.combo_v0.str()},
                  {"combo_v1", rep.combo_v1.str()},
                  {"z_a22_head", rat_str(rep.z_a22_per_s.coeff(-1)) + " q^-1 + " +
                                     rat_str(rep.z_a22_per_s.coeff(0)) + " + ..."},
                  {"consistent", rep.consistent}});
    } else {
        std::cout << "tr o(a[-1]^4):   degree 0: " << rep.a4_v0.str()
                  << "   degree 1: " << rep.a4_v1.str() << "\n";
        std::cout << "tr o(a[-2]^2):   degree 0: " << rep.a22_v0.str()
                  << "   degree 1: " << rep.a22_v1.str() << "\n";
        std::cout << "2a[-1]^4 + 5s a[-2]^2: degree 0: " << rep.combo_v0.str()
                  << "   degree 1: " << rep.combo_v1.str() << "\n";
        std::cout << (rep.consistent ? "consistent" : "INCONSISTENT") << "\n";
    }
    return rep.consistent ? 0 : 1;
}

int cmd_oracle_verify(const std::string& algebra, const std::string& levels_str, int draws,
                      unsigned long seed, const std::string& fmt) {
    std::vector<LieAlgebra> algebras;
    if (algebra == "sl2" || algebra == "both") algebras.push_back(sl2());
    if (algebra == "sl3" || algebra == "both") algebras.push_back(sl3());
    if (algebras.empty()) return usage_error("--algebra must be sl2, sl3 or both");

    std::vector<OracleReport> reports;
    for (const LieAlgebra& g : algebras)
        for (const Rat& level : parse_levels(levels_str)) {
            reports.push_back(verify_expansion(g, level, draws, seed));
            reports.push_back(verify_general_traces(g, level, draws, seed));
        }
    if (fmt == "json") {
        Json arr = Json::array();
        for (const OracleReport& r : reports) arr.push_back(to_json(r));
        emit(arr);
    } else {
        for (const OracleReport& r : reports) {
            std::cout << r.check << " " << r.algebra << " level " << rat_str(r.level) << ": "
                      << (r.pass ? "pass" : "FAIL") << " (" << r.draws << " draws, seed "
                      << r.seed << ")";
            if (!r.pass) std::cout << "  witness: " << r.witness;
            std::cout << "\n";
        }
    }
    for (const OracleReport& r : reports)
        if (!r.pass) return 1;
    return 0;
}

int cmd_verify(const std::string& suite, unsigned long seed, const std::string& levels_str,
               int draws, long prec, const std::string& fmt) {
    SuiteOptions opt;
    opt.seed = seed;
    if (!levels_str.empty()) opt.levels = parse_rat_list(levels_str);
    opt.draws = draws;
    opt.prec = prec;
    std::vector<SuiteResult> results = run_suite(suite, opt);

    if (fmt == "json") {
        // canonical machine output: no timings, so identical inputs give
        // byte-identical bytes
        Json arr = Json::array();
        for (const SuiteResult& r : results)
            arr.push_back(Json{{"check", r.check},
                               {"status", r.pass ? "pass" : "fail"},
                               {"expected", r.expected},
                               {"actual", r.actual}});
        emit(arr);
    } else {
        for (const SuiteResult& r : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << " (" << r.elapsed_ms
                      << " ms)";
            if (!r.pass) std::cout << "\n     expected: " << r.expected
                                   << "\n     actual:   " << r.actual;
            std::cout << "\n";
        }
        size_t good = 0;
        for (const SuiteResult& r : results) good += r.pass;
        std::cout << "suite " << suite << ": " << good << "/" << results.size()
                  << " checks passed\n";
    }
    return all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graded-trace toolkit: q-expansions, modular-form spaces, root-system "
                 "tables and verification suites"};
    app.require_subcommand(1);
    int rc = 0;

    // qexp
    std::string qexp_form, qexp_fmt = "plain";
    long qexp_terms = 10, qexp_dim = 24;
    auto* qexp = app.add_subcommand("qexp", "print an exact q-expansion from the catalogue: " +
                                                NamedForm::catalogue());
    qexp->add_option("form", qexp_form, "form name, e.g. J, delta, G4, eta^24, Z1")->required();
    qexp->add_option("--terms,-n", qexp_terms, "number of grid coefficients to print");
    qexp->add_option("--dim", qexp_dim, "degree-1 dimension for Z1 (constant term)");
    qexp->add_option("--format", qexp_fmt)->check(CLI::IsMember({"plain", "json"}));
    qexp->callback([&] { rc = cmd_qexp(qexp_form, qexp_terms, qexp_dim, qexp_fmt); });

    // basis
    long basis_weight = 0, basis_prec = 60;
    bool basis_cusp = false;
    std::string basis_fmt = "json";
    auto* basis = app.add_subcommand("basis", "echelon basis of the weight-k form space");
    basis->add_option("--weight,-k", basis_weight, "modular weight")->required();
    basis->add_flag("--cusp", basis_cusp, "cusp forms only");
    basis->add_option("--terms,-n", basis_prec, "stored q-coefficients");
    basis->add_option("--format", basis_fmt)->check(CLI::IsMember({"plain", "json"}));
    basis->callback([&] { rc = cmd_basis(basis_weight, basis_cusp, basis_prec, basis_fmt); });

    // pspace
    long ps_charge = 0, ps_weight = 0, ps_prec = 60;
    std::string ps_fmt = "json";
    auto* ps = app.add_subcommand(
        "pspace", "candidate trace space eta^{-c} M_{k+c/2} at central charge c in {8,16,24}");
    ps->add_option("--charge,-c", ps_charge, "central charge (8, 16 or 24)")->required();
    ps->add_option("--weight,-k", ps_weight, "trace weight");
    ps->add_option("--terms,-n", ps_prec, "stored q-coefficients");
    ps->add_option("--format", ps_fmt)->check(CLI::IsMember({"plain", "json"}));
    ps->callback([&] { rc = cmd_pspace(ps_charge, ps_weight, ps_prec, ps_fmt); });

    // delta-module
    std::string dm_gen, dm_fmt = "json";
    long dm_wmax = 40, dm_prec = 60;
    auto* dm = app.add_subcommand(
        "delta-module", "dimensions of the closure of a generator under the Serre derivative "
                        "and multiplication by G4, G6");
    dm->add_option("gen", dm_gen, "generator: 1, G<k> or delta")->required();
    dm->add_option("--weight,-k", dm_wmax, "top weight of the closure");
    dm->add_option("--terms,-n", dm_prec, "stored q-coefficients");
    dm->add_option("--format", dm_fmt)->check(CLI::IsMember({"plain", "json", "csv"}));
    dm->callback([&] { rc = cmd_delta_module(dm_gen, dm_wmax, dm_prec, dm_fmt); });

    // convert
    long cv_wt = 1, cv_mode = -1, cv_mmax = -100;
    std::string cv_fmt = "json";
    auto* cv = app.add_subcommand("convert",
                                  "square-bracket/round-bracket mode conversion tables");
    cv->add_option("--weight,-k", cv_wt, "conformal weight of the field");
    cv->add_option("--mode", cv_mode, "mode index to expand");
    cv->add_option("--mmax", cv_mmax, "largest mode kept (default mode+6)");
    cv->add_option("--format", cv_fmt)->check(CLI::IsMember({"plain", "json"}));
    cv->callback([&] { rc = cmd_convert(cv_wt, cv_mode, cv_mmax, cv_fmt); });

    // trace
    std::string tr_type, tr_fmt = "plain";
    int tr_rank = 0;
    auto* tr = app.add_subcommand(
        "trace", "quartic trace on the standard orthogonal pair for a classical family");
    tr->add_option("--type", tr_type, "classical family letter: A, B, C or D")->required();
    tr->add_option("--rank", tr_rank, "rank (omit to sweep the family)");
    tr->add_option("--format", tr_fmt)->check(CLI::IsMember({"plain", "json", "csv"}));
    tr->callback([&] { rc = cmd_trace(tr_type, tr_rank, tr_fmt); });

    // four-design
    int fd_draws = 20;
    unsigned long fd_seed = 20260814;
    std::string fd_fmt = "json";
    auto* fd = app.add_subcommand(
        "four-design", "quartic cancellation on random constrained pairs, all augmented types");
    fd->add_option("--draws,-n", fd_draws, "random pairs per type");
    fd->add_option("--seed", fd_seed, "RNG seed");
    fd->add_option("--format", fd_fmt)->check(CLI::IsMember({"plain", "json", "csv"}));
    fd->callback([&] { rc = cmd_four_design(fd_draws, fd_seed, fd_fmt); });

    // level
    bool lv_all = false;
    std::string lv_type, lv_fmt = "plain";
    auto* lv = app.add_subcommand("level", "level ratio 6 kappa/(dim-24) per type");
    lv->add_flag("--all", lv_all, "all augmented types");
    lv->add_option("--type", lv_type, "one root system, e.g. D4");
    lv->add_option("--format", lv_fmt)->check(CLI::IsMember({"plain", "json", "csv"}));
    lv->callback([&] { rc = cmd_level(lv_all, lv_type, lv_fmt); });

    // y-alpha
    std::string ya_fmt = "json";
    auto* ya = app.add_subcommand(
        "y-alpha", "degree-0/1 traces of the long-root combination y(alpha), all types");
    ya->add_option("--format", ya_fmt)->check(CLI::IsMember({"plain", "json", "csv"}));
    ya->callback([&] { rc = cmd_y_alpha(ya_fmt); });

    // abelian
    long ab_prec = 60;
    std::string ab_fmt = "json";
    auto* ab = app.add_subcommand(
        "abelian", "charge-24 abelian quartic traces as polynomials in the norm s");
    ab->add_option("--terms,-n", ab_prec, "stored q-coefficients for the recursion side");
    ab->add_option("--format", ab_fmt)->check(CLI::IsMember({"plain", "json"}));
    ab->callback([&] { rc = cmd_abelian(ab_prec, ab_fmt); });

    // oracle-verify
    std::string ov_algebra = "both", ov_levels, ov_fmt = "json";
    int ov_draws = 20;
    unsigned long ov_seed = 20260814;
    auto* ov = app.add_subcommand(
        "oracle-verify", "mode-expansion and closed-trace checks in affine vacuum modules");
    ov->add_option("--algebra", ov_algebra)->check(CLI::IsMember({"sl2", "sl3", "both"}));
    ov->add_option("--levels", ov_levels, "comma-separated rational levels, e.g. \"1,5/2,3\"");
    ov->add_option("--draws,-n", ov_draws, "seeded draws per level");
    ov->add_option("--seed", ov_seed, "RNG seed");
    ov->add_option("--format", ov_fmt)->check(CLI::IsMember({"plain", "json"}));
    ov->callback(
        [&] { rc = cmd_oracle_verify(ov_algebra, ov_levels, ov_draws, ov_seed, ov_fmt); });

    // verify
    std::string vf_suite = "all", vf_levels, vf_fmt = "plain";
    unsigned long vf_seed = 20260814;
    int vf_draws = 20;
    long vf_prec = 60;
    std::vector<std::string> suite_choices = {"all"};
    for (const std::string& s : suite_names()) suite_choices.push_back(s);
    auto* vf = app.add_subcommand("verify", "run a named verification suite");
    vf->add_option("--suite", vf_suite)->check(CLI::IsMember(suite_choices));
    vf->add_option("--seed", vf_seed, "RNG seed");
    vf->add_option("--levels", vf_levels, "levels for the module checks");
    vf->add_option("--draws,-n", vf_draws, "seeded draws per randomized check");
    vf->add_option("--terms", vf_prec, "stored q-coefficients");
    vf->add_option("--format", vf_fmt)->check(CLI::IsMember({"plain", "json"}));
    vf->callback(
        [&] { rc = cmd_verify(vf_suite, vf_seed, vf_levels, vf_draws, vf_prec, vf_fmt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const traceforms::ParseError& e) {
        return usage_error(e.what());
    } catch (const traceforms::UnsupportedCharge& e) {
        return usage_error(e.what());
    } catch (const traceforms::InvalidRank& e) {
        return usage_error(e.what());
    } catch (const traceforms::InvalidWeight& e) {
        return usage_error(e.what());
    } catch (const traceforms::Error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
