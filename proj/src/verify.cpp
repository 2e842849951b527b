#include "traceforms/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "traceforms/affine.hpp"
#include "traceforms/common.hpp"
#include "traceforms/modforms.hpp"
#include "traceforms/qseries.hpp"
#include "traceforms/rootsys.hpp"
#include "traceforms/voatrace.hpp"
#include "traceforms/zmodes.hpp"

namespace traceforms {
namespace {

void run_check(std::vector<SuiteResult>& out, const std::string& name, std::string expected,
               const std::function<std::string()>& actual) {
    SuiteResult r;
    r.check = name;
    r.expected = std::move(expected);
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.actual = actual();
    } catch (const std::exception& e) {
        r.actual = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    r.pass = (r.actual == r.expected);
    out.push_back(std::move(r));
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

// "" when equal, otherwise the first differing grid exponent and both values.
std::string series_diff(const QSeries& a, const QSeries& b) {
    long lo = std::min(a.offset24(), b.offset24());
    long hi = std::min(a.cutoff24(), b.cutoff24());
    for (long e = lo; e < hi; ++e) {
        if (a.coeff24(e) != b.coeff24(e)) {
            std::ostringstream os;
            os << "q^(" << e << "/24): " << rat_str(a.coeff24(e)) << " vs "
               << rat_str(b.coeff24(e));
            return os.str();
        }
    }
    return "";
}

std::vector<Rat> levels_or_default(const SuiteOptions& opt) {
    if (!opt.levels.empty()) return opt.levels;
    return {Rat(1), Rat(2), frac(5, 2), Rat(3), frac(7, 3)};
}

// ---------------------------------------------------------------- qseries --

void suite_qseries(std::vector<SuiteResult>& out, const SuiteOptions& opt) {
    long prec = opt.prec;
    run_check(out, "qseries/eta24_two_routes", "0", [&] {
        QSeries g4 = eisenstein(4, prec), g6 = eisenstein(6, prec);
        QSeries rhs = (g4 * g4 * g4 * Rat(20) - g6 * g6 * Rat(49)) * Rat(10800);
        std::string d = series_diff(eta_pow(24, prec), rhs);
        return d.empty() ? std::string("0") : d;
    });
    run_check(out, "qseries/eta_head", "1, -1, -1, 0, 0, 1", [&] {
        QSeries eta = eta_pow(1, 8);
        std::vector<std::string> c;
        for (long i = 0; i < 6; ++i) c.push_back(rat_str(eta.coeffs()[i]));
        return join(c);
    });
    run_check(out, "qseries/delta_head", "1, -24, 252, -1472", [&] {
        QSeries d = delta_series(8);
        return join({rat_str(d.coeff(1)), rat_str(d.coeff(2)), rat_str(d.coeff(3)),
                     rat_str(d.coeff(4))});
    });
    run_check(out, "qseries/j_head", "1, 0, 196884", [&] {
        QSeries j = j_series(8);
        return join({rat_str(j.coeff(-1)), rat_str(j.coeff(0)), rat_str(j.coeff(1))});
    });
    run_check(out, "qseries/g2_head", "-1/12, 2, 6, 8", [&] {
        QSeries g2 = g2_series(8);
        return join({rat_str(g2.coeff(0)), rat_str(g2.coeff(1)), rat_str(g2.coeff(2)),
                     rat_str(g2.coeff(3))});
    });
    run_check(out, "qseries/eisenstein_constants", "1/720, -1/30240, 1/1209600", [&] {
        return join({rat_str(eisenstein(4, 2).coeff(0)), rat_str(eisenstein(6, 2).coeff(0)),
                     rat_str(eisenstein(8, 2).coeff(0))});
    });
}

// ----------------------------------------------------------------- zmodes --

void suite_zmodes(std::vector<SuiteResult>& out, const SuiteOptions&) {
    run_check(out, "zmodes/weight1_constants", "1, 1/2, -1/12, 1/24, -19/720", [&] {
        ConversionTable t = square_from_round(1, -1, 3);
        std::vector<std::string> c;
        for (long m = -1; m <= 3; ++m) c.push_back(rat_str(t.at(m)));
        return join(c);
    });
    run_check(out, "zmodes/virasoro_l_minus2", "-1 | 1, 3/2, 5/12, -1/24, 11/720", [&] {
        VirasoroExpansion v = virasoro_modes(Rat(24), -2, 2);
        std::vector<std::string> c;
        for (long k = -2; k <= 2; ++k) c.push_back(rat_str(v.l_coeff.at(k)));
        return rat_str(v.id_coeff) + " | " + join(c);
    });
    run_check(out, "zmodes/roundtrip_identity", "weights 1..4 ok", [&] {
        for (long wt = 1; wt <= 4; ++wt)
            if (!roundtrip_identity(wt, -8, 8))
                return "weight " + std::to_string(wt) + " tables do not invert";
        return std::string("weights 1..4 ok");
    });
}

// --------------------------------------------------------------- modforms --

void suite_modforms(std::vector<SuiteResult>& out, const SuiteOptions& opt) {
    long prec = opt.prec;
    run_check(out, "modforms/serre_derivative_g4", "0", [&] {
        QSeries lhs = serre_derivative(eisenstein(4, prec), Rat(4));
        std::string d = series_diff(lhs, eisenstein(6, prec) * Rat(14));
        return d.empty() ? std::string("0") : d;
    });
    {
        // dim M_k = floor(k/12) + 1 except k = 2 (mod 12), for even k >= 4
        std::vector<std::string> want;
        for (long k = 4; k <= 40; k += 2)
            want.push_back(std::to_string(k / 12 + (k % 12 == 2 ? 0 : 1)));
        run_check(out, "modforms/dims_even_4_to_40", join(want), [&] {
            std::vector<std::string> got;
            for (long k = 4; k <= 40; k += 2)
                got.push_back(std::to_string(mk_space(k, prec).dim()));
            return join(got);
        });
    }
    run_check(out, "modforms/cusp_dims_10_to_16", "0, 1, 0, 1", [&] {
        std::vector<std::string> got;
        for (long k = 10; k <= 16; k += 2) got.push_back(std::to_string(cusp_space(k, prec).dim()));
        return join(got);
    });
    run_check(out, "modforms/delta_module_from_g4", "weights 4..24 ok", [&] {
        DeltaModuleReport rep =
            delta_module_closure({{eisenstein(4, prec), 4}}, 24, prec);
        for (long k = 4; k <= 24; k += 2)
            if (rep.dims.count(k) == 0 || rep.dims.at(k) != mk_space(k, prec).dim())
                return "weight " + std::to_string(k) + " dimension off";
        return std::string("weights 4..24 ok");
    });
    run_check(out, "modforms/pspace_dims_k0", "1, 1, 2", [&] {
        return join({std::to_string(p_space(8, 0, prec).dim()),
                     std::to_string(p_space(16, 0, prec).dim()),
                     std::to_string(p_space(24, 0, prec).dim())});
    });
}

// ---------------------------------------------------------------- rootsys --

void suite_rootsys(std::vector<SuiteResult>& out, const SuiteOptions& opt) {
    run_check(out, "rootsys/dim_kappa_table",
              "A1 3 8; A2 8 12; D4 28 24; E6 78 48; E7 133 72; E8 248 120; F4 52 36; G2 14 16",
              [&] {
                  std::vector<std::string> rows;
                  for (const RootSystem& rs : augmented_types())
                      rows.push_back(rs.name + " " + std::to_string(rs.lie_dim()) + " " +
                                     std::to_string(kappa_hh(rs)));
                  return join(rows, "; ");
              });
    run_check(out, "rootsys/trace_h4_is_kappa_plus_24", "8/8", [&] {
        int good = 0, total = 0;
        for (const RootSystem& rs : augmented_types()) {
            ++total;
            Vec h = coroot(rs, long_root(rs));
            if (power_trace(rs, h, 4) == Rat(kappa_hh(rs) + 24)) ++good;
        }
        return std::to_string(good) + "/" + std::to_string(total);
    });
    run_check(out, "rootsys/classical_sweeps", "A ok; B ok; C ok; D ok", [&] {
        auto sweep_ok = [](RootType t, int lmin, int lmax) {
            for (const SweepRow& row : classical_sweep(t, lmin, lmax))
                if (!row.match) return false;
            return true;
        };
        std::vector<std::string> rows;
        rows.push_back(std::string("A ") + (sweep_ok(RootType::A, 3, 12) ? "ok" : "off"));
        rows.push_back(std::string("B ") + (sweep_ok(RootType::B, 2, 12) ? "ok" : "off"));
        rows.push_back(std::string("C ") + (sweep_ok(RootType::C, 3, 12) ? "ok" : "off"));
        rows.push_back(std::string("D ") + (sweep_ok(RootType::D, 4, 12) ? "ok" : "off"));
        return join(rows, "; ");
    });
    run_check(out, "rootsys/integral_levels", "D4 (36)", [&] {
        std::vector<std::string> integral;
        for (const RootSystem& rs : augmented_types()) {
            Rat level = level_ratio(rs);
            if (level.get_den() == 1)
                integral.push_back(rs.name + " (" + rat_str(level) + ")");
        }
        return join(integral, "; ");
    });
    run_check(out, "rootsys/four_design_pairs", "8/8 all zero", [&] {
        int good = 0, total = 0;
        for (const RootSystem& rs : augmented_types()) {
            ++total;
            if (four_design_check(rs, 6, opt.seed).all_zero) ++good;
        }
        return std::to_string(good) + "/" + std::to_string(total) + " all zero";
    });
}

// ----------------------------------------------------------------- oracle --

void suite_oracle(std::vector<SuiteResult>& out, const SuiteOptions& opt) {
    std::vector<Rat> levels = levels_or_default(opt);
    const LieAlgebra algebras[2] = {sl2(), sl3()};
    for (const LieAlgebra& g : algebras) {
        run_check(out, "oracle/square_bracket_expansion/" + g.name,
                  std::to_string(levels.size()) + "/" + std::to_string(levels.size()) +
                      " levels ok",
                  [&] {
                      size_t good = 0;
                      std::string first_witness;
                      for (const Rat& level : levels) {
                          OracleReport rep = verify_expansion(g, level, opt.draws, opt.seed);
                          if (rep.pass)
                              ++good;
                          else if (first_witness.empty())
                              first_witness =
                                  " (level " + rat_str(level) + ": " + rep.witness + ")";
                      }
                      return std::to_string(good) + "/" + std::to_string(levels.size()) +
                             " levels ok" + first_witness;
                  });
        run_check(out, "oracle/general_traces/" + g.name,
                  std::to_string(levels.size()) + "/" + std::to_string(levels.size()) +
                      " levels ok",
                  [&] {
                      size_t good = 0;
                      std::string first_witness;
                      for (const Rat& level : levels) {
                          OracleReport rep = verify_general_traces(g, level, opt.draws, opt.seed);
                          if (rep.pass)
                              ++good;
                          else if (first_witness.empty())
                              first_witness =
                                  " (level " + rat_str(level) + ": " + rep.witness + ")";
                      }
                      return std::to_string(good) + "/" + std::to_string(levels.size()) +
                             " levels ok" + first_witness;
                  });
    }
}

// --------------------------------------------------------------- voatrace --

void suite_voatrace(std::vector<SuiteResult>& out, const SuiteOptions& opt) {
    run_check(out, "voatrace/lz_from_killing", "72, 45/7, 2", [&] {
        // D4 and E8 as degree-1 algebras at charge 24, then E8 at its
        // native charge 8 (level 1, so the long coroot has norm 2)
        Rat d4 = lz_from_killing(TraceContext(Rat(24), Rat(28)), Rat(24));
        Rat e8_c24 = lz_from_killing(TraceContext(Rat(24), Rat(248)), Rat(120));
        Rat e8_c8 = lz_from_killing(TraceContext(Rat(8), Rat(248)), Rat(120));
        return rat_str(d4) + ", " + rat_str(e8_c24) + ", " + rat_str(e8_c8);
    });
    run_check(out, "voatrace/x_trace_pairs", "A5 (0, 48); B2 (0, -12); D4 (0, 0)", [&] {
        RootSystem a5 = RootSystem::parse("A5");
        Vec ua(a5.ambient, 0), va(a5.ambient, 0);
        ua[0] = 1, ua[1] = -1, va[4] = 1, va[5] = -1;
        XTraces xa = x_traces(a5, ua, va);
        RootSystem b2 = RootSystem::parse("B2");
        Vec ub(b2.ambient, 0), vb(b2.ambient, 0);
        ub[0] = 1, vb[1] = 1;
        XTraces xb = x_traces(b2, ub, vb);
        RootSystem d4 = RootSystem::parse("D4");
        Vec ud(d4.ambient, 0), vd(d4.ambient, 0);
        ud[0] = 1, vd[3] = 1;
        XTraces xd = x_traces(d4, ud, vd);
        auto fmt = [](const char* n, const XTraces& x) {
            return std::string(n) + " (" + rat_str(x.v0) + ", " + rat_str(x.v1) + ")";
        };
        return join({fmt("A5", xa), fmt("B2", xb), fmt("D4", xd)}, "; ");
    });
    run_check(out, "voatrace/y_alpha_rows", "8/8 v0=0, v1 agree and nonzero", [&] {
        int good = 0, total = 0;
        for (const YAlphaReport& rep : y_alpha_all()) {
            ++total;
            if (rep.v0 == 0 && rep.v1_direct == rep.v1_composed &&
                rep.v1_direct == rep.v1_factored && !rep.vanishes && rep.factor1 != 0)
                ++good;
        }
        return std::to_string(good) + "/" + std::to_string(total) + " v0=0, v1 agree and nonzero";
    });
    run_check(out, "voatrace/sl2_irrep_identity", "0, 2, 32, 164", [&] {
        std::vector<std::string> rows;
        for (const Sl2IdentityRow& row : sl2_irrep_identity())
            rows.push_back(row.match ? rat_str(row.lhs) : "mismatch");
        return join(rows);
    });
    run_check(out, "voatrace/abelian_combination", "0 and -12 s^2, consistent", [&] {
        AbelianReport rep = abelian_report(opt.prec);
        if (!rep.consistent) return std::string("inconsistent");
        return rep.combo_v0.str() + " and " + rep.combo_v1.str() + ", consistent";
    });
    run_check(out, "voatrace/l2_shift_leads", "-10/11, -71/66; -20/33, -17/22; cusp dims 0, 0",
              [&] {
                  L2ShiftReport r24 =
                      l2_shift_claim(TraceContext(Rat(24), Rat(30)), Rat(1),
                                     QSeries::monomial(Rat(1), -24, opt.prec), opt.prec);
                  L2ShiftReport r16 =
                      l2_shift_claim(TraceContext(Rat(16), Rat(30)), Rat(1),
                                     QSeries::monomial(Rat(1), -16, opt.prec), opt.prec);
                  if (!r24.nonzero || !r16.nonzero) return std::string("vanishing lead");
                  return rat_str(r24.lead_weightwise) + ", " + rat_str(r24.lead_uniform) + "; " +
                         rat_str(r16.lead_weightwise) + ", " + rat_str(r16.lead_uniform) +
                         "; cusp dims " + std::to_string(r24.cusp_dim) + ", " +
                         std::to_string(r16.cusp_dim);
              });
    run_check(out, "voatrace/x_consistency", "levels ok", [&] {
        for (const Rat& level : levels_or_default(opt)) {
            XConsistencyReport rep = x_consistency_check(level, 6, opt.seed);
            if (!rep.pass) return "level " + rat_str(level) + ": " + rep.witness;
        }
        return std::string("levels ok");
    });
}

using SuiteFn = void (*)(std::vector<SuiteResult>&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"qseries", suite_qseries},   {"zmodes", suite_zmodes},
        {"modforms", suite_modforms}, {"rootsys", suite_rootsys},
        {"oracle", suite_oracle},     {"voatrace", suite_voatrace},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : suite_table()) n.push_back(name);
        return n;
    }();
    return names;
}

std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& opt) {
    std::vector<SuiteResult> out;
    if (name == "all") {
        for (const auto& [suite, fn] : suite_table()) fn(out, opt);
        return out;
    }
    for (const auto& [suite, fn] : suite_table()) {
        if (suite == name) {
            fn(out, opt);
            return out;
        }
    }
    throw ParseError("unknown suite '" + name + "'; known: all, " + [] {
        std::string s;
        for (size_t i = 0; i < suite_names().size(); ++i)
            s += (i ? ", " : "") + suite_names()[i];
        return s;
    }());
}

bool all_pass(const std::vector<SuiteResult>& results) {
    for (const SuiteResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace traceforms
