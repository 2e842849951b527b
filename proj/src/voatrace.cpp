#include "traceforms/voatrace.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "traceforms/common.hpp"
#include "traceforms/modforms.hpp"
#include "traceforms/trace_formulas.hpp"
#include "traceforms/zmodes.hpp"

namespace traceforms {

TraceContext::TraceContext(Rat charge, Rat dim_v1) : c(std::move(charge)), n(std::move(dim_v1)) {
    if (c != 8 && c != 16 && c != 24)
        throw UnsupportedCharge("central charge must be 8, 16, or 24, got " + rat_str(c));
}

Rat TraceContext::form_ratio() const {
    if (n == c)
        throw DegenerateRatio("n = c leaves the form ratio undefined (abelian degree-1 slice)");
    return c / (2 * (n - c));
}

Rat lz_from_killing(const TraceContext& ctx, const Rat& kappa_value) {
    return ctx.form_ratio() * kappa_value;
}

XTraces x_traces(const RootSystem& rs, const Vec& u, const Vec& v) {
    if (!pair_constrained(rs, u, v))
        throw HypothesisViolation(rs.name + ": pair is not orthogonal with equal norms");
    return {Rat(0), x_trace(rs, u, v)};
}

XTraces x_traces(const LieAlgebra& g, const Vec& u, const Vec& v) {
    if (g.bracket(u, v) != Vec(g.dim, Rat(0)))
        throw HypothesisViolation(g.name + ": pair does not commute");
    if (g.form_value(u, v) != 0)
        throw HypothesisViolation(g.name + ": pair is not orthogonal");
    if (g.form_value(u, u) != g.form_value(v, v))
        throw HypothesisViolation(g.name + ": pair norms differ");
    Mat au = g.ad_matrix(u), av = g.ad_matrix(v);
    Mat au2 = mat_mul(au, au), av2 = mat_mul(av, av);
    Rat quartic = mat_trace(mat_mul(au2, au2)) - 6 * mat_trace(mat_mul(au2, av2)) +
                  mat_trace(mat_mul(av2, av2));
    return {Rat(0), quartic};
}

QuarticCartanTraces hhh_ef_traces(const TraceContext& ctx, const Rat& kappa_hh,
                                  const Rat& tr_h4) {
    if (ctx.c != 24) throw UnsupportedCharge("the quartic Cartan traces require charge 24");
    if (ctx.n == 24) throw DegenerateRatio("n = 24 leaves the quartic Cartan traces undefined");
    Rat d = ctx.n - 24;
    QuarticCartanTraces out;
    out.hh_v0 = 3 * kappa_hh * kappa_hh / (d * d);
    out.hh_v1 = -3 * ctx.n * kappa_hh * kappa_hh / (d * d) + tr_h4;
    out.ef_v0 = kappa_hh / (60 * d) + kappa_hh * kappa_hh / (2 * d * d);
    out.ef_v1 = kappa_hh * (ctx.n + 240) / (60 * d) - ctx.n * kappa_hh * kappa_hh / (2 * d * d) +
                frac(1, 6) * tr_h4;
    return out;
}

YAlphaReport y_alpha_report(const RootSystem& rs) {
    YAlphaReport rep;
    rep.name = rs.name;
    rep.n = rs.lie_dim();
    rep.kappa = kappa_hh(rs);
    rep.tr_h4 = power_trace(rs, coroot(rs, long_root(rs)), 4);
    Rat d = rep.n - 24;
    rep.C = d / (180 * rep.kappa) + frac(1, 6);
    QuarticCartanTraces qt = hhh_ef_traces(TraceContext(Rat(24), rep.n), rep.kappa, rep.tr_h4);
    rep.v0 = qt.ef_v0 - rep.C * qt.hh_v0;
    rep.v1_composed = qt.ef_v1 - rep.C * qt.hh_v1;
    rep.v1_direct = rep.kappa * (rep.n + 120) / (30 * d) - d / (180 * rep.kappa) * rep.tr_h4;
    rep.factor1 = 6 * rep.kappa - rep.n + 24;
    rep.factor2 = (rep.n + 120) * rep.kappa + 24 * d;
    rep.v1_factored = rep.factor1 * rep.factor2 / (180 * rep.kappa * d);
    rep.vanishes = rep.v1_direct == 0;
    return rep;
}

std::vector<YAlphaReport> y_alpha_all() {
    std::vector<YAlphaReport> out;
    for (const RootSystem& rs : augmented_types()) out.push_back(y_alpha_report(rs));
    return out;
}

std::vector<Sl2IdentityRow> sl2_irrep_identity() {
    std::vector<Sl2IdentityRow> rows;
    for (long d = 1; d <= 4; ++d) {
        Sl2Irrep r = Sl2Irrep::make(d);
        Mat efef = mat_mul(r.e, mat_mul(r.f, mat_mul(r.e, r.f)));
        Mat eeff = mat_mul(r.e, mat_mul(r.e, mat_mul(r.f, r.f)));
        Sl2IdentityRow row;
        row.dim = d;
        row.lhs = 2 * mat_trace(efef) + 4 * mat_trace(eeff);
        row.rhs = mat_trace(mat_pow(r.h, 4));
        row.match = row.lhs == row.rhs;
        rows.push_back(row);
    }
    return rows;
}

SPoly SPoly::operator+(const SPoly& o) const {
    SPoly out;
    for (int i = 0; i < 3; ++i) out.coeffs[i] = coeffs[i] + o.coeffs[i];
    return out;
}

SPoly SPoly::operator-(const SPoly& o) const {
    SPoly out;
    for (int i = 0; i < 3; ++i) out.coeffs[i] = coeffs[i] - o.coeffs[i];
    return out;
}

SPoly SPoly::operator*(const SPoly& o) const {
    SPoly out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat term = coeffs[i] * o.coeffs[j];
            if (term == 0) continue;
            if (i + j > 2) throw DegreeOverflow("norm polynomial exceeds degree 2");
            out.coeffs[i + j] += term;
        }
    return out;
}

SPoly operator*(const Rat& c, const SPoly& p) {
    SPoly out;
    for (int i = 0; i < 3; ++i) out.coeffs[i] = c * p.coeffs[i];
    return out;
}

Rat SPoly::eval(const Rat& s) const { return coeffs[0] + s * (coeffs[1] + s * coeffs[2]); }

std::string SPoly::str() const {
    std::string out;
    static const char* pow_names[] = {"", " s", " s^2"};
    for (int i = 0; i < 3; ++i) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += rat_str(coeffs[i]) + pow_names[i];
    }
    return out.empty() ? "0" : out;
}

AbelianReport abelian_report(long prec) {
    AbelianReport rep;
    const Rat n(24);

    // o(a[-1]^4 1): the literal 24-permutation sums with every pairing equal
    // to s; brackets, Killing values, and adjoint products all vanish on an
    // abelian degree-1 slice.
    SPoly s = SPoly::s();
    SPoly s4_sum;  // sum over S4 of <pi a|pi b><pi c|pi d> = 24 s^2
    std::array<int, 4> p = {0, 1, 2, 3};
    do {
        s4_sum = s4_sum + s * s;
    } while (std::next_permutation(p.begin(), p.end()));
    rep.a4_v0 = frac(1, 1152) * s4_sum;
    rep.a4_v1 = ((n - 48) / 1152) * s4_sum;

    // o(a[-2]^2 1) through the one-point recursion: every mode a[2k-2]
    // annihilates a[-2]1 except k = 2, where [a[2], a[-2]] = 2s, so
    // Z(a[-2]^2 1) = -3 G_4 * 2s * Z(1) with Z(1) = J + 24.
    QSeries z1 = j_series(prec) + Rat(24);
    rep.z_a22_per_s = Rat(-6) * (eisenstein(4, prec) * z1);
    rep.a22_v0 = rep.z_a22_per_s.coeff24(-24) * s;
    rep.a22_v1 = rep.z_a22_per_s.coeff24(0) * s;

    // combination 2 a[-1]^4 + 5s a[-2]^2
    rep.combo_v0 = Rat(2) * rep.a4_v0 + Rat(5) * (s * rep.a22_v0);
    rep.combo_v1 = Rat(2) * rep.a4_v1 + Rat(5) * (s * rep.a22_v1);
    rep.consistent = rep.combo_v0 == SPoly() && rep.combo_v1 == Rat(-12) * (s * s);
    if (!rep.consistent)
        throw ConsistencyFailure("abelian combination traces fail their closed forms");
    return rep;
}

L2ShiftReport l2_shift_claim(const TraceContext& ctx, const Rat& ell, const QSeries& zb_head,
                             long prec) {
    if (ctx.c != 16 && ctx.c != 24)
        throw UnsupportedCharge("the shift claim is stated for charges 16 and 24");
    long c = (long)ctx.c.get_num().get_si();
    if (zb_head.coeff24(-c) != ell)
        throw HypothesisViolation("most-polar coefficient of the trace series must equal the vacuum coefficient");

    L2ShiftReport rep;
    rep.c = ctx.c;
    rep.ell = ell;
    VirasoroExpansion ve = virasoro_modes(ctx.c, -2, 2);
    rep.id_coeff = ve.id_coeff;         // -c/24
    rep.l2_coeff = ve.l_coeff.at(2);    // 11/720
    rep.l2b_multiple = -rep.id_coeff / rep.l2_coeff;  // 30c/11

    // most-polar coefficient of G_4 Z(L[2]b) = (30c/11) ell G_4 Z(1):
    // only G_4's constant term and the unit leading coefficient of Z(1) land
    // on q^{-c/24}
    Rat recursion_term = rep.l2b_multiple * ell * eisenstein(4, prec).coeff24(0);

    // delta Z(b) = theta Z(b) + k G_2 Z(b); the most-polar component of Z(b)
    // carries weight 0 under the componentwise convention (its insertion is
    // a vacuum multiple) and weight 2 under the uniform convention
    Rat theta_lead = zb_head.theta().coeff24(-c);
    rep.lead_weightwise = theta_lead + recursion_term;
    QSeries g2_part = Rat(2) * (g2_series(prec) * zb_head);
    rep.lead_uniform = rep.lead_weightwise + g2_part.coeff24(-c);

    rep.nonzero = rep.lead_weightwise != 0 && rep.lead_uniform != 0;
    rep.cusp_weight = 2 + c / 2;
    rep.cusp_dim = cusp_space(rep.cusp_weight, prec).dim();
    return rep;
}

namespace {

Vec cartan_sl3(const Rat& a, const Rat& b) {
    Vec v(8, Rat(0));
    v[6] = a;
    v[7] = b;
    return v;
}

Vec cartan_ambient(const Rat& a, const Rat& b) { return {a, b - a, -b}; }

}  // namespace

XConsistencyReport x_consistency_check(const Rat& level, int draws, unsigned long seed) {
    XConsistencyReport rep;
    rep.level = level;
    rep.draws = draws;
    rep.seed = seed;
    rep.pass = true;

    LieAlgebra g = sl3();
    RootSystem rs = RootSystem::build(RootType::A, 2);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-3, 3), den(1, 2);

    for (int k = 0; k < draws; ++k) {
        std::array<Rat, 2> pc, qc;
        if (k == 0) {
            pc = {Rat(1), Rat(0)};  // h1
            qc = {Rat(1), Rat(2)};  // h1 + 2 h2, orthogonal to h1
        } else {
            do {
                pc = {frac(num(rng), den(rng)), frac(num(rng), den(rng))};
            } while (pc[0] == 0 && pc[1] == 0);
            Vec pa = cartan_ambient(pc[0], pc[1]);
            do {
                qc = {frac(num(rng), den(rng)), frac(num(rng), den(rng))};
                Rat mu = dot(cartan_ambient(qc[0], qc[1]), pa) / dot(pa, pa);
                qc = {qc[0] - mu * pc[0], qc[1] - mu * pc[1]};
            } while (qc[0] == 0 && qc[1] == 0);
        }
        Vec pa = cartan_ambient(pc[0], pc[1]), qa = cartan_ambient(qc[0], qc[1]);
        Vec pg = cartan_sl3(pc[0], pc[1]), qg = cartan_sl3(qc[0], qc[1]);
        Rat lambda = dot(qa, qa) / dot(pa, pa);

        TracePair tpppp = general_traces_eval(trace_inputs(g, level, pg, pg, pg, pg));
        TracePair tppqq = general_traces_eval(trace_inputs(g, level, pg, pg, qg, qg));
        TracePair tqqqq = general_traces_eval(trace_inputs(g, level, qg, qg, qg, qg));
        Rat v0 = lambda * lambda * tpppp.v0 - 6 * lambda * tppqq.v0 + tqqqq.v0;
        Rat v1 = lambda * lambda * tpppp.v1 - 6 * lambda * tppqq.v1 + tqqqq.v1;

        PairSums ps = pair_sums(rs, pa, qa);
        Rat expect = lambda * lambda * ps.s40 - 6 * lambda * ps.s22 + ps.s04;
        if (v0 == 0 && v1 == expect) continue;
        rep.pass = false;
        std::ostringstream w;
        w << "draw " << k << " p = (" << rat_str(pc[0]) << "," << rat_str(pc[1]) << ") q = ("
          << rat_str(qc[0]) << "," << rat_str(qc[1]) << "): degree 0 " << rat_str(v0)
          << ", degree 1 " << rat_str(v1) << " vs " << rat_str(expect);
        rep.witness = w.str();
        break;
    }
    return rep;
}

}  // namespace traceforms
