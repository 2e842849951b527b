#pragma once

#include <array>
#include <string>
#include <vector>

#include "traceforms/liealg.hpp"
#include "traceforms/qseries.hpp"
#include "traceforms/rootsys.hpp"

namespace traceforms {

// Central charge and degree-1 dimension feeding the closed-form traces,
// together with the ratio that rewrites the Killing form in terms of the
// normalized invariant form: kappa(u,v) = 2<u|v>(n/c - 1), so
// <u|v> = kappa(u,v) * c / (2(n-c)).
struct TraceContext {
    Rat c;  // 8, 16, or 24
    Rat n;  // dim of the degree-1 slice

    TraceContext(Rat charge, Rat dim_v1);
    Rat form_ratio() const;  // c/(2(n-c)); DegenerateRatio when n == c
};

// <u|v> from a Killing value; n == c (Killing form identically zero) is the
// degenerate abelian case and throws.
Rat lz_from_killing(const TraceContext& ctx, const Rat& kappa_value);

// Traces of o(x(u,v)) for x(u,v) = u[-1]^3 u - 6 u[-1]^2 v[-1] v + v[-1]^3 v
// with u, v orthogonal, commuting, and of equal norm.  The degree-0 trace is
// identically zero under those hypotheses; the degree-1 trace is
// tr(u(0)^4 - 6 u(0)^2 v(0)^2 + v(0)^4).
struct XTraces {
    Rat v0, v1;
};
// Cartan inputs in ambient root-system coordinates; the quartic trace is the
// root sum.  Hypotheses are checked via the ambient dot product.
XTraces x_traces(const RootSystem& rs, const Vec& u, const Vec& v);
// General commuting inputs in a concrete Lie algebra; the quartic trace is
// evaluated through adjoint matrices.  Hypotheses are checked via the
// algebra's invariant form.
XTraces x_traces(const LieAlgebra& g, const Vec& u, const Vec& v);

// The four quartic Cartan traces at charge 24 for a long-root sl2 triple
// (e, f, h) with 2 kappa(e,f) = kappa(h,h):
//   hh_v0 = tr o(h[-1]^3 h)       on degree 0 = 3 kappa^2/(n-24)^2
//   hh_v1 =            ... on degree 1 = -3 n kappa^2/(n-24)^2 + tr h^4
//   ef_v0 = tr o(e[-1]f[-1]e[-1]f) on degree 0
//         = kappa/(60(n-24)) + kappa^2/(2(n-24)^2)
//   ef_v1 = kappa(n+240)/(60(n-24)) - n kappa^2/(2(n-24)^2) + tr(h^4)/6
struct QuarticCartanTraces {
    Rat hh_v0, hh_v1, ef_v0, ef_v1;
};
QuarticCartanTraces hhh_ef_traces(const TraceContext& ctx, const Rat& kappa_hh,
                                  const Rat& tr_h4);

// y(alpha) = e[-1]f[-1]e[-1]f - C h[-1]^3 h for a long root alpha, with
// C = (n-24)/(180 kappa) + 1/6 chosen so the degree-0 trace cancels.  The
// degree-1 trace is reported from the direct display, from composing the
// four quartic traces, and from the factored vanishing criterion
// (6 kappa - n + 24)((n+120) kappa + 24(n-24)) / (180 kappa (n-24)).
struct YAlphaReport {
    std::string name;
    Rat n, kappa, tr_h4;
    Rat C;
    Rat v0;           // ef_v0 - C hh_v0, identically zero
    Rat v1_direct;    // kappa(n+120)/(30(n-24)) - (n-24)/(180 kappa) tr h^4
    Rat v1_composed;  // ef_v1 - C hh_v1
    Rat v1_factored;
    Rat factor1;  // 6 kappa - n + 24
    Rat factor2;  // (n+120) kappa + 24(n-24)
    bool vanishes;
};
YAlphaReport y_alpha_report(const RootSystem& rs);
std::vector<YAlphaReport> y_alpha_all();

// tr(2 e(0)f(0)e(0)f(0) + 4 e(0)^2 f(0)^2) = tr h(0)^4 on each irreducible
// sl2 representation of dimension 1..4.
struct Sl2IdentityRow {
    long dim;
    Rat lhs, rhs;
    bool match;
};
std::vector<Sl2IdentityRow> sl2_irrep_identity();

// Polynomial of degree <= 2 in the formal norm s = <a|a>.
struct SPoly {
    std::array<Rat, 3> coeffs{};  // coeffs[i] multiplies s^i

    SPoly() = default;
    explicit SPoly(Rat c0) { coeffs[0] = std::move(c0); }
    static SPoly s() {
        SPoly p;
        p.coeffs[1] = 1;
        return p;
    }

    bool operator==(const SPoly&) const = default;
    SPoly operator+(const SPoly& o) const;
    SPoly operator-(const SPoly& o) const;
    SPoly operator*(const SPoly& o) const;  // DegreeOverflow past degree 2
    friend SPoly operator*(const Rat& c, const SPoly& p);
    Rat eval(const Rat& s) const;
    std::string str() const;  // e.g. "-12 s^2"
};

// Charge-24 abelian degree-1 slice (n = 24): traces of o(a[-1]^4 1) from the
// literal permutation sums, traces of o(a[-2]^2 1) from the one-point
// recursion instance Z(a[-2]^2 1) = -3 E_4 Z(a[2]a[-2] 1), and the
// combination 2 a[-1]^4 + 5s a[-2]^2 whose degree-0 trace cancels and whose
// degree-1 trace is -12 s^2.  All values are polynomials in s = <a|a>.
struct AbelianReport {
    SPoly a4_v0, a4_v1;        //  s^2/48, -s^2/2
    SPoly a22_v0, a22_v1;      // -s/120, -11s/5
    SPoly combo_v0, combo_v1;  //  0, -12 s^2
    QSeries z_a22_per_s;       //  Z(a[-2]^2 1) divided by s
    bool consistent;
};
AbelianReport abelian_report(long prec);

// Leading (most-polar) coefficient of Z(L[-2]b) for b in the weight-2
// square-bracket slice with vacuum coefficient ell, assembled from
//   Z(L[-2]b) = delta Z(b) + E_4 Z(L[2]b),   L[2]b = (30c/11) ell 1,
// where 30c/11 = -id_coeff/l2_coeff comes from the L[-2] mode expansion.
// The weight assigned to the inhomogeneous Z(b) by delta is ambiguous, so
// the coefficient is reported under both conventions: weight 0 on the
// most-polar component (weightwise) and a uniform weight 2.  Both are
// linear in ell and vanish only at ell = 0; the cusp dimension at weight
// 2 + c/2 is confirmed to be zero, which upgrades "leading coefficient 0"
// to "the whole series is 0".
struct L2ShiftReport {
    Rat c, ell;
    Rat id_coeff, l2_coeff, l2b_multiple;
    Rat lead_weightwise, lead_uniform;
    bool nonzero;  // both leads nonzero (iff ell != 0)
    long cusp_weight = 0;
    long cusp_dim = 0;
};
L2ShiftReport l2_shift_claim(const TraceContext& ctx, const Rat& ell, const QSeries& zb_head,
                             long prec);

// Consistency of the x(u,v) trace lemma with the quartic trace formulas on
// the Cartan subalgebra of sl3: for orthogonal commuting Cartan pairs (p, q)
// with norm ratio lambda, the scaled combination of formula traces
//   lambda^2 T(p,p,p,p) - 6 lambda T(p,p,q,q) + T(q,q,q,q)
// must vanish on degree 0 and equal the root-system pair sums
// lambda^2 s40 - 6 lambda s22 + s04 on degree 1, at every level.  Draws are
// seeded random pairs (Gram-Schmidt orthogonalized) after one fixed pair.
struct XConsistencyReport {
    Rat level;
    int draws = 0;
    bool pass = false;
    unsigned long seed = 0;
    std::string witness;
};
XConsistencyReport x_consistency_check(const Rat& level, int draws, unsigned long seed);

}  // namespace traceforms
