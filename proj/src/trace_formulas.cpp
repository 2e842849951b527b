#include "traceforms/trace_formulas.hpp"

#include <algorithm>
#include <array>

#include "traceforms/common.hpp"

namespace traceforms {

namespace {

// sum over all 24 permutations of f(pi) g(pi'), with f, g read off the pair
// matrices: sum_{pi in S4} m1[pi0][pi1] * m2[pi2][pi3]
Rat s4_pair_sum(const Mat& m1, const Mat& m2) {
    std::array<int, 4> p = {0, 1, 2, 3};
    Rat out(0);
    do {
        out += m1[p[0]][p[1]] * m2[p[2]][p[3]];
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

TraceInputs trace_inputs(const LieAlgebra& g, const Rat& level, const Vec& a, const Vec& b,
                         const Vec& c, const Vec& d) {
    TraceInputs in;
    in.n = g.dim;
    std::array<const Vec*, 4> x = {&a, &b, &c, &d};
    in.lz.assign(4, Vec(4, Rat(0)));
    in.kap.assign(4, Vec(4, Rat(0)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            in.lz[i][j] = level * g.form_value(*x[i], *x[j]);
            in.kap[i][j] = g.killing_value(*x[i], *x[j]);
        }
    Vec ab = g.bracket(a, b), cd = g.bracket(c, d), ad = g.bracket(a, d), bc = g.bracket(b, c);
    in.lz_ab_cd = level * g.form_value(ab, cd);
    in.lz_ad_bc = level * g.form_value(ad, bc);
    in.kap_ab_cd = g.killing_value(ab, cd);
    in.kap_ad_bc = g.killing_value(ad, bc);

    Mat ma = g.ad_matrix(a);
    std::array<Mat, 3> rest = {g.ad_matrix(b), g.ad_matrix(c), g.ad_matrix(d)};
    std::array<int, 3> p = {0, 1, 2};
    in.s3_trace = 0;
    do {
        in.s3_trace += mat_trace(mat_mul(ma, mat_mul(rest[p[0]], mat_mul(rest[p[1]], rest[p[2]]))));
    } while (std::next_permutation(p.begin(), p.end()));
    return in;
}

TracePair general_traces_eval(const TraceInputs& in) {
    Rat brackets = 4 * in.lz_ab_cd + 5 * in.lz_ad_bc;
    Rat s4_ll = s4_pair_sum(in.lz, in.lz);
    Rat s4_lk = s4_pair_sum(in.lz, in.kap);
    TracePair out;
    out.v0 = frac(-1, 720) * brackets + frac(1, 1152) * s4_ll;
    out.v1 = frac(-1, 720) * (in.n + 240) * brackets + frac(1, 1152) * (in.n - 48) * s4_ll -
             frac(1, 48) * s4_lk + frac(1, 6) * in.s3_trace;
    return out;
}

TracePair general_traces_kappa_eval(const TraceInputs& in) {
    if (in.n == 24) throw DegenerateRatio("dimension 24 leaves the Killing rewrite undefined");
    Rat d = in.n - 24;
    Rat brackets = 4 * in.kap_ab_cd + 5 * in.kap_ad_bc;
    Rat s4_kk = s4_pair_sum(in.kap, in.kap);
    TracePair out;
    out.v0 = -brackets / (60 * d) + s4_kk / (8 * d * d);
    out.v1 = -(in.n + 240) * brackets / (60 * d) - in.n * s4_kk / (8 * d * d) +
             frac(1, 6) * in.s3_trace;
    return out;
}

}  // namespace traceforms
