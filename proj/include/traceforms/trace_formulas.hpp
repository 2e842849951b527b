#pragma once

#include "traceforms/liealg.hpp"

namespace traceforms {

struct TracePair {
    Rat v0, v1;
};

// Raw ingredients of the quartic trace formulas for o(a[-1]b[-1]c[-1]d):
// pairwise values of the normalized form <|> and of the Killing form among
// the four elements (indices 0..3 = a..d), the two bracket contractions, and
// the S3-symmetrized product of adjoint actions.
struct TraceInputs {
    Rat n;  // dim of the degree-1 slice
    Mat lz;
    Mat kap;
    Rat lz_ab_cd, lz_ad_bc;    // <[a,b]|[c,d]>, <[a,d]|[b,c]>
    Rat kap_ab_cd, kap_ad_bc;  // kappa([a,b],[c,d]), kappa([a,d],[b,c])
    Rat s3_trace;              // sum over S3 of tr a(0) pi(b(0)) pi(c(0)) pi(d(0))
};

TraceInputs trace_inputs(const LieAlgebra& g, const Rat& level, const Vec& a, const Vec& b,
                         const Vec& c, const Vec& d);

// The two displays in terms of <|>: literal 24-term S4 sums throughout.
//   V0 = -1/720 (4<[a,b]|[c,d]> + 5<[a,d]|[b,c]>) + 1/1152 sum_{S4} <pa|pb><pc|pd>
//   V1 = -(n+240)/720 (...) + (n-48)/1152 sum_{S4} <pa|pb><pc|pd>
//        - 1/48 sum_{S4} <pa|pb> kappa(pc,pd) + 1/6 s3_trace
TracePair general_traces_eval(const TraceInputs& in);

// The same traces rewritten through <u|v> = 12 kappa(u,v)/(n-24) (charge 24,
// n != 24):
//   V0 = -1/(60(n-24)) (4k([a,b],[c,d]) + 5k([a,d],[b,c]))
//        + 1/(8(n-24)^2) sum_{S4} k(pa,pb) k(pc,pd)
//   V1 = -(n+240)/(60(n-24)) (...) - n/(8(n-24)^2) sum_{S4} k k + 1/6 s3_trace
TracePair general_traces_kappa_eval(const TraceInputs& in);

}  // namespace traceforms
