#pragma once

#include <string>
#include <vector>

#include "traceforms/rational.hpp"

namespace traceforms {

Rat dot(const Vec& a, const Vec& b);

enum class RootType { A, B, C, D, E6, E7, E8, F4, G2 };

RootType parse_root_type(const std::string& letter);

// Finite crystallographic root system in explicit rational coordinates.
// A_l and G2 live in proper hyperplanes of their ambient space, so anything
// that samples Cartan vectors must combine span_basis, never raw coordinates.
struct RootSystem {
    RootType type;
    int rank = 0;
    int ambient = 0;
    std::string name;
    std::vector<Vec> roots;
    std::vector<Vec> span_basis;  // `rank` independent roots

    long count() const { return (long)roots.size(); }
    long lie_dim() const { return rank + count(); }

    static RootSystem build(RootType t, int rank = 0);
    static RootSystem parse(const std::string& name);  // "A5", "E8", ...
};

// Highest-norm root, ties broken lexicographically (largest first).
Vec long_root(const RootSystem& rs);
// 2 theta / (theta, theta).
Vec coroot(const RootSystem& rs, const Vec& theta);
// alpha(h_theta) = 2 (alpha, theta)/(theta, theta) for every root; always an
// integer (ConsistencyFailure otherwise).
std::vector<long> coroot_values(const RootSystem& rs, const Vec& theta);
// sum over roots of alpha(h_theta)^2 for theta the long root.
long kappa_hh(const RootSystem& rs);
// sum over roots of (alpha, h)^k; the Cartan contributes nothing for k >= 1.
Rat power_trace(const RootSystem& rs, const Vec& h, long k);

// sum over roots of alpha(u)^4 - 6 alpha(u)^2 alpha(v)^2 + alpha(v)^4.
Rat x_trace(const RootSystem& rs, const Vec& u, const Vec& v);
// (u,v) = 0 and (u,u) = (v,v); advisory hypothesis for x_trace vanishing.
bool pair_constrained(const RootSystem& rs, const Vec& u, const Vec& v);

struct PairSums {
    Rat s40, s22, s04;  // sum a(p)^4, sum a(p)^2 a(q)^2, sum a(q)^4
};
PairSums pair_sums(const RootSystem& rs, const Vec& p, const Vec& q);

// 6 kappa(h_theta, h_theta) / (lie_dim - 24); DegenerateRatio at dim 24.
Rat level_ratio(const RootSystem& rs);

struct SweepRow {
    int rank;
    Rat trace;
    Rat closed;
    bool match;
};
// x_trace on the standard orthogonal equal-norm pair for the classical
// families, against the closed forms 8l+8 (A), 8l-28 (B), 8l+32 (C),
// 8l-32 (D).
std::vector<SweepRow> classical_sweep(RootType t, int lmin, int lmax);

// Constrained random pairs (p, q) with q made orthogonal to p by exact
// Gram-Schmidt inside the root span; the norm constraint is carried by the
// rational scale lambda = (q,q)/(p,p), and the report records whether
// lambda^2 s40 - 6 lambda s22 + s04 vanished on every draw.  Rank-1 systems
// only admit the degenerate q = 0, which the check records separately.
struct FourDesignReport {
    std::string name;
    int trials = 0;
    int failures = 0;
    int degenerate = 0;
    unsigned long seed = 0;
    bool all_zero = false;
};
FourDesignReport four_design_check(const RootSystem& rs, int trials, unsigned long seed);

// c with sum_a alpha(x)^4 = c (x,x)^2, read off one generic vector and
// re-verified on a second (ConsistencyFailure if the type admits no such c).
Rat design_constant(const RootSystem& rs);

// The eight types with a transitive-enough Weyl action for the four-design
// argument: A1, A2, D4, E6, E7, E8, F4, G2.
std::vector<RootSystem> augmented_types();

}  // namespace traceforms
