#pragma once

#include <string>
#include <vector>

#include "traceforms/rational.hpp"

namespace traceforms {

// Dense rational matrix, row major: m[i][j].
using Mat = std::vector<Vec>;

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_pow(const Mat& a, long e);
Rat mat_trace(const Mat& a);

// Finite-dimensional Lie algebra with exact structure constants, an invariant
// form normalized so a long coroot h has (h, h) = 2, and the Killing form
// recomputed from ad matrices.  Everything is derived from a defining matrix
// realization; construction cross-checks antisymmetry, Jacobi, invariance of
// both forms and form/Killing proportionality (ConsistencyFailure on any
// mismatch).
struct LieAlgebra {
    std::string name;
    long dim = 0;
    std::vector<std::string> labels;
    // bracket_table[i][j] = coordinates of [x_i, x_j]
    std::vector<std::vector<Vec>> bracket_table;
    Mat form;     // normalized invariant form
    Mat killing;  // kappa(x_i, x_j) = tr(ad x_i  ad x_j)

    Vec basis_vec(long i) const;
    Vec bracket(const Vec& a, const Vec& b) const;
    Rat form_value(const Vec& a, const Vec& b) const;
    Rat killing_value(const Vec& a, const Vec& b) const;
    Mat ad_matrix(const Vec& a) const;  // column j holds [a, x_j]
};

LieAlgebra sl2();  // basis e, f, h
LieAlgebra sl3();  // basis E12, E13, E23, E21, E31, E32, H1, H2

// Irreducible sl2 representation of dimension d: h diagonal with entries
// d-1-2i, f the lower shift, e raising with weight i(d-i).  The commutation
// relations [e,f] = h, [h,e] = 2e, [h,f] = -2f are checked on construction.
struct Sl2Irrep {
    long dim = 0;
    Mat e, f, h;
    static Sl2Irrep make(long d);
};

}  // namespace traceforms
