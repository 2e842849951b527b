#include "traceforms/liealg.hpp"

#include <cassert>

#include "traceforms/common.hpp"

namespace traceforms {

namespace {

Mat mat_zero(long r, long c) { return Mat(r, Vec(c, Rat(0))); }

Mat mat_sub(const Mat& a, const Mat& b) {
    Mat out = a;
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

Mat commutator(const Mat& a, const Mat& b) { return mat_sub(mat_mul(a, b), mat_mul(b, a)); }

bool mat_is_zero(const Mat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

}  // namespace

Mat mat_mul(const Mat& a, const Mat& b) {
    long n = (long)a.size(), k = (long)b.size(), m = (long)b[0].size();
    Mat out = mat_zero(n, m);
    for (long i = 0; i < n; ++i)
        for (long l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (long j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

Mat mat_pow(const Mat& a, long e) {
    assert(e >= 1);
    Mat out = a;
    for (long i = 1; i < e; ++i) out = mat_mul(out, a);
    return out;
}

Rat mat_trace(const Mat& a) {
    Rat t(0);
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

Vec LieAlgebra::basis_vec(long i) const {
    Vec v(dim, Rat(0));
    v[i] = 1;
    return v;
}

Vec LieAlgebra::bracket(const Vec& a, const Vec& b) const {
    Vec out(dim, Rat(0));
    for (long i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < dim; ++j) {
            if (b[j] == 0) continue;
            Rat c = a[i] * b[j];
            const Vec& br = bracket_table[i][j];
            for (long k = 0; k < dim; ++k)
                if (br[k] != 0) out[k] += c * br[k];
        }
    }
    return out;
}

Rat LieAlgebra::form_value(const Vec& a, const Vec& b) const {
    Rat out(0);
    for (long i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < dim; ++j)
            if (b[j] != 0) out += a[i] * b[j] * form[i][j];
    }
    return out;
}

Rat LieAlgebra::killing_value(const Vec& a, const Vec& b) const {
    Rat out(0);
    for (long i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < dim; ++j)
            if (b[j] != 0) out += a[i] * b[j] * killing[i][j];
    }
    return out;
}

Mat LieAlgebra::ad_matrix(const Vec& a) const {
    Mat out = mat_zero(dim, dim);
    for (long j = 0; j < dim; ++j) {
        Vec img = bracket(a, basis_vec(j));
        for (long i = 0; i < dim; ++i) out[i][j] = img[i];
    }
    return out;
}

namespace {

// Assemble a LieAlgebra from a matrix realization: `gens` are the basis
// matrices, `coords` writes an arbitrary matrix in that basis.  The invariant
// form is the defining trace form (already (h_theta, h_theta) = 2 for type A)
// and the Killing form is tr(ad ad).
LieAlgebra from_matrices(const std::string& name, const std::vector<std::string>& labels,
                         const std::vector<Mat>& gens, Vec (*coords)(const Mat&)) {
    LieAlgebra g;
    g.name = name;
    g.labels = labels;
    g.dim = (long)gens.size();

    g.bracket_table.assign(g.dim, std::vector<Vec>(g.dim));
    for (long i = 0; i < g.dim; ++i)
        for (long j = 0; j < g.dim; ++j) {
            Mat br = commutator(gens[i], gens[j]);
            Vec c = coords(br);
            // the coordinate map must actually invert the realization
            Mat rebuilt = mat_zero(br.size(), br[0].size());
            for (long k = 0; k < g.dim; ++k)
                if (c[k] != 0)
                    for (size_t r = 0; r < br.size(); ++r)
                        for (size_t s = 0; s < br[r].size(); ++s)
                            rebuilt[r][s] += c[k] * gens[k][r][s];
            if (!mat_is_zero(mat_sub(br, rebuilt)))
                throw ConsistencyFailure(name + ": coordinate map misses a bracket");
            g.bracket_table[i][j] = c;
        }

    g.form = mat_zero(g.dim, g.dim);
    for (long i = 0; i < g.dim; ++i)
        for (long j = 0; j < g.dim; ++j) g.form[i][j] = mat_trace(mat_mul(gens[i], gens[j]));

    // antisymmetry and Jacobi
    for (long i = 0; i < g.dim; ++i)
        for (long j = 0; j < g.dim; ++j)
            for (long k = 0; k < g.dim; ++k)
                if (g.bracket_table[i][j][k] != -g.bracket_table[j][i][k])
                    throw ConsistencyFailure(name + ": bracket not antisymmetric");
    for (long i = 0; i < g.dim; ++i)
        for (long j = 0; j < g.dim; ++j)
            for (long k = 0; k < g.dim; ++k) {
                Vec s = g.bracket(g.basis_vec(i), g.bracket_table[j][k]);
                Vec t = g.bracket(g.basis_vec(j), g.bracket_table[k][i]);
                Vec u = g.bracket(g.basis_vec(k), g.bracket_table[i][j]);
                for (long l = 0; l < g.dim; ++l)
                    if (s[l] + t[l] + u[l] != 0) throw ConsistencyFailure(name + ": Jacobi fails");
            }

    // Killing from ad matrices
    std::vector<Mat> ads;
    ads.reserve(g.dim);
    for (long i = 0; i < g.dim; ++i) ads.push_back(g.ad_matrix(g.basis_vec(i)));
    g.killing = mat_zero(g.dim, g.dim);
    for (long i = 0; i < g.dim; ++i)
        for (long j = 0; j < g.dim; ++j) g.killing[i][j] = mat_trace(mat_mul(ads[i], ads[j]));

    // invariance of both forms: ([x_i, x_j], x_k) + (x_j, [x_i, x_k]) = 0
    for (long i = 0; i < g.dim; ++i)
        for (long j = 0; j < g.dim; ++j)
            for (long k = 0; k < g.dim; ++k) {
                Vec xk = g.basis_vec(k), xj = g.basis_vec(j);
                if (g.form_value(g.bracket_table[i][j], xk) + g.form_value(xj, g.bracket_table[i][k]) != 0)
                    throw ConsistencyFailure(name + ": trace form not invariant");
                if (g.killing_value(g.bracket_table[i][j], xk) +
                        g.killing_value(xj, g.bracket_table[i][k]) != 0)
                    throw ConsistencyFailure(name + ": Killing form not invariant");
            }

    // the two forms must be proportional (g simple)
    Rat ratio(0);
    for (long i = 0; i < g.dim && ratio == 0; ++i)
        for (long j = 0; j < g.dim && ratio == 0; ++j)
            if (g.form[i][j] != 0) ratio = g.killing[i][j] / g.form[i][j];
    if (ratio == 0) throw ConsistencyFailure(name + ": trace form vanishes");
    for (long i = 0; i < g.dim; ++i)
        for (long j = 0; j < g.dim; ++j)
            if (g.killing[i][j] != ratio * g.form[i][j])
                throw ConsistencyFailure(name + ": Killing form not proportional to trace form");

    return g;
}

Mat unit_matrix(long n, long r, long c) {
    Mat m = mat_zero(n, n);
    m[r][c] = 1;
    return m;
}

Vec sl2_coords(const Mat& m) {
    // traceless 2x2: a12 e + a21 f + a11 h
    return {m[0][1], m[1][0], m[0][0]};
}

Vec sl3_coords(const Mat& m) {
    // off-diagonal entries map straight onto the E_{ij}; the traceless
    // diagonal (d1, d2, d3) is d1 H1 - d3 H2
    return {m[0][1], m[0][2], m[1][2], m[1][0], m[2][0], m[2][1], m[0][0], -m[2][2]};
}

}  // namespace

LieAlgebra sl2() {
    Mat e = unit_matrix(2, 0, 1);
    Mat f = unit_matrix(2, 1, 0);
    Mat h = mat_zero(2, 2);
    h[0][0] = 1;
    h[1][1] = -1;
    return from_matrices("sl2", {"e", "f", "h"}, {e, f, h}, sl2_coords);
}

LieAlgebra sl3() {
    std::vector<Mat> gens;
    std::vector<std::string> labels = {"E12", "E13", "E23", "E21", "E31", "E32", "H1", "H2"};
    gens.push_back(unit_matrix(3, 0, 1));
    gens.push_back(unit_matrix(3, 0, 2));
    gens.push_back(unit_matrix(3, 1, 2));
    gens.push_back(unit_matrix(3, 1, 0));
    gens.push_back(unit_matrix(3, 2, 0));
    gens.push_back(unit_matrix(3, 2, 1));
    Mat h1 = mat_zero(3, 3), h2 = mat_zero(3, 3);
    h1[0][0] = 1;
    h1[1][1] = -1;
    h2[1][1] = 1;
    h2[2][2] = -1;
    gens.push_back(h1);
    gens.push_back(h2);
    return from_matrices("sl3", labels, gens, sl3_coords);
}

Sl2Irrep Sl2Irrep::make(long d) {
    if (d < 1) throw InvalidRank("representation dimension must be positive");
    Sl2Irrep rep;
    rep.dim = d;
    rep.e = mat_zero(d, d);
    rep.f = mat_zero(d, d);
    rep.h = mat_zero(d, d);
    for (long i = 0; i < d; ++i) rep.h[i][i] = d - 1 - 2 * i;
    for (long i = 0; i + 1 < d; ++i) rep.f[i + 1][i] = 1;
    for (long i = 1; i < d; ++i) rep.e[i - 1][i] = i * (d - i);

    if (!mat_is_zero(mat_sub(commutator(rep.e, rep.f), rep.h)))
        throw ConsistencyFailure("sl2 irrep: [e,f] != h");
    Mat he = commutator(rep.h, rep.e);
    Mat hf = commutator(rep.h, rep.f);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            if (he[i][j] != 2 * rep.e[i][j]) throw ConsistencyFailure("sl2 irrep: [h,e] != 2e");
            if (hf[i][j] != -2 * rep.f[i][j]) throw ConsistencyFailure("sl2 irrep: [h,f] != -2f");
        }
    return rep;
}

}  // namespace traceforms
