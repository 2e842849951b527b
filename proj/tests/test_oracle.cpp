#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "traceforms/affine.hpp"
#include "traceforms/common.hpp"
#include "traceforms/trace_formulas.hpp"

using namespace traceforms;

namespace {

Vec random_element(const LieAlgebra& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    Vec v(g.dim, Rat(0));
    for (long i = 0; i < g.dim; ++i) v[i] = frac(num(rng), den(rng));
    if (v == Vec(g.dim, Rat(0))) v[0] = 1;
    return v;
}

// a random state supported in degrees <= cap, built from random creations
State random_state(const VacuumModule& M, long cap, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> mode(1, 2), gen(0, M.algebra().dim - 1), coef(-3, 3);
    State s;
    for (int trial = 0; trial < 4; ++trial) {
        State part = M.vacuum();
        long deg = 0;
        while (true) {
            long n = mode(rng);
            if (deg + n > cap) break;
            part = M.apply(gen(rng), -n, part);
            deg += n;
        }
        state_axpy(s, Rat(coef(rng)), part);
    }
    return s;
}

bool mats_equal(const Mat& a, const Mat& b) { return a == b; }

}  // namespace

TEST_CASE("structure constants and invariant forms") {
    LieAlgebra g2 = sl2();
    LieAlgebra g3 = sl3();
    CHECK(g2.dim == 3);
    CHECK(g3.dim == 8);

    // sl2 basis e,f,h: [e,f] = h, [h,e] = 2e, [h,f] = -2f
    CHECK(g2.bracket_table[0][1] == Vec{Rat(0), Rat(0), Rat(1)});
    CHECK(g2.bracket_table[2][0] == Vec{Rat(2), Rat(0), Rat(0)});
    CHECK(g2.bracket_table[2][1] == Vec{Rat(0), Rat(-2), Rat(0)});

    // trace form: (e,f) = 1, (h,h) = 2; Killing = 2 dim_defining * form
    CHECK(g2.form[0][1] == 1);
    CHECK(g2.form[2][2] == 2);
    CHECK(g2.killing[2][2] == 8);
    CHECK(g3.killing[6][6] == 12);
    for (long i = 0; i < g2.dim; ++i)
        for (long j = 0; j < g2.dim; ++j) CHECK(g2.killing[i][j] == 4 * g2.form[i][j]);
    for (long i = 0; i < g3.dim; ++i)
        for (long j = 0; j < g3.dim; ++j) CHECK(g3.killing[i][j] == 6 * g3.form[i][j]);

    // every adjoint action is traceless
    for (long i = 0; i < g3.dim; ++i) CHECK(mat_trace(g3.ad_matrix(g3.basis_vec(i))) == 0);
}

TEST_CASE("invariant bilinear forms satisfy the exchange identity") {
    // ([a,c],[b,d]) = ([a,b],[c,d]) + ([a,d],[b,c]) for any invariant form
    LieAlgebra g = sl3();
    std::mt19937_64 rng(20260814);
    for (int k = 0; k < 12; ++k) {
        Vec a = random_element(g, rng), b = random_element(g, rng);
        Vec c = random_element(g, rng), d = random_element(g, rng);
        Vec ab = g.bracket(a, b), cd = g.bracket(c, d);
        Vec ac = g.bracket(a, c), bd = g.bracket(b, d);
        Vec ad = g.bracket(a, d), bc = g.bracket(b, c);
        CHECK(g.form_value(ac, bd) == g.form_value(ab, cd) + g.form_value(ad, bc));
        CHECK(g.killing_value(ac, bd) == g.killing_value(ab, cd) + g.killing_value(ad, bc));
    }
}

TEST_CASE("finite-dimensional sl2 irreducibles") {
    CHECK_THROWS_AS(Sl2Irrep::make(0), InvalidRank);
    Sl2Irrep four = Sl2Irrep::make(4);
    CHECK(four.h[0][0] == 3);
    CHECK(four.h[3][3] == -3);
    CHECK(mat_trace(mat_pow(four.h, 4)) == 164);
    CHECK(mat_trace(Sl2Irrep::make(3).h) == 0);
}

TEST_CASE("elementary mode actions on the vacuum module") {
    LieAlgebra g = sl2();
    Rat level = frac(7, 3);
    VacuumModule M(g, level);
    const long E = 0, F = 1, H = 2;

    State vac = M.vacuum();
    CHECK(M.apply(E, 0, vac) == State{});
    CHECK(M.apply(E, 3, vac) == State{});

    // e(1) f(-1) |0> = <e|f> |0> = level |0>
    State fv = M.apply(F, -1, vac);
    CHECK(M.apply(E, 1, fv) == state_scaled(level, vac));
    // h(0) e(-1)|0> = 2 e(-1)|0>
    State ev = M.apply(E, -1, vac);
    CHECK(M.apply(H, 0, ev) == state_scaled(Rat(2), ev));
    // e(2) f(-1)|0> = [e,f](1)|0> = 0 (no central term: modes do not cancel)
    CHECK(M.apply(E, 2, fv) == State{});
    // h(1) h(-1)|0> = <h|h>|0> = 2 level |0>
    State hv = M.apply(H, -1, vac);
    CHECK(M.apply(H, 1, hv) == state_scaled(2 * level, vac));

    CHECK_THROWS_AS(M.apply(E, -5, vac), DegreeOverflow);
    State deep = M.apply(E, -4, vac);
    CHECK_THROWS_AS(M.apply(E, -1, deep), DegreeOverflow);

    // slice dimensions for dim g = 3: partitions weighted by generator choice
    CHECK(M.basis(0).size() == 1);
    CHECK(M.basis(1).size() == 3);
    CHECK(M.basis(2).size() == 9);   // 3 at (2) + C(3+1,2) = 6 at (1,1)
    CHECK(M.basis(3).size() == 22);  // 3 + 9 + 10
}

TEST_CASE("creation-word normalization is confluent") {
    LieAlgebra g = sl3();
    std::mt19937_64 rng(4057);
    std::uniform_int_distribution<long> mode(1, 2), gen(0, g.dim - 1);
    for (int k = 0; k < 30; ++k) {
        std::vector<std::pair<long, long>> seq;
        long deg = 0;
        while (deg < 4) {
            long n = mode(rng);
            if (deg + n > 4) n = 1;
            seq.push_back({n, gen(rng)});
            deg += n;
        }
        State leftmost = normalize_creation_word(g, seq);
        auto pick = [&rng](size_t count) {
            return (size_t)std::uniform_int_distribution<size_t>(0, count - 1)(rng);
        };
        CHECK(normalize_creation_word(g, seq, pick) == leftmost);
    }
}

TEST_CASE("mode brackets hold on random states") {
    LieAlgebra g = sl3();
    VacuumModule M(g, frac(5, 2));
    std::mt19937_64 rng(991);
    std::uniform_int_distribution<long> mode(-1, 2);
    for (int k = 0; k < 16; ++k) {
        Vec a = random_element(g, rng), b = random_element(g, rng);
        long m = mode(rng), n = mode(rng);
        State s = random_state(M, 2, rng);
        State lhs = M.apply(a, m, M.apply(b, n, s));
        state_axpy(lhs, Rat(-1), M.apply(b, n, M.apply(a, m, s)));
        State rhs = M.apply(g.bracket(a, b), m + n, s);
        if (m + n == 0 && m != 0) state_axpy(rhs, m * M.lz(a, b), s);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("zero modes of degree-1 vectors act by the adjoint representation") {
    LieAlgebra g = sl3();
    VacuumModule M(g, frac(3, 4));
    std::mt19937_64 rng(77);
    for (int k = 0; k < 4; ++k) {
        Vec a = random_element(g, rng);
        CHECK(mats_equal(M.zero_mode_matrix(M.element(a), 1), g.ad_matrix(a)));
    }
}

TEST_CASE("vacuum zero mode is the identity on every slice") {
    VacuumModule M(sl2(), Rat(2));
    for (long d = 0; d <= 2; ++d) {
        Mat id = M.zero_mode_matrix(M.vacuum(), d);
        for (size_t i = 0; i < id.size(); ++i)
            for (size_t j = 0; j < id.size(); ++j) CHECK(id[i][j] == (i == j ? 1 : 0));
    }
}

TEST_CASE("mode expansion of a single creation reproduces the plain mode") {
    VacuumModule M(sl2(), Rat(1));
    Mono e1{{{1, 0}}};
    for (long t = -3; t <= 3; ++t) {
        OpMap expect{{Word{{0, t}}, Rat(1)}};
        CHECK(M.expand_mode(e1, t) == expect);
    }
}

TEST_CASE("zero-mode commutators represent the bracket") {
    LieAlgebra g = sl2();
    VacuumModule M(g, frac(1, 2));
    std::mt19937_64 rng(15);
    for (long d = 0; d <= 2; ++d)
        for (int k = 0; k < 3; ++k) {
            Vec a = random_element(g, rng), b = random_element(g, rng);
            Mat oa = M.zero_mode_matrix(M.element(a), d);
            Mat ob = M.zero_mode_matrix(M.element(b), d);
            Mat lhs = mat_mul(oa, ob), rhs = M.zero_mode_matrix(M.element(g.bracket(a, b)), d);
            Mat ba = mat_mul(ob, oa);
            for (size_t i = 0; i < lhs.size(); ++i)
                for (size_t j = 0; j < lhs.size(); ++j)
                    CHECK(lhs[i][j] - ba[i][j] == rhs[i][j]);
        }
}

TEST_CASE("degree-1 trace of o(u(-1)v) mixes Killing and level forms") {
    for (const LieAlgebra& g : {sl2(), sl3()}) {
        Rat level = frac(7, 5);
        VacuumModule M(g, level);
        std::mt19937_64 rng(33);
        for (int k = 0; k < 4; ++k) {
            Vec u = random_element(g, rng), v = random_element(g, rng);
            State s = M.apply(u, -1, M.element(v));
            Rat expect = g.killing_value(u, v) + 2 * level * g.form_value(u, v);
            CHECK(M.trace_o(s, 1) == expect);
            CHECK(mat_trace(M.zero_mode_matrix(s, 1)) == expect);
            // a homogeneous weight-2 state has no vacuum component in its
            // zero-mode image, so the degree-0 trace vanishes
            CHECK(M.trace_o(s, 0) == 0);
        }
    }
}

TEST_CASE("square-bracket modes convert through the weight-1 table") {
    LieAlgebra g = sl2();
    Rat level(3);
    VacuumModule M(g, level);
    const long E = 0, F = 1;
    // e[-1]|0> = e(-1)|0>: the n = -1 column of the table is {1, 1/2, -1/12, ...}
    // applied to modes -1, 0, 1, ... and every mode but the first kills |0>
    CHECK(M.apply_square(g.basis_vec(E), -1, M.vacuum()) == M.element(g.basis_vec(E)));
    // e[1] f(-1)|0> = sum_m c_{1,m} e(m) f(-1)|0> = c_{1,1} <e|f> |0> = level |0>
    State fv = M.element(g.basis_vec(F));
    CHECK(M.apply_square(g.basis_vec(E), 1, fv) == state_scaled(level, M.vacuum()));
}

TEST_CASE("square-bracket quartic expansion matches its round-bracket form") {
    for (const Rat& level : {Rat(1), Rat(2), frac(5, 2)}) {
        OracleReport r = verify_expansion(sl2(), level, 8, 20260814);
        INFO(r.witness);
        CHECK(r.pass);
    }
    OracleReport r3 = verify_expansion(sl3(), frac(7, 3), 6, 20260814);
    INFO(r3.witness);
    CHECK(r3.pass);
}

TEST_CASE("quartic zero-mode traces match the closed formulas") {
    for (const Rat& level : {Rat(1), frac(5, 2)}) {
        OracleReport r = verify_general_traces(sl2(), level, 8, 20260814);
        INFO(r.witness);
        CHECK(r.pass);
    }
    OracleReport r3 = verify_general_traces(sl3(), Rat(2), 4, 20260814);
    INFO(r3.witness);
    CHECK(r3.pass);
}

TEST_CASE("the two quartic trace displays agree under the form constraint") {
    // feed both evaluators inputs that satisfy <u|v> = 12 kappa(u,v)/(n-24):
    // they must then return identical traces
    std::mt19937_64 rng(8821);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4), dims(25, 400);
    for (int k = 0; k < 25; ++k) {
        TraceInputs in;
        in.n = dims(rng);
        in.kap.assign(4, Vec(4, Rat(0)));
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) in.kap[i][j] = in.kap[j][i] = frac(num(rng), den(rng));
        in.kap_ab_cd = frac(num(rng), den(rng));
        in.kap_ad_bc = frac(num(rng), den(rng));
        in.s3_trace = frac(num(rng), den(rng));
        Rat scale = 12 / (in.n - 24);
        in.lz.assign(4, Vec(4, Rat(0)));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) in.lz[i][j] = scale * in.kap[i][j];
        in.lz_ab_cd = scale * in.kap_ab_cd;
        in.lz_ad_bc = scale * in.kap_ad_bc;
        TracePair a = general_traces_eval(in), b = general_traces_kappa_eval(in);
        CHECK(a.v0 == b.v0);
        CHECK(a.v1 == b.v1);
    }
    TraceInputs bad;
    bad.n = 24;
    CHECK_THROWS_AS(general_traces_kappa_eval(bad), DegenerateRatio);
}
