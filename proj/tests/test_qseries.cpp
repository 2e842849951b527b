#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "traceforms/qseries.hpp"

using namespace traceforms;

namespace {

// Independent expansion of prod (1-q^n)^c for c > 0: repeated schoolbook
// multiplication over int64, no QSeries machinery involved.
std::vector<long long> euler_product_pow(int c, int prec) {
    std::vector<long long> p(prec, 0);
    p[0] = 1;
    for (int rep = 0; rep < c; ++rep)
        for (int n = 1; n < prec; ++n)
            for (int i = prec - 1; i >= n; --i) p[i] -= p[i - n];
    return p;
}

// Bernoulli numbers from the classical recurrence sum_{j<k} C(k+1,j) B_j = 0.
std::vector<Rat> bernoulli_recurrence(int count) {
    std::vector<Rat> b(count);
    b[0] = 1;
    for (int k = 1; k < count; ++k) {
        Rat s(0);
        for (int j = 0; j < k; ++j) s += Rat(binomial_nonneg(k + 1, j)) * b[j];
        b[k] = -s / Rat(k + 1);
    }
    return b;
}

QSeries random_series(std::mt19937_64& rng, long prec) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3), off(-2, 2);
    std::vector<Rat> c((std::size_t)prec);
    for (auto& x : c) x = frac(num(rng), den(rng));
    return QSeries(24 * off(rng), std::move(c));
}

}  // namespace

TEST_CASE("bernoulli numbers match the independent recurrence") {
    auto oracle = bernoulli_recurrence(20);
    for (int k = 0; k < 20; ++k) CHECK(bernoulli(k) == oracle[k]);
    CHECK(bernoulli(1) == frac(-1, 2));
    CHECK(bernoulli(6) == frac(1, 42));
    CHECK(bernoulli(12) == frac(-691, 2730));
    CHECK(bernoulli(13) == 0);
}

TEST_CASE("binomial with negative top argument") {
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(-1, 1) == -1);
    CHECK(binomial(-1, 2) == 1);
    CHECK(binomial(-2, 3) == -4);
    CHECK(binomial(5, 2) == 10);
}

TEST_CASE("eta^24 expansion against schoolbook product") {
    auto oracle = euler_product_pow(24, 12);
    QSeries d = eta_pow(24, 12);
    CHECK(d.offset24() == 24);
    for (int i = 0; i < 12; ++i) CHECK(d.coeffs()[i] == Rat((long)oracle[i]));
    CHECK(d.coeff(1) == 1);
    CHECK(d.coeff(2) == -24);
    CHECK(d.coeff(3) == 252);
    CHECK(d.coeff(4) == -1472);
    CHECK(d.coeff(5) == 4830);
}

TEST_CASE("eta has the sparse pentagonal expansion") {
    QSeries e = eta_pow(1, 60);
    CHECK(e.offset24() == 1);
    CHECK(e.coeff24(1) == 1);
    CHECK(e.coeff24(1 + 24) == -1);
    CHECK(e.coeff24(1 + 48) == -1);
    CHECK(e.coeff24(1 + 24 * 5) == 1);
    CHECK(e.coeff24(1 + 24 * 7) == 1);
    CHECK(e.coeff24(1 + 24 * 12) == -1);
    CHECK(e.coeff24(1 + 24 * 3) == 0);
    CHECK(e.coeff24(2) == 0);  // off-grid exponent
}

TEST_CASE("negative eta powers invert the product") {
    QSeries a = eta_pow(-8, 30), b = eta_pow(8, 30);
    QSeries prod = a * b;
    CHECK(prod.offset24() == 0);
    CHECK(prod.coeff(0) == 1);
    for (long n = 1; n < prod.prec(); ++n) CHECK(prod.coeff(n) == 0);
}

TEST_CASE("eisenstein series leading coefficients") {
    QSeries g4 = eisenstein(4, 10);
    CHECK(g4.coeff(0) == frac(1, 720));
    CHECK(g4.coeff(1) == frac(1, 3));
    CHECK(g4.coeff(2) == 3);  // sigma_3(2) = 9 times 1/3
    QSeries g6 = eisenstein(6, 10);
    CHECK(g6.coeff(0) == frac(-1, 30240));
    CHECK(g6.coeff(1) == frac(1, 60));
    CHECK(g6.coeff(2) == frac(33, 60));  // sigma_5(2) = 33
    CHECK_THROWS_AS(eisenstein(3, 5), InvalidWeight);
    CHECK_THROWS_AS(eisenstein(2, 5), InvalidWeight);
}

TEST_CASE("G2 head") {
    QSeries g = g2_series(6);
    CHECK(g.coeff(0) == frac(-1, 12));
    CHECK(g.coeff(1) == 2);
    CHECK(g.coeff(2) == 6);
    CHECK(g.coeff(3) == 8);
    CHECK(g.coeff(4) == 14);
}

TEST_CASE("delta agrees between its two construction routes") {
    QSeries d = delta_series(40);  // throws ConsistencyFailure on mismatch
    CHECK(d.coeff(1) == 1);
    CHECK(d.coeff(6) == -6048);
    QSeries poly = Rat(10800) *
                   (Rat(20) * eisenstein(4, 41).pow(3) - Rat(49) * eisenstein(6, 41).pow(2));
    CHECK(agree_on_overlap(d, poly));
}

TEST_CASE("j-series head") {
    QSeries j = j_series(4);
    CHECK(j.offset24() == -24);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 0);
    CHECK(j.coeff(1) == 196884);
    CHECK(j.coeff(2) == 21493760);
    CHECK(j.str() == "q^-1 + 0 + 196884q + 21493760q^2");
}

TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(20260814);
    for (int it = 0; it < 40; ++it) {
        QSeries f = random_series(rng, 10), g = random_series(rng, 12), h = random_series(rng, 9);
        CHECK(agree_on_overlap((f + g) * h, f * h + g * h));
        CHECK(agree_on_overlap(f * g, g * f));
        CHECK(agree_on_overlap((f * g) * h, f * (g * h)));
    }
}

TEST_CASE("inverse and pow round trips") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 20; ++it) {
        QSeries f = random_series(rng, 8);
        if (f.is_zero()) continue;
        QSeries one = f * f.inverse();
        CHECK(one.coeff(one.offset24() / 24) == 1);
        CHECK(agree_on_overlap(one, QSeries::constant(1, 8)));
        CHECK(agree_on_overlap(f.pow(3), f * f * f));
        CHECK(agree_on_overlap(f.pow(-2) * f.pow(2), QSeries::constant(1, 8)));
    }
}

TEST_CASE("cancellation yields the canonical zero series") {
    QSeries f = eisenstein(4, 15);
    QSeries z = f - f;
    CHECK(z.is_zero());
    CHECK(z.offset24() == 0);
    CHECK(z.prec() == 1);
    CHECK((Rat(0) * f).is_zero());
}

TEST_CASE("precision bookkeeping follows the min rule") {
    QSeries f = eisenstein(4, 10), g = eisenstein(6, 7);
    CHECK((f * g).prec() == 7);
    CHECK((f + g).prec() == 7);
    CHECK_THROWS_AS((void)(f * g).coeff(7), InsufficientPrecision);
    QSeries e = eta_pow(1, 5);
    CHECK_THROWS_AS((void)(e + f), IncompatibleGrid);
}

TEST_CASE("theta operator multiplies by the exponent") {
    QSeries d = delta_series(10);
    QSeries t = d.theta();
    for (long n = 1; n <= 10; ++n) CHECK(t.coeff(n) == Rat(n) * d.coeff(n));
    QSeries e = eta_pow(1, 5);
    CHECK(e.theta().coeff24(1) == frac(1, 24));
    CHECK(QSeries::constant(5, 4).theta().is_zero());
}

TEST_CASE("numeric evaluation: eta at tau = i") {
    // eta(i) = Gamma(1/4) / (2 pi^{3/4})
    QSeries e = eta_pow(1, 200);
    auto r = eval_q(e, {0.0, 1.0});
    CHECK(std::abs(r.value - std::complex<double>(0.7682254223260566, 0.0)) < 1e-12);
    CHECK(r.tail_bound < 1e-12);
    CHECK_THROWS_AS(eval_q(e, {0.5, -1.0}), UpperHalfPlaneError);
    CHECK_THROWS_AS(eval_q(e, {0.5, 0.0}), UpperHalfPlaneError);
}

TEST_CASE("named form parsing") {
    CHECK(NamedForm::parse("J").expand(2).coeff(-1) == 1);
    CHECK(NamedForm::parse("eta^-24").expand(3).offset24() == -24);
    CHECK(NamedForm::parse("G4").expand(2).coeff(0) == frac(1, 720));
    CHECK(NamedForm::parse("g2").expand(2).coeff(0) == frac(-1, 12));
    CHECK(NamedForm::parse("Z1").expand(3).coeff(0) == 24);
    CHECK_THROWS_AS(NamedForm::parse("G5"), ParseError);
    CHECK_THROWS_AS(NamedForm::parse("bogus"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK(parse_rat("-22/33") == frac(-2, 3));
}
