#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "traceforms/rational.hpp"

namespace traceforms {

// Truncated q-expansion with exact rational coefficients.  Exponents live on
// the grid (1/24)Z: coeffs()[i] multiplies q^{(offset24() + 24*i)/24}.  A
// series represents a function that vanishes below q^{offset24/24}, matches
// the stored coefficients up to (but excluding) q^{cutoff24()/24}, and is
// unknown beyond that.  The leading stored coefficient is nonzero except for
// the canonical zero series (offset24 = 0, single zero coefficient), which
// stands for the exact zero function.
class QSeries {
public:
    QSeries() : offset24_(0), coeffs_(1, Rat(0)) {}
    QSeries(long offset24, std::vector<Rat> coeffs);

    static QSeries zero() { return QSeries(); }
    static QSeries constant(const Rat& c, long prec);
    // c * q^{e24/24} padded with zeros up to the requested precision.
    static QSeries monomial(const Rat& c, long e24, long prec);

    long offset24() const { return offset24_; }
    long prec() const { return (long)coeffs_.size(); }
    long cutoff24() const { return offset24_ + 24 * prec(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0 && offset24_ == 0; }

    // Coefficient of q^{e24/24}; exact zero below the stored window or off the
    // stored grid, InsufficientPrecision at or beyond the cutoff.
    Rat coeff24(long e24) const;
    // Coefficient of q^n.
    Rat coeff(long n) const { return coeff24(24 * n); }

    QSeries truncated(long new_prec) const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& f, const QSeries& g);
    friend QSeries operator-(const QSeries& f, const QSeries& g);
    friend QSeries operator*(const QSeries& f, const QSeries& g);
    friend QSeries operator*(const Rat& c, const QSeries& f);
    friend QSeries operator*(const QSeries& f, const Rat& c) { return c * f; }
    friend QSeries operator+(const QSeries& f, const Rat& c);
    friend QSeries operator+(const Rat& c, const QSeries& f) { return f + c; }
    friend QSeries operator-(const QSeries& f, const Rat& c) { return f + Rat(-c); }

    QSeries inverse() const;  // NotInvertible on the zero series
    QSeries pow(long e) const;
    QSeries theta() const;  // q d/dq

    bool operator==(const QSeries&) const = default;

    std::string str(long max_terms = -1) const;

private:
    void normalize();

    long offset24_;
    std::vector<Rat> coeffs_;
};

// True when f and g agree at every exponent both know about.
bool agree_on_overlap(const QSeries& f, const QSeries& g);
// Number of whole-q steps both series know, measured from the smaller offset;
// unbounded overlaps (a zero operand) report a large sentinel.
long overlap_terms(const QSeries& f, const QSeries& g);

// eta(tau)^c = q^{c/24} prod_{n>=1} (1-q^n)^c, any integer c, with prec stored
// coefficients from the leading exponent c/24.
QSeries eta_pow(long c, long prec);
// G_k = -B_k/k! + 2/(k-1)! sum_{n>=1} sigma_{k-1}(n) q^n, k even >= 4.
QSeries eisenstein(unsigned long k, long prec);
// G_2 = -1/12 + 2 sum sigma_1(n) q^n (quasimodular).
QSeries g2_series(long prec);
// Discriminant, built as 10800(20 G_4^3 - 49 G_6^2) and cross-checked against
// eta^24; ConsistencyFailure if the two routes ever disagree.
QSeries delta_series(long prec);
// J = E_4^3/Delta - 744 with E_4 = 720 G_4; starts q^{-1} + 0 + 196884q.
QSeries j_series(long prec);

struct EvalResult {
    std::complex<double> value;
    double tail_bound;  // magnitude of the last summed term
};
// Evaluate at q = exp(2 pi i tau), Im tau > 0, using at most `terms` stored
// coefficients (all of them when terms < 0).
EvalResult eval_q(const QSeries& f, std::complex<double> tau, long terms = -1);

// Expansions addressable by name on the command line.
struct NamedForm {
    enum class Kind { One, Eta, EtaPow, Eisenstein, G2, Delta, J, Z1 };
    Kind kind = Kind::One;
    long param = 0;  // c for EtaPow, k for Eisenstein, dim V_1 for Z1

    static NamedForm parse(const std::string& name);
    QSeries expand(long prec) const;
    std::string name() const;
    static std::string catalogue();
};

}  // namespace traceforms
