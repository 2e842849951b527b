#pragma once

#include <map>
#include <vector>

#include "traceforms/rational.hpp"

namespace traceforms {

// Truncated Laurent expansion in z with integer exponents: coeffs()[i]
// multiplies z^{lead() + i}.
class ZSeries {
public:
    ZSeries(long lead, std::vector<Rat> coeffs);

    static ZSeries zero() { return ZSeries(0, {Rat(0)}); }

    long lead() const { return lead_; }
    long size() const { return (long)coeffs_.size(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat at(long e) const;  // coefficient of z^e, zero below the window
    bool is_zero() const;

    friend ZSeries operator*(const ZSeries& f, const ZSeries& g);
    friend ZSeries operator+(const ZSeries& f, const ZSeries& g);
    friend ZSeries operator*(const Rat& c, const ZSeries& f);
    ZSeries inverse() const;  // needs nonzero leading coefficient
    ZSeries pow(long e) const;

private:
    void normalize();
    long lead_;
    std::vector<Rat> coeffs_;
};

// (log(1+z))^n = z^n (1 - z/2 + ...)^n, any integer n, with nterms stored
// coefficients from z^n.
ZSeries log1p_pow(long n, long nterms);
// (e^z - 1)^n, any integer n.
ZSeries expm1_pow(long n, long nterms);
// (1+z)^a for rational a (binomial series).
ZSeries binom_series(const Rat& a, long nterms);
// e^{az}.
ZSeries exp_series(const Rat& a, long nterms);

// One row of a mode-conversion table: the coefficients c_{n,m} expressing a
// square-bracket mode of index n through round-bracket modes of index m (or
// the other way round).  Entries vanish for m < n.
struct ConversionTable {
    long wt = 0;
    long n = 0;
    long mmax = 0;
    std::map<long, Rat> entries;  // m -> coefficient, n <= m <= mmax

    Rat at(long m) const;  // zero below n, InsufficientPrecision beyond mmax
};

// a[n] = sum_m c_{n,m} a(m) with c_{n,m} = [z^m] (log(1+z))^n (1+z)^{wt-1}.
ConversionTable square_from_round(long wt, long n, long mmax);
// a(n) = sum_m c'_{n,m} a[m] with c'_{n,m} = [z^m] (e^z - 1)^n e^{z(1-wt)}.
ConversionTable round_from_square(long wt, long n, long mmax);

// Compose the two tables as matrices on the index window [lo, hi], both ways;
// true iff both compositions are exactly the identity.
bool roundtrip_identity(long wt, long lo, long hi);

// L[n] = id_coeff * id + sum_k l_coeff[k] L(k), for k = n .. kmax.  The
// identity contribution is -c/24 times the table entry at mode -1 (only
// reachable for n <= -2).
struct VirasoroExpansion {
    Rat c;
    long n = 0;
    Rat id_coeff;
    std::map<long, Rat> l_coeff;
};
VirasoroExpansion virasoro_modes(const Rat& c, long n, long kmax);

}  // namespace traceforms
