#include "traceforms/zmodes.hpp"

#include <algorithm>

namespace traceforms {

ZSeries::ZSeries(long lead, std::vector<Rat> coeffs) : lead_(lead), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("ZSeries: empty coefficient list");
    normalize();
}

void ZSeries::normalize() {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
    if (k == coeffs_.size()) {
        lead_ = 0;
        coeffs_.assign(1, Rat(0));
        return;
    }
    if (k > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + (long)k);
        lead_ += (long)k;
    }
}

bool ZSeries::is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0 && lead_ == 0; }

Rat ZSeries::at(long e) const {
    if (is_zero()) return Rat(0);
    long d = e - lead_;
    if (d < 0) return Rat(0);
    if (d >= (long)coeffs_.size())
        throw InsufficientPrecision("ZSeries coefficient beyond stored window");
    return coeffs_[(std::size_t)d];
}

ZSeries operator*(const ZSeries& f, const ZSeries& g) {
    if (f.is_zero() || g.is_zero()) return ZSeries::zero();
    std::size_t p = (std::size_t)std::min(f.size(), g.size());
    std::vector<Rat> out(p, Rat(0));
    for (std::size_t i = 0; i < f.coeffs_.size() && i < p; ++i) {
        if (f.coeffs_[i] == 0) continue;
        std::size_t jmax = std::min(p - i, g.coeffs_.size());
        for (std::size_t j = 0; j < jmax; ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return ZSeries(f.lead_ + g.lead_, std::move(out));
}

ZSeries operator+(const ZSeries& f, const ZSeries& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    long lo = std::min(f.lead_, g.lead_);
    long hi = std::min(f.lead_ + f.size(), g.lead_ + g.size());
    std::vector<Rat> out((std::size_t)(hi - lo), Rat(0));
    for (long e = lo; e < hi; ++e) {
        Rat a = (e >= f.lead_) ? f.coeffs_[(std::size_t)(e - f.lead_)] : Rat(0);
        Rat b = (e >= g.lead_) ? g.coeffs_[(std::size_t)(e - g.lead_)] : Rat(0);
        out[(std::size_t)(e - lo)] = a + b;
    }
    return ZSeries(lo, std::move(out));
}

ZSeries operator*(const Rat& c, const ZSeries& f) {
    if (c == 0 || f.is_zero()) return ZSeries::zero();
    std::vector<Rat> out = f.coeffs_;
    for (auto& x : out) x *= c;
    return ZSeries(f.lead_, std::move(out));
}

ZSeries ZSeries::inverse() const {
    if (is_zero()) throw NotInvertible("zero z-series");
    std::size_t p = coeffs_.size();
    std::vector<Rat> g(p, Rat(0));
    g[0] = Rat(1) / coeffs_[0];
    for (std::size_t i = 1; i < p; ++i) {
        Rat s(0);
        for (std::size_t j = 1; j <= i; ++j) s += coeffs_[j] * g[i - j];
        g[i] = -s / coeffs_[0];
    }
    return ZSeries(-lead_, std::move(g));
}

ZSeries ZSeries::pow(long e) const {
    if (e == 0) {
        std::vector<Rat> v((std::size_t)std::max<long>(size(), 1), Rat(0));
        v[0] = 1;
        return ZSeries(0, std::move(v));
    }
    if (is_zero()) {
        if (e < 0) throw NotInvertible("zero z-series");
        return zero();
    }
    ZSeries base = (e < 0) ? inverse() : *this;
    unsigned long k = (unsigned long)(e < 0 ? -e : e);
    ZSeries acc = base;
    --k;
    ZSeries sq = base;
    while (k) {
        if (k & 1) acc = acc * sq;
        k >>= 1;
        if (k) sq = sq * sq;
    }
    return acc;
}

ZSeries log1p_pow(long n, long nterms) {
    if (nterms < 1) throw InsufficientPrecision("log1p_pow: nterms < 1");
    // log(1+z)/z = 1 - z/2 + z^2/3 - ...
    std::vector<Rat> u((std::size_t)nterms);
    for (long i = 0; i < nterms; ++i) u[(std::size_t)i] = frac((i % 2 == 0) ? 1 : -1, i + 1);
    ZSeries unit(0, std::move(u));
    ZSeries up = unit.pow(n);
    return ZSeries(n + up.lead(), up.coeffs());
}

ZSeries expm1_pow(long n, long nterms) {
    if (nterms < 1) throw InsufficientPrecision("expm1_pow: nterms < 1");
    // (e^z - 1)/z = 1 + z/2 + z^2/6 + ...
    std::vector<Rat> u((std::size_t)nterms);
    for (long i = 0; i < nterms; ++i) u[(std::size_t)i] = frac(Int(1), factorial((unsigned long)i + 1));
    ZSeries unit(0, std::move(u));
    ZSeries up = unit.pow(n);
    return ZSeries(n + up.lead(), up.coeffs());
}

ZSeries binom_series(const Rat& a, long nterms) {
    if (nterms < 1) throw InsufficientPrecision("binom_series: nterms < 1");
    std::vector<Rat> c((std::size_t)nterms);
    c[0] = 1;
    for (long i = 1; i < nterms; ++i)
        c[(std::size_t)i] = c[(std::size_t)(i - 1)] * (a - Rat(i - 1)) / Rat(i);
    return ZSeries(0, std::move(c));
}

ZSeries exp_series(const Rat& a, long nterms) {
    if (nterms < 1) throw InsufficientPrecision("exp_series: nterms < 1");
    std::vector<Rat> c((std::size_t)nterms);
    c[0] = 1;
    for (long i = 1; i < nterms; ++i) c[(std::size_t)i] = c[(std::size_t)(i - 1)] * a / Rat(i);
    return ZSeries(0, std::move(c));
}

Rat ConversionTable::at(long m) const {
    if (m < n) return Rat(0);
    if (m > mmax) throw InsufficientPrecision("conversion table entry beyond mmax");
    auto it = entries.find(m);
    return it == entries.end() ? Rat(0) : it->second;
}

namespace {

ConversionTable table_from_kernel(long wt, long n, long mmax, const ZSeries& kernel) {
    ConversionTable t;
    t.wt = wt;
    t.n = n;
    t.mmax = mmax;
    for (long m = n; m <= mmax; ++m) t.entries[m] = kernel.at(m);
    return t;
}

}  // namespace

ConversionTable square_from_round(long wt, long n, long mmax) {
    if (mmax < n) throw InsufficientPrecision("square_from_round: mmax < n");
    long nterms = mmax - n + 1;
    ZSeries kernel = log1p_pow(n, nterms) * binom_series(Rat(wt - 1), nterms);
    return table_from_kernel(wt, n, mmax, kernel);
}

ConversionTable round_from_square(long wt, long n, long mmax) {
    if (mmax < n) throw InsufficientPrecision("round_from_square: mmax < n");
    long nterms = mmax - n + 1;
    ZSeries kernel = expm1_pow(n, nterms) * exp_series(Rat(1 - wt), nterms);
    return table_from_kernel(wt, n, mmax, kernel);
}

bool roundtrip_identity(long wt, long lo, long hi) {
    if (hi < lo) throw InsufficientPrecision("roundtrip_identity: empty window");
    std::map<long, ConversionTable> sq, rd;
    for (long n = lo; n <= hi; ++n) {
        sq[n] = square_from_round(wt, n, hi);
        rd[n] = round_from_square(wt, n, hi);
    }
    for (long n = lo; n <= hi; ++n) {
        for (long p = n; p <= hi; ++p) {
            Rat ab(0), ba(0);
            for (long m = n; m <= p; ++m) {
                ab += sq[n].at(m) * rd[m].at(p);
                ba += rd[n].at(m) * sq[m].at(p);
            }
            Rat want = (n == p) ? Rat(1) : Rat(0);
            if (ab != want || ba != want) return false;
        }
    }
    return true;
}

VirasoroExpansion virasoro_modes(const Rat& c, long n, long kmax) {
    if (n < -2) throw InvalidWeight("virasoro_modes: n must be >= -2");
    if (kmax < n) throw InsufficientPrecision("virasoro_modes: kmax < n");
    // L[n] is the square mode (n+1) of a weight-2 state shifted by -c/24 times
    // the vacuum, whose only round mode is the identity at index -1.
    ConversionTable t = square_from_round(2, n + 1, kmax + 1);
    VirasoroExpansion v;
    v.c = c;
    v.n = n;
    v.id_coeff = (n + 1 <= -1) ? Rat(-c / Rat(24) * t.at(-1)) : Rat(0);
    for (long k = n; k <= kmax; ++k) {
        Rat coeff = t.at(k + 1);
        if (coeff != 0) v.l_coeff[k] = coeff;
    }
    return v;
}

}  // namespace traceforms
