#include "traceforms/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace traceforms {

QSeries::QSeries(long offset24, std::vector<Rat> coeffs)
    : offset24_(offset24), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("QSeries: empty coefficient list");
    normalize();
}

void QSeries::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        offset24_ = 0;
        coeffs_.assign(1, Rat(0));
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + (long)lead);
        offset24_ += 24 * (long)lead;
    }
}

QSeries QSeries::constant(const Rat& c, long prec) {
    if (prec < 1) throw InsufficientPrecision("constant: prec < 1");
    std::vector<Rat> v((std::size_t)prec, Rat(0));
    v[0] = c;
    return QSeries(0, std::move(v));
}

QSeries QSeries::monomial(const Rat& c, long e24, long prec) {
    if (prec < 1) throw InsufficientPrecision("monomial: prec < 1");
    std::vector<Rat> v((std::size_t)prec, Rat(0));
    v[0] = c;
    return QSeries(e24, std::move(v));
}

Rat QSeries::coeff24(long e24) const {
    if (is_zero()) return Rat(0);
    if (e24 >= cutoff24())
        throw InsufficientPrecision("coefficient of q^(" + std::to_string(e24) +
                                    "/24) is beyond the stored cutoff");
    long d = e24 - offset24_;
    if (d < 0 || d % 24 != 0) return Rat(0);
    return coeffs_[(std::size_t)(d / 24)];
}

QSeries QSeries::truncated(long new_prec) const {
    if (new_prec < 1) throw InsufficientPrecision("truncated: prec < 1");
    if (new_prec >= prec()) return *this;
    std::vector<Rat> v(coeffs_.begin(), coeffs_.begin() + new_prec);
    return QSeries(offset24_, std::move(v));
}

QSeries QSeries::operator-() const { return Rat(-1) * (*this); }

QSeries operator+(const QSeries& f, const QSeries& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    long d = f.offset24_ - g.offset24_;
    if (d % 24 != 0)
        throw IncompatibleGrid("cannot add series with offsets " + std::to_string(f.offset24_) +
                               " and " + std::to_string(g.offset24_) + " (mod 24 mismatch)");
    long off = std::min(f.offset24_, g.offset24_);
    long cut = std::min(f.cutoff24(), g.cutoff24());
    std::vector<Rat> out((std::size_t)((cut - off) / 24));
    for (std::size_t i = 0; i < out.size(); ++i) {
        long e = off + 24 * (long)i;
        Rat a = (e >= f.offset24_) ? f.coeffs_[(std::size_t)((e - f.offset24_) / 24)] : Rat(0);
        Rat b = (e >= g.offset24_) ? g.coeffs_[(std::size_t)((e - g.offset24_) / 24)] : Rat(0);
        out[i] = a + b;
    }
    return QSeries(off, std::move(out));
}

QSeries operator-(const QSeries& f, const QSeries& g) { return f + (-g); }

QSeries operator*(const QSeries& f, const QSeries& g) {
    if (f.is_zero() || g.is_zero()) return QSeries::zero();
    std::size_t p = (std::size_t)std::min(f.prec(), g.prec());
    std::vector<Rat> out(p, Rat(0));
    for (std::size_t i = 0; i < f.coeffs_.size() && i < p; ++i) {
        if (f.coeffs_[i] == 0) continue;
        std::size_t jmax = std::min(p - i, g.coeffs_.size());
        for (std::size_t j = 0; j < jmax; ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return QSeries(f.offset24_ + g.offset24_, std::move(out));
}

QSeries operator*(const Rat& c, const QSeries& f) {
    if (c == 0 || f.is_zero()) return QSeries::zero();
    std::vector<Rat> out = f.coeffs_;
    for (auto& x : out) x *= c;
    return QSeries(f.offset24_, std::move(out));
}

QSeries operator+(const QSeries& f, const Rat& c) {
    if (c == 0) return f;
    // The constant inherits the other operand's reach so the sum keeps it.
    long cut = f.is_zero() ? 24 : f.cutoff24();
    long p = cut / 24;
    if (p < 1) p = 1;
    return f + QSeries::constant(c, p);
}

QSeries QSeries::inverse() const {
    if (is_zero()) throw NotInvertible("zero series");
    std::size_t p = coeffs_.size();
    std::vector<Rat> g(p, Rat(0));
    g[0] = Rat(1) / coeffs_[0];
    for (std::size_t i = 1; i < p; ++i) {
        Rat s(0);
        for (std::size_t j = 1; j <= i; ++j) s += coeffs_[j] * g[i - j];
        g[i] = -s / coeffs_[0];
    }
    return QSeries(-offset24_, std::move(g));
}

QSeries QSeries::pow(long e) const {
    if (e == 0) return constant(1, std::max<long>(prec(), 1));
    if (is_zero()) {
        if (e < 0) throw NotInvertible("zero series");
        return zero();
    }
    QSeries base = (e < 0) ? inverse() : *this;
    unsigned long n = (unsigned long)(e < 0 ? -e : e);
    QSeries acc = base;
    --n;
    QSeries sq = base;
    while (n) {
        if (n & 1) acc = acc * sq;
        n >>= 1;
        if (n) sq = sq * sq;
    }
    return acc;
}

QSeries QSeries::theta() const {
    if (is_zero()) return zero();
    std::vector<Rat> out = coeffs_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= frac(offset24_ + 24 * (long)i, 24);
    return QSeries(offset24_, std::move(out));
}

bool agree_on_overlap(const QSeries& f, const QSeries& g) {
    if (f.is_zero() && g.is_zero()) return true;
    if (f.is_zero() || g.is_zero()) {
        const QSeries& h = f.is_zero() ? g : f;
        for (const auto& c : h.coeffs())
            if (c != 0) return false;
        return true;
    }
    long cut = std::min(f.cutoff24(), g.cutoff24());
    long lo = std::min(f.offset24(), g.offset24());
    for (long e = lo; e < cut; ++e) {
        bool onf = (e - f.offset24()) % 24 == 0;
        bool ong = (e - g.offset24()) % 24 == 0;
        if (!onf && !ong) continue;
        if (f.coeff24(e) != g.coeff24(e)) return false;
    }
    return true;
}

long overlap_terms(const QSeries& f, const QSeries& g) {
    if (f.is_zero() || g.is_zero()) return 1L << 30;
    long cut = std::min(f.cutoff24(), g.cutoff24());
    long lo = std::min(f.offset24(), g.offset24());
    return (cut - lo) / 24;
}

QSeries eta_pow(long c, long prec) {
    if (prec < 1) throw InsufficientPrecision("eta_pow: prec < 1");
    if (c == 0) return QSeries::constant(1, prec);
    // Euler product prod (1 - q^n), truncated; each factor touches two terms.
    std::vector<Rat> p((std::size_t)prec, Rat(0));
    p[0] = 1;
    for (long n = 1; n < prec; ++n)
        for (long i = prec - 1; i >= n; --i) p[(std::size_t)i] -= p[(std::size_t)(i - n)];
    QSeries powed = QSeries(0, std::move(p)).pow(c);
    return QSeries(c, powed.coeffs());
}

QSeries eisenstein(unsigned long k, long prec) {
    if (k < 4 || k % 2 != 0) throw InvalidWeight("eisenstein: weight must be even and >= 4");
    if (prec < 1) throw InsufficientPrecision("eisenstein: prec < 1");
    std::vector<Rat> out((std::size_t)prec, Rat(0));
    out[0] = -bernoulli(k) / Rat(factorial(k));
    Rat scale = frac(Int(2), factorial(k - 1));
    std::vector<Int> sigma((std::size_t)prec, Int(0));
    for (long d = 1; d < prec; ++d) {
        Int dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), (unsigned long)d, k - 1);
        for (long m = d; m < prec; m += d) sigma[(std::size_t)m] += dk;
    }
    for (long n = 1; n < prec; ++n) out[(std::size_t)n] = scale * Rat(sigma[(std::size_t)n]);
    return QSeries(0, std::move(out));
}

QSeries g2_series(long prec) {
    if (prec < 1) throw InsufficientPrecision("g2_series: prec < 1");
    std::vector<Rat> out((std::size_t)prec, Rat(0));
    out[0] = frac(-1, 12);
    for (long d = 1; d < prec; ++d)
        for (long m = d; m < prec; m += d) out[(std::size_t)m] += 2 * Rat(d);
    return QSeries(0, std::move(out));
}

QSeries delta_series(long prec) {
    if (prec < 1) throw InsufficientPrecision("delta_series: prec < 1");
    long p = prec + 1;  // the polynomial route loses its vanishing q^0 term
    QSeries g4 = eisenstein(4, p);
    QSeries g6 = eisenstein(6, p);
    QSeries poly = Rat(10800) * (Rat(20) * g4.pow(3) - Rat(49) * g6.pow(2));
    QSeries prod = eta_pow(24, prec);
    if (!agree_on_overlap(poly, prod))
        throw ConsistencyFailure("delta: polynomial and product expansions disagree");
    return prod;
}

QSeries j_series(long prec) {
    if (prec < 1) throw InsufficientPrecision("j_series: prec < 1");
    long p = prec + 2;
    QSeries e4 = Rat(720) * eisenstein(4, p);
    QSeries j = e4.pow(3) * delta_series(p).inverse() - Rat(744);
    return j.truncated(prec);
}

EvalResult eval_q(const QSeries& f, std::complex<double> tau, long terms) {
    if (tau.imag() <= 0.0) throw UpperHalfPlaneError("eval_q: Im(tau) must be positive");
    if (f.is_zero()) return {{0.0, 0.0}, 0.0};
    long n = f.prec();
    if (terms >= 0) n = std::min(n, terms);
    if (n < 1) throw InsufficientPrecision("eval_q: no terms requested");
    const std::complex<double> two_pi_i(0.0, 2.0 * 3.14159265358979323846);
    std::complex<double> cur = std::exp(two_pi_i * tau * (double)f.offset24() / 24.0);
    std::complex<double> step = std::exp(two_pi_i * tau);
    std::complex<double> val(0.0, 0.0);
    double tail = 0.0;
    for (long i = 0; i < n; ++i) {
        double c = f.coeffs()[(std::size_t)i].get_d();
        if (i == n - 1) tail = std::abs(c * cur);
        val += c * cur;
        cur *= step;
    }
    return {val, tail};
}

namespace {

std::string exponent_str(long e24) {
    if (e24 % 24 == 0) {
        long e = e24 / 24;
        if (e == 0) return "";
        if (e == 1) return "q";
        return "q^" + std::to_string(e);
    }
    Rat e = frac(e24, 24);
    return "q^(" + rat_str(e) + ")";
}

}  // namespace

std::string QSeries::str(long max_terms) const {
    if (is_zero()) return "0";
    long n = prec();
    if (max_terms >= 0) n = std::min(n, max_terms);
    std::ostringstream os;
    for (long i = 0; i < n; ++i) {
        const Rat& c = coeffs_[(std::size_t)i];
        std::string e = exponent_str(offset24_ + 24 * i);
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (i == 0) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e.empty() || a != 1)
            os << rat_str(a) << (e.empty() ? "" : "");
        if (!e.empty()) os << e;
    }
    if (n < prec()) os << " + ...";
    return os.str();
}

NamedForm NamedForm::parse(const std::string& name) {
    std::string s;
    for (char c : name) s += (char)std::tolower((unsigned char)c);
    NamedForm f;
    if (s == "1" || s == "one") return {Kind::One, 0};
    if (s == "eta") return {Kind::Eta, 0};
    if (s.rfind("eta^", 0) == 0) {
        long c = 0;
        try {
            c = std::stol(s.substr(4));
        } catch (...) {
            throw ParseError("bad eta power '" + name + "'");
        }
        return {Kind::EtaPow, c};
    }
    if (s == "g2") return {Kind::G2, 0};
    if (s.size() > 1 && s[0] == 'g') {
        long k = 0;
        try {
            k = std::stol(s.substr(1));
        } catch (...) {
            throw ParseError("unknown form '" + name + "'");
        }
        if (k < 4 || k % 2 != 0) throw ParseError("no form named '" + name + "'");
        return {Kind::Eisenstein, k};
    }
    if (s == "delta") return {Kind::Delta, 0};
    if (s == "j") return {Kind::J, 0};
    if (s == "z1") return {Kind::Z1, 24};
    throw ParseError("unknown form '" + name + "'; known: " + catalogue());
}

QSeries NamedForm::expand(long prec) const {
    switch (kind) {
        case Kind::One: return QSeries::constant(1, prec);
        case Kind::Eta: return eta_pow(1, prec);
        case Kind::EtaPow: return eta_pow(param, prec);
        case Kind::Eisenstein: return eisenstein((unsigned long)param, prec);
        case Kind::G2: return g2_series(prec);
        case Kind::Delta: return delta_series(prec);
        case Kind::J: return j_series(prec);
        case Kind::Z1: return j_series(prec) + Rat(param);
    }
    throw Error("unreachable");
}

std::string NamedForm::name() const {
    switch (kind) {
        case Kind::One: return "1";
        case Kind::Eta: return "eta";
        case Kind::EtaPow: return "eta^" + std::to_string(param);
        case Kind::Eisenstein: return "G" + std::to_string(param);
        case Kind::G2: return "G2";
        case Kind::Delta: return "delta";
        case Kind::J: return "J";
        case Kind::Z1: return "Z1";
    }
    return "?";
}

std::string NamedForm::catalogue() {
    return "1, eta, eta^<c>, G2, G<even k>=4>, delta, J, Z1";
}

}  // namespace traceforms
