#include "traceforms/rational.hpp"

#include <cctype>
#include <sstream>

namespace traceforms {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial_nonneg(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int binomial(long m, unsigned long k) {
    if (m >= 0) return binomial_nonneg((unsigned long)m, k);
    // binom(-n, k) = (-1)^k binom(n + k - 1, k)
    Int r = binomial_nonneg((unsigned long)(-m) + k - 1, k);
    return (k % 2 == 0) ? r : Int(-r);
}

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw NotInvertible("0^negative");
        return Rat(0);
    }
    Rat b = base;
    unsigned long n = (unsigned long)(e < 0 ? -e : e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (e < 0) return Rat(1) / acc;
    return acc;
}

const std::vector<Rat>& bernoulli_table(std::size_t count) {
    static std::vector<Rat> cache;
    if (cache.size() >= count) return cache;
    std::size_t n = count < 16 ? 16 : count;
    // f_i = [t^i] (e^t - 1)/t = 1/(i+1)!, invert the series, B_k = k! g_k.
    std::vector<Rat> f(n), g(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = frac(Int(1), factorial((unsigned long)i + 1));
    g[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        Rat s(0);
        for (std::size_t j = 1; j <= k; ++j) s += f[j] * g[k - j];
        g[k] = -s;
    }
    cache.resize(n);
    for (std::size_t k = 0; k < n; ++k) cache[k] = Rat(g[k] * factorial((unsigned long)k));
    return cache;
}

Rat bernoulli(unsigned long k) { return bernoulli_table(k + 1)[k]; }

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace((unsigned char)c)) t += c;
    if (t.empty()) throw ParseError("empty rational");
    std::string num = t, den = "1";
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        num = t.substr(0, slash);
        den = t.substr(slash + 1);
    }
    auto valid = [](const std::string& p) {
        if (p.empty()) return false;
        std::size_t i = (p[0] == '-' || p[0] == '+') ? 1 : 0;
        if (i == p.size()) return false;
        for (; i < p.size(); ++i)
            if (!std::isdigit((unsigned char)p[i])) return false;
        return true;
    };
    if (!valid(num) || !valid(den)) throw ParseError("bad rational '" + s + "'");
    return frac(Int(num), Int(den));
}

std::vector<Rat> parse_rat_list(const std::string& s, char sep) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(parse_rat(item));
    if (out.empty()) throw ParseError("empty rational list");
    return out;
}

}  // namespace traceforms
