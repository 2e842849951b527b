#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "traceforms/common.hpp"

namespace traceforms {

using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;

// mpq_class(p, q) does not reduce the fraction; this does.
inline Rat frac(long num, long den = 1) {
    if (den == 0) throw ParseError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat frac(const Int& num, const Int& den) {
    if (den == 0) throw ParseError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int factorial(unsigned long n);

// binom(n, k) for n >= 0.
Int binomial_nonneg(unsigned long n, unsigned long k);

// binom(m, k) = m(m-1)...(m-k+1)/k! for any integer m (negative allowed).
Int binomial(long m, unsigned long k);

Rat rat_pow(const Rat& base, long e);

// B_0 .. B_{count-1}, computed once by inverting (e^t - 1)/t and cached.
const std::vector<Rat>& bernoulli_table(std::size_t count);
Rat bernoulli(unsigned long k);

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);
std::vector<Rat> parse_rat_list(const std::string& s, char sep = ',');

}  // namespace traceforms
