#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "traceforms/liealg.hpp"

namespace traceforms {

// PBW monomial x_{g1}(-n1) x_{g2}(-n2) ... |0>, modes descending and
// generator indices ascending within equal modes.
struct Mono {
    std::vector<std::pair<long, long>> factors;  // (n >= 1, generator)
    long degree() const;
    auto operator<=>(const Mono&) const = default;
};

// Finitely supported rational combination of PBW monomials; zero coefficients
// are never stored.
using State = std::map<Mono, Rat>;

bool state_is_zero(const State& s);
void state_axpy(State& acc, const Rat& c, const State& s);  // acc += c*s
State state_scaled(const Rat& c, const State& s);

// Canonicalize a product of creation operators (n >= 1 throughout) against
// the algebra bracket by resolving out-of-order adjacent pairs; creations
// never meet the central term.  `pick` chooses which violation to resolve
// next (leftmost when empty) — exposed so tests can exercise confluence.
State normalize_creation_word(const LieAlgebra& g,
                              const std::vector<std::pair<long, long>>& seq,
                              const std::function<size_t(size_t)>& pick = {});

// Word of elementary modes, leftmost applied last.  The mode expansion only
// ever produces normal-ordered words: creations to the left of
// annihilations.
using Word = std::vector<std::pair<long, long>>;  // (generator, mode)
using OpMap = std::map<Word, Rat>;

// Level-k vacuum module for the affine algebra of g, truncated at degree
// max_degree.  <a|b> = level * (a,b) and the modes obey
// [a(m), b(n)] = [a,b](m+n) + m <a|b> delta_{m+n,0}.
class VacuumModule {
public:
    VacuumModule(LieAlgebra g, Rat level, long max_degree = 4);

    const LieAlgebra& algebra() const { return g_; }
    const Rat& level() const { return level_; }
    long max_degree() const { return max_degree_; }

    Rat lz(const Vec& a, const Vec& b) const;  // <a|b>

    State vacuum() const;
    State element(const Vec& a) const;  // a(-1)|0>

    // x_gen(m) acting on s; creations past max_degree throw DegreeOverflow.
    State apply(long gen, long m, const State& s) const;
    State apply(const Vec& a, long m, const State& s) const;
    // a[n] for weight-1 a, expanded through the mode-conversion table; modes
    // beyond max_degree annihilate every state and are dropped.
    State apply_square(const Vec& a, long n, const State& s) const;

    const std::vector<Mono>& basis(long d) const;

    // o(v) on the degree-d slice; v may be inhomogeneous (each component of
    // degree w contributes its mode at w-1).  Entry [i][j] = coefficient of
    // basis[i] in o(v) basis[j].
    Mat zero_mode_matrix(const State& v, long d) const;
    Rat trace_o(const State& v, long d) const;

    // Operator (mono)(t) as a combination of normal-ordered words, derived
    // from (u(m)v)(n) = sum_i (-1)^i C(m,i) (u(m-i)v(n+i) - (-1)^m v(m+n-i)u(i));
    // truncated against the degree cap.  Level-independent.
    const OpMap& expand_mode(const Mono& m, long t) const;

    State apply_word(const Word& w, const State& s) const;

    std::string mono_str(const Mono& m) const;
    std::string state_str(const State& s) const;

private:
    State apply_mono(long gen, long m, const Mono& mono) const;
    Rat word_trace(const Word& w, long d) const;

    LieAlgebra g_;
    Rat level_;
    long max_degree_;
    std::vector<std::vector<Mono>> basis_;
    std::vector<std::map<Mono, long>> index_;
    mutable std::map<std::pair<Mono, long>, OpMap> expand_cache_;
    mutable std::vector<std::map<Word, Rat>> trace_cache_;
};

// a[-1]b[-1]c[-1]d |0> with every square-bracket mode expanded through the
// weight-1 conversion table.
State square_chain(const VacuumModule& M, const Vec& a, const Vec& b, const Vec& c, const Vec& d);

struct OracleReport {
    std::string check;
    std::string algebra;
    Rat level;
    int draws = 0;
    bool pass = false;
    unsigned long seed = 0;
    std::string witness;  // first discrepancy, empty when pass
};

// Expand a[-1]b[-1]c[-1]d by modes and compare against the closed-form sum
// of round-bracket words, exactly, on seeded draws mixing basis tuples and
// random combinations.
OracleReport verify_expansion(const LieAlgebra& g, const Rat& level, int draws, unsigned long seed);

// Trace the zero mode of a[-1]b[-1]c[-1]d over the degree-0 and degree-1
// slices and compare against the closed trace formula.
OracleReport verify_general_traces(const LieAlgebra& g, const Rat& level, int draws,
                                   unsigned long seed);

}  // namespace traceforms
