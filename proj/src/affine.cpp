#include "traceforms/affine.hpp"

#include <random>
#include <sstream>

#include "traceforms/common.hpp"
#include "traceforms/trace_formulas.hpp"
#include "traceforms/zmodes.hpp"

namespace traceforms {

long Mono::degree() const {
    long d = 0;
    for (const auto& [n, g] : factors) d += n;
    return d;
}

bool state_is_zero(const State& s) { return s.empty(); }

void state_axpy(State& acc, const Rat& c, const State& s) {
    if (c == 0) return;
    for (const auto& [m, x] : s) {
        Rat& slot = acc[m];
        slot += c * x;
        if (slot == 0) acc.erase(m);
    }
}

State state_scaled(const Rat& c, const State& s) {
    State out;
    state_axpy(out, c, s);
    return out;
}

namespace {

// canonical iff adjacent pairs descend by mode, ascend by generator on ties
bool pair_ordered(const std::pair<long, long>& a, const std::pair<long, long>& b) {
    return a.first > b.first || (a.first == b.first && a.second <= b.second);
}

}  // namespace

State normalize_creation_word(const LieAlgebra& g,
                              const std::vector<std::pair<long, long>>& seq,
                              const std::function<size_t(size_t)>& pick) {
    State acc;
    std::vector<std::pair<std::vector<std::pair<long, long>>, Rat>> work;
    work.push_back({seq, Rat(1)});
    while (!work.empty()) {
        auto [s, c] = std::move(work.back());
        work.pop_back();
        std::vector<size_t> bad;
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (!pair_ordered(s[i], s[i + 1])) bad.push_back(i);
        if (bad.empty()) {
            Rat& slot = acc[Mono{s}];
            slot += c;
            if (slot == 0) acc.erase(Mono{s});
            continue;
        }
        size_t at = bad[pick ? pick(bad.size()) % bad.size() : 0];
        auto [na, ga] = s[at];
        auto [nb, gb] = s[at + 1];
        // x_a(-na) x_b(-nb) = x_b(-nb) x_a(-na) + [x_a, x_b](-na-nb)
        auto swapped = s;
        std::swap(swapped[at], swapped[at + 1]);
        work.push_back({std::move(swapped), c});
        const Vec& br = g.bracket_table[ga][gb];
        for (long k = 0; k < g.dim; ++k) {
            if (br[k] == 0) continue;
            std::vector<std::pair<long, long>> merged;
            merged.reserve(s.size() - 1);
            merged.insert(merged.end(), s.begin(), s.begin() + at);
            merged.push_back({na + nb, k});
            merged.insert(merged.end(), s.begin() + at + 2, s.end());
            work.push_back({std::move(merged), Rat(c * br[k])});
        }
    }
    return acc;
}

VacuumModule::VacuumModule(LieAlgebra g, Rat level, long max_degree)
    : g_(std::move(g)), level_(std::move(level)), max_degree_(max_degree) {
    if (max_degree_ < 1) throw DegreeOverflow("degree cap must be at least 1");
    basis_.resize(max_degree_ + 1);
    index_.resize(max_degree_ + 1);
    trace_cache_.resize(max_degree_ + 1);
    basis_[0] = {Mono{}};
    for (long d = 1; d <= max_degree_; ++d) {
        // extend by a canonical leading factor (n, g); the tail is a canonical
        // monomial of degree d - n whose own lead must not precede (n, g)
        std::vector<Mono> out;
        for (long n = d; n >= 1; --n)
            for (long gen = 0; gen < g_.dim; ++gen)
                for (const Mono& tail : basis_[d - n]) {
                    if (!tail.factors.empty() && !pair_ordered({n, gen}, tail.factors.front()))
                        continue;
                    Mono m;
                    m.factors.reserve(tail.factors.size() + 1);
                    m.factors.push_back({n, gen});
                    m.factors.insert(m.factors.end(), tail.factors.begin(), tail.factors.end());
                    out.push_back(std::move(m));
                }
        basis_[d] = std::move(out);
    }
    for (long d = 0; d <= max_degree_; ++d)
        for (size_t i = 0; i < basis_[d].size(); ++i) index_[d][basis_[d][i]] = (long)i;
}

Rat VacuumModule::lz(const Vec& a, const Vec& b) const { return level_ * g_.form_value(a, b); }

State VacuumModule::vacuum() const { return State{{Mono{}, Rat(1)}}; }

State VacuumModule::element(const Vec& a) const { return apply(a, -1, vacuum()); }

State VacuumModule::apply_mono(long gen, long m, const Mono& mono) const {
    if (m < 0) {
        long p = -m;
        if (mono.degree() + p > max_degree_)
            throw DegreeOverflow(mono_str(mono) + " cannot absorb mode " + std::to_string(m));
        std::vector<std::pair<long, long>> seq;
        seq.reserve(mono.factors.size() + 1);
        seq.push_back({p, gen});
        seq.insert(seq.end(), mono.factors.begin(), mono.factors.end());
        return normalize_creation_word(g_, seq);
    }
    if (mono.factors.empty()) return {};  // x(m)|0> = 0 for m >= 0
    auto [n1, g1] = mono.factors.front();
    Mono tail{{mono.factors.begin() + 1, mono.factors.end()}};
    State out;
    // commute past the leading creation: the straight-through term ...
    State sub = apply_mono(gen, m, tail);
    for (const auto& [mu, c] : sub) {
        std::vector<std::pair<long, long>> seq;
        seq.reserve(mu.factors.size() + 1);
        seq.push_back({n1, g1});
        seq.insert(seq.end(), mu.factors.begin(), mu.factors.end());
        state_axpy(out, c, normalize_creation_word(g_, seq));
    }
    // ... the bracket term ...
    const Vec& br = g_.bracket_table[gen][g1];
    for (long k = 0; k < g_.dim; ++k)
        if (br[k] != 0) state_axpy(out, br[k], apply_mono(k, m - n1, tail));
    // ... and the central term m <a|b> at m + (-n1) = 0
    if (m == n1 && m > 0) {
        Rat central = m * level_ * g_.form[gen][g1];
        if (central != 0) state_axpy(out, central, State{{tail, Rat(1)}});
    }
    return out;
}

State VacuumModule::apply(long gen, long m, const State& s) const {
    State out;
    for (const auto& [mono, c] : s) state_axpy(out, c, apply_mono(gen, m, mono));
    return out;
}

State VacuumModule::apply(const Vec& a, long m, const State& s) const {
    State out;
    for (long i = 0; i < g_.dim; ++i)
        if (a[i] != 0) state_axpy(out, a[i], apply(i, m, s));
    return out;
}

State VacuumModule::apply_square(const Vec& a, long n, const State& s) const {
    ConversionTable table = square_from_round(1, n, max_degree_);
    State out;
    for (long m = n; m <= max_degree_; ++m) {
        Rat c = table.at(m);
        if (c != 0) state_axpy(out, c, apply(a, m, s));
    }
    return out;
}

const std::vector<Mono>& VacuumModule::basis(long d) const {
    if (d < 0 || d > max_degree_) throw DegreeOverflow("no basis slice at degree " + std::to_string(d));
    return basis_[d];
}

const OpMap& VacuumModule::expand_mode(const Mono& m, long t) const {
    auto key = std::make_pair(m, t);
    auto hit = expand_cache_.find(key);
    if (hit != expand_cache_.end()) return hit->second;

    OpMap out;
    if (m.factors.empty()) {
        if (t == -1) out[Word{}] = 1;  // Y(|0>, z) = id
    } else {
        auto [n1, g1] = m.factors.front();
        Mono tail{{m.factors.begin() + 1, m.factors.end()}};
        // (u(-n1)w)(t) = sum_i (-1)^i C(-n1,i) (u(-n1-i) w(t+i)
        //                                       - (-1)^{n1} w(-n1+t-i) u(i))
        long bound_a = max_degree_ + tail.degree() - t - 1;
        for (long i = 0; i <= bound_a; ++i) {
            Rat coeff(binomial(-n1, (unsigned long)i));
            if (i % 2) coeff = -coeff;
            if (coeff == 0) continue;
            for (const auto& [w, c] : expand_mode(tail, t + i)) {
                Word ext;
                ext.reserve(w.size() + 1);
                ext.push_back({g1, -n1 - i});
                ext.insert(ext.end(), w.begin(), w.end());
                Rat& slot = out[ext];
                slot += coeff * c;
                if (slot == 0) out.erase(ext);
            }
        }
        for (long i = 0; i <= max_degree_; ++i) {
            Rat coeff(binomial(-n1, (unsigned long)i));
            if (i % 2) coeff = -coeff;
            if (n1 % 2 == 0) coeff = -coeff;  // the -(-1)^{n1} factor
            if (coeff == 0) continue;
            for (const auto& [w, c] : expand_mode(tail, -n1 + t - i)) {
                Word ext = w;
                ext.push_back({g1, i});
                Rat& slot = out[ext];
                slot += coeff * c;
                if (slot == 0) out.erase(ext);
            }
        }
    }
    return expand_cache_.emplace(std::move(key), std::move(out)).first->second;
}

State VacuumModule::apply_word(const Word& w, const State& s) const {
    State cur = s;
    for (auto it = w.rbegin(); it != w.rend() && !cur.empty(); ++it) {
        // components pushed past the cap by an intermediate creation cannot
        // return to the window: drop them instead of erroring
        if (it->second < 0) {
            State kept;
            for (const auto& [mono, c] : cur)
                if (mono.degree() - it->second <= max_degree_) kept.emplace(mono, c);
            cur = apply(it->first, it->second, kept);
        } else {
            cur = apply(it->first, it->second, cur);
        }
    }
    return cur;
}

Rat VacuumModule::word_trace(const Word& w, long d) const {
    auto& cache = trace_cache_[d];
    auto hit = cache.find(w);
    if (hit != cache.end()) return hit->second;
    Rat t(0);
    const auto& bs = basis(d);
    for (size_t j = 0; j < bs.size(); ++j) {
        State img = apply_word(w, State{{bs[j], Rat(1)}});
        auto at = img.find(bs[j]);
        if (at != img.end()) t += at->second;
    }
    cache.emplace(w, t);
    return t;
}

Mat VacuumModule::zero_mode_matrix(const State& v, long d) const {
    const auto& bs = basis(d);
    Mat out(bs.size(), Vec(bs.size(), Rat(0)));
    for (const auto& [mono, c] : v) {
        const OpMap& om = expand_mode(mono, mono.degree() - 1);
        for (const auto& [w, wc] : om)
            for (size_t j = 0; j < bs.size(); ++j) {
                State img = apply_word(w, State{{bs[j], Rat(1)}});
                for (const auto& [mu, cc] : img) out[index_[d].at(mu)][j] += c * wc * cc;
            }
    }
    return out;
}

Rat VacuumModule::trace_o(const State& v, long d) const {
    Rat t(0);
    for (const auto& [mono, c] : v) {
        const OpMap& om = expand_mode(mono, mono.degree() - 1);
        for (const auto& [w, wc] : om) t += c * wc * word_trace(w, d);
    }
    return t;
}

std::string VacuumModule::mono_str(const Mono& m) const {
    if (m.factors.empty()) return "|0>";
    std::string out;
    for (const auto& [n, g] : m.factors) out += g_.labels[g] + "(-" + std::to_string(n) + ")";
    return out + "|0>";
}

std::string VacuumModule::state_str(const State& s) const {
    if (s.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : s) {
        if (!out.empty()) out += " + ";
        out += rat_str(c) + " " + mono_str(m);
    }
    return out;
}

State square_chain(const VacuumModule& M, const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
    State s = M.element(d);
    s = M.apply_square(c, -1, s);
    s = M.apply_square(b, -1, s);
    s = M.apply_square(a, -1, s);
    return s;
}

namespace {

// the closed-form round-bracket expansion of a[-1]b[-1]c[-1]d
State expansion_rhs(const VacuumModule& M, const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
    const LieAlgebra& g = M.algebra();
    auto br = [&](const Vec& x, const Vec& y) { return g.bracket(x, y); };

    State sd = M.element(d);
    State cd1 = M.apply(c, -1, sd);            // c(-1)d
    State s_cd = M.element(br(c, d));          // [c,d]
    Rat lz_cd = M.lz(c, d);

    State out;
    state_axpy(out, Rat(1), M.apply(a, -1, M.apply(b, -1, cd1)));

    state_axpy(out, frac(1, 2), M.apply(a, 0, M.apply(b, -1, cd1)));
    state_axpy(out, frac(1, 2), M.apply(a, -1, M.apply(b, 0, cd1)));
    state_axpy(out, frac(1, 2), M.apply(a, -1, M.apply(b, -1, s_cd)));

    state_axpy(out, frac(-1, 12), M.apply(a, 1, M.apply(b, -1, cd1)));
    state_axpy(out, frac(-1, 12), M.apply(a, -1, M.apply(b, 1, cd1)));
    state_axpy(out, frac(-1, 12) * lz_cd, M.apply(a, -1, M.element(b)));

    state_axpy(out, frac(1, 4), M.apply(a, 0, M.apply(b, 0, cd1)));
    state_axpy(out, frac(1, 4), M.apply(a, 0, M.apply(b, -1, s_cd)));
    state_axpy(out, frac(1, 4), M.apply(a, -1, M.element(br(b, br(c, d)))));

    state_axpy(out, frac(1, 24), M.apply(a, 2, M.apply(b, -1, cd1)));
    state_axpy(out, frac(1, 24), M.apply(a, -1, M.apply(b, 2, cd1)));
    state_axpy(out, frac(-1, 24), M.apply(a, 1, M.apply(b, 0, cd1)));
    state_axpy(out, frac(-1, 24), M.apply(a, 0, M.apply(b, 1, cd1)));
    state_axpy(out, frac(-1, 24), M.apply(a, 1, M.apply(b, -1, s_cd)));
    state_axpy(out, frac(-1, 24) * M.lz(b, br(c, d)), M.element(a));
    state_axpy(out, frac(-1, 24) * lz_cd, M.element(br(a, b)));
    state_axpy(out, frac(3, 24), M.element(br(a, br(b, br(c, d)))));

    state_axpy(out, frac(-19, 720), M.apply(a, 3, M.apply(b, -1, cd1)));

    state_axpy(out, frac(1, 48), M.apply(a, 2, M.apply(b, 0, cd1)));
    state_axpy(out, frac(1, 48), M.apply(a, 2, M.apply(b, -1, s_cd)));
    state_axpy(out, frac(-1, 48) * M.lz(br(a, b), br(c, d)), M.vacuum());

    state_axpy(out, frac(1, 144), M.apply(a, 1, M.apply(b, 1, cd1)));
    state_axpy(out, frac(1, 144) * lz_cd * M.lz(a, b), M.vacuum());

    return out;
}

Vec random_combo(const LieAlgebra& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-2, 2), den(1, 2);
    Vec v(g.dim, Rat(0));
    bool nonzero = false;
    for (long i = 0; i < g.dim; ++i) {
        long n = num(rng);
        v[i] = frac(n, den(rng));
        nonzero = nonzero || n != 0;
    }
    if (!nonzero) v[0] = 1;
    return v;
}

// alternate basis tuples with random rational combinations
std::array<Vec, 4> draw_tuple(const LieAlgebra& g, std::mt19937_64& rng, int draw) {
    std::array<Vec, 4> t;
    if (draw % 2 == 0) {
        std::uniform_int_distribution<long> pick(0, g.dim - 1);
        for (auto& v : t) v = g.basis_vec(pick(rng));
    } else {
        for (auto& v : t) v = random_combo(g, rng);
    }
    return t;
}

std::string tuple_str(const LieAlgebra& g, const std::array<Vec, 4>& t) {
    std::string out = "(";
    for (int i = 0; i < 4; ++i) {
        std::string part;
        for (long j = 0; j < g.dim; ++j) {
            if (t[i][j] == 0) continue;
            if (!part.empty()) part += "+";
            part += rat_str(t[i][j]) + g.labels[j];
        }
        out += (part.empty() ? "0" : part) + (i < 3 ? "," : ")");
    }
    return out;
}

}  // namespace

OracleReport verify_expansion(const LieAlgebra& g, const Rat& level, int draws,
                              unsigned long seed) {
    OracleReport rep;
    rep.check = "square-expansion";
    rep.algebra = g.name;
    rep.level = level;
    rep.draws = draws;
    rep.seed = seed;
    rep.pass = true;
    VacuumModule M(g, level);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < draws; ++k) {
        auto t = draw_tuple(g, rng, k);
        State lhs = square_chain(M, t[0], t[1], t[2], t[3]);
        State rhs = expansion_rhs(M, t[0], t[1], t[2], t[3]);
        if (lhs == rhs) continue;
        rep.pass = false;
        State diff = lhs;
        state_axpy(diff, Rat(-1), rhs);
        const auto& [mono, delta] = *diff.begin();
        rep.witness = "draw " + std::to_string(k) + " " + tuple_str(g, t) + ": " +
                      M.mono_str(mono) + " differs by " + rat_str(delta);
        break;
    }
    return rep;
}

OracleReport verify_general_traces(const LieAlgebra& g, const Rat& level, int draws,
                                   unsigned long seed) {
    OracleReport rep;
    rep.check = "trace-formulas";
    rep.algebra = g.name;
    rep.level = level;
    rep.draws = draws;
    rep.seed = seed;
    rep.pass = true;
    VacuumModule M(g, level);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < draws; ++k) {
        auto t = draw_tuple(g, rng, k);
        State lhs = square_chain(M, t[0], t[1], t[2], t[3]);
        Rat lhs0 = M.trace_o(lhs, 0);
        Rat lhs1 = M.trace_o(lhs, 1);
        if (k == 0 && (lhs0 != mat_trace(M.zero_mode_matrix(lhs, 0)) ||
                       lhs1 != mat_trace(M.zero_mode_matrix(lhs, 1)))) {
            rep.pass = false;
            rep.witness = "matrix trace disagrees with diagonal trace";
            break;
        }
        TracePair rhs = general_traces_eval(trace_inputs(g, level, t[0], t[1], t[2], t[3]));
        if (lhs0 == rhs.v0 && lhs1 == rhs.v1) continue;
        rep.pass = false;
        std::ostringstream w;
        w << "draw " << k << " " << tuple_str(g, t) << ": degree 0 " << rat_str(lhs0) << " vs "
          << rat_str(rhs.v0) << ", degree 1 " << rat_str(lhs1) << " vs " << rat_str(rhs.v1);
        rep.witness = w.str();
        break;
    }
    return rep;
}

}  // namespace traceforms
