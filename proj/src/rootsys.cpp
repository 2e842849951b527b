#include "traceforms/rootsys.hpp"

#include <algorithm>
#include <random>

namespace traceforms {

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("dot: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RootType parse_root_type(const std::string& letter) {
    if (letter == "A" || letter == "a") return RootType::A;
    if (letter == "B" || letter == "b") return RootType::B;
    if (letter == "C" || letter == "c") return RootType::C;
    if (letter == "D" || letter == "d") return RootType::D;
    if (letter == "E6" || letter == "e6") return RootType::E6;
    if (letter == "E7" || letter == "e7") return RootType::E7;
    if (letter == "E8" || letter == "e8") return RootType::E8;
    if (letter == "F4" || letter == "f4") return RootType::F4;
    if (letter == "G2" || letter == "g2") return RootType::G2;
    throw ParseError("unknown root system type '" + letter + "'");
}

namespace {

Vec unit(int dim, int i, long c = 1) {
    Vec v((std::size_t)dim, Rat(0));
    v[(std::size_t)i] = c;
    return v;
}

void push_pm_pairs(std::vector<Vec>& roots, int dim) {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (long si : {1L, -1L})
                for (long sj : {1L, -1L}) {
                    Vec v((std::size_t)dim, Rat(0));
                    v[(std::size_t)i] = si;
                    v[(std::size_t)j] = sj;
                    roots.push_back(std::move(v));
                }
}

std::vector<Vec> e8_roots() {
    std::vector<Vec> roots;
    push_pm_pairs(roots, 8);  // the D8 part, 112 roots
    for (unsigned mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        Vec v(8);
        for (int i = 0; i < 8; ++i) v[(std::size_t)i] = frac((mask >> i) & 1 ? -1 : 1, 2);
        roots.push_back(std::move(v));
    }
    return roots;
}

long expected_count(RootType t, int rank) {
    switch (t) {
        case RootType::A: return (long)rank * (rank + 1);
        case RootType::B:
        case RootType::C: return 2L * rank * rank;
        case RootType::D: return 2L * rank * (rank - 1);
        case RootType::E6: return 72;
        case RootType::E7: return 126;
        case RootType::E8: return 240;
        case RootType::F4: return 48;
        case RootType::G2: return 12;
    }
    return 0;
}

int rank_of(const std::vector<Vec>& vectors, std::vector<Vec>* independent = nullptr) {
    // Gaussian elimination over Q; optionally return the chosen spanning set.
    std::vector<Vec> rows;
    int r = 0;
    for (const auto& v : vectors) {
        Vec w = v;
        for (const auto& row : rows) {
            std::size_t p = 0;
            while (p < row.size() && row[p] == 0) ++p;
            if (p < row.size() && w[p] != 0) {
                Rat c = w[p] / row[p];
                for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * row[i];
            }
        }
        bool nonzero = false;
        for (const auto& x : w) nonzero = nonzero || x != 0;
        if (nonzero) {
            rows.push_back(w);
            if (independent) independent->push_back(v);
            ++r;
        }
    }
    return r;
}

}  // namespace

RootSystem RootSystem::build(RootType t, int rank) {
    RootSystem rs;
    rs.type = t;
    switch (t) {
        case RootType::A: {
            if (rank < 1) throw InvalidRank("A_l needs l >= 1");
            rs.rank = rank;
            rs.ambient = rank + 1;
            for (int i = 0; i <= rank; ++i)
                for (int j = 0; j <= rank; ++j)
                    if (i != j) {
                        Vec v((std::size_t)rank + 1, Rat(0));
                        v[(std::size_t)i] = 1;
                        v[(std::size_t)j] = -1;
                        rs.roots.push_back(std::move(v));
                    }
            break;
        }
        case RootType::B: {
            if (rank < 2) throw InvalidRank("B_l needs l >= 2");
            rs.rank = rank;
            rs.ambient = rank;
            for (int i = 0; i < rank; ++i) {
                rs.roots.push_back(unit(rank, i, 1));
                rs.roots.push_back(unit(rank, i, -1));
            }
            push_pm_pairs(rs.roots, rank);
            break;
        }
        case RootType::C: {
            if (rank < 2) throw InvalidRank("C_l needs l >= 2");
            rs.rank = rank;
            rs.ambient = rank;
            for (int i = 0; i < rank; ++i) {
                rs.roots.push_back(unit(rank, i, 2));
                rs.roots.push_back(unit(rank, i, -2));
            }
            push_pm_pairs(rs.roots, rank);
            break;
        }
        case RootType::D: {
            if (rank < 3) throw InvalidRank("D_l needs l >= 3");
            rs.rank = rank;
            rs.ambient = rank;
            push_pm_pairs(rs.roots, rank);
            break;
        }
        case RootType::E8: {
            rs.rank = 8;
            rs.ambient = 8;
            rs.roots = e8_roots();
            break;
        }
        case RootType::E7: {
            rs.rank = 7;
            rs.ambient = 8;
            Vec v = unit(8, 6);
            v[7] = 1;  // e7 + e8
            for (auto& a : e8_roots())
                if (dot(a, v) == 0) rs.roots.push_back(std::move(a));
            break;
        }
        case RootType::E6: {
            rs.rank = 6;
            rs.ambient = 8;
            Vec v = unit(8, 6);
            v[7] = 1;  // e7 + e8
            Vec w(8, frac(-1, 2));  // -(e1 + ... + e8)/2, (v,w) = -1
            for (auto& a : e8_roots())
                if (dot(a, v) == 0 && dot(a, w) == 0) rs.roots.push_back(std::move(a));
            break;
        }
        case RootType::F4: {
            rs.rank = 4;
            rs.ambient = 4;
            for (int i = 0; i < 4; ++i) {
                rs.roots.push_back(unit(4, i, 1));
                rs.roots.push_back(unit(4, i, -1));
            }
            push_pm_pairs(rs.roots, 4);
            for (unsigned mask = 0; mask < 16; ++mask) {
                Vec v(4);
                for (int i = 0; i < 4; ++i) v[(std::size_t)i] = frac((mask >> i) & 1 ? -1 : 1, 2);
                rs.roots.push_back(std::move(v));
            }
            break;
        }
        case RootType::G2: {
            rs.rank = 2;
            rs.ambient = 3;
            // inside the plane x1 + x2 + x3 = 0
            int idx[3] = {0, 1, 2};
            for (int i : idx)
                for (int j : idx)
                    if (i != j) {
                        Vec v(3, Rat(0));
                        v[(std::size_t)i] = 1;
                        v[(std::size_t)j] = -1;
                        rs.roots.push_back(std::move(v));  // short
                    }
            for (int i = 0; i < 3; ++i)
                for (long s : {1L, -1L}) {
                    Vec v(3, Rat(-s));
                    v[(std::size_t)i] = 2 * s;
                    rs.roots.push_back(std::move(v));  // long, 2e_i - e_j - e_k
                }
            break;
        }
    }
    switch (t) {
        case RootType::E6: rs.name = "E6"; break;
        case RootType::E7: rs.name = "E7"; break;
        case RootType::E8: rs.name = "E8"; break;
        case RootType::F4: rs.name = "F4"; break;
        case RootType::G2: rs.name = "G2"; break;
        default: {
            char letter = t == RootType::A ? 'A' : t == RootType::B ? 'B'
                                               : t == RootType::C   ? 'C'
                                                                    : 'D';
            rs.name = std::string(1, letter) + std::to_string(rs.rank);
        }
    }
    if (rs.count() != expected_count(t, rs.rank))
        throw ConsistencyFailure(rs.name + ": built " + std::to_string(rs.count()) +
                                 " roots, expected " + std::to_string(expected_count(t, rs.rank)));
    for (const auto& a : rs.roots) {
        Vec neg = a;
        for (auto& x : neg) x = -x;
        if (std::find(rs.roots.begin(), rs.roots.end(), neg) == rs.roots.end())
            throw ConsistencyFailure(rs.name + ": root set not closed under negation");
    }
    if (rank_of(rs.roots, &rs.span_basis) != rs.rank)
        throw ConsistencyFailure(rs.name + ": root span has wrong dimension");
    rs.span_basis.resize((std::size_t)rs.rank);
    return rs;
}

RootSystem RootSystem::parse(const std::string& name) {
    if (name.size() >= 2 && (name[0] == 'E' || name[0] == 'e' || name[0] == 'F' ||
                             name[0] == 'f' || name[0] == 'G' || name[0] == 'g'))
        return build(parse_root_type(name), 0);
    if (name.size() >= 2) {
        RootType t = parse_root_type(name.substr(0, 1));
        int rank = 0;
        try {
            rank = std::stoi(name.substr(1));
        } catch (...) {
            throw ParseError("bad root system name '" + name + "'");
        }
        return build(t, rank);
    }
    throw ParseError("bad root system name '" + name + "'");
}

Vec long_root(const RootSystem& rs) {
    const Vec* best = nullptr;
    Rat bestn(-1);
    for (const auto& a : rs.roots) {
        Rat n = dot(a, a);
        if (n > bestn || (n == bestn && a > *best)) {
            best = &a;
            bestn = n;
        }
    }
    return *best;
}

Vec coroot(const RootSystem& rs, const Vec& theta) {
    (void)rs;
    Rat n = dot(theta, theta);
    Vec h = theta;
    for (auto& x : h) x = Rat(2) * x / n;
    return h;
}

std::vector<long> coroot_values(const RootSystem& rs, const Vec& theta) {
    Rat n = dot(theta, theta);
    std::vector<long> out;
    out.reserve(rs.roots.size());
    for (const auto& a : rs.roots) {
        Rat v = Rat(2) * dot(a, theta) / n;
        if (!is_integer(v))
            throw ConsistencyFailure(rs.name + ": non-integral coroot value " + rat_str(v));
        out.push_back(v.get_num().get_si());
    }
    return out;
}

long kappa_hh(const RootSystem& rs) {
    long s = 0;
    for (long v : coroot_values(rs, long_root(rs))) s += v * v;
    return s;
}

Rat power_trace(const RootSystem& rs, const Vec& h, long k) {
    Rat s(0);
    for (const auto& a : rs.roots) s += rat_pow(dot(a, h), k);
    return s;
}

Rat x_trace(const RootSystem& rs, const Vec& u, const Vec& v) {
    Rat s(0);
    for (const auto& a : rs.roots) {
        Rat au = dot(a, u), av = dot(a, v);
        Rat au2 = au * au, av2 = av * av;
        s += au2 * au2 - Rat(6) * au2 * av2 + av2 * av2;
    }
    return s;
}

bool pair_constrained(const RootSystem& rs, const Vec& u, const Vec& v) {
    (void)rs;
    return dot(u, v) == 0 && dot(u, u) == dot(v, v);
}

PairSums pair_sums(const RootSystem& rs, const Vec& p, const Vec& q) {
    PairSums s{Rat(0), Rat(0), Rat(0)};
    for (const auto& a : rs.roots) {
        Rat ap = dot(a, p), aq = dot(a, q);
        Rat ap2 = ap * ap, aq2 = aq * aq;
        s.s40 += ap2 * ap2;
        s.s22 += ap2 * aq2;
        s.s04 += aq2 * aq2;
    }
    return s;
}

Rat level_ratio(const RootSystem& rs) {
    if (rs.lie_dim() == 24) throw DegenerateRatio(rs.name + ": dimension 24");
    return frac(6 * kappa_hh(rs), rs.lie_dim() - 24);
}

std::vector<SweepRow> classical_sweep(RootType t, int lmin, int lmax) {
    int floor_rank = t == RootType::A ? 3 : t == RootType::B ? 2 : t == RootType::C ? 3 : 4;
    if (t != RootType::A && t != RootType::B && t != RootType::C && t != RootType::D)
        throw InvalidRank("classical_sweep: classical families only");
    if (lmin < floor_rank)
        throw InvalidRank("classical_sweep: rank below the family minimum");
    std::vector<SweepRow> rows;
    for (int l = lmin; l <= lmax; ++l) {
        RootSystem rs = RootSystem::build(t, l);
        Vec u, v;
        if (t == RootType::A) {
            u = Vec((std::size_t)l + 1, Rat(0));
            u[0] = 1;
            u[1] = -1;
            v = Vec((std::size_t)l + 1, Rat(0));
            v[(std::size_t)l - 1] = 1;
            v[(std::size_t)l] = -1;
        } else {
            u = unit(l, 0);
            v = unit(l, l - 1);
        }
        if (!pair_constrained(rs, u, v))
            throw ConsistencyFailure(rs.name + ": standard sweep pair not constrained");
        SweepRow row;
        row.rank = l;
        row.trace = x_trace(rs, u, v);
        long cl = t == RootType::A   ? 8L * l + 8
                  : t == RootType::B ? 8L * l - 28
                  : t == RootType::C ? 8L * l + 32
                                     : 8L * l - 32;
        row.closed = Rat(cl);
        row.match = row.trace == row.closed;
        rows.push_back(row);
    }
    return rows;
}

FourDesignReport four_design_check(const RootSystem& rs, int trials, unsigned long seed) {
    FourDesignReport rep;
    rep.name = rs.name;
    rep.trials = trials;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    auto draw = [&]() {
        Vec v((std::size_t)rs.ambient, Rat(0));
        bool nz = false;
        while (!nz) {
            for (int i = 0; i < rs.rank; ++i) {
                long c = coef(rng);
                for (int j = 0; j < rs.ambient; ++j)
                    v[(std::size_t)j] += Rat(c) * rs.span_basis[(std::size_t)i][(std::size_t)j];
                nz = nz || c != 0;
            }
        }
        return v;
    };
    for (int tnum = 0; tnum < trials; ++tnum) {
        Vec p = draw(), r = draw();
        Rat pp = dot(p, p);
        Vec q = r;
        Rat pr = dot(p, r);
        for (std::size_t i = 0; i < q.size(); ++i) q[i] -= pr / pp * p[i];
        Rat qq = dot(q, q);
        // Rank 1 (and parallel draws) only admit q = 0; the constrained pair
        // degenerates to (0, 0) and the combination below is trivially zero.
        if (qq == 0) ++rep.degenerate;
        Rat lambda = qq / pp;  // (sqrt(lambda) p, q) is an equal-norm orthogonal pair
        PairSums s = pair_sums(rs, p, q);
        Rat t = lambda * lambda * s.s40 - Rat(6) * lambda * s.s22 + s.s04;
        if (t != 0) ++rep.failures;
    }
    rep.all_zero = rep.failures == 0;
    return rep;
}

Rat design_constant(const RootSystem& rs) {
    auto eval = [&](const Vec& x) {
        Rat xx = dot(x, x);
        return Rat(power_trace(rs, x, 4) / (xx * xx));
    };
    Vec x1((std::size_t)rs.ambient, Rat(0)), x2 = x1;
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.ambient; ++j) {
            x1[(std::size_t)j] += Rat(i + 1) * rs.span_basis[(std::size_t)i][(std::size_t)j];
            x2[(std::size_t)j] += Rat((i + 2) * (i % 3 + 1)) * rs.span_basis[(std::size_t)i][(std::size_t)j];
        }
    Rat c = eval(x1);
    if (eval(x2) != c)
        throw ConsistencyFailure(rs.name + ": fourth moments are not a multiple of (x,x)^2");
    return c;
}

std::vector<RootSystem> augmented_types() {
    std::vector<RootSystem> out;
    out.push_back(RootSystem::build(RootType::A, 1));
    out.push_back(RootSystem::build(RootType::A, 2));
    out.push_back(RootSystem::build(RootType::D, 4));
    out.push_back(RootSystem::build(RootType::E6));
    out.push_back(RootSystem::build(RootType::E7));
    out.push_back(RootSystem::build(RootType::E8));
    out.push_back(RootSystem::build(RootType::F4));
    out.push_back(RootSystem::build(RootType::G2));
    return out;
}

}  // namespace traceforms
