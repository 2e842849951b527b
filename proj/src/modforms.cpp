#include "traceforms/modforms.hpp"

#include <algorithm>

namespace traceforms {

bool EchelonSet::insert(QSeries f) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (f.is_zero()) break;
        if (piv_[i] < f.cutoff24()) {
            Rat c = f.coeff24(piv_[i]);
            if (c != 0) f = f - c * rows_[i];
        }
    }
    if (f.is_zero()) return false;
    long p = f.offset24();
    f = (Rat(1) / f.coeffs()[0]) * f;
    auto pos = std::upper_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, f);
    // back-substitute so earlier rows vanish at the new pivot
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if ((long)i == pos) continue;
        if (p < rows_[i].cutoff24()) {
            Rat c = rows_[i].coeff24(p);
            if (c != 0) rows_[i] = rows_[i] - c * rows_[(std::size_t)pos];
        }
    }
    return true;
}

FormSpace mk_space(long weight, long prec) {
    FormSpace s;
    s.weight = weight;
    s.sturm = weight >= 0 ? weight / 12 + 2 : 0;
    if (weight < 0 || weight % 2 != 0) return s;
    long p = std::max(prec, s.sturm + 1);
    if (weight == 0) {
        s.basis = {QSeries::constant(1, p)};
        s.pivots24 = {0};
        return s;
    }
    QSeries g4 = eisenstein(4, p), g6 = eisenstein(6, p);
    EchelonSet ech;
    long monomials = 0;
    for (long b = 0; 6 * b <= weight; ++b) {
        long rem = weight - 6 * b;
        if (rem % 4 != 0) continue;
        ++monomials;
        QSeries m = g4.pow(rem / 4) * g6.pow(b);
        ech.insert(m);
    }
    if (ech.dim() != monomials)
        throw ConsistencyFailure("mk_space: monomials G4^a G6^b are not independent at weight " +
                                 std::to_string(weight));
    for (long i = 0; i < ech.dim(); ++i)
        if (ech.pivots24()[(std::size_t)i] != 24 * i)
            throw ConsistencyFailure("mk_space: echelon pivots not 0..dim-1 at weight " +
                                     std::to_string(weight));
    s.basis = ech.rows();
    s.pivots24 = ech.pivots24();
    return s;
}

FormSpace cusp_space(long weight, long prec) {
    FormSpace s = mk_space(weight, prec);
    s.cusp_only = true;
    if (!s.basis.empty() && s.pivots24[0] == 0) {
        s.basis.erase(s.basis.begin());
        s.pivots24.erase(s.pivots24.begin());
    }
    return s;
}

Membership membership(const FormSpace& space, const QSeries& f) {
    Membership r;
    if (f.is_zero()) {
        r.member = true;
        r.coords.assign((std::size_t)space.dim(), Rat(0));
        return r;
    }
    if (f.offset24() % 24 != 0 || f.offset24() < 0) {
        r.member = false;
        r.first_discrepant24 = f.offset24();
        return r;
    }
    if (f.cutoff24() <= 24 * space.sturm)
        throw InsufficientPrecision("membership: need coefficients through q^" +
                                    std::to_string(space.sturm));
    QSeries residual = f;
    for (std::size_t i = 0; i < space.basis.size(); ++i) {
        Rat c = residual.is_zero() ? Rat(0) : residual.coeff24(space.pivots24[i]);
        r.coords.push_back(c);
        if (c != 0) residual = residual - c * space.basis[i];
    }
    if (residual.is_zero()) {
        r.member = true;
        return r;
    }
    r.member = false;
    r.first_discrepant24 = residual.offset24();
    r.coords.clear();
    return r;
}

QSeries serre_derivative(const QSeries& f, const Rat& weight) {
    if (f.is_zero()) return QSeries::zero();
    return f.theta() + weight * (g2_series(f.prec()) * f);
}

PSpace p_space(long c, long k, long prec) {
    if (c % 2 != 0) throw UnsupportedCharge("p_space: charge must be even");
    PSpace p;
    p.c = c;
    p.k = k;
    p.form_weight = k + c / 2;
    FormSpace m = mk_space(p.form_weight, prec);
    if (m.dim() == 0) return p;
    long pr = std::max(prec, m.sturm + 1);
    QSeries eminus = eta_pow(-c, pr), eplus = eta_pow(c, pr);
    for (const auto& b : m.basis) {
        QSeries elt = eminus * b;
        if (!agree_on_overlap(eplus * elt, b))
            throw ConsistencyFailure("p_space: eta^c (eta^-c f) != f");
        p.basis.push_back(elt);
    }
    return p;
}

DeltaModuleReport delta_module_closure(const std::vector<std::pair<QSeries, long>>& generators,
                                       long wmax, long prec) {
    DeltaModuleReport rep;
    if (generators.empty()) return rep;
    long wmin = generators[0].second;
    for (const auto& g : generators) wmin = std::min(wmin, g.second);
    QSeries g4 = eisenstein(4, prec), g6 = eisenstein(6, prec);
    std::map<long, EchelonSet> sets;
    for (long w = wmin; w <= wmax; ++w) {
        EchelonSet& e = sets[w];
        for (const auto& g : generators)
            if (g.second == w) e.insert(g.first);
        auto grown = [&](long src) -> const EchelonSet* {
            auto it = sets.find(src);
            return (it == sets.end()) ? nullptr : &it->second;
        };
        if (const EchelonSet* s = grown(w - 2))
            for (const auto& row : s->rows()) e.insert(serre_derivative(row, Rat(w - 2)));
        if (const EchelonSet* s = grown(w - 4))
            for (const auto& row : s->rows()) e.insert(g4 * row);
        if (const EchelonSet* s = grown(w - 6))
            for (const auto& row : s->rows()) e.insert(g6 * row);
    }
    // report weights of the same parity as some generator
    bool parity[2] = {false, false};
    for (const auto& g : generators) parity[((g.second % 2) + 2) % 2] = true;
    for (long w = wmin; w <= wmax; ++w) {
        if (!parity[((w % 2) + 2) % 2]) continue;
        auto it = sets.find(w);
        long d = (it == sets.end()) ? 0 : it->second.dim();
        rep.dims[w] = d;
        if (d > 0) rep.bases[w] = it->second.rows();
    }
    return rep;
}

Decomposition decompose(const FormSpace& space, const QSeries& f) {
    if (space.dim() == 0 || space.pivots24[0] != 0)
        throw InvalidPivot("decompose: space has no element with nonzero constant term");
    Decomposition d;
    d.lambda = f.is_zero() ? Rat(0) : f.coeff(0) / space.basis[0].coeff(0);
    d.cusp = f - d.lambda * space.basis[0];
    FormSpace cs = space;
    cs.cusp_only = true;
    cs.basis.erase(cs.basis.begin());
    cs.pivots24.erase(cs.pivots24.begin());
    d.cusp_check = membership(cs, d.cusp);
    return d;
}

std::vector<GradedSlot> graded_trace_space(long c, long kmax, long prec, long dim_v1) {
    if (c != 8 && c != 16 && c != 24)
        throw UnsupportedCharge("graded_trace_space: central charge must be 8, 16 or 24");
    if (kmax < 0) throw InvalidWeight("graded_trace_space: kmax < 0");
    std::vector<GradedSlot> out;
    for (long k = 0; k <= kmax; k += 2) {
        GradedSlot slot;
        slot.k = k;
        slot.form_weight = k + c / 2;
        if (c == 24 && k == 0) {
            if (dim_v1 < 0)
                throw UnsupportedCharge(
                    "graded_trace_space: the weight-0 slot at c = 24 needs dim V_1");
            slot.basis = {j_series(prec) + Rat(dim_v1)};
            slot.dim = 1;
        } else {
            PSpace p = p_space(c, k, prec);
            slot.basis = p.basis;
            slot.dim = p.dim();
        }
        out.push_back(std::move(slot));
    }
    return out;
}

}  // namespace traceforms
