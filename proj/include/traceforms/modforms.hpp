#pragma once

#include <map>
#include <utility>
#include <vector>

#include "traceforms/qseries.hpp"

namespace traceforms {

// A set of q-expansions kept in reduced row-echelon form.  Rows are scaled to
// leading coefficient 1, have strictly increasing pivot exponents and are
// fully reduced against each other.
class EchelonSet {
public:
    // Returns true when f was independent of the current rows.
    bool insert(QSeries f);
    long dim() const { return (long)rows_.size(); }
    const std::vector<QSeries>& rows() const { return rows_; }
    const std::vector<long>& pivots24() const { return piv_; }

private:
    std::vector<QSeries> rows_;
    std::vector<long> piv_;
};

// Holomorphic modular forms of the given weight, spanned by the monomials
// G_4^a G_6^b with 4a + 6b = weight, echelonized.  Empty for odd or negative
// weight.  sturm is the certificate index: two forms of this weight agreeing
// through q^sturm are equal.
struct FormSpace {
    long weight = 0;
    long sturm = 0;
    bool cusp_only = false;
    std::vector<QSeries> basis;
    std::vector<long> pivots24;
    long dim() const { return (long)basis.size(); }
};

FormSpace mk_space(long weight, long prec);
FormSpace cusp_space(long weight, long prec);

struct Membership {
    bool member = false;
    std::vector<Rat> coords;        // in the echelon basis, when member
    long first_discrepant24 = 0;    // witness exponent (in 24ths), when not
};

// Decide membership of f by reduction against the echelon basis.  f must
// carry at least sturm+1 coefficients (InsufficientPrecision otherwise).
Membership membership(const FormSpace& space, const QSeries& f);

// delta_k f = q df/dq + k G_2 f.
QSeries serre_derivative(const QSeries& f, const Rat& weight);

// eta^{-c} M_{k + c/2}, with the round trip eta^c * basis element landing
// back in the form space re-checked on construction.
struct PSpace {
    long c = 0;
    long k = 0;
    long form_weight = 0;
    std::vector<QSeries> basis;
    long dim() const { return (long)basis.size(); }
};
PSpace p_space(long c, long k, long prec);

// Close a set of weighted generators under f -> delta f (weight +2),
// f -> G_4 f (+4) and f -> G_6 f (+6), tracking one echelon set per weight
// up to wmax.  Reports the dimension at every reachable weight.
struct DeltaModuleReport {
    std::map<long, long> dims;
    std::map<long, std::vector<QSeries>> bases;
};
DeltaModuleReport delta_module_closure(const std::vector<std::pair<QSeries, long>>& generators,
                                       long wmax, long prec);

// f = lambda * (pivot basis element) + cusp part.  Requires the space to
// contain a form with nonzero constant term (InvalidPivot otherwise).
struct Decomposition {
    Rat lambda;
    QSeries cusp;
    Membership cusp_check;
};
Decomposition decompose(const FormSpace& space, const QSeries& f);

// The candidate space for a graded trace of weight k at central charge c:
// eta^{-c} M_{k + c/2} for c in {8, 16, 24}, except that the weight-0 slot at
// c = 24 is the single line dim_v1 + J.
struct GradedSlot {
    long k = 0;
    long form_weight = 0;
    long dim = 0;
    std::vector<QSeries> basis;
};
std::vector<GradedSlot> graded_trace_space(long c, long kmax, long prec, long dim_v1 = -1);

}  // namespace traceforms
