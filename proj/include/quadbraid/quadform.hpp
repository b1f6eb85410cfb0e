#pragma once

#include "quadbraid/group.hpp"
#include "quadbraid/report.hpp"
#include "quadbraid/target.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace quadbraid {

/// Torsion order that a diagonal generator value q(e_k) must satisfy:
/// gcd(n², 2n) for a finite factor Z/n, no constraint (0) for a free factor.
Int diag_torsion(const Int& n);

/// Torsion order for an off-diagonal value b(e_k, e_l): gcd of the two
/// moduli, where a free factor (0) imposes nothing beyond its partner.
Int pair_torsion(const Int& a, const Int& b);

/// Index of the pair (k, l), k < l, in the lexicographic pair ordering
/// (0,1), (0,2), ..., (1,2), ... used for off-diagonal storage.
std::size_t pair_index(std::size_t rank, std::size_t k, std::size_t l);

/// Quadratic form q: G -> M stored through its generator data: the diagonal
/// values q(e_k) and the polarization values b(e_k, e_l) for k < l. All other
/// values follow from q(x) = Σ x_k² q(e_k) + Σ_{k<l} x_k x_l b(e_k, e_l).
struct QuadraticForm {
    Group group;
    TargetGroup target;
    std::vector<Coeff> diag;     // size rank
    std::vector<Coeff> offdiag;  // size rank*(rank-1)/2, pair order as above

    const Coeff& off(std::size_t k, std::size_t l) const { return offdiag[pair_index(group.rank(), k, l)]; }

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
        return a.group == b.group && a.target == b.target && a.diag == b.diag && a.offdiag == b.offdiag;
    }
};

/// Bilinear form S: G x G -> M through the full generator matrix S(e_k, e_l).
struct BilinearForm {
    Group group;
    TargetGroup target;
    std::vector<Coeff> entries;  // rank*rank, row-major

    const Coeff& at(std::size_t k, std::size_t l) const { return entries[k * group.rank() + l]; }
};

/// Builds and validates a form. Off-diagonal entries are given sparsely for
/// pairs k < l; missing pairs are zero. Throws TorsionViolation naming the
/// offending generator (or pair) when a value is not well-defined on
/// residues, LengthMismatch / MixedTargets for malformed input.
QuadraticForm form_from_params(const Group& g, const TargetGroup& target, std::vector<Coeff> diag,
                               const std::map<std::pair<std::size_t, std::size_t>, Coeff>& offdiag);

QuadraticForm zero_form(const Group& g, const TargetGroup& target);

/// q(x) for a canonical element.
Coeff evaluate(const QuadraticForm& q, const GroupElement& x);

/// b(x,y) = q(x+y) - q(x) - q(y).
Coeff polarization(const QuadraticForm& q, const GroupElement& x, const GroupElement& y);

bool has_zero_polarization(const QuadraticForm& q);

/// Checks q(x)=q(-x), q(0)=0, q(nx)=n²q(x) and bilinearity/symmetry of the
/// polarization. Exhaustive for finite groups; over the coordinate box
/// [-box, box] on free factors otherwise.
CheckReport validate_form(const QuadraticForm& q, const Int& box = 3);

/// Integer parameters behind a Q/Z-valued form on a finite group: diagonal
/// p_k over gcd(n_k², 2n_k) and off-diagonal q_{k,l} over gcd(n_k, n_l).
struct FormParams {
    std::vector<Int> diag;
    std::vector<Int> offdiag;
};

FormParams form_params(const QuadraticForm& q);
QuadraticForm form_from_int_params(const Group& g, const FormParams& params);

/// All Q/Z-valued forms on a finite group, in lexicographic parameter order.
std::vector<QuadraticForm> enumerate_forms(const Group& g, const TargetGroup& target = TargetGroup::qmodz());

/// ∏_k gcd(2n_k, n_k²) · ∏_{k<l} gcd(n_k, n_l).
Int count_forms(const Group& g);

/// Pointwise sum (parameters add componentwise).
QuadraticForm add_forms(const QuadraticForm& a, const QuadraticForm& b);

/// Validates well-definedness of the entries and builds the form.
BilinearForm bilinear_from_entries(const Group& g, const TargetGroup& target, std::vector<Coeff> entries);

/// S(x,y) = Σ x_k y_l S(e_k, e_l).
Coeff evaluate(const BilinearForm& s, const GroupElement& x, const GroupElement& y);

struct WitnessSearch {
    std::optional<BilinearForm> witness;
    Int grid_size = 0;        // number of candidate matrices the search covers
    bool exhausted = false;   // true when the whole grid was tried without a hit
    bool symmetric_fast_path = false;  // zero polarization, direct construction
};

/// Searches for S with q(x) = S(x,x) for all x. Zero-polarization forms are
/// handled constructively (diagonal matrix over an F2-basis of G/2G); all
/// others by exhaustive lexicographic search over the torsion-constrained
/// entry grids. Finite groups over Q/Z only.
WitnessSearch bilinear_witness_search(const QuadraticForm& q, const Int& ceiling = Int(1) << 20);

std::optional<BilinearForm> bilinear_witness(const QuadraticForm& q, const Int& ceiling = Int(1) << 20);

}  // namespace quadbraid
