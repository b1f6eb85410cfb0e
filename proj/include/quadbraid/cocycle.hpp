#pragma once

#include "quadbraid/presentation.hpp"

#include <optional>

namespace quadbraid {

/// How a cocycle's two structure maps are evaluated:
///  - PresentationBacked: h(x,y,z) = -C(lift(x), L(y,z)), c(x,y) = C(lift(x), lift(y)).
///  - QuinnClosedForm:    the sigma-table closed formulas (finite carries only).
///  - ExpClosedForm:      same values through the integer parameter vector,
///                        kept as a separate code path so agreement with
///                        QuinnClosedForm is a real cross-check.
///  - Table:              dense value tables in lexicographic element order.
enum class CocycleBackend { PresentationBacked, QuinnClosedForm, ExpClosedForm, Table };

/// An associator/braiding pair (h: G^3 -> M, c: G^2 -> M). Instances are
/// produced by the constructors below; verify_cocycle checks the pentagon,
/// both hexagons and normalization rather than trusting the construction.
struct Cocycle {
    Group group;
    TargetGroup target;
    CocycleBackend backend = CocycleBackend::Table;

    std::optional<Presentation> pres;       // PresentationBacked
    std::vector<std::vector<Coeff>> sigma;  // QuinnClosedForm: rank x rank, zero below the diagonal
    FormParams exp_params;                  // ExpClosedForm
    std::vector<Coeff> h_table;             // Table: |G|^3 values, lex order
    std::vector<Coeff> c_table;             // Table: |G|^2 values, lex order

    /// Evaluators; arguments must be canonical elements of `group`.
    Coeff h(const GroupElement& x, const GroupElement& y, const GroupElement& z) const;
    Coeff c(const GroupElement& x, const GroupElement& y) const;
};

/// A normalized 2-variable map k: G^2 -> M (k(x,0) = k(0,y) = 0), the input
/// of the coboundary construction. Dense table in lexicographic order.
struct KMap {
    Group group;
    TargetGroup target;
    std::vector<Coeff> table;  // |G|^2 values

    Coeff value(const GroupElement& x, const GroupElement& y) const;
};

/// Validates the table size, value targets and normalization.
KMap kmap_from_table(const Group& g, const TargetGroup& target, std::vector<Coeff> table);

/// The cocycle attached to an admissible optimal presentation of q through
/// the canonical residue lift. The hypotheses are checked up front.
Cocycle cocycle_from_presentation(const Presentation& p, const QuadraticForm& q);

/// Closed-form cocycle from the generator table sigma(i,j) = b(e_i,e_j) for
/// i<j, q(e_i) for i=j. Works for any finitely generated group; free factors
/// never contribute to h.
Cocycle quinn_cocycle(const QuadraticForm& q);

/// The associator of quinn_cocycle(q) evaluated at arbitrary (not
/// necessarily canonical) integer representatives, via floor terms.
Coeff quinn_floor_h(const QuadraticForm& q, const IntVec& x, const IntVec& y, const IntVec& z);

/// Diagonal floor formula h = sum_i n_i x_i floor((y_i+z_i)/n_i) sigma_ii;
/// agrees with quinn_cocycle's h on canonical representatives.
Coeff ks_floor_h(const QuadraticForm& q, const IntVec& x, const IntVec& y, const IntVec& z);

/// Same cocycle as quinn_cocycle for a finite group over Q/Z, evaluated from
/// the integer parameters p_k, q_kl and the residue arithmetic of the
/// exponents. Errors: InfiniteGroup, TargetNotQmodZ.
Cocycle exp_cocycle(const QuadraticForm& q);

/// The pair h(x,y,z) = k(y,z) - k(x+y,z) + k(x,y+z) - k(x,y),
/// c(x,y) = k(y,x) - k(x,y), materialized as a Table cocycle. The
/// antisymmetrization direction is the one compatible with the hexagon
/// identities: with c(x,y) = k(x,y) - k(y,x) the pair would miss them by
/// twice the additivity defect of c, so only 2-divisible defects would pass.
Cocycle coboundary(const KMap& k);

/// Dense Table copy of any cocycle on a finite group.
Cocycle tabulate(const Cocycle& w);

/// Pointwise sum / difference (finite groups; tables are materialized).
Cocycle add(const Cocycle& a, const Cocycle& b);
Cocycle sub(const Cocycle& a, const Cocycle& b);

/// h and c agree everywhere (finite) or on the coordinate box (otherwise).
bool pointwise_equal(const Cocycle& a, const Cocycle& b, const Int& box = 3);

/// Checks the pentagon over G^4, the two hexagons over G^3, and the
/// normalization of h and c. Exhaustive for finite groups (via dense tables
/// and residue arithmetic), box-bounded when free factors are present.
CheckReport verify_cocycle(const Cocycle& w, const Int& box = 3);

/// The quadratic form x -> c(x,x), read off the generators; verified to be
/// genuinely quadratic by a full pointwise sweep. Errors: TraceNotQuadratic
/// when the diagonal of c is not a quadratic form (broken input cocycle),
/// InfiniteGroup.
QuadraticForm trace(const Cocycle& w);

/// Equivalence test: two cocycles on the same finite group differ by a
/// coboundary exactly when their traces agree pointwise.
bool cohomologous(const Cocycle& w1, const Cocycle& w2);

/// Brute-force search for k with w1 - w2 = coboundary(k), over normalized
/// KMaps whose values have denominator dividing den_bound. Empty means "no
/// witness at this bound", which proves nothing about inequivalence; the
/// search space guard rejects groups of order > 8 or grids past the ceiling.
std::optional<KMap> coboundary_witness(const Cocycle& w1, const Cocycle& w2, const Int& den_bound,
                                       const Int& ceiling = Int(1) << 20);

/// True when c(x,y) + c(y,x) = 0 everywhere (finite) or on the box.
bool is_symmetric(const Cocycle& w, const Int& box = 3);

}  // namespace quadbraid
