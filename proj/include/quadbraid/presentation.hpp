#pragma once

#include "quadbraid/quadform.hpp"

#include <optional>

namespace quadbraid {

/// A presentation (F0, pi, C) of the group underlying a quadratic form:
/// F0 = Z^rank with pi: F0 ->> G, the kernel F1 spanned by explicit relation
/// generators, and a bilinear form C on F0 given by its rank x rank matrix
/// over the target.
///
/// Two shapes exist. The diagonal shape maps basis vector j to the j-th
/// cyclic generator (relation_moduli must then equal the group moduli, with
/// n_j e_j spanning the kernel). The matrix shape carries an explicit
/// projection matrix plus a relation matrix whose columns span the kernel;
/// it covers maps like Z^n ->> Z, x -> Σx_i.
struct Presentation {
    Group group;
    TargetGroup target;
    std::size_t rank = 0;
    IntVec relation_moduli;                    // diagonal shape, size rank
    std::optional<IntMatrix> relation_matrix;  // matrix shape: rank rows, one column per relation
    std::optional<IntMatrix> projection;       // matrix shape: group.rank() rows, rank columns
    std::vector<std::vector<Coeff>> C;         // rank x rank

    bool diagonal() const { return !projection.has_value(); }

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.group == b.group && a.target == b.target && a.rank == b.rank &&
               a.relation_moduli == b.relation_moduli && a.relation_matrix == b.relation_matrix &&
               a.projection == b.projection && a.C == b.C;
    }
};

/// Diagonal-shape constructor; validates moduli consistency, matrix size and
/// entry targets.
Presentation make_diagonal_presentation(const Group& g, const TargetGroup& target,
                                        std::vector<std::vector<Coeff>> C);

/// Matrix-shape constructor; additionally checks that every relation column
/// maps to 0 and that the projection is surjective.
Presentation make_matrix_presentation(const Group& g, const TargetGroup& target, std::size_t rank,
                                      IntMatrix relation_matrix, IntMatrix projection,
                                      std::vector<std::vector<Coeff>> C);

/// pi applied to an arbitrary vector of F0.
GroupElement project(const Presentation& p, const IntVec& x);

/// Basis of the recorded kernel F1, as vectors of F0.
std::vector<IntVec> relation_generators(const Presentation& p);

/// Canonical-residue lift G -> F0 (diagonal shape only): the coordinates of
/// a canonical element, taken verbatim as integers.
IntVec lift(const Presentation& p, const GroupElement& x);

/// L(x,y) = lift(x+y) - lift(x) - lift(y); always lands in F1.
IntVec L(const Presentation& p, const GroupElement& x, const GroupElement& y);

/// Bilinear extension of the C matrix to arbitrary vectors of F0.
Coeff eval_C(const Presentation& p, const IntVec& u, const IntVec& v);

struct PresentationFlags {
    bool pre_admissible = false;
    bool admissible = false;
    bool optimal = false;
};

/// Cheap exact verdicts: the polarization axiom on basis pairs, isotropy /
/// orthogonality on relation generators, and the optimality equation over
/// canonical lifts plus a coordinate box.
PresentationFlags presentation_flags(const Presentation& p, const QuadraticForm& q, const Int& box = 3);

struct PresentationReport {
    CheckReport checks;
    bool pre_admissible = false;
    bool admissible = false;
    bool optimal = false;
    std::optional<FailureCase> admissibility_witness;  // first nonzero C(f_i, f_j)
};

/// Full report: everything presentation_flags decides, plus the lift/L
/// identities (section map, vanishing at zero, symmetry, the additivity
/// defect rule, and orthogonality of C on pairs of L values) for diagonal
/// presentations.
PresentationReport validate_presentation(const Presentation& p, const QuadraticForm& q, const Int& box = 3);

/// Diagonal presentation with the upper-triangular C: polarization above the
/// diagonal, q's generator values on it, zero below. Always admissible and
/// optimal.
Presentation standard_presentation(const QuadraticForm& q);

/// Presentation carrying a bilinear witness of q: C is the witness matrix
/// pulled back to F0, which annihilates the kernel, so the result is
/// admissible and optimal and its cocycle has zero associator. Throws
/// WitnessMismatch when S(x,x) != q(x) somewhere.
Presentation from_bilinear(const BilinearForm& s, const QuadraticForm& q);

/// Rewrites C so the optimality equation holds everywhere, preserving the
/// relations and (when present) admissibility: subtracts the F2-diagonal
/// correction J built from the defect L = C(x,x) - q(pi x) over a basis of
/// F0/2F0 whose leading vectors span the image of F1.
Presentation optimize(const Presentation& p, const QuadraticForm& q);

/// Divisible-target repair: extends the alternating form C|F1 to all of F0
/// (Smith normal form of the wedge-basis inclusion, then division in Q/Z)
/// and subtracts it, making C vanish on F1 x F1 without touching C(x,x).
Presentation make_admissible(const Presentation& p);

}  // namespace quadbraid
