#include "quadbraid/presentation.hpp"

#include "quadbraid/smith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace quadbraid {

namespace {

std::string vec_str(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

void check_C_matrix(const TargetGroup& target, std::size_t rank, const std::vector<std::vector<Coeff>>& C) {
    if (C.size() != rank)
        throw Error(ErrorKind::LengthMismatch,
                    "C has " + std::to_string(C.size()) + " rows, expected " + std::to_string(rank));
    for (const auto& row : C) {
        if (row.size() != rank)
            throw Error(ErrorKind::LengthMismatch, "C matrix is not rank x rank");
        for (const auto& entry : row)
            if (entry.target() != target)
                throw Error(ErrorKind::MixedTargets, "C entry lies in " + entry.target().name() +
                                                         " but the presentation target is " + target.name());
    }
}

IntVec matrix_column(const IntMatrix& m, std::size_t j) {
    IntVec col(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) col[i] = m[i][j];
    return col;
}

/// All integer vectors of the given length with entries in [-box, box],
/// odometer order (last coordinate fastest).
std::vector<IntVec> box_vectors(std::size_t len, const Int& box) {
    std::vector<IntVec> out;
    if (len == 0) {
        out.push_back(IntVec{});
        return out;
    }
    IntVec v(len, -box);
    while (true) {
        out.push_back(v);
        std::size_t j = len - 1;
        while (true) {
            if (v[j] < box) {
                ++v[j];
                break;
            }
            v[j] = -box;
            if (j == 0) return out;
            --j;
        }
    }
}

GroupElement basis_image(const Presentation& p, std::size_t j) {
    IntVec e(p.rank, Int(0));
    e[j] = 1;
    return project(p, e);
}

void require_matching(const Presentation& p, const QuadraticForm& q) {
    if (q.group != p.group)
        throw Error(ErrorKind::GroupMismatch,
                    "form on " + to_string(q.group) + " against a presentation of " + to_string(p.group));
    if (q.target != p.target)
        throw Error(ErrorKind::MixedTargets, "form over " + q.target.name() + " against a presentation over " +
                                                 p.target.name());
}

/// Elements the exhaustive sweeps run over: everything for a finite group,
/// a coordinate box otherwise.
std::vector<GroupElement> sweep_elements(const Group& g, const Int& box) {
    return g.finite() ? enumerate_elements(g) : box_elements(g, box);
}

/// First violated pre-admissibility condition, rendered for error messages;
/// std::nullopt when p is pre-admissible for q.
std::optional<std::string> pre_admissibility_violation(const Presentation& p, const QuadraticForm& q) {
    for (std::size_t i = 0; i < p.rank; ++i) {
        GroupElement gi = basis_image(p, i);
        for (std::size_t j = i; j < p.rank; ++j) {
            Coeff lhs = add(p.C[i][j], p.C[j][i]);
            Coeff rhs = polarization(q, gi, basis_image(p, j));
            if (lhs != rhs)
                return "polarization axiom fails at basis pair (" + std::to_string(i) + "," + std::to_string(j) +
                       "): C(x,y)+C(y,x) = " + lhs.str() + ", b(pi x, pi y) = " + rhs.str();
        }
    }
    for (const IntVec& f : relation_generators(p)) {
        Coeff val = eval_C(p, f, f);
        if (!val.is_zero()) return "relation isotropy fails at f = " + vec_str(f) + ": C(f,f) = " + val.str();
    }
    return std::nullopt;
}

}  // namespace

Presentation make_diagonal_presentation(const Group& g, const TargetGroup& target,
                                        std::vector<std::vector<Coeff>> C) {
    check_C_matrix(target, g.rank(), C);
    Presentation p;
    p.group = g;
    p.target = target;
    p.rank = g.rank();
    p.relation_moduli = g.moduli;
    p.C = std::move(C);
    return p;
}

Presentation make_matrix_presentation(const Group& g, const TargetGroup& target, std::size_t rank,
                                      IntMatrix relation_matrix, IntMatrix projection,
                                      std::vector<std::vector<Coeff>> C) {
    check_C_matrix(target, rank, C);
    if (projection.size() != g.rank())
        throw Error(ErrorKind::LengthMismatch, "projection must have one row per group coordinate");
    for (const auto& row : projection)
        if (row.size() != rank) throw Error(ErrorKind::LengthMismatch, "projection must have one column per basis vector");
    for (const auto& row : relation_matrix)
        if (row.size() != relation_matrix.front().size())
            throw Error(ErrorKind::LengthMismatch, "ragged relation matrix");
    if (!relation_matrix.empty() && relation_matrix.size() != rank)
        throw Error(ErrorKind::LengthMismatch, "relation matrix must have one row per basis vector");

    Presentation p;
    p.group = g;
    p.target = target;
    p.rank = rank;
    p.relation_matrix = std::move(relation_matrix);
    p.projection = std::move(projection);
    p.C = std::move(C);

    // Every relation column must die under pi.
    for (const IntVec& f : relation_generators(p))
        if (!is_zero(reduce(g, matrix_apply(*p.projection, f))))
            throw std::invalid_argument("relation " + vec_str(f) + " does not map to zero");

    // Surjectivity of pi: the columns of the projection together with the
    // moduli relations must generate every coordinate, i.e. the stacked
    // matrix has trivial cokernel (all invariant factors 1).
    IntMatrix stacked(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) {
        stacked[i] = (*p.projection)[i];
        for (std::size_t j = 0; j < g.rank(); ++j) stacked[i].push_back(i == j ? g.moduli[j] : Int(0));
    }
    SmithResult snf = smith_normal_form(stacked);
    for (std::size_t t = 0; t < g.rank(); ++t)
        if (t >= snf.diag_count || snf.D[t][t] != 1)
            throw std::invalid_argument("projection is not surjective onto " + to_string(g));

    return p;
}

GroupElement project(const Presentation& p, const IntVec& x) {
    if (x.size() != p.rank)
        throw Error(ErrorKind::LengthMismatch,
                    "vector of length " + std::to_string(x.size()) + " in a rank " + std::to_string(p.rank) +
                        " presentation");
    if (p.diagonal()) return reduce(p.group, x);
    return reduce(p.group, matrix_apply(*p.projection, x));
}

std::vector<IntVec> relation_generators(const Presentation& p) {
    std::vector<IntVec> gens;
    if (p.diagonal()) {
        for (std::size_t j = 0; j < p.rank; ++j) {
            if (p.relation_moduli[j] == 0) continue;
            IntVec f(p.rank, Int(0));
            f[j] = p.relation_moduli[j];
            gens.push_back(std::move(f));
        }
    } else if (p.relation_matrix && !p.relation_matrix->empty()) {
        for (std::size_t j = 0; j < p.relation_matrix->front().size(); ++j)
            gens.push_back(matrix_column(*p.relation_matrix, j));
    }
    return gens;
}

IntVec lift(const Presentation& p, const GroupElement& x) {
    if (!p.diagonal())
        throw std::invalid_argument("the canonical residue lift needs a diagonal presentation");
    if (x.coords.size() != p.group.rank())
        throw Error(ErrorKind::GroupMismatch, "element " + to_string(x) + " does not live in " + to_string(p.group));
    return reduce(p.group, x.coords).coords;
}

IntVec L(const Presentation& p, const GroupElement& x, const GroupElement& y) {
    IntVec lx = lift(p, x);
    IntVec ly = lift(p, y);
    IntVec lsum = lift(p, add(p.group, reduce(p.group, x.coords), reduce(p.group, y.coords)));
    for (std::size_t j = 0; j < lsum.size(); ++j) lsum[j] -= lx[j] + ly[j];
    return lsum;
}

Coeff eval_C(const Presentation& p, const IntVec& u, const IntVec& v) {
    if (u.size() != p.rank || v.size() != p.rank)
        throw Error(ErrorKind::LengthMismatch, "C takes vectors of length " + std::to_string(p.rank));
    Coeff sum = Coeff::zero(p.target);
    for (std::size_t k = 0; k < p.rank; ++k) {
        if (u[k] == 0) continue;
        for (std::size_t l = 0; l < p.rank; ++l) {
            if (v[l] == 0) continue;
            sum = add(sum, scale(u[k] * v[l], p.C[k][l]));
        }
    }
    return sum;
}

PresentationFlags presentation_flags(const Presentation& p, const QuadraticForm& q, const Int& box) {
    require_matching(p, q);
    PresentationFlags flags;

    bool axiom2 = true;
    for (std::size_t i = 0; i < p.rank && axiom2; ++i) {
        GroupElement gi = basis_image(p, i);
        for (std::size_t j = i; j < p.rank; ++j) {
            if (add(p.C[i][j], p.C[j][i]) != polarization(q, gi, basis_image(p, j))) {
                axiom2 = false;
                break;
            }
        }
    }
    std::vector<IntVec> gens = relation_generators(p);
    bool axiom3 = true;
    for (const IntVec& f : gens)
        if (!eval_C(p, f, f).is_zero()) {
            axiom3 = false;
            break;
        }
    flags.pre_admissible = axiom2 && axiom3;

    bool orthogonal = true;
    for (std::size_t i = 0; i < gens.size() && orthogonal; ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && !eval_C(p, gens[i], gens[j]).is_zero()) {
                orthogonal = false;
                break;
            }
    flags.admissible = flags.pre_admissible && orthogonal;

    flags.optimal = true;
    if (p.diagonal()) {
        for (const GroupElement& x : sweep_elements(p.group, box)) {
            IntVec lx = lift(p, x);
            if (eval_C(p, lx, lx) != evaluate(q, x)) {
                flags.optimal = false;
                break;
            }
        }
    } else {
        // No canonical section here; the defect C(v,v) - q(pi v) is constant
        // on fibers once the presentation is pre-admissible, so a box of
        // representatives is as good as one representative per class.
        for (const IntVec& v : box_vectors(p.rank, box)) {
            if (eval_C(p, v, v) != evaluate(q, project(p, v))) {
                flags.optimal = false;
                break;
            }
        }
    }
    return flags;
}

PresentationReport validate_presentation(const Presentation& p, const QuadraticForm& q, const Int& box) {
    require_matching(p, q);
    PresentationReport report;

    auto& axiom2 = report.checks.add("polarization-compatibility");
    for (std::size_t i = 0; i < p.rank; ++i) {
        GroupElement gi = basis_image(p, i);
        for (std::size_t j = i; j < p.rank; ++j) {
            Coeff lhs = add(p.C[i][j], p.C[j][i]);
            Coeff rhs = polarization(q, gi, basis_image(p, j));
            if (lhs == rhs)
                axiom2.pass();
            else
                axiom2.fail("basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")", lhs, rhs);
        }
    }

    std::vector<IntVec> gens = relation_generators(p);
    auto& isotropy = report.checks.add("relation-isotropy");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Coeff val = eval_C(p, gens[i], gens[i]);
        if (val.is_zero())
            isotropy.pass();
        else
            isotropy.fail("f = " + vec_str(gens[i]), val, Coeff::zero(p.target));
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            IntVec sum = gens[i];
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += gens[j][k];
            Coeff v2 = eval_C(p, sum, sum);
            if (v2.is_zero())
                isotropy.pass();
            else
                isotropy.fail("f = " + vec_str(sum), v2, Coeff::zero(p.target));
        }
    }

    auto& orth = report.checks.add("relation-orthogonality");
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            Coeff val = eval_C(p, gens[i], gens[j]);
            if (val.is_zero()) {
                orth.pass();
            } else {
                FailureCase fc{"C(f,f') with f = " + vec_str(gens[i]) + ", f' = " + vec_str(gens[j]),
                               val.str(), Coeff::zero(p.target).str()};
                if (!report.admissibility_witness) report.admissibility_witness = fc;
                orth.fail(fc.detail, fc.lhs, fc.rhs);
            }
        }

    auto& optimality = report.checks.add("optimality");
    if (p.diagonal()) {
        for (const GroupElement& x : sweep_elements(p.group, box)) {
            IntVec lx = lift(p, x);
            Coeff lhs = eval_C(p, lx, lx);
            Coeff rhs = evaluate(q, x);
            if (lhs == rhs)
                optimality.pass();
            else
                optimality.fail("x = " + to_string(x), lhs, rhs);
        }
    } else {
        for (const IntVec& v : box_vectors(p.rank, box)) {
            Coeff lhs = eval_C(p, v, v);
            Coeff rhs = evaluate(q, project(p, v));
            if (lhs == rhs)
                optimality.pass();
            else
                optimality.fail("v = " + vec_str(v), lhs, rhs);
        }
    }

    if (p.diagonal()) {
        std::vector<GroupElement> elems = sweep_elements(p.group, box);
        GroupElement zero_el = zero(p.group);
        IntVec zero_vec(p.rank, Int(0));

        auto& section = report.checks.add("lift-section");
        for (const GroupElement& x : elems) {
            GroupElement back = project(p, lift(p, x));
            if (back == x)
                section.pass();
            else
                section.fail("x = " + to_string(x), to_string(back), to_string(x));
        }

        auto& at_zero = report.checks.add("carry-vanishes-at-zero");
        for (const GroupElement& x : elems) {
            IntVec a = L(p, zero_el, x);
            IntVec b = L(p, x, zero_el);
            if (a == zero_vec)
                at_zero.pass();
            else
                at_zero.fail("L(0, " + to_string(x) + ")", vec_str(a), vec_str(zero_vec));
            if (b == zero_vec)
                at_zero.pass();
            else
                at_zero.fail("L(" + to_string(x) + ", 0)", vec_str(b), vec_str(zero_vec));
        }

        auto& in_kernel = report.checks.add("carry-in-kernel");
        auto& symmetry = report.checks.add("carry-symmetry");
        for (const GroupElement& x : elems)
            for (const GroupElement& y : elems) {
                IntVec l = L(p, x, y);
                if (is_zero(project(p, l)))
                    in_kernel.pass();
                else
                    in_kernel.fail("x = " + to_string(x) + ", y = " + to_string(y), to_string(project(p, l)), "0");
                IntVec l2 = L(p, y, x);
                if (l == l2)
                    symmetry.pass();
                else
                    symmetry.fail("x = " + to_string(x) + ", y = " + to_string(y), vec_str(l), vec_str(l2));
            }

        auto& additivity = report.checks.add("carry-additivity");
        for (const GroupElement& x : elems)
            for (const GroupElement& y : elems) {
                GroupElement xy = add(p.group, x, y);
                IntVec lxy = L(p, x, y);
                for (const GroupElement& z : elems) {
                    IntVec lhs = L(p, xy, z);
                    IntVec mid = L(p, x, add(p.group, y, z));
                    IntVec rhs = L(p, y, z);
                    bool ok = true;
                    for (std::size_t k = 0; k < p.rank && ok; ++k)
                        ok = (lhs[k] - mid[k]) == (rhs[k] - lxy[k]);
                    if (ok)
                        additivity.pass();
                    else
                        additivity.fail("x = " + to_string(x) + ", y = " + to_string(y) + ", z = " + to_string(z),
                                        vec_str(lhs), vec_str(mid));
                }
            }

        // The set of values L ever takes is tiny (one carry bit per finite
        // coordinate), so checking C on all pairs of realized values covers
        // the full four-variable statement exactly.
        std::set<IntVec> l_values;
        for (const GroupElement& x : elems)
            for (const GroupElement& y : elems) l_values.insert(L(p, x, y));
        auto& l_orth = report.checks.add("carry-orthogonality");
        for (const IntVec& a : l_values)
            for (const IntVec& b : l_values) {
                Coeff val = eval_C(p, a, b);
                if (val.is_zero())
                    l_orth.pass();
                else
                    l_orth.fail("C(L,L') with L = " + vec_str(a) + ", L' = " + vec_str(b), val,
                                Coeff::zero(p.target));
            }
    }

    const IdentityCheck* c2 = report.checks.find("polarization-compatibility");
    const IdentityCheck* c3 = report.checks.find("relation-isotropy");
    const IdentityCheck* co = report.checks.find("relation-orthogonality");
    const IdentityCheck* cq = report.checks.find("optimality");
    report.pre_admissible = c2->passed() && c3->passed();
    report.admissible = report.pre_admissible && co->passed();
    report.optimal = cq->passed();
    return report;
}

Presentation standard_presentation(const QuadraticForm& q) {
    std::size_t r = q.group.rank();
    std::vector<std::vector<Coeff>> C(r, std::vector<Coeff>(r, Coeff::zero(q.target)));
    for (std::size_t i = 0; i < r; ++i) {
        C[i][i] = q.diag[i];
        for (std::size_t j = i + 1; j < r; ++j) C[i][j] = q.off(i, j);
    }
    return make_diagonal_presentation(q.group, q.target, std::move(C));
}

Presentation from_bilinear(const BilinearForm& s, const QuadraticForm& q) {
    if (s.group != q.group)
        throw Error(ErrorKind::GroupMismatch,
                    "witness on " + to_string(s.group) + " for a form on " + to_string(q.group));
    if (s.target != q.target)
        throw Error(ErrorKind::MixedTargets, s.target.name() + " vs " + q.target.name());

    // S(x,x) = q(x) holds everywhere iff it holds on generators and their
    // pairwise sums; both sides are determined by those values.
    std::size_t r = q.group.rank();
    for (std::size_t i = 0; i < r; ++i) {
        IntVec vi(r, Int(0));
        vi[i] = 1;
        GroupElement ei = reduce(q.group, vi);
        if (evaluate(s, ei, ei) != evaluate(q, ei))
            throw Error(ErrorKind::WitnessMismatch, "S(x,x) = " + evaluate(s, ei, ei).str() +
                                                        " but q(x) = " + evaluate(q, ei).str() +
                                                        " at x = " + to_string(ei));
        for (std::size_t j = i + 1; j < r; ++j) {
            IntVec v(r, Int(0));
            v[i] = 1;
            v[j] = 1;
            GroupElement eij = reduce(q.group, v);
            if (evaluate(s, eij, eij) != evaluate(q, eij))
                throw Error(ErrorKind::WitnessMismatch, "S(x,x) = " + evaluate(s, eij, eij).str() +
                                                            " but q(x) = " + evaluate(q, eij).str() +
                                                            " at x = " + to_string(eij));
        }
    }

    std::vector<std::vector<Coeff>> C(r, std::vector<Coeff>(r, Coeff::zero(q.target)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) C[i][j] = s.at(i, j);
    return make_diagonal_presentation(q.group, q.target, std::move(C));
}

Presentation optimize(const Presentation& p, const QuadraticForm& q) {
    require_matching(p, q);
    if (auto violation = pre_admissibility_violation(p, q))
        throw Error(ErrorKind::NotPreAdmissible, *violation);

    std::size_t r = p.rank;

    // Defect of optimality on the basis; it extends additively and is
    // 2-torsion, so it lives on F0/2F0.
    std::vector<Coeff> defect(r, Coeff::zero(p.target));
    for (std::size_t j = 0; j < r; ++j) defect[j] = sub(p.C[j][j], evaluate(q, basis_image(p, j)));

    // F2-basis of F0/2F0: echelonized images of the relation generators
    // first (pivot = lowest set bit, input order), then the unused standard
    // basis vectors.
    using F2Vec = std::vector<unsigned char>;
    std::vector<F2Vec> basis;
    std::vector<std::size_t> pivots;
    for (const IntVec& f : relation_generators(p)) {
        F2Vec v(r, 0);
        for (std::size_t k = 0; k < r; ++k) v[k] = static_cast<unsigned char>(pos_mod(f[k], 2) == 1);
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (v[pivots[b]])
                for (std::size_t k = 0; k < r; ++k) v[k] ^= basis[b][k];
        std::size_t pivot = r;
        for (std::size_t k = 0; k < r; ++k)
            if (v[k]) {
                pivot = k;
                break;
            }
        if (pivot == r) continue;
        basis.push_back(std::move(v));
        pivots.push_back(pivot);
    }
    // The leading vectors now span the image of F1; the defect vanishes on
    // them, so the correction built below automatically respects F1.
    for (std::size_t k = 0; k < r; ++k) {
        if (std::find(pivots.begin(), pivots.end(), k) != pivots.end()) continue;
        F2Vec e(r, 0);
        e[k] = 1;
        basis.push_back(std::move(e));
        pivots.push_back(k);
    }

    // Invert the basis matrix over F2 (columns = basis vectors).
    std::vector<F2Vec> aug(r, F2Vec(2 * r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug[i][j] = basis[j][i];
        aug[i][r + i] = 1;
    }
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t pivot_row = r;
        for (std::size_t row = col; row < r; ++row)
            if (aug[row][col]) {
                pivot_row = row;
                break;
            }
        if (pivot_row == r) throw std::logic_error("basis matrix not invertible over F2");
        std::swap(aug[col], aug[pivot_row]);
        for (std::size_t row = 0; row < r; ++row) {
            if (row == col || !aug[row][col]) continue;
            for (std::size_t k = 0; k < 2 * r; ++k) aug[row][k] ^= aug[col][k];
        }
    }

    // Defect at the 0/1 lift of each basis vector.
    std::vector<Coeff> basis_defect(r, Coeff::zero(p.target));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k)
            if (basis[i][k]) basis_defect[i] = add(basis_defect[i], defect[k]);

    // Correction J, diagonal in the chosen basis, expressed on the standard
    // basis: J_kl = sum_i inv[i][k] inv[i][l] defect(basis_i).
    Presentation out = p;
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
            Coeff j_kl = Coeff::zero(p.target);
            for (std::size_t i = 0; i < r; ++i)
                if (aug[i][r + k] && aug[i][r + l]) j_kl = add(j_kl, basis_defect[i]);
            out.C[k][l] = sub(p.C[k][l], j_kl);
        }
    return out;
}

Presentation make_admissible(const Presentation& p) {
    if (!p.target.divisible())
        throw Error(ErrorKind::TargetNotDivisible,
                    "cannot extend the alternating form over " + p.target.name());

    std::vector<IntVec> gens = relation_generators(p);
    std::size_t s = gens.size();
    std::size_t r = p.rank;

    // The part of pre-admissibility visible without the quadratic form:
    // C restricted to F1 must be alternating.
    for (std::size_t i = 0; i < s; ++i) {
        Coeff diag_val = eval_C(p, gens[i], gens[i]);
        if (!diag_val.is_zero())
            throw Error(ErrorKind::NotPreAdmissible,
                        "relation isotropy fails at f = " + vec_str(gens[i]) + ": C(f,f) = " + diag_val.str());
        for (std::size_t j = i + 1; j < s; ++j) {
            Coeff sym = add(eval_C(p, gens[i], gens[j]), eval_C(p, gens[j], gens[i]));
            if (!sym.is_zero())
                throw Error(ErrorKind::NotPreAdmissible, "C(f,f') + C(f',f) = " + sym.str() + " for f = " +
                                                             vec_str(gens[i]) + ", f' = " + vec_str(gens[j]));
        }
    }

    if (s <= 1) return p;  // nothing off-diagonal to repair

    // The extension problem is solved on wedge bases, which needs the
    // relation generators to be a basis of F1, not just a spanning set.
    IntMatrix R(r, IntVec(s, Int(0)));
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < r; ++i) R[i][j] = gens[j][i];
    SmithResult rank_check = smith_normal_form(R);
    std::size_t relation_rank = 0;
    for (std::size_t t = 0; t < rank_check.diag_count; ++t)
        if (rank_check.D[t][t] != 0) ++relation_rank;
    if (relation_rank != s) throw std::invalid_argument("relation generators must be linearly independent");

    std::size_t s2 = s * (s - 1) / 2;
    std::size_t r2 = r * (r - 1) / 2;

    // Minor matrix of the inclusion on wedge bases: row (i,j) against
    // column (k,l) holds the 2x2 minor of (f_i, f_j) at coordinates (k,l).
    IntMatrix W(s2, IntVec(r2, Int(0)));
    std::vector<Coeff> v(s2, Coeff::zero(p.target));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            std::size_t row = pair_index(s, i, j);
            v[row] = eval_C(p, gens[i], gens[j]);
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t l = k + 1; l < r; ++l)
                    W[row][pair_index(r, k, l)] = gens[i][k] * gens[j][l] - gens[i][l] * gens[j][k];
        }

    SmithResult snf = smith_normal_form(W);

    // Solve W a = v over Q/Z through the diagonal system D y = U v.
    std::vector<Coeff> w(s2, Coeff::zero(p.target));
    for (std::size_t t = 0; t < s2; ++t)
        for (std::size_t u = 0; u < s2; ++u)
            if (snf.U[t][u] != 0) w[t] = add(w[t], scale(snf.U[t][u], v[u]));

    std::vector<Coeff> y(r2, Coeff::zero(p.target));
    for (std::size_t t = 0; t < s2; ++t) {
        if (t < snf.diag_count && snf.D[t][t] != 0) {
            y[t] = divide_by(w[t], snf.D[t][t]);
        } else if (!w[t].is_zero()) {
            // Unreachable for independent generators: the wedge inclusion
            // then has full row rank.
            throw std::invalid_argument("inconsistent alternating extension problem");
        }
    }

    std::vector<Coeff> a(r2, Coeff::zero(p.target));
    for (std::size_t m = 0; m < r2; ++m)
        for (std::size_t t = 0; t < r2; ++t)
            if (snf.V[m][t] != 0 && !y[t].is_zero()) a[m] = add(a[m], scale(snf.V[m][t], y[t]));

    // A is alternating, so subtracting it never changes C(x,x).
    Presentation out = p;
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
            if (k == l) continue;
            Coeff a_kl = k < l ? a[pair_index(r, k, l)] : neg(a[pair_index(r, l, k)]);
            out.C[k][l] = sub(p.C[k][l], a_kl);
        }
    return out;
}

}  // namespace quadbraid
