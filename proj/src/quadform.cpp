#include "quadbraid/quadform.hpp"

namespace quadbraid {

Int diag_torsion(const Int& n) {
    if (n == 0) return 0;
    return gcd(n * n, 2 * n);
}

Int pair_torsion(const Int& a, const Int& b) { return gcd(a, b); }

std::size_t pair_index(std::size_t rank, std::size_t k, std::size_t l) {
    if (!(k < l && l < rank)) throw std::invalid_argument("pair index requires k < l < rank");
    // pairs (k, k+1..rank-1) precede (k+1, ...)
    return k * rank - k * (k + 1) / 2 + (l - k - 1);
}

static std::size_t pair_count(std::size_t rank) { return rank * (rank - 1) / 2; }

QuadraticForm form_from_params(const Group& g, const TargetGroup& target, std::vector<Coeff> diag,
                               const std::map<std::pair<std::size_t, std::size_t>, Coeff>& offdiag) {
    const std::size_t r = g.rank();
    if (diag.size() != r)
        throw Error(ErrorKind::LengthMismatch,
                    "expected " + std::to_string(r) + " diagonal values, got " + std::to_string(diag.size()));
    std::vector<Coeff> off(pair_count(r), Coeff::zero(target));
    for (const auto& [kl, v] : offdiag) {
        auto [k, l] = kl;
        off[pair_index(r, k, l)] = v;  // throws on bad indices
    }
    for (std::size_t k = 0; k < r; ++k) {
        if (diag[k].target() != target)
            throw Error(ErrorKind::MixedTargets, "diag[" + std::to_string(k) + "] is valued in " +
                                                     diag[k].target().name() + ", expected " + target.name());
        Int t = diag_torsion(g.moduli[k]);
        if (t != 0 && !is_zero(scale(t, diag[k])))
            throw Error(ErrorKind::TorsionViolation, "diag value " + diag[k].str() + " at generator " +
                                                         std::to_string(k) + " is not " + t.str() + "-torsion");
    }
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = k + 1; l < r; ++l) {
            const Coeff& v = off[pair_index(r, k, l)];
            if (v.target() != target)
                throw Error(ErrorKind::MixedTargets, "offdiag(" + std::to_string(k) + "," + std::to_string(l) +
                                                         ") is valued in " + v.target().name());
            Int t = pair_torsion(g.moduli[k], g.moduli[l]);
            if (t != 0 && !is_zero(scale(t, v)))
                throw Error(ErrorKind::TorsionViolation,
                            "offdiag value " + v.str() + " at pair (" + std::to_string(k) + "," +
                                std::to_string(l) + ") is not " + t.str() + "-torsion");
        }
    return QuadraticForm{g, target, std::move(diag), std::move(off)};
}

QuadraticForm zero_form(const Group& g, const TargetGroup& target) {
    return QuadraticForm{g, target, std::vector<Coeff>(g.rank(), Coeff::zero(target)),
                         std::vector<Coeff>(pair_count(g.rank()), Coeff::zero(target))};
}

Coeff evaluate(const QuadraticForm& q, const GroupElement& x) {
    const std::size_t r = q.group.rank();
    if (x.coords.size() != r)
        throw Error(ErrorKind::GroupMismatch, "element has " + std::to_string(x.coords.size()) +
                                                  " coordinates, form lives on " + to_string(q.group));
    Coeff acc = Coeff::zero(q.target);
    for (std::size_t k = 0; k < r; ++k) {
        if (!q.diag[k].is_zero()) acc = add(acc, scale(x.coords[k] * x.coords[k], q.diag[k]));
        for (std::size_t l = k + 1; l < r; ++l) {
            const Coeff& v = q.off(k, l);
            if (!v.is_zero()) acc = add(acc, scale(x.coords[k] * x.coords[l], v));
        }
    }
    return acc;
}

Coeff polarization(const QuadraticForm& q, const GroupElement& x, const GroupElement& y) {
    return sub(sub(evaluate(q, add(q.group, x, y)), evaluate(q, x)), evaluate(q, y));
}

bool has_zero_polarization(const QuadraticForm& q) {
    // b(e_k, e_l) vanishing on generator pairs is exact by biadditivity:
    // b(e_k, e_k) = 2 q(e_k), b(e_k, e_l) = offdiag.
    for (const Coeff& v : q.diag)
        if (!is_zero(scale(2, v))) return false;
    for (const Coeff& v : q.offdiag)
        if (!is_zero(v)) return false;
    return true;
}

CheckReport validate_form(const QuadraticForm& q, const Int& box) {
    const Group& g = q.group;
    std::vector<GroupElement> domain = g.finite() ? enumerate_elements(g) : box_elements(g, box);

    CheckReport report;

    auto& at_zero = report.add("vanishes-at-zero");
    at_zero.record(is_zero(evaluate(q, zero(g))), "x=0", evaluate(q, zero(g)), Coeff::zero(q.target));

    auto& even = report.add("evenness");
    for (const auto& x : domain) {
        Coeff lhs = evaluate(q, x), rhs = evaluate(q, neg(g, x));
        if (eq(lhs, rhs)) even.pass();
        else even.fail("x=" + to_string(x), lhs, rhs);
    }

    auto& homog = report.add("homogeneity");
    Int nmax = 5;
    if (g.finite()) {
        nmax = 1;
        for (const Int& m : g.moduli) nmax = lcm(nmax, m);
    }
    for (const auto& x : domain)
        for (Int n = 0; n <= nmax; ++n) {
            Coeff lhs = evaluate(q, scalar_mul(g, n, x));
            Coeff rhs = scale(n * n, evaluate(q, x));
            if (eq(lhs, rhs)) homog.pass();
            else homog.fail("x=" + to_string(x) + ", n=" + n.str(), lhs, rhs);
        }

    // Cache values so the O(domain³) bilinearity sweep only does table
    // arithmetic. For finite groups the cache is indexed densely; the box
    // domain falls back to direct evaluation (sums can leave the box).
    auto& sym = report.add("polarization-symmetry");
    auto& bil = report.add("polarization-bilinearity");
    if (g.finite()) {
        const std::size_t n = domain.size();
        std::vector<Coeff> val(n);
        std::vector<std::vector<std::size_t>> addidx(n, std::vector<std::size_t>(n));
        for (std::size_t i = 0; i < n; ++i) val[i] = evaluate(q, domain[i]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) addidx[i][j] = element_index(g, add(g, domain[i], domain[j]));
        auto pol = [&](std::size_t i, std::size_t j) { return sub(sub(val[addidx[i][j]], val[i]), val[j]); };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Coeff lhs = pol(i, j), rhs = pol(j, i);
                if (eq(lhs, rhs)) sym.pass();
                else sym.fail("x=" + to_string(domain[i]) + ", y=" + to_string(domain[j]), lhs, rhs);
                for (std::size_t k = 0; k < n; ++k) {
                    Coeff l2 = pol(addidx[i][j], k);
                    Coeff r2 = add(pol(i, k), pol(j, k));
                    if (eq(l2, r2)) bil.pass();
                    else
                        bil.fail("x=" + to_string(domain[i]) + ", y=" + to_string(domain[j]) +
                                     ", z=" + to_string(domain[k]),
                                 l2, r2);
                }
            }
    } else {
        for (const auto& x : domain)
            for (const auto& y : domain) {
                Coeff lhs = polarization(q, x, y), rhs = polarization(q, y, x);
                if (eq(lhs, rhs)) sym.pass();
                else sym.fail("x=" + to_string(x) + ", y=" + to_string(y), lhs, rhs);
                for (const auto& z : domain) {
                    Coeff l2 = polarization(q, add(g, x, y), z);
                    Coeff r2 = add(polarization(q, x, z), polarization(q, y, z));
                    if (eq(l2, r2)) bil.pass();
                    else bil.fail("x=" + to_string(x) + ", y=" + to_string(y) + ", z=" + to_string(z), l2, r2);
                }
            }
    }
    return report;
}

FormParams form_params(const QuadraticForm& q) {
    if (!q.group.finite()) throw Error(ErrorKind::InfiniteGroup, "integer parameters need a finite group");
    if (q.target.kind != TargetKind::QmodZ)
        throw Error(ErrorKind::TargetNotQmodZ, "integer parameters are defined over Q/Z, not " + q.target.name());
    const std::size_t r = q.group.rank();
    FormParams p;
    for (std::size_t k = 0; k < r; ++k) {
        Int t = diag_torsion(q.group.moduli[k]);
        p.diag.push_back(q.diag[k].num() * (t / q.diag[k].den()));
    }
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = k + 1; l < r; ++l) {
            Int t = pair_torsion(q.group.moduli[k], q.group.moduli[l]);
            const Coeff& v = q.off(k, l);
            p.offdiag.push_back(v.num() * (t / v.den()));
        }
    return p;
}

QuadraticForm form_from_int_params(const Group& g, const FormParams& params) {
    const std::size_t r = g.rank();
    if (params.diag.size() != r || params.offdiag.size() != pair_count(r))
        throw Error(ErrorKind::LengthMismatch, "parameter vector sizes do not match the group rank");
    TargetGroup qz = TargetGroup::qmodz();
    std::vector<Coeff> diag;
    for (std::size_t k = 0; k < r; ++k) diag.push_back(Coeff::make(qz, params.diag[k], diag_torsion(g.moduli[k])));
    std::map<std::pair<std::size_t, std::size_t>, Coeff> off;
    std::size_t i = 0;
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = k + 1; l < r; ++l, ++i)
            off.emplace(std::make_pair(k, l),
                        Coeff::make(qz, params.offdiag[i], pair_torsion(g.moduli[k], g.moduli[l])));
    return form_from_params(g, qz, std::move(diag), off);
}

std::vector<QuadraticForm> enumerate_forms(const Group& g, const TargetGroup& target) {
    if (!g.finite()) throw Error(ErrorKind::InfiniteGroup, "cannot enumerate forms on " + to_string(g));
    if (target.kind != TargetKind::QmodZ)
        throw Error(ErrorKind::TargetNotQmodZ, "form enumeration is parametrized over Q/Z");
    const std::size_t r = g.rank();
    // parameter ranges: diagonal entries first, then pairs in lex order
    IntVec range;
    for (std::size_t k = 0; k < r; ++k) range.push_back(diag_torsion(g.moduli[k]));
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = k + 1; l < r; ++l) range.push_back(pair_torsion(g.moduli[k], g.moduli[l]));

    std::vector<QuadraticForm> out;
    IntVec cur(range.size(), 0);
    while (true) {
        FormParams p;
        p.diag.assign(cur.begin(), cur.begin() + r);
        p.offdiag.assign(cur.begin() + r, cur.end());
        out.push_back(form_from_int_params(g, p));
        std::size_t j = range.size();
        bool done = true;
        while (j-- > 0) {
            if (++cur[j] < range[j]) { done = false; break; }
            cur[j] = 0;
        }
        if (done) break;
    }
    return out;
}

Int count_forms(const Group& g) {
    if (!g.finite()) throw Error(ErrorKind::InfiniteGroup, "cannot count forms on " + to_string(g));
    Int total = 1;
    for (const Int& n : g.moduli) total *= diag_torsion(n);
    for (std::size_t k = 0; k < g.rank(); ++k)
        for (std::size_t l = k + 1; l < g.rank(); ++l) total *= pair_torsion(g.moduli[k], g.moduli[l]);
    return total;
}

QuadraticForm add_forms(const QuadraticForm& a, const QuadraticForm& b) {
    if (a.group != b.group) throw Error(ErrorKind::GroupMismatch, "cannot add forms on different groups");
    if (a.target != b.target) throw Error(ErrorKind::MixedTargets, a.target.name() + " vs " + b.target.name());
    QuadraticForm out = a;
    for (std::size_t k = 0; k < a.diag.size(); ++k) out.diag[k] = add(a.diag[k], b.diag[k]);
    for (std::size_t i = 0; i < a.offdiag.size(); ++i) out.offdiag[i] = add(a.offdiag[i], b.offdiag[i]);
    return out;
}

BilinearForm bilinear_from_entries(const Group& g, const TargetGroup& target, std::vector<Coeff> entries) {
    const std::size_t r = g.rank();
    if (entries.size() != r * r)
        throw Error(ErrorKind::LengthMismatch, "expected a " + std::to_string(r) + "x" + std::to_string(r) +
                                                   " entry matrix");
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
            const Coeff& v = entries[k * r + l];
            if (v.target() != target) throw Error(ErrorKind::MixedTargets, "entry target " + v.target().name());
            for (const Int& m : {g.moduli[k], g.moduli[l]})
                if (m != 0 && !is_zero(scale(m, v)))
                    throw Error(ErrorKind::TorsionViolation,
                                "bilinear entry " + v.str() + " at (" + std::to_string(k) + "," +
                                    std::to_string(l) + ") is not " + m.str() + "-torsion");
        }
    return BilinearForm{g, target, std::move(entries)};
}

Coeff evaluate(const BilinearForm& s, const GroupElement& x, const GroupElement& y) {
    const std::size_t r = s.group.rank();
    if (x.coords.size() != r || y.coords.size() != r)
        throw Error(ErrorKind::GroupMismatch, "element size does not match the bilinear form's group");
    Coeff acc = Coeff::zero(s.target);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
            const Coeff& v = s.at(k, l);
            if (!v.is_zero()) acc = add(acc, scale(x.coords[k] * y.coords[l], v));
        }
    return acc;
}

WitnessSearch bilinear_witness_search(const QuadraticForm& q, const Int& ceiling) {
    if (!q.group.finite()) throw Error(ErrorKind::InfiniteGroup, "witness search needs a finite group");
    if (q.target.kind != TargetKind::QmodZ)
        throw Error(ErrorKind::TargetNotQmodZ, "witness search runs over Q/Z, not " + q.target.name());
    const Group& g = q.group;
    const std::size_t r = g.rank();
    auto elems = enumerate_elements(g);

    auto matches = [&](const BilinearForm& s) {
        for (const auto& x : elems)
            if (!eq(evaluate(s, x, x), evaluate(q, x))) return false;
        return true;
    };

    WitnessSearch result;

    if (has_zero_polarization(q)) {
        // Zero polarization makes q linear and 2-torsion, so the diagonal
        // matrix listing q(e_k) over an F2-basis of G/2G realizes it; odd
        // factors force q(e_k) = 0 there, so the same diagonal works verbatim.
        std::vector<Coeff> entries(r * r, Coeff::zero(q.target));
        for (std::size_t k = 0; k < r; ++k) entries[k * r + k] = q.diag[k];
        BilinearForm s = bilinear_from_entries(g, q.target, std::move(entries));
        result.symmetric_fast_path = true;
        if (matches(s)) {
            result.witness = std::move(s);
            return result;
        }
        // cannot happen for a well-formed zero-polarization form; fall through
        // to the search so the function still answers correctly
    }

    IntVec grid;
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
            Int t = pair_torsion(g.moduli[k], g.moduli[l]);
            grid.push_back(t == 0 ? Int(1) : t);
        }
    Int total = 1;
    for (const Int& t : grid) total *= t;
    result.grid_size = total;
    if (total > ceiling)
        throw Error(ErrorKind::SearchSpaceTooLarge,
                    "witness grid has " + total.str() + " candidates, ceiling " + ceiling.str());

    IntVec cur(grid.size(), 0);
    while (true) {
        std::vector<Coeff> entries;
        entries.reserve(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) entries.push_back(Coeff::make(q.target, cur[i], grid[i]));
        BilinearForm s{g, q.target, std::move(entries)};
        if (matches(s)) {
            result.witness = std::move(s);
            return result;
        }
        std::size_t j = grid.size();
        bool done = true;
        while (j-- > 0) {
            if (++cur[j] < grid[j]) { done = false; break; }
            cur[j] = 0;
        }
        if (done) break;
    }
    result.exhausted = true;
    return result;
}

std::optional<BilinearForm> bilinear_witness(const QuadraticForm& q, const Int& ceiling) {
    return bilinear_witness_search(q, ceiling).witness;
}

}  // namespace quadbraid
