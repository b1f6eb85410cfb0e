#include "quadbraid/cocycle.hpp"

#include <stdexcept>
#include <utility>

namespace quadbraid {

namespace {

void require_element(const Group& g, const GroupElement& x) {
    if (x.coords.size() != g.rank())
        throw Error(ErrorKind::GroupMismatch, "element " + to_string(x) + " does not live in " + to_string(g));
}

void require_compatible(const Cocycle& a, const Cocycle& b) {
    if (a.group != b.group)
        throw Error(ErrorKind::GroupMismatch, to_string(a.group) + " vs " + to_string(b.group));
    if (a.target != b.target) throw Error(ErrorKind::MixedTargets, a.target.name() + " vs " + b.target.name());
}

const Coeff& sigma_entry(const QuadraticForm& q, std::size_t i, std::size_t j) {
    // callers guarantee i <= j
    return i == j ? q.diag[i] : q.off(i, j);
}

}  // namespace

Coeff Cocycle::h(const GroupElement& x, const GroupElement& y, const GroupElement& z) const {
    require_element(group, x);
    require_element(group, y);
    require_element(group, z);
    switch (backend) {
        case CocycleBackend::PresentationBacked: {
            IntVec carry = L(*pres, y, z);
            return neg(eval_C(*pres, lift(*pres, x), carry));
        }
        case CocycleBackend::QuinnClosedForm: {
            Coeff out = Coeff::zero(target);
            for (std::size_t j = 0; j < group.rank(); ++j) {
                const Int& n = group.moduli[j];
                if (n == 0 || x.coords[j] == 0) continue;
                if (y.coords[j] + z.coords[j] >= n) out = add(out, scale(x.coords[j] * n, sigma[j][j]));
            }
            return out;
        }
        case CocycleBackend::ExpClosedForm: {
            Coeff out = Coeff::zero(target);
            for (std::size_t k = 0; k < group.rank(); ++k) {
                const Int& n = group.moduli[k];
                Int wrap = y.coords[k] + z.coords[k] - pos_mod(y.coords[k] + z.coords[k], n);
                if (wrap == 0 || exp_params.diag[k] == 0 || x.coords[k] == 0) continue;
                out = add(out, Coeff::make(target, exp_params.diag[k] * x.coords[k] * wrap, diag_torsion(n)));
            }
            return out;
        }
        case CocycleBackend::Table: {
            std::size_t n = to_size(group.order());
            std::size_t idx = (element_index(group, x) * n + element_index(group, y)) * n + element_index(group, z);
            return h_table[idx];
        }
    }
    throw std::logic_error("unhandled backend");
}

Coeff Cocycle::c(const GroupElement& x, const GroupElement& y) const {
    require_element(group, x);
    require_element(group, y);
    switch (backend) {
        case CocycleBackend::PresentationBacked:
            return eval_C(*pres, lift(*pres, x), lift(*pres, y));
        case CocycleBackend::QuinnClosedForm: {
            Coeff out = Coeff::zero(target);
            for (std::size_t i = 0; i < group.rank(); ++i) {
                if (x.coords[i] == 0) continue;
                for (std::size_t j = i; j < group.rank(); ++j) {
                    if (y.coords[j] == 0) continue;
                    out = add(out, scale(x.coords[i] * y.coords[j], sigma[i][j]));
                }
            }
            return out;
        }
        case CocycleBackend::ExpClosedForm: {
            Coeff out = Coeff::zero(target);
            for (std::size_t k = 0; k < group.rank(); ++k) {
                if (exp_params.diag[k] == 0 || x.coords[k] == 0 || y.coords[k] == 0) continue;
                out = add(out,
                          Coeff::make(target, exp_params.diag[k] * x.coords[k] * y.coords[k],
                                      diag_torsion(group.moduli[k])));
            }
            for (std::size_t k = 0; k < group.rank(); ++k)
                for (std::size_t l = k + 1; l < group.rank(); ++l) {
                    const Int& par = exp_params.offdiag[pair_index(group.rank(), k, l)];
                    if (par == 0 || x.coords[k] == 0 || y.coords[l] == 0) continue;
                    out = add(out, Coeff::make(target, par * x.coords[k] * y.coords[l],
                                               pair_torsion(group.moduli[k], group.moduli[l])));
                }
            return out;
        }
        case CocycleBackend::Table: {
            std::size_t n = to_size(group.order());
            return c_table[element_index(group, x) * n + element_index(group, y)];
        }
    }
    throw std::logic_error("unhandled backend");
}

Coeff KMap::value(const GroupElement& x, const GroupElement& y) const {
    std::size_t n = to_size(group.order());
    return table[element_index(group, x) * n + element_index(group, y)];
}

KMap kmap_from_table(const Group& g, const TargetGroup& target, std::vector<Coeff> table) {
    std::size_t n = to_size(g.order());
    if (table.size() != n * n)
        throw Error(ErrorKind::LengthMismatch,
                    "table has " + std::to_string(table.size()) + " entries, expected " + std::to_string(n * n));
    for (const Coeff& v : table)
        if (v.target() != target)
            throw Error(ErrorKind::MixedTargets, "table entry over " + v.target().name());
    for (std::size_t i = 0; i < n; ++i) {
        if (!table[i * n].is_zero())
            throw Error(ErrorKind::NotNormalized, "k(x,0) = " + table[i * n].str() + " at element index " +
                                                      std::to_string(i));
        if (!table[i].is_zero())
            throw Error(ErrorKind::NotNormalized, "k(0,y) = " + table[i].str() + " at element index " +
                                                      std::to_string(i));
    }
    return KMap{g, target, std::move(table)};
}

Cocycle cocycle_from_presentation(const Presentation& p, const QuadraticForm& q) {
    if (q.group != p.group)
        throw Error(ErrorKind::GroupMismatch,
                    "form on " + to_string(q.group) + " against a presentation of " + to_string(p.group));
    if (q.target != p.target) throw Error(ErrorKind::MixedTargets, q.target.name() + " vs " + p.target.name());
    if (!p.diagonal())
        throw std::invalid_argument("the cocycle construction needs the canonical lift, which only diagonal "
                                    "presentations carry");
    PresentationFlags flags = presentation_flags(p, q);
    if (!flags.admissible)
        throw Error(ErrorKind::PresentationNotAdmissible,
                    flags.pre_admissible ? "C does not vanish on all relation pairs"
                                         : "presentation is not even pre-admissible for this form");
    if (!flags.optimal)
        throw Error(ErrorKind::PresentationNotOptimal, "C(x,x) deviates from the form somewhere");

    Cocycle w;
    w.group = p.group;
    w.target = p.target;
    w.backend = CocycleBackend::PresentationBacked;
    w.pres = p;
    return w;
}

Cocycle quinn_cocycle(const QuadraticForm& q) {
    std::size_t r = q.group.rank();
    Cocycle w;
    w.group = q.group;
    w.target = q.target;
    w.backend = CocycleBackend::QuinnClosedForm;
    w.sigma.assign(r, std::vector<Coeff>(r, Coeff::zero(q.target)));
    for (std::size_t i = 0; i < r; ++i) {
        w.sigma[i][i] = q.diag[i];
        for (std::size_t j = i + 1; j < r; ++j) w.sigma[i][j] = q.off(i, j);
    }
    return w;
}

Coeff quinn_floor_h(const QuadraticForm& q, const IntVec& x, const IntVec& y, const IntVec& z) {
    std::size_t r = q.group.rank();
    if (x.size() != r || y.size() != r || z.size() != r)
        throw Error(ErrorKind::LengthMismatch, "representatives must have one entry per generator");
    Coeff out = Coeff::zero(q.target);
    for (std::size_t j = 0; j < r; ++j) {
        const Int& n = q.group.moduli[j];
        if (n == 0) continue;
        Int carry = floor_div(y[j] + z[j], n) - floor_div(y[j], n) - floor_div(z[j], n);
        if (carry == 0) continue;
        Int cn = carry * n;
        for (std::size_t i = 0; i <= j; ++i)
            if (x[i] != 0) out = add(out, scale(x[i] * cn, sigma_entry(q, i, j)));
    }
    return out;
}

Coeff ks_floor_h(const QuadraticForm& q, const IntVec& x, const IntVec& y, const IntVec& z) {
    std::size_t r = q.group.rank();
    if (x.size() != r || y.size() != r || z.size() != r)
        throw Error(ErrorKind::LengthMismatch, "representatives must have one entry per generator");
    Coeff out = Coeff::zero(q.target);
    for (std::size_t i = 0; i < r; ++i) {
        const Int& n = q.group.moduli[i];
        if (n == 0 || x[i] == 0) continue;
        Int f = floor_div(y[i] + z[i], n);
        if (f != 0) out = add(out, scale(n * x[i] * f, q.diag[i]));
    }
    return out;
}

Cocycle exp_cocycle(const QuadraticForm& q) {
    if (!q.group.finite()) throw Error(ErrorKind::InfiniteGroup, "exponential format needs a finite group");
    if (q.target.kind != TargetKind::QmodZ)
        throw Error(ErrorKind::TargetNotQmodZ, "exponential format reads Q/Z exponents, not " + q.target.name());
    Cocycle w;
    w.group = q.group;
    w.target = q.target;
    w.backend = CocycleBackend::ExpClosedForm;
    w.exp_params = form_params(q);
    return w;
}

Cocycle coboundary(const KMap& k) {
    std::vector<GroupElement> elems = enumerate_elements(k.group);
    std::size_t n = elems.size();
    std::vector<std::size_t> addi(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            addi[i * n + j] = element_index(k.group, add(k.group, elems[i], elems[j]));

    Cocycle w;
    w.group = k.group;
    w.target = k.target;
    w.backend = CocycleBackend::Table;
    w.c_table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w.c_table.push_back(sub(k.table[j * n + i], k.table[i * n + j]));
    w.h_table.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t ij = addi[i * n + j];
            for (std::size_t l = 0; l < n; ++l) {
                Coeff val = sub(add(k.table[j * n + l], k.table[i * n + addi[j * n + l]]),
                                add(k.table[ij * n + l], k.table[i * n + j]));
                w.h_table.push_back(std::move(val));
            }
        }
    return w;
}

Cocycle tabulate(const Cocycle& w) {
    if (w.backend == CocycleBackend::Table) return w;
    if (!w.group.finite())
        throw Error(ErrorKind::InfiniteGroup, "cannot materialize tables over " + to_string(w.group));
    std::vector<GroupElement> elems = enumerate_elements(w.group);
    std::size_t n = elems.size();
    Cocycle t;
    t.group = w.group;
    t.target = w.target;
    t.backend = CocycleBackend::Table;
    t.c_table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.c_table.push_back(w.c(elems[i], elems[j]));
    t.h_table.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) t.h_table.push_back(w.h(elems[i], elems[j], elems[l]));
    return t;
}

Cocycle add(const Cocycle& a, const Cocycle& b) {
    require_compatible(a, b);
    Cocycle ta = tabulate(a);
    Cocycle tb = tabulate(b);
    for (std::size_t i = 0; i < ta.h_table.size(); ++i) ta.h_table[i] = add(ta.h_table[i], tb.h_table[i]);
    for (std::size_t i = 0; i < ta.c_table.size(); ++i) ta.c_table[i] = add(ta.c_table[i], tb.c_table[i]);
    return ta;
}

Cocycle sub(const Cocycle& a, const Cocycle& b) {
    require_compatible(a, b);
    Cocycle ta = tabulate(a);
    Cocycle tb = tabulate(b);
    for (std::size_t i = 0; i < ta.h_table.size(); ++i) ta.h_table[i] = sub(ta.h_table[i], tb.h_table[i]);
    for (std::size_t i = 0; i < ta.c_table.size(); ++i) ta.c_table[i] = sub(ta.c_table[i], tb.c_table[i]);
    return ta;
}

bool pointwise_equal(const Cocycle& a, const Cocycle& b, const Int& box) {
    require_compatible(a, b);
    if (a.group.finite()) {
        Cocycle ta = tabulate(a);
        Cocycle tb = tabulate(b);
        return ta.h_table == tb.h_table && ta.c_table == tb.c_table;
    }
    std::vector<GroupElement> elems = box_elements(a.group, box);
    for (const GroupElement& x : elems)
        for (const GroupElement& y : elems) {
            if (a.c(x, y) != b.c(x, y)) return false;
            for (const GroupElement& z : elems)
                if (a.h(x, y, z) != b.h(x, y, z)) return false;
        }
    return true;
}

namespace {

/// Residue view of a tabulated cocycle: every value becomes an int64 residue
/// mod `modulus` (Q/Z: common denominator; Z/n: n), or a plain integer when
/// modulus == 0 (target Z). Keeps the verification sweeps integer-only.
struct ResidueTables {
    std::size_t n = 0;
    long long modulus = 0;
    std::vector<long long> h, c;
    std::vector<std::size_t> addi;
    std::vector<std::string> names;

    std::size_t hidx(std::size_t x, std::size_t y, std::size_t z) const { return (x * n + y) * n + z; }

    bool is_zero_val(long long v) const { return modulus == 0 ? v == 0 : v % modulus == 0; }
    bool equal(long long a, long long b) const {
        if (modulus == 0) return a == b;
        return (a - b) % modulus == 0;
    }

    std::string show(long long v, const TargetGroup& target) const {
        if (modulus == 0) return Coeff::make(target, v).str();
        if (target.kind == TargetKind::QmodZ) return Coeff::make(target, pos_mod(Int(v), Int(modulus)), modulus).str();
        return Coeff::make(target, pos_mod(Int(v), Int(modulus))).str();
    }
};

ResidueTables build_residues(const Cocycle& w) {
    Cocycle t = tabulate(w);
    ResidueTables rt;
    rt.n = to_size(w.group.order());

    Int common = 1;
    switch (w.target.kind) {
        case TargetKind::QmodZ:
            for (const Coeff& v : t.h_table) common = lcm(common, v.den());
            for (const Coeff& v : t.c_table) common = lcm(common, v.den());
            break;
        case TargetKind::ZmodN:
            common = w.target.modulus;
            break;
        case TargetKind::Integers:
            common = 0;
            break;
    }
    rt.modulus = common == 0 ? 0 : to_int64(common);

    auto encode = [&](const Coeff& v) -> long long {
        if (w.target.kind == TargetKind::QmodZ) return to_int64(v.num() * (common / v.den()));
        return to_int64(v.num());
    };
    rt.h.reserve(t.h_table.size());
    for (const Coeff& v : t.h_table) rt.h.push_back(encode(v));
    rt.c.reserve(t.c_table.size());
    for (const Coeff& v : t.c_table) rt.c.push_back(encode(v));

    std::vector<GroupElement> elems = enumerate_elements(w.group);
    rt.addi.resize(rt.n * rt.n);
    rt.names.reserve(rt.n);
    for (std::size_t i = 0; i < rt.n; ++i) rt.names.push_back(to_string(elems[i]));
    for (std::size_t i = 0; i < rt.n; ++i)
        for (std::size_t j = 0; j < rt.n; ++j)
            rt.addi[i * rt.n + j] = element_index(w.group, add(w.group, elems[i], elems[j]));
    return rt;
}

void verify_finite(const Cocycle& w, CheckReport& report) {
    ResidueTables rt = build_residues(w);
    const std::size_t n = rt.n;
    const TargetGroup& target = w.target;

    auto& pent = report.add("pentagon");
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t x = 0; x < n; ++x) {
            std::size_t ux = rt.addi[u * n + x];
            for (std::size_t y = 0; y < n; ++y) {
                std::size_t xy = rt.addi[x * n + y];
                for (std::size_t z = 0; z < n; ++z) {
                    std::size_t yz = rt.addi[y * n + z];
                    long long lhs = rt.h[rt.hidx(x, y, z)] + rt.h[rt.hidx(u, xy, z)] + rt.h[rt.hidx(u, x, y)];
                    long long rhs = rt.h[rt.hidx(u, x, yz)] + rt.h[rt.hidx(ux, y, z)];
                    if (rt.equal(lhs, rhs))
                        pent.pass();
                    else
                        pent.fail("u=" + rt.names[u] + " x=" + rt.names[x] + " y=" + rt.names[y] +
                                      " z=" + rt.names[z],
                                  rt.show(lhs, target), rt.show(rhs, target));
                }
            }
        }

    auto& hexf = report.add("hexagon-forward");
    auto& hexr = report.add("hexagon-reverse");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t xy = rt.addi[x * n + y];
            for (std::size_t z = 0; z < n; ++z) {
                std::size_t yz = rt.addi[y * n + z];
                long long lhs = rt.h[rt.hidx(y, z, x)] + rt.c[x * n + yz] + rt.h[rt.hidx(x, y, z)];
                long long rhs = rt.c[x * n + z] + rt.h[rt.hidx(y, x, z)] + rt.c[x * n + y];
                if (rt.equal(lhs, rhs))
                    hexf.pass();
                else
                    hexf.fail("x=" + rt.names[x] + " y=" + rt.names[y] + " z=" + rt.names[z],
                              rt.show(lhs, target), rt.show(rhs, target));

                long long lhs2 = -rt.h[rt.hidx(z, x, y)] + rt.c[xy * n + z] - rt.h[rt.hidx(x, y, z)];
                long long rhs2 = rt.c[x * n + z] - rt.h[rt.hidx(x, z, y)] + rt.c[y * n + z];
                if (rt.equal(lhs2, rhs2))
                    hexr.pass();
                else
                    hexr.fail("x=" + rt.names[x] + " y=" + rt.names[y] + " z=" + rt.names[z],
                              rt.show(lhs2, target), rt.show(rhs2, target));
            }
        }

    auto& norm = report.add("normalization");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z) {
            struct Probe {
                std::size_t a, b, c;
                const char* what;
            } probes[3] = {{x, 0, z, "h(x,0,z)"}, {0, x, z, "h(0,y,z)"}, {x, z, 0, "h(x,y,0)"}};
            for (const auto& pr : probes) {
                long long v = rt.h[rt.hidx(pr.a, pr.b, pr.c)];
                if (rt.is_zero_val(v))
                    norm.pass();
                else
                    norm.fail(std::string(pr.what) + " with x=" + rt.names[x] + " z=" + rt.names[z],
                              rt.show(v, target), rt.show(0, target));
            }
        }
    for (std::size_t x = 0; x < n; ++x) {
        long long a = rt.c[x * n + 0];
        long long b = rt.c[0 * n + x];
        if (rt.is_zero_val(a))
            norm.pass();
        else
            norm.fail("c(x,0) with x=" + rt.names[x], rt.show(a, target), rt.show(0, target));
        if (rt.is_zero_val(b))
            norm.pass();
        else
            norm.fail("c(0,y) with y=" + rt.names[x], rt.show(b, target), rt.show(0, target));
    }
}

void verify_boxed(const Cocycle& w, const Int& box, CheckReport& report) {
    std::vector<GroupElement> elems = box_elements(w.group, box);
    const Group& g = w.group;
    GroupElement zero_el = zero(g);

    auto& pent = report.add("pentagon");
    for (const GroupElement& u : elems)
        for (const GroupElement& x : elems) {
            GroupElement ux = add(g, u, x);
            for (const GroupElement& y : elems) {
                GroupElement xy = add(g, x, y);
                for (const GroupElement& z : elems) {
                    GroupElement yz = add(g, y, z);
                    Coeff lhs = add(add(w.h(x, y, z), w.h(u, xy, z)), w.h(u, x, y));
                    Coeff rhs = add(w.h(u, x, yz), w.h(ux, y, z));
                    if (lhs == rhs)
                        pent.pass();
                    else
                        pent.fail("u=" + to_string(u) + " x=" + to_string(x) + " y=" + to_string(y) +
                                      " z=" + to_string(z),
                                  lhs, rhs);
                }
            }
        }

    auto& hexf = report.add("hexagon-forward");
    auto& hexr = report.add("hexagon-reverse");
    for (const GroupElement& x : elems)
        for (const GroupElement& y : elems) {
            GroupElement xy = add(g, x, y);
            for (const GroupElement& z : elems) {
                GroupElement yz = add(g, y, z);
                Coeff lhs = add(add(w.h(y, z, x), w.c(x, yz)), w.h(x, y, z));
                Coeff rhs = add(add(w.c(x, z), w.h(y, x, z)), w.c(x, y));
                if (lhs == rhs)
                    hexf.pass();
                else
                    hexf.fail("x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z), lhs, rhs);

                Coeff lhs2 = sub(sub(w.c(xy, z), w.h(z, x, y)), w.h(x, y, z));
                Coeff rhs2 = add(sub(w.c(x, z), w.h(x, z, y)), w.c(y, z));
                if (lhs2 == rhs2)
                    hexr.pass();
                else
                    hexr.fail("x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z), lhs2, rhs2);
            }
        }

    auto& norm = report.add("normalization");
    Coeff zero_val = Coeff::zero(w.target);
    for (const GroupElement& x : elems)
        for (const GroupElement& z : elems) {
            const char* labels[3] = {"h(x,0,z)", "h(0,y,z)", "h(x,y,0)"};
            Coeff vals[3] = {w.h(x, zero_el, z), w.h(zero_el, x, z), w.h(x, z, zero_el)};
            for (int i = 0; i < 3; ++i) {
                if (vals[i].is_zero())
                    norm.pass();
                else
                    norm.fail(std::string(labels[i]) + " with x=" + to_string(x) + " z=" + to_string(z), vals[i],
                              zero_val);
            }
        }
    for (const GroupElement& x : elems) {
        Coeff a = w.c(x, zero_el);
        Coeff b = w.c(zero_el, x);
        if (a.is_zero())
            norm.pass();
        else
            norm.fail("c(x,0) with x=" + to_string(x), a, zero_val);
        if (b.is_zero())
            norm.pass();
        else
            norm.fail("c(0,y) with y=" + to_string(x), b, zero_val);
    }
}

}  // namespace

CheckReport verify_cocycle(const Cocycle& w, const Int& box) {
    CheckReport report;
    if (w.group.finite())
        verify_finite(w, report);
    else
        verify_boxed(w, box, report);
    return report;
}

QuadraticForm trace(const Cocycle& w) {
    if (!w.group.finite()) throw Error(ErrorKind::InfiniteGroup, "trace reads a finite group exhaustively");
    std::size_t r = w.group.rank();

    std::vector<GroupElement> gens;
    for (std::size_t k = 0; k < r; ++k) {
        IntVec v(r, Int(0));
        v[k] = 1;
        gens.push_back(reduce(w.group, v));
    }
    std::vector<Coeff> diag;
    std::map<std::pair<std::size_t, std::size_t>, Coeff> off;
    for (std::size_t k = 0; k < r; ++k) {
        diag.push_back(w.c(gens[k], gens[k]));
        for (std::size_t l = k + 1; l < r; ++l) off[{k, l}] = add(w.c(gens[k], gens[l]), w.c(gens[l], gens[k]));
    }

    QuadraticForm q;
    try {
        q = form_from_params(w.group, w.target, std::move(diag), off);
    } catch (const Error& e) {
        throw Error(ErrorKind::TraceNotQuadratic,
                    std::string("generator values of c(x,x) violate the torsion bounds: ") + e.what());
    }
    for (const GroupElement& x : enumerate_elements(w.group))
        if (evaluate(q, x) != w.c(x, x))
            throw Error(ErrorKind::TraceNotQuadratic, "c(x,x) = " + w.c(x, x).str() + " at x = " + to_string(x) +
                                                          " but the generator form gives " + evaluate(q, x).str());
    if (!validate_form(q).passed())
        throw Error(ErrorKind::TraceNotQuadratic, "trace fails the quadratic form identities");
    return q;
}

bool cohomologous(const Cocycle& w1, const Cocycle& w2) {
    require_compatible(w1, w2);
    return trace(w1) == trace(w2);
}

std::optional<KMap> coboundary_witness(const Cocycle& w1, const Cocycle& w2, const Int& den_bound,
                                       const Int& ceiling) {
    require_compatible(w1, w2);
    if (w1.target.kind != TargetKind::QmodZ)
        throw Error(ErrorKind::TargetNotQmodZ, "witness search runs over Q/Z tables");
    if (!w1.group.finite()) throw Error(ErrorKind::InfiniteGroup, "witness search needs a finite group");
    if (den_bound < 1) throw std::invalid_argument("den_bound must be >= 1");
    Int order = w1.group.order();
    if (order > 8)
        throw Error(ErrorKind::SearchSpaceTooLarge,
                    "group order " + order.str() + " exceeds the witness-search guard of 8");
    std::size_t n = to_size(order);
    std::size_t slots = (n - 1) * (n - 1);
    Int combos = 1;
    for (std::size_t i = 0; i < slots; ++i) {
        combos *= den_bound;
        if (combos > ceiling)
            throw Error(ErrorKind::SearchSpaceTooLarge, "den_bound^" + std::to_string(slots) +
                                                            " candidate maps exceed the ceiling " + ceiling.str());
    }

    Cocycle diff = sub(w1, w2);
    long long B = to_int64(den_bound);

    // Coboundary values always have denominator dividing den_bound, so a
    // difference value outside that lattice rules every candidate out.
    auto encode = [&](const Coeff& v, long long& out) -> bool {
        if (den_bound % v.den() != 0) return false;
        out = to_int64(v.num() * (den_bound / v.den()));
        return true;
    };
    std::vector<long long> dh(n * n * n), dc(n * n);
    for (std::size_t i = 0; i < diff.h_table.size(); ++i)
        if (!encode(diff.h_table[i], dh[i])) return std::nullopt;
    for (std::size_t i = 0; i < diff.c_table.size(); ++i)
        if (!encode(diff.c_table[i], dc[i])) return std::nullopt;

    std::vector<GroupElement> elems = enumerate_elements(w1.group);
    std::vector<std::size_t> addi(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            addi[i * n + j] = element_index(w1.group, add(w1.group, elems[i], elems[j]));

    std::vector<long long> k(n * n, 0);  // the candidate, residues mod B
    std::vector<std::pair<std::size_t, std::size_t>> slot_at;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) slot_at.push_back({i, j});

    auto matches = [&]() -> bool {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if ((k[j * n + i] - k[i * n + j] - dc[i * n + j]) % B != 0) return false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t ij = addi[i * n + j];
                for (std::size_t l = 0; l < n; ++l) {
                    long long v = k[j * n + l] - k[ij * n + l] + k[i * n + addi[j * n + l]] - k[i * n + j];
                    if ((v - dh[(i * n + j) * n + l]) % B != 0) return false;
                }
            }
        return true;
    };

    std::vector<long long> vals(slots, 0);
    while (true) {
        if (matches()) {
            std::vector<Coeff> table(n * n, Coeff::zero(w1.target));
            for (std::size_t s = 0; s < slots; ++s)
                table[slot_at[s].first * n + slot_at[s].second] = Coeff::make(w1.target, vals[s], B);
            return kmap_from_table(w1.group, w1.target, std::move(table));
        }
        // next candidate, last slot fastest
        std::size_t s = slots;
        while (s > 0) {
            --s;
            if (vals[s] + 1 < B) {
                ++vals[s];
                k[slot_at[s].first * n + slot_at[s].second] = vals[s];
                break;
            }
            vals[s] = 0;
            k[slot_at[s].first * n + slot_at[s].second] = 0;
            if (s == 0) return std::nullopt;
        }
        if (slots == 0) return std::nullopt;  // only the zero map existed
    }
}

bool is_symmetric(const Cocycle& w, const Int& box) {
    std::vector<GroupElement> elems = w.group.finite() ? enumerate_elements(w.group) : box_elements(w.group, box);
    for (const GroupElement& x : elems)
        for (const GroupElement& y : elems)
            if (!add(w.c(x, y), w.c(y, x)).is_zero()) return false;
    return true;
}

}  // namespace quadbraid
