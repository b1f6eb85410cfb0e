#include "quadbraid/skeletal.hpp"

#include "quadbraid/presentation.hpp"

namespace quadbraid {

SkeletalModel make_model(const Cocycle& w) { return SkeletalModel{w.group, w.target, w}; }

Coeff associator(const SkeletalModel& m, const GroupElement& x, const GroupElement& y,
                 const GroupElement& z) {
    return m.cocycle.h(x, y, z);
}

Coeff braiding(const SkeletalModel& m, const GroupElement& x, const GroupElement& y) {
    return m.cocycle.c(x, y);
}

NormalFormReport normal_form_report(const SkeletalModel& m, long box) {
    NormalFormReport out;
    out.applicable = m.target.divisible();

    const Cocycle& w = m.cocycle;
    const Group& g = m.group;
    std::vector<GroupElement> elems = g.finite() ? enumerate_elements(g) : box_elements(g, box);

    auto& from_braiding = out.checks.add("associator-from-braiding");
    auto& additivity = out.checks.add("braiding-additivity-defect");
    auto& swap = out.checks.add("associator-argument-swap");

    for (const GroupElement& x : elems)
        for (const GroupElement& y : elems)
            for (const GroupElement& z : elems) {
                std::string where = to_string(x) + "," + to_string(y) + "," + to_string(z);

                Coeff lhs1 = w.h(x, y, z);
                Coeff rhs1 = sub(add(w.c(x, y), w.c(x, z)), w.c(x, add(g, y, z)));
                from_braiding.record(lhs1 == rhs1, where.c_str(), lhs1, rhs1);

                Coeff lhs2 = w.h(z, x, y);
                Coeff rhs2 = sub(sub(w.c(add(g, x, y), z), w.c(x, z)), w.c(y, z));
                additivity.record(lhs2 == rhs2, where.c_str(), lhs2, rhs2);

                Coeff rhs3 = w.h(x, z, y);
                swap.record(lhs1 == rhs3, where.c_str(), lhs1, rhs3);
            }

    return out;
}

StrictifyDecision strictifiable(const QuadraticForm& q, const Int& ceiling) {
    if (!q.group.finite())
        throw Error(ErrorKind::InfiniteGroup, "strictifiability search needs a finite group");

    WitnessSearch search = bilinear_witness_search(q, ceiling);
    StrictifyDecision out;
    out.grid_size = search.grid_size;
    out.exhausted = search.exhausted;
    out.symmetric_fast_path = search.symmetric_fast_path;
    if (!search.witness.has_value()) return out;

    out.yes = true;
    out.witness = search.witness;
    // (G, id, S) is an optimal admissible presentation with no relations used,
    // so the induced cocycle has zero associator and braiding equal to S.
    Presentation p = from_bilinear(*search.witness, q);
    out.strict_cocycle = cocycle_from_presentation(p, q);
    return out;
}

}  // namespace quadbraid
