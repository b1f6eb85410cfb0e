#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadbraid/quadform.hpp"

#include <set>

using namespace quadbraid;

static const TargetGroup QZ = TargetGroup::qmodz();

static Coeff qz(long long n, long long d) { return Coeff::make(QZ, n, d); }

static QuadraticForm sample_24() {
    // [2,4] with q(e0)=1/4, q(e1)=1/8, b(e0,e1)=1/2
    return form_from_params(make_group({2, 4}), QZ, {qz(1, 4), qz(1, 8)}, {{{0, 1}, qz(1, 2)}});
}

TEST_CASE("torsion constraints on construction") {
    Group g2 = make_group({2});
    CHECK_NOTHROW(form_from_params(g2, QZ, {qz(1, 4)}, {}));
    CHECK_THROWS_AS(form_from_params(g2, QZ, {qz(1, 3)}, {}), Error);
    try {
        form_from_params(g2, QZ, {qz(1, 3)}, {});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TorsionViolation);
    }
    CHECK_NOTHROW(sample_24());
    CHECK_THROWS_AS(form_from_params(make_group({2, 4}), QZ, {qz(1, 4), qz(1, 8)}, {{{0, 1}, qz(1, 4)}}), Error);
    CHECK_THROWS_AS(form_from_params(g2, QZ, {qz(1, 4), qz(0, 1)}, {}), Error);  // LengthMismatch
    CHECK_THROWS_AS(form_from_params(g2, QZ, {Coeff::make(TargetGroup::integers(), 1)}, {}), Error);
}

TEST_CASE("torsion bounds per factor kind") {
    CHECK(diag_torsion(2) == 4);
    CHECK(diag_torsion(3) == 3);
    CHECK(diag_torsion(4) == 8);
    CHECK(diag_torsion(6) == 12);
    CHECK(diag_torsion(0) == 0);  // free factor: unconstrained
    CHECK(pair_torsion(2, 4) == 2);
    CHECK(pair_torsion(0, 4) == 4);
    CHECK(pair_torsion(0, 0) == 0);
}

// Oracle: evaluate the defining polynomial on raw integer representatives,
// without reducing into the group first.
static Coeff eval_on_lift(const QuadraticForm& q, const IntVec& lift) {
    Coeff acc = Coeff::zero(q.target);
    for (std::size_t k = 0; k < q.group.rank(); ++k) {
        acc = add(acc, scale(lift[k] * lift[k], q.diag[k]));
        for (std::size_t l = k + 1; l < q.group.rank(); ++l)
            acc = add(acc, scale(lift[k] * lift[l], q.off(k, l)));
    }
    return acc;
}

TEST_CASE("evaluation, crosschecked over lifted representatives") {
    QuadraticForm q = sample_24();
    const Group& g = q.group;
    GroupElement x = reduce(g, {1, 1});
    CHECK(evaluate(q, x) == qz(7, 8));  // 1/4 + 1/8 + 1/2
    CHECK(evaluate(q, zero(g)).is_zero());
    // the value must agree on every lift x + (2a, 4b)
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -2; b <= 2; ++b)
            CHECK(eval_on_lift(q, {1 + 2 * a, 1 + 4 * b}) == qz(7, 8));

    QuadraticForm q2 = form_from_params(make_group({2}), QZ, {qz(1, 4)}, {});
    CHECK(evaluate(q2, reduce(q2.group, {1})) == qz(1, 4));

    CHECK_THROWS_AS(evaluate(q, GroupElement{IntVec{1}}), Error);
}

TEST_CASE("polarization") {
    QuadraticForm q2 = form_from_params(make_group({2}), QZ, {qz(1, 4)}, {});
    GroupElement one = reduce(q2.group, {1});
    CHECK(polarization(q2, one, one) == qz(1, 2));  // 2*q(e0)

    QuadraticForm q = sample_24();
    GroupElement e0 = reduce(q.group, {1, 0}), e1 = reduce(q.group, {0, 1});
    CHECK(polarization(q, e0, e1) == qz(1, 2));  // the off-diagonal parameter
    for (const auto& x : enumerate_elements(q.group)) CHECK(polarization(q, x, zero(q.group)).is_zero());
}

TEST_CASE("validation catches corrupted forms and passes real ones") {
    for (const auto& q : enumerate_forms(make_group({2, 2}))) CHECK(validate_form(q).passed());
    CHECK(validate_form(zero_form(make_group({2, 4}), QZ)).passed());

    // bypass the constructor to plant a non-torsion diagonal value
    QuadraticForm bad = zero_form(make_group({2}), QZ);
    bad.diag[0] = qz(1, 3);
    CheckReport report = validate_form(bad);
    CHECK_FALSE(report.passed());
    const IdentityCheck* homog = report.find("homogeneity");
    REQUIRE(homog != nullptr);
    CHECK(homog->failures > 0);
    CHECK_FALSE(homog->sample.empty());
}

TEST_CASE("box validation for free factors") {
    // q(x) = x²/4 on Z is a genuine quadratic form; all identities hold on the box
    QuadraticForm q = form_from_params(make_group({0}), QZ, {qz(1, 4)}, {});
    CHECK(validate_form(q, 3).passed());
}

TEST_CASE("enumeration matches the counting formula") {
    struct { std::vector<long long> moduli; long long expect; } cases[] = {
        {{2}, 4}, {{3}, 3}, {{1}, 1}, {{2, 2}, 32}, {{2, 4}, 64},
    };
    for (const auto& c : cases) {
        Group g = make_group(IntVec(c.moduli.begin(), c.moduli.end()));
        auto forms = enumerate_forms(g);
        CHECK(count_forms(g) == c.expect);
        CHECK(forms.size() == (std::size_t)c.expect);
        // pairwise distinct
        std::set<std::string> seen;
        for (const auto& q : forms) {
            std::string key;
            for (const auto& v : q.diag) key += v.str() + "|";
            for (const auto& v : q.offdiag) key += v.str() + "|";
            seen.insert(key);
        }
        CHECK(seen.size() == forms.size());
    }
    CHECK_THROWS_AS(enumerate_forms(make_group({0})), Error);
    CHECK_THROWS_AS(count_forms(make_group({0, 2})), Error);
}

TEST_CASE("parameter bijection round-trips") {
    Group g = make_group({2, 4});
    for (const auto& q : enumerate_forms(g)) {
        FormParams p = form_params(q);
        CHECK(form_from_int_params(g, p) == q);
        // parameters stay inside their grids
        CHECK(p.diag[0] >= 0); CHECK(p.diag[0] < 4);
        CHECK(p.diag[1] >= 0); CHECK(p.diag[1] < 8);
        CHECK(p.offdiag[0] >= 0); CHECK(p.offdiag[0] < 2);
    }
}

TEST_CASE("polarization is symmetric and bilinear for every enumerated form") {
    for (const auto& moduli : {IntVec{2, 2}, IntVec{2, 4}}) {
        Group g = make_group(moduli);
        for (const auto& q : enumerate_forms(g)) {
            CheckReport r = validate_form(q);
            CHECK(r.find("polarization-symmetry")->passed());
            CHECK(r.find("polarization-bilinearity")->passed());
        }
    }
}

TEST_CASE("form addition is pointwise") {
    Group g = make_group({2, 4});
    auto forms = enumerate_forms(g);
    auto elems = enumerate_elements(g);
    for (std::size_t i = 0; i < forms.size(); i += 13)
        for (std::size_t j = 0; j < forms.size(); j += 17) {
            QuadraticForm s = add_forms(forms[i], forms[j]);
            for (const auto& x : elems)
                CHECK(evaluate(s, x) == add(evaluate(forms[i], x), evaluate(forms[j], x)));
        }
}

TEST_CASE("bilinear witness search on Z/2") {
    Group g = make_group({2});
    QuadraticForm half = form_from_params(g, QZ, {qz(1, 2)}, {});
    auto w = bilinear_witness(half);
    REQUIRE(w.has_value());
    CHECK(w->at(0, 0) == qz(1, 2));

    QuadraticForm quarter = form_from_params(g, QZ, {qz(1, 4)}, {});
    WitnessSearch s = bilinear_witness_search(quarter);
    CHECK_FALSE(s.witness.has_value());
    CHECK(s.exhausted);
    CHECK(s.grid_size == 2);  // S(0,0) ∈ {0, 1/2}

    auto z = bilinear_witness(zero_form(g, QZ));
    REQUIRE(z.has_value());
    CHECK(z->at(0, 0).is_zero());

    CHECK_THROWS_AS(bilinear_witness_search(quarter, 1), Error);  // ceiling exceeded
}

TEST_CASE("every zero-polarization form has a constructive witness") {
    for (const auto& moduli : {IntVec{2, 2}, IntVec{2, 4}, IntVec{3}, IntVec{6}}) {
        Group g = make_group(moduli);
        auto elems = enumerate_elements(g);
        int found = 0;
        for (const auto& q : enumerate_forms(g)) {
            if (!has_zero_polarization(q)) continue;
            ++found;
            WitnessSearch s = bilinear_witness_search(q);
            CHECK(s.symmetric_fast_path);
            REQUIRE(s.witness.has_value());
            for (const auto& x : elems) CHECK(evaluate(*s.witness, x, x) == evaluate(q, x));
        }
        CHECK(found > 0);
    }
}

TEST_CASE("witnesses found by search always match") {
    Group g = make_group({2, 2});
    auto elems = enumerate_elements(g);
    for (const auto& q : enumerate_forms(g)) {
        auto w = bilinear_witness(q);
        if (!w) continue;
        for (const auto& x : elems) CHECK(evaluate(*w, x, x) == evaluate(q, x));
    }
}

TEST_CASE("forms over other targets") {
    // Z/2-valued form on Z/2: q(x) = x² with value 1 at the generator
    TargetGroup z2 = TargetGroup::zmod(2);
    QuadraticForm q = form_from_params(make_group({2}), z2, {Coeff::make(z2, 1)}, {});
    CHECK(evaluate(q, reduce(q.group, {1})) == Coeff::make(z2, 1));
    CHECK(validate_form(q).passed());
    CHECK_THROWS_AS(form_params(q), Error);  // integer parameters live over Q/Z
}
