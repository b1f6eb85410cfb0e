#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadbraid/presentation.hpp"
#include "quadbraid/skeletal.hpp"

using namespace quadbraid;

static const TargetGroup QZ = TargetGroup::qmodz();

static Coeff qz(long long n, long long d) { return Coeff::make(QZ, n, d); }

TEST_CASE("associator and braiding read off the cocycle") {
    Group g = make_group({2});
    QuadraticForm q = form_from_params(g, QZ, {qz(1, 4)}, {});
    SkeletalModel m = make_model(quinn_cocycle(q));
    GroupElement one = reduce(g, {1});
    GroupElement id = zero(g);

    CHECK(associator(m, one, one, one) == qz(1, 2));
    CHECK(braiding(m, one, one) == qz(1, 4));
    for (const GroupElement& x : enumerate_elements(g)) {
        CHECK(braiding(m, x, id).is_zero());
        CHECK(braiding(m, id, x).is_zero());
    }
    CHECK_THROWS_AS(associator(m, reduce(make_group({2, 2}), {1, 0}), one, one), Error);
}

TEST_CASE("closed-form models are in normal form for every form on [2,4]") {
    Group g = make_group({2, 4});
    for (const QuadraticForm& q : enumerate_forms(g)) {
        NormalFormReport report = normal_form_report(make_model(quinn_cocycle(q)));
        CHECK(report.applicable);
        CHECK(report.passed());
        CHECK(report.checks.find("associator-from-braiding")->checked == 512);
        CHECK(report.checks.find("braiding-additivity-defect")->checked == 512);
        CHECK(report.checks.find("associator-argument-swap")->checked == 512);
    }
}

TEST_CASE("presentation-backed and exponential models are in normal form too") {
    Group g = make_group({2, 4});
    QuadraticForm q = form_from_params(g, QZ, {qz(1, 4), qz(1, 8)}, {{{0, 1}, qz(1, 2)}});
    CHECK(normal_form_report(make_model(cocycle_from_presentation(standard_presentation(q), q))).passed());
    CHECK(normal_form_report(make_model(exp_cocycle(q))).passed());
}

TEST_CASE("the zero cocycle is trivially in normal form") {
    Cocycle w = quinn_cocycle(zero_form(make_group({3, 3}), QZ));
    NormalFormReport report = normal_form_report(make_model(w));
    CHECK(report.passed());
    CHECK(report.checks.total_failures() == 0);
}

TEST_CASE("normal-form failures point at the perturbed entry") {
    Group g = make_group({2});
    QuadraticForm q = form_from_params(g, QZ, {qz(1, 4)}, {});
    Cocycle w = tabulate(quinn_cocycle(q));
    w.h_table[7] = add(w.h_table[7], qz(1, 4));  // h((1),(1),(1))

    NormalFormReport report = normal_form_report(make_model(w));
    CHECK(!report.passed());
    const IdentityCheck* fb = report.checks.find("associator-from-braiding");
    REQUIRE(fb != nullptr);
    CHECK(fb->failures == 1);
    REQUIRE(fb->sample.size() == 1);
    CHECK(fb->sample[0].detail == "(1),(1),(1)");
    CHECK(report.checks.find("braiding-additivity-defect")->failures == 1);
    // the bump sits at a point fixed by swapping the last two arguments
    CHECK(report.checks.find("associator-argument-swap")->passed());
}

TEST_CASE("non-divisible targets are reported as out of scope for the theorem") {
    Group g = make_group({2});
    TargetGroup z4 = TargetGroup::zmod(4);
    Cocycle w;
    w.group = g;
    w.target = z4;
    w.backend = CocycleBackend::Table;
    w.h_table.assign(8, Coeff::zero(z4));
    w.c_table.assign(4, Coeff::zero(z4));

    NormalFormReport report = normal_form_report(make_model(w));
    CHECK(!report.applicable);
    CHECK(report.passed());  // the zero cocycle still satisfies the identities
}

TEST_CASE("normal form on an infinite group uses the box sweep") {
    QuadraticForm q = form_from_params(make_group({0}), QZ, {qz(1, 4)}, {});
    SkeletalModel m = make_model(quinn_cocycle(q));
    NormalFormReport report = normal_form_report(m, 2);
    CHECK(report.passed());
    CHECK(report.checks.find("associator-from-braiding")->checked == 125);
}

TEST_CASE("half-integer form on Z/2 strictifies") {
    Group g = make_group({2});
    QuadraticForm q = form_from_params(g, QZ, {qz(1, 2)}, {});
    StrictifyDecision d = strictifiable(q);
    REQUIRE(d.yes);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->at(0, 0) == qz(1, 2));
    REQUIRE(d.strict_cocycle.has_value());

    Cocycle t = tabulate(*d.strict_cocycle);
    for (const Coeff& v : t.h_table) CHECK(v.is_zero());
    CHECK(t.c(reduce(g, {1}), reduce(g, {1})) == qz(1, 2));
    CHECK(verify_cocycle(t).passed());
    CHECK(trace(t) == q);
}

TEST_CASE("quarter form on Z/2 does not strictify") {
    QuadraticForm q = form_from_params(make_group({2}), QZ, {qz(1, 4)}, {});
    StrictifyDecision d = strictifiable(q);
    CHECK(!d.yes);
    CHECK(!d.witness.has_value());
    CHECK(d.exhausted);
    CHECK(d.grid_size == 2);  // the lone entry S(0,0) ranges over {0, 1/2}
}

TEST_CASE("zero-polarization forms always strictify") {
    for (const Group& g : {make_group({2, 2}), make_group({2, 4}), make_group({6})}) {
        for (const QuadraticForm& q : enumerate_forms(g)) {
            if (!has_zero_polarization(q)) continue;
            StrictifyDecision d = strictifiable(q);
            CHECK(d.yes);
            CHECK(d.symmetric_fast_path);
            CHECK(trace(*d.strict_cocycle) == q);
        }
    }
}

TEST_CASE("strictifiability decisions are internally consistent on [2,2]") {
    for (const QuadraticForm& q : enumerate_forms(make_group({2, 2}))) {
        StrictifyDecision d = strictifiable(q);
        if (d.yes) {
            CHECK(verify_cocycle(*d.strict_cocycle).passed());
            CHECK(trace(*d.strict_cocycle) == q);
            Cocycle t = tabulate(*d.strict_cocycle);
            for (const Coeff& v : t.h_table) CHECK(v.is_zero());
        } else {
            CHECK(d.exhausted);
            CHECK(d.grid_size > 0);
        }
        // a symmetric braiding is the same thing as zero polarization, and
        // zero polarization always yields a witness
        if (has_zero_polarization(q)) CHECK(d.yes);
    }
}

TEST_CASE("strictifiability guards") {
    CHECK_THROWS_AS(strictifiable(zero_form(make_group({0}), QZ)), Error);
    CHECK_THROWS_AS(strictifiable(zero_form(make_group({2}), TargetGroup::integers())), Error);

    Group g = make_group({2, 2});
    QuadraticForm q = form_from_params(g, QZ, {qz(1, 4), qz(0, 1)}, {});
    try {
        strictifiable(q, 10);  // grid has 16 candidates
        FAIL("expected SearchSpaceTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SearchSpaceTooLarge);
    }
}
