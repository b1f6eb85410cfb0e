#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadbraid/group.hpp"

using namespace quadbraid;

static GroupElement el(const Group& g, std::vector<long long> raw) {
    IntVec v(raw.begin(), raw.end());
    return reduce(g, v);
}

TEST_CASE("construction and validation") {
    Group g = make_group({2, 4});
    CHECK(g.rank() == 2);
    CHECK(g.finite());
    CHECK(g.order() == 8);
    CHECK_THROWS_AS(make_group({2, -1}), Error);

    Group z = make_group({0});
    CHECK_FALSE(z.finite());
    CHECK_THROWS_AS(z.order(), Error);
}

TEST_CASE("canonical reduction") {
    Group g = make_group({2, 4});
    CHECK(el(g, {3, 7}) == el(g, {1, 3}));
    CHECK(el(g, {-1, -1}).coords == IntVec{1, 3});
    CHECK_THROWS_AS(reduce(g, IntVec{1}), Error);

    Group mixed = make_group({0, 2});
    GroupElement x = el(mixed, {-5, 3});
    CHECK(x.coords == IntVec{-5, 1});
}

TEST_CASE("element arithmetic") {
    Group g = make_group({2, 4});
    CHECK(add(g, el(g, {1, 3}), el(g, {1, 2})) == el(g, {0, 1}));
    CHECK(neg(g, el(g, {1, 3})) == el(g, {1, 1}));
    CHECK(neg(g, zero(g)) == zero(g));
    CHECK(scalar_mul(g, 3, el(g, {1, 3})) == el(g, {1, 1}));
    CHECK(scalar_mul(g, -1, el(g, {1, 3})) == neg(g, el(g, {1, 3})));
    CHECK(is_zero(zero(g)));
    CHECK_FALSE(is_zero(el(g, {0, 1})));
}

TEST_CASE("group laws hold exhaustively") {
    for (const Group& g : {make_group({2, 4}), make_group({3, 3}), make_group({6})}) {
        auto elems = enumerate_elements(g);
        for (const auto& x : elems) {
            CHECK(add(g, x, zero(g)) == x);
            CHECK(is_zero(add(g, x, neg(g, x))));
            for (const auto& y : elems) {
                CHECK(add(g, x, y) == add(g, y, x));
                for (const auto& z : elems)
                    CHECK(add(g, add(g, x, y), z) == add(g, x, add(g, y, z)));
            }
        }
    }
}

TEST_CASE("enumeration is lexicographic and indexable") {
    Group g = make_group({2, 4});
    auto elems = enumerate_elements(g);
    REQUIRE(elems.size() == 8);
    CHECK(elems.front() == zero(g));
    CHECK(elems[1].coords == IntVec{0, 1});
    CHECK(elems[4].coords == IntVec{1, 0});
    CHECK(elems.back().coords == IntVec{1, 3});
    for (std::size_t i = 0; i < elems.size(); ++i) CHECK(element_index(g, elems[i]) == i);

    CHECK_THROWS_AS(enumerate_elements(make_group({0})), Error);

    // trivial factors collapse as expected
    CHECK(enumerate_elements(make_group({1, 1})).size() == 1);
}

TEST_CASE("box enumeration for free factors") {
    Group z = make_group({0});
    auto b = box_elements(z, 3);
    REQUIRE(b.size() == 7);
    CHECK(b.front().coords == IntVec{-3});
    CHECK(b.back().coords == IntVec{3});

    Group mixed = make_group({0, 2});
    auto mb = box_elements(mixed, 1);
    REQUIRE(mb.size() == 6);
    CHECK(mb.front().coords == IntVec{-1, 0});
    CHECK(mb.back().coords == IntVec{1, 1});
}

TEST_CASE("formatting") {
    Group g = make_group({2, 4});
    CHECK(to_string(el(g, {1, 3})) == "(1,3)");
    CHECK(to_string(g) == "[2,4]");
}
