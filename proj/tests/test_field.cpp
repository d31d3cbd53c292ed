#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycloperm/field.hpp"

using namespace cycloperm;

TEST_CASE("make_field validates p, m and modulus") {
    Field f13 = Field::make(13, 1);
    CHECK(f13.q() == 13);
    CHECK(f13.describe() == "13");

    Field f9 = Field::make(3, 2, std::vector<u64>{1, 0, 1});
    CHECK(f9.q() == 9);
    CHECK(f9.describe() == "3^2/1,0,1");
    // x^2+1 is irreducible: -1 is not a square mod 3
    for (u64 a = 0; a < 3; ++a) CHECK((a * a + 1) % 3 != 0);

    CHECK_THROWS_AS(Field::make(4, 1), NotPrime);
    CHECK_THROWS_AS(Field::make(1, 1), NotPrime);
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<u64>{2, 0, 1}), ReducibleModulus);  // x^2+2=(x+1)(x+2)
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<u64>{1, 0, 1, 0}), DegreeMismatch);
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<u64>{1, 0, 2}), DegreeMismatch);  // not monic
}

TEST_CASE("default modulus is the lexicographically smallest irreducible") {
    Field f9 = Field::make(3, 2);
    CHECK(f9.modulus() == std::vector<u64>{1, 0, 1});  // x^2+1
    Field f8 = Field::make(2, 3);
    CHECK(f8.modulus() == std::vector<u64>{1, 0, 1, 1});  // x^3+x^2+1
    // determinism
    CHECK(Field::make(3, 2).modulus() == f9.modulus());
}

TEST_CASE("field description round trip") {
    for (const char* d : {"13", "3^2/1,0,1", "2^4/1,1,0,0,1"}) {
        Field f = Field::parse(d);
        CHECK(f.describe() == d);
        CHECK(Field::parse(f.describe()) == f);
    }
    CHECK_THROWS_AS(Field::parse("abc"), MalformedInput);
}

TEST_CASE("prime field arithmetic") {
    Field f = Field::make(13, 1);
    CHECK(f.mul(5, 3) == 2);  // 15 mod 13
    CHECK(f.pow(5, 4) == 1);
    CHECK(f.add(7, 9) == 3);
    CHECK(f.neg(5) == 8);
    CHECK(f.mul(f.inv(5), 5) == 1);
    CHECK_THROWS_AS(f.inv(0), ZeroInverse);
    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(0, 5) == 0);
    CHECK_THROWS_AS(f.pow(0, -1), ZeroInverse);
    CHECK(f.pow(5, -1) == f.inv(5));
}

TEST_CASE("extension field arithmetic") {
    Field f9 = Field::make(3, 2, std::vector<u64>{1, 0, 1});
    Elem t = f9.from_coords({0, 1});
    CHECK(f9.mul(t, t) == 2);  // t^2 = -1 = 2
    // field axioms on all elements
    for (Elem a = 0; a < 9; ++a) {
        for (Elem b = 0; b < 9; ++b) {
            CHECK(f9.add(a, b) == f9.add(b, a));
            CHECK(f9.mul(a, b) == f9.mul(b, a));
            for (Elem c = 0; c < 9; ++c) {
                CHECK(f9.mul(a, f9.add(b, c)) == f9.add(f9.mul(a, b), f9.mul(a, c)));
                CHECK(f9.mul(a, f9.mul(b, c)) == f9.mul(f9.mul(a, b), c));
            }
        }
        if (a != 0) CHECK(f9.mul(a, f9.inv(a)) == 1);
        CHECK(f9.pow(a, 9) == a);  // a^q = a
    }
    CHECK_THROWS_AS(f9.mul(3, 9), FieldMismatch);
}

TEST_CASE("element_from_integer embeds the prime subfield") {
    CHECK(Field::make(13, 1).from_integer(2) == 2);
    CHECK(Field::make(3, 2).from_integer(5) == 2);
    CHECK(Field::make(5, 1).from_integer(-1) == 4);
}

TEST_CASE("element text format") {
    Field f13 = Field::make(13, 1);
    CHECK(f13.format(7) == "7");
    CHECK(f13.parse_element("7") == 7);
    Field f9 = Field::make(3, 2);
    Elem a = f9.from_coords({1, 2});
    CHECK(f9.format(a) == "1,2");
    CHECK(f9.parse_element("1,2") == a);
    CHECK_THROWS_AS(f9.parse_element("1,5"), FieldMismatch);
}

TEST_CASE("find_primitive returns the canonical generator") {
    Field f13 = Field::make(13, 1);
    CHECK(find_primitive(f13) == 2);
    Field f5 = Field::make(5, 1);
    CHECK(find_primitive(f5) == 2);
    Field f9 = Field::make(3, 2, std::vector<u64>{1, 0, 1});
    Elem g = find_primitive(f9);
    CHECK(g == f9.from_coords({1, 1}));
    CHECK(f9.order(g) == 8);
    // smaller elements (coordinate order, constant term major) are not primitive
    for (const auto& c : {std::vector<u64>{0, 1}, std::vector<u64>{0, 2}, std::vector<u64>{1, 0}})
        CHECK(f9.order(f9.from_coords(c)) < 8);
}

TEST_CASE("find_primitive has exact order q-1 for assorted fields") {
    for (const char* d : {"3", "7", "31", "113", "2^5", "5^3", "3^4"}) {
        Field f = Field::parse(d);
        CHECK(f.order(find_primitive(f)) == f.q() - 1);
    }
}

TEST_CASE("dlog table inverts the power map") {
    Field f13 = Field::make(13, 1);
    DlogTable t(f13, 2);
    CHECK(t.index_of(5) == 9);
    CHECK(t.index_of(3) == 4);
    CHECK(t.index_of(1) == 0);
    for (u64 k = 0; k < 12; ++k) CHECK(t.index_of(t.power_of(static_cast<long long>(k))) == k);
    // bijection onto {0..q-2}
    std::vector<bool> hit(12, false);
    for (Elem a = 1; a < 13; ++a) {
        CHECK(!hit[t.index_of(a)]);
        hit[t.index_of(a)] = true;
    }
    Field f5 = Field::make(5, 1);
    DlogTable t5(f5, 2);
    CHECK(t5.index_of(3) == 3);

    CHECK_THROWS_AS(DlogTable(f13, 3), NotPrimitive);  // ord(3) = 3
    CHECK_THROWS_AS(DlogTable(f13, 2, 8), FieldTooLarge);
    CHECK_THROWS_AS(t.index_of(0), ZeroElement);
}

TEST_CASE("index arithmetic holds exhaustively for small fields") {
    for (const char* d : {"5", "13", "2^3", "3^2", "11^2", "113"}) {
        Field f = Field::parse(d);
        DlogTable t(f, find_primitive(f));
        for (Elem a = 1; a < f.q(); ++a)
            for (Elem b = 1; b < f.q(); ++b)
                CHECK(index_arith_check(f, t, a, b, 3));
        CHECK(index_arith_check(f, t, 1, 1, 0));
        // negative exponent path
        for (Elem a = 1; a < f.q(); ++a) CHECK(index_arith_check(f, t, a, 1, -5));
    }
}

TEST_CASE("the l-th power coset C_0 is a subgroup of size s") {
    Field f13 = Field::make(13, 1);
    DlogTable t(f13, 2);
    const u64 l = 3, s = 4;
    std::vector<Elem> c0;
    for (u64 j = 0; j < s; ++j) c0.push_back(t.power_of(static_cast<long long>(l * j)));
    std::sort(c0.begin(), c0.end());
    CHECK(c0.size() == s);
    CHECK(std::adjacent_find(c0.begin(), c0.end()) == c0.end());
    for (Elem a : c0)
        for (Elem b : c0)
            CHECK(std::binary_search(c0.begin(), c0.end(), f13.mul(a, b)));
}
