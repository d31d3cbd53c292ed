#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cycloperm/poly.hpp"

using namespace cycloperm;

namespace {

const Field f13 = Field::make(13, 1);
const DlogTable t13(f13, find_primitive(f13));
const Field f5 = Field::make(5, 1);
const DlogTable t5(f5, find_primitive(f5));

}  // namespace

TEST_CASE("horner evaluation") {
    Poly f = parse_poly(f13, "2x^2+x+2");
    CHECK(eval(f, 3) == 10);
    CHECK(eval(f, 9) == 4);
    CHECK(eval(f, 1) == 5);
    Poly zero = make_poly(f13, {});
    CHECK(eval(zero, 7) == 0);
}

TEST_CASE("decompose splits q-1 = l*s") {
    Decomposition d = decompose(f13, t13, 3);
    CHECK(d.s == 4);
    CHECK(d.xi == 3);
    Decomposition d5 = decompose(f5, t5, 2);
    CHECK(d5.s == 2);
    CHECK(d5.xi == 4);
    CHECK_THROWS_AS(decompose(f13, t13, 5), NotADivisor);
    // xi has order exactly l
    for (u64 l : divisors(12))
        if (l > 1) CHECK(f13.order(decompose(f13, t13, l).xi) == l);
}

TEST_CASE("extract_factored recovers r and f") {
    Decomposition d = decompose(f13, t13, 3);

    FactoredForm a = extract_factored(parse_poly(f13, "2x^9+x^5+2x"), d);
    CHECK(a.r == 1);
    CHECK(a.f == parse_poly(f13, "2x^2+x+2"));

    FactoredForm b = extract_factored(parse_poly(f13, "x^7+x^3"), d);
    CHECK(b.r == 3);
    CHECK(b.f == parse_poly(f13, "x+1"));

    CHECK_THROWS_AS(extract_factored(parse_poly(f13, "x^3+x^2"), d), NotFactorable);
    CHECK_THROWS_AS(extract_factored(parse_poly(f13, "x^3+1"), d), ZeroConstantViolation);
    CHECK_THROWS_AS(extract_factored(make_poly(f13, {}), d), ZeroConstantViolation);
}

TEST_CASE("extraction then expansion is the identity") {
    Decomposition d = decompose(f13, t13, 3);
    for (const char* s : {"2x^9+x^5+2x", "x^7+x^3", "x^5", "3x^9+x"}) {
        Poly P = parse_poly(f13, s);
        CHECK(expand(extract_factored(P, d)) == P);
    }
}

TEST_CASE("mapping coefficients A_i = f(xi^i)") {
    Decomposition d = decompose(f13, t13, 3);
    CHECK(mapping_coeffs(extract_factored(parse_poly(f13, "2x^9+x^5+2x"), d)).A ==
          std::vector<Elem>{5, 10, 4});
    CHECK(mapping_coeffs(extract_factored(parse_poly(f13, "x^7+x^3"), d)).A ==
          std::vector<Elem>{2, 4, 10});
    Decomposition d5 = decompose(f5, t5, 2);
    CHECK(mapping_coeffs(extract_factored(parse_poly(f5, "x^3+2x"), d5)).A ==
          std::vector<Elem>{3, 1});
}

TEST_CASE("coset labels") {
    Decomposition d = decompose(f13, t13, 3);
    CHECK(coset_of(t13, d, 1) == 0);
    CHECK(coset_of(t13, d, 2) == 1);
    CHECK(coset_of(t13, d, 3) == 1);
    CHECK_THROWS_AS(coset_of(t13, d, 0), ZeroElement);
    // the cosets partition F_q* into l classes of size s
    std::vector<u64> count(3, 0);
    for (Elem x = 1; x < 13; ++x) ++count[coset_of(t13, d, x)];
    CHECK(count == std::vector<u64>{4, 4, 4});
}

TEST_CASE("cyclotomic map evaluation") {
    Decomposition d = decompose(f13, t13, 3);
    FactoredForm ff = extract_factored(parse_poly(f13, "2x^9+x^5+2x"), d);
    MappingCoeffs mc = mapping_coeffs(ff);
    CHECK(cyclotomic_map_eval(mc, ff.r, f13, t13, d, 0) == 0);
    CHECK(cyclotomic_map_eval(mc, ff.r, f13, t13, d, 1) == 5);
    CHECK(cyclotomic_map_eval(mc, ff.r, f13, t13, d, 2) == 7);  // A_1 * 2 = 20 mod 13
}

TEST_CASE("factored form equals its cyclotomic mapping everywhere") {
    Decomposition d = decompose(f13, t13, 3);
    CHECK(lemma_rela_check(extract_factored(parse_poly(f13, "2x^9+x^5+2x"), d), t13));
    CHECK(lemma_rela_check(extract_factored(parse_poly(f13, "x^7+x^3"), d), t13));

    // random (r, f, l) over assorted small fields
    std::mt19937_64 rng(7);
    for (const char* desc : {"13", "5", "3^2", "2^4", "11", "7^2", "113"}) {
        Field f = Field::parse(desc);
        DlogTable t(f, find_primitive(f));
        auto divs = divisors(f.q() - 1);
        for (int it = 0; it < 50; ++it) {
            u64 l = divs[rng() % divs.size()];
            Decomposition d2 = decompose(f, t, l);
            u64 r = 1 + rng() % (f.q() - 2);
            std::vector<Elem> fc(l);
            bool nz = false;
            for (auto& c : fc) nz |= (c = rng() % f.q()) != 0;
            if (!nz) fc[0] = 1;
            FactoredForm ff{&f, r, make_poly(f, fc), d2};
            CHECK(lemma_rela_check(ff, t));
        }
    }
}

TEST_CASE("mapping coefficients only depend on f mod x^l - 1") {
    Decomposition d = decompose(f13, t13, 3);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        std::vector<Elem> fc(1 + rng() % 8);
        for (auto& c : fc) c = rng() % 13;
        Poly f = make_poly(f13, fc);
        if (f.is_zero()) continue;
        FactoredForm a{&f13, 1, f, d};
        FactoredForm b{&f13, 1, reduce_mod_xl_minus_1(f, 3), d};
        CHECK(mapping_coeffs(a).A == mapping_coeffs(b).A);
    }
}

TEST_CASE("polynomial text round trip") {
    for (const char* s : {"2x^9+x^5+2x", "x^7+x^3", "x^3+2x", "x", "5", "12x^2+3"}) {
        Poly P = parse_poly(f13, s);
        CHECK(parse_poly(f13, format_poly(P)) == P);
    }
    CHECK(format_poly(parse_poly(f13, "2*x^9+x^5+2*x")) == "2x^9+x^5+2x");
    CHECK(format_poly(make_poly(f13, {})) == "0");
    CHECK_THROWS_AS(parse_poly(f13, "x^12"), MalformedInput);  // exponent >= q-1
    CHECK_THROWS_AS(parse_poly(f13, "x^"), MalformedInput);
    CHECK_THROWS_AS(parse_poly(f13, ""), MalformedInput);

    Field f9 = Field::make(3, 2);
    Poly P = parse_poly(f9, "1,2*x^3+0,1*x+2");
    CHECK(P.coeff(3) == f9.from_coords({1, 2}));
    CHECK(P.coeff(1) == f9.from_coords({0, 1}));
    CHECK(P.coeff(0) == 2);
    CHECK(parse_poly(f9, format_poly(P)) == P);
}
