#pragma once

#include <string>
#include <vector>

#include "cycloperm/field.hpp"

namespace cycloperm {

/// Polynomial over a field, coeffs[i] = coefficient of x^i, trailing zeros
/// trimmed (zero polynomial = empty list).
struct Poly {
    const Field* field = nullptr;
    std::vector<Elem> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    Elem coeff(size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }

    bool operator==(const Poly& o) const { return coeffs == o.coeffs; }
};

Poly make_poly(const Field& f, std::vector<Elem> coeffs);

Elem eval(const Poly& p, Elem x);

/// q-1 = l*s with xi = gamma^s, a primitive l-th root of unity.
struct Decomposition {
    u64 l = 0;
    u64 s = 0;
    Elem xi = 0;
};

Decomposition decompose(const Field& f, const DlogTable& table, u64 l);

/// P(x) = x^r * f(x^s), P(0) = 0, 0 < r < q-1.
struct FactoredForm {
    const Field* field = nullptr;
    u64 r = 0;
    Poly f;
    Decomposition decomp;
};

/// Recovers (r, f) from P for the given decomposition: r is the smallest
/// exponent with nonzero coefficient; every other nonzero exponent must be
/// congruent to r mod s.
FactoredForm extract_factored(const Poly& P, const Decomposition& d);

Poly expand(const FactoredForm& ff);

/// Branch constants A_i = f(xi^i), i = 0..l-1.
struct MappingCoeffs {
    std::vector<Elem> A;
};

MappingCoeffs mapping_coeffs(const FactoredForm& ff);

/// Coset label of nonzero x: index_of(x) mod l.
u64 coset_of(const DlogTable& table, const Decomposition& d, Elem x);

/// The r-th order cyclotomic mapping: 0 -> 0, x in C_i -> A_i * x^r.
Elem cyclotomic_map_eval(const MappingCoeffs& mc, u64 r, const Field& f,
                         const DlogTable& table, const Decomposition& d, Elem x);

/// Checks x^r f(x^s) == the cyclotomic mapping at every point of F_q.
bool lemma_rela_check(const FactoredForm& ff, const DlogTable& table);

/// f reduced mod x^l - 1 (exponents folded mod l).
Poly reduce_mod_xl_minus_1(const Poly& f, u64 l);

/// Text format: '+'-separated terms "c*x^e" ("2x^9+x^5+2x"); omitted
/// coefficient = 1, omitted exponent = 1, bare constant = exponent 0.
/// Exponents >= q-1 are rejected as MalformedInput.
Poly parse_poly(const Field& f, const std::string& text);

std::string format_poly(const Poly& p);

std::vector<u64> divisors(u64 n);

}  // namespace cycloperm
