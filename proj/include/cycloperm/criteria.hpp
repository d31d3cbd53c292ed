#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cycloperm/poly.hpp"

namespace cycloperm {

struct Condition {
    std::string name;
    std::string ref;  // the formula the condition checks
    bool holds = false;
    nlohmann::ordered_json witness;  // null when none
};

struct VerdictReport {
    std::string polynomial;
    std::string field;
    u64 l = 0;
    u64 r = 0;
    std::vector<Condition> conditions;
    std::optional<bool> oracle;
    bool consistent = true;
    bool is_pp = false;

    const Condition* find(const std::string& name) const;
    nlohmann::ordered_json to_json() const;
};

struct OracleResult {
    bool is_pp = false;
    std::optional<std::pair<Elem, Elem>> collision;  // x != y with P(x) = P(y)
};

/// Ground truth: Horner-evaluates P at every element of F_q and checks the
/// image for q distinct values.
OracleResult oracle_is_permutation(const Poly& P, u64 max_q = Field::kDefaultMaxQ);

/// Same exhaustive bijection test, evaluating P(x) = x^r f(x^s) in factored
/// form with table-assisted powers. O(q * deg f) instead of O(q * deg P).
OracleResult oracle_factored(const FactoredForm& ff, const DlogTable& table);

struct PairCheck {
    bool holds = false;
    std::optional<std::pair<u64, u64>> witness;  // first violating (i, j)
};

struct SumCheck {
    bool holds = false;
    std::optional<u64> witness;  // first failing c
};

/// The three necessary conditions: gcd(r,s) = 1, all A_i nonzero, and
/// l | 2*Ind(A_0 A_1 ... A_{l-1}).
VerdictReport nec_conditions(const FactoredForm& ff, const MappingCoeffs& mc,
                             const DlogTable& table);

/// Ind(A_i/A_j) != r(j-i) (mod l) for all 0 <= i < j < l.
PairCheck cond_index_pairwise(const MappingCoeffs& mc, u64 r, const DlogTable& table,
                              const Decomposition& d);

/// 2*Ind(A_0...A_{i-1} A_{i+1}...A_j^2...A_{l-1}) != 2r(i-j) (mod l) for all
/// i < j. Requires l | 2*Ind(prod A_i); throws PreconditionUnmet otherwise.
/// Equivalent to the permutation property only for odd l; for even l the
/// doubled congruence loses a bit and the check is merely sufficient.
PairCheck cond_suff_index(const MappingCoeffs& mc, u64 r, const DlogTable& table,
                          const Decomposition& d);

/// Coset labels Ind(A_i) + i*r (mod l) pairwise distinct.
PairCheck cond_coset_distinct(const MappingCoeffs& mc, u64 r, const DlogTable& table,
                              const Decomposition& d);

/// {A_0, A_1 gamma^r, ..., A_{l-1} gamma^{(l-1)r}} hits each coset of
/// F_q*/C_0 exactly once. Computed through field arithmetic, independently
/// of cond_coset_distinct.
bool cond_distinct_reps(const MappingCoeffs& mc, u64 r, const Field& f, const DlogTable& table,
                        const Decomposition& d);

/// {A_i^s xi^{ir}} is the full set of l distinct l-th roots of unity.
bool cond_roots_unity(const MappingCoeffs& mc, u64 r, const Field& f, const Decomposition& d);

/// sum_i xi^{cri} A_i^{cs} = 0 for every c = 1..l-1.
SumCheck cond_power_sums(const MappingCoeffs& mc, u64 r, const Field& f, const Decomposition& d);

/// Raw outcome of the full criteria battery, allocation-light for use in
/// tight sweep loops. Equivalent conditions are only evaluated when the
/// gcd and nonzero clauses hold; the sufficiency check additionally needs
/// the index-divisibility hypothesis.
struct EquivalenceOutcome {
    bool gcd_ok = false;
    bool nonzero_ok = false;
    bool index_div_ok = false;
    std::optional<PairCheck> coset_distinct;
    std::optional<PairCheck> index_pairwise;
    std::optional<PairCheck> suff_index;
    std::optional<bool> distinct_reps;
    std::optional<bool> roots_unity;
    std::optional<SumCheck> power_sums;
    std::optional<bool> oracle;
    bool consistent = true;
    bool is_pp = false;
};

EquivalenceOutcome evaluate_equivalence(const FactoredForm& ff, const MappingCoeffs& mc,
                                        const DlogTable& table,
                                        u64 oracle_budget = Field::kDefaultMaxQ);

/// Runs the necessary conditions, then (when they hold) every equivalent
/// criterion plus the exhaustive oracle, cross-checking all verdicts.
VerdictReport full_equivalence(const FactoredForm& ff, const DlogTable& table,
                               u64 oracle_budget = Field::kDefaultMaxQ);

/// l = 3 criterion for f = ax^2+bx+c (mod x^3-1) with
/// a^2+b^2+c^2-ab-bc-ca = 1: PP iff gcd(r,s)=1, A_0^s = 1, 3 | Ind(A_0) and
/// 3 does not divide r + Ind(A_2^2).
std::pair<bool, VerdictReport> thm_lab_check(const FactoredForm& ff, const DlogTable& table);

/// Is 2x^{r+8}+x^{r+4}+2x^r a permutation of F_13?  (0 < r < 12)
bool trinomial_family_f13(u64 r);

/// x^r(x^{es}+1) over F_q with q-1 = l*s.
struct BinomialParams {
    const Field* field = nullptr;
    u64 r = 0;
    u64 e = 0;
    Decomposition decomp;
};

Poly binomial_poly(const BinomialParams& bp);
FactoredForm binomial_factored(const BinomialParams& bp);

/// Necessary: gcd(r,s) = 1, (1+1)^s = 1 in F_q, l does not divide 2r+es.
/// Requires odd l >= 3, gcd(l,e) = 1, odd p.
VerdictReport binomial_necessary(const BinomialParams& bp, const DlogTable& table);

/// l = 3 characterization: PP iff gcd(r,s)=1 and the coset labels
/// Ind(A_i) + i*r (mod 3) of A_i = xi^{ei}+1 are pairwise distinct.
/// Exact; the closed-form clause list (3 not dividing any of 2r+es, r+es,
/// r+2es) is only sufficient, missing permutations when 3 | r+es.
bool binomial_l3_iff(const BinomialParams& bp, const DlogTable& table);

/// Case l | r+es (odd l >= 3, even s): PP iff gcd(r,s)=1, (1+1)^s = 1,
/// l does not divide r, the A_k^s (k=1..l-1) are distinct l-th roots of
/// unity, and Ind(A_k)+kr != Ind(2) (mod l) for k = 1..l-1.
bool binomial_residue_case(const BinomialParams& bp, const DlogTable& table);

/// Identity xi^{e(j-i)} A_i/A_j = A_{l-i}/A_{l-j} for 1 <= i != j <= l-1.
bool lemma_lem_check(const BinomialParams& bp, u64 i, u64 j);

/// For odd prime p with 3 | p-1 and p not dividing 2^{(p-1)/3}-1: confirms
/// by exhaustive oracle scan that no x^r(x^{e(p-1)/3}+1) with gcd(e,3)=1,
/// gcd(r,(p-1)/3)=1 permutes F_p. Throws HypothesisFails when
/// p | 2^{(p-1)/3}-1 (binomials may then exist, e.g. p = 31).
bool prop_nonexistence_scan(u64 p);

}  // namespace cycloperm
