#include "cycloperm/criteria.hpp"

#include <algorithm>
#include <numeric>

namespace cycloperm {

namespace {

long long mod_ll(long long x, long long n) {
    long long r = x % n;
    return r < 0 ? r + n : r;
}

nlohmann::ordered_json pair_witness(const std::optional<std::pair<u64, u64>>& w) {
    if (!w) return nullptr;
    return nlohmann::ordered_json::array({w->first, w->second});
}

// Sum of Ind(A_i) mod q-1; requires all A_i nonzero.
u64 index_of_product(const MappingCoeffs& mc, const DlogTable& table) {
    u64 acc = 0;
    for (Elem a : mc.A) acc = (acc + table.index_of(a)) % table.qm1();
    return acc;
}

bool all_nonzero(const MappingCoeffs& mc) {
    return std::all_of(mc.A.begin(), mc.A.end(), [](Elem a) { return a != 0; });
}

}  // namespace

const Condition* VerdictReport::find(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

nlohmann::ordered_json VerdictReport::to_json() const {
    nlohmann::ordered_json j;
    j["polynomial"] = polynomial;
    j["field"] = field;
    j["l"] = l;
    j["r"] = r;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : conditions) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["ref"] = c.ref;
        cj["holds"] = c.holds;
        cj["witness"] = c.witness;
        arr.push_back(std::move(cj));
    }
    j["conditions"] = std::move(arr);
    if (oracle)
        j["oracle"] = *oracle;
    else
        j["oracle"] = nullptr;
    j["consistent"] = consistent;
    return j;
}

namespace {

// Witness policy: the two smallest preimages of the smallest colliding
// image value.
class CollisionTracker {
public:
    explicit CollisionTracker(u64 q) : seen_by_(q, 0), seen_(q, false) {}

    void record(Elem x, Elem y) {
        if (seen_[y]) {
            if (best_ == kNone || y < best_) {
                best_ = y;
                pair_ = {static_cast<Elem>(seen_by_[y]), x};
            }
            return;
        }
        seen_[y] = true;
        seen_by_[y] = static_cast<u32>(x);
    }

    OracleResult finish() const {
        if (best_ == kNone) return OracleResult{true, std::nullopt};
        return OracleResult{false, pair_};
    }

private:
    static constexpr u64 kNone = ~0ull;
    std::vector<u32> seen_by_;
    std::vector<bool> seen_;
    u64 best_ = kNone;
    std::pair<Elem, Elem> pair_{};
};

}  // namespace

OracleResult oracle_is_permutation(const Poly& P, u64 max_q) {
    const Field& f = *P.field;
    const u64 q = f.q();
    if (q > max_q)
        throw FieldTooLarge("oracle over q = " + std::to_string(q) + " exceeds budget");
    CollisionTracker tracker(q);
    for (Elem x = 0; x < q; ++x) tracker.record(x, eval(P, x));
    return tracker.finish();
}

OracleResult oracle_factored(const FactoredForm& ff, const DlogTable& table) {
    const Field& f = *ff.field;
    const u64 q = f.q();
    const long long qm1 = static_cast<long long>(q - 1);
    CollisionTracker tracker(q);
    tracker.record(0, 0);  // P(0) = 0
    for (long long t = 0; t < qm1; ++t) {
        Elem x = table.power_of(t);
        Elem fx = eval(ff.f, table.power_of(t * static_cast<long long>(ff.decomp.s) % qm1));
        Elem y = fx == 0 ? 0 : f.mul(fx, table.power_of(t * static_cast<long long>(ff.r) % qm1));
        tracker.record(x, y);
    }
    return tracker.finish();
}

VerdictReport nec_conditions(const FactoredForm& ff, const MappingCoeffs& mc,
                             const DlogTable& table) {
    const Decomposition& d = ff.decomp;
    VerdictReport rep;
    rep.field = ff.field->describe();
    rep.l = d.l;
    rep.r = ff.r;

    Condition c1{"nec.gcd", "gcd(r,s) = 1", gcd_u64(ff.r, d.s) == 1, nullptr};
    if (!c1.holds) c1.witness = gcd_u64(ff.r, d.s);
    rep.conditions.push_back(std::move(c1));

    Condition c2{"nec.nonzero", "A_i = f(xi^i) != 0 for all i", true, nullptr};
    for (u64 i = 0; i < mc.A.size(); ++i) {
        if (mc.A[i] == 0) {
            c2.holds = false;
            c2.witness = i;
            break;
        }
    }
    bool nonzero = c2.holds;
    rep.conditions.push_back(std::move(c2));

    Condition c3{"nec.index_div", "l | 2*Ind(A_0 A_1 ... A_{l-1})", false, nullptr};
    if (!nonzero) {
        c3.witness = "ZeroCoefficient";
    } else {
        u64 ind = index_of_product(mc, table);
        c3.holds = (2 * ind) % d.l == 0;
        if (!c3.holds) c3.witness = ind;
    }
    rep.conditions.push_back(std::move(c3));
    return rep;
}

PairCheck cond_index_pairwise(const MappingCoeffs& mc, u64 r, const DlogTable& table,
                              const Decomposition& d) {
    if (!all_nonzero(mc)) throw ZeroCoefficient("index pairwise condition needs all A_i != 0");
    const long long l = static_cast<long long>(d.l);
    for (u64 i = 0; i < d.l; ++i) {
        long long ii = static_cast<long long>(table.index_of(mc.A[i]));
        for (u64 j = i + 1; j < d.l; ++j) {
            long long ij = static_cast<long long>(table.index_of(mc.A[j]));
            long long lhs = mod_ll(ii - ij, l);
            long long rhs = mod_ll(static_cast<long long>(r) * (static_cast<long long>(j) -
                                                               static_cast<long long>(i)),
                                   l);
            if (lhs == rhs) return PairCheck{false, std::make_pair(i, j)};
        }
    }
    return PairCheck{true, std::nullopt};
}

PairCheck cond_suff_index(const MappingCoeffs& mc, u64 r, const DlogTable& table,
                          const Decomposition& d) {
    if (!all_nonzero(mc)) throw ZeroCoefficient("sufficient condition needs all A_i != 0");
    const long long l = static_cast<long long>(d.l);
    long long total = static_cast<long long>(index_of_product(mc, table));
    if (mod_ll(2 * total, l) != 0)
        throw PreconditionUnmet("l | 2*Ind(prod A_i) fails; fall back to the pairwise condition");
    for (u64 i = 0; i < d.l; ++i) {
        long long ii = static_cast<long long>(table.index_of(mc.A[i]));
        for (u64 j = i + 1; j < d.l; ++j) {
            long long ij = static_cast<long long>(table.index_of(mc.A[j]));
            // Ind(A_0...A_{i-1} A_{i+1}...A_j^2...A_{l-1}) = total - Ind(A_i) + Ind(A_j)
            long long lhs = mod_ll(2 * (total - ii + ij), l);
            long long rhs = mod_ll(2 * static_cast<long long>(r) *
                                       (static_cast<long long>(i) - static_cast<long long>(j)),
                                   l);
            if (lhs == rhs) return PairCheck{false, std::make_pair(i, j)};
        }
    }
    return PairCheck{true, std::nullopt};
}

PairCheck cond_coset_distinct(const MappingCoeffs& mc, u64 r, const DlogTable& table,
                              const Decomposition& d) {
    if (!all_nonzero(mc)) throw ZeroCoefficient("coset condition needs all A_i != 0");
    std::vector<u64> label(d.l);
    for (u64 i = 0; i < d.l; ++i)
        label[i] = (table.index_of(mc.A[i]) + i * r) % d.l;
    std::vector<long long> first_at(d.l, -1);
    for (u64 i = 0; i < d.l; ++i) {
        if (first_at[label[i]] >= 0)
            return PairCheck{false, std::make_pair(static_cast<u64>(first_at[label[i]]), i)};
        first_at[label[i]] = static_cast<long long>(i);
    }
    return PairCheck{true, std::nullopt};
}

bool cond_distinct_reps(const MappingCoeffs& mc, u64 r, const Field& f, const DlogTable& table,
                        const Decomposition& d) {
    if (!all_nonzero(mc)) throw ZeroCoefficient("representative condition needs all A_i != 0");
    std::vector<bool> hit(d.l, false);
    for (u64 i = 0; i < d.l; ++i) {
        Elem rep = f.mul(mc.A[i], table.power_of(static_cast<long long>(i * r)));
        u64 coset = coset_of(table, d, rep);
        if (hit[coset]) return false;
        hit[coset] = true;
    }
    return true;
}

bool cond_roots_unity(const MappingCoeffs& mc, u64 r, const Field& f, const Decomposition& d) {
    if (!all_nonzero(mc)) throw ZeroCoefficient("roots-of-unity condition needs all A_i != 0");
    std::vector<Elem> vals(d.l);
    for (u64 i = 0; i < d.l; ++i) {
        Elem v = f.mul(f.pow(mc.A[i], static_cast<long long>(d.s)),
                       f.pow(d.xi, static_cast<long long>(i * r)));
        if (f.pow(v, static_cast<long long>(d.l)) != f.one()) return false;
        vals[i] = v;
    }
    std::sort(vals.begin(), vals.end());
    return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

SumCheck cond_power_sums(const MappingCoeffs& mc, u64 r, const Field& f, const Decomposition& d) {
    if (!all_nonzero(mc)) throw ZeroCoefficient("power-sum condition needs all A_i != 0");
    const u64 qm1 = f.q() - 1;
    for (u64 c = 1; c < d.l; ++c) {
        Elem sum = 0;
        for (u64 i = 0; i < d.l; ++i) {
            u64 xi_exp = c % qm1 * (r % qm1) % qm1 * (i % qm1) % qm1;
            Elem term = f.mul(f.pow(d.xi, static_cast<long long>(xi_exp)),
                              f.pow(mc.A[i], static_cast<long long>(c * d.s % qm1)));
            sum = f.add(sum, term);
        }
        if (sum != 0) return SumCheck{false, c};
    }
    return SumCheck{true, std::nullopt};
}

EquivalenceOutcome evaluate_equivalence(const FactoredForm& ff, const MappingCoeffs& mc,
                                        const DlogTable& table, u64 oracle_budget) {
    const Field& f = *ff.field;
    const Decomposition& d = ff.decomp;
    EquivalenceOutcome out;
    out.gcd_ok = gcd_u64(ff.r, d.s) == 1;
    out.nonzero_ok = all_nonzero(mc);
    out.index_div_ok =
        out.nonzero_ok && 2 * index_of_product(mc, table) % d.l == 0;

    if (f.q() <= oracle_budget) out.oracle = oracle_factored(ff, table).is_pp;

    if (!out.gcd_ok || !out.nonzero_ok) {
        // necessity: a PP cannot fail these clauses
        out.consistent = !out.oracle || !*out.oracle;
        out.is_pp = false;
        return out;
    }

    out.coset_distinct = cond_coset_distinct(mc, ff.r, table, d);
    out.index_pairwise = cond_index_pairwise(mc, ff.r, table, d);
    if (out.index_div_ok) out.suff_index = cond_suff_index(mc, ff.r, table, d);
    out.distinct_reps = cond_distinct_reps(mc, ff.r, f, table, d);
    out.roots_unity = cond_roots_unity(mc, ff.r, f, d);
    out.power_sums = cond_power_sums(mc, ff.r, f, d);

    bool v = out.coset_distinct->holds;
    bool consistent = out.index_pairwise->holds == v && *out.distinct_reps == v &&
                      *out.roots_unity == v && out.power_sums->holds == v;
    if (out.suff_index) {
        // doubling is invertible mod l only for odd l; for even l the
        // index condition stays sufficient but is no longer necessary
        if (d.l % 2 == 1) consistent = consistent && out.suff_index->holds == v;
        else if (out.suff_index->holds) consistent = consistent && v;
    }
    if (out.oracle) consistent = consistent && *out.oracle == v;
    // a failing index-divisibility hypothesis already forces non-PP
    if (!out.index_div_ok && v) consistent = false;
    out.consistent = consistent;
    out.is_pp = out.oracle ? *out.oracle : (out.index_div_ok && v);
    return out;
}

VerdictReport full_equivalence(const FactoredForm& ff, const DlogTable& table, u64 oracle_budget) {
    MappingCoeffs mc = mapping_coeffs(ff);
    EquivalenceOutcome out = evaluate_equivalence(ff, mc, table, oracle_budget);
    VerdictReport rep = nec_conditions(ff, mc, table);
    rep.polynomial = format_poly(expand(ff));

    auto push = [&](std::string name, std::string ref, bool holds,
                    nlohmann::ordered_json witness) {
        rep.conditions.push_back({std::move(name), std::move(ref), holds, std::move(witness)});
    };
    if (out.coset_distinct)
        push("eq.coset_distinct", "A_i C_{ir} != A_j C_{jr} for i < j", out.coset_distinct->holds,
             pair_witness(out.coset_distinct->witness));
    if (out.index_pairwise)
        push("eq.index_pairwise", "Ind(A_i/A_j) != r(j-i) (mod l)", out.index_pairwise->holds,
             pair_witness(out.index_pairwise->witness));
    if (out.suff_index)
        push("eq.suff_index", "2*Ind(A_0..A_j^2..A_{l-1}) != 2r(i-j) (mod l)",
             out.suff_index->holds, pair_witness(out.suff_index->witness));
    if (out.distinct_reps)
        push("eq.distinct_reps", "{A_i gamma^{ir}} is a system of distinct representatives",
             *out.distinct_reps, nullptr);
    if (out.roots_unity)
        push("eq.roots_unity", "{A_i^s xi^{ir}} = mu_l", *out.roots_unity, nullptr);
    if (out.power_sums)
        push("eq.power_sums", "sum_i xi^{cri} A_i^{cs} = 0 for c = 1..l-1", out.power_sums->holds,
             out.power_sums->witness ? nlohmann::ordered_json(*out.power_sums->witness)
                                     : nlohmann::ordered_json(nullptr));

    rep.oracle = out.oracle;
    rep.consistent = out.consistent;
    rep.is_pp = out.is_pp;
    return rep;
}

std::pair<bool, VerdictReport> thm_lab_check(const FactoredForm& ff, const DlogTable& table) {
    const Field& f = *ff.field;
    const Decomposition& d = ff.decomp;
    if (d.l != 3) throw PreconditionUnmet("l = 3 required");

    Poly fr = reduce_mod_xl_minus_1(ff.f, 3);
    Elem c = fr.coeff(0), b = fr.coeff(1), a = fr.coeff(2);
    // a^2 + b^2 + c^2 - ab - bc - ca
    Elem qform = f.sub(f.add(f.add(f.mul(a, a), f.mul(b, b)), f.mul(c, c)),
                       f.add(f.add(f.mul(a, b), f.mul(b, c)), f.mul(c, a)));
    if (qform != f.one())
        throw PreconditionUnmet("quadratic form a^2+b^2+c^2-ab-bc-ca != 1");

    VerdictReport rep;
    rep.polynomial = format_poly(expand(ff));
    rep.field = f.describe();
    rep.l = d.l;
    rep.r = ff.r;

    MappingCoeffs mc = mapping_coeffs(ff);
    bool nonzero = all_nonzero(mc);
    rep.conditions.push_back({"lab.nonzero", "A_i != 0 for all i", nonzero, nullptr});
    if (!nonzero) {
        rep.is_pp = false;
        return {false, rep};
    }

    bool gcd_ok = gcd_u64(ff.r, d.s) == 1;
    bool a0s = f.pow(mc.A[0], static_cast<long long>(d.s)) == f.one();
    u64 ind_a0 = table.index_of(mc.A[0]);
    bool div3 = ind_a0 % 3 == 0;
    Elem a2sq = f.mul(mc.A[2], mc.A[2]);
    u64 ind_a2sq = table.index_of(a2sq);
    bool notdiv3 = (ff.r + ind_a2sq) % 3 != 0;

    rep.conditions.push_back({"lab.gcd", "gcd(r,s) = 1", gcd_ok, nullptr});
    rep.conditions.push_back({"lab.a0_power", "A_0^s = 1", a0s, nullptr});
    rep.conditions.push_back({"lab.a0_index", "3 | Ind(A_0)", div3, nlohmann::ordered_json(ind_a0)});
    rep.conditions.push_back(
        {"lab.a2_index", "3 does not divide r + Ind(A_2^2)", notdiv3,
         nlohmann::ordered_json(ind_a2sq)});

    bool pp = gcd_ok && a0s && div3 && notdiv3;
    rep.is_pp = pp;
    return {pp, rep};
}

bool trinomial_family_f13(u64 r) {
    if (r == 0 || r >= 12) throw PreconditionUnmet("0 < r < 12 required");
    static const Field f13 = Field::make(13, 1);
    static const DlogTable table(f13, find_primitive(f13));
    std::vector<Elem> coeffs(r + 9, 0);
    coeffs[r] = 2;
    coeffs[r + 4] = 1;
    coeffs[r + 8] = 2;
    Poly P = make_poly(f13, std::move(coeffs));
    FactoredForm ff = extract_factored(P, decompose(f13, table, 3));
    return thm_lab_check(ff, table).first;
}

Poly binomial_poly(const BinomialParams& bp) {
    const Field& f = *bp.field;
    std::vector<Elem> c(bp.r + bp.e * bp.decomp.s + 1, 0);
    c[bp.r] = 1;
    c[bp.r + bp.e * bp.decomp.s] = 1;
    return make_poly(f, std::move(c));
}

FactoredForm binomial_factored(const BinomialParams& bp) {
    const Field& f = *bp.field;
    std::vector<Elem> fc(bp.e + 1, 0);
    fc[0] = 1;
    fc[bp.e] = 1;  // f(x) = x^e + 1
    return FactoredForm{&f, bp.r, make_poly(f, std::move(fc)), bp.decomp};
}

namespace {

void require_binomial_base(const BinomialParams& bp, bool need_l3, bool need_odd_l) {
    const Field& f = *bp.field;
    if (f.p() == 2) throw PreconditionUnmet("odd characteristic required");
    if (need_l3 && bp.decomp.l != 3) throw PreconditionUnmet("l = 3 required");
    if (need_odd_l && (bp.decomp.l < 3 || bp.decomp.l % 2 == 0))
        throw PreconditionUnmet("odd l >= 3 required");
    if (gcd_u64(bp.e, bp.decomp.l) != 1) throw PreconditionUnmet("gcd(e,l) = 1 required");
}

Elem branch_constant(const BinomialParams& bp, u64 k) {
    const Field& f = *bp.field;
    return f.add(f.pow(bp.decomp.xi, static_cast<long long>(bp.e * k)), f.one());
}

}  // namespace

VerdictReport binomial_necessary(const BinomialParams& bp, const DlogTable& table) {
    (void)table;
    require_binomial_base(bp, false, true);
    const Field& f = *bp.field;
    const u64 l = bp.decomp.l, s = bp.decomp.s;

    VerdictReport rep;
    rep.polynomial = format_poly(binomial_poly(bp));
    rep.field = f.describe();
    rep.l = l;
    rep.r = bp.r;

    rep.conditions.push_back({"bn.gcd", "gcd(r,s) = 1", gcd_u64(bp.r, s) == 1, nullptr});
    Elem two = f.from_integer(2);
    rep.conditions.push_back(
        {"bn.two_power", "2^s = 1 in F_q", f.pow(two, static_cast<long long>(s)) == f.one(),
         nullptr});
    rep.conditions.push_back(
        {"bn.residue", "l does not divide 2r+es", (2 * bp.r + bp.e * s) % l != 0, nullptr});
    rep.is_pp = false;  // necessary only; final status comes from elsewhere
    return rep;
}

bool binomial_l3_iff(const BinomialParams& bp, const DlogTable& table) {
    require_binomial_base(bp, true, false);
    if (gcd_u64(bp.r, bp.decomp.s) != 1) return false;
    // coset labels Ind(A_i) + i*r must be pairwise distinct mod 3; the
    // closed-form clause list misses permutations in the 3 | r+es case
    u64 label[3];
    for (u64 i = 0; i < 3; ++i) {
        Elem ai = branch_constant(bp, i);
        if (ai == 0) return false;
        label[i] = (table.index_of(ai) + i * bp.r) % 3;
    }
    return label[0] != label[1] && label[0] != label[2] && label[1] != label[2];
}

bool binomial_residue_case(const BinomialParams& bp, const DlogTable& table) {
    require_binomial_base(bp, false, true);
    const u64 l = bp.decomp.l, s = bp.decomp.s;
    if (s % 2 != 0) throw PreconditionUnmet("even s required");
    if ((bp.r + bp.e * s) % l != 0) throw PreconditionUnmet("l | r+es required");
    const Field& f = *bp.field;

    if (gcd_u64(bp.r, s) != 1) return false;
    Elem two = f.from_integer(2);
    if (f.pow(two, static_cast<long long>(s)) != f.one()) return false;
    if (bp.r % l == 0) return false;

    std::vector<Elem> powers(l - 1);
    for (u64 k = 1; k < l; ++k) {
        Elem ak = branch_constant(bp, k);
        if (ak == 0) return false;
        Elem v = f.pow(ak, static_cast<long long>(s));
        if (f.pow(v, static_cast<long long>(l)) != f.one()) return false;
        powers[k - 1] = v;
    }
    std::sort(powers.begin(), powers.end());
    if (std::adjacent_find(powers.begin(), powers.end()) != powers.end()) return false;

    u64 ind2 = table.index_of(two) % l;
    for (u64 k = 1; k < l; ++k) {
        if ((table.index_of(branch_constant(bp, k)) + k * bp.r) % l == ind2) return false;
    }
    return true;
}

bool lemma_lem_check(const BinomialParams& bp, u64 i, u64 j) {
    const Field& f = *bp.field;
    const u64 l = bp.decomp.l;
    if (i == 0 || j == 0 || i >= l || j >= l || i == j)
        throw PreconditionUnmet("1 <= i != j <= l-1 required");
    Elem ai = branch_constant(bp, i), aj = branch_constant(bp, j);
    Elem ali = branch_constant(bp, l - i), alj = branch_constant(bp, l - j);
    if (aj == 0 || alj == 0) throw ZeroDenominator("A_j or A_{l-j} vanishes");
    Elem lhs = f.mul(f.pow(bp.decomp.xi, static_cast<long long>(bp.e) *
                                             (static_cast<long long>(j) - static_cast<long long>(i))),
                     f.mul(ai, f.inv(aj)));
    Elem rhs = f.mul(ali, f.inv(alj));
    return lhs == rhs;
}

bool prop_nonexistence_scan(u64 p) {
    if (p == 2 || !is_prime(p)) throw PreconditionUnmet("odd prime required");
    if ((p - 1) % 3 != 0) throw PreconditionUnmet("3 | p-1 required");
    const Field f = Field::make(p, 1);
    const u64 s = (p - 1) / 3;
    Elem two = f.from_integer(2);
    if (f.pow(two, static_cast<long long>(s)) == f.one())
        throw HypothesisFails("p | 2^{(p-1)/3}-1: permutation binomials may exist");
    for (u64 r = 1; r < p - 1; ++r) {
        if (gcd_u64(r, s) != 1) continue;
        for (u64 e = 1; e <= 2; ++e) {
            std::vector<Elem> c(r + e * s + 1, 0);
            c[r] = 1;
            c[r + e * s] = 1;
            Poly P = make_poly(f, std::move(c));
            if (oracle_is_permutation(P).is_pp) return false;
        }
    }
    return true;
}

}  // namespace cycloperm
