#include "cycloperm/search.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <ostream>
#include <random>
#include <thread>

namespace cycloperm {

nlohmann::ordered_json FindingRecord::to_json() const {
    nlohmann::ordered_json j;
    j["field"] = field;
    j["l"] = l;
    j["s"] = s;
    j["r"] = r;
    if (e)
        j["e"] = *e;
    else
        j["e"] = nullptr;
    j["polynomial"] = polynomial;
    j["is_pp"] = is_pp;
    if (skipped) {
        j["skipped"] = *skipped;
        j["conditions"] = nlohmann::ordered_json::array();
        j["oracle"] = nullptr;
        j["consistent"] = true;
        return j;
    }
    auto vj = verdict.to_json();
    j["conditions"] = vj["conditions"];
    j["oracle"] = vj["oracle"];
    j["consistent"] = vj["consistent"];
    return j;
}

namespace {

struct FieldCtx {
    Field field;
    std::unique_ptr<DlogTable> table;
};

FieldCtx make_ctx(const std::string& desc, u64 max_q) {
    FieldCtx ctx{Field::parse(desc), nullptr};
    if (ctx.field.q() <= max_q)
        ctx.table = std::make_unique<DlogTable>(ctx.field, find_primitive(ctx.field), max_q);
    return ctx;
}

template <typename Work>
void run_partitioned(size_t n, unsigned workers, Work&& work) {
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) work(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < n; i += workers) work(i);
        });
    }
    for (auto& t : pool) t.join();
}

// One binomial instance: necessary conditions, the strongest applicable
// certificate, and the exhaustive oracle.
FindingRecord eval_binomial(const FieldCtx& ctx, const Decomposition& d, u64 r, u64 e) {
    const Field& f = ctx.field;
    const DlogTable& table = *ctx.table;
    BinomialParams bp{&f, r, e, d};

    FindingRecord rec;
    rec.field = f.describe();
    rec.l = d.l;
    rec.s = d.s;
    rec.r = r;
    rec.e = e;
    rec.polynomial = format_poly(binomial_poly(bp));

    VerdictReport rep = binomial_necessary(bp, table);
    bool nec_ok = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                              [](const Condition& c) { return c.holds; });

    std::string cert_name;
    bool cert;
    if (d.l == 3) {
        cert_name = "cert.binomial_l3";
        cert = binomial_l3_iff(bp, table);
    } else if (d.s % 2 == 0 && (r + e * d.s) % d.l == 0) {
        cert_name = "cert.binomial_residue";
        cert = binomial_residue_case(bp, table);
    } else {
        cert_name = "cert.full_equivalence";
        cert = full_equivalence(binomial_factored(bp), table).is_pp;
    }
    rep.conditions.push_back({cert_name, "certifying criterion for this instance", cert, nullptr});

    bool oracle = oracle_factored(binomial_factored(bp), table).is_pp;
    rep.oracle = oracle;
    rep.consistent = cert == oracle && (!oracle || nec_ok);
    rep.is_pp = oracle;
    rep.polynomial = rec.polynomial;

    rec.is_pp = oracle;
    rec.verdict = std::move(rep);
    return rec;
}

}  // namespace

std::vector<FindingRecord> sweep_binomials(const SweepSpec& spec) {
    struct Instance {
        const FieldCtx* ctx;
        Decomposition d;
        u64 r, e;
    };
    std::vector<std::unique_ptr<FieldCtx>> ctxs;
    std::vector<FindingRecord> skipped_records;
    std::vector<Instance> instances;

    for (const auto& desc : spec.fields) {
        auto ctx = std::make_unique<FieldCtx>(make_ctx(desc, spec.max_q));
        const Field& f = ctx->field;
        if (!ctx->table) {
            FindingRecord rec;
            rec.field = f.describe();
            rec.skipped = "SkippedBudget";
            skipped_records.push_back(std::move(rec));
            continue;
        }
        if (f.p() == 2) continue;  // the binomial family needs odd characteristic
        const u64 qm1 = f.q() - 1;
        std::vector<u64> ls = spec.l_values;
        if (ls.empty()) ls = divisors(qm1);
        std::sort(ls.begin(), ls.end());
        for (u64 l : ls) {
            if (qm1 % l != 0 || l < 3 || l % 2 == 0) continue;  // filtered, not an error
            Decomposition d = decompose(f, *ctx->table, l);
            std::vector<bool> e_seen(l, false);
            u64 r_max = spec.r_max == 0 ? qm1 - 1 : std::min(spec.r_max, qm1 - 1);
            for (u64 e = spec.e_min; e <= spec.e_max; ++e) {
                if (gcd_u64(e, l) != 1) continue;
                if (e_seen[e % l]) continue;  // A_i depend on e only through e mod l
                e_seen[e % l] = true;
                for (u64 r = spec.r_min; r <= r_max; ++r)
                    instances.push_back({ctx.get(), d, r, e});
            }
        }
        ctxs.push_back(std::move(ctx));
    }

    std::vector<FindingRecord> out(instances.size());
    run_partitioned(instances.size(), spec.worker_count, [&](size_t i) {
        const auto& in = instances[i];
        out[i] = eval_binomial(*in.ctx, in.d, in.r, in.e);
    });
    out.insert(out.end(), std::make_move_iterator(skipped_records.begin()),
               std::make_move_iterator(skipped_records.end()));
    return out;
}

std::vector<FindingRecord> sweep_trinomials_f13() {
    const Field f13 = Field::make(13, 1);
    const DlogTable table(f13, find_primitive(f13));
    const Decomposition d = decompose(f13, table, 3);
    std::vector<FindingRecord> out;
    for (u64 r = 1; r <= 11; ++r) {
        std::vector<Elem> c(r + 9, 0);
        c[r] = 2;
        c[r + 4] = 1;
        c[r + 8] = 2;
        Poly P = make_poly(f13, std::move(c));
        FactoredForm ff = extract_factored(P, d);
        auto [thm, rep] = thm_lab_check(ff, table);
        bool oracle = oracle_is_permutation(P).is_pp;
        rep.oracle = oracle;
        rep.consistent = thm == oracle;
        rep.is_pp = oracle;

        FindingRecord rec;
        rec.field = "13";
        rec.l = 3;
        rec.s = 4;
        rec.r = r;
        rec.polynomial = format_poly(P);
        rec.is_pp = oracle;
        rec.verdict = std::move(rep);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<std::string> default_crossval_fields(u64 limit) {
    std::vector<std::string> out;
    for (u64 p = 2; p <= limit; ++p) {
        if (!is_prime(p)) continue;
        u64 q = p;
        unsigned m = 1;
        while (q <= limit) {
            if (q >= 3) {
                Field f = Field::make(p, m);
                out.push_back(f.describe());
            }
            if (q > limit / p) break;
            q *= p;
            ++m;
        }
    }
    return out;
}

CrossvalSummary crossval_random(const SweepSpec& spec) {
    struct Instance {
        const FieldCtx* ctx;
        Decomposition d;
        u64 r;
        std::vector<Elem> fc;
    };

    std::vector<std::unique_ptr<FieldCtx>> ctxs;
    for (const auto& desc : spec.fields) {
        auto ctx = std::make_unique<FieldCtx>(make_ctx(desc, spec.max_q));
        if (ctx->table && ctx->field.q() >= 4) ctxs.push_back(std::move(ctx));
    }

    CrossvalSummary summary;
    if (ctxs.empty() || spec.sample_count == 0) return summary;

    // Instances are drawn from a single seeded stream so the set is fixed
    // before any parallel evaluation.
    std::mt19937_64 rng(spec.seed);
    auto draw = [&rng](u64 bound) { return rng() % bound; };

    std::vector<Instance> instances;
    instances.reserve(spec.sample_count);
    for (u64 n = 0; n < spec.sample_count; ++n) {
        const FieldCtx& ctx = *ctxs[draw(ctxs.size())];
        const Field& f = ctx.field;
        const u64 qm1 = f.q() - 1;
        auto divs = divisors(qm1);
        std::vector<u64> small;
        for (u64 l : divs)
            if (l <= 64) small.push_back(l);
        u64 l = small[draw(small.size())];
        Decomposition d = decompose(f, *ctx.table, l);
        u64 r = 1 + draw(qm1 - 1);
        std::vector<Elem> fc(l);
        bool nonzero;
        do {
            nonzero = false;
            for (auto& c : fc) {
                c = draw(f.q());
                if (c != 0) nonzero = true;
            }
        } while (!nonzero);
        instances.push_back({&ctx, d, r, std::move(fc)});
    }

    std::vector<char> bad_flags(instances.size(), 0);
    std::vector<FindingRecord> recs(instances.size());
    run_partitioned(instances.size(), spec.worker_count, [&](size_t i) {
        const auto& in = instances[i];
        const Field& f = in.ctx->field;
        FactoredForm ff{&f, in.r, make_poly(f, in.fc), in.d};
        VerdictReport rep = full_equivalence(ff, *in.ctx->table);
        if (!rep.consistent) {
            bad_flags[i] = 1;
            FindingRecord rec;
            rec.field = f.describe();
            rec.l = in.d.l;
            rec.s = in.d.s;
            rec.r = in.r;
            rec.polynomial = rep.polynomial;
            rec.is_pp = rep.is_pp;
            rec.verdict = std::move(rep);
            recs[i] = std::move(rec);
        }
    });
    summary.instances = instances.size();
    for (size_t i = 0; i < instances.size(); ++i) {
        if (bad_flags[i]) {
            ++summary.disagreements;
            summary.bad.push_back(std::move(recs[i]));
        }
    }
    return summary;
}

void write_jsonl(std::ostream& os, const std::vector<FindingRecord>& records) {
    u64 pp_count = 0, skipped = 0;
    for (const auto& rec : records) {
        os << rec.to_json().dump() << '\n';
        if (rec.is_pp) ++pp_count;
        if (rec.skipped) ++skipped;
    }
    nlohmann::ordered_json summary;
    summary["summary"] = true;
    summary["records"] = records.size();
    summary["pp_count"] = pp_count;
    summary["skipped"] = skipped;
    os << summary.dump() << '\n';
}

}  // namespace cycloperm
