#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cycloperm/criteria.hpp"

namespace cycloperm {

struct SweepSpec {
    enum class Mode { Binomial, TrinomialF13, GeneralCrossval };

    std::vector<std::string> fields;  // field description strings
    std::vector<u64> l_values;        // empty = every admissible divisor of q-1
    u64 r_min = 1;
    u64 r_max = 0;  // 0 = q-2
    u64 e_min = 1;
    u64 e_max = 2;
    Mode mode = Mode::Binomial;
    u64 sample_count = 0;
    u64 seed = 0;
    unsigned worker_count = 1;
    u64 max_q = Field::kDefaultMaxQ;
};

struct FindingRecord {
    std::string field;
    u64 l = 0;
    u64 s = 0;
    u64 r = 0;
    std::optional<u64> e;
    std::string polynomial;
    bool is_pp = false;
    VerdictReport verdict;
    std::optional<std::string> skipped;  // e.g. "SkippedBudget"

    nlohmann::ordered_json to_json() const;
};

/// Exhaustive x^r(x^{es}+1) sweep. Instances are enumerated in
/// (field, l, e, r) order; workers only change who computes what, never the
/// output order. e values are deduplicated by e mod l.
std::vector<FindingRecord> sweep_binomials(const SweepSpec& spec);

/// All r in 1..11 of 2x^{r+8}+x^{r+4}+2x^r over F_13; the l = 3 criterion
/// and the oracle are both recorded and cross-checked.
std::vector<FindingRecord> sweep_trinomials_f13();

struct CrossvalSummary {
    u64 instances = 0;
    u64 disagreements = 0;
    std::vector<FindingRecord> bad;  // every inconsistent instance
};

/// Seeded random (field, l, r, f) instances pushed through the full
/// equivalence check; any disagreement between criteria and oracle is an
/// implementation bug and is reported.
CrossvalSummary crossval_random(const SweepSpec& spec);

/// All prime-power fields 3 <= q <= limit.
std::vector<std::string> default_crossval_fields(u64 limit = 2048);

/// JSON Lines: one record per line, then one trailing summary object.
void write_jsonl(std::ostream& os, const std::vector<FindingRecord>& records);

}  // namespace cycloperm
