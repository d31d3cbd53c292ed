#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycloperm/errors.hpp"

namespace cycloperm {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

/// A field element, packed as sum_i coords[i] * p^i with coords in [0,p).
/// Element 0 is the zero element, element 1 the multiplicative identity.
using Elem = u64;

bool is_prime(u64 n);
std::vector<u64> distinct_prime_factors(u64 n);
u64 gcd_u64(u64 a, u64 b);

/// F_{p^m} with a fixed monic irreducible modulus of degree m.
/// Immutable after construction; safe to share across threads.
class Field {
public:
    static constexpr u64 kDefaultMaxQ = 1ull << 22;

    /// Builds F_{p^m}. When no modulus is given and m > 1, picks the
    /// lexicographically smallest monic irreducible of degree m over F_p
    /// (coefficients compared constant-term-first).
    static Field make(u64 p, unsigned m,
                      std::optional<std::vector<u64>> modulus = std::nullopt);

    /// Parses "13" (prime field) or "3^2/1,0,1" (extension with modulus
    /// coefficients, constant term first).
    static Field parse(const std::string& desc);

    u64 p() const { return p_; }
    unsigned m() const { return m_; }
    u64 q() const { return q_; }
    const std::vector<u64>& modulus() const { return modulus_; }
    std::string describe() const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    std::vector<u64> coords(Elem a) const;
    Elem from_coords(const std::vector<u64>& c) const;
    Elem from_integer(long long n) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, long long k) const;

    /// Multiplicative order of a nonzero element.
    u64 order(Elem a) const;

    std::string format(Elem a) const;
    Elem parse_element(const std::string& text) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    void check(Elem a) const {
        if (a >= q_) throw FieldMismatch("element code " + std::to_string(a) +
                                         " out of range for " + describe());
    }

private:
    Field() = default;
    u64 p_ = 0;
    unsigned m_ = 0;
    u64 q_ = 0;
    std::vector<u64> modulus_;  // m+1 coefficients, constant first, monic
};

/// Smallest primitive element, elements ordered by their coordinate list
/// (constant term first) read lexicographically.
Elem find_primitive(const Field& f);

/// Dense index table: index_of(gamma^k) = k, power_of(k) = gamma^k.
class DlogTable {
public:
    DlogTable(const Field& f, Elem gamma, u64 max_q = Field::kDefaultMaxQ);

    Elem gamma() const { return gamma_; }
    u64 qm1() const { return qm1_; }

    u64 index_of(Elem a) const {
        if (a == 0) throw ZeroElement();
        return index_[a];
    }
    /// gamma^k for any integer k (reduced mod q-1).
    Elem power_of(long long k) const {
        long long r = k % static_cast<long long>(qm1_);
        if (r < 0) r += static_cast<long long>(qm1_);
        return power_[static_cast<u64>(r)];
    }

private:
    Elem gamma_;
    u64 qm1_;
    std::vector<u32> index_;  // by element code; index_[0] unused
    std::vector<u32> power_;  // by exponent in [0, q-1)
};

/// Self-test of the table: all five index congruences (product, quotient,
/// inverse, k-fold product, k-th power) for the given inputs.
bool index_arith_check(const Field& f, const DlogTable& t, Elem a, Elem b, long long k);

}  // namespace cycloperm
