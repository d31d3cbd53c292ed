#include "cycloperm/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cycloperm {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

namespace {

// Dense polynomial arithmetic over F_p, used only for modulus validation
// and selection. Coefficient vectors are constant-term-first, trimmed.
using FpPoly = std::vector<u64>;

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 pow_mod_u64(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

u64 inv_mod_p(u64 a, u64 p) { return pow_mod_u64(a, p - 2, p); }

FpPoly poly_mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    // f is monic of degree deg; reduce from the top
    size_t deg = f.size() - 1;
    for (size_t i = c.size(); i-- > deg;) {
        u64 t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (size_t j = 0; j < deg; ++j)
            c[i - deg + j] = (c[i - deg + j] + t * (p - f[j] % p)) % p;
    }
    c.resize(deg);
    trim(c);
    return c;
}

FpPoly poly_pow_mod(FpPoly base, u64 e, const FpPoly& f, u64 p) {
    FpPoly r = {1};
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

FpPoly poly_mod(FpPoly a, FpPoly b, u64 p) {
    trim(a);
    trim(b);
    assert(!b.empty());
    u64 lc_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        u64 t = a.back() * lc_inv % p;
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] = (a[shift + j] + t * (p - b[j] % p)) % p;
        trim(a);
        if (!a.empty() && a.size() >= b.size() && a.back() == 0) trim(a);
    }
    return a;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Degree-m f (monic) is irreducible over F_p iff gcd(f, x^{p^k} - x) = 1
// for every k <= m/2.
bool is_irreducible(const FpPoly& f, u64 p) {
    size_t m = f.size() - 1;
    if (m == 1) return true;
    FpPoly t = {0, 1};  // x
    for (size_t k = 1; k <= m / 2; ++k) {
        t = poly_pow_mod(t, p, f, p);  // now x^{p^k} mod f
        FpPoly diff = t;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        FpPoly g = poly_gcd(f, diff, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

}  // namespace

Field Field::make(u64 p, unsigned m, std::optional<std::vector<u64>> modulus) {
    if (!is_prime(p)) throw NotPrime(p);
    if (m < 1) throw DegreeMismatch("extension degree must be >= 1");
    Field f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (f.q_ > (1ull << 32) / p)
            throw FieldTooLarge("p^m exceeds supported range (2^32)");
        f.q_ *= p;
    }
    if (m == 1) {
        f.modulus_ = {0, 1};  // x, unused
        if (modulus && *modulus != f.modulus_)
            throw DegreeMismatch("prime field takes no modulus");
        return f;
    }
    if (modulus) {
        auto mod = *modulus;
        if (mod.size() != m + 1) throw DegreeMismatch("modulus must have m+1 coefficients");
        for (auto& c : mod)
            if (c >= p) throw DegreeMismatch("modulus coefficient out of range [0,p)");
        if (mod.back() != 1) throw DegreeMismatch("modulus must be monic");
        if (!is_irreducible(mod, p)) throw ReducibleModulus("modulus is reducible over F_" + std::to_string(p));
        f.modulus_ = std::move(mod);
        return f;
    }
    // lexicographically smallest monic irreducible, constant-term-first
    std::vector<u64> mod(m + 1, 0);
    mod[m] = 1;
    u64 count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (u64 t = 0; t < count; ++t) {
        u64 v = t;
        for (unsigned i = 0; i < m; ++i) {
            u64 div = 1;
            for (unsigned j = 0; j + i + 1 < m; ++j) div *= p;
            mod[i] = (v / div) % p;
        }
        (void)v;
        if (is_irreducible(mod, p)) {
            f.modulus_ = mod;
            return f;
        }
    }
    throw ReducibleModulus("no irreducible modulus found");  // unreachable
}

std::string Field::describe() const {
    if (m_ == 1) return std::to_string(p_);
    std::ostringstream os;
    os << p_ << '^' << m_ << '/';
    for (size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ',';
        os << modulus_[i];
    }
    return os.str();
}

Field Field::parse(const std::string& desc) {
    auto caret = desc.find('^');
    if (caret == std::string::npos) {
        u64 p = 0;
        try {
            size_t pos = 0;
            p = std::stoull(desc, &pos);
            if (pos != desc.size()) throw std::invalid_argument(desc);
        } catch (const std::exception&) {
            throw MalformedInput("bad field description: " + desc);
        }
        return make(p, 1);
    }
    auto slash = desc.find('/', caret);
    try {
        u64 p = std::stoull(desc.substr(0, caret));
        std::string mpart = slash == std::string::npos ? desc.substr(caret + 1)
                                                       : desc.substr(caret + 1, slash - caret - 1);
        unsigned m = static_cast<unsigned>(std::stoul(mpart));
        if (slash == std::string::npos) return make(p, m);
        std::vector<u64> mod;
        std::stringstream ss(desc.substr(slash + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) mod.push_back(std::stoull(tok));
        return make(p, m, mod);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw MalformedInput("bad field description: " + desc);
    }
}

std::vector<u64> Field::coords(Elem a) const {
    check(a);
    std::vector<u64> c(m_);
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem Field::from_coords(const std::vector<u64>& c) const {
    if (c.size() != m_) throw DegreeMismatch("expected " + std::to_string(m_) + " coordinates");
    Elem a = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw FieldMismatch("coordinate out of range [0,p)");
        a = a * p_ + c[i];
    }
    return a;
}

Elem Field::from_integer(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
}

Elem Field::add(Elem a, Elem b) const {
    check(a);
    check(b);
    if (m_ == 1) {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem r = 0, pw = 1;
    for (unsigned i = 0; i < m_; ++i) {
        u64 s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * pw;
        pw *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const {
    check(a);
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    Elem r = 0, pw = 1;
    for (unsigned i = 0; i < m_; ++i) {
        u64 d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * pw;
        pw *= p_;
        a /= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    check(a);
    check(b);
    if (m_ == 1) return a * b % p_;
    u64 da[64], db[64], c[128] = {0};
    for (unsigned i = 0; i < m_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j)
            c[i + j] = (c[i + j] + da[i] * db[j]) % p_;
    }
    for (unsigned i = 2 * m_ - 1; i-- > m_;) {
        u64 t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (unsigned j = 0; j < m_; ++j)
            c[i - m_ + j] = (c[i - m_ + j] + t * (p_ - modulus_[j])) % p_;
    }
    Elem r = 0;
    for (unsigned i = m_; i-- > 0;) r = r * p_ + c[i];
    return r;
}

Elem Field::pow(Elem a, long long k) const {
    check(a);
    if (a == 0) {
        if (k > 0) return 0;
        if (k == 0) return 1;  // empty product convention
        throw ZeroInverse();
    }
    long long qm1 = static_cast<long long>(q_ - 1);
    long long e = k % qm1;
    if (e < 0) e += qm1;
    Elem r = 1, base = a;
    u64 ue = static_cast<u64>(e);
    while (ue) {
        if (ue & 1) r = mul(r, base);
        base = mul(base, base);
        ue >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    check(a);
    if (a == 0) throw ZeroInverse();
    return pow(a, -1);
}

u64 Field::order(Elem a) const {
    check(a);
    if (a == 0) throw ZeroElement();
    u64 ord = q_ - 1;
    for (u64 ell : distinct_prime_factors(q_ - 1)) {
        while (ord % ell == 0 && pow(a, static_cast<long long>(ord / ell)) == 1) ord /= ell;
    }
    return ord;
}

std::string Field::format(Elem a) const {
    check(a);
    if (m_ == 1) return std::to_string(a);
    std::ostringstream os;
    auto c = coords(a);
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    return os.str();
}

Elem Field::parse_element(const std::string& text) const {
    try {
        if (text.find(',') == std::string::npos) {
            size_t pos = 0;
            long long n = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            if (m_ == 1 || (n >= 0 && n < static_cast<long long>(p_))) return from_integer(n);
            return from_integer(n);
        }
        std::vector<u64> c;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) c.push_back(std::stoull(tok));
        return from_coords(c);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw MalformedInput("bad element literal: " + text);
    }
}

Elem find_primitive(const Field& f) {
    const u64 q = f.q();
    const u64 p = f.p();
    const unsigned m = f.m();
    auto factors = distinct_prime_factors(q - 1);
    // enumerate by coordinate list, constant term as the most significant digit
    u64 hi = 1;
    for (unsigned i = 0; i + 1 < m; ++i) hi *= p;
    for (u64 t = 0; t < q; ++t) {
        Elem a = 0;
        u64 v = t, div = hi;
        u64 pw = 1;
        for (unsigned i = 0; i < m; ++i) {
            a += (v / div) % p * pw;
            div = div == 1 ? 1 : div / p;
            pw *= p;
        }
        if (a == 0) continue;
        bool prim = true;
        for (u64 ell : factors) {
            if (f.pow(a, static_cast<long long>((q - 1) / ell)) == 1) {
                prim = false;
                break;
            }
        }
        if (prim) return a;
    }
    throw NotPrimitive("no primitive element found");  // unreachable for q >= 3
}

DlogTable::DlogTable(const Field& f, Elem gamma, u64 max_q) {
    const u64 q = f.q();
    if (q > max_q)
        throw FieldTooLarge("q = " + std::to_string(q) + " exceeds table budget " +
                            std::to_string(max_q));
    f.check(gamma);
    if (gamma == 0) throw NotPrimitive("zero is not primitive");
    gamma_ = gamma;
    qm1_ = q - 1;
    index_.assign(q, 0);
    power_.assign(q - 1, 0);
    Elem cur = 1;
    for (u64 k = 0; k < qm1_; ++k) {
        if (k > 0 && cur == 1) throw NotPrimitive("element has order " + std::to_string(k));
        power_[k] = static_cast<u32>(cur);
        index_[cur] = static_cast<u32>(k);
        cur = f.mul(cur, gamma);
    }
    if (cur != 1) throw NotPrimitive("order does not divide q-1");  // cannot happen
}

bool index_arith_check(const Field& f, const DlogTable& t, Elem a, Elem b, long long k) {
    const long long n = static_cast<long long>(t.qm1());
    auto md = [n](long long x) { return ((x % n) + n) % n; };
    long long ia = static_cast<long long>(t.index_of(a));
    long long ib = static_cast<long long>(t.index_of(b));
    if (static_cast<long long>(t.index_of(f.mul(a, b))) != md(ia + ib)) return false;
    if (static_cast<long long>(t.index_of(f.mul(a, f.inv(b)))) != md(ia - ib)) return false;
    if (static_cast<long long>(t.index_of(f.inv(a))) != md(-ia)) return false;
    // k-fold product a*b*a*b*... alternating, against the sum of indices
    long long kk = md(k);
    Elem prod = 1;
    long long sum = 0;
    for (long long i = 0; i < kk; ++i) {
        prod = f.mul(prod, i % 2 == 0 ? a : b);
        sum += i % 2 == 0 ? ia : ib;
    }
    if (kk > 0 && static_cast<long long>(t.index_of(prod)) != md(sum)) return false;
    // k-th power clause
    if (static_cast<long long>(t.index_of(f.pow(a, k))) != md(k % n * (ia % n))) return false;
    return true;
}

}  // namespace cycloperm
