#include "cycloperm/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cycloperm {

Poly make_poly(const Field& f, std::vector<Elem> coeffs) {
    for (Elem c : coeffs) f.check(c);
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return Poly{&f, std::move(coeffs)};
}

Elem eval(const Poly& p, Elem x) {
    const Field& f = *p.field;
    f.check(x);
    Elem acc = 0;
    for (size_t i = p.coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p.coeffs[i]);
    return acc;
}

Decomposition decompose(const Field& f, const DlogTable& table, u64 l) {
    const u64 qm1 = f.q() - 1;
    if (l == 0 || qm1 % l != 0)
        throw NotADivisor(std::to_string(l) + " does not divide " + std::to_string(qm1));
    u64 s = qm1 / l;
    Elem xi = table.power_of(static_cast<long long>(s));
    // xi must be a primitive l-th root of unity
    if (f.order(xi) != l && !(l == 1 && xi == 1))
        throw NotPrimitive("xi = gamma^s has wrong order");
    return Decomposition{l, s, xi};
}

FactoredForm extract_factored(const Poly& P, const Decomposition& d) {
    const Field& f = *P.field;
    if (P.is_zero() || P.coeff(0) != 0) throw ZeroConstantViolation();
    size_t r = 0;
    while (P.coeff(r) == 0) ++r;
    if (r >= f.q() - 1)
        throw NotFactorable("trailing exponent " + std::to_string(r) + " is not in (0, q-1)");
    std::vector<Elem> fc;
    for (size_t e = r; e < P.coeffs.size(); ++e) {
        if (P.coeffs[e] == 0) continue;
        if ((e - r) % d.s != 0)
            throw NotFactorable("exponents " + std::to_string(r) + " and " + std::to_string(e) +
                                " differ mod s = " + std::to_string(d.s));
        size_t k = (e - r) / d.s;
        if (fc.size() <= k) fc.resize(k + 1, 0);
        fc[k] = P.coeffs[e];
    }
    return FactoredForm{&f, r, make_poly(f, std::move(fc)), d};
}

Poly expand(const FactoredForm& ff) {
    const Field& f = *ff.field;
    std::vector<Elem> c;
    for (size_t k = 0; k < ff.f.coeffs.size(); ++k) {
        if (ff.f.coeffs[k] == 0) continue;
        size_t e = ff.r + k * ff.decomp.s;
        if (c.size() <= e) c.resize(e + 1, 0);
        c[e] = ff.f.coeffs[k];
    }
    return make_poly(f, std::move(c));
}

MappingCoeffs mapping_coeffs(const FactoredForm& ff) {
    const Field& f = *ff.field;
    MappingCoeffs mc;
    mc.A.resize(ff.decomp.l);
    Elem xp = 1;
    for (u64 i = 0; i < ff.decomp.l; ++i) {
        mc.A[i] = eval(ff.f, xp);
        xp = f.mul(xp, ff.decomp.xi);
    }
    return mc;
}

u64 coset_of(const DlogTable& table, const Decomposition& d, Elem x) {
    return table.index_of(x) % d.l;
}

Elem cyclotomic_map_eval(const MappingCoeffs& mc, u64 r, const Field& f,
                         const DlogTable& table, const Decomposition& d, Elem x) {
    if (x == 0) return 0;
    u64 i = coset_of(table, d, x);
    return f.mul(mc.A[i], f.pow(x, static_cast<long long>(r)));
}

bool lemma_rela_check(const FactoredForm& ff, const DlogTable& table) {
    const Field& f = *ff.field;
    Poly P = expand(ff);
    MappingCoeffs mc = mapping_coeffs(ff);
    for (Elem x = 0; x < f.q(); ++x)
        if (eval(P, x) != cyclotomic_map_eval(mc, ff.r, f, table, ff.decomp, x)) return false;
    return true;
}

Poly reduce_mod_xl_minus_1(const Poly& f, u64 l) {
    const Field& fld = *f.field;
    std::vector<Elem> c(l, 0);
    for (size_t e = 0; e < f.coeffs.size(); ++e) c[e % l] = fld.add(c[e % l], f.coeffs[e]);
    return make_poly(fld, std::move(c));
}

Poly parse_poly(const Field& f, const std::string& text) {
    std::vector<Elem> c;
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw MalformedInput("empty polynomial");
    std::stringstream ss(s);
    std::string term;
    while (std::getline(ss, term, '+')) {
        if (term.empty()) throw MalformedInput("empty term in: " + text);
        auto xpos = term.find('x');
        std::string coeff_str, exp_str;
        u64 e = 0;
        if (xpos == std::string::npos) {
            coeff_str = term;
        } else {
            coeff_str = term.substr(0, xpos);
            if (!coeff_str.empty() && coeff_str.back() == '*') coeff_str.pop_back();
            if (xpos + 1 < term.size()) {
                if (term[xpos + 1] != '^') throw MalformedInput("bad term: " + term);
                exp_str = term.substr(xpos + 2);
                try {
                    size_t pos = 0;
                    e = std::stoull(exp_str, &pos);
                    if (pos != exp_str.size()) throw std::invalid_argument(exp_str);
                } catch (const std::exception&) {
                    throw MalformedInput("bad exponent in term: " + term);
                }
            } else {
                e = 1;
            }
        }
        Elem cf = coeff_str.empty() ? f.one() : f.parse_element(coeff_str);
        if (e >= f.q() - 1 && f.q() > 2)
            throw MalformedInput("exponent " + std::to_string(e) + " >= q-1");
        if (c.size() <= e) c.resize(e + 1, 0);
        c[e] = f.add(c[e], cf);
    }
    return make_poly(f, std::move(c));
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    const Field& f = *p.field;
    std::ostringstream os;
    bool first = true;
    for (size_t e = p.coeffs.size(); e-- > 0;) {
        Elem cf = p.coeffs[e];
        if (cf == 0) continue;
        if (!first) os << '+';
        first = false;
        std::string lit = f.format(cf);
        if (e == 0) {
            os << lit;
            continue;
        }
        if (cf != f.one()) os << lit << (lit.find(',') != std::string::npos ? "*" : "");
        os << 'x';
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cycloperm
