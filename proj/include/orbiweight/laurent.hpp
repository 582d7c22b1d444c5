#pragma once

#include <vector>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <sstream>
#include <algorithm>
#include <functional>
#include <cstdint>

#include "rational.hpp"
#include "int_matrix.hpp" // for cpp_int

namespace orbiweight {

// Integer Laurent polynomial: dense coefficient block starting at min_exp.
// Normal form: empty block for zero, otherwise nonzero first and last entries.
struct LaurentPoly {
    i64 min_exp = 0;
    std::vector<i64> coeff; // coeff[i] multiplies t^(min_exp + i)

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly monomial(i64 c, i64 e) {
        LaurentPoly p;
        if (c != 0) {
            p.min_exp = e;
            p.coeff = {c};
        }
        return p;
    }
    // coefficients listed from t^low upward
    static LaurentPoly from_coeffs(i64 low, std::vector<i64> cs) {
        LaurentPoly p;
        p.min_exp = low;
        p.coeff = std::move(cs);
        p.trim();
        return p;
    }

    bool is_zero() const { return coeff.empty(); }
    i64 low() const { return min_exp; }
    i64 degree() const { return min_exp + static_cast<i64>(coeff.size()) - 1; } // max exponent
    i64 at(i64 e) const {
        if (is_zero() || e < min_exp || e > degree()) return 0;
        return coeff[static_cast<std::size_t>(e - min_exp)];
    }

    void trim() {
        std::size_t lo = 0, hi = coeff.size();
        while (lo < hi && coeff[lo] == 0) ++lo;
        while (hi > lo && coeff[hi - 1] == 0) --hi;
        if (lo == hi) {
            coeff.clear();
            min_exp = 0;
        } else {
            coeff = std::vector<i64>(coeff.begin() + static_cast<std::ptrdiff_t>(lo),
                                     coeff.begin() + static_cast<std::ptrdiff_t>(hi));
            min_exp += static_cast<i64>(lo);
        }
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return (a.min_exp == b.min_exp && a.coeff == b.coeff) || (a.is_zero() && b.is_zero());
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const i64 lo = std::min(a.min_exp, b.min_exp);
        const i64 hi = std::max(a.degree(), b.degree());
        LaurentPoly r;
        r.min_exp = lo;
        r.coeff.assign(static_cast<std::size_t>(hi - lo + 1), 0);
        for (i64 e = lo; e <= hi; ++e)
            r.coeff[static_cast<std::size_t>(e - lo)] =
                detail::checked_i64(i128(a.at(e)) + i128(b.at(e)), "polynomial addition");
        r.trim();
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r = a;
        for (i64& c : r.coeff) c = detail::checked_i64(-i128(c), "polynomial negation");
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        LaurentPoly r;
        r.min_exp = a.min_exp + b.min_exp;
        std::vector<i128> acc(a.coeff.size() + b.coeff.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeff.size(); ++i)
            for (std::size_t j = 0; j < b.coeff.size(); ++j)
                acc[i + j] += i128(a.coeff[i]) * b.coeff[j];
        r.coeff.reserve(acc.size());
        for (i128 v : acc) r.coeff.push_back(detail::checked_i64(v, "polynomial multiplication"));
        r.trim();
        return r;
    }

    LaurentPoly derivative() const {
        LaurentPoly r;
        if (is_zero()) return r;
        r.min_exp = min_exp - 1;
        r.coeff.assign(coeff.size(), 0);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            const i64 e = min_exp + static_cast<i64>(i);
            r.coeff[i] = detail::checked_i64(i128(coeff[i]) * e, "polynomial derivative");
        }
        r.trim();
        return r;
    }

    i64 eval_int(i64 x) const {
        i128 acc = 0;
        for (std::size_t i = coeff.size(); i-- > 0;) {
            acc = acc * x + coeff[i];
            if (acc > i128(1) << 100 || acc < -(i128(1) << 100))
                throw arithmetic_overflow("polynomial evaluation overflow");
        }
        // the Laurent prefactor t^min_exp evaluates to x^min_exp; only valid for x = +-1
        if (min_exp != 0 && x != 1 && x != -1)
            throw PreconditionViolated("integer evaluation of a Laurent polynomial needs x = +-1 unless min_exp = 0");
        if (x == -1 && ((min_exp % 2) != 0)) acc = -acc;
        return detail::checked_i64(acc, "polynomial evaluation");
    }

    // ascending powers of t: "1 - t + t^2", "t^-1 + 2", "0"
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            const i64 c = coeff[i];
            if (c == 0) continue;
            const i64 e = min_exp + static_cast<i64>(i);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            const i64 mag = c < 0 ? -c : c;
            if (mag != 1 || e == 0) os << mag;
            if (e != 0) {
                os << "t";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }
};

namespace detail {

// exact division in Z[t, t^-1]: quotient when the remainder vanishes and all
// intermediate coefficient quotients stay integral, otherwise nothing
inline std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw PreconditionViolated("polynomial division by zero");
    if (num.is_zero()) return LaurentPoly::zero();
    std::vector<i64> rem = num.coeff;
    const std::vector<i64>& d = den.coeff;
    if (rem.size() < d.size()) return std::nullopt;
    const i64 lead = d.back();
    std::vector<i64> quot(rem.size() - d.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const i64 top = rem[k + d.size() - 1];
        if (top % lead != 0) return std::nullopt;
        const i64 q = top / lead;
        quot[k] = q;
        if (q != 0)
            for (std::size_t j = 0; j < d.size(); ++j)
                rem[k + j] = checked_i64(i128(rem[k + j]) - i128(q) * d[j], "polynomial division");
    }
    for (i64 c : rem)
        if (c != 0) return std::nullopt;
    return LaurentPoly::from_coeffs(num.min_exp - den.min_exp, std::move(quot));
}

} // namespace detail

inline LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den,
                                const char* what = "polynomial division") {
    auto q = detail::try_divide_exact(num, den);
    if (!q) throw InternalInconsistency(std::string(what) + ": division was not exact");
    return *q;
}

// t^n - 1
inline LaurentPoly t_power_minus_one(i64 n) {
    LaurentPoly p;
    p.min_exp = 0;
    p.coeff.assign(static_cast<std::size_t>(n) + 1, 0);
    p.coeff[0] = -1;
    p.coeff[static_cast<std::size_t>(n)] = 1;
    return p;
}

// n-th cyclotomic polynomial, by the recursive quotient
// Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, memoized.
inline const LaurentPoly& cyclotomic(i64 n) {
    static std::map<i64, LaurentPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    std::function<const LaurentPoly&(i64)> get = [&](i64 k) -> const LaurentPoly& {
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        LaurentPoly num = t_power_minus_one(k);
        for (i64 d = 1; d < k; ++d)
            if (k % d == 0) num = divide_exact(num, get(d), "cyclotomic recursion");
        return cache.emplace(k, std::move(num)).first->second;
    };
    if (n < 1) throw PreconditionViolated("cyclotomic index must be >= 1");
    return get(n);
}

// Euler phi for consecutive arguments, sieved and cached.
inline i64 euler_phi(i64 n) {
    static std::vector<i64> table{0, 1}; // table[k] = phi(k)
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    if (n < 1) throw PreconditionViolated("euler_phi needs n >= 1");
    if (static_cast<std::size_t>(n) >= table.size()) {
        std::size_t newsize = std::max<std::size_t>(static_cast<std::size_t>(n) + 1, table.size() * 2);
        std::vector<i64> t(newsize);
        for (std::size_t i = 0; i < newsize; ++i) t[i] = static_cast<i64>(i);
        for (std::size_t i = 2; i < newsize; ++i)
            if (t[i] == static_cast<i64>(i)) // i prime
                for (std::size_t j = i; j < newsize; j += i) t[j] -= t[j] / static_cast<i64>(i);
        table = std::move(t);
    }
    return table[static_cast<std::size_t>(n)];
}

// ---- square-free + cyclotomic detection --------------------------------------

namespace detail {

using u64 = std::uint64_t;

inline u64 mod_pos(i64 v, u64 p) {
    i64 r = v % static_cast<i64>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(p) : r);
}

// degree of gcd(f, g) over F_p; inputs as coefficient vectors (may carry
// leading zeros). Returns the degree, or -1 for gcd undefined (both zero).
inline i64 modular_gcd_degree(std::vector<u64> a, std::vector<u64> b, u64 p) {
    auto deg = [](const std::vector<u64>& v) -> i64 {
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i] != 0) return static_cast<i64>(i);
        return -1;
    };
    auto mulmod = [p](u64 x, u64 y) { return static_cast<u64>((static_cast<__uint128_t>(x) * y) % p); };
    auto powmod = [&](u64 x, u64 e) {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, x);
            x = mulmod(x, x);
            e >>= 1;
        }
        return r;
    };
    while (true) {
        i64 da = deg(a), db = deg(b);
        if (db < 0) return da;
        if (da < 0) return db;
        if (da < db) {
            std::swap(a, b);
            std::swap(da, db);
        }
        const u64 invlb = powmod(b[static_cast<std::size_t>(db)], p - 2);
        // a -= lead(a) * invlb * t^(da-db) * b
        while (true) {
            da = deg(a);
            if (da < db) break;
            const u64 factor = mulmod(a[static_cast<std::size_t>(da)], invlb);
            const std::size_t shift = static_cast<std::size_t>(da - db);
            for (std::size_t i = 0; i <= static_cast<std::size_t>(db); ++i) {
                u64& slot = a[i + shift];
                slot = (slot + p - mulmod(factor, b[i])) % p;
            }
        }
        std::swap(a, b);
    }
}

inline std::vector<cpp_int> to_big(const std::vector<i64>& v) {
    std::vector<cpp_int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

inline i64 big_deg(const std::vector<cpp_int>& v) {
    for (std::size_t i = v.size(); i-- > 0;)
        if (v[i] != 0) return static_cast<i64>(i);
    return -1;
}

inline void make_primitive(std::vector<cpp_int>& v) {
    cpp_int g = 0;
    for (const cpp_int& c : v) g = boost::multiprecision::gcd(g, c);
    if (g == 0) return;
    for (cpp_int& c : v) c /= g;
    i64 d = big_deg(v);
    if (d >= 0 && v[static_cast<std::size_t>(d)] < 0)
        for (cpp_int& c : v) c = -c;
}

// primitive polynomial remainder sequence: degree of gcd over Q
inline i64 exact_gcd_degree(std::vector<cpp_int> a, std::vector<cpp_int> b) {
    make_primitive(a);
    make_primitive(b);
    while (true) {
        i64 da = big_deg(a), db = big_deg(b);
        if (db < 0) return da;
        if (da < 0) return db;
        if (da < db) {
            std::swap(a, b);
            std::swap(da, db);
        }
        // pseudo-remainder of a by b: repeatedly scale by lead(b) and cancel
        const cpp_int lb = b[static_cast<std::size_t>(db)];
        std::vector<cpp_int> r = a;
        while (true) {
            const i64 dr = big_deg(r);
            if (dr < db) break;
            const cpp_int lr = r[static_cast<std::size_t>(dr)];
            for (cpp_int& c : r) c *= lb;
            for (i64 i = 0; i <= db; ++i)
                r[static_cast<std::size_t>(i + dr - db)] -= lr * b[static_cast<std::size_t>(i)];
        }
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
}

} // namespace detail

struct CyclotomicReport {
    bool squarefree = false;
    std::optional<std::vector<i64>> cyclotomic_factors; // indices n with Phi_n | f, when f is
                                                        // exactly a product of distinct cyclotomics
};

// Square-freeness via gcd(f, f') up to units (+-t^k), decided by modular gcd
// degree with an exact primitive-remainder-sequence fallback; cyclotomic
// factorization by trial division by Phi_n over all n with phi(n) <= deg f.
inline CyclotomicReport is_cyclotomic_squarefree(const LaurentPoly& f_in) {
    if (f_in.is_zero()) throw PreconditionViolated("is_cyclotomic_squarefree needs a nonzero polynomial");
    // normalize by the unit +-t^k: shift to min_exp 0, make the leading coefficient positive
    LaurentPoly f = f_in;
    f.min_exp = 0;
    if (f.coeff.back() < 0) f = -f;

    CyclotomicReport rep;

    if (f.coeff.size() == 1) {
        // nonzero constant: unit times t^k; square-free, empty cyclotomic product
        rep.squarefree = true;
        rep.cyclotomic_factors = (f.coeff[0] == 1) ? std::optional<std::vector<i64>>(std::vector<i64>{})
                                                   : std::nullopt;
        return rep;
    }

    // -- square-free test
    const LaurentPoly fp = f.derivative();
    bool decided = false;
    for (detail::u64 p : {2147483647ull, 2147483629ull, 2147483587ull}) {
        if (detail::mod_pos(f.coeff.back(), p) == 0) continue;
        std::vector<detail::u64> am(f.coeff.size()), bm(fp.coeff.size());
        for (std::size_t i = 0; i < f.coeff.size(); ++i) am[i] = detail::mod_pos(f.coeff[i], p);
        for (std::size_t i = 0; i < fp.coeff.size(); ++i) bm[i] = detail::mod_pos(fp.coeff[i], p);
        // deg gcd over Q <= deg gcd mod p when p does not kill the leading term,
        // so degree 0 mod p certifies square-freeness
        if (detail::modular_gcd_degree(std::move(am), std::move(bm), p) == 0) {
            rep.squarefree = true;
            decided = true;
            break;
        }
    }
    if (!decided)
        rep.squarefree = detail::exact_gcd_degree(detail::to_big(f.coeff), detail::to_big(fp.coeff)) == 0;

    // -- cyclotomic product detection (up to the unit normalization above)
    if (f.coeff.back() != 1 || (f.coeff.front() != 1 && f.coeff.front() != -1))
        return rep; // a product of cyclotomics is monic with constant term +-1

    std::vector<i64> found;
    LaurentPoly q = f;
    const i64 dbound = f.degree();
    for (i64 n = 1; q.degree() > 0; ++n) {
        if (n > 2 * dbound * dbound + 1) break; // phi(n) > deg f certainly from here on
        if (euler_phi(n) > q.degree()) continue;
        auto divided = detail::try_divide_exact(q, cyclotomic(n));
        if (divided) {
            q = *divided;
            found.push_back(n);
        }
    }
    if (q == LaurentPoly::one()) rep.cyclotomic_factors = std::move(found);
    return rep;
}

} // namespace orbiweight
