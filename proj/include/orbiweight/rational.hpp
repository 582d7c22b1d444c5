#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <array>
#include <algorithm>

#include "errors.hpp"

namespace orbiweight {

using i64 = std::int64_t;
using i128 = __int128;

namespace detail {

inline i64 checked_i64(i128 v, const char* ctx) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw arithmetic_overflow(std::string("64-bit overflow in ") + ctx);
    return static_cast<i64>(v);
}

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

// Exact rational number. Invariants: den > 0, gcd(|num|, den) = 1, zero is 0/1.
// All arithmetic is exact; intermediate products run in 128 bits and overflow
// of the reduced result raises arithmetic_overflow instead of wrapping.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n) : num(n), den(1) {}
    Rational(i64 n, i64 d) { *this = make(i128(n), i128(d)); }

    static Rational make(i128 n, i128 d) {
        if (d == 0) throw PreconditionViolated("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num = detail::checked_i64(n, "rational numerator");
        r.den = detail::checked_i64(d, "rational denominator");
        return r;
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num) * b.num, i128(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw PreconditionViolated("division by zero rational");
        return make(i128(a.num) * b.den, i128(a.den) * b.num);
    }
    Rational operator-() const {
        Rational r;
        r.num = -num;
        r.den = den;
        return r;
    }

    // Comparisons cross-multiply in 128 bits; no overflow is possible.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num) * b.den < i128(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Largest integer <= value.
    i64 floor() const {
        i64 q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Accepts "p", "p/q", optional leading '-' on either part.
    static Rational parse(const std::string& s) {
        auto bad = [&] { throw ParseError("cannot parse rational: '" + s + "'"); };
        std::string t;
        for (char c : s)
            if (!isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) bad();
        auto slash = t.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(t));
            i64 n = std::stoll(t.substr(0, slash));
            i64 d = std::stoll(t.substr(slash + 1));
            return Rational(n, d);
        } catch (const std::logic_error&) {
            bad();
        }
        return Rational(); // unreachable
    }
};

// Distance to the nearest integer. With fr = x - floor(x):
// psi(x) = fr when fr <= 1/2, else 1 - fr. Half-integers land on the first
// branch, so psi = 1/2 there. Always 0 <= psi(x) <= 1/2.
inline Rational psi(const Rational& x) {
    Rational fr = x - Rational(x.floor());
    if (fr <= Rational(1, 2)) return fr;
    return Rational(1) - fr;
}

// A triple is good when 2 max(psi) < psi-sum (strict).
inline bool is_good(const Rational& xi, const Rational& eta, const Rational& zeta) {
    Rational px = psi(xi), pe = psi(eta), pz = psi(zeta);
    Rational mx = std::max({px, pe, pz});
    return Rational(2) * mx < px + pe + pz;
}

// An element of S^0 = {+1, -1} and maps S^0 -> S^0 as value tables.
enum class Sign : int { plus = +1, minus = -1 };

struct SignMap {
    Sign at_plus;
    Sign at_minus;

    Sign operator()(Sign e) const { return e == Sign::plus ? at_plus : at_minus; }
    bool is_bijection() const { return at_plus != at_minus; }
    friend bool operator==(const SignMap& a, const SignMap& b) {
        return a.at_plus == b.at_plus && a.at_minus == b.at_minus;
    }
    friend bool operator!=(const SignMap& a, const SignMap& b) { return !(a == b); }
};

struct SignMapPair {
    SignMap phi;
    SignMap theta;
};

namespace detail {
inline Sign parity_sign(i64 n) {
    return (n % 2 == 0) ? Sign::plus : Sign::minus;
}
} // namespace detail

// The two sign maps attached to a good triple:
//   phi(eps)   = (-1)^floor(xi + eta + eps*zeta)
//   theta(eps) = (-1)^floor(xi - eta + eps*zeta)
// Requires: the triple is good, no coordinate is an integer, and none of the
// eight sums +-xi +- eta +- zeta is an integer. Under those hypotheses
// phi != theta and at least one of them is a bijection.
inline SignMapPair lemma1_maps(const Rational& xi, const Rational& eta, const Rational& zeta) {
    if (xi.is_integer()) throw PreconditionViolated("xi is an integer");
    if (eta.is_integer()) throw PreconditionViolated("eta is an integer");
    if (zeta.is_integer()) throw PreconditionViolated("zeta is an integer");
    if (!is_good(xi, eta, zeta))
        throw PreconditionViolated("triple is not good: 2*max(psi) >= sum(psi)");
    // The eight signed sums come in +- pairs, so four suffice.
    const std::array<std::pair<Rational, const char*>, 4> sums = {{
        {xi + eta + zeta, "xi+eta+zeta"},
        {xi + eta - zeta, "xi+eta-zeta"},
        {xi - eta + zeta, "xi-eta+zeta"},
        {xi - eta - zeta, "xi-eta-zeta"},
    }};
    for (const auto& [v, name] : sums)
        if (v.is_integer())
            throw PreconditionViolated(std::string(name) + " = " + v.str() + " is an integer");

    SignMapPair out;
    out.phi.at_plus = detail::parity_sign((xi + eta + zeta).floor());
    out.phi.at_minus = detail::parity_sign((xi + eta - zeta).floor());
    out.theta.at_plus = detail::parity_sign((xi - eta + zeta).floor());
    out.theta.at_minus = detail::parity_sign((xi - eta - zeta).floor());
    return out;
}

} // namespace orbiweight
