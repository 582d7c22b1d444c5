#pragma once

#include <vector>
#include <string>
#include <optional>
#include <algorithm>
#include <sstream>

#include "rational.hpp"
#include "orbifold_base.hpp"
#include "laurent.hpp"

namespace orbiweight {

// Genus-zero Seifert data: the base orbifold plus (alpha, beta) pairs, kept
// exactly as written (no implicit normalization). Pairs with alpha = 1 may
// appear only as products of the explicit normalization move; they carry no
// cone point and are skipped in the multiset match against the base.
struct SeifertData {
    BaseOrbifold base;
    std::vector<std::pair<i64, i64>> pairs;

    void validate() const {
        base.validate();
        std::vector<i64> alphas;
        for (const auto& [alpha, beta] : pairs) {
            if (alpha < 1)
                throw PreconditionViolated("Seifert pair alpha must be >= 1, got " + std::to_string(alpha));
            if (std::gcd(alpha, beta < 0 ? -beta : beta) != 1)
                throw PreconditionViolated("Seifert pair (" + std::to_string(alpha) + "," +
                                           std::to_string(beta) + ") is not coprime");
            if (alpha >= 2) alphas.push_back(alpha);
        }
        std::vector<i64> cones = base.cone_orders;
        std::sort(alphas.begin(), alphas.end());
        std::sort(cones.begin(), cones.end());
        if (alphas != cones)
            throw PreconditionViolated("Seifert pair multiplicities do not match the base cone orders");
    }
};

// generalized Euler invariant: -sum beta_i / alpha_i
inline Rational euler_number(const SeifertData& s) {
    Rational total;
    for (const auto& [alpha, beta] : s.pairs) total = total + Rational(beta, alpha);
    return -total;
}

// explicit normalization move: (alpha, beta) -> (alpha, beta + alpha) on the
// chosen pair, with (1, -1) appended to keep the Euler number fixed
inline SeifertData normalization_move(const SeifertData& s, std::size_t pair_index) {
    if (pair_index >= s.pairs.size())
        throw PreconditionViolated("normalization_move: pair index out of range");
    SeifertData out = s;
    out.pairs[pair_index].second += out.pairs[pair_index].first;
    out.pairs.emplace_back(1, -1);
    return out;
}

inline void require_torus_params(i64 p, i64 q) {
    if (!(p > q && q >= 2 && std::gcd(p, q) == 1))
        throw InvalidTorusParameters("need p > q >= 2 with gcd(p,q) = 1, got p=" + std::to_string(p) +
                                     ", q=" + std::to_string(q));
}

// Seifert data of the 0-framed surgery on the (p,q) torus knot.
inline SeifertData torus_surgery_data(i64 p, i64 q) {
    require_torus_params(p, q);
    SeifertData s;
    std::vector<i64> cones{p, q, detail::checked_i64(i128(p) * q, "cone order pq")};
    std::sort(cones.begin(), cones.end());
    s.base = BaseOrbifold::sphere(cones);
    const i64 last = detail::checked_i64(-(i128(p) * p + i128(q) * q), "surgery coefficient");
    s.pairs = {{p, q}, {q, p}, {p * q, last}};
    s.validate();
    return s;
}

// Seifert data of the 0-surgery on the connected sum of the (p,q) torus knot
// with its reflection: base S2(p,p,q,q); the pair choice realizes Euler
// number 0 with the required multiplicities.
inline SeifertData connected_sum_surgery_data(i64 p, i64 q) {
    require_torus_params(p, q);
    SeifertData s;
    std::vector<i64> cones{p, p, q, q};
    std::sort(cones.begin(), cones.end());
    s.base = BaseOrbifold::sphere(cones);
    s.pairs = {{p, q}, {q, p}, {p, -q}, {q, -p}};
    s.validate();
    return s;
}

// ---- condition checker --------------------------------------------------------

struct Theorem5Report {
    bool cond1 = false;            // sphere base, m >= 3, Euler number 0
    bool cond2 = false;            // sharing pattern on cone orders
    bool cond3 = false;            // sum 1/a_i <= m - 2
    std::optional<bool> cond5;     // square-free cyclotomic Alexander polynomial (when supplied)
    std::string cond4 = "not computable (fibredness is external input)";
    bool overall = false;          // all checked conditions pass
    std::vector<std::string> details;
};

inline Theorem5Report theorem5_check(const SeifertData& s,
                                     const LaurentPoly* alexander = nullptr) {
    s.validate();
    Theorem5Report r;
    auto note = [&](bool ok, const std::string& what) {
        r.details.push_back(std::string(ok ? "pass: " : "fail: ") + what);
        return ok;
    };

    const auto& a = s.base.cone_orders;
    const std::size_t m = a.size();
    const bool sphere = s.base.family == BaseOrbifold::Family::Sphere;
    const Rational eps = euler_number(s);
    r.cond1 = note(sphere, "base is a sphere family orbifold") &
              note(m >= 3, "at least 3 cone points") &
              note(eps == Rational(0), "Euler number is 0 (got " + eps.str() + ")");

    bool nobody_coprime_to_all = true;
    for (std::size_t i = 0; i < m; ++i) {
        bool shares = false;
        for (std::size_t j = 0; j < m && !shares; ++j)
            if (j != i && std::gcd(a[i], a[j]) > 1) shares = true;
        if (!shares) {
            nobody_coprime_to_all = false;
            r.details.push_back("fail: cone order " + std::to_string(a[i]) +
                                " is relatively prime to all the others");
            break;
        }
    }
    if (nobody_coprime_to_all)
        r.details.push_back("pass: no cone order is relatively prime to all the others");
    bool three = true;
    for (std::size_t i = 0; i < m && three; ++i)
        for (std::size_t j = i + 1; j < m && three; ++j)
            for (std::size_t k = j + 1; k < m && three; ++k)
                if (std::gcd(a[i], std::gcd(a[j], a[k])) > 1) three = false;
    note(three, "no three cone orders share a factor");
    const std::size_t match = detail::max_sharing_matching(a);
    note(match <= 2, "at most two disjoint pairs share a factor");
    r.cond2 = nobody_coprime_to_all && three && match <= 2;

    Rational recip;
    for (i64 ai : a) recip = recip + Rational(1, ai);
    r.cond3 = note(m >= 2 && recip <= Rational(static_cast<i64>(m) - 2),
                   "sum of reciprocal cone orders " + recip.str() + " <= m - 2");

    if (alexander) {
        auto rep = is_cyclotomic_squarefree(*alexander);
        const bool ok = rep.squarefree && rep.cyclotomic_factors.has_value();
        note(ok, std::string("Alexander polynomial is a square-free product of cyclotomics (squarefree: ") +
                     (rep.squarefree ? "yes" : "no") + ", cyclotomic product: " +
                     (rep.cyclotomic_factors ? "yes" : "no") + ")");
        r.cond5 = ok;
    }

    r.overall = r.cond1 && r.cond2 && r.cond3 && (!r.cond5.has_value() || *r.cond5);
    return r;
}

// ---- torus-knot Alexander polynomials -------------------------------------------

// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), an exact division for coprime p, q
inline LaurentPoly alexander_torus(i64 p, i64 q) {
    require_torus_params(p, q);
    LaurentPoly num = t_power_minus_one(detail::checked_i64(i128(p) * q, "pq")) * t_power_minus_one(1);
    LaurentPoly quo = divide_exact(num, t_power_minus_one(p), "torus Alexander polynomial");
    return divide_exact(quo, t_power_minus_one(q), "torus Alexander polynomial");
}

// ---- serialization ---------------------------------------------------------------
// "S2(2,3,6) ; (3,2) (2,3) (6,-13)"

inline std::string print_seifert(const SeifertData& s) {
    std::ostringstream os;
    os << print_base(s.base) << " ;";
    for (const auto& [alpha, beta] : s.pairs) os << " (" << alpha << "," << beta << ")";
    return os.str();
}

inline SeifertData parse_seifert(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos)
        throw ParseError("Seifert data needs 'BASE ; PAIRS', got '" + text + "'");
    SeifertData s;
    s.base = parse_base(text.substr(0, semi));
    std::string rest = text.substr(semi + 1);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
    };
    skip_ws();
    while (i < rest.size()) {
        if (rest[i] != '(') throw ParseError("expected '(' in Seifert pair list");
        const auto close = rest.find(')', i);
        if (close == std::string::npos) throw ParseError("unclosed Seifert pair");
        const auto entries = detail::parse_order_list(rest.substr(i + 1, close - i - 1), "Seifert pair");
        if (entries.size() != 2) throw ParseError("Seifert pair needs exactly two integers");
        s.pairs.emplace_back(entries[0], entries[1]);
        i = close + 1;
        skip_ws();
    }
    try {
        s.validate();
    } catch (const PreconditionViolated& ex) {
        throw ParseError(std::string("Seifert data invalid: ") + ex.what());
    }
    return s;
}

} // namespace orbiweight
