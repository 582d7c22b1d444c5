#pragma once

#include <vector>
#include <array>
#include <string>
#include <optional>
#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <cctype>

#include "presentation.hpp"

namespace orbiweight {

// Genus-zero base 2-orbifolds: sphere and projective-plane families carry cone
// points only; the disk family carries cone points (interior) and corner
// reflector orders (boundary).
struct BaseOrbifold {
    enum class Family { Sphere, Projective, Disk };
    Family family = Family::Sphere;
    std::vector<i64> cone_orders;
    std::vector<i64> corner_orders; // Disk only

    void validate() const {
        for (i64 a : cone_orders)
            if (a < 2) throw PreconditionViolated("cone order " + std::to_string(a) + " < 2");
        for (i64 d : corner_orders)
            if (d < 2) throw PreconditionViolated("corner order " + std::to_string(d) + " < 2");
        if (family != Family::Disk && !corner_orders.empty())
            throw PreconditionViolated("corner orders are only meaningful for the disk family");
    }

    static BaseOrbifold sphere(std::vector<i64> cones) {
        BaseOrbifold b{Family::Sphere, std::move(cones), {}};
        b.validate();
        return b;
    }
    static BaseOrbifold projective(std::vector<i64> cones) {
        BaseOrbifold b{Family::Projective, std::move(cones), {}};
        b.validate();
        return b;
    }
    static BaseOrbifold disk(std::vector<i64> cones, std::vector<i64> corners) {
        BaseOrbifold b{Family::Disk, std::move(cones), std::move(corners)};
        b.validate();
        return b;
    }

    friend bool operator==(const BaseOrbifold& x, const BaseOrbifold& y) {
        return x.family == y.family && x.cone_orders == y.cone_orders &&
               x.corner_orders == y.corner_orders;
    }
};

// ---- compact text syntax ----------------------------------------------------
// "S2(2,3,6)"  "P2(3,4,5)"  "D(3;3,3,3)" (cones before ';', corners after).
// Whitespace is ignored everywhere; a disk with no corners may omit the ';'.

inline std::string print_base(const BaseOrbifold& b) {
    std::ostringstream os;
    switch (b.family) {
        case BaseOrbifold::Family::Sphere: os << "S2("; break;
        case BaseOrbifold::Family::Projective: os << "P2("; break;
        case BaseOrbifold::Family::Disk: os << "D("; break;
    }
    for (std::size_t i = 0; i < b.cone_orders.size(); ++i)
        os << (i ? "," : "") << b.cone_orders[i];
    if (b.family == BaseOrbifold::Family::Disk) {
        os << ";";
        for (std::size_t i = 0; i < b.corner_orders.size(); ++i)
            os << (i ? "," : "") << b.corner_orders[i];
    }
    os << ")";
    return os.str();
}

namespace detail {

inline std::vector<i64> parse_order_list(const std::string& text, const std::string& ctx) {
    std::vector<i64> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw ParseError(ctx + ": empty entry in order list");
        std::size_t pos = 0;
        i64 v = 0;
        try {
            v = std::stoll(cur, &pos);
        } catch (const std::exception&) {
            throw ParseError(ctx + ": bad integer '" + cur + "'");
        }
        if (pos != cur.size()) throw ParseError(ctx + ": bad integer '" + cur + "'");
        out.push_back(v);
        cur.clear();
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == ',') {
            flush();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) flush();
    else if (!out.empty()) throw ParseError(ctx + ": trailing comma in order list");
    return out;
}

} // namespace detail

inline BaseOrbifold parse_base(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    BaseOrbifold::Family fam;
    std::size_t head;
    if (s.rfind("S2(", 0) == 0) {
        fam = BaseOrbifold::Family::Sphere;
        head = 3;
    } else if (s.rfind("P2(", 0) == 0) {
        fam = BaseOrbifold::Family::Projective;
        head = 3;
    } else if (s.rfind("D(", 0) == 0) {
        fam = BaseOrbifold::Family::Disk;
        head = 2;
    } else {
        throw ParseError("base orbifold must start with S2(, P2(, or D(: '" + text + "'");
    }
    if (s.empty() || s.back() != ')')
        throw ParseError("base orbifold must end with ')': '" + text + "'");
    const std::string body = s.substr(head, s.size() - head - 1);
    BaseOrbifold b;
    b.family = fam;
    if (fam == BaseOrbifold::Family::Disk) {
        const auto semi = body.find(';');
        const std::string cones = semi == std::string::npos ? body : body.substr(0, semi);
        const std::string corners = semi == std::string::npos ? "" : body.substr(semi + 1);
        if (corners.find(';') != std::string::npos)
            throw ParseError("base orbifold has more than one ';': '" + text + "'");
        if (!cones.empty()) b.cone_orders = detail::parse_order_list(cones, "cone orders");
        if (!corners.empty()) b.corner_orders = detail::parse_order_list(corners, "corner orders");
    } else {
        if (!body.empty()) b.cone_orders = detail::parse_order_list(body, "cone orders");
    }
    try {
        b.validate();
    } catch (const PreconditionViolated& ex) {
        throw ParseError(std::string("base orbifold invalid: ") + ex.what());
    }
    return b;
}

// ---- admissibility ----------------------------------------------------------

struct AdmissibilityVerdict {
    bool admissible = false;
    enum class Case { S2, P2, P2_345, Disk, Rejected } case_tag = Case::Rejected;
    std::vector<std::string> reasons; // each condition checked, pass or fail
    bool weight_open = false;         // admissible family whose weight-1 status is open

    static const char* case_name(Case c) {
        switch (c) {
            case Case::S2: return "S2";
            case Case::P2: return "P2";
            case Case::P2_345: return "P2_345";
            case Case::Disk: return "Disk";
            default: return "Rejected";
        }
    }
};

namespace detail {

// Largest number of pairwise disjoint index pairs whose orders share a factor.
// Sizes here are tiny (m <= a dozen), so exhaustive matching search is fine.
inline std::size_t max_sharing_matching(const std::vector<i64>& orders) {
    const std::size_t m = orders.size();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (std::gcd(orders[i], orders[j]) > 1) edges.emplace_back(i, j);
    std::size_t best = 0;
    std::vector<bool> used(m, false);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t from, std::size_t picked) {
        best = std::max(best, picked);
        for (std::size_t ei = from; ei < edges.size(); ++ei) {
            auto [i, j] = edges[ei];
            if (used[i] || used[j]) continue;
            used[i] = used[j] = true;
            go(ei + 1, picked + 1);
            used[i] = used[j] = false;
        }
    };
    go(0, 0);
    return best;
}

inline bool pairwise_coprime(const std::vector<i64>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (std::gcd(v[i], v[j]) != 1) return false;
    return true;
}

} // namespace detail

// Necessary conditions for the four admissible genus-zero base families.
inline AdmissibilityVerdict classify_base(const BaseOrbifold& b) {
    b.validate();
    AdmissibilityVerdict v;
    auto note = [&](bool ok, const std::string& what) {
        v.reasons.push_back(std::string(ok ? "pass: " : "fail: ") + what);
        return ok;
    };

    if (b.family == BaseOrbifold::Family::Sphere) {
        const auto& a = b.cone_orders;
        const std::size_t m = a.size();
        bool ok = note(m >= 3, "sphere family needs at least 3 cone points (aspherical bound)");
        bool three = true;
        for (std::size_t i = 0; i < m && three; ++i)
            for (std::size_t j = i + 1; j < m && three; ++j)
                for (std::size_t k = j + 1; k < m && three; ++k)
                    if (std::gcd(a[i], std::gcd(a[j], a[k])) > 1) three = false;
        ok = note(three, "no three cone orders share a nontrivial factor") && ok;
        const std::size_t match = detail::max_sharing_matching(a);
        ok = note(match <= 2, "at most two disjoint pairs of cone orders share a factor (max found: " +
                                  std::to_string(match) + ")") &&
             ok;
        if (ok) {
            v.admissible = true;
            v.case_tag = AdmissibilityVerdict::Case::S2;
            if (m >= 5) {
                v.weight_open = true;
                v.reasons.push_back("note: weight-1 status is open for sphere bases with 5 or more cone points");
            }
        }
        return v;
    }

    if (b.family == BaseOrbifold::Family::Projective) {
        const auto& orders = b.cone_orders;
        const std::size_t m = orders.size();
        std::vector<i64> sorted = orders;
        std::sort(sorted.begin(), sorted.end());
        if (sorted == std::vector<i64>{3, 4, 5}) {
            note(true, "exceptional projective base with cone orders {3,4,5}");
            v.admissible = true;
            v.case_tag = AdmissibilityVerdict::Case::P2_345;
            return v;
        }
        bool ok = note(m == 2 || m == 3, "projective family needs 2 or 3 cone points");
        ok = note(detail::pairwise_coprime(orders), "cone orders pairwise relatively prime") && ok;
        if (m == 3)
            ok = note(sorted[0] == 2, "with 3 cone points the smallest order must be 2") && ok;
        if (ok) {
            v.admissible = true;
            v.case_tag = AdmissibilityVerdict::Case::P2;
            if (m == 3) {
                v.weight_open = true;
                v.reasons.push_back("note: weight-1 status is open for the projective (2,b,c) family");
            }
        }
        return v;
    }

    // Disk
    const std::size_t p = b.cone_orders.size(), q = b.corner_orders.size();
    bool ok = note(p <= 2, "disk family allows at most 2 cone points");
    ok = note(2 * p + q >= 3, "2p + q >= 3 (aspherical bound)") && ok;
    bool odd = std::all_of(b.cone_orders.begin(), b.cone_orders.end(), [](i64 c) { return c % 2 == 1; });
    ok = note(odd, "disk cone orders all odd") && ok;
    ok = note(detail::pairwise_coprime(b.cone_orders), "disk cone orders pairwise coprime") && ok;
    const auto evens = std::count_if(b.corner_orders.begin(), b.corner_orders.end(),
                                     [](i64 d) { return d % 2 == 0; });
    ok = note(evens <= 1, "at most one corner order is even") && ok;
    if (ok) {
        v.admissible = true;
        v.case_tag = AdmissibilityVerdict::Case::Disk;
        if (p == 2) {
            v.weight_open = true;
            v.reasons.push_back("note: weight-1 status is open for disk bases with 2 cone points");
        }
    }
    return v;
}

// ---- orbifold fundamental group presentations -------------------------------

struct OrbifoldPresentation {
    Presentation pres;
    // per-generator: true = orientation-preserving (cone rotations),
    // false = reversing (the projective u-generator and the disk reflections)
    std::vector<bool> preserves;
};

inline OrbifoldPresentation orbifold_presentation(const BaseOrbifold& b) {
    b.validate();
    OrbifoldPresentation out;
    Presentation& p = out.pres;
    const std::size_t m = b.cone_orders.size();

    auto cone_gen = [&](std::size_t i) { return static_cast<int>(i); };

    if (b.family == BaseOrbifold::Family::Sphere) {
        for (std::size_t i = 0; i < m; ++i) {
            p.generators.push_back("v" + std::to_string(i + 1));
            out.preserves.push_back(true);
        }
        for (std::size_t i = 0; i < m; ++i)
            p.add_relator(Word::gen(cone_gen(i), b.cone_orders[i]));
        Word prod;
        for (std::size_t i = 0; i < m; ++i) prod.append(cone_gen(i), 1);
        p.add_relator(prod);
        return out;
    }

    if (b.family == BaseOrbifold::Family::Projective) {
        p.generators.push_back("u");
        out.preserves.push_back(false);
        for (std::size_t i = 0; i < m; ++i) {
            p.generators.push_back("v" + std::to_string(i + 1));
            out.preserves.push_back(true);
        }
        // u^2 = v_1 ... v_m, emitted as u^-2 v_1 ... v_m
        Word rel = Word::gen(0, -2);
        for (std::size_t i = 0; i < m; ++i) rel.append(static_cast<int>(1 + i), 1);
        p.add_relator(rel);
        for (std::size_t i = 0; i < m; ++i)
            p.add_relator(Word::gen(static_cast<int>(1 + i), b.cone_orders[i]));
        return out;
    }

    // Disk: generators v_1..v_p (cones), x_1..x_{q+1} (boundary reflections)
    const std::size_t q = b.corner_orders.size();
    for (std::size_t i = 0; i < m; ++i) {
        p.generators.push_back("v" + std::to_string(i + 1));
        out.preserves.push_back(true);
    }
    for (std::size_t j = 0; j < q + 1; ++j) {
        p.generators.push_back("x" + std::to_string(j + 1));
        out.preserves.push_back(false);
    }
    auto refl_gen = [&](std::size_t j) { return static_cast<int>(m + j); };
    for (std::size_t i = 0; i < m; ++i)
        p.add_relator(Word::gen(cone_gen(i), b.cone_orders[i]));
    for (std::size_t j = 0; j < q + 1; ++j)
        p.add_relator(Word::gen(refl_gen(j), 2));
    for (std::size_t j = 0; j < q; ++j) {
        Word w;
        w.append(refl_gen(j), 1);
        w.append(refl_gen(j + 1), 1);
        p.add_relator(w.pow(b.corner_orders[j]));
    }
    // closing relator: x_{q+1} (v_1...v_p) = (v_1...v_p) x_1
    Word prod;
    for (std::size_t i = 0; i < m; ++i) prod.append(cone_gen(i), 1);
    Word lhs = Word::gen(refl_gen(q), 1) * prod;
    Word rhs = prod * Word::gen(refl_gen(0), 1);
    p.add_relator(equation_relator(lhs, rhs));
    return out;
}

// ---- explicit weight-1 witnesses ---------------------------------------------

struct NormalGeneratorWitness {
    Word word;
    std::string justification;
};

// The explicit single normal generators available in three admissible shapes;
// nothing elsewhere.
inline std::optional<NormalGeneratorWitness> normal_generator_witness(const BaseOrbifold& b) {
    b.validate();
    const auto& a = b.cone_orders;

    if (b.family == BaseOrbifold::Family::Sphere && a.size() == 3) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (a[i] % 2 == 1) {
                const std::size_t j = (i + 1) % 3;
                Word w = Word::gen(static_cast<int>(i), -1) * Word::gen(static_cast<int>(j), 1);
                return NormalGeneratorWitness{
                    w, "v" + std::to_string(i + 1) + "^-1 v" + std::to_string(j + 1) +
                           " normally generates: cone order " + std::to_string(a[i]) +
                           " at slot " + std::to_string(i + 1) + " is odd"};
            }
        }
        return std::nullopt;
    }

    if (b.family == BaseOrbifold::Family::Sphere && a.size() == 4) {
        // search for a partition into two coprime pairs
        const std::array<std::array<std::size_t, 4>, 3> pairings{
            {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
        for (const auto& pr : pairings) {
            if (std::gcd(a[pr[0]], a[pr[1]]) == 1 && std::gcd(a[pr[2]], a[pr[3]]) == 1) {
                Word w = Word::gen(static_cast<int>(pr[0]), 1) * Word::gen(static_cast<int>(pr[1]), 1);
                return NormalGeneratorWitness{
                    w, "v" + std::to_string(pr[0] + 1) + " v" + std::to_string(pr[1] + 1) +
                           " normally generates after pairing the cone orders into coprime pairs (" +
                           std::to_string(a[pr[0]]) + "," + std::to_string(a[pr[1]]) + ") and (" +
                           std::to_string(a[pr[2]]) + "," + std::to_string(a[pr[3]]) + ")"};
            }
        }
        return std::nullopt;
    }

    if (b.family == BaseOrbifold::Family::Projective && a.size() == 2) {
        // generators in presentation order: u, v1, v2
        Word w = Word::gen(1, -1) * Word::gen(0, 1);
        return NormalGeneratorWitness{
            w, "v1^-1 u normally generates the two-cone projective base group"};
    }

    return std::nullopt;
}

} // namespace orbiweight
