#pragma once

#include <vector>
#include <array>
#include <string>
#include <optional>
#include <random>

#include "presentation.hpp"
#include "int_matrix.hpp"
#include "nil_model.hpp"

namespace orbiweight {

// ---- Theorem-9-style presentation families -----------------------------------

struct Theorem9Instance {
    enum class Case { S2, P2, Disk };
    Case case_tag = Case::S2;
    std::vector<i64> cone_orders;   // a_i / b_i / c_i per case
    std::vector<i64> corner_orders; // d_j (Disk only)
    std::vector<i64> e, f;          // exponents per cone point
    std::vector<i64> g, h;          // exponents per corner (Disk only)
    i64 k = 0, l = 0;

    void validate() const {
        auto fail = [](const std::string& why) { throw MalformedInstance(why); };
        if (case_tag != Case::Disk) {
            if (cone_orders.empty()) fail("cone order list must be nonempty");
            if (!corner_orders.empty() || !g.empty() || !h.empty())
                fail("corner data is only meaningful for the disk case");
        } else {
            if (cone_orders.empty() && corner_orders.empty())
                fail("disk instance needs at least one cone or corner order");
            if (g.size() != corner_orders.size() || h.size() != corner_orders.size())
                fail("corner exponent lists must match the corner order list");
            if (k != 0) fail("disk case forces k = 0 (the closing relator squares away)");
        }
        for (i64 a : cone_orders)
            if (a < 2) fail("cone order " + std::to_string(a) + " < 2");
        for (i64 d : corner_orders)
            if (d < 2) fail("corner order " + std::to_string(d) + " < 2");
        if (e.size() != cone_orders.size() || f.size() != cone_orders.size())
            fail("cone exponent lists must match the cone order list");
    }
};

// Presentation of the fibered-group family over the given base shape. The two
// fibre generators y, z come last; cone generators first (preceded by u in the
// projective case); disk reflections sit between cones and fibre generators.
inline Presentation build_theorem9_presentation(const Theorem9Instance& inst) {
    inst.validate();
    Presentation p;
    const std::size_t m = inst.cone_orders.size();

    auto commutes_with_fibre = [&](int gen, int ygen, int zgen) {
        Word wy = Word::gen(gen, 1) * Word::gen(ygen, 1) * Word::gen(gen, -1) * Word::gen(ygen, -1);
        Word wz = Word::gen(gen, 1) * Word::gen(zgen, 1) * Word::gen(gen, -1) * Word::gen(zgen, -1);
        p.add_relator(wy);
        p.add_relator(wz);
    };

    if (inst.case_tag == Theorem9Instance::Case::S2) {
        for (std::size_t i = 0; i < m; ++i) p.generators.push_back("x" + std::to_string(i + 1));
        p.generators.push_back("y");
        p.generators.push_back("z");
        const int iy = static_cast<int>(m), iz = static_cast<int>(m) + 1;
        for (std::size_t i = 0; i < m; ++i) {
            Word rhs = Word::gen(iy, inst.e[i]) * Word::gen(iz, inst.f[i]);
            p.add_relator(equation_relator(Word::gen(static_cast<int>(i), inst.cone_orders[i]), rhs));
            commutes_with_fibre(static_cast<int>(i), iy, iz);
        }
        Word prod;
        for (std::size_t i = 0; i < m; ++i) prod.append(static_cast<int>(i), 1);
        p.add_relator(equation_relator(prod, Word::gen(iy, inst.k) * Word::gen(iz, inst.l)));
        p.add_relator(equation_relator(Word::gen(iy, 1) * Word::gen(iz, 1),
                                       Word::gen(iz, 1) * Word::gen(iy, 1)));
        return p;
    }

    if (inst.case_tag == Theorem9Instance::Case::P2) {
        p.generators.push_back("u");
        for (std::size_t i = 0; i < m; ++i) p.generators.push_back("x" + std::to_string(i + 1));
        p.generators.push_back("y");
        p.generators.push_back("z");
        const int iu = 0, iy = static_cast<int>(m) + 1, iz = static_cast<int>(m) + 2;
        Word rhs;
        for (std::size_t i = 0; i < m; ++i) rhs.append(static_cast<int>(1 + i), 1);
        rhs.append(iy, inst.k);
        rhs.append(iz, inst.l);
        p.add_relator(equation_relator(Word::gen(iu, 2), rhs));
        for (std::size_t i = 0; i < m; ++i) {
            Word r = Word::gen(iy, inst.e[i]) * Word::gen(iz, inst.f[i]);
            p.add_relator(equation_relator(Word::gen(static_cast<int>(1 + i), inst.cone_orders[i]), r));
            commutes_with_fibre(static_cast<int>(1 + i), iy, iz);
        }
        // the off-diagonal involution: u y u^{-1} = z (the diagonal form would
        // force 2-torsion in the abelianization)
        p.add_relator(Word::gen(iu, 1) * Word::gen(iy, 1) * Word::gen(iu, -1) * Word::gen(iz, -1));
        p.add_relator(equation_relator(Word::gen(iy, 1) * Word::gen(iz, 1),
                                       Word::gen(iz, 1) * Word::gen(iy, 1)));
        return p;
    }

    // Disk: generators w_1..w_p, x_1..x_{q+1}, y, z
    const std::size_t q = inst.corner_orders.size();
    for (std::size_t i = 0; i < m; ++i) p.generators.push_back("w" + std::to_string(i + 1));
    for (std::size_t j = 0; j < q + 1; ++j) p.generators.push_back("x" + std::to_string(j + 1));
    p.generators.push_back("y");
    p.generators.push_back("z");
    const int iy = static_cast<int>(m + q + 1), iz = static_cast<int>(m + q + 2);
    auto refl = [&](std::size_t j) { return static_cast<int>(m + j); };
    for (std::size_t i = 0; i < m; ++i) {
        Word rhs = Word::gen(iy, inst.e[i]) * Word::gen(iz, inst.f[i]);
        p.add_relator(equation_relator(Word::gen(static_cast<int>(i), inst.cone_orders[i]), rhs));
        commutes_with_fibre(static_cast<int>(i), iy, iz);
    }
    // x_j^2 = y and x_j z x_j^{-1} = z^{-1} for every reflection generator,
    // j <= q+1: the conjugation rule extends to the last reflector (needed
    // already for q = 0, where no other relator constrains x_1 against z)
    for (std::size_t j = 0; j < q + 1; ++j) {
        p.add_relator(equation_relator(Word::gen(refl(j), 2), Word::gen(iy, 1)));
        p.add_relator(Word::gen(refl(j), 1) * Word::gen(iz, 1) * Word::gen(refl(j), -1) *
                      Word::gen(iz, 1));
    }
    for (std::size_t j = 0; j < q; ++j) {
        Word base = Word::gen(refl(j), 1) * Word::gen(refl(j + 1), 1);
        Word rhs = Word::gen(iy, inst.g[j]) * Word::gen(iz, inst.h[j]);
        p.add_relator(equation_relator(base.pow(inst.corner_orders[j]), rhs));
    }
    Word prodw;
    for (std::size_t i = 0; i < m; ++i) prodw.append(static_cast<int>(i), 1);
    Word lhs = Word::gen(refl(q), 1) * prodw;
    Word rhs = prodw * Word::gen(refl(0), 1) * Word::gen(iz, inst.l); // k = 0 enforced
    p.add_relator(equation_relator(lhs, rhs));
    return p;
}

// The sphere-case family is torsion free only when no (a_i, e_i, f_i) shares a
// factor; returns the offending cone indices (0-based).
inline std::vector<std::size_t> torsion_gate_violations(const Theorem9Instance& inst) {
    inst.validate();
    std::vector<std::size_t> out;
    if (inst.case_tag != Theorem9Instance::Case::S2) return out;
    for (std::size_t i = 0; i < inst.cone_orders.size(); ++i)
        if (std::gcd(inst.cone_orders[i], std::gcd(inst.e[i] < 0 ? -inst.e[i] : inst.e[i],
                                                   inst.f[i] < 0 ? -inst.f[i] : inst.f[i])) > 1)
            out.push_back(i);
    return out;
}

namespace detail {

// the m+2 maximal minors of the sphere-case relation matrix, cleared of
// denominators: the first two scale by prod(a), the per-cone ones by
// prod(a)/a_i (the true maximal minors of the m+1 x m+2 matrix)
inline std::vector<i64> s2_minors(const Theorem9Instance& inst) {
    const auto& a = inst.cone_orders;
    const std::size_t m = a.size();
    const auto& e = inst.e;
    const auto& f = inst.f;
    i128 P = 1;
    for (i64 ai : a) P *= ai;
    std::vector<i64> out;
    i128 m1 = i128(inst.k) * P, m2 = i128(inst.l) * P;
    for (std::size_t i = 0; i < m; ++i) {
        m1 -= i128(e[i]) * (P / a[i]);
        m2 -= i128(f[i]) * (P / a[i]);
    }
    out.push_back(checked_i64(m1, "sphere-case minor"));
    out.push_back(checked_i64(m2, "sphere-case minor"));
    for (std::size_t i = 0; i < m; ++i) {
        i128 s = (i128(inst.k) * f[i] - i128(inst.l) * e[i]) * (P / a[i]);
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) s += (i128(e[i]) * f[j] - i128(e[j]) * f[i]) * (P / a[i] / a[j]);
        out.push_back(checked_i64(s, "sphere-case minor"));
    }
    return out;
}

inline bool s2_predicted(const Theorem9Instance& inst) {
    i64 g = 0;
    for (i64 x : s2_minors(inst)) g = std::gcd(g, x < 0 ? -x : x);
    return g == 1;
}

inline bool p2_predicted(const Theorem9Instance& inst) {
    const std::size_t m = inst.cone_orders.size();
    i64 sum = inst.k + inst.l;
    bool some_even = false;
    for (std::size_t i = 0; i < m; ++i) {
        const i64 ef = inst.e[i] + inst.f[i];
        if (std::gcd(inst.cone_orders[i], ef < 0 ? -ef : ef) != 1) return false;
        if (inst.cone_orders[i] % 2 == 0) some_even = true;
        sum += ef;
    }
    return some_even || (sum % 2 != 0);
}

// reading A of the disk-case condition: g_j = d_j and gcd(2, d_j, h_j) = 1
inline bool disk_reading_a(const Theorem9Instance& inst) {
    for (std::size_t j = 0; j < inst.corner_orders.size(); ++j) {
        if (inst.g[j] != inst.corner_orders[j]) return false;
        if (inst.corner_orders[j] % 2 == 0 && inst.h[j] % 2 == 0) return false;
    }
    return true;
}

// reading B: the literal letters, e_j = d_j for j <= q (forcing q <= p), plus
// the rank condition g_j = d_j and the parity condition
inline bool disk_reading_b(const Theorem9Instance& inst) {
    const std::size_t p = inst.cone_orders.size(), q = inst.corner_orders.size();
    if (q > p) return false;
    for (std::size_t j = 0; j < q; ++j) {
        if (inst.e[j] != inst.corner_orders[j]) return false;
        if (inst.corner_orders[j] % 2 == 0 && inst.h[j] % 2 == 0) return false;
        if (inst.g[j] != inst.corner_orders[j]) return false;
    }
    return true;
}

} // namespace detail

struct Theorem9Check {
    bool predicted = false; // the closed-form condition for infinite cyclic abelianization
    bool oracle = false;    // Smith-normal-form verdict on the emitted presentation
    bool agree = false;
    // disk case only: the two candidate readings of the stated condition,
    // reported side by side (neither is asserted correct)
    std::optional<bool> reading_a, reading_b;
};

inline Theorem9Check check_theorem9_conditions(const Theorem9Instance& inst) {
    inst.validate();
    Theorem9Check out;
    switch (inst.case_tag) {
        case Theorem9Instance::Case::S2: out.predicted = detail::s2_predicted(inst); break;
        case Theorem9Instance::Case::P2: out.predicted = detail::p2_predicted(inst); break;
        case Theorem9Instance::Case::Disk:
            out.reading_a = detail::disk_reading_a(inst);
            out.reading_b = detail::disk_reading_b(inst);
            out.predicted = *out.reading_a;
            break;
    }
    out.oracle = abelianization(build_theorem9_presentation(inst)).is_infinite_cyclic;
    out.agree = out.predicted == out.oracle;
    return out;
}

// ---- randomized instance samplers (used by the agreement sweeps) --------------

inline Theorem9Instance random_theorem9_instance(Theorem9Instance::Case c, std::mt19937_64& rng) {
    auto ri = [&](i64 lo, i64 hi) {
        return std::uniform_int_distribution<i64>(lo, hi)(rng);
    };
    Theorem9Instance inst;
    inst.case_tag = c;
    if (c == Theorem9Instance::Case::S2) {
        const std::size_t m = static_cast<std::size_t>(ri(1, 4));
        for (std::size_t i = 0; i < m; ++i) inst.cone_orders.push_back(ri(2, 9));
        for (std::size_t i = 0; i < m; ++i) inst.e.push_back(ri(-9, 9));
        for (std::size_t i = 0; i < m; ++i) inst.f.push_back(ri(-9, 9));
        inst.k = ri(-9, 9);
        inst.l = ri(-9, 9);
        return inst;
    }
    if (c == Theorem9Instance::Case::P2) {
        // the closed form presumes the admissible family: pairwise coprime orders
        while (true) {
            inst.cone_orders.clear();
            const std::size_t m = static_cast<std::size_t>(ri(1, 4));
            for (std::size_t i = 0; i < m; ++i) inst.cone_orders.push_back(ri(2, 9));
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i)
                for (std::size_t j = i + 1; j < m && ok; ++j)
                    if (std::gcd(inst.cone_orders[i], inst.cone_orders[j]) != 1) ok = false;
            if (ok) break;
        }
        const std::size_t m = inst.cone_orders.size();
        for (std::size_t i = 0; i < m; ++i) inst.e.push_back(ri(-9, 9));
        for (std::size_t i = 0; i < m; ++i) inst.f.push_back(ri(-9, 9));
        inst.k = ri(-9, 9);
        inst.l = ri(-9, 9);
        return inst;
    }
    // Disk: admissible shapes (p <= 2, 2p + q >= 3, odd pairwise-coprime cones,
    // at most one even corner), with a bias toward g_j = d_j to hit the locus
    // where the readings differ
    while (true) {
        inst.cone_orders.clear();
        inst.corner_orders.clear();
        const i64 p = ri(0, 2);
        i64 q = ri(p == 2 ? 0 : std::max<i64>(0, 3 - 2 * p), 4);
        if (2 * p + q < 3) q = 3 - 2 * p;
        const std::array<i64, 4> pool{3, 5, 7, 9};
        for (i64 i = 0; i < p; ++i)
            inst.cone_orders.push_back(pool[static_cast<std::size_t>(ri(0, 3))]);
        bool ok = true;
        for (std::size_t i = 0; i < inst.cone_orders.size() && ok; ++i)
            for (std::size_t j = i + 1; j < inst.cone_orders.size() && ok; ++j)
                if (std::gcd(inst.cone_orders[i], inst.cone_orders[j]) != 1) ok = false;
        if (!ok) continue;
        for (i64 j = 0; j < q; ++j) inst.corner_orders.push_back(ri(2, 9));
        i64 evens = 0;
        for (i64 d : inst.corner_orders)
            if (d % 2 == 0) ++evens;
        if (evens > 1) continue;
        break;
    }
    const std::size_t p = inst.cone_orders.size(), q = inst.corner_orders.size();
    for (std::size_t i = 0; i < p; ++i) inst.e.push_back(ri(-9, 9));
    for (std::size_t i = 0; i < p; ++i) inst.f.push_back(ri(-9, 9));
    if (ri(0, 1) == 0) {
        inst.g = inst.corner_orders;
    } else {
        for (std::size_t j = 0; j < q; ++j) inst.g.push_back(ri(-9, 9));
    }
    for (std::size_t j = 0; j < q; ++j) inst.h.push_back(ri(-9, 9));
    inst.k = 0;
    inst.l = ri(-9, 9);
    return inst;
}

// ---- the parametrized lattice knot groups ---------------------------------------

struct NilKnotGroup {
    i64 e = 0;
    Presentation presentation; // generators t, x, z
};

inline NilKnotGroup build_theorem10_group(i64 e) {
    if (e % 2 != 0)
        throw OddParameter("the lattice knot-group family needs an even parameter, got e=" +
                           std::to_string(e));
    NilKnotGroup g;
    g.e = e;
    Presentation& p = g.presentation;
    p.generators = {"t", "x", "z"};
    const int it = 0, ix = 1, iz = 2;
    Word x3 = Word::gen(ix, 3);
    Word w = Word::gen(ix, 3 * e - 1) * Word::gen(iz, -1); // x^{3e-1} z^{-1}
    Word w3 = w.pow(3);
    p.add_relator(equation_relator(x3, w3));
    p.add_relator(equation_relator(w3, Word::gen(iz, 3)));
    Word conj_x = Word::gen(it, 1) * Word::gen(ix, 1) * Word::gen(it, -1);
    Word rhs_x = Word::gen(ix, -1) * Word::gen(iz, 1) * Word::gen(ix, 2 - 3 * e);
    p.add_relator(equation_relator(conj_x, rhs_x));
    Word conj_z = Word::gen(it, 1) * Word::gen(iz, 1) * Word::gen(it, -1);
    p.add_relator(equation_relator(conj_z, Word::gen(ix, -1)));
    return g;
}

// ---- the flat-quotient model ------------------------------------------------------

// Element of the p3 wallpaper group: lattice translation over basis (u, v)
// plus a power of the order-3 rotation R = [[0,-1],[1,-1]].
struct P3Element {
    std::array<i64, 2> s{0, 0};
    int rho = 0;
    friend bool operator==(const P3Element&, const P3Element&) = default;
};

inline std::array<i64, 2> p3_rotate(int rho, std::array<i64, 2> v) {
    for (int i = 0; i < ((rho % 3) + 3) % 3; ++i) v = {-v[1], v[0] - v[1]};
    return v;
}

inline P3Element p3_mul(const P3Element& a, const P3Element& b) {
    const auto w = p3_rotate(a.rho, b.s);
    return {{a.s[0] + w[0], a.s[1] + w[1]}, (a.rho + b.rho) % 3};
}

inline P3Element p3_inv(const P3Element& a) {
    const int r = (3 - a.rho) % 3;
    const auto w = p3_rotate(r, a.s);
    return {{-w[0], -w[1]}, r};
}

inline P3Element p3_pow(P3Element a, i64 n) {
    if (n < 0) {
        a = p3_inv(a);
        n = -n;
    }
    P3Element acc;
    for (i64 i = 0; i < n; ++i) acc = p3_mul(acc, a);
    return acc;
}

// Images of x and z in the flat quotient (order-3 rotations about distinct
// centres), validated against the three defining relators; u = z^{-1} x and
// v = x z^{-1} land on the two basis translations.
inline std::pair<P3Element, P3Element> p3_quotient_images(i64 e) {
    if (e % 2 != 0) throw OddParameter("flat-quotient images need an even parameter");
    const P3Element xbar{{0, 0}, 1};
    const P3Element zbar{{0, -1}, 1};
    auto need = [](bool ok, const char* what) {
        if (!ok) throw ModelValidationFailed(std::string("flat-quotient validation failed: ") + what);
    };
    const P3Element id{};
    need(p3_pow(xbar, 3) == id, "xbar^3 = 1");
    need(p3_pow(zbar, 3) == id, "zbar^3 = 1");
    const P3Element wbar = p3_mul(p3_pow(xbar, 3 * e - 1), p3_inv(zbar));
    need(p3_pow(wbar, 3) == id, "(xbar^{3e-1} zbar^{-1})^3 = 1");
    const P3Element ubar = p3_mul(p3_inv(zbar), xbar);
    const P3Element vbar = p3_mul(xbar, p3_inv(zbar));
    need(ubar == P3Element{{1, 0}, 0}, "ubar is the first basis translation");
    need(vbar == P3Element{{0, 1}, 0}, "vbar is the second basis translation");
    // index-3 structure: the x-cosets exhaust the rotation classes, and (u, v)
    // span the full translation lattice
    need(p3_pow(xbar, 0).rho == 0 && xbar.rho == 1 && p3_pow(xbar, 2).rho == 2,
         "x-cosets exhaust the three rotation classes");
    need(ubar.s[0] * vbar.s[1] - ubar.s[1] * vbar.s[0] == 1, "(u, v) span the lattice");
    return {xbar, zbar};
}

// ---- the induced action on the translation lattice ---------------------------------

struct WeightOrbitReport {
    IntMatrix theta;                      // 2x2, columns = images of (u, v)
    std::vector<i64> smith_of_theta_minus_identity;
    AbelianizationReport cokernel;        // of theta - I: the weight-orbit count
};

inline WeightOrbitReport weight_orbit_report(i64 e) {
    if (e % 2 != 0) throw OddParameter("weight-orbit report needs an even parameter");
    const auto [xbar, zbar] = p3_quotient_images(e);
    // push the meridianal action through the quotient:
    //   theta(x) = x^{-1} z x^{2-3e}, theta(z) = x^{-1}
    const P3Element tx = p3_mul(p3_mul(p3_inv(xbar), zbar), p3_pow(xbar, 2 - 3 * e));
    const P3Element tz = p3_inv(xbar);
    const P3Element tu = p3_mul(p3_inv(tz), tx);
    const P3Element tv = p3_mul(tx, p3_inv(tz));
    if (tu.rho != 0 || tv.rho != 0)
        throw ModelValidationFailed("meridianal action does not preserve the translation lattice");

    WeightOrbitReport rep;
    rep.theta = IntMatrix(2, 2);
    rep.theta.at(0, 0) = tu.s[0];
    rep.theta.at(1, 0) = tu.s[1];
    rep.theta.at(0, 1) = tv.s[0];
    rep.theta.at(1, 1) = tv.s[1];

    // type invariants: an involution inverting orientation on the lattice
    const i64 det = rep.theta.at(0, 0) * rep.theta.at(1, 1) - rep.theta.at(0, 1) * rep.theta.at(1, 0);
    IntMatrix sq(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) sq.at(i, j) += rep.theta.at(i, k) * rep.theta.at(k, j);
    if (det != -1 || sq.at(0, 0) != 1 || sq.at(1, 1) != 1 || sq.at(0, 1) != 0 || sq.at(1, 0) != 0)
        throw InternalInconsistency("induced lattice action is not an orientation-reversing involution");

    IntMatrix tmi(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) tmi.at(i, j) = rep.theta.at(i, j) - (i == j ? 1 : 0);
    const SmithResult snf = smith_normal_form(tmi);
    for (const cpp_int& d : snf.diagonal)
        rep.smith_of_theta_minus_identity.push_back(static_cast<i64>(d));
    std::size_t nonzero = 0;
    for (i64 d : rep.smith_of_theta_minus_identity)
        if (d != 0) ++nonzero;
    rep.cokernel.rank = 2 - nonzero;
    for (i64 d : rep.smith_of_theta_minus_identity)
        if (d > 1) rep.cokernel.torsion.push_back(d);
    rep.cokernel.is_infinite_cyclic = rep.cokernel.rank == 1 && rep.cokernel.torsion.empty();
    if (!rep.cokernel.is_infinite_cyclic)
        throw InternalInconsistency("weight-orbit cokernel is not infinite cyclic");
    return rep;
}

// ---- centrality in the full group ---------------------------------------------------

// Everything needed to compute in the group: the solved-and-validated lattice
// model, the meridianal automorphism, and the semidirect product.
struct NilEngine {
    NilModelSolution sol;
    NilTheta theta;
    NilPi pi;
    PiEl T, X, Z, U;

    explicit NilEngine(i64 e)
        : sol(solve_nil_model(checked_even(e))), theta(sol, e), pi(sol, theta) {
        validate_nil_model(sol, e);
        theta.validate();
        T = PiEl{1, NilModel::ident()};
        X = PiEl{0, sol.x};
        Z = PiEl{0, sol.z};
        U = PiEl{0, sol.u};
        // the conjugation relators must hold in the semidirect product
        const PiEl lhs1 = pi.mul(pi.mul(T, X), pi.inv(T));
        const PiEl rhs1 = PiEl{0, theta.image_x()};
        const PiEl lhs2 = pi.mul(pi.mul(T, Z), pi.inv(T));
        const PiEl rhs2 = PiEl{0, theta.image_z()};
        if (!(lhs1 == rhs1) || !(lhs2 == rhs2))
            throw NormalFormIncomplete("semidirect product does not satisfy the conjugation relators");
    }

private:
    static i64 checked_even(i64 e) {
        if (e % 2 != 0) throw OddParameter("lattice engine needs an even parameter");
        return e;
    }
};

struct CentralityReport {
    std::array<bool, 3> square_commutes{};      // (t^3 x)^2 vs t, x, z
    std::array<bool, 3> first_power_commutes{}; // t^3 x vs t, x, z
    bool square_central = false;
    bool first_power_central = false;
    // the element this artifact finds to actually generate the centre:
    // (t^3 u^2)^2, verified against all three generators
    std::array<bool, 3> corrected_commutes{};
    bool corrected_central = false;
};

inline CentralityReport centrality_report(i64 e) {
    NilEngine eng(e);
    const PiEl E1 = eng.pi.mul(eng.pi.pow(eng.T, 3), eng.X);
    const PiEl E2 = eng.pi.pow(E1, 2);
    const PiEl C = eng.pi.pow(eng.pi.mul(eng.pi.pow(eng.T, 3), eng.pi.pow(eng.U, 2)), 2);
    CentralityReport rep;
    const std::array<PiEl, 3> gens{eng.T, eng.X, eng.Z};
    for (std::size_t i = 0; i < 3; ++i) {
        rep.square_commutes[i] = eng.pi.commutes(E2, gens[i]);
        rep.first_power_commutes[i] = eng.pi.commutes(E1, gens[i]);
        rep.corrected_commutes[i] = eng.pi.commutes(C, gens[i]);
    }
    rep.square_central =
        rep.square_commutes[0] && rep.square_commutes[1] && rep.square_commutes[2];
    rep.first_power_central = rep.first_power_commutes[0] && rep.first_power_commutes[1] &&
                              rep.first_power_commutes[2];
    rep.corrected_central =
        rep.corrected_commutes[0] && rep.corrected_commutes[1] && rep.corrected_commutes[2];
    return rep;
}

// Whether (t^3 x)^2 commutes with each of t, x, z in the normal-form engine.
inline bool centrality_check(i64 e) { return centrality_report(e).square_central; }

} // namespace orbiweight
