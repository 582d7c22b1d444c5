#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>
#include <optional>

#include "rational.hpp"
#include "errors.hpp"

namespace orbiweight {

// Element of the 3-generator lattice group in normal form h^c u^{s1} v^{s2} x^rho,
// where h is central, (u, v) generate the translation part, and x is the
// order-3-mod-centre piece (x^3 = h).
struct GEl {
    i64 c = 0;
    i64 s1 = 0, s2 = 0;
    int rho = 0; // in {0, 1, 2}
    friend bool operator==(const GEl&, const GEl&) = default;
};

// Central extension of the p3 wallpaper group by <h>, with multiplication
// driven by three integer cocycle constants (c0, g1, g2):
//   v u = u v h^{-c0},   x u x^{-1} = v h^{g1},   x v x^{-1} = (uv)^{-1} h^{g2},
//   x^3 = h.
// The constants are solved from the defining relators (see solve_constants),
// not assumed.
class NilModel {
public:
    i64 c0 = 0, g1 = 0, g2 = 0;

    NilModel() = default;
    NilModel(i64 c0_, i64 g1_, i64 g2_) : c0(c0_), g1(g1_), g2(g2_) {}

    static GEl ident() { return {}; }
    static GEl h() { return {1, 0, 0, 0}; }
    static GEl x() { return {0, 0, 0, 1}; }
    static GEl u() { return {0, 1, 0, 0}; }
    static GEl v() { return {0, 0, 1, 0}; }

    GEl mul(const GEl& g, const GEl& gp) const {
        // slide x^rho of g across the translation part of gp
        std::array<i64, 2> vec{gp.s1, gp.s2};
        i64 cent = 0;
        for (int i = 0; i < g.rho; ++i) conj_x(vec, cent);
        const i64 a = vec[0], b = vec[1];
        // reorder v^{s2} u^{a} = u^{a} v^{s2} h^{-s2*a*c0}
        i64 ctot = g.c + gp.c + cent - g.s2 * a * c0;
        int rh = g.rho + gp.rho;
        ctot += rh / 3; // x^3 = h
        rh %= 3;
        return {ctot, g.s1 + a, g.s2 + b, rh};
    }

    GEl inv(const GEl& g) const {
        GEl xinv = g.rho == 0 ? ident() : GEl{-1, 0, 0, (3 - g.rho) % 3};
        GEl t = mul(xinv, {-g.c, 0, 0, 0});
        t = mul(t, {0, 0, -g.s2, 0});
        t = mul(t, {0, -g.s1, 0, 0});
        if (mul(g, t) != ident())
            throw NormalFormIncomplete("normal-form inverse failed its self-check");
        return t;
    }

    GEl pow(const GEl& g, i64 n) const {
        if (n < 0) return pow(inv(g), -n);
        GEl acc = ident();
        for (i64 i = 0; i < n; ++i) acc = mul(acc, g);
        return acc;
    }

    GEl word(std::initializer_list<std::pair<GEl, i64>> letters) const {
        GEl acc = ident();
        for (const auto& [g, n] : letters) acc = mul(acc, pow(g, n));
        return acc;
    }

private:
    // x (u^{a} v^{b} h^{cent}) x^{-1}: rewrite through the conjugation rules,
    // accumulating into (vec, cent); all intermediate elements have rho = 0.
    void conj_x(std::array<i64, 2>& vec, i64& cent) const {
        const i64 a = vec[0], b = vec[1];
        GEl acc{cent, 0, 0, 0};
        acc = mul(acc, {a * g1, 0, a, 0}); // (x u x^{-1})^a = v^a h^{a g1}
        GEl step = inv({0, 1, 1, 0});      // (uv)^{-1}
        step.c += g2;                      // x v x^{-1} = (uv)^{-1} h^{g2}
        if (b >= 0) {
            for (i64 i = 0; i < b; ++i) acc = mul(acc, step);
        } else {
            const GEl istep = inv(step);
            for (i64 i = 0; i < -b; ++i) acc = mul(acc, istep);
        }
        if (acc.rho != 0)
            throw NormalFormIncomplete("conjugation by x left a nonzero rotation part");
        vec = {acc.s1, acc.s2};
        cent = acc.c;
    }
};

// z = x u^{-1} and w = x^{3e-1} z^{-1} are the other two finite-order-mod-centre
// generators; the defining relators pin the cocycle constants.
struct NilModelSolution {
    NilModel model;
    GEl h, x, u, v, z;
};

// Solve the cocycle constants from the relators z^3 = h and (x^{3e-1} z^{-1})^3 = h,
// then pick the gauge anchored by x z^{-1} = v and z^{-1} x = u exactly. The
// search range grows with |e| to keep the full solution set in scope; exactly
// one anchored solution must survive.
inline NilModelSolution solve_nil_model(i64 e) {
    const i64 R = 3 * (e < 0 ? -e : e) + 9;
    std::vector<std::array<i64, 3>> anchored;
    for (i64 c0 = -R; c0 <= R; ++c0)
        for (i64 g1 = -R; g1 <= R; ++g1)
            for (i64 g2 = -R; g2 <= R; ++g2) {
                try {
                    NilModel M(c0, g1, g2);
                    const GEl h = NilModel::h(), x = NilModel::x(), u = NilModel::u(), v = NilModel::v();
                    const GEl z = M.mul(x, M.inv(u));
                    if (M.pow(z, 3) != h) continue;
                    const GEl w = M.mul(M.pow(x, 3 * e - 1), M.inv(z));
                    if (M.pow(w, 3) != h) continue;
                    if (M.mul(x, M.inv(z)) != v || M.mul(M.inv(z), x) != u) continue;
                    anchored.push_back({c0, g1, g2});
                } catch (const NormalFormIncomplete&) {
                    // a candidate whose rewriting is internally inconsistent is not a solution
                }
            }
    if (anchored.size() != 1)
        throw NormalFormIncomplete("cocycle solve found " + std::to_string(anchored.size()) +
                                   " anchored solutions for e=" + std::to_string(e) +
                                   " (expected exactly 1)");
    NilModel M(anchored[0][0], anchored[0][1], anchored[0][2]);
    NilModelSolution sol{M, NilModel::h(), NilModel::x(), NilModel::u(), NilModel::v(), {}};
    sol.z = M.mul(sol.x, M.inv(sol.u));
    return sol;
}

// Relator, centrality, and associativity validation of a solved model.
inline void validate_nil_model(const NilModelSolution& s, i64 e) {
    const NilModel& M = s.model;
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw NormalFormIncomplete(std::string("model validation failed: ") + what);
    };
    need(M.pow(s.x, 3) == s.h, "x^3 = h");
    need(M.pow(s.z, 3) == s.h, "z^3 = h");
    const GEl w = M.mul(M.pow(s.x, 3 * e - 1), M.inv(s.z));
    need(M.pow(w, 3) == s.h, "(x^{3e-1} z^{-1})^3 = h");
    need(M.word({{s.x, 1}, {w, 1}, {s.z, 1}}) == M.pow(s.h, e), "x y z = h^e with y = x^{3e-1} z^{-1}");
    need(M.mul(M.inv(s.z), s.x) == s.u, "z^{-1} x = u");
    need(M.mul(s.x, M.inv(s.z)) == s.v, "x z^{-1} = v");
    for (const GEl& g : {s.x, s.u, s.v, s.z})
        need(M.mul(s.h, g) == M.mul(g, s.h), "h central");
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<i64> comp(-3, 3);
    std::uniform_int_distribution<int> rot(0, 2);
    auto rnd = [&] { return GEl{comp(rng), comp(rng), comp(rng), rot(rng)}; };
    for (int i = 0; i < 200; ++i) {
        const GEl A = rnd(), B = rnd(), C = rnd();
        need(M.mul(M.mul(A, B), C) == M.mul(A, M.mul(B, C)), "associativity on random triples");
    }
}

// The meridianal automorphism theta(x) = x^{-1} z x^{2-3e}, theta(z) = x^{-1},
// applied through the normal form, plus its inverse.
class NilTheta {
public:
    NilTheta(const NilModelSolution& s, i64 e) : M_(s.model) {
        const NilModel& M = M_;
        tx_ = M.word({{M.inv(s.x), 1}, {s.z, 1}, {s.x, 2 - 3 * e}});
        tz_ = M.inv(s.x);
        th_h_ = M.pow(tx_, 3);
        tu_ = M.mul(M.inv(tz_), tx_);
        tv_ = M.mul(tx_, M.inv(tz_));
        tix_ = M.inv(s.z);
        tiz_ = M.word({{M.inv(s.z), 1}, {s.x, 1}, {s.z, 2 - 3 * e}});
        ti_h_ = M.pow(tix_, 3);
        tiu_ = M.mul(M.inv(tiz_), tix_);
        tiv_ = M.mul(tix_, M.inv(tiz_));
    }

    GEl apply(const GEl& g) const {
        GEl out = M_.pow(th_h_, g.c);
        out = M_.mul(out, M_.pow(tu_, g.s1));
        out = M_.mul(out, M_.pow(tv_, g.s2));
        out = M_.mul(out, M_.pow(tx_, g.rho));
        return out;
    }

    GEl apply_inv(const GEl& g) const {
        GEl out = M_.pow(ti_h_, g.c);
        out = M_.mul(out, M_.pow(tiu_, g.s1));
        out = M_.mul(out, M_.pow(tiv_, g.s2));
        out = M_.mul(out, M_.pow(tix_, g.rho));
        return out;
    }

    GEl apply_pow(GEl g, i64 n) const {
        if (n >= 0)
            for (i64 i = 0; i < n; ++i) g = apply(g);
        else
            for (i64 i = 0; i < -n; ++i) g = apply_inv(g);
        return g;
    }

    const GEl& image_x() const { return tx_; }
    const GEl& image_z() const { return tz_; }
    const GEl& image_u() const { return tu_; }
    const GEl& image_v() const { return tv_; }

    // homomorphism + two-sided inverse spot-check on random elements
    void validate() const {
        std::mt19937_64 rng(43);
        std::uniform_int_distribution<i64> comp(-3, 3);
        std::uniform_int_distribution<int> rot(0, 2);
        auto rnd = [&] { return GEl{comp(rng), comp(rng), comp(rng), rot(rng)}; };
        for (int i = 0; i < 100; ++i) {
            const GEl A = rnd(), B = rnd();
            if (apply(M_.mul(A, B)) != M_.mul(apply(A), apply(B)))
                throw NormalFormIncomplete("meridianal map is not a homomorphism on the model");
            if (apply_inv(apply(A)) != A || apply(apply_inv(A)) != A)
                throw NormalFormIncomplete("meridianal map inverse fails on the model");
        }
    }

private:
    NilModel M_;
    GEl tx_, tz_, th_h_, tu_, tv_;
    GEl tix_, tiz_, ti_h_, tiu_, tiv_;
};

// The knot group as Z acting on the lattice group: element t^n g with
// (n, g)(n', g') = (n + n', theta^{-n'}(g) g').
struct PiEl {
    i64 n = 0;
    GEl g;
    friend bool operator==(const PiEl&, const PiEl&) = default;
};

class NilPi {
public:
    NilPi(const NilModelSolution& s, const NilTheta& th) : M_(s.model), th_(&th) {}

    static PiEl ident() { return {}; }
    PiEl mul(const PiEl& a, const PiEl& b) const {
        return {a.n + b.n, M_.mul(th_->apply_pow(a.g, -b.n), b.g)};
    }
    PiEl inv(const PiEl& a) const { return {-a.n, th_->apply_pow(M_.inv(a.g), a.n)}; }
    PiEl pow(const PiEl& a, i64 k) const {
        if (k < 0) return pow(inv(a), -k);
        PiEl acc = ident();
        for (i64 i = 0; i < k; ++i) acc = mul(acc, a);
        return acc;
    }
    bool commutes(const PiEl& a, const PiEl& b) const {
        return mul(mul(a, b), inv(mul(b, a))) == ident();
    }

private:
    NilModel M_;
    const NilTheta* th_;
};

} // namespace orbiweight
