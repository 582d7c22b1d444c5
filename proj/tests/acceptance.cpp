// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fail.
// Criteria 2 and 7 currently fail; the notes under them record exactly what
// the computation finds instead of the claimed statement.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "orbiweight/int_matrix.hpp"
#include "orbiweight/laurent.hpp"
#include "orbiweight/nil_knots.hpp"
#include "orbiweight/orbifold_base.hpp"
#include "orbiweight/presentation.hpp"
#include "orbiweight/rational.hpp"
#include "orbiweight/seifert.hpp"
#include "orbiweight/weight_lab.hpp"

using namespace orbiweight;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = false;
    std::string summary;
    std::vector<std::string> notes;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Verdict criterion1() {
    Verdict v;
    const QuasiPrimeTriple t(3, 4, 5);
    const bool none1 = !find_rst_bruteforce(t, {1, 1, 3}).has_value();
    const bool none2 = !find_rst_bruteforce(t, {1, 3, 1}).has_value();
    v.pass = none1 && none2;
    v.summary = v.pass ? "no (r,s,t) witness exists for (3,4,5) with residues (1,1,3) or (1,3,1)"
                       : "a witness was found where none should exist";
    return v;
}

Verdict criterion2() {
    Verdict v;
    const SweepResult res = residue_sweep(23, /*run_oracle=*/true, /*threads=*/1);
    std::size_t oracle_confirmed = 0, in_family = 0;
    for (const auto& f : res.failures) {
        if (!f.witness_exists) ++oracle_confirmed;
        // f.cls = (a, b, c, d, e, f); the failing family has 4 in one slot
        // with residue +-3 (mod 8) there and +-1 (mod 2*order) at the others
        const auto& c = f.cls;
        bool family = false;
        for (int slot = 0; slot < 3; ++slot) {
            if (c[slot] != 4) continue;
            bool ok = true;
            for (int j = 0; j < 3; ++j) {
                const i64 m = 2 * c[j], r = c[3 + j] % m;
                const i64 want = j == slot ? 3 : 1;
                ok = ok && (r == want || r == m - want);
            }
            family = family || ok;
        }
        if (family) ++in_family;
    }
    v.pass = res.failures.empty();
    std::ostringstream ss;
    if (v.pass) {
        ss << "all " << res.classes << " coprime residue classes admit a validated witness";
    } else {
        ss << res.failures.size() << " of " << res.classes
           << " coprime residue classes admit no witness (constructive and exhaustive routes "
              "agree on the other "
           << res.constructive_ok << ")";
        v.notes.push_back("the exhaustive scan confirms nonexistence on " +
                          std::to_string(oracle_confirmed) + " of " +
                          std::to_string(res.failures.size()) +
                          " failing classes: the existence claim itself is false there, the "
                          "constructive search is not at fault");
        v.notes.push_back(std::to_string(in_family) + " of " +
                          std::to_string(res.failures.size()) +
                          " failing classes have an entry 4 whose residue is +-3 (mod 8) while "
                          "the other residues are +-1 (mod twice their order); at "
                          "(r,s,t) = (1,1,1) the scaled psi-values there are {1/2p, 3/8, 1/2q} "
                          "with 2*(3/8) >= sum, and the scan rules out every other (r,s,t)");
    }
    v.summary = ss.str();
    return v;
}

Verdict criterion3() {
    Verdict v;
    std::size_t count = 0;
    for (i64 p = 3; p <= 50; ++p)
        for (i64 q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++count;
            const SeifertData s = torus_surgery_data(p, q);
            if (!(euler_number(s) == Rational(0))) {
                v.summary = "nonzero Euler invariant at (" + std::to_string(p) + "," +
                            std::to_string(q) + ")";
                return v;
            }
            const Theorem5Report r = theorem5_check(s);
            if (!r.cond1 || !r.cond2 || !r.cond3) {
                v.summary = "a necessary fibration condition fails at (" + std::to_string(p) +
                            "," + std::to_string(q) + ")";
                return v;
            }
            Rational recip(0);
            for (i64 a : s.base.cone_orders) recip = recip + Rational(1, a);
            const bool boundary = recip == Rational(1);
            if (boundary != (p == 3 && q == 2)) {
                v.summary = "sum of reciprocal cone orders hits 1 at an unexpected (p,q)";
                return v;
            }
        }
    v.pass = true;
    v.summary = "all " + std::to_string(count) +
                " surgery data sets have Euler invariant 0 and pass conditions (1)-(3); the "
                "reciprocal-order sum equals 1 exactly at (3,2)";
    return v;
}

Verdict criterion4() {
    Verdict v;
    std::size_t count = 0;
    for (i64 p = 3; p <= 20; ++p)
        for (i64 q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++count;
            const LaurentPoly delta = alexander_torus(p, q);
            const CyclotomicReport rep = is_cyclotomic_squarefree(delta);
            if (!rep.squarefree || !rep.cyclotomic_factors ||
                delta.degree() - delta.low() != (p - 1) * (q - 1)) {
                v.summary = "polynomial check fails at (" + std::to_string(p) + "," +
                            std::to_string(q) + ")";
                return v;
            }
        }
    if (alexander_torus(3, 2).str() != "1 - t + t^2") {
        v.summary = "the (3,2) polynomial is not t^2 - t + 1";
        return v;
    }
    v.pass = true;
    v.summary = "all " + std::to_string(count) +
                " torus polynomials are square-free products of cyclotomics of degree "
                "(p-1)(q-1); the (3,2) polynomial is 1 - t + t^2";
    return v;
}

Verdict criterion5() {
    Verdict v;
    const auto adm = [](const char* s) { return classify_base(parse_base(s)).admissible; };
    struct Fixture { const char* spec; bool expect; };
    const Fixture fixtures[] = {
        {"S2(2,3,6)", true}, {"P2(3,4,5)", true}, {"D(3;3)", true},
        {"S2(2,4,6)", false}, {"P2(3,5,7)", false},
    };
    for (const auto& f : fixtures)
        if (adm(f.spec) != f.expect) {
            v.summary = std::string("classifier disagrees on ") + f.spec;
            return v;
        }
    v.pass = true;
    v.summary = "S2(2,3,6), P2(3,4,5), D(3;3) admissible; S2(2,4,6), P2(3,5,7) rejected";
    return v;
}

Verdict criterion6() {
    Verdict v;
    std::mt19937_64 rng(20260819);
    std::uniform_int_distribution<int> ngen(1, 5), nrel(0, 6), nsyl(0, 6);
    std::uniform_int_distribution<i64> expo(-9, 9);
    const std::size_t trials = 10000;
    std::size_t disagreements = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        Presentation p;
        const int g = ngen(rng);
        for (int j = 0; j < g; ++j) p.generators.push_back("g" + std::to_string(j));
        std::uniform_int_distribution<int> pick(0, g - 1);
        const int r = nrel(rng);
        for (int j = 0; j < r; ++j) {
            Word w;
            const int s = nsyl(rng);
            for (int k = 0; k < s; ++k) w.append(pick(rng), expo(rng));
            p.relators.push_back(w);
        }
        const bool minors = minors_criterion(exponent_matrix(p));
        const bool snf = abelianization(p).is_infinite_cyclic;
        if (minors != snf) ++disagreements;
    }
    v.pass = disagreements == 0;
    v.summary = std::to_string(trials) + " random presentations: " +
                std::to_string(disagreements) +
                " disagreements between the minors criterion and the Smith-normal-form oracle";
    return v;
}

Verdict criterion7() {
    Verdict v;
    bool structure_ok = true, square_ok = true, first_ok = true, corrected_ok = true;
    for (i64 e : {-4, -2, 0, 2, 4, 6}) {
        const NilKnotGroup g = build_theorem10_group(e);
        if (!abelianization(g.presentation).is_infinite_cyclic) structure_ok = false;
        const WeightOrbitReport rep = weight_orbit_report(e);
        if (rep.theta.at(0, 0) != 0 || rep.theta.at(0, 1) != -1 || rep.theta.at(1, 0) != -1 ||
            rep.theta.at(1, 1) != 0)
            structure_ok = false;
        if (rep.smith_of_theta_minus_identity != std::vector<i64>{1, 0}) structure_ok = false;
        if (!rep.cokernel.is_infinite_cyclic) structure_ok = false;
        const CentralityReport cent = centrality_report(e);
        if (!centrality_check(e)) square_ok = false;     // claimed: (t^3 x)^2 central
        if (cent.first_power_central) first_ok = false;  // claimed: t^3 x not central
        if (!cent.corrected_central) corrected_ok = false;
    }
    v.pass = structure_ok && square_ok && first_ok;
    std::ostringstream ss;
    ss << "abelianization Z, Theta = [[0,-1],[-1,0]], Smith(Theta - I) = (1,0) "
       << (structure_ok ? "verified" : "FAILED") << " for all six parameters; t^3 x non-central "
       << (first_ok ? "verified" : "FAILED") << "; (t^3 x)^2 central "
       << (square_ok ? "verified" : "REFUTED");
    v.summary = ss.str();
    if (!square_ok) {
        v.notes.push_back("in the exact normal-form model (t^3 x)^2 commutes with none of t, x, z "
                          "at any tested parameter; the claimed central element is wrong as stated");
        v.notes.push_back(std::string("the element (t^3 u^2)^2 (u = z^-1 x) does generate the "
                                      "centre and passes every commutation test") +
                          (corrected_ok ? "" : " -- EXCEPT that it failed here too"));
    }
    return v;
}

Verdict criterion8() {
    Verdict v;
    std::mt19937_64 rng(20260819);
    std::size_t bad_s2 = 0, bad_p2 = 0, mism_a = 0, mism_b = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto inst = random_theorem9_instance(Theorem9Instance::Case::S2, rng);
        if (!check_theorem9_conditions(inst).agree) ++bad_s2;
    }
    for (int i = 0; i < 1000; ++i) {
        const auto inst = random_theorem9_instance(Theorem9Instance::Case::P2, rng);
        if (!check_theorem9_conditions(inst).agree) ++bad_p2;
    }
    std::vector<std::string> table;
    for (int i = 0; i < 1000; ++i) {
        const auto inst = random_theorem9_instance(Theorem9Instance::Case::Disk, rng);
        const auto chk = check_theorem9_conditions(inst);
        const bool ba = *chk.reading_a != chk.oracle, bb = *chk.reading_b != chk.oracle;
        if (ba) ++mism_a;
        if (bb) ++mism_b;
        if ((ba || bb) && table.size() < 5) {
            std::ostringstream row;
            row << "disk discrepancy: cones(";
            for (std::size_t j = 0; j < inst.cone_orders.size(); ++j)
                row << (j ? "," : "") << inst.cone_orders[j];
            row << ") corners(";
            for (std::size_t j = 0; j < inst.corner_orders.size(); ++j)
                row << (j ? "," : "") << inst.corner_orders[j];
            row << ") reading A=" << (*chk.reading_a ? "T" : "F")
                << " B=" << (*chk.reading_b ? "T" : "F") << " oracle=" << (chk.oracle ? "T" : "F");
            table.push_back(row.str());
        }
    }
    v.pass = bad_s2 == 0 && bad_p2 == 0;
    std::ostringstream ss;
    ss << "1000 sphere + 1000 projective instances: " << (bad_s2 + bad_p2)
       << " closed-form/oracle disagreements; disk readings A/B miss " << mism_a << "/" << mism_b
       << " of 1000 (reported, not asserted)";
    v.summary = ss.str();
    for (const auto& row : table) v.notes.push_back(row);
    return v;
}

Verdict criterion9() {
    Verdict v;
    // every reduced non-integer rational in (-1, 2) with denominator <= 12
    std::vector<std::pair<Rational, Rational>> values; // (value, psi)
    for (i64 q = 2; q <= 12; ++q)
        for (i64 p = -q + 1; p < 2 * q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const Rational r(p, q);
            values.emplace_back(r, psi(r));
        }
    std::size_t checked = 0, exceptions = 0;
    for (const auto& [xi, px] : values)
        for (const auto& [eta, pe] : values)
            for (const auto& [zeta, pz] : values) {
                const Rational sum = px + pe + pz;
                const Rational mx = std::max({px, pe, pz});
                if (!(mx + mx < sum)) continue;
                if ((xi + eta + zeta).is_integer() || (xi + eta - zeta).is_integer() ||
                    (xi - eta + zeta).is_integer() || (xi - eta - zeta).is_integer())
                    continue;
                ++checked;
                const SignMapPair maps = lemma1_maps(xi, eta, zeta);
                const bool differ = maps.phi.at_plus != maps.theta.at_plus ||
                                    maps.phi.at_minus != maps.theta.at_minus;
                if (!differ || !(maps.phi.is_bijection() || maps.theta.is_bijection()))
                    ++exceptions;
            }
    v.pass = exceptions == 0 && checked > 0;
    v.summary = std::to_string(checked) + " good triples with denominators <= 12: " +
                std::to_string(exceptions) +
                " exceptions to (maps differ and at least one is a bijection)";
    return v;
}

} // namespace

int main() {
    struct Entry {
        int number;
        double budget;
        Verdict (*run)();
    };
    const Entry entries[] = {
        {1, 1.0, criterion1},  {2, 60.0, criterion2}, {3, 5.0, criterion3},
        {4, 5.0, criterion4},  {5, 5.0, criterion5},  {6, 30.0, criterion6},
        {7, 10.0, criterion7}, {8, 60.0, criterion8}, {9, 10.0, criterion9},
    };
    bool all_pass = true;
    for (const Entry& e : entries) {
        const auto t0 = Clock::now();
        Verdict v;
        try {
            v = e.run();
        } catch (const std::exception& ex) {
            v.pass = false;
            v.summary = std::string("unexpected exception: ") + ex.what();
        }
        const double dt = seconds_since(t0);
        if (dt > e.budget) {
            v.pass = false;
            v.notes.push_back("runtime budget " + std::to_string(e.budget) + "s exceeded");
        }
        std::printf("%s criterion %d: %s [%.2fs]\n", v.pass ? "PASS" : "FAIL", e.number,
                    v.summary.c_str(), dt);
        for (const auto& n : v.notes) std::printf("  - %s\n", n.c_str());
        all_pass = all_pass && v.pass;
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria pass"
                                 : "acceptance: at least one criterion fails (see notes)");
    return all_pass ? 0 : 1;
}
