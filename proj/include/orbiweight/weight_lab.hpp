#pragma once

#include <optional>
#include <vector>
#include <array>
#include <map>
#include <string>
#include <algorithm>
#include <thread>
#include <mutex>
#include <cstdint>

#include "rational.hpp"

namespace orbiweight {

inline bool is_odd_prime(i64 n) {
    if (n < 3 || n % 2 == 0) return false;
    for (i64 p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

// 4 or an odd prime.
inline bool is_quasiprime(i64 n) { return n == 4 || is_odd_prime(n); }

// Three pairwise distinct quasi-primes.
struct QuasiPrimeTriple {
    i64 a, b, c;

    QuasiPrimeTriple(i64 a_, i64 b_, i64 c_) : a(a_), b(b_), c(c_) {
        for (i64 n : {a, b, c})
            if (!is_quasiprime(n))
                throw PreconditionViolated(std::to_string(n) + " is not a quasi-prime (4 or an odd prime)");
        if (a == b || b == c || a == c)
            throw PreconditionViolated("quasi-prime triple entries must be pairwise distinct");
    }

    // The one triple excluded from the constructive search.
    bool is_excluded() const {
        std::array<i64, 3> s{a, b, c};
        std::sort(s.begin(), s.end());
        return s == std::array<i64, 3>{3, 4, 5};
    }
};

// Residues coprime to twice the respective orders.
struct ResidueData {
    i64 d, e, f;
};

inline void validate_residues(const QuasiPrimeTriple& t, const ResidueData& r) {
    if (std::gcd(r.d, 2 * t.a) != 1)
        throw PreconditionViolated("gcd(d, 2a) != 1 for d=" + std::to_string(r.d) + ", a=" + std::to_string(t.a));
    if (std::gcd(r.e, 2 * t.b) != 1)
        throw PreconditionViolated("gcd(e, 2b) != 1 for e=" + std::to_string(r.e) + ", b=" + std::to_string(t.b));
    if (std::gcd(r.f, 2 * t.c) != 1)
        throw PreconditionViolated("gcd(f, 2c) != 1 for f=" + std::to_string(r.f) + ", c=" + std::to_string(t.c));
}

// Positive multipliers making the scaled triple good within the sum budget.
struct RstWitness {
    i64 r, s, t;
    friend bool operator==(const RstWitness& x, const RstWitness& y) {
        return x.r == y.r && x.s == y.s && x.t == y.t;
    }
};

// Full validation of a candidate witness:
//   gcd(r,a) = gcd(s,b) = gcd(t,c) = 1,  r/a + s/b + t/c < 1,
//   (rd/2a, se/2b, tf/2c) good.
inline bool witness_valid(const QuasiPrimeTriple& t, const ResidueData& res, const RstWitness& w) {
    if (w.r < 1 || w.s < 1 || w.t < 1) return false;
    if (std::gcd(w.r, t.a) != 1 || std::gcd(w.s, t.b) != 1 || std::gcd(w.t, t.c) != 1) return false;
    if (Rational(w.r, t.a) + Rational(w.s, t.b) + Rational(w.t, t.c) >= Rational(1)) return false;
    Rational xi = Rational::make(i128(w.r) * res.d, i128(2) * t.a);
    Rational eta = Rational::make(i128(w.s) * res.e, i128(2) * t.b);
    Rational zeta = Rational::make(i128(w.t) * res.f, i128(2) * t.c);
    return is_good(xi, eta, zeta);
}

// Exhaustive scan in lexicographic (r, s, t) order over 1 <= r < a, 1 <= s < b,
// 1 <= t < c (the sum constraint forces each quotient below 1). Independent
// oracle for the constructive search; returns the least witness or nothing.
inline std::optional<RstWitness> find_rst_bruteforce(const QuasiPrimeTriple& t, const ResidueData& res) {
    validate_residues(t, res);
    for (i64 r = 1; r < t.a; ++r) {
        if (std::gcd(r, t.a) != 1) continue;
        for (i64 s = 1; s < t.b; ++s) {
            if (std::gcd(s, t.b) != 1) continue;
            if (Rational(r, t.a) + Rational(s, t.b) >= Rational(1)) break;
            for (i64 u = 1; u < t.c; ++u) {
                if (std::gcd(u, t.c) != 1) continue;
                if (Rational(r, t.a) + Rational(s, t.b) + Rational(u, t.c) >= Rational(1)) break;
                RstWitness w{r, s, u};
                if (witness_valid(t, res, w)) return w;
            }
        }
    }
    return std::nullopt;
}

struct ConstructiveResult {
    RstWitness witness;
    std::string tag; // which case of the analysis produced it
};

namespace detail {

// Least positive residue of x modulo 2m, folded to the nearer side: the
// numerator of psi(x / 2m) over denominator 2m.
inline i64 residue_norm(i64 x, i64 m) {
    i64 mod = 2 * m;
    i64 v = ((x % mod) + mod) % mod;
    return std::min(v, mod - v);
}

template <typename Pred>
inline std::optional<i64> coprime_min(Pred&& pred, i64 modulus, i64 bound) {
    for (i64 rho = 1; rho <= bound; ++rho)
        if (std::gcd(rho, modulus) == 1 && pred(rho)) return rho;
    return std::nullopt;
}

} // namespace detail

// Constructive witness search following the existence proof's case analysis:
// normalize the residues, sort the three scaled values ascending, then try the
// proof's candidate shapes in order, each mapped back through the sort
// permutation and fully validated before being returned.
//
// Candidate shapes, in the order tried ("alpha <= beta <= gamma" is the sorted
// frame; A, B, C the matching orders; E the normalized middle residue):
//   (u,1,1)  : u minimal coprime to A with u*alpha + beta > gamma
//   (1,1,2v) : v minimal with v*psi(2*gamma) > alpha, if also v*psi(2*gamma) < beta
//   (1,1,2)  : fallback of the previous shape
//   (1,1,2x) : psi(2*gamma) <= alpha,  x minimal with x*psi(2*gamma) > alpha
//   (y,1,2)  : psi(2*gamma) <= beta,   y minimal coprime to A with y*alpha + psi(2*gamma) > beta
//   (z,1,2)  : psi(2*gamma) >  beta,   z minimal coprime to A with z*alpha + beta > psi(2*gamma)
//   (1,1,w), (1,w,1): minimal coprime multiplier pulling one slot's value into
//                     the open goodness window within the sum budget.
// The two branch groups swap priority when E = 1.
//
// Throws ExcludedTriple for {3,4,5}. Throws InternalInconsistency if no
// candidate validates; a witness is never returned unvalidated.
inline ConstructiveResult find_rst_constructive_tagged(const QuasiPrimeTriple& t, const ResidueData& res) {
    if (t.is_excluded())
        throw ExcludedTriple("the constructive search excludes the triple {3,4,5}");
    validate_residues(t, res);

    const i64 dn = detail::residue_norm(res.d, t.a);
    const i64 en = detail::residue_norm(res.e, t.b);
    const i64 fn = detail::residue_norm(res.f, t.c);

    struct Slot {
        Rational value;
        i64 order;
        int index;
    };
    std::array<Slot, 3> slots{{{Rational(dn, 2 * t.a), t.a, 0},
                               {Rational(en, 2 * t.b), t.b, 1},
                               {Rational(fn, 2 * t.c), t.c, 2}}};
    std::sort(slots.begin(), slots.end(), [](const Slot& x, const Slot& y) {
        if (x.value != y.value) return x.value < y.value;
        if (x.order != y.order) return x.order < y.order;
        return x.index < y.index;
    });
    const Rational alpha = slots[0].value, beta = slots[1].value, gamma = slots[2].value;
    const i64 A = slots[0].order, B = slots[1].order, C = slots[2].order;
    const i64 E = std::array<i64, 3>{dn, en, fn}[static_cast<std::size_t>(slots[1].index)];

    auto back = [&](i64 rf, i64 sf, i64 tf) {
        std::array<i64, 3> out{};
        out[static_cast<std::size_t>(slots[0].index)] = rf;
        out[static_cast<std::size_t>(slots[1].index)] = sf;
        out[static_cast<std::size_t>(slots[2].index)] = tf;
        return RstWitness{out[0], out[1], out[2]};
    };

    std::vector<std::pair<RstWitness, std::string>> cands;

    // main candidate: scale the smallest slot until it dominates
    if (auto u = detail::coprime_min([&](i64 k) { return Rational(k) * alpha + beta > gamma; }, A, 4 * A))
        cands.emplace_back(back(*u, 1, 1), "(u,1,1)");

    const Rational p2g = psi(Rational(2) * gamma);

    std::vector<std::pair<RstWitness, std::string>> case1, case2;
    {
        auto v = detail::coprime_min([&](i64 k) { return Rational(k) * p2g > alpha; }, 1, 4 * C);
        if (v && Rational(*v) * p2g < beta)
            case1.emplace_back(back(1, 1, 2 * *v), "(1,1,2v)");
        else
            case1.emplace_back(back(1, 1, 2), "(1,1,2)");
    }
    if (p2g <= alpha) {
        if (auto x = detail::coprime_min([&](i64 k) { return Rational(k) * p2g > alpha; }, 1, 4 * C))
            case2.emplace_back(back(1, 1, 2 * *x), "(1,1,2x)");
    } else if (p2g <= beta) {
        if (auto y = detail::coprime_min([&](i64 k) { return Rational(k) * alpha + p2g > beta; }, A, 4 * A))
            case2.emplace_back(back(*y, 1, 2), "(y,1,2)");
    } else {
        if (auto z = detail::coprime_min([&](i64 k) { return Rational(k) * alpha + beta > p2g; }, A, 4 * A))
            case2.emplace_back(back(*z, 1, 2), "(z,1,2)");
    }
    if (E == 1) {
        for (auto& c : case2) cands.push_back(std::move(c));
        for (auto& c : case1) cands.push_back(std::move(c));
    } else {
        for (auto& c : case1) cands.push_back(std::move(c));
        for (auto& c : case2) cands.push_back(std::move(c));
    }

    // window completion: minimal coprime multiplier landing one slot inside
    // the open interval that makes the triple good, within the sum budget
    {
        const Rational budget_c = Rational(1) - Rational(1, A) - Rational(1, B);
        const Rational lo = beta - alpha, hi = beta + alpha;
        auto w = detail::coprime_min(
            [&](i64 k) {
                if (Rational(k, C) >= budget_c) return false;
                Rational v = psi(Rational(k) * gamma);
                return lo < v && v < hi;
            },
            C, C);
        if (w) cands.emplace_back(back(1, 1, *w), "(1,1,w)");

        const Rational budget_b = Rational(1) - Rational(1, A) - Rational(1, C);
        const Rational lo2 = gamma - alpha, hi2 = gamma + alpha;
        auto w2 = detail::coprime_min(
            [&](i64 k) {
                if (Rational(k, B) >= budget_b) return false;
                Rational v = psi(Rational(k) * beta);
                return lo2 < v && v < hi2;
            },
            B, B);
        if (w2) cands.emplace_back(back(1, *w2, 1), "(1,w,1)");
    }

    std::string tried;
    for (const auto& [cand, tag] : cands) {
        if (witness_valid(t, res, cand)) return ConstructiveResult{cand, tag};
        if (!tried.empty()) tried += ", ";
        tried += tag;
    }
    throw InternalInconsistency(
        "constructive search exhausted its candidates for (a,b,c)=(" + std::to_string(t.a) + "," +
        std::to_string(t.b) + "," + std::to_string(t.c) + "), (d,e,f)=(" + std::to_string(res.d) +
        "," + std::to_string(res.e) + "," + std::to_string(res.f) + "); tried: " + tried);
}

inline RstWitness find_rst_constructive(const QuasiPrimeTriple& t, const ResidueData& res) {
    return find_rst_constructive_tagged(t, res).witness;
}

// ---- weight-obstruction certificates -------------------------------------

enum class WeightVerdict { KilledByDivisibility, ObstructedByGoodTriple, NotObstructed };

inline const char* to_string(WeightVerdict v) {
    switch (v) {
        case WeightVerdict::KilledByDivisibility: return "KilledByDivisibility";
        case WeightVerdict::ObstructedByGoodTriple: return "ObstructedByGoodTriple";
        default: return "NotObstructed";
    }
}

struct WeightCertificate {
    std::array<i64, 4> word_exponents{}; // E_u, E_x, E_y, E_z
    ResidueData derived_residues{};      // d = E_u + 2E_x, e = E_u + 2E_y, f = E_u + 2E_z
    WeightVerdict verdict = WeightVerdict::NotObstructed;
    std::string reason;                  // which divisibility gate fired, or sweep notes
    std::optional<RstWitness> witness;   // present for ObstructedByGoodTriple
};

// Divisibility gates followed by the witness search. For the excluded triple
// the exhaustive scan decides; elsewhere the constructive search runs, with
// the exhaustive scan as referee if it reports exhaustion: a residue class
// with no witness at all yields NotObstructed (recorded, not asserted away),
// while a missed existing witness stays an InternalInconsistency.
inline WeightCertificate weight_certificate(const QuasiPrimeTriple& t, const std::array<i64, 4>& exps) {
    const i64 Eu = exps[0], Ex = exps[1], Ey = exps[2], Ez = exps[3];
    WeightCertificate cert;
    cert.word_exponents = exps;
    cert.derived_residues = ResidueData{
        detail::checked_i64(i128(Eu) + 2 * i128(Ex), "derived residue d"),
        detail::checked_i64(i128(Eu) + 2 * i128(Ey), "derived residue e"),
        detail::checked_i64(i128(Eu) + 2 * i128(Ez), "derived residue f")};
    const auto& [d, e, f] = cert.derived_residues;

    auto killed = [&](const std::string& why) {
        cert.verdict = WeightVerdict::KilledByDivisibility;
        cert.reason = why;
        return cert;
    };
    if (d % t.a == 0) return killed("a divides d");
    if (e % t.b == 0) return killed("b divides e");
    if (f % t.c == 0) return killed("c divides f");
    if (Eu % 2 == 0) return killed("E_u is even");

    if (t.is_excluded()) {
        auto w = find_rst_bruteforce(t, cert.derived_residues);
        if (w) {
            cert.verdict = WeightVerdict::ObstructedByGoodTriple;
            cert.witness = *w;
            cert.reason = "witness found by exhaustive scan (excluded triple)";
        } else {
            cert.verdict = WeightVerdict::NotObstructed;
            cert.reason = "excluded triple {3,4,5}: exhaustive scan finds no witness for this residue class";
        }
        return cert;
    }

    try {
        auto res = find_rst_constructive_tagged(t, cert.derived_residues);
        cert.verdict = WeightVerdict::ObstructedByGoodTriple;
        cert.witness = res.witness;
        cert.reason = "constructive case " + res.tag;
        return cert;
    } catch (const InternalInconsistency&) {
        auto w = find_rst_bruteforce(t, cert.derived_residues);
        if (w) throw; // a witness exists but the constructive search missed it: genuine bug
        cert.verdict = WeightVerdict::NotObstructed;
        cert.reason = "no witness exists for this residue class (confirmed by exhaustive scan); "
                      "the general existence claim fails here";
        return cert;
    }
}

// ---- commuting-representation trace angles --------------------------------

struct TraceAngles {
    Rational alpha, beta, gamma, delta;     // units: multiples of pi
    std::array<int, 4> floor_parities{};    // (-1)^floor per angle, order alpha..delta
    bool distinct_parities = false;         // some pair of sign patterns differs
};

// The four diagonal-trace angles of the commuting case:
//   alpha = rd/2a + se/2b + tf/2c, and the three sign variants on the last two
// terms. Requires the witness to be consistent with the triple and residues.
inline TraceAngles commuting_trace_angles(const RstWitness& w, const QuasiPrimeTriple& t,
                                          const ResidueData& res) {
    validate_residues(t, res);
    if (!witness_valid(t, res, w))
        throw PreconditionViolated("witness is not consistent with the triple and residues");
    const Rational x = Rational::make(i128(w.r) * res.d, i128(2) * t.a);
    const Rational y = Rational::make(i128(w.s) * res.e, i128(2) * t.b);
    const Rational z = Rational::make(i128(w.t) * res.f, i128(2) * t.c);
    TraceAngles a;
    a.alpha = x + y + z;
    a.beta = x + y - z;
    a.gamma = x - y + z;
    a.delta = x - y - z;
    const std::array<Rational, 4> vals{a.alpha, a.beta, a.gamma, a.delta};
    for (std::size_t i = 0; i < 4; ++i)
        a.floor_parities[i] = (vals[i].floor() % 2 == 0) ? +1 : -1;
    for (int p : a.floor_parities)
        if (p != a.floor_parities[0]) a.distinct_parities = true;
    return a;
}

// ---- residue-class sweeps --------------------------------------------------

inline std::vector<i64> quasiprimes_upto(i64 n) {
    std::vector<i64> out;
    for (i64 k = 3; k <= n; ++k)
        if (is_quasiprime(k)) out.push_back(k);
    return out;
}

inline std::vector<i64> coprime_residues(i64 m) {
    std::vector<i64> out;
    for (i64 d = 1; d < 2 * m; ++d)
        if (std::gcd(d, 2 * m) == 1) out.push_back(d);
    return out;
}

struct SweepFailure {
    std::array<i64, 6> cls;   // a, b, c, d, e, f
    bool witness_exists;      // exhaustive-scan verdict for the class
};

struct SweepResult {
    std::uint64_t classes = 0;
    std::uint64_t constructive_ok = 0;
    std::uint64_t oracle_ok = 0;           // classes where the exhaustive scan found a witness
    std::vector<SweepFailure> failures;    // constructive exhaustion, in enumeration order
    std::map<std::string, std::uint64_t> tag_histogram;
};

// Sweeps every distinct quasi-prime triple with entries <= max_order
// (excluding {3,4,5}) and every coprime residue class. Partitioned by triple
// across workers; per-triple results are merged in enumeration order, so the
// outcome is independent of the worker count.
inline SweepResult residue_sweep(i64 max_order, bool run_oracle, unsigned threads = 1) {
    const auto qp = quasiprimes_upto(max_order);
    std::vector<std::array<i64, 3>> triples;
    for (std::size_t i = 0; i < qp.size(); ++i)
        for (std::size_t j = i + 1; j < qp.size(); ++j)
            for (std::size_t k = j + 1; k < qp.size(); ++k) {
                std::array<i64, 3> t{qp[i], qp[j], qp[k]};
                if (t == std::array<i64, 3>{3, 4, 5}) continue;
                triples.push_back(t);
            }

    std::vector<SweepResult> parts(triples.size());
    auto work = [&](std::size_t ti) {
        const auto [a, b, c] = triples[ti];
        QuasiPrimeTriple qt(a, b, c);
        SweepResult& part = parts[ti];
        for (i64 d : coprime_residues(a))
            for (i64 e : coprime_residues(b))
                for (i64 f : coprime_residues(c)) {
                    ++part.classes;
                    ResidueData res{d, e, f};
                    bool ok = false;
                    std::string tag;
                    try {
                        auto r = find_rst_constructive_tagged(qt, res);
                        ok = true;
                        tag = r.tag;
                    } catch (const InternalInconsistency&) {
                    }
                    if (ok) {
                        ++part.constructive_ok;
                        ++part.tag_histogram[tag];
                        if (run_oracle && find_rst_bruteforce(qt, res)) ++part.oracle_ok;
                    } else {
                        bool exists = find_rst_bruteforce(qt, res).has_value();
                        if (exists) ++part.oracle_ok;
                        part.failures.push_back({{a, b, c, d, e, f}, exists});
                    }
                }
    };

    if (threads <= 1) {
        for (std::size_t i = 0; i < triples.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t next = 0;
        std::mutex mtx;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                while (true) {
                    std::size_t mine;
                    {
                        std::lock_guard<std::mutex> lk(mtx);
                        if (next >= triples.size()) return;
                        mine = next++;
                    }
                    work(mine);
                }
            });
        for (auto& th : pool) th.join();
    }

    SweepResult total;
    for (const auto& p : parts) {
        total.classes += p.classes;
        total.constructive_ok += p.constructive_ok;
        total.oracle_ok += p.oracle_ok;
        for (const auto& f : p.failures) total.failures.push_back(f);
        for (const auto& [tag, n] : p.tag_histogram) total.tag_histogram[tag] += n;
    }
    return total;
}

} // namespace orbiweight
