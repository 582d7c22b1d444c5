#pragma once

#include <vector>
#include <deque>
#include <optional>
#include <cstdint>

#include "presentation.hpp"

namespace orbiweight {

// Bounded coset enumeration (HLT strategy) over the trivial subgroup: returns
// the order of the presented group if the table closes within max_cosets live
// definitions, nothing if the bound is hit first. Intended for small sanity
// checks (e.g. verifying that adding a normal-generator witness as a relator
// collapses the group), not as a general-purpose solver.
class CosetEnumerator {
public:
    explicit CosetEnumerator(const Presentation& p, std::size_t max_cosets = 20000)
        : ngen_(p.generators.size()), max_(max_cosets) {
        for (const Word& w : p.relators) {
            std::vector<int> seq;
            for (const Letter& l : w.letters) {
                const int fwd = 2 * l.gen, bwd = 2 * l.gen + 1;
                for (i64 i = 0; i < (l.exp > 0 ? l.exp : -l.exp); ++i)
                    seq.push_back(l.exp > 0 ? fwd : bwd);
            }
            if (!seq.empty()) rels_.push_back(std::move(seq));
        }
    }

    std::optional<std::uint64_t> run() {
        tab_.assign(2, std::vector<int>(2 * ngen_, 0)); // row 0 unused
        rep_.assign(2, 0);
        rep_[1] = 1;
        live_ = 1;
        for (std::size_t alpha = 1; alpha < tab_.size(); ++alpha) {
            if (!alive(static_cast<int>(alpha))) continue;
            for (const auto& rel : rels_) {
                if (!alive(static_cast<int>(alpha))) break;
                if (!scan_and_fill(static_cast<int>(alpha), rel)) return std::nullopt;
            }
            if (!alive(static_cast<int>(alpha))) continue;
            for (std::size_t col = 0; col < 2 * ngen_; ++col) {
                if (!alive(static_cast<int>(alpha))) break;
                if (entry(static_cast<int>(alpha), static_cast<int>(col)) == 0) {
                    int nu = define();
                    if (nu == 0) return std::nullopt;
                    set_entry(static_cast<int>(alpha), static_cast<int>(col), nu);
                    set_entry(nu, static_cast<int>(col) ^ 1, static_cast<int>(alpha));
                }
            }
        }
        return static_cast<std::uint64_t>(live_);
    }

private:
    std::size_t ngen_, max_;
    std::vector<std::vector<int>> rels_;
    std::vector<std::vector<int>> tab_;
    std::vector<int> rep_;
    std::deque<std::pair<int, int>> queue_;
    std::size_t live_ = 0;

    bool alive(int a) { return find(a) == a; }

    int find(int a) {
        int r = a;
        while (rep_[static_cast<std::size_t>(r)] != r) r = rep_[static_cast<std::size_t>(r)];
        while (rep_[static_cast<std::size_t>(a)] != r) {
            int nxt = rep_[static_cast<std::size_t>(a)];
            rep_[static_cast<std::size_t>(a)] = r;
            a = nxt;
        }
        return r;
    }

    int entry(int a, int col) { return tab_[static_cast<std::size_t>(a)][static_cast<std::size_t>(col)]; }
    void set_entry(int a, int col, int v) { tab_[static_cast<std::size_t>(a)][static_cast<std::size_t>(col)] = v; }

    // returns new coset index, or 0 when the bound is exhausted
    int define() {
        if (live_ >= max_) return 0;
        tab_.emplace_back(2 * ngen_, 0);
        rep_.push_back(static_cast<int>(tab_.size() - 1));
        ++live_;
        return static_cast<int>(tab_.size() - 1);
    }

    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        rep_[static_cast<std::size_t>(b)] = a;
        --live_;
        queue_.emplace_back(b, a);
    }

    void process_coincidences() {
        while (!queue_.empty()) {
            auto [dead, keep] = queue_.front();
            queue_.pop_front();
            (void)keep;
            for (std::size_t col = 0; col < 2 * ngen_; ++col) {
                int delta = entry(dead, static_cast<int>(col));
                if (delta == 0) continue;
                set_entry(dead, static_cast<int>(col), 0);
                set_entry(delta, static_cast<int>(col) ^ 1, 0);
                int mu = find(dead), nu = find(delta);
                int mcur = entry(mu, static_cast<int>(col));
                if (mcur != 0) {
                    merge(nu, mcur);
                } else {
                    int ncur = entry(nu, static_cast<int>(col) ^ 1);
                    if (ncur != 0) {
                        merge(mu, ncur);
                    } else {
                        set_entry(mu, static_cast<int>(col), nu);
                        set_entry(nu, static_cast<int>(col) ^ 1, mu);
                    }
                }
            }
        }
    }

    // scan coset alpha under the relator, defining cosets to fill gaps.
    // Returns false when the coset bound is exhausted.
    bool scan_and_fill(int alpha, const std::vector<int>& rel) {
        alpha = find(alpha);
        std::size_t i = 0, j = rel.size();
        int fwd = alpha, bwd = alpha;
        while (true) {
            while (i < j && entry(fwd, rel[i]) != 0) fwd = find(entry(fwd, rel[i++]));
            if (i == j) {
                if (fwd != bwd) {
                    merge(fwd, bwd);
                    process_coincidences();
                }
                return true;
            }
            while (j > i && entry(bwd, rel[j - 1] ^ 1) != 0) bwd = find(entry(bwd, rel[--j] ^ 1));
            if (j == i) {
                // both scans met with incompatible endpoints
                merge(fwd, bwd);
                process_coincidences();
                return true;
            }
            if (j == i + 1) {
                set_entry(fwd, rel[i], bwd);
                set_entry(bwd, rel[i] ^ 1, fwd);
                return true;
            }
            // gap of length >= 2: define one coset and resume scanning
            int nu = define();
            if (nu == 0) return false;
            set_entry(fwd, rel[i], nu);
            set_entry(nu, rel[i] ^ 1, fwd);
        }
    }
};

inline std::optional<std::uint64_t> enumerated_group_order(const Presentation& p,
                                                           std::size_t max_cosets = 20000) {
    return CosetEnumerator(p, max_cosets).run();
}

// True when adding `witness` as a relator collapses the presented group to the
// trivial group (i.e. the witness normally generates), decided within the
// coset bound; nothing when the enumeration does not close in time.
inline std::optional<bool> witness_normally_generates(const Presentation& p, const Word& witness,
                                                      std::size_t max_cosets = 20000) {
    Presentation q = p;
    q.add_relator(witness);
    auto n = enumerated_group_order(q, max_cosets);
    if (!n) return std::nullopt;
    return *n == 1;
}

} // namespace orbiweight
