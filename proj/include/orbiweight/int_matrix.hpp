#pragma once

#include <vector>
#include <cstddef>
#include <numeric>
#include <boost/multiprecision/cpp_int.hpp>

#include "presentation.hpp"

namespace orbiweight {

using boost::multiprecision::cpp_int;

// Dense integer matrix with 64-bit entries (library inputs).
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<i64> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    i64& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    i64 at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Dense arbitrary-precision matrix (Smith normal form internals and outputs;
// minor magnitudes explode on modest inputs, so intermediates never truncate).
struct BigMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<cpp_int> a;

    BigMatrix() = default;
    BigMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    static BigMatrix identity(std::size_t n) {
        BigMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static BigMatrix from(const IntMatrix& m) {
        BigMatrix b(m.rows, m.cols);
        for (std::size_t i = 0; i < m.a.size(); ++i) b.a[i] = m.a[i];
        return b;
    }

    cpp_int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const cpp_int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    friend BigMatrix operator*(const BigMatrix& x, const BigMatrix& y) {
        if (x.cols != y.rows) throw InternalInconsistency("matrix product shape mismatch");
        BigMatrix r(x.rows, y.cols);
        for (std::size_t i = 0; i < x.rows; ++i)
            for (std::size_t k = 0; k < x.cols; ++k) {
                if (x.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < y.cols; ++j)
                    r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }

    friend bool operator==(const BigMatrix& x, const BigMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

// Row i, column j: exponent sum of generator j in relator i.
inline IntMatrix exponent_matrix(const Presentation& p) {
    IntMatrix m(p.relators.size(), p.generators.size());
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (const auto& l : p.relators[i].letters)
            m.at(i, static_cast<std::size_t>(l.gen)) =
                detail::checked_i64(i128(m.at(i, static_cast<std::size_t>(l.gen))) + l.exp,
                                    "exponent matrix entry");
    return m;
}

struct SmithResult {
    // Nonnegative, each entry divides the next, length min(rows, cols).
    std::vector<cpp_int> diagonal;
    BigMatrix left;  // unimodular, rows x rows
    BigMatrix right; // unimodular, cols x cols
};

namespace detail {

inline cpp_int det_bareiss(BigMatrix m) {
    if (m.rows != m.cols) throw InternalInconsistency("determinant of non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    cpp_int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && m.at(s, k) == 0) ++s;
            if (s == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

// Fraction-free row elimination; returns the rank.
inline std::size_t rank_bareiss(BigMatrix m) {
    cpp_int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            for (std::size_t j = col + 1; j < m.cols; ++j)
                m.at(i, j) = (m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

} // namespace detail

// Smith normal form with recorded transforms: left * m * right is diagonal,
// entries nonnegative, each dividing the next; left and right unimodular.
// The result is re-verified before returning.
inline SmithResult smith_normal_form(const IntMatrix& input) {
    const std::size_t nr = input.rows, nc = input.cols;
    BigMatrix m = BigMatrix::from(input);
    BigMatrix L = BigMatrix::identity(nr);
    BigMatrix R = BigMatrix::identity(nc);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < nc; ++k) std::swap(m.at(i, k), m.at(j, k));
        for (std::size_t k = 0; k < nr; ++k) std::swap(L.at(i, k), L.at(j, k));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < nr; ++k) std::swap(m.at(k, i), m.at(k, j));
        for (std::size_t k = 0; k < nc; ++k) std::swap(R.at(k, i), R.at(k, j));
    };
    auto addmul_row = [&](std::size_t dst, std::size_t src, const cpp_int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < nc; ++k) m.at(dst, k) += q * m.at(src, k);
        for (std::size_t k = 0; k < nr; ++k) L.at(dst, k) += q * L.at(src, k);
    };
    auto addmul_col = [&](std::size_t dst, std::size_t src, const cpp_int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < nr; ++k) m.at(k, dst) += q * m.at(k, src);
        for (std::size_t k = 0; k < nc; ++k) R.at(k, dst) += q * R.at(k, src);
    };

    std::vector<cpp_int> diag;
    std::size_t r = 0, c = 0;
    while (r < nr && c < nc) {
        // Pivot: smallest nonzero magnitude in the remaining submatrix.
        bool found = false;
        std::size_t pi = r, pj = c;
        cpp_int best;
        for (std::size_t i = r; i < nr; ++i)
            for (std::size_t j = c; j < nc; ++j) {
                if (m.at(i, j) == 0) continue;
                cpp_int v = abs(m.at(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        swap_rows(r, pi);
        swap_cols(c, pj);

        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = r + 1; i < nr; ++i) {
                if (m.at(i, c) == 0) continue;
                cpp_int q = m.at(i, c) / m.at(r, c); // truncated; remainder shrinks
                addmul_row(i, r, -q);
                if (m.at(i, c) != 0) { // nonzero remainder: promote it to pivot
                    swap_rows(r, i);
                    again = true;
                }
            }
            for (std::size_t j = c + 1; j < nc; ++j) {
                if (m.at(r, j) == 0) continue;
                cpp_int q = m.at(r, j) / m.at(r, c);
                addmul_col(j, c, -q);
                if (m.at(r, j) != 0) {
                    swap_cols(c, j);
                    again = true;
                }
            }
        }

        // The pivot must divide every remaining entry; otherwise fold the
        // offending row into the pivot row and redo this position.
        cpp_int d = abs(m.at(r, c));
        bool redo = false;
        for (std::size_t i = r + 1; i < nr && !redo; ++i)
            for (std::size_t j = c + 1; j < nc && !redo; ++j)
                if (m.at(i, j) % d != 0) {
                    addmul_row(r, i, 1);
                    redo = true;
                }
        if (redo) continue;

        if (m.at(r, c) < 0) {
            for (std::size_t k = 0; k < nc; ++k) m.at(r, k) = -m.at(r, k);
            for (std::size_t k = 0; k < nr; ++k) L.at(r, k) = -L.at(r, k);
        }
        diag.push_back(m.at(r, c));
        ++r;
        ++c;
    }
    while (diag.size() < std::min(nr, nc)) diag.push_back(0);

    // Verify: left * input * right equals the diagonal matrix, transforms unimodular.
    BigMatrix check = L * BigMatrix::from(input) * R;
    BigMatrix expect(nr, nc);
    for (std::size_t i = 0; i < std::min(nr, nc); ++i) expect.at(i, i) = diag[i];
    if (!(check == expect))
        throw InternalInconsistency("smith_normal_form verification failed: L*M*R != diag");
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        if (diag[i] != 0 && diag[i + 1] % diag[i] != 0)
            throw InternalInconsistency("smith_normal_form divisibility chain broken");
    if (nr > 0 && abs(detail::det_bareiss(L)) != 1)
        throw InternalInconsistency("smith_normal_form left transform not unimodular");
    if (nc > 0 && abs(detail::det_bareiss(R)) != 1)
        throw InternalInconsistency("smith_normal_form right transform not unimodular");

    return SmithResult{std::move(diag), std::move(L), std::move(R)};
}

struct AbelianizationReport {
    std::size_t rank = 0;                 // free rank of G/G'
    std::vector<i64> torsion;             // entries > 1, each divides the next
    bool is_infinite_cyclic = false;      // rank 1 and no torsion
};

// Cokernel of the transposed exponent matrix via Smith normal form.
inline AbelianizationReport abelianization(const Presentation& p) {
    IntMatrix m = exponent_matrix(p);
    IntMatrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    SmithResult s = smith_normal_form(t);
    AbelianizationReport rep;
    std::size_t nonzero = 0;
    for (const auto& d : s.diagonal) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) {
            if (d > cpp_int(INT64_MAX)) throw arithmetic_overflow("torsion coefficient exceeds 64 bits");
            rep.torsion.push_back(static_cast<i64>(d));
        }
    }
    rep.rank = p.generators.size() - nonzero;
    rep.is_infinite_cyclic = (rep.rank == 1) && rep.torsion.empty();
    return rep;
}

namespace detail {

// Visits all k-subsets of {0..n-1}; f receives the index vector.
template <typename F>
inline void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

} // namespace detail

// Infinite-cyclic test straight from the minors: with g generators, true iff
// the matrix has rank g-1 and the gcd of all (g-1)x(g-1) minors is 1.
// Implemented with fraction-free elimination and explicit minor determinants;
// shares no code path with smith_normal_form.
inline bool minors_criterion(const IntMatrix& m) {
    const std::size_t g = m.cols;
    if (g == 0) return false;
    const std::size_t k = g - 1;
    BigMatrix bm = BigMatrix::from(m);
    if (detail::rank_bareiss(bm) != k) return false;
    if (k == 0) return true; // empty minor has determinant 1
    if (m.rows < k) return false;

    cpp_int acc = 0;
    bool done = false;
    detail::for_each_subset(m.rows, k, [&](const std::vector<std::size_t>& ri) {
        if (done) return;
        detail::for_each_subset(g, k, [&](const std::vector<std::size_t>& ci) {
            if (done) return;
            BigMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
            cpp_int d = abs(detail::det_bareiss(std::move(sub)));
            acc = gcd(acc, d);
            if (acc == 1) done = true;
        });
    });
    return acc == 1;
}

} // namespace orbiweight
