#pragma once
// Reference computations for the tests. Nothing here calls the library's
// linear algebra: ranks use fraction-free Bareiss elimination over Z, wedge
// products expand by permutation signs, and relations are enumerated over all
// basis tuples with no symmetry reduction.

#include <algorithm>
#include <gmpxx.h>
#include <vector>

#include "homlie/action.hpp"

namespace oracle {

using homlie::HomAction;
using homlie::HomLieAlgebra;
using homlie::Scalar;
using homlie::Vector;
using Rows = std::vector<Vector>;

inline std::size_t rank(Rows rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    // clear denominators row by row
    std::vector<std::vector<mpz_class>> m;
    for (const auto& r : rows) {
        mpz_class l = 1;
        for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        std::vector<mpz_class> zr;
        for (const auto& x : r) zr.push_back(x.get_num() * (l / x.get_den()));
        m.push_back(std::move(zr));
    }
    std::size_t rk = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
        std::size_t p = rk;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rk]);
        for (std::size_t r = rk + 1; r < m.size(); ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) m[r][k] = (m[rk][c] * m[r][k] - m[r][c] * m[rk][k]) / prev;
            m[r][c] = 0;
        }
        prev = m[rk][c];
        ++rk;
    }
    return rk;
}

inline Rows concat(Rows a, const Rows& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline bool in_span(const Rows& rows, const Vector& v) { return rank(rows) == rank(concat(rows, {v})); }
inline bool same_span(const Rows& a, const Rows& b) {
    const std::size_t ra = rank(a);
    return ra == rank(b) && ra == rank(concat(a, b));
}
inline bool span_leq(const Rows& a, const Rows& b) { return rank(b) == rank(concat(a, b)); }

inline Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

inline Vector twist_of(const HomLieAlgebra& L, const Vector& x) {
    Vector out(L.dim());
    for (std::size_t r = 0; r < L.dim(); ++r)
        for (std::size_t c = 0; c < L.dim(); ++c) out[r] += L.twist()(r, c) * x[c];
    return out;
}

inline Vector bracket(const HomLieAlgebra& L, const Vector& x, const Vector& y) {
    const std::size_t n = L.dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Vector& c = L.structure(i, j);
            for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * c[k];
        }
    }
    return out;
}

inline Vector act(const HomAction& a, const Vector& x, const Vector& m) {
    Vector out(a.actee().dim());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (x[i] == 0 || m[j] == 0) continue;
            const Vector& c = a.coeff(i, j);
            for (std::size_t k = 0; k < out.size(); ++k) out[k] += x[i] * m[j] * c[k];
        }
    return out;
}

inline Vector tensor(const Vector& m, const Vector& n) {
    Vector out(m.size() * n.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < n.size(); ++j) out[i * n.size() + j] = m[i] * n[j];
    return out;
}

inline void add(Vector& a, const Vector& b, long s = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

/// All five generator families over every basis tuple.
inline Rows naive_relations(const HomLieAlgebra& M, const HomLieAlgebra& N, const HomAction& m_on_n,
                            const HomAction& n_on_m) {
    const std::size_t dm = M.dim(), dn = N.dim();
    Rows out;
    auto em = [&](std::size_t i) { return unit(dm, i); };
    auto en = [&](std::size_t i) { return unit(dn, i); };
    for (std::size_t a = 0; a < dm; ++a)
        for (std::size_t b = 0; b < dm; ++b)
            for (std::size_t c = 0; c < dn; ++c) {
                Vector m = em(a), mp = em(b), n = en(c);
                Vector v = tensor(bracket(M, m, mp), twist_of(N, n));
                add(v, tensor(twist_of(M, m), act(m_on_n, mp, n)), -1);
                add(v, tensor(twist_of(M, mp), act(m_on_n, m, n)));
                out.push_back(v);
            }
    for (std::size_t a = 0; a < dm; ++a)
        for (std::size_t b = 0; b < dn; ++b)
            for (std::size_t c = 0; c < dn; ++c) {
                Vector m = em(a), n = en(b), np = en(c);
                Vector v = tensor(twist_of(M, m), bracket(N, n, np));
                add(v, tensor(act(n_on_m, np, m), twist_of(N, n)), -1);
                add(v, tensor(act(n_on_m, n, m), twist_of(N, np)));
                out.push_back(v);
            }
    std::vector<std::pair<Vector, Vector>> pairs;  // (^n m, ^m n)
    for (std::size_t a = 0; a < dm; ++a)
        for (std::size_t b = 0; b < dn; ++b) pairs.emplace_back(act(n_on_m, en(b), em(a)), act(m_on_n, em(a), en(b)));
    for (const auto& p : pairs) out.push_back(tensor(p.first, p.second));
    for (const auto& p : pairs)
        for (const auto& q : pairs) {
            Vector v = tensor(p.first, q.second);
            add(v, tensor(q.first, p.second));
            out.push_back(v);
        }
    for (const auto& p : pairs)
        for (const auto& q : pairs)
            for (const auto& r : pairs) {
                Vector v = tensor(bracket(M, p.first, q.first), twist_of(N, r.second));
                add(v, tensor(bracket(M, q.first, r.first), twist_of(N, p.second)));
                add(v, tensor(bracket(M, r.first, p.first), twist_of(N, q.second)));
                out.push_back(v);
            }
    return out;
}

inline void sort_with_sign(std::vector<std::size_t>& idx, int& sign) {
    // bubble sort counting transpositions
    sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
}

/// Wedge of vectors expanded term by term; keys are sorted index tuples.
inline std::vector<std::pair<std::vector<std::size_t>, Scalar>> wedge_expand(const std::vector<Vector>& vs) {
    std::vector<std::pair<std::vector<std::size_t>, Scalar>> terms;
    const std::size_t k = vs.size(), n = vs.empty() ? 0 : vs.front().size();
    std::vector<std::size_t> choice(k, 0);
    while (true) {
        Scalar coef = 1;
        for (std::size_t t = 0; t < k && coef != 0; ++t) coef *= vs[t][choice[t]];
        if (coef != 0) {
            std::vector<std::size_t> idx = choice;
            std::vector<std::size_t> sorted = idx;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
                int sign;
                sort_with_sign(idx, sign);
                auto it = std::find_if(terms.begin(), terms.end(), [&](auto& t) { return t.first == idx; });
                if (it == terms.end()) terms.emplace_back(idx, sign * coef);
                else it->second += sign * coef;
            }
        }
        std::size_t t = 0;
        while (t < k && ++choice[t] == n) choice[t++] = 0;
        if (t == k) break;
    }
    return terms;
}

inline std::vector<std::vector<std::size_t>> combos(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + k, true);
    do {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) c.push_back(i);
        out.push_back(c);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::sort(out.begin(), out.end());
    return out;
}

/// Column s of d_k as a vector over combos(n, k-1); `sign` false drops (-1)^{i+j}.
inline std::vector<Vector> boundary_columns(const HomLieAlgebra& L, std::size_t k, bool sign = true) {
    const std::size_t n = L.dim();
    auto src = combos(n, k), dst = combos(n, k - 1);
    std::vector<Vector> cols;
    for (const auto& t : src) {
        Vector col(dst.size());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                std::vector<Vector> vs{bracket(L, unit(n, t[i]), unit(n, t[j]))};
                for (std::size_t r = 0; r < k; ++r)
                    if (r != i && r != j) vs.push_back(twist_of(L, unit(n, t[r])));
                long s = (sign && (i + j) % 2 == 1) ? -1 : 1;
                for (auto& [idx, c] : wedge_expand(vs)) {
                    auto pos = std::find(dst.begin(), dst.end(), idx) - dst.begin();
                    col[pos] += s * c;
                }
            }
        cols.push_back(col);
    }
    return cols;
}

/// Null space of the given rows in Q^n by a local Gauss-Jordan pass.
inline Rows null_space(Rows m, std::size_t n) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Scalar inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t q = 0; q < m.size(); ++q)
            if (q != r && m[q][c] != 0) {
                Scalar f = m[q][c];
                for (std::size_t k = 0; k < n; ++k) m[q][k] -= f * m[r][k];
            }
        piv.push_back(c);
        ++r;
    }
    Rows out;
    for (std::size_t f = 0; f < n; ++f) {
        if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
        Vector x(n);
        x[f] = 1;
        for (std::size_t q = 0; q < piv.size(); ++q) x[piv[q]] = -m[q][f];
        out.push_back(x);
    }
    return out;
}

/// {x : A^k x in span C for k = 0..n}, from explicit powers of A.
inline Rows invariant_core_bruteforce(const homlie::Matrix& A, const Rows& C) {
    const std::size_t n = A.rows();
    Rows ann = null_space(C, n);  // y with y.c = 0 for all c in C
    Rows cons;
    homlie::Matrix P = homlie::Matrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        for (const auto& y : ann) {
            Vector row(n);
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t r = 0; r < n; ++r) row[c] += y[r] * P(r, c);
            cons.push_back(row);
        }
        P = A * P;
    }
    return null_space(cons, n);
}

}  // namespace oracle
