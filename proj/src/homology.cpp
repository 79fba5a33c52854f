#include "homlie/homology.hpp"

#include <algorithm>

#include "homlie/errors.hpp"

namespace homlie {

std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

Scalar determinant(Matrix m) {
    const std::size_t n = m.rows();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(m(r, c)) == 0) continue;
            Scalar f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

// Coordinates of v_1 ^ ... ^ v_k on the sorted-tuple basis: each coefficient is a k x k minor.
Vector wedge(const std::vector<Vector>& vs, const std::vector<std::vector<std::size_t>>& basis) {
    const std::size_t k = vs.size();
    Vector out(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        Matrix minor(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) minor(r, c) = vs[c][basis[b][r]];
        out[b] = determinant(std::move(minor));
    }
    return out;
}

}  // namespace

Matrix boundary(const HomLieAlgebra& L, std::size_t n, BoundarySign sign) {
    const std::size_t d = L.dim();
    if (n < 1 || n > d) throw PreconditionError("boundary: degree " + std::to_string(n) + " outside 1.." + std::to_string(d));
    auto src = wedge_basis(d, n);
    if (n == 1) return Matrix(1, src.size());
    auto dst = wedge_basis(d, n - 1);
    Matrix m(dst.size(), src.size());
    std::vector<Vector> alpha(d);
    for (std::size_t i = 0; i < d; ++i) alpha[i] = L.twist().column(i);
    for (std::size_t s = 0; s < src.size(); ++s) {
        const auto& t = src[s];
        Vector col(dst.size());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                std::vector<Vector> factors{L.structure(t[i], t[j])};
                if (is_zero(factors.front())) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != i && k != j) factors.push_back(alpha[t[k]]);
                Vector w = wedge(factors, dst);
                // positions are 1-based in the sign; (i+1)+(j+1) has the parity of i+j
                Scalar coef = (sign == BoundarySign::alternating && (i + j) % 2 == 1) ? -1 : 1;
                axpy(coef, w, col);
            }
        for (std::size_t r = 0; r < dst.size(); ++r) m(r, s) = col[r];
    }
    return m;
}

ChainComplex chain_complex(const HomLieAlgebra& L, std::size_t max_degree) {
    ChainComplex c{L, std::min(max_degree, L.dim()), {}, {}};
    for (std::size_t n = 0; n <= c.max_degree; ++n) c.spaces.push_back(wedge_basis(L.dim(), n));
    c.boundaries.emplace_back();  // no d_0
    for (std::size_t n = 1; n <= c.max_degree; ++n) c.boundaries.push_back(boundary(L, n));
    return c;
}

HomologyReport homology(const HomLieAlgebra& L, std::size_t n) {
    HomologyReport rep;
    rep.degree = n;
    const std::size_t d = L.dim();
    if (n == 0) {
        rep.dim = 1;
        rep.cycle_basis.push_back(Vector{1});
        rep.boundary_dim = 0;
        return rep;
    }
    if (n > d) return rep;
    const std::size_t cn = wedge_basis(d, n).size();
    Subspace cycles = kernel(boundary(L, n));
    Subspace boundaries = n + 1 <= d ? image(boundary(L, n + 1)) : Subspace(cn);
    rep.boundary_dim = boundaries.dim();
    rep.dim = cycles.dim() - boundaries.dim();
    // Representatives: lift a basis of cycles/boundaries through the canonical section.
    QuotientSpace q(boundaries);
    Subspace classes = image(q.projection(), cycles);
    for (std::size_t k = 0; k < classes.dim(); ++k) rep.cycle_basis.push_back(q.lift(classes.basis().row(k)));
    return rep;
}

bool verify_complex(const HomLieAlgebra& L, std::size_t max_degree, BoundarySign sign) {
    const std::size_t top = std::min(max_degree, L.dim());
    for (std::size_t n = 2; n <= top; ++n)
        if (!(boundary(L, n - 1, sign) * boundary(L, n, sign)).is_zero()) return false;
    return true;
}

}  // namespace homlie
