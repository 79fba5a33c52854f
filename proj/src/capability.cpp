#include "homlie/capability.hpp"

#include "homlie/errors.hpp"

namespace homlie {

namespace {

// Kernel of l -> (class of l (x) e_j)_j, given a projection from the ambient L (x) L.
Subspace annihilated_left(const HomLieAlgebra& L, const Matrix& ambient_projection) {
    const std::size_t n = L.dim(), q = ambient_projection.rows();
    Matrix stacked(n * q, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector cls = ambient_projection.column(i * n + j);
            for (std::size_t r = 0; r < q; ++r) stacked(j * q + r, i) = cls[r];
        }
    return kernel(stacked);
}

}  // namespace

Subspace tensor_centre(const HomLieAlgebra& L, const ProductOptions& opts) {
    TensorProduct t = tensor_square(L, opts);
    return largest_invariant_subspace(L.twist(), annihilated_left(L, t.space.projection()));
}

Subspace exterior_centre(const HomLieAlgebra& L, const ProductOptions& opts) {
    ExteriorProduct e = exterior_square(L, opts);
    return largest_invariant_subspace(L.twist(), annihilated_left(L, e.ambient_projection()));
}

bool is_capable(const HomLieAlgebra& L, const ProductOptions& opts) { return exterior_centre(L, opts).is_zero(); }

Subspace epicentre_perfect(const HomLieAlgebra& L, const ProductOptions& opts) {
    if (!is_perfect(L)) throw PreconditionError("epicentre: only available for perfect algebras");
    return exterior_centre(L, opts);
}

CapabilityReport capability_report(const HomLieAlgebra& L, const ProductOptions& opts) {
    CapabilityReport r{L, centre(L), tensor_centre(L, opts), exterior_centre(L, opts), false, std::nullopt};
    r.capable = r.exterior_centre.is_zero();
    if (is_perfect(L)) r.epicentre = r.exterior_centre;
    return r;
}

MultiplierCheck central_ideal_multiplier_check(const HomLieAlgebra& L, const Subspace& N, const ProductOptions& opts) {
    if (!is_perfect(L)) throw PreconditionError("multiplier check: algebra is not perfect");
    if (N.ambient_dim() != L.dim()) throw DimensionError("multiplier check: ideal lives in the wrong space");
    if (!subspace_leq(N, centre(L))) throw PreconditionError("multiplier check: N is not central");
    if (!is_twist_invariant(L, N)) throw PreconditionError("multiplier check: N is not twist-invariant");
    ExteriorProduct ll = exterior_square(L, opts);
    AlgebraQuotient q = quotient_algebra(L, N);
    ExteriorProduct qq = exterior_square(q.quotient, opts);
    Matrix map = exterior_square_map(q, ll, qq);
    MultiplierCheck r;
    r.dim_square = ll.dim();
    r.dim_quotient_square = qq.dim();
    r.isomorphism = ll.dim() == qq.dim() && rank(map) == ll.dim();
    r.inside_exterior_centre = subspace_leq(N, largest_invariant_subspace(L.twist(), annihilated_left(L, ll.ambient_projection())));
    return r;
}

Vector flatten(const Matrix& m) {
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

Matrix unflatten(std::span<const Scalar> v, std::size_t n) {
    if (v.size() != n * n) throw DimensionError("unflatten: expected n*n entries");
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
    return m;
}

DerivationSpace derivations(const HomLieAlgebra& L, unsigned k) {
    const std::size_t n = L.dim();
    const Matrix& A = L.twist();
    const Matrix Ak = A.pow(k);
    auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
    std::vector<Vector> eqs;

    // d A - A d = 0
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Vector e(n * n);
            for (std::size_t t = 0; t < n; ++t) {
                e[var(r, t)] += A(t, c);
                e[var(t, c)] -= A(r, t);
            }
            if (!is_zero(e)) eqs.push_back(std::move(e));
        }

    // d[e_i, e_j] - [d e_i, A^k e_j] - [A^k e_i, d e_j] = 0, component s
    std::vector<Vector> ak(n);
    for (std::size_t i = 0; i < n; ++i) ak[i] = Ak.column(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Vector> rows(n, Vector(n * n));
            const Vector& cij = L.structure(i, j);
            for (std::size_t t = 0; t < n; ++t) {
                Vector left = L.bracket(unit_vector(n, t), ak[j]);   // [e_t, A^k e_j]
                Vector right = L.bracket(ak[i], unit_vector(n, t));  // [A^k e_i, e_t]
                for (std::size_t s = 0; s < n; ++s) {
                    rows[s][var(s, t)] += cij[t];
                    rows[s][var(t, i)] -= left[s];
                    rows[s][var(t, j)] -= right[s];
                }
            }
            for (auto& e : rows)
                if (!is_zero(e)) eqs.push_back(std::move(e));
        }

    Subspace sol = eqs.empty() ? Subspace::full(n * n) : kernel(Matrix::from_rows(eqs, n * n));
    DerivationSpace ds{L, k, {}};
    for (std::size_t b = 0; b < sol.dim(); ++b) ds.basis.push_back(unflatten(sol.basis().row(b), n));
    return ds;
}

bool is_derivation(const HomLieAlgebra& L, unsigned k, const Matrix& d) {
    const std::size_t n = L.dim();
    if (d.rows() != n || d.cols() != n) throw DimensionError("is_derivation: wrong shape");
    if (d * L.twist() != L.twist() * d) return false;
    const Matrix Ak = L.twist().pow(k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (d.apply(L.structure(i, j)) != L.bracket(d.column(i), Ak.column(j)) + L.bracket(Ak.column(i), d.column(j)))
                return false;
    return true;
}

InnerDerivations inner_derivations(const HomLieAlgebra& L) {
    if (!alpha_identity_check(L)) throw PreconditionError("inner derivations require the alpha-identity condition");
    const std::size_t n = L.dim();
    Matrix phi(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector col = flatten(L.ad(unit_vector(n, i)));
        for (std::size_t r = 0; r < n * n; ++r) phi(r, i) = col[r];
    }
    InnerDerivations r{phi, image(phi), kernel(phi)};
    r.kernel_is_centre = r.kernel == centre(L);
    return r;
}

}  // namespace homlie
