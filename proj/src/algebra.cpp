#include "homlie/algebra.hpp"

#include <utility>

#include "homlie/errors.hpp"

namespace homlie {

std::vector<std::string> default_basis_names(std::size_t dim) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    return names;
}

HomLieAlgebra::HomLieAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<Vector> structure,
                             Matrix twist)
    : name_(std::move(name)),
      dim_(basis_names.size()),
      basis_names_(std::move(basis_names)),
      structure_(std::move(structure)),
      twist_(std::move(twist)) {
    if (structure_.size() != dim_ * dim_) throw DimensionError("structure tensor must have dim^2 entries");
    for (const auto& v : structure_)
        if (v.size() != dim_) throw DimensionError("structure constant vector has wrong length");
    if (twist_.rows() != dim_ || twist_.cols() != dim_) throw DimensionError("twist must be dim x dim");
}

HomLieAlgebra HomLieAlgebra::from_brackets(std::string name, std::size_t dim, const std::vector<Entry>& upper,
                                           Matrix twist, std::vector<std::string> basis_names) {
    if (basis_names.empty()) basis_names = default_basis_names(dim);
    if (basis_names.size() != dim) throw DimensionError("basis name count differs from dim");
    std::vector<Vector> s(dim * dim, Vector(dim));
    for (const auto& e : upper) {
        if (e.i >= dim || e.j >= dim) throw DimensionError("bracket index out of range");
        if (e.i >= e.j) throw DimensionError("bracket entries must have i < j");
        if (e.value.size() != dim) throw DimensionError("bracket value has wrong length");
        s[e.i * dim + e.j] = e.value;
        s[e.j * dim + e.i] = -e.value;
    }
    return HomLieAlgebra(std::move(name), std::move(basis_names), std::move(s), std::move(twist));
}

HomLieAlgebra HomLieAlgebra::abelian(std::size_t dim, Matrix twist, std::string name) {
    return from_brackets(std::move(name), dim, {}, std::move(twist));
}

Vector HomLieAlgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionError("bracket: vector length differs from dim");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(y[j]) == 0) continue;
            axpy(x[i] * y[j], structure(i, j), out);
        }
    }
    return out;
}

Matrix HomLieAlgebra::ad(std::span<const Scalar> x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vector col = bracket(x, unit_vector(dim_, j));
        for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
}

bool HomLieAlgebra::is_abelian() const {
    for (const auto& v : structure_)
        if (!is_zero(v)) return false;
    return true;
}

HomLieAlgebra HomLieAlgebra::renamed(std::string name) const {
    HomLieAlgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

AxiomReport verify_axioms(const HomLieAlgebra& L) {
    const std::size_t n = L.dim();
    const Matrix& A = L.twist();
    AxiomReport rep;
    for (std::size_t i = 0; i < n && rep.skew; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!is_zero(L.structure(i, j) + L.structure(j, i))) {
                rep.skew = false;
                rep.skew_failure = {i, j};
                break;
            }

    std::vector<Vector> alpha(n);
    for (std::size_t i = 0; i < n; ++i) alpha[i] = A.column(i);

    for (std::size_t i = 0; i < n && rep.multiplicative; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (A.apply(L.structure(i, j)) != L.bracket(alpha[i], alpha[j])) {
                rep.multiplicative = false;
                rep.multiplicative_failure = {i, j};
                break;
            }

    for (std::size_t x = 0; x < n && rep.hom_jacobi; ++x)
        for (std::size_t y = 0; y < n && rep.hom_jacobi; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vector s = L.bracket(alpha[x], L.structure(y, z)) + L.bracket(alpha[z], L.structure(x, y)) +
                           L.bracket(alpha[y], L.structure(z, x));
                if (!is_zero(s)) {
                    rep.hom_jacobi = false;
                    rep.jacobi_failure = {x, y, z};
                    break;
                }
            }
    return rep;
}

bool is_homomorphism(const HomLieAlgebra& source, const HomLieAlgebra& target, const Matrix& f) {
    if (f.rows() != target.dim() || f.cols() != source.dim()) throw DimensionError("homomorphism matrix has wrong shape");
    if (f * source.twist() != target.twist() * f) return false;
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = i + 1; j < source.dim(); ++j)
            if (f.apply(source.structure(i, j)) != target.bracket(f.column(i), f.column(j))) return false;
    return true;
}

Homomorphism make_homomorphism(HomLieAlgebra source, HomLieAlgebra target, Matrix f) {
    if (!is_homomorphism(source, target, f)) throw PreconditionError("matrix is not a Hom-Lie homomorphism");
    return {std::move(source), std::move(target), std::move(f)};
}

Homomorphism identity_homomorphism(const HomLieAlgebra& L) { return {L, L, Matrix::identity(L.dim())}; }

HomLieAlgebra yau_twist(const HomLieAlgebra& lie, const Matrix& endo) {
    const std::size_t n = lie.dim();
    if (endo.rows() != n || endo.cols() != n) throw DimensionError("yau_twist: endomorphism has wrong shape");
    if (lie.twist() != Matrix::identity(n)) throw PreconditionError("yau_twist: input must be a Lie algebra (identity twist)");
    if (!is_homomorphism(lie, lie, endo))
        throw PreconditionError("yau_twist: map is not an algebra endomorphism");
    std::vector<Vector> s;
    s.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.push_back(lie.bracket(endo.column(i), endo.column(j)));
    return HomLieAlgebra(lie.name() + "_yau", lie.basis_names(), std::move(s), endo);
}

HomLieAlgebra direct_sum(const HomLieAlgebra& a, const HomLieAlgebra& b, std::string name) {
    const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
    std::vector<Vector> s(n * n, Vector(n));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) s[i * n + j][k] = a.structure(i, j)[k];
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k) s[(na + i) * n + na + j][na + k] = b.structure(i, j)[k];
    Matrix t(n, n);
    for (std::size_t r = 0; r < na; ++r)
        for (std::size_t c = 0; c < na; ++c) t(r, c) = a.twist()(r, c);
    for (std::size_t r = 0; r < nb; ++r)
        for (std::size_t c = 0; c < nb; ++c) t(na + r, na + c) = b.twist()(r, c);
    std::vector<std::string> names;
    for (const auto& x : a.basis_names()) names.push_back(x + "_1");
    for (const auto& x : b.basis_names()) names.push_back(x + "_2");
    if (name.empty()) name = a.name() + "_plus_" + b.name();
    return HomLieAlgebra(std::move(name), std::move(names), std::move(s), std::move(t));
}

bool is_twist_invariant(const HomLieAlgebra& L, const Subspace& w) { return is_invariant(L.twist(), w); }

bool is_subalgebra(const HomLieAlgebra& L, const Subspace& w) {
    if (!is_twist_invariant(L, w)) return false;
    for (std::size_t a = 0; a < w.dim(); ++a)
        for (std::size_t b = a + 1; b < w.dim(); ++b)
            if (!w.contains(L.bracket(w.basis().row(a), w.basis().row(b)))) return false;
    return true;
}

bool is_ideal(const HomLieAlgebra& L, const Subspace& w) {
    if (!is_twist_invariant(L, w)) return false;
    for (std::size_t a = 0; a < w.dim(); ++a)
        for (std::size_t j = 0; j < L.dim(); ++j)
            if (!w.contains(L.bracket(w.basis().row(a), unit_vector(L.dim(), j)))) return false;
    return true;
}

namespace {

template <typename Grow>
Subspace saturate(const HomLieAlgebra& L, Subspace w, Grow grow) {
    if (w.ambient_dim() != L.dim()) throw DimensionError("closure: seed lives in the wrong ambient space");
    while (true) {
        SpanBuilder b(L.dim());
        for (std::size_t a = 0; a < w.dim(); ++a) b.add(w.basis_vector(a));
        for (std::size_t a = 0; a < w.dim(); ++a) b.add(L.apply_twist(w.basis().row(a)));
        grow(w, b);
        Subspace next = b.build();
        if (next.dim() == w.dim()) return w;
        w = std::move(next);
    }
}

}  // namespace

Subspace subalgebra_closure(const HomLieAlgebra& L, const Subspace& seed) {
    return saturate(L, seed, [&](const Subspace& w, SpanBuilder& b) {
        for (std::size_t a = 0; a < w.dim(); ++a)
            for (std::size_t c = a + 1; c < w.dim(); ++c) b.add(L.bracket(w.basis().row(a), w.basis().row(c)));
    });
}

Subspace ideal_closure(const HomLieAlgebra& L, const Subspace& seed) {
    return saturate(L, seed, [&](const Subspace& w, SpanBuilder& b) {
        for (std::size_t a = 0; a < w.dim(); ++a)
            for (std::size_t j = 0; j < L.dim(); ++j) b.add(L.bracket(w.basis().row(a), unit_vector(L.dim(), j)));
    });
}

Subspace commutator(const HomLieAlgebra& L, const Subspace& H, const Subspace& K) {
    if (!is_subalgebra(L, H) || !is_subalgebra(L, K))
        throw PreconditionError("commutator: arguments must be twist-invariant subalgebras");
    SpanBuilder b(L.dim());
    for (std::size_t a = 0; a < H.dim(); ++a)
        for (std::size_t c = 0; c < K.dim(); ++c) b.add(L.bracket(H.basis().row(a), K.basis().row(c)));
    return b.build();
}

Subspace derived(const HomLieAlgebra& L) {
    Subspace all = Subspace::full(L.dim());
    return commutator(L, all, all);
}

bool is_perfect(const HomLieAlgebra& L) { return derived(L).is_full(); }

Subspace naive_centre(const HomLieAlgebra& L) {
    const std::size_t n = L.dim();
    // Row block j holds x -> [x, e_j].
    Matrix m(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = L.structure(i, j)[k];
    return kernel(m);
}

Subspace centre(const HomLieAlgebra& L) { return largest_invariant_subspace(L.twist(), naive_centre(L)); }

HomLieAlgebra restrict_to(const HomLieAlgebra& L, const Subspace& sub, std::string name) {
    if (sub.ambient_dim() != L.dim()) throw DimensionError("restrict_to: ambient mismatch");
    if (!is_subalgebra(L, sub)) throw PreconditionError("restrict_to: not a twist-invariant subalgebra");
    const std::size_t k = sub.dim();
    std::vector<Vector> s;
    s.reserve(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) s.push_back(sub.coordinates(L.bracket(sub.basis().row(a), sub.basis().row(b))));
    Matrix t(k, k);
    for (std::size_t b = 0; b < k; ++b) {
        Vector c = sub.coordinates(L.apply_twist(sub.basis().row(b)));
        for (std::size_t a = 0; a < k; ++a) t(a, b) = c[a];
    }
    std::vector<std::string> names;
    for (std::size_t a = 0; a < k; ++a) names.push_back("b" + std::to_string(a + 1));
    if (name.empty()) name = L.name() + "_sub";
    return HomLieAlgebra(std::move(name), std::move(names), std::move(s), std::move(t));
}

Matrix inclusion_matrix(const Subspace& sub) { return sub.basis().transpose(); }

AlgebraQuotient quotient_algebra(const HomLieAlgebra& L, const Subspace& ideal) {
    if (ideal.ambient_dim() != L.dim()) throw DimensionError("quotient_algebra: ambient mismatch");
    if (!is_twist_invariant(L, ideal)) throw PreconditionError("quotient_algebra: subspace is not twist-invariant");
    if (!is_ideal(L, ideal)) throw PreconditionError("quotient_algebra: subspace is not an ideal");
    QuotientSpace q(ideal);
    const std::size_t m = q.dim();
    std::vector<Vector> lifts;
    for (std::size_t a = 0; a < m; ++a) lifts.push_back(q.lift(unit_vector(m, a)));
    std::vector<Vector> s;
    s.reserve(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) s.push_back(q.project(L.bracket(lifts[a], lifts[b])));
    Matrix t = q.induced_map(L.twist(), q);
    std::vector<std::string> names;
    for (auto c : q.representative_columns()) names.push_back(L.basis_names()[c]);
    HomLieAlgebra quot(L.name() + "_quot", std::move(names), std::move(s), std::move(t));
    Homomorphism proj{L, quot, q.projection()};
    return {L, ideal, std::move(q), std::move(quot), std::move(proj)};
}

AlgebraQuotient abelianisation(const HomLieAlgebra& L) { return quotient_algebra(L, derived(L)); }

bool is_central_extension(const Homomorphism& f) {
    if (rank(f.matrix) != f.target.dim()) throw PreconditionError("is_central_extension: map is not surjective");
    return subspace_leq(kernel(f.matrix), centre(f.source));
}

bool alpha_identity_check(const HomLieAlgebra& L) {
    const std::size_t n = L.dim();
    Matrix shifted = L.twist() - Matrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector d = shifted.column(j);
        if (is_zero(d)) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (!is_zero(L.bracket(unit_vector(n, i), d))) return false;
    }
    return true;
}

}  // namespace homlie
