#pragma once

// Non-abelian tensor and exterior products of Hom-Lie algebras.
//
// Ambient coordinates: m_i (x) n_j sits at index i * dim(N) + j of Q^{dim M * dim N}.
// The tensor product is the quotient of that space by the relation subspace D(M,N);
// the exterior product is a further quotient by the box subspace.

#include <optional>

#include "homlie/action.hpp"

namespace homlie {

struct ProductOptions {
    /// Largest factor dimension accepted by relation enumeration.
    std::size_t max_factor_dim = 8;
    /// Run the well-definedness audit and verify the axioms of the result.
    bool audit = false;
};

Vector outer(std::span<const Scalar> m, std::span<const Scalar> n);

/// D(M,N): span of the five generator families on basis tuples.
/// Throws PreconditionError for incompatible actions, CapExceeded past the cap.
Subspace relation_space(const HomLieAlgebra& M, const HomLieAlgebra& N, const CompatiblePair& actions,
                        const ProductOptions& opts = {});

struct TensorProduct {
    HomLieAlgebra left;   // M
    HomLieAlgebra right;  // N
    CompatiblePair actions;
    Subspace relations;   // D(M,N) in ambient coordinates
    QuotientSpace space;
    HomLieAlgebra product;
    Matrix psi_left;      // m * n -> -^n m
    Matrix psi_right;     // m * n -> ^m n

    std::size_t ambient_dim() const { return left.dim() * right.dim(); }
    std::size_t dim() const { return space.dim(); }
    /// Class of m (x) n in tensor coordinates.
    Vector class_of(std::span<const Scalar> m, std::span<const Scalar> n) const;
    /// The bracket [m (x) n, m' (x) n'] = -^n m (x) ^{m'} n', extended bilinearly to the ambient space.
    Vector ambient_bracket(std::span<const Scalar> u, std::span<const Scalar> v) const;
    /// alpha_M (x) alpha_N on the ambient space.
    Matrix ambient_twist() const;
};

TensorProduct tensor_product(const HomLieAlgebra& M, const HomLieAlgebra& N, const CompatiblePair& actions,
                             const ProductOptions& opts = {});
/// L * L with adjoint actions.
TensorProduct tensor_square(const HomLieAlgebra& L, const ProductOptions& opts = {});

struct AuditReport {
    bool bracket_closed = true;  // ambient bracket of D with anything stays in D
    bool twist_closed = true;    // alpha (x) alpha maps D into D
    bool axioms = true;          // the quotient is a Hom-Lie algebra
    bool psi_homomorphisms = true;
    bool ok() const { return bracket_closed && twist_closed && axioms && psi_homomorphisms; }
};

AuditReport audit_tensor_product(const TensorProduct& t);

/// Actions of M and of N on M * N.
std::pair<HomAction, HomAction> induced_actions_on_tensor(const TensorProduct& t);

struct ExteriorProduct {
    CrossedModule eta;  // M -> L
    CrossedModule mu;   // N -> L
    TensorProduct tensor;
    Subspace box;       // inside tensor coordinates
    QuotientSpace space;
    HomLieAlgebra product;
    Matrix pi;          // tensor -> exterior

    std::size_t dim() const { return space.dim(); }
    /// Composite projection from the ambient space M (x) N.
    Matrix ambient_projection() const;
    Vector class_of(std::span<const Scalar> m, std::span<const Scalar> n) const;
    /// Canonical ambient representative of an exterior-product vector.
    Vector ambient_lift(std::span<const Scalar> q) const;
};

/// Span of the classes m * n over pairs with eta(m) = mu(n).
Subspace box_subspace(const CrossedModule& eta, const CrossedModule& mu, const TensorProduct& t);

ExteriorProduct exterior_product(const CrossedModule& eta, const CrossedModule& mu, const ProductOptions& opts = {});
/// L ^ L through the identity crossed module.
ExteriorProduct exterior_square(const HomLieAlgebra& L, const ProductOptions& opts = {});
/// M ^ N for ideals M, N of L through their inclusions.
ExteriorProduct exterior_product_of_ideals(const HomLieAlgebra& L, const Subspace& M, const Subspace& N,
                                           const ProductOptions& opts = {});

struct ThetaReport {
    Matrix theta;                  // exterior coordinates -> coordinates of L
    Subspace intersection;         // M cap N inside L
    bool homomorphism = false;
    std::optional<bool> crossed_module;  // set when L satisfies the alpha-identity condition
};

/// theta(m ^ n) = [m, n] for an exterior product built from ideal inclusions.
/// Throws AuditFailure if the map does not vanish on the killed subspace.
ThetaReport theta(const ExteriorProduct& e);

struct PhiReport {
    Matrix phi;  // exterior coordinates -> L
    bool homomorphism = false;
    bool precrossed = false;
    bool formulas_agree = false;  // -eta(^n m) == mu(^m n)
};

/// phi(m ^ n) = mu(^m n); requires the alpha-identity condition on the base.
PhiReport phi_precrossed(const ExteriorProduct& e);

struct UceReport {
    ExteriorProduct square;
    ThetaReport theta;
    Subspace kernel;  // Ker theta, in exterior coordinates
    bool box_zero = false;
    bool central = false;
    bool perfect = false;
    bool surjective = false;
};

UceReport uce_of_perfect(const HomLieAlgebra& L, const ProductOptions& opts = {});

/// Matrix of the map L^L -> (L/N)^(L/N) induced by the projection.
Matrix exterior_square_map(const AlgebraQuotient& q, const ExteriorProduct& source, const ExteriorProduct& target);

struct SequenceReport {
    std::size_t dim_n_wedge_l = 0;
    std::size_t dim_l_wedge_l = 0;
    std::size_t dim_quotient_square = 0;
    Matrix inclusion_map;   // N^L -> L^L
    Matrix projection_map;  // L^L -> (L/N)^(L/N)
    Subspace image;
    Subspace kernel;
    bool surjective = false;
    bool exact = false;
};

/// N ^ L -> L ^ L -> (L/N) ^ (L/N) -> 0.
SequenceReport exterior_sequence_check(const HomLieAlgebra& L, const Subspace& N, const ProductOptions& opts = {});

/// A bilinear map h: M x N -> P given by h(e_i, f_j) = values[i * dim N + j].
struct BilinearMap {
    std::size_t left_dim = 0;
    std::size_t right_dim = 0;
    HomLieAlgebra target;
    std::vector<Vector> values;

    Vector operator()(std::span<const Scalar> m, std::span<const Scalar> n) const;
};

struct PairingReport {
    bool a = true, b = true, c = true, d = true, e = true;
    bool ok() const { return a && b && c && d && e; }
};

PairingReport verify_pairing(const BilinearMap& h, const CrossedModule& eta, const CrossedModule& mu);
/// h(m, n) = m ^ n.
BilinearMap canonical_pairing(const ExteriorProduct& e);
/// h(m, n) = [m, n] into M cap N (its canonical basis), for ideals M, N of L.
BilinearMap bracket_pairing(const HomLieAlgebra& L, const Subspace& M, const Subspace& N);

}  // namespace homlie
