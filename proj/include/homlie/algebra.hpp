#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "homlie/exactla.hpp"

namespace homlie {

/// A finite-dimensional Hom-Lie algebra (L, alpha) over Q, in structure constants.
///
/// `structure(i, j)` is the coordinate vector of [e_i, e_j]; the twist matrix
/// holds alpha(e_j) in its column j. The constructor only checks sizes; use
/// verify_axioms() for skew-symmetry, Hom-Jacobi and multiplicativity.
class HomLieAlgebra {
public:
    struct Entry {
        std::size_t i;
        std::size_t j;
        Vector value;
    };

    HomLieAlgebra() = default;
    HomLieAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<Vector> structure,
                  Matrix twist);

    /// Builds from the i < j half of the bracket; [e_j, e_i] is filled in as -[e_i, e_j].
    static HomLieAlgebra from_brackets(std::string name, std::size_t dim, const std::vector<Entry>& upper,
                                       Matrix twist, std::vector<std::string> basis_names = {});
    static HomLieAlgebra abelian(std::size_t dim, Matrix twist, std::string name = "abelian");

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const Matrix& twist() const { return twist_; }
    const Vector& structure(std::size_t i, std::size_t j) const { return structure_[i * dim_ + j]; }

    Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;
    Vector apply_twist(std::span<const Scalar> x) const { return twist_.apply(x); }
    /// Matrix of y -> [x, y].
    Matrix ad(std::span<const Scalar> x) const;
    bool is_abelian() const;

    HomLieAlgebra renamed(std::string name) const;
    bool operator==(const HomLieAlgebra& o) const = default;

private:
    std::string name_;
    std::size_t dim_ = 0;
    std::vector<std::string> basis_names_;
    std::vector<Vector> structure_;
    Matrix twist_{0, 0};
};

std::vector<std::string> default_basis_names(std::size_t dim);

struct AxiomReport {
    bool skew = true;
    bool hom_jacobi = true;
    bool multiplicative = true;
    std::optional<std::array<std::size_t, 2>> skew_failure;
    std::optional<std::array<std::size_t, 3>> jacobi_failure;
    std::optional<std::array<std::size_t, 2>> multiplicative_failure;

    bool ok() const { return skew && hom_jacobi && multiplicative; }
};

/// Checks every identity on basis tuples, which suffices by multilinearity.
AxiomReport verify_axioms(const HomLieAlgebra& L);

/// A linear map f with f[x,y] = [f x, f y] and f alpha = alpha' f.
struct Homomorphism {
    HomLieAlgebra source;
    HomLieAlgebra target;
    Matrix matrix;  // target.dim() x source.dim()
};

bool is_homomorphism(const HomLieAlgebra& source, const HomLieAlgebra& target, const Matrix& f);
/// Validating constructor; throws PreconditionError when f is not a homomorphism.
Homomorphism make_homomorphism(HomLieAlgebra source, HomLieAlgebra target, Matrix f);
Homomorphism identity_homomorphism(const HomLieAlgebra& L);

/// Yau twist of a Lie algebra by one of its endomorphisms: [x,y]' = [Ax, Ay], twist A.
HomLieAlgebra yau_twist(const HomLieAlgebra& lie, const Matrix& endo);
HomLieAlgebra direct_sum(const HomLieAlgebra& a, const HomLieAlgebra& b, std::string name = {});

bool is_twist_invariant(const HomLieAlgebra& L, const Subspace& w);
bool is_subalgebra(const HomLieAlgebra& L, const Subspace& w);
bool is_ideal(const HomLieAlgebra& L, const Subspace& w);

Subspace subalgebra_closure(const HomLieAlgebra& L, const Subspace& seed);
Subspace ideal_closure(const HomLieAlgebra& L, const Subspace& seed);

/// Span of [h, k]; not closed to an ideal. H and K must be twist-invariant subalgebras.
Subspace commutator(const HomLieAlgebra& L, const Subspace& H, const Subspace& K);
Subspace derived(const HomLieAlgebra& L);
bool is_perfect(const HomLieAlgebra& L);

/// {x : [x, y] = 0 for all y}.
Subspace naive_centre(const HomLieAlgebra& L);
/// {x : [alpha^k x, y] = 0 for all y and all k >= 0}.
Subspace centre(const HomLieAlgebra& L);

/// The structure a twist-invariant subalgebra inherits, in the coordinates of
/// the subspace's canonical (RREF) basis.
HomLieAlgebra restrict_to(const HomLieAlgebra& L, const Subspace& sub, std::string name = {});
/// Matrix of the inclusion of `sub` (in its canonical basis) into L.
Matrix inclusion_matrix(const Subspace& sub);

struct AlgebraQuotient {
    HomLieAlgebra parent;
    Subspace ideal;
    QuotientSpace space;
    HomLieAlgebra quotient;
    Homomorphism projection;
};

AlgebraQuotient quotient_algebra(const HomLieAlgebra& L, const Subspace& ideal);
AlgebraQuotient abelianisation(const HomLieAlgebra& L);

/// f must be surjective; true iff Ker f lies in the centre of the source.
bool is_central_extension(const Homomorphism& f);

/// [L, Im(alpha - id)] = 0.
bool alpha_identity_check(const HomLieAlgebra& L);

}  // namespace homlie
