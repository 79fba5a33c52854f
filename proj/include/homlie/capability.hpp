#pragma once

#include <optional>

#include "homlie/tensor.hpp"

namespace homlie {

/// {l : alpha^k(l) * x = 0 in L * L for all x and k >= 0}.
Subspace tensor_centre(const HomLieAlgebra& L, const ProductOptions& opts = {});
/// {l : alpha^k(l) ^ x = 0 in L ^ L for all x and k >= 0}.
Subspace exterior_centre(const HomLieAlgebra& L, const ProductOptions& opts = {});

/// Capable iff the exterior centre vanishes.
bool is_capable(const HomLieAlgebra& L, const ProductOptions& opts = {});

/// For perfect L the epicentre equals the exterior centre. Throws PreconditionError otherwise.
Subspace epicentre_perfect(const HomLieAlgebra& L, const ProductOptions& opts = {});

struct CapabilityReport {
    HomLieAlgebra algebra;
    Subspace centre;
    Subspace tensor_centre;
    Subspace exterior_centre;
    bool capable = false;
    std::optional<Subspace> epicentre;  // only for perfect algebras
};

CapabilityReport capability_report(const HomLieAlgebra& L, const ProductOptions& opts = {});

struct MultiplierCheck {
    std::size_t dim_square = 0;           // dim L ^ L
    std::size_t dim_quotient_square = 0;  // dim (L/N) ^ (L/N)
    bool isomorphism = false;             // pi ^ pi is bijective
    bool inside_exterior_centre = false;  // N contained in Z^(L)
};

/// For perfect L and a twist-invariant central ideal N.
MultiplierCheck central_ideal_multiplier_check(const HomLieAlgebra& L, const Subspace& N, const ProductOptions& opts = {});

struct DerivationSpace {
    HomLieAlgebra algebra;
    unsigned k = 0;
    std::vector<Matrix> basis;
};

/// Linear maps d with d alpha = alpha d and d[x,y] = [d x, alpha^k y] + [alpha^k x, d y].
DerivationSpace derivations(const HomLieAlgebra& L, unsigned k);
bool is_derivation(const HomLieAlgebra& L, unsigned k, const Matrix& d);

struct InnerDerivations {
    Matrix phi;               // column i is ad(e_i) flattened row-major
    Subspace image;           // inside Q^{n*n}
    Subspace kernel;
    bool kernel_is_centre = false;
};

/// x -> [x, -]; requires the alpha-identity condition.
InnerDerivations inner_derivations(const HomLieAlgebra& L);

/// Row-major flattening used for derivation matrices.
Vector flatten(const Matrix& m);
Matrix unflatten(std::span<const Scalar> v, std::size_t n);

}  // namespace homlie
