#pragma once

#include "homlie/algebra.hpp"

namespace homlie {

/// Strictly increasing index tuples of size k from {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t k);

enum class BoundarySign {
    alternating,  // (-1)^{i+j} on the (i, j) summand
    unsigned_sum  // the same summands without the sign; kept to document that it is not a differential
};

/// d_n : Lambda^n L -> Lambda^{n-1} L,
/// x_1 ^ ... ^ x_n -> sum_{i<j} (-1)^{i+j} [x_i, x_j] ^ alpha x_1 ^ ... (x_i, x_j omitted) ... ^ alpha x_n.
/// Throws PreconditionError unless 1 <= n <= dim L.
Matrix boundary(const HomLieAlgebra& L, std::size_t n, BoundarySign sign = BoundarySign::alternating);

struct ChainComplex {
    HomLieAlgebra algebra;
    std::size_t max_degree = 0;
    std::vector<std::vector<std::vector<std::size_t>>> spaces;  // spaces[n] = basis of Lambda^n
    std::vector<Matrix> boundaries;                             // boundaries[n] = d_n, n >= 1
};

ChainComplex chain_complex(const HomLieAlgebra& L, std::size_t max_degree);

struct HomologyReport {
    std::size_t degree = 0;
    std::size_t dim = 0;
    std::vector<Vector> cycle_basis;  // representatives in Lambda^n
    std::size_t boundary_dim = 0;     // dim im d_{n+1}
};

HomologyReport homology(const HomLieAlgebra& L, std::size_t n);

/// d_{n-1} d_n = 0 for 2 <= n <= max_degree.
bool verify_complex(const HomLieAlgebra& L, std::size_t max_degree, BoundarySign sign = BoundarySign::alternating);

}  // namespace homlie
