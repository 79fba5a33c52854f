#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homlie/algebra.hpp"

namespace homlie {

enum class Provenance { paper_example, classical, constructed };
enum class Tag { paper, trivial, derived };

std::string to_string(Provenance p);
std::string to_string(Tag t);

struct Expected {
    std::variant<std::size_t, bool> value;
    Tag tag;
    std::string oracle;  // how the value was obtained independently of the library
};

struct CatalogueEntry {
    std::string id;
    HomLieAlgebra algebra;
    Provenance provenance;
    std::string description;
    std::map<std::string, Expected> expected;

    std::optional<std::size_t> expected_dim(const std::string& key) const;
    std::optional<bool> expected_flag(const std::string& key) const;
};

/// Deterministic order.
const std::vector<CatalogueEntry>& list_catalogue();
/// Throws std::out_of_range for unknown ids.
const CatalogueEntry& catalogue_get(const std::string& id);

/// Twist candidates that were considered and left out, with the reason.
struct RejectedCandidate {
    std::string id;
    HomLieAlgebra algebra;
    std::string reason;
};
const std::vector<RejectedCandidate>& rejected_candidates();

// Named constructors shared by the catalogue and the tests.
HomLieAlgebra make_abelian(std::size_t n, bool nilpotent_twist);
HomLieAlgebra make_e2();
HomLieAlgebra make_solvable2();  // [e1,e2] = e1, twist id
HomLieAlgebra make_heisenberg3(const Matrix& twist);
HomLieAlgebra make_sl2();
HomLieAlgebra make_sl2_semidirect_h3();
HomLieAlgebra make_dim4_alpha_iteration();

enum class TwistKind { identity, zero, projection, nilpotent, any };

struct RandomResult {
    std::optional<HomLieAlgebra> algebra;
    std::size_t attempts = 0;
};

/// Rejection sampling of skew tensors and twists until verify_axioms passes.
/// Coefficients are drawn from {-2..2}; `density` is the chance a coefficient is nonzero.
/// Deterministic for a fixed seed. Throws DimensionError for dim > 4.
RandomResult random_homlie(std::size_t dim, double density, TwistKind kind, std::uint64_t seed,
                           std::size_t budget = 10000);

}  // namespace homlie
