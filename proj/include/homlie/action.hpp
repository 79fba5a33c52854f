#pragma once

#include <array>
#include <optional>

#include "homlie/algebra.hpp"

namespace homlie {

/// A Hom-action x, m -> ^x m of `actor` on `actee`.
/// coeff(i, j) is the coordinate vector of ^{e_i} f_j in the actee's basis.
class HomAction {
public:
    HomAction() = default;
    HomAction(HomLieAlgebra actor, HomLieAlgebra actee, std::vector<Vector> coeffs);

    static HomAction trivial(HomLieAlgebra actor, HomLieAlgebra actee);

    const HomLieAlgebra& actor() const { return actor_; }
    const HomLieAlgebra& actee() const { return actee_; }
    const Vector& coeff(std::size_t i, std::size_t j) const { return coeffs_[i * actee_.dim() + j]; }
    const std::vector<Vector>& coeffs() const { return coeffs_; }

    Vector act(std::span<const Scalar> x, std::span<const Scalar> m) const;
    /// Matrix of m -> ^x m.
    Matrix operator_of(std::span<const Scalar> x) const;
    bool is_trivial() const;

    /// Copy with one coefficient replaced; used to build broken fixtures.
    HomAction with_coeff(std::size_t i, std::size_t j, Vector value) const;

private:
    HomLieAlgebra actor_;
    HomLieAlgebra actee_;
    std::vector<Vector> coeffs_;
};

struct ActionReport {
    bool axiom_a = true;  // ^{[x,y]} alpha(m) = ^{alpha x}(^y m) - ^{alpha y}(^x m)
    bool axiom_b = true;  // ^{alpha x}[m,m'] = [^x m, alpha m'] + [alpha m, ^x m']
    bool axiom_c = true;  // alpha(^x m) = ^{alpha x} alpha(m)
    std::optional<std::array<std::size_t, 3>> a_failure;  // (x, y, m)
    std::optional<std::array<std::size_t, 3>> b_failure;  // (x, m, m')
    std::optional<std::array<std::size_t, 2>> c_failure;  // (x, m)

    bool ok() const { return axiom_a && axiom_b && axiom_c; }
};

ActionReport verify_action(const HomAction& a);

/// Action of a subalgebra H on an ideal K of L by the bracket of L, in the
/// canonical bases of H and K.
HomAction action_by_bracket(const HomLieAlgebra& L, const Subspace& H, const Subspace& K);
/// Action of L on its ideal K by the bracket.
HomAction action_from_ideal(const HomLieAlgebra& L, const Subspace& K);
/// Adjoint action of L on itself.
HomAction adjoint_action(const HomLieAlgebra& L);
/// ^x m = [f(x), m].
HomAction action_from_hom(const Homomorphism& f);

/// ^{(^m n)} m' = [m', ^n m] and ^{(^n m)} n' = [n', ^m n] on basis tuples.
bool verify_compatible(const HomAction& m_on_n, const HomAction& n_on_m);

struct CompatiblePair {
    HomAction m_on_n;
    HomAction n_on_m;
};

struct CrossedModule {
    HomLieAlgebra m_alg;
    HomLieAlgebra l_alg;
    Matrix mu;          // l_alg.dim() x m_alg.dim()
    HomAction action;   // l_alg acting on m_alg
};

/// Throws PreconditionError unless mu is a homomorphism and the action verifies.
bool verify_precrossed(const CrossedModule& x);
bool verify_crossed(const CrossedModule& x);

/// Inclusion of an ideal H of L, with the bracket action.
CrossedModule inclusion_crossed_module(const HomLieAlgebra& L, const Subspace& H);
CrossedModule identity_crossed_module(const HomLieAlgebra& L);
/// (M, L, 0) for a Hom-module M over L.
CrossedModule zero_crossed_module(const HomAction& module_action);

struct XmodStructureReport {
    Subspace image;
    bool image_is_ideal = false;
    Subspace kernel;
    bool kernel_in_centre = false;
};

XmodStructureReport xmod_structure_report(const CrossedModule& x);

/// Actions of M and N on each other induced through two crossed modules over a common base.
CompatiblePair induced_pair(const CrossedModule& eta, const CrossedModule& mu);

}  // namespace homlie
