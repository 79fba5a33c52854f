#include <doctest.h>

#include "homlie/catalogue.hpp"
#include "homlie/errors.hpp"
#include "homlie/tensor.hpp"
#include "lemmas.hpp"
#include "oracles.hpp"

using namespace homlie;

namespace {

Vector v(std::initializer_list<long> xs) {
    Vector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

std::vector<HomLieAlgebra> small_catalogue() {
    std::vector<HomLieAlgebra> out;
    for (const auto& e : list_catalogue())
        if (e.algebra.dim() <= 3) out.push_back(e.algebra);
    return out;
}

}  // namespace

TEST_SUITE("tensor_exterior") {

TEST_CASE("relation space equals the unreduced enumeration of all five families") {
    for (const auto& L : small_catalogue()) {
        HomAction a = adjoint_action(L);
        Subspace d = relation_space(L, L, {a, a});
        CHECK_MESSAGE(oracle::same_span(d.basis_vectors(), oracle::naive_relations(L, L, a, a)), L.name());
    }
    // a pair of ideals of E2 acting on each other
    HomLieAlgebra e2 = make_e2();
    CrossedModule eta = inclusion_crossed_module(e2, derived(e2));
    CrossedModule mu = identity_crossed_module(e2);
    CompatiblePair p = induced_pair(eta, mu);
    Subspace d = relation_space(eta.m_alg, mu.m_alg, p);
    CHECK(oracle::same_span(d.basis_vectors(), oracle::naive_relations(eta.m_alg, mu.m_alg, p.m_on_n, p.n_on_m)));
}

TEST_CASE("tensor and exterior square dimensions match the catalogue oracles") {
    for (const auto& e : list_catalogue()) {
        if (auto t = e.expected_dim("tensor_square_dim")) CHECK_MESSAGE(tensor_square(e.algebra).dim() == *t, e.id);
        if (auto x = e.expected_dim("exterior_square_dim")) CHECK_MESSAGE(exterior_square(e.algebra).dim() == *x, e.id);
    }
    CHECK(tensor_square(make_sl2()).dim() == 3);
    CHECK(exterior_square(make_abelian(1, false)).dim() == 0);
    CHECK(exterior_square(make_abelian(2, false)).dim() == 1);
}

TEST_CASE("product bracket is -^n m * ^{m'} n' on classes") {
    for (const auto& L : small_catalogue()) {
        TensorProduct t = tensor_square(L);
        const std::size_t n = L.dim();
        for (std::size_t a = 0; a < n * n; ++a)
            for (std::size_t b = 0; b < n * n; ++b) {
                Vector m = oracle::unit(n, a / n), nn = oracle::unit(n, a % n);
                Vector mp = oracle::unit(n, b / n), np = oracle::unit(n, b % n);
                Vector expect = t.class_of(-oracle::bracket(L, nn, m), oracle::bracket(L, mp, np));
                Vector got = t.product.bracket(t.class_of(m, nn), t.class_of(mp, np));
                CHECK(got == expect);
            }
    }
}

TEST_CASE("well-definedness audit and structure lemmas on self-squares") {
    for (const auto& e : list_catalogue()) {
        const HomLieAlgebra& L = e.algebra;
        ProductOptions opts;
        opts.audit = true;
        TensorProduct t = tensor_square(L, opts);
        CHECK_MESSAGE(audit_tensor_product(t).ok(), e.id);
        Subspace z = centre(t.product);
        CHECK_MESSAGE(subspace_leq(kernel(t.psi_left), z), e.id);
        CHECK_MESSAGE(subspace_leq(kernel(t.psi_right), z), e.id);
        ExteriorProduct x = exterior_square(L);
        CHECK_MESSAGE(subspace_leq(x.box, centre(x.tensor.product)), e.id);
        CHECK(verify_axioms(x.product).ok());
    }
}

TEST_CASE("induced actions on the tensor product are Hom-actions") {
    for (const auto& L : small_catalogue()) {
        TensorProduct t = tensor_square(L);
        auto [am, an] = induced_actions_on_tensor(t);
        CHECK_MESSAGE(verify_action(am).ok(), L.name());
        CHECK_MESSAGE(verify_action(an).ok(), L.name());
    }
}

TEST_CASE("preconditions") {
    ProductOptions small;
    small.max_factor_dim = 2;
    CHECK_THROWS_AS(tensor_square(make_sl2(), small), CapExceeded);
    HomAction a = adjoint_action(make_e2());
    HomAction bad = a.with_coeff(1, 1, v({1, 0}));
    CHECK_THROWS_AS(tensor_product(make_e2(), make_e2(), {bad, a}), PreconditionError);
}

TEST_CASE("theta, uce and H2 for perfect algebras") {
    UceReport u = uce_of_perfect(make_sl2());
    CHECK(u.kernel.dim() == 0);
    CHECK(u.box_zero);
    CHECK(u.central);
    CHECK(u.surjective);
    CHECK(u.theta.homomorphism);
    CHECK_THROWS_AS(uce_of_perfect(make_e2()), PreconditionError);
}

TEST_CASE("phi is a precrossed module under the alpha-identity condition") {
    for (const auto& e : list_catalogue()) {
        if (!alpha_identity_check(e.algebra) || e.algebra.dim() > 4) continue;
        PhiReport p = phi_precrossed(exterior_square(e.algebra));
        CHECK_MESSAGE(p.homomorphism, e.id);
        CHECK_MESSAGE(p.precrossed, e.id);
        CHECK_MESSAGE(p.formulas_agree, e.id);
    }
    CHECK_THROWS_AS(phi_precrossed(exterior_square(make_e2())), PreconditionError);
}

TEST_CASE("theta for ideal pairs lands in the intersection") {
    HomLieAlgebra h3 = catalogue_get("heisenberg3").algebra;
    Subspace n = Subspace::span(3, {v({0, 0, 1})});
    ExteriorProduct e = exterior_product_of_ideals(h3, n, Subspace::full(3));
    ThetaReport th = theta(e);
    CHECK(th.homomorphism);
    CHECK(th.intersection == n);
    CHECK(subspace_leq(image(th.theta), th.intersection));
}

TEST_CASE("exterior sequence is exact") {
    HomLieAlgebra h3 = catalogue_get("heisenberg3").algebra;
    SequenceReport s = exterior_sequence_check(h3, Subspace::span(3, {v({0, 0, 1})}));
    CHECK(s.exact);
    CHECK(s.surjective);
    HomLieAlgebra e2 = make_e2();
    SequenceReport s2 = exterior_sequence_check(e2, derived(e2));
    CHECK(s2.exact);
    CHECK(s2.surjective);
}

TEST_CASE("pairings") {
    for (const auto& L : small_catalogue()) {
        ExteriorProduct e = exterior_square(L);
        CHECK_MESSAGE(verify_pairing(canonical_pairing(e), e.eta, e.mu).ok(), L.name());
        BilinearMap br = bracket_pairing(L, Subspace::full(L.dim()), Subspace::full(L.dim()));
        CHECK_MESSAGE(verify_pairing(br, e.eta, e.mu).ok(), L.name());
    }
}

}

TEST_CASE("tensor product lemma, parts c to e, on self-squares" * doctest::test_suite("tensor_exterior")) {
    for (const auto& e : list_catalogue()) {
        lemmas::TensorLemmaReport r = lemmas::check_tensor_lemmas(tensor_square(e.algebra));
        CHECK_MESSAGE(r.ok(), e.id << ": " << r.first_failure);
    }
}
