#pragma once
// Structure identities of the tensor product checked on basis tuples.

#include <string>

#include "homlie/tensor.hpp"

namespace lemmas {

using namespace homlie;

struct TensorLemmaReport {
    bool kernels_central = true;    // Ker psi_M, Ker psi_N inside the centre
    bool box_central = true;        // only filled for exterior data
    bool induced_trivial = true;    // Im psi acts trivially on Ker psi
    bool psi_equivariant = true;    // psi_M(^{m'} t) = [alpha m', psi_M t], same for N
    bool action_is_bracket = true;  // ^{psi_M t} s = [alpha t, s] = ^{psi_N t} s
    std::string first_failure;
    bool ok() const { return kernels_central && box_central && induced_trivial && psi_equivariant && action_is_bracket; }
};

inline TensorLemmaReport check_tensor_lemmas(const TensorProduct& t) {
    TensorLemmaReport r;
    const HomLieAlgebra& M = t.left;
    const HomLieAlgebra& N = t.right;
    const HomLieAlgebra& P = t.product;
    const std::size_t dm = M.dim(), dn = N.dim(), q = t.dim();
    auto fail = [&](bool& flag, const std::string& what) {
        if (flag && r.first_failure.empty()) r.first_failure = what;
        flag = false;
    };

    Subspace z = centre(P);
    Subspace km = kernel(t.psi_left), kn = kernel(t.psi_right);
    if (!subspace_leq(km, z) || !subspace_leq(kn, z)) fail(r.kernels_central, "kernel of psi not central");

    auto [am, an] = induced_actions_on_tensor(t);
    // d) ^{psi_M(x)} k = 0 for k in Ker psi_M, and likewise for N
    for (std::size_t a = 0; a < q; ++a) {
        Vector pm = t.psi_left.column(a), pn = t.psi_right.column(a);
        for (const auto& k : km.basis_vectors())
            if (!is_zero(am.act(pm, k))) fail(r.induced_trivial, "Im psi_M acts on Ker psi_M");
        for (const auto& k : kn.basis_vectors())
            if (!is_zero(an.act(pn, k))) fail(r.induced_trivial, "Im psi_N acts on Ker psi_N");
    }

    Matrix pa = P.twist();
    for (std::size_t a = 0; a < q; ++a) {
        Vector tv = Vector(q);
        tv[a] = 1;
        Vector psim = t.psi_left.apply(tv), psin = t.psi_right.apply(tv);
        // e) first two identities
        for (std::size_t i = 0; i < dm; ++i) {
            Vector mp = unit_vector(dm, i);
            if (t.psi_left.apply(am.act(mp, tv)) != M.bracket(M.apply_twist(mp), psim))
                fail(r.psi_equivariant, "psi_M equivariance");
        }
        for (std::size_t j = 0; j < dn; ++j) {
            Vector np = unit_vector(dn, j);
            if (t.psi_right.apply(an.act(np, tv)) != N.bracket(N.apply_twist(np), psin))
                fail(r.psi_equivariant, "psi_N equivariance");
        }
        // e) third identity
        for (std::size_t b = 0; b < q; ++b) {
            Vector sv(q);
            sv[b] = 1;
            Vector br = P.bracket(pa.apply(tv), sv);
            if (am.act(psim, sv) != br || an.act(psin, sv) != br) fail(r.action_is_bracket, "action by psi vs bracket");
        }
    }
    return r;
}

}  // namespace lemmas
