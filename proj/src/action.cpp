#include "homlie/action.hpp"

#include "homlie/errors.hpp"

namespace homlie {

namespace {

bool same_structure(const HomLieAlgebra& a, const HomLieAlgebra& b) {
    if (a.dim() != b.dim() || a.twist() != b.twist()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.structure(i, j) != b.structure(i, j)) return false;
    return true;
}

}  // namespace

HomAction::HomAction(HomLieAlgebra actor, HomLieAlgebra actee, std::vector<Vector> coeffs)
    : actor_(std::move(actor)), actee_(std::move(actee)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != actor_.dim() * actee_.dim()) throw DimensionError("action table must have dim L * dim M entries");
    for (const auto& v : coeffs_)
        if (v.size() != actee_.dim()) throw DimensionError("action coefficient has wrong length");
}

HomAction HomAction::trivial(HomLieAlgebra actor, HomLieAlgebra actee) {
    std::vector<Vector> c(actor.dim() * actee.dim(), Vector(actee.dim()));
    return HomAction(std::move(actor), std::move(actee), std::move(c));
}

Vector HomAction::act(std::span<const Scalar> x, std::span<const Scalar> m) const {
    if (x.size() != actor_.dim() || m.size() != actee_.dim()) throw DimensionError("act: vector length mismatch");
    Vector out(actee_.dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (sgn(m[j]) != 0) axpy(x[i] * m[j], coeff(i, j), out);
    }
    return out;
}

Matrix HomAction::operator_of(std::span<const Scalar> x) const {
    const std::size_t d = actee_.dim();
    Matrix op(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        Vector col = act(x, unit_vector(d, j));
        for (std::size_t r = 0; r < d; ++r) op(r, j) = col[r];
    }
    return op;
}

bool HomAction::is_trivial() const {
    for (const auto& v : coeffs_)
        if (!is_zero(v)) return false;
    return true;
}

HomAction HomAction::with_coeff(std::size_t i, std::size_t j, Vector value) const {
    HomAction copy = *this;
    if (value.size() != actee_.dim()) throw DimensionError("with_coeff: value has wrong length");
    copy.coeffs_.at(i * actee_.dim() + j) = std::move(value);
    return copy;
}

ActionReport verify_action(const HomAction& a) {
    const HomLieAlgebra& L = a.actor();
    const HomLieAlgebra& M = a.actee();
    const std::size_t nl = L.dim(), nm = M.dim();
    std::vector<Vector> al(nl), am(nm);
    for (std::size_t i = 0; i < nl; ++i) al[i] = L.twist().column(i);
    for (std::size_t j = 0; j < nm; ++j) am[j] = M.twist().column(j);
    ActionReport rep;

    for (std::size_t x = 0; x < nl && rep.axiom_a; ++x)
        for (std::size_t y = 0; y < nl && rep.axiom_a; ++y)
            for (std::size_t m = 0; m < nm; ++m) {
                Vector lhs = a.act(L.structure(x, y), am[m]);
                Vector rhs = a.act(al[x], a.coeff(y, m)) - a.act(al[y], a.coeff(x, m));
                if (lhs != rhs) {
                    rep.axiom_a = false;
                    rep.a_failure = {x, y, m};
                    break;
                }
            }

    for (std::size_t x = 0; x < nl && rep.axiom_b; ++x)
        for (std::size_t m = 0; m < nm && rep.axiom_b; ++m)
            for (std::size_t mp = 0; mp < nm; ++mp) {
                Vector lhs = a.act(al[x], M.structure(m, mp));
                Vector rhs = M.bracket(a.coeff(x, m), am[mp]) + M.bracket(am[m], a.coeff(x, mp));
                if (lhs != rhs) {
                    rep.axiom_b = false;
                    rep.b_failure = {x, m, mp};
                    break;
                }
            }

    for (std::size_t x = 0; x < nl && rep.axiom_c; ++x)
        for (std::size_t m = 0; m < nm; ++m)
            if (M.apply_twist(a.coeff(x, m)) != a.act(al[x], am[m])) {
                rep.axiom_c = false;
                rep.c_failure = {x, m};
                break;
            }
    return rep;
}

HomAction action_by_bracket(const HomLieAlgebra& L, const Subspace& H, const Subspace& K) {
    if (!is_ideal(L, K)) throw PreconditionError("action_by_bracket: acted-on subspace must be a twist-invariant ideal");
    HomLieAlgebra actor = restrict_to(L, H, L.name() + "_H");
    HomLieAlgebra actee = restrict_to(L, K, L.name() + "_K");
    std::vector<Vector> c;
    c.reserve(H.dim() * K.dim());
    for (std::size_t i = 0; i < H.dim(); ++i)
        for (std::size_t j = 0; j < K.dim(); ++j) c.push_back(K.coordinates(L.bracket(H.basis().row(i), K.basis().row(j))));
    return HomAction(std::move(actor), std::move(actee), std::move(c));
}

HomAction action_from_ideal(const HomLieAlgebra& L, const Subspace& K) {
    if (!is_ideal(L, K)) throw PreconditionError("action_from_ideal: subspace must be a twist-invariant ideal");
    HomLieAlgebra actee = restrict_to(L, K, L.name() + "_K");
    std::vector<Vector> c;
    c.reserve(L.dim() * K.dim());
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < K.dim(); ++j)
            c.push_back(K.coordinates(L.bracket(unit_vector(L.dim(), i), K.basis().row(j))));
    return HomAction(L, std::move(actee), std::move(c));
}

HomAction adjoint_action(const HomLieAlgebra& L) {
    std::vector<Vector> c;
    c.reserve(L.dim() * L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) c.push_back(L.structure(i, j));
    return HomAction(L, L, std::move(c));
}

HomAction action_from_hom(const Homomorphism& f) {
    if (!is_homomorphism(f.source, f.target, f.matrix)) throw PreconditionError("action_from_hom: invalid homomorphism");
    const std::size_t nl = f.source.dim(), nm = f.target.dim();
    std::vector<Vector> c;
    c.reserve(nl * nm);
    for (std::size_t i = 0; i < nl; ++i) {
        Vector fx = f.matrix.column(i);
        for (std::size_t j = 0; j < nm; ++j) c.push_back(f.target.bracket(fx, unit_vector(nm, j)));
    }
    return HomAction(f.source, f.target, std::move(c));
}

bool verify_compatible(const HomAction& m_on_n, const HomAction& n_on_m) {
    const HomLieAlgebra& M = m_on_n.actor();
    const HomLieAlgebra& N = m_on_n.actee();
    if (!same_structure(M, n_on_m.actee()) || !same_structure(N, n_on_m.actor()))
        throw DimensionError("verify_compatible: actions are not between the same pair of algebras");
    const std::size_t nm = M.dim(), nn = N.dim();
    for (std::size_t m = 0; m < nm; ++m)
        for (std::size_t n = 0; n < nn; ++n) {
            const Vector& mn = m_on_n.coeff(m, n);  // ^m n
            const Vector& nm_ = n_on_m.coeff(n, m);  // ^n m
            for (std::size_t mp = 0; mp < nm; ++mp)
                if (n_on_m.act(mn, unit_vector(nm, mp)) != M.bracket(unit_vector(nm, mp), nm_)) return false;
            for (std::size_t np = 0; np < nn; ++np)
                if (m_on_n.act(nm_, unit_vector(nn, np)) != N.bracket(unit_vector(nn, np), mn)) return false;
        }
    return true;
}

namespace {

void require_xmod_inputs(const CrossedModule& x) {
    if (x.action.actor().dim() != x.l_alg.dim() || x.action.actee().dim() != x.m_alg.dim())
        throw DimensionError("crossed module: action does not match the algebras");
    if (!is_homomorphism(x.m_alg, x.l_alg, x.mu)) throw PreconditionError("crossed module: mu is not a homomorphism");
    if (!verify_action(x.action).ok()) throw PreconditionError("crossed module: action axioms fail");
}

}  // namespace

bool verify_precrossed(const CrossedModule& x) {
    require_xmod_inputs(x);
    const std::size_t nl = x.l_alg.dim(), nm = x.m_alg.dim();
    for (std::size_t l = 0; l < nl; ++l)
        for (std::size_t m = 0; m < nm; ++m)
            if (x.mu.apply(x.action.coeff(l, m)) != x.l_alg.bracket(unit_vector(nl, l), x.mu.column(m))) return false;
    return true;
}

bool verify_crossed(const CrossedModule& x) {
    if (!verify_precrossed(x)) return false;
    const std::size_t nm = x.m_alg.dim();
    for (std::size_t m = 0; m < nm; ++m) {
        Vector mu_m = x.mu.column(m);
        for (std::size_t mp = 0; mp < nm; ++mp)
            if (x.action.act(mu_m, unit_vector(nm, mp)) != x.m_alg.structure(m, mp)) return false;
    }
    return true;
}

CrossedModule inclusion_crossed_module(const HomLieAlgebra& L, const Subspace& H) {
    HomAction act = action_from_ideal(L, H);
    return {act.actee(), L, inclusion_matrix(H), act};
}

CrossedModule identity_crossed_module(const HomLieAlgebra& L) {
    return {L, L, Matrix::identity(L.dim()), adjoint_action(L)};
}

CrossedModule zero_crossed_module(const HomAction& module_action) {
    return {module_action.actee(), module_action.actor(),
            Matrix(module_action.actor().dim(), module_action.actee().dim()), module_action};
}

XmodStructureReport xmod_structure_report(const CrossedModule& x) {
    if (!verify_crossed(x)) throw PreconditionError("xmod_structure_report: not a crossed module");
    XmodStructureReport r;
    r.image = image(x.mu);
    r.image_is_ideal = is_ideal(x.l_alg, r.image);
    r.kernel = kernel(x.mu);
    r.kernel_in_centre = subspace_leq(r.kernel, centre(x.m_alg));
    return r;
}

CompatiblePair induced_pair(const CrossedModule& eta, const CrossedModule& mu) {
    if (!same_structure(eta.l_alg, mu.l_alg)) throw PreconditionError("induced_pair: crossed modules have different bases");
    const HomLieAlgebra& M = eta.m_alg;
    const HomLieAlgebra& N = mu.m_alg;
    std::vector<Vector> m_on_n, n_on_m;
    for (std::size_t m = 0; m < M.dim(); ++m) {
        Vector em = eta.mu.column(m);
        for (std::size_t n = 0; n < N.dim(); ++n) m_on_n.push_back(mu.action.act(em, unit_vector(N.dim(), n)));
    }
    for (std::size_t n = 0; n < N.dim(); ++n) {
        Vector un = mu.mu.column(n);
        for (std::size_t m = 0; m < M.dim(); ++m) n_on_m.push_back(eta.action.act(un, unit_vector(M.dim(), m)));
    }
    return {HomAction(M, N, std::move(m_on_n)), HomAction(N, M, std::move(n_on_m))};
}

}  // namespace homlie
