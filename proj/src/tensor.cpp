#include "homlie/tensor.hpp"

#include "homlie/errors.hpp"

namespace homlie {

Vector outer(std::span<const Scalar> m, std::span<const Scalar> n) {
    Vector v(m.size() * n.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (sgn(m[i]) == 0) continue;
        for (std::size_t j = 0; j < n.size(); ++j)
            if (sgn(n[j]) != 0) v[i * n.size() + j] = m[i] * n[j];
    }
    return v;
}

namespace {

// Basis-level data shared by relation enumeration and the product structure.
struct PairTables {
    std::size_t dm, dn;
    std::vector<Vector> alpha_m;  // alpha_M e_i
    std::vector<Vector> alpha_n;  // alpha_N f_j
    std::vector<Vector> n_on_m;   // [j * dm + i] = ^{f_j} e_i
    std::vector<Vector> m_on_n;   // [i * dn + j] = ^{e_i} f_j

    PairTables(const HomLieAlgebra& M, const HomLieAlgebra& N, const CompatiblePair& p) : dm(M.dim()), dn(N.dim()) {
        for (std::size_t i = 0; i < dm; ++i) alpha_m.push_back(M.twist().column(i));
        for (std::size_t j = 0; j < dn; ++j) alpha_n.push_back(N.twist().column(j));
        for (std::size_t j = 0; j < dn; ++j)
            for (std::size_t i = 0; i < dm; ++i) n_on_m.push_back(p.n_on_m.coeff(j, i));
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dn; ++j) m_on_n.push_back(p.m_on_n.coeff(i, j));
    }

    const Vector& nm(std::size_t j, std::size_t i) const { return n_on_m[j * dm + i]; }
    const Vector& mn(std::size_t i, std::size_t j) const { return m_on_n[i * dn + j]; }
};

void check_pair(const HomLieAlgebra& M, const HomLieAlgebra& N, const CompatiblePair& actions, const ProductOptions& opts) {
    if (actions.m_on_n.actor().dim() != M.dim() || actions.m_on_n.actee().dim() != N.dim() ||
        actions.n_on_m.actor().dim() != N.dim() || actions.n_on_m.actee().dim() != M.dim())
        throw DimensionError("tensor product: actions do not match the factors");
    if (M.dim() > opts.max_factor_dim || N.dim() > opts.max_factor_dim)
        throw CapExceeded("relation enumeration: factor dimension " + std::to_string(std::max(M.dim(), N.dim())) +
                          " exceeds the cap of " + std::to_string(opts.max_factor_dim));
    if (!verify_compatible(actions.m_on_n, actions.n_on_m))
        throw PreconditionError("tensor product: the actions are not compatible");
}

std::string tensor_name(const HomLieAlgebra& M, const HomLieAlgebra& N, const char* sym) {
    return M.name() + sym + N.name();
}

}  // namespace

Subspace relation_space(const HomLieAlgebra& M, const HomLieAlgebra& N, const CompatiblePair& actions,
                        const ProductOptions& opts) {
    check_pair(M, N, actions, opts);
    const PairTables t(M, N, actions);
    const std::size_t dm = t.dm, dn = t.dn;
    SpanBuilder span(dm * dn);
    auto push = [&](Vector v) {
        if (!is_zero(v)) span.add(std::move(v));
    };

    // (a) [m,m'] (x) alpha n - alpha m (x) ^{m'} n + alpha m' (x) ^m n
    for (std::size_t i = 0; i < dm && !span.full(); ++i)
        for (std::size_t ip = 0; ip < dm; ++ip)
            for (std::size_t j = 0; j < dn; ++j)
                push(outer(M.structure(i, ip), t.alpha_n[j]) - outer(t.alpha_m[i], t.mn(ip, j)) +
                     outer(t.alpha_m[ip], t.mn(i, j)));

    // (b) alpha m (x) [n,n'] - ^{n'} m (x) alpha n + ^n m (x) alpha n'
    for (std::size_t i = 0; i < dm && !span.full(); ++i)
        for (std::size_t j = 0; j < dn; ++j)
            for (std::size_t jp = 0; jp < dn; ++jp)
                push(outer(t.alpha_m[i], N.structure(j, jp)) - outer(t.nm(jp, i), t.alpha_n[j]) +
                     outer(t.nm(j, i), t.alpha_n[jp]));

    // (c) ^n m (x) ^m n  and  (d) ^n m (x) ^{m'} n' + ^{n'} m' (x) ^m n.
    // (d) is symmetric in the two pairs and equals twice (c) on the diagonal.
    const std::size_t pairs = dm * dn;
    for (std::size_t p = 0; p < pairs && !span.full(); ++p) {
        const std::size_t i = p / dn, j = p % dn;
        push(outer(t.nm(j, i), t.mn(i, j)));
        for (std::size_t q = p + 1; q < pairs; ++q) {
            const std::size_t ip = q / dn, jp = q % dn;
            push(outer(t.nm(j, i), t.mn(ip, jp)) + outer(t.nm(jp, ip), t.mn(i, j)));
        }
    }

    // (e) over pair triples p = (m,n), q = (m',n'), r = (m'',n''), with u_p = ^n m and w_p = alpha(^m n):
    //     [u_p,u_q] (x) w_r + [u_q,u_r] (x) w_p + [u_r,u_p] (x) w_q.
    // The generator is invariant under cyclic shifts and changes sign under a transposition,
    // so strictly increasing triples span the family.
    if (!span.full()) {
        std::vector<Vector> u(pairs), w(pairs);
        for (std::size_t p = 0; p < pairs; ++p) {
            const std::size_t i = p / dn, j = p % dn;
            u[p] = t.nm(j, i);
            w[p] = N.apply_twist(t.mn(i, j));
        }
        std::vector<Vector> ub(pairs * pairs);
        for (std::size_t p = 0; p < pairs; ++p)
            for (std::size_t q = p + 1; q < pairs; ++q) {
                ub[p * pairs + q] = M.bracket(u[p], u[q]);
                ub[q * pairs + p] = -ub[p * pairs + q];
            }
        for (std::size_t p = 0; p < pairs && !span.full(); ++p)
            for (std::size_t q = p + 1; q < pairs && !span.full(); ++q) {
                const Vector& upq = ub[p * pairs + q];
                for (std::size_t r = q + 1; r < pairs; ++r) {
                    const Vector& uqr = ub[q * pairs + r];
                    const Vector& urp = ub[r * pairs + p];
                    if (is_zero(upq) && is_zero(uqr) && is_zero(urp)) continue;
                    push(outer(upq, w[r]) + outer(uqr, w[p]) + outer(urp, w[q]));
                }
            }
    }
    return span.build();
}

Vector TensorProduct::class_of(std::span<const Scalar> m, std::span<const Scalar> n) const {
    return space.project(outer(m, n));
}

Vector TensorProduct::ambient_bracket(std::span<const Scalar> u, std::span<const Scalar> v) const {
    const std::size_t dm = left.dim(), dn = right.dim();
    if (u.size() != dm * dn || v.size() != dm * dn) throw DimensionError("ambient_bracket: size mismatch");
    Vector out(dm * dn);
    for (std::size_t a = 0; a < dm * dn; ++a) {
        if (sgn(u[a]) == 0) continue;
        const Vector& left_part = actions.n_on_m.coeff(a % dn, a / dn);  // ^n m
        if (is_zero(left_part)) continue;
        for (std::size_t b = 0; b < dm * dn; ++b) {
            if (sgn(v[b]) == 0) continue;
            const Vector& right_part = actions.m_on_n.coeff(b / dn, b % dn);  // ^{m'} n'
            axpy(-(u[a] * v[b]), outer(left_part, right_part), out);
        }
    }
    return out;
}

Matrix TensorProduct::ambient_twist() const {
    const std::size_t dm = left.dim(), dn = right.dim();
    Matrix t(dm * dn, dm * dn);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j) {
            Vector col = outer(left.twist().column(i), right.twist().column(j));
            for (std::size_t r = 0; r < col.size(); ++r) t(r, i * dn + j) = col[r];
        }
    return t;
}

TensorProduct tensor_product(const HomLieAlgebra& M, const HomLieAlgebra& N, const CompatiblePair& actions,
                             const ProductOptions& opts) {
    TensorProduct t{M, N, actions, relation_space(M, N, actions, opts), {}, {}, {}, {}};
    t.space = QuotientSpace(t.relations);
    const std::size_t dm = M.dim(), dn = N.dim(), q = t.space.dim();
    const auto& reps = t.space.representative_columns();

    std::vector<Vector> s;
    s.reserve(q * q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            s.push_back(t.space.project(t.ambient_bracket(unit_vector(dm * dn, reps[a]), unit_vector(dm * dn, reps[b]))));
    Matrix twist = t.space.induced_map(t.ambient_twist(), t.space);
    std::vector<std::string> names;
    for (auto c : reps) names.push_back(M.basis_names()[c / dn] + "*" + N.basis_names()[c % dn]);
    t.product = HomLieAlgebra(tensor_name(M, N, "*"), std::move(names), std::move(s), std::move(twist));

    t.psi_left = Matrix(dm, q);
    t.psi_right = Matrix(dn, q);
    for (std::size_t a = 0; a < q; ++a) {
        const std::size_t i = reps[a] / dn, j = reps[a] % dn;
        const Vector& nm = actions.n_on_m.coeff(j, i);
        const Vector& mn = actions.m_on_n.coeff(i, j);
        for (std::size_t r = 0; r < dm; ++r) t.psi_left(r, a) = -nm[r];
        for (std::size_t r = 0; r < dn; ++r) t.psi_right(r, a) = mn[r];
    }

    if (opts.audit) {
        AuditReport rep = audit_tensor_product(t);
        if (!rep.ok()) throw AuditFailure("tensor product of " + M.name() + " and " + N.name() + " failed its audit");
    }
    return t;
}

TensorProduct tensor_square(const HomLieAlgebra& L, const ProductOptions& opts) {
    return tensor_product(L, L, {adjoint_action(L), adjoint_action(L)}, opts);
}

AuditReport audit_tensor_product(const TensorProduct& t) {
    AuditReport rep;
    const std::size_t amb = t.ambient_dim();
    const Matrix tw = t.ambient_twist();
    for (std::size_t k = 0; k < t.relations.dim(); ++k) {
        Vector d = t.relations.basis_vector(k);
        if (!t.relations.contains(tw.apply(d))) rep.twist_closed = false;
        for (std::size_t b = 0; b < amb && rep.bracket_closed; ++b) {
            Vector e = unit_vector(amb, b);
            if (!t.relations.contains(t.ambient_bracket(d, e)) || !t.relations.contains(t.ambient_bracket(e, d)))
                rep.bracket_closed = false;
        }
    }
    rep.axioms = verify_axioms(t.product).ok();
    rep.psi_homomorphisms = is_homomorphism(t.product, t.left, t.psi_left) && is_homomorphism(t.product, t.right, t.psi_right);
    return rep;
}

std::pair<HomAction, HomAction> induced_actions_on_tensor(const TensorProduct& t) {
    const HomLieAlgebra& M = t.left;
    const HomLieAlgebra& N = t.right;
    const std::size_t dm = M.dim(), dn = N.dim(), q = t.dim();
    const auto& reps = t.space.representative_columns();
    std::vector<Vector> by_m, by_n;
    for (std::size_t k = 0; k < dm; ++k) {
        for (std::size_t a = 0; a < q; ++a) {
            const std::size_t i = reps[a] / dn, j = reps[a] % dn;
            // ^{m'}(m * n) = [m', m] * alpha n + alpha m * ^{m'} n
            Vector v = outer(M.structure(k, i), N.twist().column(j)) +
                       outer(M.twist().column(i), t.actions.m_on_n.coeff(k, j));
            by_m.push_back(t.space.project(v));
        }
    }
    for (std::size_t k = 0; k < dn; ++k) {
        for (std::size_t a = 0; a < q; ++a) {
            const std::size_t i = reps[a] / dn, j = reps[a] % dn;
            // ^{n'}(m * n) = ^{n'} m * alpha n + alpha m * [n', n]
            Vector v = outer(t.actions.n_on_m.coeff(k, i), N.twist().column(j)) +
                       outer(M.twist().column(i), N.structure(k, j));
            by_n.push_back(t.space.project(v));
        }
    }
    return {HomAction(M, t.product, std::move(by_m)), HomAction(N, t.product, std::move(by_n))};
}

// ---------------------------------------------------------------- exterior product

Matrix ExteriorProduct::ambient_projection() const { return space.projection() * tensor.space.projection(); }

Vector ExteriorProduct::class_of(std::span<const Scalar> m, std::span<const Scalar> n) const {
    return space.project(tensor.class_of(m, n));
}

Vector ExteriorProduct::ambient_lift(std::span<const Scalar> q) const { return tensor.space.lift(space.lift(q)); }

Subspace box_subspace(const CrossedModule& eta, const CrossedModule& mu, const TensorProduct& t) {
    if (!verify_crossed(eta) || !verify_crossed(mu)) throw PreconditionError("box_subspace: inputs are not crossed modules");
    const std::size_t dm = eta.m_alg.dim(), dn = mu.m_alg.dim(), dl = eta.l_alg.dim();
    if (t.left.dim() != dm || t.right.dim() != dn) throw DimensionError("box_subspace: tensor product does not match");
    // Pullback {(m, n) : eta(m) = mu(n)} as the kernel of [eta | -mu].
    Matrix join(dl, dm + dn);
    for (std::size_t r = 0; r < dl; ++r) {
        for (std::size_t c = 0; c < dm; ++c) join(r, c) = eta.mu(r, c);
        for (std::size_t c = 0; c < dn; ++c) join(r, dm + c) = -mu.mu(r, c);
    }
    Subspace pullback = kernel(join);
    std::vector<Vector> ms, ns;
    for (std::size_t k = 0; k < pullback.dim(); ++k) {
        auto row = pullback.basis().row(k);
        ms.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(dm));
        ns.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(dm), row.end());
    }
    // m (x) n over the pullback is a quadratic image; its span is spanned by the
    // diagonal products and the symmetrised cross products.
    SpanBuilder span(t.dim());
    for (std::size_t a = 0; a < ms.size(); ++a) {
        span.add(t.class_of(ms[a], ns[a]));
        for (std::size_t b = a + 1; b < ms.size(); ++b) span.add(t.class_of(ms[a], ns[b]) + t.class_of(ms[b], ns[a]));
    }
    return span.build();
}

ExteriorProduct exterior_product(const CrossedModule& eta, const CrossedModule& mu, const ProductOptions& opts) {
    if (!verify_crossed(eta) || !verify_crossed(mu)) throw PreconditionError("exterior_product: inputs are not crossed modules");
    CompatiblePair pair = induced_pair(eta, mu);
    TensorProduct t = tensor_product(eta.m_alg, mu.m_alg, pair, opts);
    Subspace box = box_subspace(eta, mu, t);
    AlgebraQuotient q = quotient_algebra(t.product, box);
    HomLieAlgebra product = q.quotient.renamed(tensor_name(eta.m_alg, mu.m_alg, "^"));
    if (opts.audit && !verify_axioms(product).ok()) throw AuditFailure("exterior product fails the Hom-Lie axioms");
    Matrix pi = q.space.projection();
    return {eta, mu, std::move(t), std::move(box), std::move(q.space), std::move(product), std::move(pi)};
}

ExteriorProduct exterior_square(const HomLieAlgebra& L, const ProductOptions& opts) {
    CrossedModule id = identity_crossed_module(L);
    return exterior_product(id, id, opts);
}

ExteriorProduct exterior_product_of_ideals(const HomLieAlgebra& L, const Subspace& M, const Subspace& N,
                                           const ProductOptions& opts) {
    return exterior_product(inclusion_crossed_module(L, M), inclusion_crossed_module(L, N), opts);
}

namespace {

// Matrix on exterior coordinates of an ambient map that must vanish on the killed subspace.
Matrix descend(const ExteriorProduct& e, const Matrix& ambient, const char* what) {
    Subspace killed = kernel(e.ambient_projection());
    for (std::size_t k = 0; k < killed.dim(); ++k)
        if (!is_zero(ambient.apply(killed.basis().row(k))))
            throw AuditFailure(std::string(what) + " does not vanish on the relations");
    Matrix out(ambient.rows(), e.dim());
    for (std::size_t a = 0; a < e.dim(); ++a) {
        Vector col = ambient.apply(e.ambient_lift(unit_vector(e.dim(), a)));
        for (std::size_t r = 0; r < col.size(); ++r) out(r, a) = col[r];
    }
    return out;
}

// The action of the base L on M ^ N: ^l(m ^ n) = ^l m ^ alpha n + alpha m ^ ^l n,
// restricted to actors given as vectors of L.
HomAction base_action(const ExteriorProduct& e, const HomLieAlgebra& actor, const std::vector<Vector>& actor_basis) {
    const HomLieAlgebra& M = e.eta.m_alg;
    const HomLieAlgebra& N = e.mu.m_alg;
    const std::size_t dn = N.dim(), q = e.dim();
    const Matrix proj = e.ambient_projection();
    std::vector<Vector> c;
    for (const auto& l : actor_basis) {
        for (std::size_t a = 0; a < q; ++a) {
            Vector u = e.ambient_lift(unit_vector(q, a));
            Vector img(u.size());
            for (std::size_t idx = 0; idx < u.size(); ++idx) {
                if (sgn(u[idx]) == 0) continue;
                const std::size_t i = idx / dn, j = idx % dn;
                Vector term = outer(e.eta.action.act(l, unit_vector(M.dim(), i)), N.twist().column(j)) +
                              outer(M.twist().column(i), e.mu.action.act(l, unit_vector(dn, j)));
                axpy(u[idx], term, img);
            }
            c.push_back(proj.apply(img));
        }
    }
    return HomAction(actor, e.product, std::move(c));
}

}  // namespace

ThetaReport theta(const ExteriorProduct& e) {
    const HomLieAlgebra& L = e.eta.l_alg;
    const std::size_t dm = e.eta.m_alg.dim(), dn = e.mu.m_alg.dim();
    if (rank(e.eta.mu) != dm || rank(e.mu.mu) != dn) throw PreconditionError("theta: crossed modules must be inclusions");
    Subspace im_m = image(e.eta.mu), im_n = image(e.mu.mu);
    if (!is_ideal(L, im_m) || !is_ideal(L, im_n)) throw PreconditionError("theta: images must be ideals");
    Matrix ambient(L.dim(), dm * dn);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j) {
            Vector col = L.bracket(e.eta.mu.column(i), e.mu.mu.column(j));
            for (std::size_t r = 0; r < L.dim(); ++r) ambient(r, i * dn + j) = col[r];
        }
    ThetaReport rep;
    rep.theta = descend(e, ambient, "theta");
    rep.intersection = subspace_intersect(im_m, im_n);
    rep.homomorphism = is_homomorphism(e.product, L, rep.theta);
    if (alpha_identity_check(L)) {
        const Subspace& I = rep.intersection;
        HomLieAlgebra base = restrict_to(L, I, L.name() + "_cap");
        Matrix into_i(I.dim(), e.dim());
        for (std::size_t a = 0; a < e.dim(); ++a) {
            Vector c = I.coordinates(rep.theta.column(a));
            for (std::size_t r = 0; r < I.dim(); ++r) into_i(r, a) = c[r];
        }
        CrossedModule x{e.product, base, into_i, base_action(e, base, I.basis_vectors())};
        try {
            rep.crossed_module = verify_crossed(x);
        } catch (const PreconditionError&) {
            rep.crossed_module = false;
        }
    }
    return rep;
}

PhiReport phi_precrossed(const ExteriorProduct& e) {
    const HomLieAlgebra& L = e.eta.l_alg;
    if (!alpha_identity_check(L)) throw PreconditionError("phi_precrossed: base fails the alpha-identity condition");
    const std::size_t dm = e.eta.m_alg.dim(), dn = e.mu.m_alg.dim(), dl = L.dim();
    CompatiblePair pair = induced_pair(e.eta, e.mu);
    Matrix via_mu(dl, dm * dn), via_eta(dl, dm * dn);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j) {
            Vector a = e.mu.mu.apply(pair.m_on_n.coeff(i, j));
            Vector b = -e.eta.mu.apply(pair.n_on_m.coeff(j, i));
            for (std::size_t r = 0; r < dl; ++r) {
                via_mu(r, i * dn + j) = a[r];
                via_eta(r, i * dn + j) = b[r];
            }
        }
    PhiReport rep;
    rep.phi = descend(e, via_mu, "phi");
    rep.formulas_agree = descend(e, via_eta, "phi") == rep.phi;
    rep.homomorphism = is_homomorphism(e.product, L, rep.phi);
    std::vector<Vector> lbasis;
    for (std::size_t l = 0; l < dl; ++l) lbasis.push_back(unit_vector(dl, l));
    HomAction act = base_action(e, L, lbasis);
    rep.precrossed = true;
    for (std::size_t l = 0; l < dl && rep.precrossed; ++l)
        for (std::size_t a = 0; a < e.dim(); ++a)
            if (rep.phi.apply(act.coeff(l, a)) != L.bracket(lbasis[l], rep.phi.column(a))) {
                rep.precrossed = false;
                break;
            }
    return rep;
}

UceReport uce_of_perfect(const HomLieAlgebra& L, const ProductOptions& opts) {
    if (!is_perfect(L)) throw PreconditionError("uce_of_perfect: " + L.name() + " is not perfect");
    ExteriorProduct sq = exterior_square(L, opts);
    ThetaReport th = theta(sq);
    Subspace ker = kernel(th.theta);
    UceReport r{sq, th, ker};
    r.box_zero = sq.box.is_zero();
    r.central = subspace_leq(ker, centre(sq.product));
    r.perfect = is_perfect(sq.product);
    r.surjective = rank(th.theta) == L.dim();
    return r;
}

Matrix exterior_square_map(const AlgebraQuotient& q, const ExteriorProduct& source, const ExteriorProduct& target) {
    const std::size_t n = q.parent.dim(), k = q.quotient.dim();
    if (source.tensor.ambient_dim() != n * n || target.tensor.ambient_dim() != k * k)
        throw DimensionError("exterior_square_map: squares do not match the quotient");
    const Matrix& p = q.projection.matrix;
    Matrix kron(k * k, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vector col = outer(p.column(a), p.column(b));
            for (std::size_t r = 0; r < col.size(); ++r) kron(r, a * n + b) = col[r];
        }
    return descend(source, target.ambient_projection() * kron, "pi^pi");
}

SequenceReport exterior_sequence_check(const HomLieAlgebra& L, const Subspace& N, const ProductOptions& opts) {
    if (!is_ideal(L, N)) throw PreconditionError("exterior_sequence_check: N must be a twist-invariant ideal");
    ExteriorProduct nl = exterior_product(inclusion_crossed_module(L, N), identity_crossed_module(L), opts);
    ExteriorProduct ll = exterior_square(L, opts);
    AlgebraQuotient q = quotient_algebra(L, N);
    ExteriorProduct qq = exterior_square(q.quotient, opts);

    const std::size_t n = L.dim();
    Matrix incl(n * n, N.dim() * n);
    for (std::size_t i = 0; i < N.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector col = outer(N.basis().row(i), unit_vector(n, j));
            for (std::size_t r = 0; r < col.size(); ++r) incl(r, i * n + j) = col[r];
        }

    SequenceReport rep;
    rep.dim_n_wedge_l = nl.dim();
    rep.dim_l_wedge_l = ll.dim();
    rep.dim_quotient_square = qq.dim();
    rep.inclusion_map = descend(nl, ll.ambient_projection() * incl, "N^L -> L^L");
    rep.projection_map = exterior_square_map(q, ll, qq);
    rep.image = image(rep.inclusion_map);
    rep.kernel = kernel(rep.projection_map);
    rep.surjective = rank(rep.projection_map) == qq.dim();
    rep.exact = rep.image == rep.kernel;
    return rep;
}

// ---------------------------------------------------------------- pairings

Vector BilinearMap::operator()(std::span<const Scalar> m, std::span<const Scalar> n) const {
    if (m.size() != left_dim || n.size() != right_dim) throw DimensionError("pairing: argument size mismatch");
    Vector out(target.dim());
    for (std::size_t i = 0; i < left_dim; ++i) {
        if (sgn(m[i]) == 0) continue;
        for (std::size_t j = 0; j < right_dim; ++j)
            if (sgn(n[j]) != 0) axpy(m[i] * n[j], values[i * right_dim + j], out);
    }
    return out;
}

PairingReport verify_pairing(const BilinearMap& h, const CrossedModule& eta, const CrossedModule& mu) {
    const HomLieAlgebra& M = eta.m_alg;
    const HomLieAlgebra& N = mu.m_alg;
    const HomLieAlgebra& P = h.target;
    const std::size_t dm = M.dim(), dn = N.dim();
    if (h.left_dim != dm || h.right_dim != dn || h.values.size() != dm * dn) throw DimensionError("verify_pairing: shape mismatch");
    for (const auto& v : h.values)
        if (v.size() != P.dim()) throw DimensionError("verify_pairing: value has wrong length");
    const CompatiblePair pair = induced_pair(eta, mu);
    const PairTables t(M, N, pair);
    auto em = [&](std::size_t i) { return unit_vector(dm, i); };
    auto fn = [&](std::size_t j) { return unit_vector(dn, j); };
    PairingReport rep;

    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t ip = 0; ip < dm; ++ip)
            for (std::size_t j = 0; j < dn; ++j)
                if (h(M.structure(i, ip), t.alpha_n[j]) != h(t.alpha_m[i], t.mn(ip, j)) - h(t.alpha_m[ip], t.mn(i, j)))
                    rep.a = false;

    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j)
            for (std::size_t jp = 0; jp < dn; ++jp)
                if (h(t.alpha_m[i], N.structure(j, jp)) != h(t.nm(jp, i), t.alpha_n[j]) - h(t.nm(j, i), t.alpha_n[jp]))
                    rep.b = false;

    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j)
            for (std::size_t ip = 0; ip < dm; ++ip)
                for (std::size_t jp = 0; jp < dn; ++jp)
                    if (h(t.nm(j, i), t.mn(ip, jp)) != -P.bracket(h(em(i), fn(j)), h(em(ip), fn(jp)))) rep.c = false;

    Matrix join(eta.l_alg.dim(), dm + dn);
    for (std::size_t r = 0; r < eta.l_alg.dim(); ++r) {
        for (std::size_t c = 0; c < dm; ++c) join(r, c) = eta.mu(r, c);
        for (std::size_t c = 0; c < dn; ++c) join(r, dm + c) = -mu.mu(r, c);
    }
    Subspace pullback = kernel(join);
    std::vector<Vector> ms, ns;
    for (std::size_t k = 0; k < pullback.dim(); ++k) {
        auto row = pullback.basis().row(k);
        ms.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(dm));
        ns.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(dm), row.end());
    }
    for (std::size_t a = 0; a < ms.size(); ++a) {
        if (!is_zero(h(ms[a], ns[a]))) rep.d = false;
        for (std::size_t b = a + 1; b < ms.size(); ++b)
            if (!is_zero(h(ms[a], ns[b]) + h(ms[b], ns[a]))) rep.d = false;
    }

    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j)
            if (h(t.alpha_m[i], t.alpha_n[j]) != P.apply_twist(h(em(i), fn(j)))) rep.e = false;
    return rep;
}

BilinearMap canonical_pairing(const ExteriorProduct& e) {
    const std::size_t dm = e.eta.m_alg.dim(), dn = e.mu.m_alg.dim();
    BilinearMap h{dm, dn, e.product, {}};
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j) h.values.push_back(e.class_of(unit_vector(dm, i), unit_vector(dn, j)));
    return h;
}

BilinearMap bracket_pairing(const HomLieAlgebra& L, const Subspace& M, const Subspace& N) {
    if (!is_ideal(L, M) || !is_ideal(L, N)) throw PreconditionError("bracket_pairing: M and N must be ideals");
    Subspace I = subspace_intersect(M, N);
    BilinearMap h{M.dim(), N.dim(), restrict_to(L, I, L.name() + "_cap"), {}};
    for (std::size_t i = 0; i < M.dim(); ++i)
        for (std::size_t j = 0; j < N.dim(); ++j) h.values.push_back(I.coordinates(L.bracket(M.basis().row(i), N.basis().row(j))));
    return h;
}

}  // namespace homlie
