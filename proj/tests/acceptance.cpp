// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "homlie/capability.hpp"
#include "homlie/catalogue.hpp"
#include "homlie/errors.hpp"
#include "homlie/homology.hpp"
#include "homlie/tensor.hpp"
#include "lemmas.hpp"
#include "oracles.hpp"

using namespace homlie;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

int failures = 0;

void run(int n, const std::string& title, double budget, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& ex) {
        o.require(false, std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget > 0) o.require(secs < budget, "over the time budget");
    if (!o.ok) ++failures;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", secs);
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << title << " (" << buf << " s";
    if (budget > 0) std::cout << ", budget " << budget << " s";
    std::cout << ")";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << std::endl;
}

Matrix diagonal(const std::vector<Scalar>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

// Every diagonal matrix with entries in {0, 1, 2, -1} that is an endomorphism.
std::vector<Matrix> diagonal_endomorphisms(const HomLieAlgebra& L) {
    std::vector<Matrix> out;
    const std::size_t n = L.dim();
    if (n > 3) return out;
    const Scalar vals[] = {0, 1, 2, -1};
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<Scalar> d;
        for (std::size_t i = 0, c = code; i < n; ++i, c /= 4) d.push_back(vals[c % 4]);
        Matrix m = diagonal(d);
        if (is_homomorphism(L, L, m)) out.push_back(m);
    }
    return out;
}

bool twist_is_identity(const HomLieAlgebra& L) { return L.twist() == Matrix::identity(L.dim()); }

std::vector<HomLieAlgebra> random_fixtures() {
    std::vector<HomLieAlgebra> out;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RandomResult r = random_homlie(1 + seed % 3, 0.5, TwistKind::any, seed);
        if (r.algebra) out.push_back(*r.algebra);
    }
    return out;
}

Matrix power(const Matrix& a, std::size_t k) {
    Matrix p = Matrix::identity(a.rows());
    for (std::size_t i = 0; i < k; ++i) p = p * a;
    return p;
}

// {x : [alpha^k x, e_j] = 0 for all j and 0 <= k <= dim}, from the structure constants alone.
oracle::Rows centre_bruteforce(const HomLieAlgebra& L) {
    const std::size_t n = L.dim();
    oracle::Rows rows;
    for (std::size_t k = 0; k <= n; ++k) {
        Matrix ak = power(L.twist(), k);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Vector> cols;
            for (std::size_t i = 0; i < n; ++i)
                cols.push_back(oracle::bracket(L, ak.apply(oracle::unit(n, i)), oracle::unit(n, j)));
            for (std::size_t r = 0; r < n; ++r) {
                Vector row(n);
                for (std::size_t i = 0; i < n; ++i) row[i] = cols[i][r];
                rows.push_back(row);
            }
        }
    }
    return oracle::null_space(rows, n);
}

// d alpha = alpha d and d[x,y] = [d x, alpha^k y] + [alpha^k x, d y] on basis pairs.
bool derivation_oracle(const HomLieAlgebra& L, unsigned k, const Matrix& d) {
    const std::size_t n = L.dim();
    if (!(d * L.twist() == L.twist() * d)) return false;
    Matrix ak = power(L.twist(), k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector x = oracle::unit(n, i), y = oracle::unit(n, j);
            Vector lhs = d.apply(oracle::bracket(L, x, y));
            Vector rhs = oracle::bracket(L, d.apply(x), ak.apply(y));
            oracle::add(rhs, oracle::bracket(L, ak.apply(x), d.apply(y)));
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace

int main() {
    const auto cat = list_catalogue();

    run(1, "axioms hold on the catalogue, Yau twists and quotients", 1.0, [&](Outcome& o) {
        std::size_t checked = 0;
        for (const auto& e : cat) {
            const HomLieAlgebra& L = e.algebra;
            o.require(verify_axioms(L).ok(), "catalogue " + e.id);
            ++checked;
            if (twist_is_identity(L))
                for (const Matrix& m : diagonal_endomorphisms(L)) {
                    o.require(verify_axioms(yau_twist(L, m)).ok(), "yau twist of " + e.id);
                    ++checked;
                }
            for (const Subspace& I : {derived(L), centre(L), Subspace(L.dim()), Subspace::full(L.dim())}) {
                o.require(verify_axioms(quotient_algebra(L, I).quotient).ok(), "quotient of " + e.id);
                ++checked;
            }
        }
        HomLieAlgebra s = yau_twist(make_sl2(), diagonal({2, Scalar(1, 2), 1}));
        o.require(verify_axioms(s).ok(), "sl2 scaled twist");
        o.require(checked > cat.size() * 4, "too few algebras checked");
    });

    run(2, "d d = 0 up to degree min(4, dim) on the catalogue", 5.0, [&](Outcome& o) {
        for (const auto& e : cat)
            o.require(verify_complex(e.algebra, std::min<std::size_t>(4, e.algebra.dim())), e.id);
    });

    run(3, "dim Ker theta = dim H2 = 0 for sl2 and sl2 + sl2", 30.0, [&](Outcome& o) {
        for (const char* id : {"sl2", "sl2_plus_sl2"}) {
            const HomLieAlgebra& L = catalogue_get(id).algebra;
            std::size_t k = uce_of_perfect(L).kernel.dim();
            std::size_t h2 = homology(L, 2).dim;
            o.require(k == 0 && h2 == 0, std::string(id) + ": ker " + std::to_string(k) + ", H2 " + std::to_string(h2));
        }
    });

    run(4, "centre tower on the catalogue and 100 random algebras", 60.0, [&](Outcome& o) {
        std::vector<HomLieAlgebra> algebras;
        for (const auto& e : cat) algebras.push_back(e.algebra);
        auto rnd = random_fixtures();
        o.require(rnd.size() >= 90, "random generator produced " + std::to_string(rnd.size()) + " algebras");
        algebras.insert(algebras.end(), rnd.begin(), rnd.end());
        for (const auto& L : algebras) {
            Subspace zt = tensor_centre(L), ze = exterior_centre(L), z = centre(L);
            o.require(subspace_leq(zt, ze) && subspace_leq(ze, z), "tower broken on " + L.name());
            if (is_perfect(L)) o.require(zt == ze, "perfect algebra " + L.name() + " has distinct centres");
        }
    });

    run(5, "capability: abelian_1 no, abelian_2 yes, sl2 yes", 0, [&](Outcome& o) {
        o.require(!is_capable(catalogue_get("abelian_1").algebra), "abelian_1");
        o.require(is_capable(catalogue_get("abelian_2").algebra), "abelian_2");
        o.require(is_capable(catalogue_get("sl2").algebra), "sl2");
    });

    run(6, "exterior sequence exact for (heisenberg3, span{z}) and (E2, derived)", 0, [&](Outcome& o) {
        const HomLieAlgebra& h3 = catalogue_get("heisenberg3").algebra;
        o.require(exterior_sequence_check(h3, Subspace::span(3, {oracle::unit(3, 2)})).exact, "heisenberg3");
        const HomLieAlgebra& e2 = catalogue_get("E2").algebra;
        o.require(exterior_sequence_check(e2, derived(e2)).exact, "E2");
    });

    run(7, "tensor lemmas, central box and audit on every self-square", 0, [&](Outcome& o) {
        for (const auto& e : cat) {
            ExteriorProduct x = exterior_square(e.algebra);
            o.require(audit_tensor_product(x.tensor).ok(), "audit " + e.id);
            lemmas::TensorLemmaReport r = lemmas::check_tensor_lemmas(x.tensor);
            o.require(r.ok(), e.id + ": " + r.first_failure);
            o.require(subspace_leq(x.box, centre(x.tensor.product)), "box not central in " + e.id);
        }
    });

    run(8, "twist-iterated centre differs from the naive one; invariant core matches brute force", 0,
        [&](Outcome& o) {
            HomLieAlgebra d4 = make_dim4_alpha_iteration();
            o.require(centre(d4) == Subspace::span(4, {oracle::unit(4, 0)}), "centre of dim4");
            o.require(naive_centre(d4) == Subspace::span(4, {oracle::unit(4, 0), oracle::unit(4, 1)}),
                      "naive centre of dim4");
            std::vector<HomLieAlgebra> algebras = random_fixtures();
            for (const auto& e : cat) algebras.push_back(e.algebra);
            for (const auto& L : algebras) {
                o.require(oracle::same_span(centre(L).basis_vectors(), centre_bruteforce(L)),
                          "centre vs powers on " + L.name());
                Subspace nz = naive_centre(L);
                o.require(oracle::same_span(largest_invariant_subspace(L.twist(), nz).basis_vectors(),
                                            oracle::invariant_core_bruteforce(L.twist(), nz.basis_vectors())),
                          "invariant core on " + L.name());
            }
        });

    run(9, "Ker phi is the centre; derivations satisfy their defining identities", 0, [&](Outcome& o) {
        for (const auto& e : cat) {
            const HomLieAlgebra& L = e.algebra;
            if (alpha_identity_check(L)) {
                InnerDerivations in = inner_derivations(L);
                o.require(in.kernel == centre(L) && in.kernel_is_centre, "Ker phi on " + e.id);
            }
            if (L.dim() > 4) continue;
            for (unsigned k = 0; k <= 2; ++k)
                for (const Matrix& d : derivations(L, k).basis)
                    o.require(derivation_oracle(L, k, d), e.id + " k=" + std::to_string(k));
        }
    });

    run(10, "CLI contract: round trips, exit codes, deterministic JSON", 0, [&](Outcome& o) {
        std::string cmd = std::string("sh '") + HOMLIE_CONTRACT + "' '" + HOMLIE_CLI + "' '" + HOMLIE_TEST_DATA +
                          "' > cli_contract.log 2>&1";
        int rc = std::system(cmd.c_str());
        o.require(rc == 0, "see cli_contract.log");
    });

    return failures;
}
