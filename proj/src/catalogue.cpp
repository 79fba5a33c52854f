#include "homlie/catalogue.hpp"

#include <random>
#include <stdexcept>

#include "homlie/errors.hpp"

namespace homlie {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::paper_example: return "paper-example";
        case Provenance::classical: return "classical";
        case Provenance::constructed: return "constructed";
    }
    return "?";
}

std::string to_string(Tag t) {
    switch (t) {
        case Tag::paper: return "PAPER";
        case Tag::trivial: return "TRIVIAL";
        case Tag::derived: return "DERIVED";
    }
    return "?";
}

std::optional<std::size_t> CatalogueEntry::expected_dim(const std::string& key) const {
    auto it = expected.find(key);
    if (it == expected.end()) return std::nullopt;
    if (auto* v = std::get_if<std::size_t>(&it->second.value)) return *v;
    return std::nullopt;
}

std::optional<bool> CatalogueEntry::expected_flag(const std::string& key) const {
    auto it = expected.find(key);
    if (it == expected.end()) return std::nullopt;
    if (auto* v = std::get_if<bool>(&it->second.value)) return *v;
    return std::nullopt;
}

namespace {

Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Matrix nilpotent_shift(std::size_t n) {
    Matrix a(n, n);
    for (std::size_t j = 1; j < n; ++j) a(j - 1, j) = 1;
    return a;
}

}  // namespace

HomLieAlgebra make_abelian(std::size_t n, bool nilpotent_twist) {
    std::string name = "abelian_" + std::to_string(n) + (nilpotent_twist ? "_nil" : "");
    return HomLieAlgebra::abelian(n, nilpotent_twist ? nilpotent_shift(n) : Matrix::identity(n), name);
}

HomLieAlgebra make_solvable2() {
    return HomLieAlgebra::from_brackets("solvable2", 2, {{0, 1, vec({1, 0})}}, Matrix::identity(2));
}

HomLieAlgebra make_e2() {
    return HomLieAlgebra::from_brackets("E2", 2, {{0, 1, vec({1, 0})}}, Matrix{{1, 1}, {0, 1}});
}

HomLieAlgebra make_heisenberg3(const Matrix& twist) {
    return HomLieAlgebra::from_brackets("heisenberg3", 3, {{0, 1, vec({0, 0, 1})}}, twist, {"x", "y", "z"});
}

HomLieAlgebra make_sl2() {
    return HomLieAlgebra::from_brackets("sl2", 3,
                                        {{0, 1, vec({0, 0, 1})}, {0, 2, vec({-2, 0, 0})}, {1, 2, vec({0, 2, 0})}},
                                        Matrix::identity(3), {"e", "f", "h"});
}

HomLieAlgebra make_sl2_semidirect_h3() {
    // sl2 acting on span{x, y} by its standard representation, [x, y] = z.
    return HomLieAlgebra::from_brackets("sl2_semidirect_h3", 6,
                                        {{0, 1, vec({0, 0, 1, 0, 0, 0})},
                                         {0, 2, vec({-2, 0, 0, 0, 0, 0})},
                                         {1, 2, vec({0, 2, 0, 0, 0, 0})},
                                         {0, 4, vec({0, 0, 0, 1, 0, 0})},
                                         {1, 3, vec({0, 0, 0, 0, 1, 0})},
                                         {2, 3, vec({0, 0, 0, 1, 0, 0})},
                                         {2, 4, vec({0, 0, 0, 0, -1, 0})},
                                         {3, 4, vec({0, 0, 0, 0, 0, 1})}},
                                        Matrix::identity(6), {"e", "f", "h", "x", "y", "z"});
}

HomLieAlgebra make_dim4_alpha_iteration() {
    Matrix a(4, 4);
    a(2, 1) = 1;  // e2 -> e3
    a(2, 2) = 1;  // e3 -> e3
    return HomLieAlgebra::from_brackets("dim4_alpha_iteration", 4, {{2, 3, vec({1, 0, 0, 0})}}, a);
}

namespace {

Expected dim(std::size_t v, Tag t, std::string oracle) { return {v, t, std::move(oracle)}; }
Expected flag(bool v, Tag t, std::string oracle) { return {v, t, std::move(oracle)}; }

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

std::vector<CatalogueEntry> build() {
    std::vector<CatalogueEntry> out;
    const Tag T = Tag::trivial, D = Tag::derived;

    for (bool nil : {false, true})
        for (std::size_t n = 1; n <= 4; ++n) {
            CatalogueEntry e{make_abelian(n, nil).name(), make_abelian(n, nil), Provenance::classical,
                             nil ? "abelian, twist e1 -> 0, e_j -> e_{j-1}" : "abelian, twist id", {}};
            e.expected["centre_dim"] = dim(n, T, "zero bracket");
            e.expected["derived_dim"] = dim(0, T, "zero bracket");
            e.expected["perfect"] = flag(false, T, "zero bracket");
            e.expected["alpha_identity"] = flag(true, T, "zero bracket");
            e.expected["tensor_square_dim"] = dim(n * n, D, "trivial actions make every relation family vanish");
            e.expected["exterior_square_dim"] = dim(choose2(n), D, "box = symmetric tensors, quotient = Lambda^2");
            e.expected["capable"] = flag(n >= 2, D, "x ^ y = 0 for all y only for x = 0 once n >= 2");
            if (!nil) {
                e.expected["h2_dim"] = dim(choose2(n), D, "all boundaries vanish");
                e.expected["derivations_k0_dim"] = dim(n * n, T, "both conditions are vacuous");
            }
            out.push_back(std::move(e));
        }

    {
        CatalogueEntry e{"E2", make_e2(), Provenance::paper_example,
                         "[e1,e2] = e1 with twist [[1,1],[0,1]]", {}};
        e.expected["centre_dim"] = dim(0, D, "[a e1 + b e2, e1] = -b e1, [a e1 + b e2, e2] = a e1");
        e.expected["derived_dim"] = dim(1, D, "single nonzero bracket");
        e.expected["perfect"] = flag(false, D, "derived dimension 1 < 2");
        e.expected["alpha_identity"] = flag(false, D, "(A - I) e2 = e1 and [e2, e1] = -e1");
        out.push_back(std::move(e));
    }
    {
        CatalogueEntry e{"solvable2", make_solvable2(), Provenance::classical, "[e1,e2] = e1, twist id", {}};
        e.expected["centre_dim"] = dim(0, D, "same computation as E2");
        e.expected["derived_dim"] = dim(1, D, "single nonzero bracket");
        e.expected["perfect"] = flag(false, D, "derived dimension 1 < 2");
        e.expected["alpha_identity"] = flag(true, T, "twist id");
        e.expected["h2_dim"] = dim(0, D, "d_2(e1 ^ e2) = -e1 is nonzero on the only 2-chain");
        out.push_back(std::move(e));
    }
    {
        CatalogueEntry e{"heisenberg3", make_heisenberg3(Matrix::identity(3)), Provenance::classical,
                         "[x,y] = z, twist id", {}};
        e.expected["centre_dim"] = dim(1, D, "ad x and ad y are nonzero, z is central");
        e.expected["derived_dim"] = dim(1, D, "single nonzero bracket");
        e.expected["perfect"] = flag(false, D, "derived dimension 1 < 3");
        e.expected["alpha_identity"] = flag(true, T, "twist id");
        e.expected["h2_dim"] = dim(2, D, "ker d_2 = span{x^z, y^z}, d_3 = 0");
        e.expected["derivations_k0_dim"] = dim(6, D, "d(x), d(y) free (6 parameters); d(z) is forced to be the trace on span{x,y} times z");
        e.expected["inner_derivations_dim"] = dim(2, D, "rank of x -> ad x");
        out.push_back(std::move(e));
    }
    {
        Matrix a(3, 3);
        a(1, 1) = 1;  // x -> 0, y -> y, z -> 0
        CatalogueEntry e{"heisenberg3_nil", make_heisenberg3(a).renamed("heisenberg3_nil"), Provenance::constructed,
                         "[x,y] = z, twist x -> 0, y -> y, z -> 0", {}};
        e.expected["centre_dim"] = dim(1, D, "naive centre span{z} is twist-invariant");
        e.expected["derived_dim"] = dim(1, D, "single nonzero bracket");
        e.expected["perfect"] = flag(false, D, "derived dimension 1 < 3");
        e.expected["alpha_identity"] = flag(false, D, "(A - I) x = -x and [y, x] = -z");
        out.push_back(std::move(e));
    }
    {
        CatalogueEntry e{"sl2", make_sl2(), Provenance::classical, "[e,f] = h, [h,e] = 2e, [h,f] = -2f, twist id", {}};
        e.expected["centre_dim"] = dim(0, D, "ad h has eigenvalues 2, -2 on e, f; ad e h = -2e");
        e.expected["derived_dim"] = dim(3, D, "brackets span e, f, h");
        e.expected["perfect"] = flag(true, D, "brackets span e, f, h");
        e.expected["alpha_identity"] = flag(true, T, "twist id");
        e.expected["h2_dim"] = dim(0, D, "d_3 maps e^f^h to a nonzero 2-chain and ker d_2 is one-dimensional");
        e.expected["tensor_square_dim"] = dim(3, D, "perfect with H2 = 0, so sl2 * sl2 = uce = sl2");
        e.expected["exterior_square_dim"] = dim(3, D, "perfect with H2 = 0");
        e.expected["capable"] = flag(true, D, "centre zero forces exterior centre zero");
        e.expected["derivations_k0_dim"] = dim(3, D, "all derivations inner, centre zero");
        e.expected["inner_derivations_dim"] = dim(3, D, "ad is injective");
        out.push_back(std::move(e));
    }
    {
        HomLieAlgebra s = direct_sum(make_sl2(), make_sl2(), "sl2_plus_sl2");
        CatalogueEntry e{"sl2_plus_sl2", s, Provenance::classical, "direct sum of two copies of sl2", {}};
        e.expected["centre_dim"] = dim(0, D, "centres of the summands are zero");
        e.expected["derived_dim"] = dim(6, D, "each summand is perfect");
        e.expected["perfect"] = flag(true, D, "each summand is perfect");
        e.expected["alpha_identity"] = flag(true, T, "twist id");
        e.expected["h2_dim"] = dim(0, D, "Kunneth: H2 of each summand is 0 and H1 of each summand is 0");
        e.expected["capable"] = flag(true, D, "centre zero forces exterior centre zero");
        e.expected["exterior_square_dim"] = dim(6, D, "perfect with H2 = 0, so L ^ L is L itself");
        out.push_back(std::move(e));
    }
    {
        Matrix endo(3, 3);
        endo(0, 0) = 2;
        endo(1, 1) = Scalar(1, 2);
        endo(2, 2) = 1;
        CatalogueEntry e{"sl2_yau_diag", yau_twist(make_sl2(), endo).renamed("sl2_yau_diag"), Provenance::constructed,
                         "Yau twist of sl2 by e -> 2e, f -> f/2, h -> h", {}};
        e.expected["centre_dim"] = dim(0, D, "[e,f]' = h, [h,e]' = 4e, [h,f]' = -f leave no central vector");
        e.expected["derived_dim"] = dim(3, D, "brackets h, 4e, -f span L");
        e.expected["perfect"] = flag(true, D, "brackets h, 4e, -f span L");
        e.expected["alpha_identity"] = flag(false, D, "(A - I) e = e and [h, e]' = 4e");
        out.push_back(std::move(e));
    }
    {
        CatalogueEntry e{"sl2_semidirect_h3", make_sl2_semidirect_h3(), Provenance::constructed,
                         "sl2 acting on the Heisenberg algebra through span{x,y}, twist id", {}};
        e.expected["centre_dim"] = dim(1, D, "z is central; sl2 and the standard module have no invariants");
        e.expected["derived_dim"] = dim(6, D, "[h,x] = x, [h,y] = -y, [x,y] = z plus sl2");
        e.expected["perfect"] = flag(true, D, "[h,x] = x, [h,y] = -y, [x,y] = z plus sl2");
        e.expected["alpha_identity"] = flag(true, T, "twist id");
        e.expected["h2_dim"] = dim(0, D, "Hochschild-Serre over the Levi factor: H2(h3) is the standard module, no invariants");
        e.expected["exterior_square_dim"] = dim(6, D, "perfect with H2 = 0, so L ^ L is L itself");
        e.expected["capable"] = flag(false, D, "L is its own universal central extension, so the epicentre is Z(L) = span{z}");
        out.push_back(std::move(e));
    }
    {
        CatalogueEntry e{"dim4_alpha_iteration", make_dim4_alpha_iteration(), Provenance::constructed,
                         "[e3,e4] = e1, twist e1 -> 0, e2 -> e3, e3 -> e3, e4 -> 0", {}};
        e.expected["naive_centre_dim"] = dim(2, D, "only e3, e4 appear in a nonzero bracket");
        e.expected["centre_dim"] = dim(1, D, "alpha(e2) = e3 is not central; span{e1} is invariant");
        e.expected["derived_dim"] = dim(1, D, "single nonzero bracket");
        e.expected["perfect"] = flag(false, D, "derived dimension 1 < 4");
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<RejectedCandidate> build_rejected() {
    Matrix a = Matrix::identity(3);
    a(2, 2) = 0;
    return {{"heisenberg3_z0", make_heisenberg3(a).renamed("heisenberg3_z0"),
             "x -> x, y -> y, z -> 0 is not multiplicative: alpha[x,y] = 0 but [alpha x, alpha y] = z"}};
}

}  // namespace

const std::vector<CatalogueEntry>& list_catalogue() {
    static const std::vector<CatalogueEntry> entries = build();
    return entries;
}

const CatalogueEntry& catalogue_get(const std::string& id) {
    for (const auto& e : list_catalogue())
        if (e.id == id) return e;
    throw std::out_of_range("unknown catalogue id: " + id);
}

const std::vector<RejectedCandidate>& rejected_candidates() {
    static const std::vector<RejectedCandidate> r = build_rejected();
    return r;
}

RandomResult random_homlie(std::size_t n, double density, TwistKind kind, std::uint64_t seed, std::size_t budget) {
    if (n > 4) throw DimensionError("random_homlie: dim must be at most 4");
    std::mt19937_64 rng(seed);
    // Modulo draws keep the output identical across standard libraries.
    auto draw = [&](std::uint64_t m) { return static_cast<long>(rng() % m); };
    const long threshold = static_cast<long>(density * 1000);
    auto coefficient = [&]() -> long {
        if (draw(1000) >= threshold) return 0;
        long c = draw(4);  // -2, -1, 1, 2
        return c < 2 ? c - 2 : c - 1;
    };

    RandomResult res;
    while (res.attempts < budget) {
        ++res.attempts;
        std::vector<HomLieAlgebra::Entry> upper;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Vector v(n);
                for (auto& x : v) x = coefficient();
                if (!is_zero(v)) upper.push_back({i, j, std::move(v)});
            }
        TwistKind k = kind == TwistKind::any ? static_cast<TwistKind>(draw(4)) : kind;
        Matrix a(n, n);
        switch (k) {
            case TwistKind::identity: a = Matrix::identity(n); break;
            case TwistKind::zero: break;
            case TwistKind::projection:
                for (std::size_t i = 0; i < n; ++i) a(i, i) = draw(2);
                break;
            case TwistKind::nilpotent: a = nilpotent_shift(n); break;
            case TwistKind::any: break;
        }
        HomLieAlgebra L = HomLieAlgebra::from_brackets("random_" + std::to_string(n) + "_" + std::to_string(seed), n,
                                                       upper, a);
        if (verify_axioms(L).ok()) {
            res.algebra = std::move(L);
            return res;
        }
    }
    return res;
}

}  // namespace homlie
