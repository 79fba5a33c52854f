// homlie: command-line front end. Exit codes: 0 ok, 1 mathematical failure,
// 2 usage or parse error, 3 precondition violated or enumeration cap exceeded.

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "homlie/capability.hpp"
#include "homlie/catalogue.hpp"
#include "homlie/errors.hpp"
#include "homlie/homology.hpp"
#include "homlie/io.hpp"

#ifndef HOMLIE_VERSION
#define HOMLIE_VERSION "0.0.0"
#endif

using namespace homlie;

namespace {

enum Exit { ok = 0, math_failure = 1, usage = 2, precondition = 3 };

struct Options {
    bool json = false;
    bool no_verify = false;
    bool audit = false;
    std::uint64_t seed = 0;
};

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 15]);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Loaded {
    HomLieAlgebra algebra;
    Json inputs;
};

/// Reads an algebra file; verifies the axioms unless --no-verify.
Loaded load(const std::string& path, const Options& o, bool verify = true) {
    std::string text = read_file(path);
    HomLieAlgebra L = parse_algebra(text);
    if (verify && !o.no_verify) {
        AxiomReport r = verify_axioms(L);
        if (!r.ok()) throw AuditFailure(L.name() + " fails the Hom-Lie axioms; run `homlie verify` for details");
    }
    return {L, Json{{"file", path}, {"name", L.name()}, {"sha256", sha256_hex(text)}}};
}

Json subspace_json(const Subspace& s) { return Json{{"basis", to_json(s)}, {"dim", s.dim()}}; }

ProductOptions product_options(const Options& o) {
    ProductOptions p;
    p.audit = o.audit;
    return p;
}

void print_text(const Json& j, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix + it.key();
        if (it->is_object()) print_text(*it, key + ".");
        else if (it->is_string()) std::cout << key << ": " << it->get<std::string>() << "\n";
        else std::cout << key << ": " << it->dump() << "\n";
    }
}

int emit(const Options& o, const std::string& command, const Json& inputs, const Json& results, int code = ok) {
    if (o.json) {
        Json report{{"command", command}, {"inputs", inputs}, {"results", results}, {"tool_version", HOMLIE_VERSION}};
        std::cout << report.dump(2) << "\n";
    } else {
        print_text(results);
    }
    return code;
}

std::string tuple_text(const HomLieAlgebra& L, std::initializer_list<std::size_t> idx) {
    std::string s = "(";
    bool first = true;
    for (std::size_t i : idx) {
        if (!first) s += ", ";
        s += L.basis_names()[i];
        first = false;
    }
    return s + ")";
}

int cmd_verify(const std::string& file, const Options& o) {
    Loaded in = load(file, o, false);
    const HomLieAlgebra& L = in.algebra;
    AxiomReport r = verify_axioms(L);
    Json res{{"skew", r.skew}, {"hom_jacobi", r.hom_jacobi}, {"multiplicative", r.multiplicative}, {"ok", r.ok()}};
    std::string failure;
    if (r.skew_failure) {
        auto [i, j] = *r.skew_failure;
        res["skew_failure"] = {i, j};
        failure = "skew-symmetry fails on the pair " + tuple_text(L, {i, j});
    } else if (r.jacobi_failure) {
        auto [i, j, k] = *r.jacobi_failure;
        res["hom_jacobi_failure"] = {i, j, k};
        failure = "Hom-Jacobi fails on the triple " + tuple_text(L, {i, j, k});
    } else if (r.multiplicative_failure) {
        auto [i, j] = *r.multiplicative_failure;
        res["multiplicative_failure"] = {i, j};
        failure = "multiplicativity fails on the pair " + tuple_text(L, {i, j});
    }
    if (o.json) return emit(o, "verify", in.inputs, res, r.ok() ? ok : math_failure);
    if (r.ok()) {
        std::cout << L.name() << ": all axioms hold\n";
        return ok;
    }
    std::cout << L.name() << ": " << failure << "\n";
    return math_failure;
}

Json action_report_json(const HomAction& a, const ActionReport& r) {
    Json res{{"axiom_a", r.axiom_a}, {"axiom_b", r.axiom_b}, {"axiom_c", r.axiom_c}};
    if (r.a_failure) res["axiom_a_failure"] = {(*r.a_failure)[0], (*r.a_failure)[1], (*r.a_failure)[2]};
    if (r.b_failure) res["axiom_b_failure"] = {(*r.b_failure)[0], (*r.b_failure)[1], (*r.b_failure)[2]};
    if (r.c_failure) res["axiom_c_failure"] = {(*r.c_failure)[0], (*r.c_failure)[1]};
    res["actor"] = a.actor().name();
    res["actee"] = a.actee().name();
    return res;
}

/// Action or crossed-module file; a top-level "mu" selects the latter.
int cmd_verify_action(const std::string& file, const Options& o) {
    std::string text = read_file(file);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    const bool crossed = j.is_object() && j.contains("mu");
    CrossedModule x;
    if (crossed) x = crossed_module_from_json(j);
    else x.action = action_from_json(j);
    const HomAction& a = x.action;
    if (!o.no_verify)
        for (const HomLieAlgebra* L : {&a.actor(), &a.actee()})
            if (!verify_axioms(*L).ok()) throw AuditFailure(L->name() + " fails the Hom-Lie axioms");

    ActionReport r = verify_action(a);
    Json res = action_report_json(a, r);
    bool good = r.ok();
    if (crossed) {
        bool hom = is_homomorphism(x.m_alg, x.l_alg, x.mu);
        res["mu_homomorphism"] = hom;
        bool pre = good && hom && verify_precrossed(x);
        bool full = pre && verify_crossed(x);
        res["precrossed"] = pre;
        res["crossed"] = full;
        good = full;
    }
    res["ok"] = good;
    Json inputs{{"file", file}, {"name", a.actor().name() + " on " + a.actee().name()}, {"sha256", sha256_hex(text)}};
    return emit(o, crossed ? "verify-xmod" : "verify-action", inputs, res, good ? ok : math_failure);
}

int cmd_info(const std::string& file, const Options& o) {
    Loaded in = load(file, o);
    const HomLieAlgebra& L = in.algebra;
    Json res{{"dim", L.dim()},
             {"centre", subspace_json(centre(L))},
             {"naive_centre", subspace_json(naive_centre(L))},
             {"derived", subspace_json(derived(L))},
             {"perfect", is_perfect(L)},
             {"abelianisation_dim", abelianisation(L).quotient.dim()},
             {"alpha_identity", alpha_identity_check(L)}};
    return emit(o, "info", in.inputs, res);
}

int cmd_homology(const std::string& file, std::optional<std::size_t> degree, bool verify_cx, const Options& o) {
    Loaded in = load(file, o);
    const HomLieAlgebra& L = in.algebra;
    if (degree && *degree > L.dim())
        throw PreconditionError("degree " + std::to_string(*degree) + " outside 0.." + std::to_string(L.dim()));
    Json degrees = Json::array();
    std::size_t lo = degree ? *degree : 0, hi = degree ? *degree : L.dim();
    for (std::size_t n = lo; n <= hi; ++n) {
        HomologyReport h = homology(L, n);
        Json cb = Json::array();
        for (const auto& c : h.cycle_basis) cb.push_back(to_json(c));
        degrees.push_back(Json{{"degree", n}, {"dim", h.dim}, {"cycle_basis", cb}});
    }
    Json res{{"homology", degrees}};
    if (degree) {
        res["degree"] = *degree;
        res["dim"] = degrees[0]["dim"];
    }
    int code = ok;
    if (verify_cx) {
        bool good = verify_complex(L, L.dim());
        res["complex_ok"] = good;
        if (!good) code = math_failure;
    }
    if (!o.json && degree) {
        std::cout << "H_" << *degree << " dim: " << degrees[0]["dim"].get<std::size_t>() << "\n";
        if (verify_cx) std::cout << "complex_ok: " << (code == ok ? "true" : "false") << "\n";
        return code;
    }
    return emit(o, "homology", in.inputs, res, code);
}

Json table_json(const HomLieAlgebra& p) {
    Json brackets = Json::array();
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = i + 1; j < p.dim(); ++j)
            if (!is_zero(p.structure(i, j))) brackets.push_back({{"i", i}, {"j", j}, {"value", to_json(p.structure(i, j))}});
    return Json{{"basis", p.basis_names()}, {"brackets", brackets}, {"alpha", to_json(p.twist())}};
}

int cmd_tensor_square(const std::string& file, bool table, const Options& o) {
    Loaded in = load(file, o);
    TensorProduct t = tensor_square(in.algebra, product_options(o));
    Json res{{"ambient_dim", t.ambient_dim()}, {"relations_dim", t.relations.dim()}, {"dim", t.dim()}};
    if (o.audit) res["audit"] = audit_tensor_product(t).ok();
    if (table) res["table"] = table_json(t.product);
    return emit(o, "tensor-square", in.inputs, res);
}

int cmd_exterior_square(const std::string& file, bool table, const Options& o) {
    Loaded in = load(file, o);
    ExteriorProduct e = exterior_square(in.algebra, product_options(o));
    Json res{{"ambient_dim", e.tensor.ambient_dim()},
             {"relations_dim", e.tensor.relations.dim()},
             {"tensor_dim", e.tensor.dim()},
             {"box_dim", e.box.dim()},
             {"dim", e.dim()}};
    if (o.audit) res["audit"] = audit_tensor_product(e.tensor).ok();
    if (table) res["table"] = table_json(e.product);
    return emit(o, "exterior-square", in.inputs, res);
}

int cmd_capability(const std::string& file, const Options& o) {
    Loaded in = load(file, o);
    CapabilityReport r = capability_report(in.algebra, product_options(o));
    Json res{{"centre", subspace_json(r.centre)},
             {"tensor_centre", subspace_json(r.tensor_centre)},
             {"exterior_centre", subspace_json(r.exterior_centre)},
             {"capable", r.capable},
             {"epicentre", r.epicentre ? subspace_json(*r.epicentre) : Json("unavailable")}};
    bool tower = subspace_leq(r.tensor_centre, r.exterior_centre) && subspace_leq(r.exterior_centre, r.centre);
    res["tower_ok"] = tower;
    return emit(o, "capability", in.inputs, res, tower ? ok : math_failure);
}

int cmd_uce(const std::string& file, const Options& o) {
    Loaded in = load(file, o);
    UceReport u = uce_of_perfect(in.algebra, product_options(o));
    std::size_t h2 = homology(in.algebra, 2).dim;
    bool pass = u.kernel.dim() == h2 && u.central && u.surjective && u.theta.homomorphism;
    Json res{{"exterior_square_dim", u.square.dim()},
             {"kernel", subspace_json(u.kernel)},
             {"kernel_dim", u.kernel.dim()},
             {"h2_dim", h2},
             {"central", u.central},
             {"surjective", u.surjective},
             {"box_zero", u.box_zero},
             {"h2_cross_check", pass ? "pass" : "fail"}};
    return emit(o, "uce", in.inputs, res, pass ? ok : math_failure);
}

Subspace parse_ideal(const std::string& spec, std::size_t n) {
    Json j;
    try {
        j = Json::parse(spec);
    } catch (const Json::parse_error&) {
        throw ParseError("--ideal must be a JSON vector or list of vectors");
    }
    if (!j.is_array()) throw ParseError("--ideal must be a JSON array");
    std::vector<Vector> vs;
    auto to_vec = [&](const Json& x) {
        if (!x.is_array() || x.size() != n) throw ParseError("--ideal vectors must have " + std::to_string(n) + " entries");
        Vector v;
        for (const auto& c : x) {
            if (c.is_string()) v.push_back(parse_scalar(c.get<std::string>()));
            else if (c.is_number_integer()) v.emplace_back(c.get<long>());
            else throw ParseError("--ideal entries must be integers or rational strings");
        }
        return v;
    };
    if (!j.empty() && j[0].is_array())
        for (const auto& x : j) vs.push_back(to_vec(x));
    else if (!j.empty())
        vs.push_back(to_vec(j));
    return Subspace::span(n, vs);
}

int cmd_sequence(const std::string& file, const std::string& ideal, const Options& o) {
    Loaded in = load(file, o);
    Subspace N = parse_ideal(ideal, in.algebra.dim());
    SequenceReport s = exterior_sequence_check(in.algebra, N, product_options(o));
    Json res{{"ideal", subspace_json(N)},
             {"dim_n_wedge_l", s.dim_n_wedge_l},
             {"dim_l_wedge_l", s.dim_l_wedge_l},
             {"dim_quotient_square", s.dim_quotient_square},
             {"image_dim", s.image.dim()},
             {"kernel_dim", s.kernel.dim()},
             {"surjective", s.surjective},
             {"exact", s.exact}};
    return emit(o, "sequence", {{"ideal", ideal}, {"algebra", in.inputs}}, res, s.exact ? ok : math_failure);
}

int cmd_catalog(const Options& o) {
    Json entries = Json::array();
    for (const auto& e : list_catalogue()) {
        Json expected = Json::object();
        for (const auto& [k, x] : e.expected) {
            Json val = std::visit([](auto v) { return Json(v); }, x.value);
            expected[k] = {{"value", val}, {"tag", to_string(x.tag)}, {"oracle", x.oracle}};
        }
        entries.push_back({{"id", e.id},
                           {"dim", e.algebra.dim()},
                           {"provenance", to_string(e.provenance)},
                           {"description", e.description},
                           {"expected", expected}});
    }
    if (o.json) return emit(o, "catalog", Json::object(), Json{{"entries", entries}});
    for (const auto& e : list_catalogue())
        std::cout << e.id << "  dim " << e.algebra.dim() << "  " << to_string(e.provenance) << "  " << e.description
                  << "\n";
    return ok;
}

TwistKind twist_kind(const std::string& s) {
    if (s == "identity") return TwistKind::identity;
    if (s == "zero") return TwistKind::zero;
    if (s == "projection") return TwistKind::projection;
    if (s == "nilpotent") return TwistKind::nilpotent;
    if (s == "any") return TwistKind::any;
    throw ParseError("unknown twist kind " + s);
}

int cmd_export(const std::string& source, std::optional<std::size_t> random_dim, const std::string& kind,
               double density, const Options& o) {
    HomLieAlgebra L;
    if (random_dim) {
        RandomResult r = random_homlie(*random_dim, density, twist_kind(kind), o.seed);
        if (!r.algebra) {
            std::cerr << "error: rejection budget exhausted after " << r.attempts << " attempts\n";
            return precondition;
        }
        L = *r.algebra;
    } else if (source.empty()) {
        throw ParseError("export needs a catalogue id, a file, or --random");
    } else {
        bool found = false;
        for (const auto& e : list_catalogue())
            if (e.id == source) {
                L = e.algebra;
                found = true;
            }
        if (!found) L = load(source, o).algebra;
    }
    std::cout << export_algebra(L);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with finite-dimensional Hom-Lie algebras over Q"};
    app.set_version_flag("--version", HOMLIE_VERSION);
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Emit a JSON report");
    app.add_flag("--no-verify", o.no_verify, "Skip axiom verification on load");
    app.add_flag("--audit", o.audit, "Run the well-definedness audit of tensor products");
    app.add_option("--seed", o.seed, "Seed for random algebras");

    std::string file, ideal, source, kind = "any";
    std::optional<std::size_t> degree, random_dim;
    bool verify_cx = false, table = false;
    double density = 0.3;

    auto* verify = app.add_subcommand("verify", "Check skew-symmetry, Hom-Jacobi and multiplicativity");
    verify->add_option("file", file)->required();
    auto* vact = app.add_subcommand("verify-action", "Check a Hom-action or crossed-module file");
    vact->add_option("file", file)->required();
    auto* info = app.add_subcommand("info", "Centre, derived algebra, perfectness, alpha-identity");
    info->add_option("file", file)->required();
    auto* hom = app.add_subcommand("homology", "Homology of the Yau complex");
    hom->add_option("file", file)->required();
    hom->add_option("--degree", degree, "Single degree");
    hom->add_flag("--verify-complex", verify_cx, "Check that d o d = 0");
    auto* ts = app.add_subcommand("tensor-square", "Non-abelian tensor square");
    ts->add_option("file", file)->required();
    ts->add_flag("--table", table, "Include the bracket table");
    auto* es = app.add_subcommand("exterior-square", "Non-abelian exterior square");
    es->add_option("file", file)->required();
    es->add_flag("--table", table, "Include the bracket table");
    auto* cap = app.add_subcommand("capability", "Tensor and exterior centres, capability");
    cap->add_option("file", file)->required();
    auto* uce = app.add_subcommand("uce", "Universal central extension of a perfect algebra");
    uce->add_option("file", file)->required();
    auto* seq = app.add_subcommand("sequence", "Exactness of N^L -> L^L -> (L/N)^(L/N) -> 0");
    seq->add_option("file", file)->required();
    seq->add_option("--ideal", ideal, "Ideal basis, e.g. \"[0,0,1]\" or \"[[1,0,0],[0,0,1]]\"")->required();
    auto* cat = app.add_subcommand("catalog", "List the built-in algebras");
    auto* exp = app.add_subcommand("export", "Print a catalogue entry, file or random algebra in canonical form");
    exp->add_option("source", source, "Catalogue id or algebra file");
    exp->add_option("--random", random_dim, "Generate a random algebra of this dimension");
    exp->add_option("--kind", kind, "Twist kind: identity, zero, projection, nilpotent, any");
    exp->add_option("--density", density, "Chance that a structure constant is nonzero");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*verify) return cmd_verify(file, o);
        if (*vact) return cmd_verify_action(file, o);
        if (*info) return cmd_info(file, o);
        if (*hom) return cmd_homology(file, degree, verify_cx, o);
        if (*ts) return cmd_tensor_square(file, table, o);
        if (*es) return cmd_exterior_square(file, table, o);
        if (*cap) return cmd_capability(file, o);
        if (*uce) return cmd_uce(file, o);
        if (*seq) return cmd_sequence(file, ideal, o);
        if (*cat) return cmd_catalog(o);
        if (*exp) return cmd_export(source, random_dim, kind, density, o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const AuditFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return math_failure;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return precondition;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return precondition;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return precondition;
    }
    return usage;
}
