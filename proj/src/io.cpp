#include "homlie/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

std::size_t index(const Json& j, std::size_t dim, const char* what) {
    if (!j.is_number_unsigned()) throw ParseError(std::string(what) + " must be a non-negative integer");
    auto v = j.get<std::size_t>();
    if (v >= dim) throw ParseError(std::string(what) + " = " + std::to_string(v) + " out of range");
    return v;
}

Scalar scalar_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rationals must be strings, got " + j.dump());
    return parse_scalar(j.get<std::string>());
}

}  // namespace

Vector vector_from_json(const Json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n)
        throw ParseError("expected an array of " + std::to_string(n) + " rationals, got " + j.dump());
    Vector v;
    v.reserve(n);
    for (const auto& x : j) v.push_back(scalar_from_json(x));
    return v;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError("expected a matrix with " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vector row = vector_from_json(j[r], cols);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

HomLieAlgebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    const Json& fj = field(j, "field");
    if (!fj.is_string() || fj.get<std::string>() != "Q") throw ParseError("field must be \"Q\"");
    const Json& nj = field(j, "name");
    if (!nj.is_string()) throw ParseError("name must be a string");
    const Json& dj = field(j, "dim");
    if (!dj.is_number_unsigned()) throw ParseError("dim must be a non-negative integer");
    const auto n = dj.get<std::size_t>();

    std::vector<std::string> names;
    const Json& bj = field(j, "basis");
    if (!bj.is_array() || bj.size() != n) throw ParseError("basis must list dim labels");
    for (const auto& b : bj) {
        if (!b.is_string()) throw ParseError("basis labels must be strings");
        names.push_back(b.get<std::string>());
    }

    Matrix twist = matrix_from_json(field(j, "alpha"), n, n);

    const Json& brj = field(j, "brackets");
    if (!brj.is_array()) throw ParseError("brackets must be an array");
    std::map<std::pair<std::size_t, std::size_t>, Vector> given;
    for (const auto& e : brj) {
        if (!e.is_object()) throw ParseError("bracket entries must be objects");
        std::size_t i = index(field(e, "i"), n, "i");
        std::size_t k = index(field(e, "j"), n, "j");
        if (!given.emplace(std::pair{i, k}, vector_from_json(field(e, "value"), n)).second)
            throw ParseError("duplicate bracket entry (" + std::to_string(i) + ", " + std::to_string(k) + ")");
    }
    std::vector<Vector> structure(n * n, Vector(n));
    for (const auto& [ij, v] : given) {
        auto [i, k] = ij;
        structure[i * n + k] = v;
        if (i < k && !given.count({k, i})) structure[k * n + i] = -v;
    }
    return HomLieAlgebra(nj.get<std::string>(), std::move(names), std::move(structure), std::move(twist));
}

HomLieAlgebra parse_algebra(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return algebra_from_json(j);
}

HomLieAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

Json to_json(const Scalar& x) { return to_string(x); }

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row_vector(r)));
    return out;
}

Json to_json(const Subspace& s) {
    Json out = Json::array();
    for (const auto& v : s.basis_vectors()) out.push_back(to_json(v));
    return out;
}

Json algebra_to_json(const HomLieAlgebra& L) {
    const std::size_t n = L.dim();
    Json brackets = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Vector& v = L.structure(i, k);
            bool emit = false;
            if (i < k) emit = !is_zero(v);
            else if (i == k) emit = !is_zero(v);
            else emit = v != -L.structure(k, i);  // only when skew-symmetry is broken
            if (emit) brackets.push_back({{"i", i}, {"j", k}, {"value", to_json(v)}});
        }
    return Json{{"alpha", to_json(L.twist())},
                {"basis", L.basis_names()},
                {"brackets", brackets},
                {"dim", n},
                {"field", "Q"},
                {"name", L.name()}};
}

std::string export_algebra(const HomLieAlgebra& L) { return algebra_to_json(L).dump(2) + "\n"; }

HomAction action_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("action must be a JSON object");
    HomLieAlgebra actor = algebra_from_json(field(j, "actor"));
    HomLieAlgebra actee = algebra_from_json(field(j, "actee"));
    const Json& tj = field(j, "coeffs");
    const std::size_t l = actor.dim(), m = actee.dim();
    if (!tj.is_array() || tj.size() != l) throw ParseError("coeffs must have one entry per actor basis vector");
    std::vector<Vector> coeffs;
    coeffs.reserve(l * m);
    for (std::size_t i = 0; i < l; ++i) {
        if (!tj[i].is_array() || tj[i].size() != m) throw ParseError("coeffs[i] must have one vector per actee basis vector");
        for (std::size_t k = 0; k < m; ++k) coeffs.push_back(vector_from_json(tj[i][k], m));
    }
    return HomAction(std::move(actor), std::move(actee), std::move(coeffs));
}

Json action_to_json(const HomAction& a) {
    Json t = Json::array();
    for (std::size_t i = 0; i < a.actor().dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < a.actee().dim(); ++k) row.push_back(to_json(a.coeff(i, k)));
        t.push_back(row);
    }
    return Json{{"actee", algebra_to_json(a.actee())}, {"actor", algebra_to_json(a.actor())}, {"coeffs", t}};
}

CrossedModule crossed_module_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("crossed module must be a JSON object");
    HomAction a = action_from_json(field(j, "action"));
    Matrix mu = matrix_from_json(field(j, "mu"), a.actor().dim(), a.actee().dim());
    return CrossedModule{a.actee(), a.actor(), std::move(mu), std::move(a)};
}

Json crossed_module_to_json(const CrossedModule& x) {
    return Json{{"action", action_to_json(x.action)}, {"mu", to_json(x.mu)}};
}

}  // namespace homlie
