#include "comprelie/io.hpp"

#include "comprelie/error.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace comprelie {

namespace {

std::string at_index(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

const Json& require_member(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) {
        throw input_error(path + ": expected a JSON object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw input_error(path + "." + key + ": missing");
    }
    return *it;
}

std::size_t parse_positive(const Json& j, const std::string& path) {
    if (!j.is_number_integer() || j.is_number_float()) {
        throw input_error(path + ": expected a positive integer");
    }
    long long value = j.get<long long>();
    if (value < 1) {
        throw input_error(path + ": expected a positive integer");
    }
    return static_cast<std::size_t>(value);
}

Rational parse_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer() && !j.is_number_float()) {
        return Rational(j.get<long long>());
    }
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const input_error& e) {
            throw input_error(path + ": " + e.what());
        }
    }
    throw input_error(path + ": expected a rational string like \"p/q\"");
}

const Json& require_array(const Json& j, std::size_t size, const std::string& path) {
    if (!j.is_array()) {
        throw input_error(path + ": expected an array");
    }
    if (j.size() != size) {
        throw input_error(path + ": expected " + std::to_string(size) + " entries, found " +
                          std::to_string(j.size()));
    }
    return j;
}

Vec parse_vec(const Json& j, std::size_t size, const std::string& path) {
    require_array(j, size, path);
    Vec out(size);
    for (std::size_t k = 0; k < size; ++k) {
        out[k] = parse_rational(j.at(k), at_index(path, k));
    }
    return out;
}

Matrix parse_matrix_sized(const Json& j, std::size_t rows, std::size_t cols,
                          const std::string& path) {
    require_array(j, rows, path);
    Matrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        out.set_row(r, parse_vec(j.at(r), cols, at_index(path, r)));
    }
    return out;
}

// Matrix whose dimensions come from the document itself: a non-empty
// rectangular array of non-empty rows.
Matrix parse_matrix_free(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) {
        throw input_error(path + ": expected a non-empty array of rows");
    }
    const Json& first = j.at(0);
    if (!first.is_array() || first.empty()) {
        throw input_error(at_index(path, 0) + ": expected a non-empty row");
    }
    return parse_matrix_sized(j, j.size(), first.size(), path);
}

BilinearMap parse_cubic(const Json& j, std::size_t dim, const std::string& path) {
    require_array(j, dim, path);
    BilinearMap map(dim, dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
        const Json& row = require_array(j.at(a), dim, at_index(path, a));
        for (std::size_t b = 0; b < dim; ++b) {
            Vec value = parse_vec(row.at(b), dim, at_index(at_index(path, a), b));
            for (std::size_t k = 0; k < dim; ++k) {
                map.c(a, b, k) = value[k];
            }
        }
    }
    return map;
}

ComPreLieAlgebra parse_algebra_at(const Json& j, const std::string& path) {
    std::size_t dim = parse_positive(require_member(j, "dim", path), path + ".dim");
    std::vector<std::string> labels;
    if (j.is_object() && j.contains("basis")) {
        const Json& basis = require_array(j.at("basis"), dim, path + ".basis");
        for (std::size_t k = 0; k < dim; ++k) {
            if (!basis.at(k).is_string()) {
                throw input_error(at_index(path + ".basis", k) + ": expected a string");
            }
            labels.push_back(basis.at(k).get<std::string>());
        }
    }
    ComPreLieAlgebra alg = ComPreLieAlgebra::make(dim, std::move(labels));
    alg.star = parse_cubic(require_member(j, "star", path), dim, path + ".star");
    alg.bullet = parse_cubic(require_member(j, "bullet", path), dim, path + ".bullet");
    return alg;
}

std::vector<Matrix> parse_action(const Json& j, std::size_t alg_dim, std::size_t mod_dim,
                                 const std::string& path) {
    require_array(j, alg_dim, path);
    std::vector<Matrix> out;
    out.reserve(alg_dim);
    for (std::size_t k = 0; k < alg_dim; ++k) {
        out.push_back(parse_matrix_sized(j.at(k), mod_dim, mod_dim, at_index(path, k)));
    }
    return out;
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const Rational& r : v) {
        out.push_back(r.str());
    }
    return out;
}

Json cubic_to_json(const BilinearMap& map) {
    Json out = Json::array();
    for (std::size_t a = 0; a < map.dim_left(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < map.dim_right(); ++b) {
            row.push_back(vec_to_json(map.eval_basis(a, b)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

void add_check(Json& out, Json& witnesses, const char* key, const CheckResult& check) {
    out[key] = check.pass;
    if (!check.pass) {
        witnesses[key] = check.witness;
    }
}

void finish_witnesses(Json& out, Json&& witnesses) {
    if (!witnesses.empty()) {
        out["witnesses"] = std::move(witnesses);
    }
}

}  // namespace

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

ComPreLieAlgebra parse_algebra(const Json& j) {
    return parse_algebra_at(j, "algebra");
}

Representation parse_representation(const Json& j) {
    const std::string path = "representation";
    Representation rep;
    rep.alg_dim = parse_positive(require_member(j, "alg_dim", path), path + ".alg_dim");
    rep.mod_dim = parse_positive(require_member(j, "mod_dim", path), path + ".mod_dim");
    rep.mu = parse_action(require_member(j, "mu", path), rep.alg_dim, rep.mod_dim, path + ".mu");
    rep.l = parse_action(require_member(j, "l", path), rep.alg_dim, rep.mod_dim, path + ".l");
    rep.r = parse_action(require_member(j, "r", path), rep.alg_dim, rep.mod_dim, path + ".r");
    return rep;
}

Cochain1 parse_cochain1(const Json& j) {
    return Cochain1{parse_matrix_free(require_member(j, "N", "cochain"), "cochain.N")};
}

Cochain2 parse_cochain2(const Json& j) {
    const std::string path = "cochain";
    const Json& phi = require_member(j, "phi", path);
    if (!phi.is_array() || phi.empty()) {
        throw input_error(path + ".phi: expected a non-empty array");
    }
    std::size_t n = phi.size();
    const Json& first_row = require_array(phi.at(0), n, at_index(path + ".phi", 0));
    if (!first_row.at(0).is_array() || first_row.at(0).empty()) {
        throw input_error(at_index(at_index(path + ".phi", 0), 0) +
                          ": expected a non-empty value vector");
    }
    std::size_t m = first_row.at(0).size();

    auto parse_table = [&](const Json& table, const std::string& table_path) {
        require_array(table, n, table_path);
        std::vector<Vec> values;
        values.reserve(n * n);
        for (std::size_t a = 0; a < n; ++a) {
            const Json& row = require_array(table.at(a), n, at_index(table_path, a));
            for (std::size_t b = 0; b < n; ++b) {
                values.push_back(
                    parse_vec(row.at(b), m, at_index(at_index(table_path, a), b)));
            }
        }
        return values;
    };

    std::vector<Vec> phi_values = parse_table(phi, path + ".phi");
    std::vector<Vec> psi_values = parse_table(require_member(j, "psi", path), path + ".psi");

    Cochain2 c(n, m);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            if (b > a && phi_values[a * n + b] != phi_values[b * n + a]) {
                throw input_error(at_index(at_index(path + ".phi", b), a) +
                                  ": not symmetric to the (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ") entry");
            }
            c.set_phi(a, b, phi_values[a * n + b]);
        }
        for (std::size_t b = 0; b < n; ++b) {
            c.set_psi(a, b, psi_values[a * n + b]);
        }
    }
    return c;
}

AbelianExtension parse_extension(const Json& j) {
    const std::string path = "extension";
    AbelianExtension ext;
    ext.base = parse_algebra_at(require_member(j, "base", path), path + ".base");
    ext.fiber_dim = parse_positive(require_member(j, "fiber_dim", path), path + ".fiber_dim");
    ext.carrier = parse_algebra_at(require_member(j, "carrier", path), path + ".carrier");
    const std::size_t n = ext.base.dim;
    const std::size_t m = ext.fiber_dim;
    if (ext.carrier.dim != n + m) {
        throw input_error(path + ".carrier.dim: expected base dim plus fiber_dim (" +
                          std::to_string(n + m) + "), found " + std::to_string(ext.carrier.dim));
    }
    ext.i = parse_matrix_sized(require_member(j, "i", path), n + m, m, path + ".i");
    ext.j = parse_matrix_sized(require_member(j, "j", path), n, n + m, path + ".j");
    ext.s0 = parse_matrix_sized(require_member(j, "s0", path), n + m, n, path + ".s0");
    return ext;
}

AutPair parse_pair(const Json& j) {
    const std::string path = "pair";
    AutPair pair;
    pair.beta = parse_matrix_free(require_member(j, "beta", path), path + ".beta");
    pair.alpha = parse_matrix_free(require_member(j, "alpha", path), path + ".alpha");
    if (pair.beta.rows() != pair.beta.cols()) {
        throw input_error(path + ".beta: expected a square matrix");
    }
    if (pair.alpha.rows() != pair.alpha.cols()) {
        throw input_error(path + ".alpha: expected a square matrix");
    }
    return pair;
}

Section parse_section(const Json& j) {
    return Section{parse_matrix_free(require_member(j, "s", "section"), "section.s")};
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out.push_back(vec_to_json(m.row(r)));
    }
    return out;
}

Json algebra_to_json(const ComPreLieAlgebra& alg) {
    Json out = Json::object();
    out["dim"] = alg.dim;
    out["basis"] = alg.basis_labels;
    out["star"] = cubic_to_json(alg.star);
    out["bullet"] = cubic_to_json(alg.bullet);
    return out;
}

Json representation_to_json(const Representation& rep) {
    Json out = Json::object();
    out["alg_dim"] = rep.alg_dim;
    out["mod_dim"] = rep.mod_dim;
    auto action = [](const std::vector<Matrix>& mats) {
        Json list = Json::array();
        for (const Matrix& m : mats) {
            list.push_back(matrix_to_json(m));
        }
        return list;
    };
    out["mu"] = action(rep.mu);
    out["l"] = action(rep.l);
    out["r"] = action(rep.r);
    return out;
}

Json cochain1_to_json(const Cochain1& c) {
    Json out = Json::object();
    out["N"] = matrix_to_json(c.N);
    return out;
}

Json cochain2_to_json(const Cochain2& c) {
    Json phi = Json::array();
    Json psi = Json::array();
    for (std::size_t a = 0; a < c.alg_dim(); ++a) {
        Json phi_row = Json::array();
        Json psi_row = Json::array();
        for (std::size_t b = 0; b < c.alg_dim(); ++b) {
            phi_row.push_back(vec_to_json(c.phi(a, b)));
            psi_row.push_back(vec_to_json(c.psi(a, b)));
        }
        phi.push_back(std::move(phi_row));
        psi.push_back(std::move(psi_row));
    }
    Json out = Json::object();
    out["phi"] = std::move(phi);
    out["psi"] = std::move(psi);
    return out;
}

Json extension_to_json(const AbelianExtension& ext) {
    Json out = Json::object();
    out["base"] = algebra_to_json(ext.base);
    out["fiber_dim"] = ext.fiber_dim;
    out["carrier"] = algebra_to_json(ext.carrier);
    out["i"] = matrix_to_json(ext.i);
    out["j"] = matrix_to_json(ext.j);
    out["s0"] = matrix_to_json(ext.s0);
    return out;
}

Json pair_to_json(const AutPair& pair) {
    Json out = Json::object();
    out["beta"] = matrix_to_json(pair.beta);
    out["alpha"] = matrix_to_json(pair.alpha);
    return out;
}

Json algebra_report_to_json(const AlgebraReport& report) {
    Json out = Json::object();
    Json witnesses = Json::object();
    add_check(out, witnesses, "commutative", report.commutative);
    add_check(out, witnesses, "associative", report.associative);
    add_check(out, witnesses, "prelie", report.prelie);
    add_check(out, witnesses, "compatible", report.compatible);
    out["all_pass"] = report.all_pass();
    finish_witnesses(out, std::move(witnesses));
    return out;
}

Json representation_report_to_json(const RepresentationReport& report) {
    Json out = Json::object();
    Json witnesses = Json::object();
    add_check(out, witnesses, "mu_star", report.mu_star);
    add_check(out, witnesses, "l_prelie", report.l_prelie);
    add_check(out, witnesses, "r_prelie", report.r_prelie);
    add_check(out, witnesses, "l_mu", report.l_mu);
    add_check(out, witnesses, "r_mu", report.r_mu);
    out["all_pass"] = report.all_pass();
    finish_witnesses(out, std::move(witnesses));
    return out;
}

Json extension_report_to_json(const ExtensionReport& report) {
    Json out = Json::object();
    Json witnesses = Json::object();
    add_check(out, witnesses, "shapes", report.shapes);
    add_check(out, witnesses, "base_valid", report.base_valid);
    add_check(out, witnesses, "carrier_valid", report.carrier_valid);
    add_check(out, witnesses, "ji_zero", report.ji_zero);
    add_check(out, witnesses, "i_injective", report.i_injective);
    add_check(out, witnesses, "j_surjective", report.j_surjective);
    add_check(out, witnesses, "image_i_is_kernel_j", report.image_i_is_kernel_j);
    add_check(out, witnesses, "section", report.section);
    add_check(out, witnesses, "fiber_trivial", report.fiber_trivial);
    add_check(out, witnesses, "j_homomorphism", report.j_homomorphism);
    out["all_pass"] = report.all_pass();
    finish_witnesses(out, std::move(witnesses));
    return out;
}

Json cocycle_space_to_json(const CocycleSpace& space) {
    auto basis_to_json = [](const std::vector<Vec>& vectors) {
        Json out = Json::array();
        for (const Vec& v : vectors) {
            out.push_back(vec_to_json(v));
        }
        return out;
    };
    Json out = Json::object();
    out["degree"] = space.degree;
    out["alg_dim"] = space.alg_dim;
    out["mod_dim"] = space.mod_dim;
    out["ambient_dim"] = space.ambient_dim;
    out["z_dim"] = space.z.dim();
    out["b_dim"] = space.b.dim();
    out["h_dim"] = space.h_dim;
    out["z_basis"] = basis_to_json(space.z.vectors);
    out["b_basis"] = basis_to_json(space.b.vectors);
    out["h_reps"] = basis_to_json(space.h_reps);
    return out;
}

Json wells_class_to_json(const WellsClass& w) {
    Json out = Json::object();
    out["coordinates"] = vec_to_json(w.coordinates);
    out["is_zero"] = w.is_zero;
    return out;
}

Json exactness_report_to_json(const ExactnessReport& report) {
    Json out = Json::object();
    out["gamma_samples"] = report.gamma_samples;
    out["pair_samples"] = report.pair_samples;
    out["ker_tau_in_im_iota"] = report.ker_tau_in_im_iota;
    out["im_iota_in_ker_tau"] = report.im_iota_in_ker_tau;
    out["im_tau_in_ker_wells"] = report.im_tau_in_ker_wells;
    out["ker_wells_in_im_tau"] = report.ker_wells_in_im_tau;
    out["all_pass"] = report.all_pass();
    out["failures"] = report.failures;
    return out;
}

namespace {

void structural_check(const ComPreLieAlgebra& alg) {
    if (alg.dim < 1 || alg.basis_labels.size() != alg.dim) {
        throw input_error("algebra dimension and labels disagree");
    }
    for (const BilinearMap* map : {&alg.star, &alg.bullet}) {
        if (map->dim_left() != alg.dim || map->dim_right() != alg.dim ||
            map->dim_out() != alg.dim) {
            throw input_error("structure constants do not match the algebra dimension");
        }
    }
}

void structural_check(const Representation& rep) {
    if (rep.alg_dim < 1 || rep.mod_dim < 1) {
        throw input_error("representation dimensions must be positive");
    }
    for (const std::vector<Matrix>* action : {&rep.mu, &rep.l, &rep.r}) {
        if (action->size() != rep.alg_dim) {
            throw input_error("representation actions do not match the algebra dimension");
        }
        for (const Matrix& m : *action) {
            if (m.rows() != rep.mod_dim || m.cols() != rep.mod_dim) {
                throw input_error("representation matrices do not match the module dimension");
            }
        }
    }
}

void structural_check(const Cochain1& c) {
    if (c.alg_dim() < 1 || c.mod_dim() < 1) {
        throw input_error("1-cochain dimensions must be positive");
    }
}

void structural_check(const Cochain2& c) {
    if (c.alg_dim() < 1 || c.mod_dim() < 1) {
        throw input_error("2-cochain dimensions must be positive");
    }
}

void structural_check(const AbelianExtension& ext) {
    structural_check(ext.base);
    structural_check(ext.carrier);
    const std::size_t n = ext.base.dim;
    const std::size_t m = ext.fiber_dim;
    if (m < 1 || ext.carrier.dim != n + m || ext.i.rows() != n + m || ext.i.cols() != m ||
        ext.j.rows() != n || ext.j.cols() != n + m || ext.s0.rows() != n + m ||
        ext.s0.cols() != n) {
        throw input_error("extension matrices do not match the base and fiber dimensions");
    }
}

void structural_check(const AutPair& pair) {
    if (pair.beta.rows() < 1 || pair.beta.rows() != pair.beta.cols() ||
        pair.alpha.rows() < 1 || pair.alpha.rows() != pair.alpha.cols()) {
        throw input_error("automorphism pair matrices must be square and non-empty");
    }
}

void structural_check(const Section& s) {
    if (s.s.rows() < 1 || s.s.cols() < 1) {
        throw input_error("section matrix must be non-empty");
    }
}

}  // namespace

void Workspace::add(const std::string& name, Object obj) {
    if (objects_.count(name) != 0) {
        throw input_error("workspace already holds an object named '" + name + "'");
    }
    try {
        std::visit([](const auto& o) { structural_check(o); }, obj);
    } catch (const input_error& e) {
        throw input_error("object '" + name + "': " + e.what());
    }
    objects_.emplace(name, std::move(obj));
}

bool Workspace::contains(const std::string& name) const {
    return objects_.count(name) != 0;
}

template <typename T>
const T& Workspace::get(const std::string& name, const char* kind) const {
    auto it = objects_.find(name);
    if (it == objects_.end()) {
        throw input_error("no workspace object named '" + name + "'");
    }
    const T* value = std::get_if<T>(&it->second);
    if (value == nullptr) {
        throw input_error("workspace object '" + name + "' is not a " + std::string(kind));
    }
    return *value;
}

const ComPreLieAlgebra& Workspace::algebra(const std::string& name) const {
    return get<ComPreLieAlgebra>(name, "algebra");
}

const Representation& Workspace::representation(const std::string& name) const {
    return get<Representation>(name, "representation");
}

const Cochain1& Workspace::cochain1(const std::string& name) const {
    return get<Cochain1>(name, "1-cochain");
}

const Cochain2& Workspace::cochain2(const std::string& name) const {
    return get<Cochain2>(name, "2-cochain");
}

const AbelianExtension& Workspace::extension(const std::string& name) const {
    return get<AbelianExtension>(name, "extension");
}

const AutPair& Workspace::pair(const std::string& name) const {
    return get<AutPair>(name, "automorphism pair");
}

const Section& Workspace::section(const std::string& name) const {
    return get<Section>(name, "section");
}

}  // namespace comprelie
