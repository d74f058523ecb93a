#include "comprelie/cli.hpp"

#include "comprelie/cohomology.hpp"
#include "comprelie/error.hpp"
#include "comprelie/extension.hpp"
#include "comprelie/io.hpp"
#include "comprelie/wells.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace comprelie {

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_json_text(buffer.str());
    } catch (const input_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

template <typename Parser>
auto load_as(const std::string& path, Parser parser) {
    try {
        return parser(load_json(path));
    } catch (const input_error& e) {
        std::string what = e.what();
        if (what.rfind(path, 0) == 0) {
            throw;
        }
        throw input_error(path + ": " + what);
    }
}

ComPreLieAlgebra load_validated_algebra(const std::string& path) {
    ComPreLieAlgebra alg = load_as(path, parse_algebra);
    if (!validate_algebra(alg).all_pass()) {
        throw input_error(path + ": the algebra fails its axioms (run `verify` for the report)");
    }
    return alg;
}

void require_valid_extension(const std::string& path, const AbelianExtension& ext) {
    ExtensionReport report = validate_extension(ext);
    if (report.all_pass()) {
        return;
    }
    struct Named {
        const char* name;
        const CheckResult* check;
    };
    const Named checks[] = {
        {"shapes", &report.shapes},
        {"base_valid", &report.base_valid},
        {"carrier_valid", &report.carrier_valid},
        {"ji_zero", &report.ji_zero},
        {"i_injective", &report.i_injective},
        {"j_surjective", &report.j_surjective},
        {"image_i_is_kernel_j", &report.image_i_is_kernel_j},
        {"section", &report.section},
        {"fiber_trivial", &report.fiber_trivial},
        {"j_homomorphism", &report.j_homomorphism},
    };
    for (const Named& named : checks) {
        if (!named.check->pass) {
            throw input_error(path + ": extension fails validation at '" + named.name + "'");
        }
    }
    throw input_error(path + ": extension fails validation");
}

AbelianExtension load_valid_extension(const std::string& path) {
    AbelianExtension ext = load_as(path, parse_extension);
    require_valid_extension(path, ext);
    return ext;
}

void emit(std::ostream& out, const Json& doc) {
    out << doc.dump(2) << "\n";
}

// Deterministic sample suite: the identity, lifts of a 1-cocycle basis,
// scalar pairs, restrictions of every sampled automorphism, and whatever
// induce can lift from those pairs.
ExactnessReport run_exactness(const AbelianExtension& ext) {
    ComPreLieAlgebra base = ext.base;
    if (!base.validated) {
        validate_algebra(base);
    }
    Representation rho = induced_rep(ext, ext.canonical_section());
    const std::size_t n = base.dim;
    const std::size_t m = ext.fiber_dim;

    std::vector<LiftedAutomorphism> gammas;
    gammas.push_back({Matrix::identity(n + m)});
    CocycleSpace z1 = cohomology_space(base, rho, 1);
    for (const Vec& v : z1.z.vectors) {
        gammas.push_back(gamma_from_z1(ext, Cochain1::from_coords(n, m, v)));
    }
    if (z1.z.dim() >= 2) {
        gammas.push_back(gamma_from_z1(
            ext, Cochain1::from_coords(n, m, vec_add(z1.z.vectors[0], z1.z.vectors[1]))));
    }

    std::vector<AutPair> pairs;
    pairs.push_back({Matrix::identity(m), Matrix::identity(n)});
    pairs.push_back({Matrix::identity(m).scaled(Rational(2)), Matrix::identity(n)});
    pairs.push_back({Matrix::identity(m).scaled(Rational(-1)), Matrix::identity(n)});
    for (const LiftedAutomorphism& g : gammas) {
        pairs.push_back(tau(ext, g));
    }
    for (const AutPair& pair : pairs) {
        if (is_compatible_pair(ext, pair)) {
            if (auto lift = induce(ext, pair)) {
                gammas.push_back(lift->gamma);
            }
        }
    }
    return exactness_report(ext, gammas, pairs);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-arithmetic toolkit for Com-PreLie algebras: validation, cohomology, "
                 "abelian extensions and automorphism lifting"};
    app.require_subcommand(1);

    std::string verify_file;
    auto* verify = app.add_subcommand("verify", "Check the algebra axioms of a file");
    verify->add_option("algebra", verify_file, "Algebra JSON file")->required();

    std::string repv_alg, repv_rep;
    auto* rep_verify =
        app.add_subcommand("rep-verify", "Check the representation identities of a file");
    rep_verify->add_option("algebra", repv_alg, "Algebra JSON file")->required();
    rep_verify->add_option("representation", repv_rep, "Representation JSON file")->required();

    std::string coh_alg, coh_rep;
    int coh_degree = 0;
    auto* cohomology =
        app.add_subcommand("cohomology", "Cocycles, coboundaries and quotient representatives");
    cohomology->add_option("algebra", coh_alg, "Algebra JSON file")->required();
    cohomology->add_option("representation", coh_rep, "Representation JSON file")->required();
    cohomology->add_option("--degree", coh_degree, "Cochain degree (1 or 2)")->required();

    std::string ext_alg, ext_rep, ext_cochain;
    auto* extend = app.add_subcommand("extend", "Build the abelian extension of a 2-cocycle");
    extend->add_option("algebra", ext_alg, "Algebra JSON file")->required();
    extend->add_option("representation", ext_rep, "Representation JSON file")->required();
    extend->add_option("cochain", ext_cochain, "2-cochain JSON file")->required();

    std::string extract_ext, extract_section;
    auto* extract =
        app.add_subcommand("extract", "Read the 2-cocycle of an extension through a section");
    extract->add_option("extension", extract_ext, "Extension JSON file")->required();
    extract->add_option("--section", extract_section, "Section JSON file (default: canonical)");

    std::string iso_first, iso_second;
    auto* isomorphic =
        app.add_subcommand("isomorphic", "Decide equivalence of two extensions over id_A, id_V");
    isomorphic->add_option("first", iso_first, "Extension JSON file")->required();
    isomorphic->add_option("second", iso_second, "Extension JSON file")->required();

    std::string induce_ext, induce_pair;
    auto* induce_cmd =
        app.add_subcommand("induce", "Lift an automorphism pair to the carrier if possible");
    induce_cmd->add_option("extension", induce_ext, "Extension JSON file")->required();
    induce_cmd->add_option("pair", induce_pair, "Automorphism pair JSON file")->required();

    std::string wells_ext, wells_pair;
    auto* wells =
        app.add_subcommand("wells", "Obstruction class of a compatible automorphism pair");
    wells->add_option("extension", wells_ext, "Extension JSON file")->required();
    wells->add_option("pair", wells_pair, "Automorphism pair JSON file")->required();

    std::string exact_ext;
    auto* exactness =
        app.add_subcommand("exactness", "Sampled exactness checks of the restriction sequence");
    exactness->add_option("extension", exact_ext, "Extension JSON file")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("comprelie");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 1;
    }

    try {
        if (verify->parsed()) {
            ComPreLieAlgebra alg = load_as(verify_file, parse_algebra);
            emit(out, algebra_report_to_json(validate_algebra(alg)));
        } else if (rep_verify->parsed()) {
            ComPreLieAlgebra alg = load_validated_algebra(repv_alg);
            Representation rep = load_as(repv_rep, parse_representation);
            emit(out, representation_report_to_json(validate_representation(alg, rep)));
        } else if (cohomology->parsed()) {
            ComPreLieAlgebra alg = load_validated_algebra(coh_alg);
            Representation rep = load_as(coh_rep, parse_representation);
            emit(out, cocycle_space_to_json(cohomology_space(alg, rep, coh_degree)));
        } else if (extend->parsed()) {
            ComPreLieAlgebra alg = load_validated_algebra(ext_alg);
            Representation rep = load_as(ext_rep, parse_representation);
            Cochain2 cochain = load_as(ext_cochain, parse_cochain2);
            emit(out, extension_to_json(build_extension(alg, rep, cochain)));
        } else if (extract->parsed()) {
            AbelianExtension ext = load_valid_extension(extract_ext);
            Section section = extract_section.empty() ? ext.canonical_section()
                                                      : load_as(extract_section, parse_section);
            emit(out, cochain2_to_json(extract_cocycle(ext, section)));
        } else if (isomorphic->parsed()) {
            AbelianExtension first = load_valid_extension(iso_first);
            AbelianExtension second = load_valid_extension(iso_second);
            Json doc = Json::object();
            if (auto iso = extensions_isomorphic(first, second)) {
                doc["isomorphic"] = true;
                doc["verdict"] = "equivalent";
                doc["F"] = matrix_to_json(iso->F);
                doc["f"] = matrix_to_json(iso->f);
            } else {
                doc["isomorphic"] = false;
                doc["verdict"] = "distinct";
            }
            emit(out, doc);
        } else if (induce_cmd->parsed()) {
            AbelianExtension ext = load_valid_extension(induce_ext);
            AutPair pair = load_as(induce_pair, parse_pair);
            Json doc = Json::object();
            if (!is_compatible_pair(ext, pair)) {
                doc["compatible"] = false;
                doc["inducible"] = false;
            } else if (auto lift = induce(ext, pair)) {
                doc["compatible"] = true;
                doc["inducible"] = true;
                doc["gamma"] = matrix_to_json(lift->gamma.gamma);
                doc["varphi"] = matrix_to_json(lift->varphi);
            } else {
                doc["compatible"] = true;
                doc["inducible"] = false;
                doc["obstruction"] = wells_class_to_json(wells_class(ext, pair));
            }
            emit(out, doc);
        } else if (wells->parsed()) {
            AbelianExtension ext = load_valid_extension(wells_ext);
            AutPair pair = load_as(wells_pair, parse_pair);
            emit(out, wells_class_to_json(wells_class(ext, pair)));
        } else if (exactness->parsed()) {
            emit(out, exactness_report_to_json(run_exactness(load_valid_extension(exact_ext))));
        }
        return 0;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const unsupported_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace comprelie
