#pragma once

#include "comprelie/cochain.hpp"
#include "comprelie/cohomology.hpp"
#include "comprelie/extension.hpp"
#include "comprelie/wells.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <string_view>
#include <variant>

namespace comprelie {

using Json = nlohmann::json;

// Parsers perform full structural validation (shapes, symmetry of phi,
// well-formed rationals) and raise input_error with a JSON-path-qualified
// message. Semantic validation (axioms, cocycle property, extension
// invariants) is separate and up to the caller.
ComPreLieAlgebra parse_algebra(const Json& j);
Representation parse_representation(const Json& j);
Cochain1 parse_cochain1(const Json& j);
Cochain2 parse_cochain2(const Json& j);
AbelianExtension parse_extension(const Json& j);
AutPair parse_pair(const Json& j);
Section parse_section(const Json& j);

// Text entry points: JSON syntax errors become input_error too.
Json parse_json_text(std::string_view text);

Json algebra_to_json(const ComPreLieAlgebra& alg);
Json representation_to_json(const Representation& rep);
Json cochain1_to_json(const Cochain1& c);
Json cochain2_to_json(const Cochain2& c);
Json extension_to_json(const AbelianExtension& ext);
Json pair_to_json(const AutPair& pair);
Json matrix_to_json(const Matrix& m);
Json algebra_report_to_json(const AlgebraReport& report);
Json representation_report_to_json(const RepresentationReport& report);
Json extension_report_to_json(const ExtensionReport& report);
Json cocycle_space_to_json(const CocycleSpace& space);
Json wells_class_to_json(const WellsClass& w);
Json exactness_report_to_json(const ExactnessReport& report);

// Named store of parsed objects. Insertion re-runs the structural
// validation of the object and rejects duplicate names; lookups with a
// wrong kind or a missing name are input errors.
class Workspace {
public:
    using Object = std::variant<ComPreLieAlgebra, Representation, Cochain1, Cochain2,
                                AbelianExtension, AutPair, Section>;

    void add(const std::string& name, Object obj);
    bool contains(const std::string& name) const;

    const ComPreLieAlgebra& algebra(const std::string& name) const;
    const Representation& representation(const std::string& name) const;
    const Cochain1& cochain1(const std::string& name) const;
    const Cochain2& cochain2(const std::string& name) const;
    const AbelianExtension& extension(const std::string& name) const;
    const AutPair& pair(const std::string& name) const;
    const Section& section(const std::string& name) const;

private:
    template <typename T>
    const T& get(const std::string& name, const char* kind) const;

    std::map<std::string, Object> objects_;
};

}  // namespace comprelie
