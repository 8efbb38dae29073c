#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "orthoform/forms.hpp"
#include "orthoform/preservers.hpp"

namespace orthoform::io {

using json = nlohmann::json;

// Input handling for scalar entries.  In the default exact mode only
// fraction strings (and exact JSON integers) are accepted; with floats
// enabled, JSON numbers are rationalized by continued fractions to within
// eps before entering the exact core.
struct FloatPolicy {
  bool allow_floats = false;
  double eps = 1e-9;
};

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j, const FloatPolicy& policy = {});
json crat_to_json(const CRat& z);
CRat crat_from_json(const json& j, const FloatPolicy& policy = {});

json space_to_json(const FiniteSpace& sp);
FiniteSpace space_from_json(const json& j);

// A space reference is either an inline space object or a path string
// resolved relative to the referencing document.
FiniteSpace space_from_ref(const json& j, const std::filesystem::path& base_dir);

json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const json& j,
                                 const std::filesystem::path& base_dir = {},
                                 const FloatPolicy& policy = {});

json functional_to_json(const Functional& g);
Functional functional_from_json(const json& j,
                                const std::filesystem::path& base_dir = {},
                                const FloatPolicy& policy = {});

json form_to_json(const BilinearForm& v);
BilinearForm form_from_json(const json& j,
                            const std::filesystem::path& base_dir = {},
                            const FloatPolicy& policy = {});

json map_to_json(const LinearMap& t);
LinearMap map_from_json(const json& j,
                        const std::filesystem::path& base_dir = {},
                        const FloatPolicy& policy = {});

json structure_to_json(const PreserverStructure& s);
json certificate_to_json(const BiopCertificate& cert);
json complexform_to_json(const ComplexForm& w);

// Canonical rendering: two-space indent, alphabetically ordered keys,
// trailing newline.  parse(emit(j)) == j byte-for-byte after one pass.
std::string emit(const json& j);

// Parse with a line/column diagnostic wrapped in ParseError.
json parse_text(const std::string& text);
json parse_file(const std::filesystem::path& path);

}  // namespace orthoform::io
