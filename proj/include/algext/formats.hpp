#pragma once

#include <optional>
#include <string>

#include "algext/extension.hpp"
#include "algext/polygroup.hpp"

#include <json.hpp>

namespace algext {

using Json = nlohmann::ordered_json;

// Catalog directory resolution: ALGEXT_CATALOG, then a "catalog" directory
// next to the executable, then ./catalog.
std::string locate_catalog(const std::string& exe_path = "");

// Resolves an input path: as given, then inside the catalog directory.
std::string resolve_input(const std::string& path, const std::string& catalog_dir);

struct LieFileData {
  std::string name;
  LieAlgebra algebra;
  std::optional<LeviPair> levi;  // annotated red/u split, validated when present
};

struct PolyGroupFileData {
  std::string name;
  std::string lie_name;  // the algebra name module files refer to
  PolyGroup group;
  std::optional<PolyAction> action;
};

struct AlgGroupFileData {
  std::string name;
  LieFileData lie;
  AlgGroupData data;
};

struct CoeffFileData {
  std::string name;
  std::size_t torus_dim = 0;
  Json module_spec;  // null, a path string, or an inline module object
  std::string base_dir;
};

enum class GroupFileKind { Algebraic, Poly, Coefficient };

// Every parse runs the relevant validators eagerly: malformed files throw
// Error(ParseError)/Error(IoError), invalid mathematics throws the specific
// validation error.
LieFileData parse_lie_file(const std::string& path);
LieModule parse_module_file(const std::string& path, const LieFileData& lie);
GroupFileKind group_file_kind(const std::string& path);
AlgGroupFileData parse_alg_group_file(const std::string& path, const std::string& catalog_dir);
PolyGroupFileData parse_poly_group_file(const std::string& path);
CoeffFileData parse_coeff_file(const std::string& path);
CoeffGroupData instantiate_coeff(const CoeffFileData& coeff, const LieFileData& lie,
                                 const std::string& catalog_dir);

// Module parsed from an inline JSON object (the module-file schema).
LieModule module_from_json(const Json& spec, const LieFileData& lie, const std::string& context);

// pi1 lookup from the catalog table (type, rank, isogeny label).
std::vector<Int> pi1_from_catalog(const std::string& catalog_dir, const std::string& type,
                                  int rank, const std::string& isogeny);

// --- serialization ---

Json cochain_to_json(const Cochain& c);
Json cohomology_to_json(const CohomologyResult& r);
Json ext_result_to_json(const ExtResult& r);
Json vanest_to_json(const VanEstReport& r);
Json poly_cochain_to_json(const PolyCochain& c);
Json validation_to_json(const ValidationReport& r);

Json lie_to_json(const LieFileData& lie);
Json module_to_json(const LieModule& m, const std::string& algebra_name);

std::string fnv1a64_hex(const std::string& bytes);
std::string read_file(const std::string& path);  // Error(IoError) when unreadable

}  // namespace algext
