#include "algext/formats.hpp"

#include <cstdlib>
#include <set>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace algext {

namespace fs = std::filesystem;

std::string locate_catalog(const std::string& exe_path) {
  if (const char* env = std::getenv("ALGEXT_CATALOG")) return env;
  if (!exe_path.empty()) {
    fs::path beside = fs::path(exe_path).parent_path() / "catalog";
    if (fs::is_directory(beside)) return beside.string();
  }
  if (fs::is_directory("catalog")) return "catalog";
  return "";
}

std::string resolve_input(const std::string& path, const std::string& catalog_dir) {
  if (fs::exists(path)) return path;
  if (!catalog_dir.empty()) {
    fs::path in_catalog = fs::path(catalog_dir) / path;
    if (fs::exists(in_catalog)) return in_catalog.string();
  }
  throw Error(ErrorKind::IoError, "cannot find input file: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

Json load_json(const std::string& path) {
  std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

[[noreturn]] void bad_file(const std::string& path, const std::string& why) {
  throw Error(ErrorKind::ParseError, path + ": " + why);
}

std::string require_string(const Json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key) || !j[key].is_string())
    throw Error(ErrorKind::ParseError, ctx + ": missing string field \"" + key + "\"");
  return j[key].get<std::string>();
}

std::size_t require_count(const Json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw Error(ErrorKind::ParseError, ctx + ": missing nonnegative field \"" + key + "\"");
  return j[key].get<std::size_t>();
}

std::vector<std::size_t> index_list(const Json& j, const std::string& ctx, std::size_t bound) {
  std::vector<std::size_t> out;
  if (!j.is_array()) throw Error(ErrorKind::ParseError, ctx + ": expected an index array");
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() >= bound)
      throw Error(ErrorKind::ParseError, ctx + ": index out of range");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

RatMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                           const std::string& ctx) {
  if (!j.is_array() || j.size() != rows)
    throw Error(ErrorKind::ParseError, ctx + ": expected " + std::to_string(rows) + " rows");
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw Error(ErrorKind::ParseError, ctx + ": expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_string())
        throw Error(ErrorKind::ParseError, ctx + ": matrix entries are rational strings");
      m.at(r, c) = parse_rational(j[r][c].get<std::string>());
    }
  }
  return m;
}

std::vector<Int> factors_from_json(const Json& j, const std::string& ctx) {
  std::vector<Int> out;
  if (!j.is_array()) throw Error(ErrorKind::ParseError, ctx + ": expected an array");
  for (const auto& v : j) {
    if (v.is_number_unsigned())
      out.push_back(Int(v.get<std::uint64_t>()));
    else if (v.is_string())
      out.push_back(Int(v.get<std::string>()));
    else
      throw Error(ErrorKind::ParseError, ctx + ": invariant factors are integers");
  }
  return out;
}

}  // namespace

static LieFileData parse_lie_json(const Json& j, const std::string& path) {
  if (j.value("kind", "") != "lie-algebra") bad_file(path, "kind must be \"lie-algebra\"");
  LieFileData out;
  out.name = require_string(j, "name", path);
  std::size_t dim = require_count(j, "dim", path);
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    for (const auto& b : j["basis"]) labels.push_back(b.get<std::string>());
    if (labels.size() != dim) bad_file(path, "basis label count != dim");
  }
  out.algebra = LieAlgebra(dim, labels);
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) bad_file(path, "brackets must be an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& br : j["brackets"]) {
      std::size_t i = require_count(br, "i", path);
      std::size_t jj = require_count(br, "j", path);
      if (i >= dim || jj >= dim) bad_file(path, "bracket index out of range");
      if (!br.contains("coeffs") || !br["coeffs"].is_object())
        bad_file(path, "bracket needs a coeffs object");
      std::vector<std::pair<std::size_t, Rational>> coeffs;
      for (const auto& [k, v] : br["coeffs"].items()) {
        std::size_t kk = 0;
        try {
          kk = std::stoul(k);
        } catch (...) {
          bad_file(path, "coeffs keys are basis indices");
        }
        if (kk >= dim) bad_file(path, "coeffs index out of range");
        if (!v.is_string()) bad_file(path, "coeffs values are rational strings");
        coeffs.push_back({kk, parse_rational(v.get<std::string>())});
      }
      // [e_i, e_i] = 0, and a re-listed pair must agree with the
      // antisymmetric counterpart already stored
      if (i == jj) {
        for (const auto& [kk, v] : coeffs)
          if (v != 0)
            throw Error(ErrorKind::AntisymmetryViolation,
                        path + ": nonzero bracket [e_i, e_i] at i = " + std::to_string(i));
        continue;
      }
      if (seen.count({std::min(i, jj), std::max(i, jj)})) {
        for (std::size_t kk = 0; kk < dim; ++kk) {
          Rational listed = 0;
          for (const auto& [ck, cv] : coeffs)
            if (ck == kk) listed = cv;
          if (out.algebra.c(i, jj, kk) != listed)
            throw Error(ErrorKind::AntisymmetryViolation,
                        path + ": brackets (" + std::to_string(i) + "," + std::to_string(jj) +
                            ") and its transpose disagree");
        }
        continue;
      }
      seen.insert({std::min(i, jj), std::max(i, jj)});
      out.algebra.set_bracket(i, jj, coeffs);
    }
  }
  validate_lie(out.algebra).require();
  if (j.contains("levi")) {
    LeviPair pair;
    pair.g = out.algebra;
    pair.red_indices = index_list(j["levi"]["red"], path + " levi.red", dim);
    pair.u_indices = index_list(j["levi"]["u"], path + " levi.u", dim);
    validate_levi_pair(pair).require();
    out.levi = std::move(pair);
  }
  return out;
}

LieFileData parse_lie_file(const std::string& path) {
  return parse_lie_json(load_json(path), path);
}

LieModule module_from_json(const Json& spec, const LieFileData& lie, const std::string& context) {
  if (!spec.is_object()) throw Error(ErrorKind::ParseError, context + ": expected a module object");
  std::string alg = require_string(spec, "algebra", context);
  if (alg != lie.name)
    throw Error(ErrorKind::ValidationError,
                context + ": module is over \"" + alg + "\" but the algebra is \"" + lie.name + "\"");
  std::size_t dim = require_count(spec, "dim", context);
  LieModule m;
  m.algebra = lie.algebra;
  m.dim = dim;
  if (!spec.contains("action") || (spec["action"].is_string() && spec["action"] == "trivial")) {
    m.action.assign(lie.algebra.dim(), RatMatrix(dim, dim));
  } else {
    const Json& act = spec["action"];
    if (!act.is_array() || act.size() != lie.algebra.dim())
      throw Error(ErrorKind::ParseError, context + ": one action matrix per basis element");
    for (std::size_t i = 0; i < lie.algebra.dim(); ++i)
      m.action.push_back(matrix_from_json(act[i], dim, dim, context));
  }
  validate_module(m).require();
  return m;
}

LieModule parse_module_file(const std::string& path, const LieFileData& lie) {
  Json j = load_json(path);
  if (j.value("kind", "") != "lie-module") bad_file(path, "kind must be \"lie-module\"");
  return module_from_json(j, lie, path);
}

GroupFileKind group_file_kind(const std::string& path) {
  Json j = load_json(path);
  std::string kind = j.value("kind", "");
  if (kind == "algebraic-group") return GroupFileKind::Algebraic;
  if (kind == "poly-group") return GroupFileKind::Poly;
  if (kind == "coefficient-group") return GroupFileKind::Coefficient;
  bad_file(path, "kind must be algebraic-group, poly-group, or coefficient-group");
}

AlgGroupFileData parse_alg_group_file(const std::string& path, const std::string& catalog_dir) {
  Json j = load_json(path);
  if (j.value("kind", "") != "algebraic-group") bad_file(path, "kind must be \"algebraic-group\"");
  AlgGroupFileData out;
  out.name = require_string(j, "name", path);

  if (!j.contains("lie")) bad_file(path, "missing \"lie\"");
  if (j["lie"].is_string()) {
    fs::path base = fs::path(path).parent_path();
    std::string ref = j["lie"].get<std::string>();
    std::string lie_path;
    if (fs::exists(base / ref))
      lie_path = (base / ref).string();
    else
      lie_path = resolve_input(ref, catalog_dir);
    out.lie = parse_lie_file(lie_path);
  } else {
    out.lie = parse_lie_json(j["lie"], path + " (inline lie)");
  }

  LeviPair pair;
  pair.g = out.lie.algebra;
  if (j.contains("levi")) {
    pair.red_indices = index_list(j["levi"]["red"], path + " levi.red", out.lie.algebra.dim());
    pair.u_indices = index_list(j["levi"]["u"], path + " levi.u", out.lie.algebra.dim());
  } else if (out.lie.levi) {
    pair = *out.lie.levi;
  } else {
    bad_file(path, "no levi split given here or in the lie file");
  }
  validate_levi_pair(pair).require();

  FiniteAbelianGroup pi1;
  if (j.contains("pi1_derived")) {
    pi1 = FiniteAbelianGroup::from_invariant_factors(factors_from_json(j["pi1_derived"], path));
  } else if (j.contains("pi1_catalog")) {
    const Json& c = j["pi1_catalog"];
    pi1 = FiniteAbelianGroup::from_invariant_factors(
        pi1_from_catalog(catalog_dir, require_string(c, "type", path),
                         (int)require_count(c, "rank", path), require_string(c, "isogeny", path)));
  } else {
    bad_file(path, "missing pi1_derived (or pi1_catalog)");
  }

  out.data = AlgGroupData{std::move(pair), std::move(pi1), j.value("center_torus_dim", std::size_t(0))};
  validate_group_data(out.data).require();
  return out;
}

PolyGroupFileData parse_poly_group_file(const std::string& path) {
  Json j = load_json(path);
  if (j.value("kind", "") != "poly-group") bad_file(path, "kind must be \"poly-group\"");
  PolyGroupFileData out;
  out.name = require_string(j, "name", path);
  out.lie_name = j.value("lie_name", out.name);
  out.group.dim = require_count(j, "dim", path);
  const auto law_names = coordinate_names(out.group.dim, true);
  const auto inv_names = coordinate_names(out.group.dim, false);
  if (!j.contains("law") || !j["law"].is_array() || j["law"].size() != out.group.dim)
    bad_file(path, "law must list dim polynomials");
  if (!j.contains("inverse") || !j["inverse"].is_array() || j["inverse"].size() != out.group.dim)
    bad_file(path, "inverse must list dim polynomials");
  for (const auto& s : j["law"]) out.group.law.push_back(parse_poly(s.get<std::string>(), law_names));
  for (const auto& s : j["inverse"])
    out.group.inverse.push_back(parse_poly(s.get<std::string>(), inv_names));
  validate_poly_group(out.group).require();
  if (j.contains("action")) {
    const Json& a = j["action"];
    PolyAction act;
    act.a_dim = require_count(a, "dim", path);
    if (!a.contains("entries") || !a["entries"].is_array() || a["entries"].size() != act.a_dim)
      bad_file(path, "action entries must form a dim x dim matrix of polynomials");
    for (const auto& row : a["entries"]) {
      if (!row.is_array() || row.size() != act.a_dim)
        bad_file(path, "action entries must form a dim x dim matrix of polynomials");
      std::vector<MultiPoly> r;
      for (const auto& s : row) r.push_back(parse_poly(s.get<std::string>(), inv_names));
      act.entries.push_back(std::move(r));
    }
    validate_poly_action(out.group, act).require();
    out.action = std::move(act);
  }
  return out;
}

CoeffFileData parse_coeff_file(const std::string& path) {
  Json j = load_json(path);
  if (j.value("kind", "") != "coefficient-group") bad_file(path, "kind must be \"coefficient-group\"");
  CoeffFileData out;
  out.name = require_string(j, "name", path);
  out.torus_dim = j.value("torus_dim", std::size_t(0));
  out.module_spec = j.contains("module") ? j["module"] : Json(nullptr);
  out.base_dir = fs::path(path).parent_path().string();
  return out;
}

CoeffGroupData instantiate_coeff(const CoeffFileData& coeff, const LieFileData& lie,
                                 const std::string& catalog_dir) {
  CoeffGroupData out;
  out.torus_dim = coeff.torus_dim;
  if (coeff.module_spec.is_null()) {
    out.au_module = trivial_module(lie.algebra, 0);
  } else if (coeff.module_spec.is_string()) {
    std::string ref = coeff.module_spec.get<std::string>();
    std::string mpath;
    if (!coeff.base_dir.empty() && fs::exists(fs::path(coeff.base_dir) / ref))
      mpath = (fs::path(coeff.base_dir) / ref).string();
    else
      mpath = resolve_input(ref, catalog_dir);
    out.au_module = parse_module_file(mpath, lie);
  } else {
    out.au_module = module_from_json(coeff.module_spec, lie, coeff.name);
  }
  return out;
}

std::vector<Int> pi1_from_catalog(const std::string& catalog_dir, const std::string& type,
                                  int rank, const std::string& isogeny) {
  if (catalog_dir.empty()) throw Error(ErrorKind::IoError, "no catalog directory available");
  Json table = load_json((fs::path(catalog_dir) / "pi1_table.json").string());
  for (const auto& e : table["entries"]) {
    if (e.value("type", "") == type && e.value("rank", -1) == rank &&
        e.value("isogeny", "") == isogeny)
      return factors_from_json(e["pi1"], "pi1_table.json");
  }
  throw Error(ErrorKind::ValidationError,
              "no pi1 table entry for type " + type + std::to_string(rank) + " (" + isogeny + ")");
}

Json cochain_to_json(const Cochain& c) {
  Json terms = Json::array();
  TupleIndex idx(c.g_dim, c.p);
  for (std::size_t r = 0; r < idx.count(); ++r)
    for (std::size_t s = 0; s < c.a_dim; ++s) {
      const Rational& v = c.coords[r * c.a_dim + s];
      if (v == 0) continue;
      Json t;
      t["tuple"] = idx.tuples()[r];
      t["component"] = s;
      t["value"] = rational_string(v);
      terms.push_back(std::move(t));
    }
  Json out;
  out["p"] = c.p;
  out["terms"] = std::move(terms);
  return out;
}

Json cohomology_to_json(const CohomologyResult& r) {
  Json out;
  out["p"] = r.p;
  out["dim"] = r.dim;
  out["z_dim"] = r.z_dim;
  out["b_dim"] = r.b_dim;
  Json reps = Json::array();
  for (const auto& c : r.representatives) reps.push_back(cochain_to_json(c));
  out["representatives"] = std::move(reps);
  return out;
}

Json ext_result_to_json(const ExtResult& r) {
  Json out;
  Json finite = Json::array();
  for (const auto& d : r.finite_part.invariant_factors()) finite.push_back(int_string(d));
  out["finite_part"] = std::move(finite);
  out["vector_part_dim"] = r.vector_part_dim;
  Json reps = Json::array();
  for (const auto& c : r.vector_representatives) reps.push_back(cochain_to_json(c));
  out["vector_representatives"] = std::move(reps);
  return out;
}

Json poly_cochain_to_json(const PolyCochain& c) {
  Json out;
  out["n"] = c.n;
  out["max_degree"] = c.max_degree;
  Json comps = Json::array();
  std::vector<std::string> names;
  for (int q = 0; q < c.n; ++q)
    for (std::size_t k = 1; k <= c.group_dim; ++k)
      names.push_back("g" + std::to_string(q) + "_" + std::to_string(k));
  for (const auto& p : c.components) comps.push_back(poly_string(p, names));
  out["components"] = std::move(comps);
  return out;
}

Json vanest_to_json(const VanEstReport& r) {
  Json out;
  out["p"] = r.p;
  out["max_degree"] = r.max_degree;
  out["group_h"] = r.group_h;
  out["lie_h"] = r.lie_h;
  out["stabilized"] = r.stabilized;
  out["match"] = r.match;
  Json hist = Json::array();
  for (const auto& [d, h] : r.history) {
    Json e;
    e["degree"] = d;
    e["h"] = h;
    hist.push_back(std::move(e));
  }
  out["history"] = std::move(hist);
  return out;
}

Json validation_to_json(const ValidationReport& r) {
  Json out;
  out["valid"] = r.ok();
  Json issues = Json::array();
  for (const auto& i : r.issues) {
    Json e;
    e["kind"] = error_kind_name(i.kind);
    e["detail"] = i.detail;
    issues.push_back(std::move(e));
  }
  out["issues"] = std::move(issues);
  return out;
}

Json lie_to_json(const LieFileData& lie) {
  Json out;
  out["schema"] = 1;
  out["kind"] = "lie-algebra";
  out["name"] = lie.name;
  out["dim"] = lie.algebra.dim();
  out["basis"] = lie.algebra.labels();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < lie.algebra.dim(); ++i)
    for (std::size_t j = i + 1; j < lie.algebra.dim(); ++j) {
      Json coeffs;
      for (std::size_t k = 0; k < lie.algebra.dim(); ++k)
        if (lie.algebra.c(i, j, k) != 0)
          coeffs[std::to_string(k)] = rational_string(lie.algebra.c(i, j, k));
      if (!coeffs.empty()) {
        Json br;
        br["i"] = i;
        br["j"] = j;
        br["coeffs"] = std::move(coeffs);
        brackets.push_back(std::move(br));
      }
    }
  out["brackets"] = std::move(brackets);
  if (lie.levi) {
    Json levi;
    levi["red"] = lie.levi->red_indices;
    levi["u"] = lie.levi->u_indices;
    out["levi"] = std::move(levi);
  }
  return out;
}

Json module_to_json(const LieModule& m, const std::string& algebra_name) {
  Json out;
  out["schema"] = 1;
  out["kind"] = "lie-module";
  out["algebra"] = algebra_name;
  out["dim"] = m.dim;
  bool trivial = true;
  for (const auto& a : m.action)
    if (!a.is_zero()) trivial = false;
  if (trivial) {
    out["action"] = "trivial";
    return out;
  }
  Json act = Json::array();
  for (const auto& a : m.action) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim; ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.dim; ++c) row.push_back(rational_string(a.at(r, c)));
      rows.push_back(std::move(row));
    }
    act.push_back(std::move(rows));
  }
  out["action"] = std::move(act);
  return out;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace algext
