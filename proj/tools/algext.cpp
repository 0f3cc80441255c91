#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "algext/formats.hpp"

using namespace algext;
namespace fs = std::filesystem;

namespace {

struct RunContext {
  std::string catalog;
  std::string out_path;
  int jobs = 1;
  bool emit_timing = false;
  std::vector<std::string> command;            // semantic echo, no execution flags
  std::vector<std::pair<std::string, std::string>> inputs;  // (path, hash)

  std::string resolve(const std::string& path) {
    std::string full = resolve_input(path, catalog);
    std::string bytes = read_file(full);
    inputs.push_back({path, fnv1a64_hex(bytes)});
    return full;
  }
};

void emit(RunContext& ctx, const Json& result, std::chrono::steady_clock::time_point started) {
  Json env;
  env["schema"] = 1;
  env["tool"] = "algext";
  env["command"] = ctx.command;
  Json inputs = Json::array();
  for (const auto& [p, h] : ctx.inputs) {
    Json e;
    e["path"] = p;
    e["fnv1a64"] = h;
    inputs.push_back(std::move(e));
  }
  env["inputs"] = std::move(inputs);
  env["result"] = result;
  if (ctx.emit_timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    env["timing"] = ms;
  } else {
    env["timing"] = nullptr;
  }
  std::string text = env.dump(2) + "\n";
  if (ctx.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(ctx.out_path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + ctx.out_path);
    out << text;
  }
}

std::vector<std::size_t> parse_index_csv(const std::string& csv, std::size_t bound) {
  std::vector<std::size_t> out;
  if (csv.empty()) return out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t v = std::stoul(tok);
      if (v >= bound) throw std::out_of_range("index");
      out.push_back(v);
    } catch (...) {
      throw Error(ErrorKind::ParseError, "bad index list: " + csv);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

LeviPair levi_from_flags(const LieFileData& lie, const std::string& red_csv, bool red_from_file) {
  if (!red_csv.empty()) {
    LeviPair pair;
    pair.g = lie.algebra;
    pair.red_indices = parse_index_csv(red_csv, lie.algebra.dim());
    std::vector<bool> in_red(lie.algebra.dim(), false);
    for (auto i : pair.red_indices) in_red[i] = true;
    for (std::size_t i = 0; i < lie.algebra.dim(); ++i)
      if (!in_red[i]) pair.u_indices.push_back(i);
    validate_levi_pair(pair).require();
    return pair;
  }
  if (red_from_file) {
    if (!lie.levi)
      throw Error(ErrorKind::ValidationError, "the lie file carries no levi annotation");
    return *lie.levi;
  }
  throw Error(ErrorKind::ValidationError, "specify --red or --red-from-file");
}

int run_validate(RunContext& ctx, const std::string& lie_path, const std::string& module_path,
                 const std::string& group_path, const std::string& coeff_path,
                 std::chrono::steady_clock::time_point started) {
  Json checks = Json::array();
  bool all_ok = true;
  auto record = [&](const std::string& path, const std::string& kind,
                    const std::function<void()>& run) {
    Json e;
    e["path"] = path;
    e["kind"] = kind;
    try {
      run();
      e["valid"] = true;
      e["issues"] = Json::array();
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::ParseError || err.kind() == ErrorKind::IoError) throw;
      all_ok = false;
      e["valid"] = false;
      Json issue;
      issue["kind"] = error_kind_name(err.kind());
      issue["detail"] = err.what();
      e["issues"] = Json::array({issue});
    }
    checks.push_back(std::move(e));
  };

  std::optional<LieFileData> lie;
  if (!lie_path.empty()) {
    std::string full = ctx.resolve(lie_path);
    record(lie_path, "lie-algebra", [&] { lie = parse_lie_file(full); });
  }
  if (!module_path.empty()) {
    if (!lie || !lie.has_value())
      throw Error(ErrorKind::ValidationError, "--module requires a valid --lie");
    std::string full = ctx.resolve(module_path);
    record(module_path, "lie-module", [&] { parse_module_file(full, *lie); });
  }
  if (!group_path.empty()) {
    std::string full = ctx.resolve(group_path);
    GroupFileKind kind = group_file_kind(full);
    if (kind == GroupFileKind::Algebraic)
      record(group_path, "algebraic-group", [&] { parse_alg_group_file(full, ctx.catalog); });
    else if (kind == GroupFileKind::Poly)
      record(group_path, "poly-group", [&] { parse_poly_group_file(full); });
    else
      record(group_path, "coefficient-group", [&] { parse_coeff_file(full); });
  }
  if (!coeff_path.empty()) {
    std::string full = ctx.resolve(coeff_path);
    record(coeff_path, "coefficient-group", [&] { parse_coeff_file(full); });
  }

  Json result;
  result["checks"] = std::move(checks);
  result["valid"] = all_ok;
  emit(ctx, result, started);
  return all_ok ? 0 : 1;
}

int run_catalog(RunContext& ctx, bool check, std::chrono::steady_clock::time_point started) {
  if (ctx.catalog.empty()) throw Error(ErrorKind::IoError, "no catalog directory found");
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(ctx.catalog))
    if (e.is_regular_file()) files.push_back(e.path().filename().string());
  std::sort(files.begin(), files.end());

  // algebras first so module files can resolve their references
  std::map<std::string, LieFileData> algebras;
  for (const auto& f : files)
    if (f.size() > 4 && f.substr(f.size() - 4) == ".lie") {
      LieFileData lie = parse_lie_file((fs::path(ctx.catalog) / f).string());
      algebras[lie.name] = std::move(lie);
    }

  Json listing = Json::array();
  std::vector<Json> entries(files.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      const std::string& f = files[i];
      std::string full = (fs::path(ctx.catalog) / f).string();
      Json e;
      e["file"] = f;
      std::string ext = f.size() > 4 ? f.substr(f.find_last_of('.')) : "";
      try {
        if (ext == ".lie") {
          parse_lie_file(full);
          e["kind"] = "lie-algebra";
        } else if (ext == ".mod") {
          Json j = Json::parse(read_file(full));
          std::string alg = j.value("algebra", "");
          auto it = algebras.find(alg);
          if (it == algebras.end())
            throw Error(ErrorKind::ValidationError, f + ": unknown algebra \"" + alg + "\"");
          parse_module_file(full, it->second);
          e["kind"] = "lie-module";
        } else if (ext == ".grp") {
          GroupFileKind kind = group_file_kind(full);
          if (kind == GroupFileKind::Algebraic) {
            parse_alg_group_file(full, ctx.catalog);
            e["kind"] = "algebraic-group";
          } else if (kind == GroupFileKind::Poly) {
            parse_poly_group_file(full);
            e["kind"] = "poly-group";
          } else {
            parse_coeff_file(full);
            e["kind"] = "coefficient-group";
          }
        } else {
          e["kind"] = "data";
        }
        if (check) e["valid"] = true;
      } catch (const Error& err) {
        if (!check) throw;
        e["valid"] = false;
        e["error"] = err.what();
        failed = true;
      }
      entries[i] = std::move(e);
    }
  };
  if (check && ctx.jobs > 1) {
    std::vector<std::thread> pool;
    for (int i = 0; i < ctx.jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  } else {
    worker();
  }
  for (auto& e : entries) listing.push_back(std::move(e));

  Json result;
  result["catalog_dir"] = ctx.catalog;
  result["files"] = std::move(listing);
  if (check) result["valid"] = !failed.load();
  emit(ctx, result, started);
  return (check && failed) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  auto started = std::chrono::steady_clock::now();
  RunContext ctx;

  CLI::App app{"exact extension classifier and cohomology calculator for algebraic groups"};
  app.require_subcommand(1);
  app.add_option("--catalog", ctx.catalog, "catalog directory (default: ALGEXT_CATALOG or built-in)");
  app.add_option("--out", ctx.out_path, "write the result file here instead of stdout");
  app.add_option("--jobs", ctx.jobs, "parallel workers for independent computations");
  app.add_flag("--emit-timing", ctx.emit_timing, "fill the timing field (breaks byte determinism)");

  std::string lie_path, module_path, group_path, coeff_path, red_csv;
  bool red_from_file = false, check = false;
  int p = 0;
  unsigned max_degree = 4;

  auto* validate = app.add_subcommand("validate", "validate input files");
  validate->add_option("--lie", lie_path, "lie algebra file");
  validate->add_option("--module", module_path, "module file (needs --lie)");
  validate->add_option("--group", group_path, "group file of any kind");
  validate->add_option("--coeff", coeff_path, "coefficient group file");

  auto* coh = app.add_subcommand("cohomology", "Lie algebra cohomology H^p(g, a)");
  coh->add_option("--lie", lie_path, "lie algebra file")->required();
  coh->add_option("--module", module_path, "coefficient module file")->required();
  coh->add_option("--p", p, "degree")->required();

  auto* rel = app.add_subcommand("relative", "relative Lie algebra cohomology H^p(g, red, a)");
  rel->add_option("--lie", lie_path, "lie algebra file")->required();
  rel->add_option("--module", module_path, "coefficient module file")->required();
  rel->add_option("--p", p, "degree")->required();
  rel->add_option("--red", red_csv, "comma-separated basis indices of the reductive part");
  rel->add_flag("--red-from-file", red_from_file, "take the levi split from the lie file");

  auto* ext = app.add_subcommand("ext", "classify extensions of the group by the coefficient group");
  ext->add_option("--group", group_path, "algebraic group file")->required();
  ext->add_option("--coeff", coeff_path, "coefficient group file")->required();

  auto* vanest = app.add_subcommand("vanest", "compare truncated group cohomology with the Lie side");
  vanest->add_option("--group", group_path, "polynomial group file")->required();
  vanest->add_option("--module", module_path, "coefficient module file")->required();
  vanest->add_option("--p", p, "degree")->required();
  vanest->add_option("--max-degree", max_degree, "polynomial degree bound")->required();

  auto* cat = app.add_subcommand("catalog", "list (and optionally validate) the catalog");
  cat->add_flag("--check", check, "validate every catalog file");

  // global flags may appear after the subcommand
  for (auto* sc : {validate, coh, rel, ext, vanest, cat}) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ctx.catalog.empty()) ctx.catalog = locate_catalog(argv[0]);

    if (app.got_subcommand(validate)) {
      ctx.command = {"validate"};
      for (const auto& [flag, val] :
           std::vector<std::pair<std::string, std::string>>{{"--lie", lie_path},
                                                            {"--module", module_path},
                                                            {"--group", group_path},
                                                            {"--coeff", coeff_path}})
        if (!val.empty()) {
          ctx.command.push_back(flag);
          ctx.command.push_back(val);
        }
      return run_validate(ctx, lie_path, module_path, group_path, coeff_path, started);
    }

    if (app.got_subcommand(coh)) {
      ctx.command = {"cohomology", "--lie", lie_path, "--module", module_path, "--p",
                     std::to_string(p)};
      LieFileData lie = parse_lie_file(ctx.resolve(lie_path));
      LieModule mod = parse_module_file(ctx.resolve(module_path), lie);
      emit(ctx, cohomology_to_json(cohomology(p, lie.algebra, mod)), started);
      return 0;
    }

    if (app.got_subcommand(rel)) {
      ctx.command = {"relative", "--lie", lie_path, "--module", module_path, "--p",
                     std::to_string(p)};
      if (!red_csv.empty()) {
        ctx.command.push_back("--red");
        ctx.command.push_back(red_csv);
      } else if (red_from_file) {
        ctx.command.push_back("--red-from-file");
      }
      LieFileData lie = parse_lie_file(ctx.resolve(lie_path));
      LieModule mod = parse_module_file(ctx.resolve(module_path), lie);
      LeviPair pair = levi_from_flags(lie, red_csv, red_from_file);
      emit(ctx, cohomology_to_json(relative_cohomology(p, pair, mod)), started);
      return 0;
    }

    if (app.got_subcommand(ext)) {
      ctx.command = {"ext", "--group", group_path, "--coeff", coeff_path};
      AlgGroupFileData group = parse_alg_group_file(ctx.resolve(group_path), ctx.catalog);
      CoeffFileData coeff_file = parse_coeff_file(ctx.resolve(coeff_path));
      CoeffGroupData coeff = instantiate_coeff(coeff_file, group.lie, ctx.catalog);
      emit(ctx, ext_result_to_json(ext_alg(group.data, coeff)), started);
      return 0;
    }

    if (app.got_subcommand(vanest)) {
      ctx.command = {"vanest",      "--group",     group_path, "--module", module_path,
                     "--p",         std::to_string(p),         "--max-degree",
                     std::to_string(max_degree)};
      PolyGroupFileData group = parse_poly_group_file(ctx.resolve(group_path));
      LieFileData lie{group.lie_name, lie_algebra_of(group.group), std::nullopt};
      LieModule mod = parse_module_file(ctx.resolve(module_path), lie);
      PolyAction act =
          group.action ? *group.action : PolyAction::trivial(mod.dim, group.group.dim);
      if (act.a_dim != mod.dim)
        throw Error(ErrorKind::ValidationError,
                    "module dimension does not match the polynomial action");
      LieModule derived = differentiate_action(group.group, act);
      for (std::size_t i = 0; i < lie.algebra.dim(); ++i)
        if (!(derived.action[i] == mod.action[i]))
          throw Error(ErrorKind::ValidationError,
                      "module does not match the differentiated polynomial action");
      VanEstReport rep = vanest_compare(group.group, act, p, max_degree, ctx.jobs);
      emit(ctx, vanest_to_json(rep), started);
      require_match(rep);
      return 0;
    }

    if (app.got_subcommand(cat)) {
      ctx.command = {"catalog"};
      if (check) ctx.command.push_back("--check");
      return run_catalog(ctx, check, started);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::IoError:
        return 3;
      case ErrorKind::Mismatch:
      case ErrorKind::InjectivityFailure:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
