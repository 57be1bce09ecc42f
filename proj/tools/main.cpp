// Batch CLI for the post-Lie structure toolkit. Exit codes: 0 all checks
// passed, 1 a check failed (witnesses printed), 2 input or constraint error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "postlie/catalog.hpp"
#include "postlie/ffsearch.hpp"
#include "postlie/io.hpp"
#include "postlie/symmetrize.hpp"

using nlohmann::ordered_json;
using namespace postlie;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw parse_error("cannot open file '" + path + "' for writing");
  out << text;
}

Field parse_field_flag(const std::string& spec) {
  if (spec == "Q") return Field::rationals();
  if (spec.size() > 1 && (spec[0] == 'F' || spec[0] == 'f'))
    return Field::prime(std::stol(spec.substr(1)));
  throw parse_error("bad --field value '" + spec + "' (use Q or F<p>)");
}

ordered_json witness_to_json(const Witness& w) {
  ordered_json j;
  j["identity"] = w.identity;
  ordered_json where = ordered_json::array();
  for (int i : w.where) where.push_back(i + 1);
  j["where"] = where;
  j["lhs"] = format_vec(w.lhs);
  j["rhs"] = format_vec(w.rhs);
  j["residual"] = format_vec(w.residual);
  return j;
}

ordered_json verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["ok"] = v.ok;
  j["failures"] = v.failure_count;
  ordered_json ws = ordered_json::array();
  for (const Witness& w : v.witnesses) ws.push_back(witness_to_json(w));
  j["witnesses"] = ws;
  return j;
}

void print_verdict(const std::string& label, const Verdict& v) {
  std::cout << label << ": " << (v.ok ? "ok" : "FAILED") << "\n";
  if (!v.ok) {
    std::cout << "  " << v.failure_count << " failing tuple(s); first "
              << v.witnesses.size() << ":\n";
    for (const Witness& w : v.witnesses)
      std::cout << "  " << format_witness(w) << "\n";
  }
}

StructureTensor tensor_or_zero(const std::optional<StructureTensor>& t,
                               const Field& f, int dim) {
  return t ? *t : StructureTensor(f, dim);
}

// Validates a raw tensor and reports instead of throwing.
bool validate_algebra(const std::string& label, const StructureTensor& c,
                      bool json_mode, ordered_json& out) {
  Verdict anti = antisymmetry_check(c);
  Verdict jac = anti.ok ? jacobi_verdict(c) : Verdict{};
  if (json_mode) {
    out[label + ".antisymmetry"] = verdict_to_json(anti);
    if (anti.ok) out[label + ".jacobi"] = verdict_to_json(jac);
  } else {
    print_verdict(label + ": antisymmetry", anti);
    if (anti.ok) print_verdict(label + ": jacobi", jac);
  }
  return anti.ok && jac.ok;
}

LieAlgebra require_algebra(const std::string& label, const StructureTensor& c) {
  Verdict anti = antisymmetry_check(c);
  if (!anti.ok)
    throw constraint_error(label + " is not antisymmetric: " +
                           format_witness(anti.witnesses.front()));
  Verdict jac = jacobi_verdict(c);
  if (!jac.ok)
    throw constraint_error(label + " fails the Jacobi identity: " +
                           format_witness(jac.witnesses.front()));
  return LieAlgebra::create(c);
}

std::string product_text(const BilinearProduct& p) {
  std::string out;
  for (int i = 0; i < p.dim(); ++i)
    for (int j = 0; j < p.dim(); ++j) {
      Vec v = p.pair(i, j);
      if (vec_is_zero(v)) continue;
      out += "  e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) +
             " = " + format_vec(v) + "\n";
    }
  if (out.empty()) out = "  (zero product)\n";
  return out;
}

ordered_json product_json(const BilinearProduct& p) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < p.dim(); ++i)
    for (int j = 0; j < p.dim(); ++j) {
      Vec v = p.pair(i, j);
      if (vec_is_zero(v)) continue;
      out.push_back(ordered_json::array({i + 1, j + 1, format_vec(v)}));
    }
  return out;
}

ordered_json subspace_json(const Subspace& s) {
  ordered_json basis = ordered_json::array();
  for (int i = 0; i < s.dim(); ++i) basis.push_back(format_vec(s.basis_vector(i)));
  ordered_json j;
  j["dim"] = s.dim();
  j["basis"] = basis;
  return j;
}

std::string subspace_text(const Subspace& s) {
  if (s.dim() == 0) return "0";
  std::string out = "span{";
  for (int i = 0; i < s.dim(); ++i) {
    if (i) out += ", ";
    out += format_vec(s.basis_vector(i));
  }
  return out + "}";
}

int cmd_check_lie(const std::string& file, bool json_mode) {
  InputDocument doc = parse_document(read_input(file));
  if (!doc.g && !doc.n)
    throw constraint_error("document has neither 'g' nor 'n' brackets");
  ordered_json out;
  out["command"] = "check-lie";
  bool ok = true;
  if (doc.g) ok = validate_algebra("g", *doc.g, json_mode, out) && ok;
  if (doc.n) ok = validate_algebra("n", *doc.n, json_mode, out) && ok;
  out["ok"] = ok;
  if (json_mode) std::cout << out.dump(2) << "\n";
  else std::cout << (ok ? "all brackets valid\n" : "invalid bracket data\n");
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_check_pa(const std::string& file, bool json_mode) {
  InputDocument doc = parse_document(read_input(file));
  LieAlgebra g = require_algebra("g", tensor_or_zero(doc.g, doc.field, doc.dim));
  LieAlgebra n = require_algebra("n", tensor_or_zero(doc.n, doc.field, doc.dim));
  BilinearProduct prod =
      doc.product ? *doc.product : BilinearProduct::zero(doc.field, doc.dim);
  Verdict v = check_pa(g, n, prod);
  if (json_mode) {
    ordered_json out;
    out["command"] = "check-pa";
    out["ok"] = v.ok;
    out["verdict"] = verdict_to_json(v);
    std::cout << out.dump(2) << "\n";
  } else {
    print_verdict("post-Lie axioms", v);
  }
  return v.ok ? kExitOk : kExitCheckFailed;
}

int cmd_check_cpa(const std::string& file, bool json_mode) {
  InputDocument doc = parse_document(read_input(file));
  const std::optional<StructureTensor>& t = doc.g ? doc.g : doc.n;
  if (!t) throw constraint_error("document has no bracket data");
  LieAlgebra g = require_algebra("algebra", *t);
  BilinearProduct prod =
      doc.product ? *doc.product : BilinearProduct::zero(doc.field, doc.dim);
  Verdict v = check_cpa(g, prod);
  if (json_mode) {
    ordered_json out;
    out["command"] = "check-cpa";
    out["ok"] = v.ok;
    out["verdict"] = verdict_to_json(v);
    std::cout << out.dump(2) << "\n";
  } else {
    print_verdict("commutative post-Lie axioms", v);
  }
  return v.ok ? kExitOk : kExitCheckFailed;
}

int cmd_check_lr(const std::string& file, bool json_mode) {
  InputDocument doc = parse_document(read_input(file));
  const std::optional<StructureTensor>& t = doc.n ? doc.n : doc.g;
  if (!t) throw constraint_error("document has no bracket data");
  LieAlgebra n = require_algebra("n", *t);
  BilinearProduct prod =
      doc.product ? *doc.product : BilinearProduct::zero(doc.field, doc.dim);
  Verdict v = check_lr(n, prod);
  if (json_mode) {
    ordered_json out;
    out["command"] = "check-lr";
    out["ok"] = v.ok;
    out["verdict"] = verdict_to_json(v);
    std::cout << out.dump(2) << "\n";
  } else {
    print_verdict("LR-structure axioms", v);
  }
  return v.ok ? kExitOk : kExitCheckFailed;
}

void analyze_algebra(const std::string& label, const LieAlgebra& a,
                     bool json_mode, ordered_json& out) {
  auto cls = a.nilpotency_class();
  auto series = a.lower_central_series();
  auto derived = a.derived_series();
  if (json_mode) {
    ordered_json j;
    ordered_json lc = ordered_json::array();
    for (const Subspace& s : series) lc.push_back(s.dim());
    ordered_json ds = ordered_json::array();
    for (const Subspace& s : derived) ds.push_back(s.dim());
    j["lower_central_dims"] = lc;
    j["derived_dims"] = ds;
    j["nilpotency_class"] = cls ? ordered_json(*cls) : ordered_json("not nilpotent");
    j["solvable"] = a.is_solvable();
    j["center"] = subspace_json(a.center());
    j["stem"] = a.is_stem();
    j["heisenberg"] = a.is_heisenberg();
    out[label] = j;
    return;
  }
  std::cout << label << ":\n  lower central series dims:";
  for (const Subspace& s : series) std::cout << " " << s.dim();
  std::cout << "\n  derived series dims:";
  for (const Subspace& s : derived) std::cout << " " << s.dim();
  std::cout << "\n  nilpotency class: "
            << (cls ? std::to_string(*cls) : std::string("not nilpotent"))
            << "\n  solvable: " << (a.is_solvable() ? "yes" : "no")
            << "\n  center: " << subspace_text(a.center())
            << "\n  stem: " << (a.is_stem() ? "yes" : "no")
            << "\n  Heisenberg: " << (a.is_heisenberg() ? "yes" : "no") << "\n";
}

int cmd_analyze(const std::string& file, bool json_mode) {
  InputDocument doc = parse_document(read_input(file));
  if (!doc.g && !doc.n)
    throw constraint_error("document has neither 'g' nor 'n' brackets");
  ordered_json out;
  out["command"] = "analyze";
  LieAlgebra g = require_algebra("g", tensor_or_zero(doc.g, doc.field, doc.dim));
  LieAlgebra n = require_algebra("n", tensor_or_zero(doc.n, doc.field, doc.dim));
  analyze_algebra("g", g, json_mode, out);
  analyze_algebra("n", n, json_mode, out);

  int exit_code = kExitOk;
  if (doc.product) {
    Verdict v = check_pa(g, n, *doc.product);
    if (json_mode) out["pa"] = verdict_to_json(v);
    else print_verdict("post-Lie axioms", v);
    if (v.ok) {
      PAPair pair = PAPair::create(g, n, *doc.product);
      Subspace al = ann_left(pair), ar = ann_right(pair), h = h0(pair);
      bool nil = all_left_mults_nilpotent(pair);
      if (json_mode) {
        out["ann_left"] = subspace_json(al);
        out["ann_right"] = subspace_json(ar);
        out["h0"] = subspace_json(h);
        out["ann_right_equals_h0"] = (ar == h);
        out["all_left_mults_nilpotent"] = nil;
      } else {
        std::cout << "pair:\n  Ann_L = " << subspace_text(al)
                  << "\n  Ann_R = " << subspace_text(ar)
                  << "\n  H0 = " << subspace_text(h)
                  << "\n  Ann_R == H0: " << ((ar == h) ? "yes" : "no")
                  << "\n  all left multiplications nilpotent: "
                  << (nil ? "yes" : "no") << "\n";
      }
    } else {
      exit_code = kExitCheckFailed;
    }
  }
  out["ok"] = exit_code == kExitOk;
  if (json_mode) std::cout << out.dump(2) << "\n";
  return exit_code;
}

int cmd_symmetrize(const std::string& file, const std::string& target,
                   bool json_mode) {
  InputDocument doc = parse_document(read_input(file));
  LieAlgebra g = require_algebra("g", tensor_or_zero(doc.g, doc.field, doc.dim));
  LieAlgebra n = require_algebra("n", tensor_or_zero(doc.n, doc.field, doc.dim));
  BilinearProduct prod =
      doc.product ? *doc.product : BilinearProduct::zero(doc.field, doc.dim);
  Verdict pa = check_pa(g, n, prod);
  if (!pa.ok)
    throw constraint_error("input is not a post-Lie pair: " +
                           format_witness(pa.witnesses.front()));
  PAPair pair = PAPair::create(g, n, prod);
  SymmetrizationOutcome outcome =
      target == "g" ? symmetrize_to_g(pair) : symmetrize_to_n(pair);
  ordered_json out;
  out["command"] = "symmetrize";
  out["target"] = target;
  out["ok"] = outcome.ok();
  if (outcome.ok()) {
    if (json_mode) {
      out["product"] = product_json(*outcome.product);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "symmetrized product is a commutative post-Lie structure on "
                << target << ":\n" << product_text(*outcome.product);
    }
    return kExitOk;
  }
  if (json_mode) {
    out["condition"] = verdict_to_json(outcome.condition);
    std::cout << out.dump(2) << "\n";
  } else {
    print_verdict("compatibility condition", outcome.condition);
  }
  return kExitCheckFailed;
}

int cmd_grading(const std::string& file, bool json_mode) {
  InputDocument doc = parse_document(read_input(file));
  const std::optional<StructureTensor>& t = doc.g ? doc.g : doc.n;
  if (!t) throw constraint_error("document has no bracket data");
  if (!doc.grading) throw constraint_error("document has no 'grading' field");
  LieAlgebra a = require_algebra("algebra", *t);
  Grading gr = make_grading(a, *doc.grading);
  Verdict v = grading_check(gr);
  ordered_json out;
  out["command"] = "grading";
  out["ok"] = v.ok;
  if (!json_mode) print_verdict("grading compatibility", v);
  else out["compatibility"] = verdict_to_json(v);
  if (v.ok) {
    Support x = support(gr);
    bool free = is_arithmetically_free(x);
    out["support_size"] = x.size();
    out["arithmetically_free"] = free;
    if (!json_mode)
      std::cout << "support size: " << x.size()
                << "\narithmetically free: " << (free ? "yes" : "no") << "\n";
    if (free) {
      mpz_class bound = nilpotency_class_bound(x);
      auto cls = a.nilpotency_class();
      out["class_bound"] = bound.get_str();
      out["nilpotency_class"] =
          cls ? ordered_json(*cls) : ordered_json("not nilpotent");
      if (!json_mode) {
        std::cout << "class bound: " << bound.get_str() << "\n";
        std::cout << "nilpotency class: "
                  << (cls ? std::to_string(*cls) : std::string("not nilpotent"))
                  << "\n";
      }
    }
  }
  if (json_mode) std::cout << out.dump(2) << "\n";
  return v.ok ? kExitOk : kExitCheckFailed;
}

int cmd_catalog_list(bool json_mode) {
  if (json_mode) {
    ordered_json out = ordered_json::array();
    for (const CatalogEntry& e : catalog_entries()) {
      ordered_json j;
      j["name"] = e.name;
      j["kind"] = e.kind;
      j["params"] = e.params;
      j["constraints"] = e.constraints;
      j["description"] = e.description;
      out.push_back(j);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  for (const CatalogEntry& e : catalog_entries()) {
    std::cout << e.name << " (" << e.kind << ")";
    if (!e.params.empty()) {
      std::cout << " params:";
      for (const std::string& p : e.params) std::cout << " " << p;
    }
    if (!e.constraints.empty()) std::cout << " [" << e.constraints << "]";
    std::cout << "\n    " << e.description << "\n";
  }
  return kExitOk;
}

int cmd_catalog_build(const std::string& name,
                      const std::vector<std::string>& params,
                      const std::string& field_spec, const std::string& out_file) {
  Field f = parse_field_flag(field_spec);
  std::map<std::string, std::string> kv;
  for (const std::string& p : params) {
    auto eq = p.find('=');
    if (eq == std::string::npos)
      throw parse_error("--param expects k=v, got '" + p + "'");
    kv[p.substr(0, eq)] = p.substr(eq + 1);
  }
  BuiltObject built = catalog_build(name, f, kv);
  InputDocument doc = built.pair ? document_from_pair(*built.pair)
                                 : document_from_algebra(*built.algebra);
  write_output(out_file, serialize_document(doc));
  return kExitOk;
}

int cmd_ffsearch(long p, const std::string& pair_name,
                 std::optional<std::size_t> limit, int jobs, bool json_mode) {
  Field f = Field::prime(p);
  if (pair_name == "dim2") {
    SearchSpec spec{LieAlgebra::abelian(f, 2), LieAlgebra::solvable_r2(f),
                    SearchStrategy::raw_tensor, std::nullopt, limit, jobs};
    SearchResult r = enumerate_pa(spec);
    if (json_mode) {
      ordered_json out;
      out["command"] = "ffsearch";
      out["pair"] = "dim2";
      out["p"] = p;
      out["candidates"] = r.candidates;
      out["found"] = r.found.size();
      out["truncated"] = r.truncated;
      out["ok"] = true;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "dim-2 raw enumeration over F" << p << ": " << r.candidates
                << " candidates, " << r.found.size() << " post-Lie structures"
                << (r.truncated ? " (truncated)" : "") << "\n";
    }
    return kExitOk;
  }
  if (pair_name != "heis3")
    throw constraint_error("--pair must be heis3 or dim2");
  if (limit) {
    SearchSpec spec{LieAlgebra::heisenberg(f, 1), LieAlgebra::heisenberg(f, 1),
                    SearchStrategy::hom_through_derivations, std::nullopt, limit,
                    jobs};
    SearchResult r = enumerate_pa(spec);
    if (json_mode) {
      ordered_json out;
      out["command"] = "ffsearch";
      out["pair"] = "heis3";
      out["p"] = p;
      out["candidates"] = r.candidates;
      out["found"] = r.found.size();
      out["truncated"] = r.truncated;
      out["ok"] = true;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "(heis3, heis3) enumeration over F" << p << ": "
                << r.found.size() << " structures"
                << (r.truncated ? " (truncated)" : "") << "\n";
    }
    return kExitOk;
  }
  CorroborationReport rep = corroborate_heisenberg_pairs(p, jobs);
  if (json_mode) {
    ordered_json out;
    out["command"] = "ffsearch";
    out["pair"] = "heis3";
    out["p"] = rep.p;
    out["candidates"] = rep.candidates;
    out["found"] = rep.found;
    out["left_rule_violations"] = rep.left_rule_violations;
    out["nilpotency_violations"] = rep.nilpotency_violations;
    out["triple_violations"] = rep.triple_violations;
    out["symmetrization_violations"] = rep.symmetrization_violations;
    out["invariant_violations"] = rep.invariant_violations;
    out["family_instances"] = rep.family_instances;
    out["family_missing"] = rep.family_missing;
    out["details"] = rep.details;
    out["ok"] = rep.ok();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "(heis3, heis3) over F" << rep.p << ": " << rep.candidates
              << " candidate homs, " << rep.found << " structures found\n"
              << "  L(e3) rule violations:      " << rep.left_rule_violations << "\n"
              << "  nilpotency violations:      " << rep.nilpotency_violations << "\n"
              << "  triple identity violations: " << rep.triple_violations << "\n"
              << "  symmetrization violations:  " << rep.symmetrization_violations << "\n"
              << "  invariant violations:       " << rep.invariant_violations << "\n"
              << "  family membership: " << (rep.family_instances - rep.family_missing)
              << "/" << rep.family_instances << " present\n";
    for (const std::string& dline : rep.details) std::cout << "  ! " << dline << "\n";
    std::cout << (rep.ok() ? "corroboration clean\n" : "VIOLATIONS FOUND\n");
  }
  return rep.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for post-Lie algebra structures"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable output");

  std::string file;
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input document (JSON); '-' or omitted = stdin");
  };

  auto* c_lie = app.add_subcommand("check-lie", "validate bracket tensors");
  add_file(c_lie);
  auto* c_pa = app.add_subcommand("check-pa", "check the post-Lie axioms");
  add_file(c_pa);
  auto* c_cpa = app.add_subcommand("check-cpa", "check the commutative post-Lie axioms");
  add_file(c_cpa);
  auto* c_lr = app.add_subcommand("check-lr", "check the LR-structure axioms");
  add_file(c_lr);
  auto* c_an = app.add_subcommand("analyze", "series, center, annihilators, nilpotency");
  add_file(c_an);

  std::string target = "g";
  auto* c_sym = app.add_subcommand("symmetrize", "run the symmetrization pipeline");
  add_file(c_sym);
  c_sym->add_option("--target", target, "g or n")
      ->check(CLI::IsMember({"g", "n"}))
      ->required();

  auto* c_gr = app.add_subcommand("grading", "grading compatibility and class bound");
  add_file(c_gr);

  auto* c_cat = app.add_subcommand("catalog", "parameterized example constructors");
  auto* c_cat_list = c_cat->add_subcommand("list", "list catalog entries");
  auto* c_cat_build = c_cat->add_subcommand("build", "build a catalog entry");
  std::string entry_name, field_spec = "Q", out_file;
  std::vector<std::string> param_kv;
  c_cat_build->add_option("name", entry_name, "entry name")->required();
  c_cat_build->add_option("--param", param_kv, "parameter k=v (repeatable)");
  c_cat_build->add_option("--field", field_spec, "Q (default) or F<p>");
  c_cat_build->add_option("-o,--output", out_file, "output file (default stdout)");

  long prime = 3;
  std::string pair_name = "heis3";
  std::optional<std::size_t> limit;
  std::size_t limit_raw = 0;
  int jobs = 1;
  auto* c_ff = app.add_subcommand("ffsearch", "finite-field enumeration");
  c_ff->add_option("--p", prime, "odd prime field size")->required();
  c_ff->add_option("--pair", pair_name, "heis3 or dim2")
      ->check(CLI::IsMember({"heis3", "dim2"}));
  auto* limit_opt = c_ff->add_option("--limit", limit_raw, "cap on found structures");
  c_ff->add_option("--jobs", jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_lie->parsed()) return cmd_check_lie(file, json_mode);
    if (c_pa->parsed()) return cmd_check_pa(file, json_mode);
    if (c_cpa->parsed()) return cmd_check_cpa(file, json_mode);
    if (c_lr->parsed()) return cmd_check_lr(file, json_mode);
    if (c_an->parsed()) return cmd_analyze(file, json_mode);
    if (c_sym->parsed()) return cmd_symmetrize(file, target, json_mode);
    if (c_gr->parsed()) return cmd_grading(file, json_mode);
    if (c_cat->parsed()) {
      if (c_cat_list->parsed()) return cmd_catalog_list(json_mode);
      if (c_cat_build->parsed())
        return cmd_catalog_build(entry_name, param_kv, field_spec, out_file);
      std::cerr << "catalog requires a subcommand (list | build)\n";
      return kExitInputError;
    }
    if (c_ff->parsed()) {
      if (limit_opt->count() > 0) limit = limit_raw;
      return cmd_ffsearch(prime, pair_name, limit, jobs, json_mode);
    }
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const constraint_error& e) {
    std::cerr << "constraint error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const hypothesis_error& e) {
    std::cerr << "hypothesis error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const unknown_entry_error& e) {
    std::cerr << "unknown entry: " << e.what() << "\n";
    return kExitInputError;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
