// Command-line front end: load categories and representations from JSON, run
// any analysis, and emit human-readable or JSON reports.
//
// Exit codes: 0 success, 1 failed verdict (validation violations or a false
// weak Jordan-Holder check), 2 usage errors and malformed input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cellrep/based_category.hpp"
#include "cellrep/cells.hpp"
#include "cellrep/classify.hpp"
#include "cellrep/json_io.hpp"
#include "cellrep/matrix_rep.hpp"

namespace {

using namespace cellrep;
using nlohmann::json;

struct CommonOpts {
  std::string output = "-";
  std::string format;  // "human" or "json"; commands pick their default
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("-o,--output", opts.output, "output path, or - for stdout");
  cmd->add_option("--format", opts.format, "human or json")
      ->check(CLI::IsMember({"human", "json"}));
}

void write_output(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) fail(Errc::invalid_input, "cannot write " + path);
  out << text << "\n";
}

void emit(const json& j, const std::string& human, const CommonOpts& opts,
          const std::string& default_format) {
  const std::string format = opts.format.empty() ? default_format : opts.format;
  write_output(format == "json" ? j.dump(2) : human, opts.output);
}

// Inline JSON (starting with '[' or '{') or a file path.
json json_arg(const std::string& value, const std::string& what) {
  if (!value.empty() && (value[0] == '[' || value[0] == '{'))
    return parse_json(value, "<" + what + ">");
  return load_json_file(value);
}

BasedCategory load_category(const std::string& path) {
  return category_from_json(load_json_file(path));
}

// Commands that analyze a category refuse structurally broken input; the
// validation report is written in place of the requested one.
bool ensure_valid_category(const BasedCategory& cat, const CommonOpts& opts) {
  ValidationReport report = validate_category(cat);
  if (report.ok()) return true;
  std::ostringstream human;
  human << "input category is invalid (" << report.violations.size() << " violations):";
  for (const auto& v : report.violations) human << "\n  [" << v.rule << "] " << v.message;
  emit(to_json(report), human.str(), opts, "human");
  return false;
}

bool ensure_valid_rep(const MatrixRep& rep, const CommonOpts& opts) {
  if (!ensure_valid_category(rep.category(), opts)) return false;
  ValidationReport report = validate_rep(rep);
  if (report.ok()) return true;
  std::ostringstream human;
  human << "input representation is invalid (" << report.violations.size() << " violations):";
  for (const auto& v : report.violations) human << "\n  [" << v.rule << "] " << v.message;
  emit(to_json(report), human.str(), opts, "human");
  return false;
}

std::string render_multiset(const Multiset& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [name, count] : m) {
    if (!first) os << ", ";
    first = false;
    os << name << ": " << count;
  }
  os << "}";
  return os.str();
}

std::string render_cells(const CellStructure& cs) {
  std::ostringstream os;
  os << side_name(cs.side) << " cells (" << cs.cells.size() << "):";
  for (std::size_t i = 0; i < cs.cells.size(); ++i) {
    os << "\n  [" << i << "] {";
    for (std::size_t k = 0; k < cs.cells[i].size(); ++k)
      os << (k ? ", " : "") << cs.cells[i][k];
    os << "}";
  }
  if (!cs.cell_order.empty()) {
    os << "\norder:";
    for (const auto& [above, below] : cs.cell_order)
      os << " [" << above << "] > [" << below << "]";
  }
  return os.str();
}

std::string render_rep(const MatrixRep& rep) {
  std::ostringstream os;
  for (const auto& object : rep.category().objects()) {
    os << "object " << object << ":";
    const auto& labels = rep.ind(object);
    if (labels.empty()) os << " (none)";
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? ", " : " ") << labels[i];
    os << "\n";
  }
  for (const auto& m : rep.category().one_morphisms())
    os << "[" << m.name << "] = " << rep.matrix(m.name).to_string() << "\n";
  std::string out = os.str();
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

std::string render_category_summary(const BasedCategory& cat) {
  std::ostringstream os;
  os << cat.objects().size() << " object(s), " << cat.one_morphisms().size()
     << " 1-morphism(s):";
  for (const auto& m : cat.one_morphisms()) {
    os << "\n  " << m.name << " : " << m.dom << " -> " << m.cod;
    if (m.is_identity) os << " (identity)";
    if (cat.involution()) os << ", * -> " << cat.star(m.name);
  }
  return os.str();
}

int run_cli(int argc, char** argv) {
  CLI::App app{"exact cell structure and integer matrix representations of based categories"};
  app.require_subcommand(1);

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check the axioms of a category file");
  std::string validate_input;
  CommonOpts validate_opts;
  validate_cmd->add_option("--input", validate_input, "category JSON")->required();
  add_common(validate_cmd, validate_opts);
  int exit_code = 0;
  validate_cmd->callback([&] {
    BasedCategory cat = load_category(validate_input);
    ValidationReport report = validate_category(cat);
    std::ostringstream human;
    if (report.ok()) {
      human << "valid";
    } else {
      human << report.violations.size() << " violation(s):";
      for (const auto& v : report.violations) human << "\n  [" << v.rule << "] " << v.message;
    }
    emit(to_json(report), human.str(), validate_opts, "human");
    exit_code = report.ok() ? 0 : 1;
  });

  // compose
  auto* compose_cmd = app.add_subcommand("compose", "structure constants of F \xE2\x88\x98 G");
  std::string compose_input, compose_f, compose_g;
  CommonOpts compose_opts;
  compose_cmd->add_option("--input", compose_input, "category JSON")->required();
  compose_cmd->add_option("F", compose_f, "left 1-morphism")->required();
  compose_cmd->add_option("G", compose_g, "right 1-morphism")->required();
  add_common(compose_cmd, compose_opts);
  compose_cmd->callback([&] {
    BasedCategory cat = load_category(compose_input);
    if (!ensure_valid_category(cat, compose_opts)) {
      exit_code = 1;
      return;
    }
    Multiset result = cat.compose(compose_f, compose_g);
    json entry = json::object();
    for (const auto& [h, c] : result) entry[h] = c;
    emit(json{{"lhs", compose_f}, {"rhs", compose_g}, {"result", entry}},
         compose_f + " \xE2\x88\x98 " + compose_g + " = " + render_multiset(result),
         compose_opts, "human");
  });

  // build-group
  auto* group_cmd = app.add_subcommand("build-group", "group category from a multiplication table");
  std::string group_table;
  CommonOpts group_opts;
  group_cmd->add_option("--table", group_table, "table JSON (inline or path)")->required();
  add_common(group_cmd, group_opts);
  group_cmd->callback([&] {
    BasedCategory cat = build_group_category(multtable_from_json(json_arg(group_table, "table")));
    emit(to_json(cat), render_category_summary(cat), group_opts, "json");
  });

  // build-cartan
  auto* cartan_cmd =
      app.add_subcommand("build-cartan", "projective-functor category from Cartan data");
  std::string cartan_matrix, cartan_sigma;
  CommonOpts cartan_opts;
  cartan_cmd->add_option("--matrix", cartan_matrix, "Cartan matrix JSON (inline or path)")
      ->required();
  cartan_cmd->add_option("--sigma", cartan_sigma,
                         "Nakayama permutation of 0..n-1 as a JSON array (default identity)");
  add_common(cartan_cmd, cartan_opts);
  cartan_cmd->callback([&] {
    IntMatrix c = matrix_from_json(json_arg(cartan_matrix, "matrix"));
    std::vector<int> sigma(c.rows());
    for (int i = 0; i < c.rows(); ++i) sigma[i] = i;
    if (!cartan_sigma.empty())
      sigma = json_arg(cartan_sigma, "sigma").get<std::vector<int>>();
    BasedCategory cat = build_cartan_category(c, sigma);
    emit(to_json(cat), render_category_summary(cat), cartan_opts, "json");
  });

  // build-dihedral
  auto* dihedral_cmd =
      app.add_subcommand("build-dihedral", "dihedral Soergel category of order 2n");
  int dihedral_n = 4;
  CommonOpts dihedral_opts;
  dihedral_cmd->add_option("--n", dihedral_n, "half the group order (>= 2)")->required();
  add_common(dihedral_cmd, dihedral_opts);
  dihedral_cmd->callback([&] {
    BasedCategory cat = build_dihedral_soergel(dihedral_n);
    emit(to_json(cat), render_category_summary(cat), dihedral_opts, "json");
  });

  // cells
  auto* cells_cmd = app.add_subcommand("cells", "cell partition for a side");
  std::string cells_input, cells_side = "two-sided";
  CommonOpts cells_opts;
  cells_cmd->add_option("--input", cells_input, "category JSON")->required();
  cells_cmd->add_option("--side", cells_side, "left, right, or two-sided")
      ->check(CLI::IsMember({"left", "right", "two-sided"}));
  add_common(cells_cmd, cells_opts);
  cells_cmd->callback([&] {
    BasedCategory cat = load_category(cells_input);
    if (!ensure_valid_category(cat, cells_opts)) {
      exit_code = 1;
      return;
    }
    CellStructure cs = cell_structure(cat, side_from_name(cells_side));
    emit(to_json(cs), render_cells(cs), cells_opts, "human");
  });

  // strong-regularity
  auto* sr_cmd = app.add_subcommand("strong-regularity",
                                    "check the two-sided cell containing a 1-morphism");
  std::string sr_input, sr_member;
  CommonOpts sr_opts;
  sr_cmd->add_option("--input", sr_input, "category JSON")->required();
  sr_cmd->add_option("--member", sr_member, "any member of the two-sided cell")->required();
  add_common(sr_cmd, sr_opts);
  sr_cmd->callback([&] {
    BasedCategory cat = load_category(sr_input);
    if (!ensure_valid_category(cat, sr_opts)) {
      exit_code = 1;
      return;
    }
    CellStructure ts = cell_structure(cat, Side::two_sided);
    StrongRegularity result = is_strongly_regular(cat, ts.cell_containing(sr_member));
    std::ostringstream human;
    human << "strongly regular: " << (result.verdict ? "yes" : "no");
    if (result.comparable) {
      human << "\n  comparable " << result.comparable->side << " cells {";
      for (const auto& m : result.comparable->cell_a) human << m << " ";
      human << "} and {";
      for (const auto& m : result.comparable->cell_b) human << m << " ";
      human << "}";
    } else if (result.intersection) {
      human << "\n  left/right cell intersection of size "
            << result.intersection->intersection.size() << ": {";
      for (std::size_t i = 0; i < result.intersection->intersection.size(); ++i)
        human << (i ? ", " : "") << result.intersection->intersection[i];
      human << "}";
    }
    emit(to_json(result), human.str(), sr_opts, "human");
  });

  // numerical-condition
  auto* nc_cmd = app.add_subcommand("numerical-condition",
                                    "summand counts of F* \xE2\x88\x98 F on right cells");
  std::string nc_input, nc_member;
  bool nc_distinct = false;
  CommonOpts nc_opts;
  nc_cmd->add_option("--input", nc_input, "category JSON")->required();
  nc_cmd->add_option("--member", nc_member, "any member of the two-sided cell")->required();
  nc_cmd->add_flag("--distinct", nc_distinct, "count distinct summands instead of multiplicities");
  add_common(nc_cmd, nc_opts);
  nc_cmd->callback([&] {
    BasedCategory cat = load_category(nc_input);
    if (!ensure_valid_category(cat, nc_opts)) {
      exit_code = 1;
      return;
    }
    CellStructure ts = cell_structure(cat, Side::two_sided);
    NumericalCondition result =
        numerical_condition(cat, ts.cell_containing(nc_member), !nc_distinct);
    std::ostringstream human;
    human << "constant on right cells: " << (result.verdict ? "yes" : "no");
    for (const auto& [cell, value] : result.right_cell_values)
      human << "\n  right cell of " << cell << ": " << value;
    emit(to_json(result), human.str(), nc_opts, "human");
  });

  // cell-rep
  auto* cr_cmd = app.add_subcommand("cell-rep", "cell representation of a left cell");
  std::string cr_input, cr_member;
  CommonOpts cr_opts;
  cr_cmd->add_option("--input", cr_input, "category JSON")->required();
  cr_cmd->add_option("--member", cr_member, "any member of the left cell")->required();
  add_common(cr_cmd, cr_opts);
  cr_cmd->callback([&] {
    auto cat = std::make_shared<const BasedCategory>(load_category(cr_input));
    if (!ensure_valid_category(*cat, cr_opts)) {
      exit_code = 1;
      return;
    }
    CellStructure left = cell_structure(*cat, Side::left);
    MatrixRep rep = cell_rep(cat, left.cell_containing(cr_member));
    emit(to_json(rep), render_rep(rep), cr_opts, "json");
  });

  // principal-rep
  auto* pr_cmd = app.add_subcommand("principal-rep", "principal representation at an object");
  std::string pr_input, pr_object;
  CommonOpts pr_opts;
  pr_cmd->add_option("--input", pr_input, "category JSON")->required();
  pr_cmd->add_option("--object", pr_object, "object label (default: the unique object)");
  add_common(pr_cmd, pr_opts);
  pr_cmd->callback([&] {
    auto cat = std::make_shared<const BasedCategory>(load_category(pr_input));
    if (!ensure_valid_category(*cat, pr_opts)) {
      exit_code = 1;
      return;
    }
    std::string object = pr_object;
    if (object.empty()) {
      if (cat->objects().size() != 1)
        fail(Errc::invalid_input, "--object is required for multi-object categories");
      object = cat->objects().front();
    }
    MatrixRep rep = principal_rep(cat, object);
    emit(to_json(rep), render_rep(rep), pr_opts, "json");
  });

  // validate-rep
  auto* vr_cmd = app.add_subcommand("validate-rep", "check the axioms of a representation file");
  std::string vr_input;
  CommonOpts vr_opts;
  vr_cmd->add_option("--input", vr_input, "representation JSON")->required();
  add_common(vr_cmd, vr_opts);
  vr_cmd->callback([&] {
    std::filesystem::path path(vr_input);
    MatrixRep rep = rep_from_json(load_json_file(path), path.parent_path());
    ValidationReport cat_report = validate_category(rep.category());
    ValidationReport report = validate_rep(rep);
    report.violations.insert(report.violations.begin(), cat_report.violations.begin(),
                             cat_report.violations.end());
    std::ostringstream human;
    if (report.ok()) {
      human << "valid";
    } else {
      human << report.violations.size() << " violation(s):";
      for (const auto& v : report.violations) human << "\n  [" << v.rule << "] " << v.message;
    }
    emit(to_json(report), human.str(), vr_opts, "human");
    exit_code = report.ok() ? 0 : 1;
  });

  // jh
  auto* jh_cmd = app.add_subcommand("jh", "subquotients along a complete filtration");
  std::string jh_input;
  std::size_t jh_index = 0;
  CommonOpts jh_opts;
  jh_cmd->add_option("--input", jh_input, "representation JSON")->required();
  jh_cmd->add_option("--filtration", jh_index, "filtration index (default 0)");
  add_common(jh_cmd, jh_opts);
  jh_cmd->callback([&] {
    std::filesystem::path path(jh_input);
    MatrixRep rep = rep_from_json(load_json_file(path), path.parent_path());
    if (!ensure_valid_rep(rep, jh_opts)) {
      exit_code = 1;
      return;
    }
    std::vector<Filtration> filtrations = complete_filtrations(rep);
    if (jh_index >= filtrations.size())
      fail(Errc::invalid_input, "filtration index out of range (found " +
                                    std::to_string(filtrations.size()) + ")");
    ActionPreorder order = action_preorder(rep);
    std::vector<MatrixRep> subs = jh_subquotients(rep, filtrations[jh_index]);
    json steps = json::array();
    std::ostringstream human;
    human << filtrations.size() << " complete filtration(s); showing index " << jh_index;
    for (std::size_t t = 0; t < subs.size(); ++t) {
      steps.push_back({{"added_class", order.classes[filtrations[jh_index].added[t]]},
                       {"subquotient", to_json(subs[t], false)}});
      human << "\nstep " << t + 1 << " adds {";
      const auto& cls = order.classes[filtrations[jh_index].added[t]];
      for (std::size_t k = 0; k < cls.size(); ++k) human << (k ? ", " : "") << cls[k];
      human << "}:\n" << render_rep(subs[t]);
    }
    emit(json{{"filtration_count", filtrations.size()},
              {"filtration", jh_index},
              {"steps", steps}},
         human.str(), jh_opts, "human");
  });

  // weak-jh-verify
  auto* wjh_cmd = app.add_subcommand(
      "weak-jh-verify", "all complete filtrations yield the same subquotient multiset");
  std::string wjh_input;
  std::size_t wjh_cap = 10000;
  CommonOpts wjh_opts;
  wjh_cmd->add_option("--input", wjh_input, "representation JSON")->required();
  wjh_cmd->add_option("--cap", wjh_cap, "filtration enumeration cap before sampling");
  add_common(wjh_cmd, wjh_opts);
  wjh_cmd->callback([&] {
    std::filesystem::path path(wjh_input);
    MatrixRep rep = rep_from_json(load_json_file(path), path.parent_path());
    if (!ensure_valid_rep(rep, wjh_opts)) {
      exit_code = 1;
      return;
    }
    WeakJhResult result = weak_jh_verify(rep, wjh_cap);
    std::ostringstream human;
    human << "verdict: " << (result.verdict ? "pass" : "FAIL") << "\nfiltrations: "
          << result.filtration_count << (result.sampled ? " (sampled)" : "")
          << "\nsubquotient classes: " << result.subquotient_classes;
    emit(to_json(result), human.str(), wjh_opts, "human");
    exit_code = result.verdict ? 0 : 1;
  });

  // pf
  auto* pf_cmd = app.add_subcommand("pf", "exact dominant-eigenvalue facts for a matrix");
  std::string pf_matrix;
  long long pf_m = 1;
  CommonOpts pf_opts;
  pf_cmd->add_option("--matrix", pf_matrix, "matrix JSON (inline or path)")->required();
  pf_cmd->add_option("--m", pf_m, "claimed dominant eigenvalue")->required();
  add_common(pf_cmd, pf_opts);
  pf_cmd->callback([&] {
    IntMatrix a = matrix_from_json(json_arg(pf_matrix, "matrix"));
    auto [lo, hi] = column_sum_bounds(a);
    QuasiIdempotentResult qi = quasi_idempotent_check(a, pf_m);
    CorollaryResult cor = corollary_check(a, pf_m);
    json j{{"matrix", to_json(a)},
           {"m", pf_m},
           {"column_sums", {{"min", lo}, {"max", hi}}},
           {"rank", rank_exact(a)},
           {"quasi_idempotent", to_json(qi)},
           {"corollary", to_json(cor)}};
    std::ostringstream human;
    human << "column sums in [" << lo << ", " << hi << "], rank " << rank_exact(a)
          << "\nA\xC2\xB2 = " << pf_m << "A: " << (qi.holds ? "yes" : "no")
          << ", positive: " << (qi.positive ? "yes" : "no")
          << ", rank one: " << (qi.rank1 ? "yes" : "no")
          << "\ncolumn-coincidence corollary applicable: " << (cor.applicable ? "yes" : "no")
          << ", columns equal: " << (cor.columns_equal ? "yes" : "no");
    emit(j, human.str(), pf_opts, "human");
  });

  // classify-qi
  auto* qi_cmd =
      app.add_subcommand("classify-qi", "positive integer solutions of X\xC2\xB2 = mX");
  long long qi_m = 3;
  int qi_size_max = -1;
  CommonOpts qi_opts;
  qi_cmd->add_option("--m", qi_m, "the multiplier m")->required();
  qi_cmd->add_option("--size-max", qi_size_max, "largest matrix size (default m)");
  add_common(qi_cmd, qi_opts);
  qi_cmd->callback([&] {
    ClassificationReport report =
        classify_quasi_idempotent(qi_m, qi_size_max < 0 ? static_cast<int>(qi_m) : qi_size_max);
    std::ostringstream human;
    human << report.conclusion << ":";
    for (const auto& s : report.solutions) human << "\n  " << s.to_string();
    emit(to_json(report), human.str(), qi_opts, "human");
  });

  // classify-group
  auto* cg_cmd = app.add_subcommand(
      "classify-group", "transitive representations of a group category, one per subgroup class");
  std::string cg_table;
  CommonOpts cg_opts;
  cg_cmd->add_option("--table", cg_table, "group table JSON (inline or path)")->required();
  add_common(cg_cmd, cg_opts);
  cg_cmd->callback([&] {
    MultTable table = multtable_from_json(json_arg(cg_table, "table"));
    std::vector<GroupRepEntry> entries = classify_group_reps(table);
    json reps = json::array();
    std::ostringstream human;
    human << entries.size() << " transitive representation class(es):";
    for (const auto& entry : entries) {
      json subgroup = json::array();
      for (int g : entry.subgroup) subgroup.push_back(table.elements[g]);
      reps.push_back({{"subgroup", subgroup},
                      {"cosets", entry.coset_labels},
                      {"rep", to_json(entry.rep, false)}});
      human << "\n  subgroup {";
      for (std::size_t i = 0; i < entry.subgroup.size(); ++i)
        human << (i ? ", " : "") << table.elements[entry.subgroup[i]];
      human << "} -> " << entry.coset_labels.size() << " coset(s)";
    }
    emit(json{{"count", entries.size()}, {"representations", reps}}, human.str(), cg_opts,
         "human");
  });

  // b2-demo
  auto* b2_cmd = app.add_subcommand(
      "b2-demo", "which simple modules of the order-eight dihedral Weyl group categorify");
  CommonOpts b2_opts;
  add_common(b2_cmd, b2_opts);
  b2_cmd->callback([&] {
    B2Report report = b2_obstruction_pipeline();
    std::ostringstream human;
    human << "middle-cell relations: X\xC2\xB2 = " << report.x_sq_coeff
          << "\xE2\x80\xA2T, T\xC2\xB2 = " << report.t_sq_t_coeff << "\xE2\x80\xA2T + "
          << report.t_sq_x_coeff << "\xE2\x80\xA2X (mod top cell)\n";
    human << "matrix constraints: trace " << report.derived_trace << ", det "
          << report.derived_det << ", candidates:";
    for (const auto& x : report.x_candidates) human << "\n  " << x.to_string();
    human << "\nsurviving generator pairs:";
    for (const auto& [s, t] : report.surviving_pairs)
      human << "\n  [th_s] = " << s.to_string() << ", [th_t] = " << t.to_string();
    for (const auto& o : report.obstructions)
      human << "\nobstruction via th_" << o.generator << ": restricted action "
            << o.restricted_matrix.to_string()
            << " is equivalent to no cell representation (matrices "
            << o.cell_rep_matrices[0].to_string() << ", " << o.cell_rep_matrices[1].to_string()
            << ")";
    for (const auto& se : report.sign_eliminations)
      human << "\n" << se.module_name << " eliminated: " << se.check.reason;
    for (const auto& r : report.realizations)
      human << "\n" << r.module_name << " realized by the cell of " << r.left_cell_member
            << " ([th_s] = " << r.theta_s.to_string() << ", [th_t] = " << r.theta_t.to_string()
            << ")";
    human << "\n" << report.conclusion;
    emit(to_json(to_classification_report(report)), human.str(), b2_opts, "human");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
