#include "cellrep/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cellrep {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& source, const std::string& text,
                             std::size_t byte, const std::string& what) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  fail(Errc::invalid_input, source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                ": " + what);
}

const json& expect(const json& j, const char* key, const std::string& context) {
  auto it = j.find(key);
  if (it == j.end())
    fail(Errc::invalid_input, context + ": missing key \"" + std::string(key) + "\"");
  return *it;
}

}  // namespace

json parse_json(const std::string& text, const std::string& source_name) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(source_name, text, e.byte > 0 ? e.byte - 1 : 0, e.what());
  }
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::invalid_input, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path.string());
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) fail(Errc::invalid_input, "matrix: expected an array of rows");
  const int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(Errc::invalid_input, "matrix: ragged rows");
    for (int c = 0; c < cols; ++c) m(r, c) = row.at(c).get<long long>();
  }
  return m;
}

json to_json(const BasedCategory& cat) {
  json morphisms = json::array();
  for (const auto& m : cat.one_morphisms())
    morphisms.push_back(
        {{"name", m.name}, {"dom", m.dom}, {"cod", m.cod}, {"identity", m.is_identity}});
  json composition = json::object();
  for (const auto& [key, multiset] : cat.composition()) {
    if (multiset.empty()) continue;
    json entry = json::object();
    for (const auto& [h, c] : multiset) entry[h] = c;
    composition[key.first + "|" + key.second] = std::move(entry);
  }
  json out{{"objects", cat.objects()},
           {"one_morphisms", std::move(morphisms)},
           {"composition", std::move(composition)}};
  if (cat.involution()) {
    json inv = json::object();
    for (const auto& [f, g] : *cat.involution()) inv[f] = g;
    out["involution"] = std::move(inv);
  }
  if (!cat.metadata().empty()) out["metadata"] = cat.metadata();
  return out;
}

BasedCategory category_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::invalid_input, "category: expected an object");
  std::vector<std::string> objects = expect(j, "objects", "category").get<std::vector<std::string>>();

  std::vector<OneMorphism> morphisms;
  for (const json& m : expect(j, "one_morphisms", "category")) {
    OneMorphism om;
    om.name = expect(m, "name", "one_morphisms").get<std::string>();
    om.dom = expect(m, "dom", "one_morphisms").get<std::string>();
    om.cod = expect(m, "cod", "one_morphisms").get<std::string>();
    om.is_identity = m.value("identity", false);
    morphisms.push_back(std::move(om));
  }

  BasedCategory::CompositionMap composition;
  for (const auto& [key, entry] : expect(j, "composition", "category").items()) {
    auto bar = key.find('|');
    if (bar == std::string::npos)
      fail(Errc::invalid_input, "composition key \"" + key + "\" has no '|' separator");
    std::string f = key.substr(0, bar);
    std::string g = key.substr(bar + 1);
    if (g.find('|') != std::string::npos)
      fail(Errc::invalid_input, "composition key \"" + key + "\" has multiple '|' separators");
    Multiset multiset;
    for (const auto& [h, c] : entry.items()) multiset[h] = c.get<long long>();
    composition[{f, g}] = std::move(multiset);
  }

  std::optional<BasedCategory::Involution> involution;
  if (j.contains("involution")) {
    BasedCategory::Involution inv;
    for (const auto& [f, g] : j.at("involution").items()) inv[f] = g.get<std::string>();
    involution = std::move(inv);
  }

  json metadata = j.value("metadata", json::object());
  return BasedCategory(std::move(objects), std::move(morphisms), std::move(composition),
                       std::move(involution), std::move(metadata));
}

json to_json(const MultTable& t) { return json{{"elements", t.elements}, {"table", t.table}}; }

MultTable multtable_from_json(const json& j) {
  MultTable t;
  t.elements = expect(j, "elements", "table").get<std::vector<std::string>>();
  t.table = expect(j, "table", "table").get<std::vector<std::vector<int>>>();
  return t;
}

json to_json(const KLRingData& d) {
  json basis = json::object();
  for (const auto& [w, vec] : d.basis) basis[w] = vec;
  return json{{"ring", to_json(d.ring)},
              {"basis", std::move(basis)},
              {"opposite_composition", d.opposite_composition}};
}

KLRingData klringdata_from_json(const json& j) {
  KLRingData d;
  d.ring = multtable_from_json(expect(j, "ring", "kl-ring"));
  for (const auto& [w, vec] : expect(j, "basis", "kl-ring").items())
    d.basis[w] = vec.get<std::vector<long long>>();
  d.opposite_composition = j.value("opposite_composition", false);
  return d;
}

json to_json(const MatrixRep& rep, bool inline_category) {
  json ind = json::object();
  for (const auto& [object, labels] : rep.ind_objects()) ind[object] = labels;
  json matrices = json::object();
  for (const auto& [name, m] : rep.matrices()) matrices[name] = to_json(m);
  json out{{"ind_objects", std::move(ind)}, {"matrices", std::move(matrices)}};
  if (inline_category) out["category"] = to_json(rep.category());
  return out;
}

MatrixRep rep_from_json(const json& j, const std::filesystem::path& base_dir) {
  const json& cat_field = expect(j, "category", "representation");
  std::shared_ptr<const BasedCategory> category;
  if (cat_field.is_string()) {
    std::filesystem::path path = cat_field.get<std::string>();
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    category = std::make_shared<const BasedCategory>(category_from_json(load_json_file(path)));
  } else {
    category = std::make_shared<const BasedCategory>(category_from_json(cat_field));
  }

  MatrixRep::IndMap ind;
  for (const auto& [object, labels] : expect(j, "ind_objects", "representation").items())
    ind[object] = labels.get<std::vector<std::string>>();

  MatrixRep::MatrixMap matrices;
  for (const auto& [name, m] : expect(j, "matrices", "representation").items())
    matrices[name] = matrix_from_json(m);
  return MatrixRep(std::move(category), std::move(ind), std::move(matrices));
}

json to_json(const CellStructure& cs) {
  json order = json::array();
  for (const auto& [above, below] : cs.cell_order) order.push_back({above, below});
  return json{{"side", side_name(cs.side)}, {"cells", cs.cells}, {"order", std::move(order)}};
}

json to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"rule", v.rule}, {"message", v.message}});
  return json{{"valid", report.ok()}, {"violations", std::move(violations)}};
}

json to_json(const StrongRegularity& result) {
  json out{{"verdict", result.verdict}};
  if (result.comparable)
    out["witness"] = {{"kind", "comparable-cells"},
                      {"side", result.comparable->side},
                      {"cell_a", result.comparable->cell_a},
                      {"cell_b", result.comparable->cell_b}};
  else if (result.intersection)
    out["witness"] = {{"kind", "intersection"},
                      {"left_cell", result.intersection->left_cell},
                      {"right_cell", result.intersection->right_cell},
                      {"intersection", result.intersection->intersection}};
  else
    out["witness"] = nullptr;
  return out;
}

json to_json(const NumericalCondition& result) {
  json out{{"verdict", result.verdict},
           {"values", result.right_cell_values},
           {"per_morphism", result.per_morphism}};
  if (result.witness) out["witness"] = {result.witness->first, result.witness->second};
  return out;
}

json to_json(const AnnihilatorCheck& result) {
  json out{{"verdict", result.consistent}};
  if (result.witness) {
    out["witness"] = {result.witness->first, result.witness->second};
    out["reason"] = result.reason;
  }
  return out;
}

json to_json(const ActionPreorder& order) {
  json pairs = json::array();
  for (const auto& [above, below] : order.class_order) pairs.push_back({above, below});
  return json{{"classes", order.classes}, {"order", std::move(pairs)}};
}

json to_json(const WeakJhResult& result) {
  json out{{"verdict", result.verdict},
           {"sampled", result.sampled},
           {"filtrations", result.filtration_count},
           {"subquotient_classes", result.subquotient_classes},
           {"matchings", result.matchings}};
  if (result.counterexample)
    out["counterexample"] = {result.counterexample->first, result.counterexample->second};
  return out;
}

json to_json(const QuasiIdempotentResult& result) {
  json out{{"holds", result.holds}, {"positive", result.positive}, {"rank1", result.rank1}};
  out["pf_eigenvalue"] = result.pf_eigenvalue ? json(*result.pf_eigenvalue) : json(nullptr);
  return out;
}

json to_json(const CorollaryResult& result) {
  return json{{"applicable", result.applicable}, {"columns_equal", result.columns_equal}};
}

json to_json(const ClassificationReport& report) {
  json solutions = json::array();
  for (const auto& m : report.solutions) solutions.push_back(to_json(m));
  json eliminated = json::array();
  for (const auto& [m, reason] : report.eliminated)
    eliminated.push_back({{"matrix", to_json(m)}, {"reason", reason}});
  return json{{"solutions", std::move(solutions)},
              {"eliminated", std::move(eliminated)},
              {"conclusion", report.conclusion},
              {"parameters", report.parameters}};
}

}  // namespace cellrep
