#include "cellrep/cells.hpp"

#include <algorithm>
#include <set>

#include "cellrep/poset.hpp"

namespace cellrep {

const char* side_name(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two-sided";
  }
  return "?";
}

Side side_from_name(const std::string& name) {
  if (name == "left") return Side::left;
  if (name == "right") return Side::right;
  if (name == "two-sided" || name == "two_sided" || name == "j") return Side::two_sided;
  fail(Errc::invalid_input, "unknown side: " + name);
}

int CellStructure::cell_index_of(const std::string& morphism) const {
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i] == morphism) return cell_of[i];
  fail(Errc::invalid_input, "unknown 1-morphism: " + morphism);
}

const std::vector<std::string>& CellStructure::cell_containing(const std::string& morphism) const {
  return cells[cell_index_of(morphism)];
}

bool CellStructure::cell_geq(int above, int below) const {
  if (above == below) return true;
  return std::find(cell_order.begin(), cell_order.end(), std::make_pair(above, below)) !=
         cell_order.end();
}

CellStructure cell_structure(const BasedCategory& cat, Side side) {
  const auto& morphisms = cat.one_morphisms();
  const int n = static_cast<int>(morphisms.size());
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& m : morphisms) names.push_back(m.name);

  std::vector<std::vector<bool>> one_step(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) one_step[i][i] = true;

  auto mark = [&](const std::string& above, const std::string& below) {
    one_step[cat.morphism_index(above)][cat.morphism_index(below)] = true;
  };

  if (side == Side::left || side == Side::right) {
    // Every stored entry c_{H,F}^G > 0 says G >= F on the left (resp. the
    // symmetric reading on the right).
    for (const auto& [key, multiset] : cat.composition()) {
      const auto& [h, f] = key;
      for (const auto& [g, c] : multiset) {
        (void)c;
        if (side == Side::left)
          mark(g, f);
        else
          mark(g, h);
      }
    }
  } else {
    for (const auto& f : morphisms) {
      // supp(H ∘ (F ∘ K)) over all H, K, including identities.
      for (const auto& k : morphisms) {
        if (f.dom != k.cod) continue;
        Multiset mid = cat.compose(f.name, k.name);
        for (const auto& [x, cx] : mid) {
          (void)cx;
          for (const auto& h : morphisms) {
            if (h.dom != cat.morphism(x).cod) continue;
            for (const auto& [g, cg] : cat.compose(h.name, x)) {
              (void)cg;
              mark(g, f.name);
            }
          }
        }
      }
    }
  }

  detail::PreorderAnalysis analysis = detail::analyze_preorder(one_step, names);
  CellStructure out;
  out.side = side;
  out.morphisms = std::move(names);
  out.geq = std::move(analysis.geq);
  out.cell_of = std::move(analysis.class_of);
  out.cells.reserve(analysis.classes.size());
  for (const auto& cls : analysis.classes) {
    std::vector<std::string> members;
    members.reserve(cls.size());
    for (int i : cls) members.push_back(out.morphisms[i]);
    out.cells.push_back(std::move(members));
  }
  const int k = static_cast<int>(out.cells.size());
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && analysis.class_geq[a][b]) out.cell_order.emplace_back(a, b);
  return out;
}

namespace {

std::set<std::string> as_set(const std::vector<std::string>& v) {
  return std::set<std::string>(v.begin(), v.end());
}

// Cells of `structure` whose members lie inside the given two-sided cell.
std::vector<int> cells_inside(const CellStructure& structure, const std::set<std::string>& j) {
  std::vector<int> out;
  for (std::size_t c = 0; c < structure.cells.size(); ++c) {
    const auto& members = structure.cells[c];
    bool inside = std::all_of(members.begin(), members.end(),
                              [&](const std::string& m) { return j.count(m) > 0; });
    bool touches = std::any_of(members.begin(), members.end(),
                               [&](const std::string& m) { return j.count(m) > 0; });
    if (touches && !inside)
      fail(Errc::internal, "left/right cell crosses the boundary of a two-sided cell");
    if (inside) out.push_back(static_cast<int>(c));
  }
  return out;
}

void require_two_sided_cell(const BasedCategory& cat, const std::vector<std::string>& j) {
  CellStructure two_sided = cell_structure(cat, Side::two_sided);
  std::set<std::string> given = as_set(j);
  if (given.empty()) fail(Errc::precondition, "empty two-sided cell");
  for (const auto& cell : two_sided.cells)
    if (as_set(cell) == given) return;
  fail(Errc::precondition, "input is not a two-sided cell of the category");
}

}  // namespace

StrongRegularity is_strongly_regular(const BasedCategory& cat,
                                     const std::vector<std::string>& two_sided_cell) {
  require_two_sided_cell(cat, two_sided_cell);
  std::set<std::string> j = as_set(two_sided_cell);

  CellStructure left = cell_structure(cat, Side::left);
  CellStructure right = cell_structure(cat, Side::right);
  std::vector<int> left_cells = cells_inside(left, j);
  std::vector<int> right_cells = cells_inside(right, j);

  StrongRegularity out;
  for (const auto& [structure, inside, label] :
       {std::tuple<const CellStructure&, const std::vector<int>&, const char*>{left, left_cells,
                                                                               "left"},
        std::tuple<const CellStructure&, const std::vector<int>&, const char*>{right, right_cells,
                                                                               "right"}}) {
    for (std::size_t a = 0; a < inside.size(); ++a)
      for (std::size_t b = 0; b < inside.size(); ++b) {
        if (a == b) continue;
        if (structure.cell_geq(inside[a], inside[b])) {
          out.verdict = false;
          out.comparable = ComparableCellsWitness{label, structure.cells[inside[a]],
                                                  structure.cells[inside[b]]};
          return out;
        }
      }
  }

  for (int lc : left_cells)
    for (int rc : right_cells) {
      std::set<std::string> l = as_set(left.cells[lc]);
      std::vector<std::string> intersection;
      for (const auto& m : right.cells[rc])
        if (l.count(m)) intersection.push_back(m);
      if (intersection.size() != 1) {
        out.verdict = false;
        out.intersection =
            IntersectionWitness{left.cells[lc], right.cells[rc], std::move(intersection)};
        return out;
      }
    }

  out.verdict = true;
  return out;
}

NumericalCondition numerical_condition(const BasedCategory& cat,
                                       const std::vector<std::string>& two_sided_cell,
                                       bool count_multiplicity) {
  if (!cat.involution()) fail(Errc::missing_involution, "category carries no involution");
  StrongRegularity regularity = is_strongly_regular(cat, two_sided_cell);
  if (!regularity.verdict)
    fail(Errc::precondition, "the two-sided cell is not strongly regular");

  std::set<std::string> j = as_set(two_sided_cell);
  NumericalCondition out;
  for (const auto& f : two_sided_cell) {
    Multiset product = cat.compose(cat.star(f), f);
    long long value = 0;
    for (const auto& [h, c] : product)
      if (j.count(h)) value += count_multiplicity ? c : 1;
    out.per_morphism[f] = value;
  }

  CellStructure right = cell_structure(cat, Side::right);
  out.verdict = true;
  for (int rc : cells_inside(right, j)) {
    const auto& members = right.cells[rc];
    long long value = out.per_morphism.at(members.front());
    for (const auto& m : members)
      if (out.per_morphism.at(m) != value) {
        out.verdict = false;
        if (!out.witness) out.witness = {members.front(), m};
      }
    out.right_cell_values[members.front()] = value;
  }
  return out;
}

MatrixRep cell_rep(std::shared_ptr<const BasedCategory> cat,
                   const std::vector<std::string>& left_cell) {
  CellStructure left = cell_structure(*cat, Side::left);
  std::set<std::string> given = as_set(left_cell);
  bool found = false;
  for (const auto& cell : left.cells)
    if (as_set(cell) == given) {
      found = true;
      break;
    }
  if (!found) fail(Errc::precondition, "input is not a left cell of the category");

  MatrixRep::IndMap ind;
  for (const auto& object : cat->objects()) {
    std::vector<std::string> labels;
    for (const auto& name : left_cell)
      if (cat->morphism(name).cod == object) labels.push_back(name);
    std::sort(labels.begin(), labels.end());
    ind[object] = std::move(labels);
  }

  MatrixRep::MatrixMap matrices;
  for (const auto& g : cat->one_morphisms()) {
    const auto& cols = ind.at(g.dom);
    const auto& rows = ind.at(g.cod);
    IntMatrix mat(static_cast<int>(rows.size()), static_cast<int>(cols.size()), 0);
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < rows.size(); ++r)
        mat(static_cast<int>(r), static_cast<int>(c)) = cat->constant(g.name, cols[c], rows[r]);
    matrices.emplace(g.name, std::move(mat));
  }
  return MatrixRep(std::move(cat), std::move(ind), std::move(matrices));
}

MatrixRep cell_rep(const BasedCategory& cat, const std::vector<std::string>& left_cell) {
  return cell_rep(std::make_shared<BasedCategory>(cat), left_cell);
}

AnnihilatorCheck annihilator_consistency(const BasedCategory& cat,
                                         const std::map<std::string, IntMatrix>& partial_matrices) {
  CellStructure two_sided = cell_structure(cat, Side::two_sided);
  std::vector<std::string> zero, nonzero;
  for (const auto& [name, matrix] : partial_matrices) {
    if (!cat.has_morphism(name)) fail(Errc::invalid_input, "unknown 1-morphism " + name);
    (matrix.is_zero() ? zero : nonzero).push_back(name);
  }

  AnnihilatorCheck out;
  for (const auto& f : zero)
    for (const auto& g : nonzero) {
      int cf = two_sided.cell_index_of(f);
      int cg = two_sided.cell_index_of(g);
      if (cf == cg) {
        out.consistent = false;
        out.witness = {f, g};
        out.reason = f + " acts by zero but " + g + " does not, and both lie in the same "
                     "two-sided cell";
        return out;
      }
      if (two_sided.cell_geq(cg, cf)) {
        out.consistent = false;
        out.witness = {f, g};
        out.reason = f + " acts by zero but the higher 1-morphism " + g + " does not";
        return out;
      }
    }
  return out;
}

}  // namespace cellrep
