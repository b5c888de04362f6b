#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cellrep/based_category.hpp"
#include "cellrep/matrix_rep.hpp"

namespace cellrep {

enum class Side { left, right, two_sided };

const char* side_name(Side s);
Side side_from_name(const std::string& name);

struct CellStructure {
  Side side = Side::left;
  std::vector<std::string> morphisms;            // category order
  std::vector<std::vector<bool>> geq;            // geq[a][b]: morphisms[a] >= morphisms[b]
  std::vector<std::vector<std::string>> cells;   // canonical order (min member name)
  std::vector<int> cell_of;                      // morphism index -> cell index
  std::vector<std::pair<int, int>> cell_order;   // strict pairs (above, below)

  int cell_index_of(const std::string& morphism) const;
  const std::vector<std::string>& cell_containing(const std::string& morphism) const;
  bool cell_geq(int above, int below) const;  // reflexive
};

/*
  The one-step relation G >= F:
    left       G a summand of H ∘ F for some H,
    right      G a summand of F ∘ K for some K,
    two-sided  G a summand of H ∘ F ∘ K for some H, K.
  Reflexivity comes from the identity 1-morphisms; transitivity holds
  automatically for non-negative structure constants and is asserted. Cells
  are the mutual-comparability classes.
*/
CellStructure cell_structure(const BasedCategory& cat, Side side);

struct ComparableCellsWitness {
  std::string side;  // "left" or "right"
  std::vector<std::string> cell_a;
  std::vector<std::string> cell_b;
};

struct IntersectionWitness {
  std::vector<std::string> left_cell;
  std::vector<std::string> right_cell;
  std::vector<std::string> intersection;
};

struct StrongRegularity {
  bool verdict = false;
  std::optional<ComparableCellsWitness> comparable;
  std::optional<IntersectionWitness> intersection;
};

// A two-sided cell is strongly regular when distinct left (right) cells
// inside it are incomparable and every left-right cell intersection is a
// single 1-morphism.
StrongRegularity is_strongly_regular(const BasedCategory& cat,
                                     const std::vector<std::string>& two_sided_cell);

struct NumericalCondition {
  bool verdict = false;
  std::map<std::string, long long> right_cell_values;  // keyed by minimal member name
  std::map<std::string, long long> per_morphism;
  std::optional<std::pair<std::string, std::string>> witness;  // same right cell, different value
};

// Per F in J: the number of summands of F* ∘ F lying in J (with multiplicity
// unless count_multiplicity is false); true when constant on right cells.
// Requires the involution and strong regularity of J.
NumericalCondition numerical_condition(const BasedCategory& cat,
                                       const std::vector<std::string>& two_sided_cell,
                                       bool count_multiplicity = true);

// The transitive representation carried by a left cell: labels are the cell
// members grouped by codomain, matrix entries are the structure constants
// within the cell.
MatrixRep cell_rep(const BasedCategory& cat, const std::vector<std::string>& left_cell);
MatrixRep cell_rep(std::shared_ptr<const BasedCategory> cat,
                   const std::vector<std::string>& left_cell);

struct AnnihilatorCheck {
  bool consistent = true;
  std::optional<std::pair<std::string, std::string>> witness;  // (zero F, nonzero G)
  std::string reason;
};

// A zero-assigned 1-morphism may not share its two-sided cell with, or lie
// below, a nonzero-assigned one.
AnnihilatorCheck annihilator_consistency(const BasedCategory& cat,
                                         const std::map<std::string, IntMatrix>& partial_matrices);

}  // namespace cellrep
