#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cellrep/based_category.hpp"
#include "cellrep/cells.hpp"
#include "cellrep/int_matrix.hpp"
#include "cellrep/matrix_rep.hpp"

namespace cellrep {

enum class Positivity { nonnegative, positive };

struct MatrixConstraintSet {
  int size = 1;                          // matrix dimension k
  std::vector<long long> polynomial;     // ascending coefficients, zero constant term
  Positivity positivity = Positivity::nonnegative;
  std::optional<long long> trace;
  std::optional<long long> determinant;
  long long entry_bound = 1;
  long long budget = 20'000'000;         // max entry vectors visited
};

// Every matrix with entries in [0 or 1, entry_bound] meeting all constraints.
std::vector<IntMatrix> enumerate_matrix_solutions_raw(const MatrixConstraintSet& c);

// Raw solutions deduplicated up to simultaneous row/column permutation;
// canonical (lexicographically minimal) representatives, sorted.
std::vector<IntMatrix> enumerate_matrix_solutions(const MatrixConstraintSet& c);

IntMatrix permutation_canonical_form(const IntMatrix& a);
bool permutation_conjugate(const IntMatrix& a, const IntMatrix& b);

// Raw solutions whose diagonal is non-increasing (the common presentation
// convention for small classification lists).
std::vector<IntMatrix> with_sorted_diagonal(const std::vector<IntMatrix>& raw);

struct ClassificationReport {
  std::vector<IntMatrix> solutions;  // canonical representatives, pairwise non-conjugate
  std::vector<std::pair<IntMatrix, std::string>> eliminated;
  std::string conclusion;
  nlohmann::json parameters = nlohmann::json::object();
};

// All positive integer matrices with X^2 = mX, sizes 1..size_max, up to
// simultaneous permutation. Positivity forces rank one and trace m, so the
// entry bound floor(m/2)*ceil(m/2) (m for 1x1) is exhaustive.
ClassificationReport classify_quasi_idempotent(long long m, int size_max);

struct SubgroupClasses {
  // Each conjugacy class lists its subgroups as sorted element-index sets;
  // the first entry is the canonical representative.
  std::vector<std::vector<std::vector<int>>> classes;
  std::size_t subgroup_count = 0;
};

// All subgroups by closure of generating sets, grouped into conjugacy classes.
SubgroupClasses enumerate_subgroups(const MultTable& group);

struct GroupRepEntry {
  std::vector<int> subgroup;  // canonical conjugacy-class representative
  std::vector<std::string> coset_labels;
  MatrixRep rep;               // left translation on cosets
};

// One transitive representation of the group category per subgroup conjugacy
// class; pairwise inequivalent.
std::vector<GroupRepEntry> classify_group_reps(const MultTable& group);

struct B2Report {
  // Stage 2: products modulo the top cell. X = th_st + th_ts, T = sum of the
  // middle cell; X^2 = x_sq_coeff * T and T^2 = t_sq_t_coeff * T + t_sq_x_coeff * X.
  long long x_sq_coeff = 0;
  long long t_sq_t_coeff = 0;
  long long t_sq_x_coeff = 0;

  std::vector<long long> derived_polynomial;  // ascending, for the matrix of X
  long long derived_trace = 0;
  long long derived_det = 0;

  std::vector<IntMatrix> x_candidates;          // stage 3 (sorted-diagonal presentation)
  long long generator_entry_bound = 0;          // stage 4 bound, from stage 3 entries
  std::vector<IntMatrix> generator_candidates;  // stage 4 (sorted-diagonal presentation)

  // Stage 5: (matrix of th_s, matrix of th_t) pairs compatible with stage 3.
  std::vector<std::pair<IntMatrix, IntMatrix>> surviving_pairs;

  // Stage 6: the obstruction certificate for each surviving pair.
  struct Obstruction {
    std::string generator;                   // "s" or "t": the restricted subcategory
    IntMatrix restricted_matrix;             // additive action of th_<generator>
    bool restriction_transitive = false;
    std::vector<IntMatrix> cell_rep_matrices;  // th_<generator> in the subcategory cell reps
    bool equivalent_to_some_cell_rep = true;   // must come out false
    bool hypotheses_strongly_regular = false;  // subcategory cells
    bool hypotheses_numerical = false;
  };
  std::vector<Obstruction> obstructions;

  // Stage 7: one-dimensional sign representations killed by the annihilator
  // constraint (the two mixed-sign modules).
  struct SignElimination {
    std::string module_name;
    AnnihilatorCheck check;
  };
  std::vector<SignElimination> sign_eliminations;

  // The two modules realized by cell representations, with the 1x1 matrices
  // of th_s and th_t.
  struct Realization {
    std::string module_name;
    std::string left_cell_member;
    IntMatrix theta_s, theta_t;
  };
  std::vector<Realization> realizations;

  std::string conclusion;
};

// Reproduces the classification of simple modules of the B2 Weyl group that
// admit a finitary categorification: builds the dihedral Soergel category for
// n = 4, verifies the quadratic relations of the middle cell, enumerates the
// candidate matrices, intersects the generator candidates, and certifies the
// obstruction for the two-dimensional module. Aborts with a stage-labelled
// diagnostic if any stage deviates from its expected form.
B2Report b2_obstruction_pipeline();

ClassificationReport to_classification_report(const B2Report& report);

}  // namespace cellrep
