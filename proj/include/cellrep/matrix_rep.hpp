#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cellrep/based_category.hpp"
#include "cellrep/int_matrix.hpp"

namespace cellrep {

/*
  Non-negative integer matrix representation of a based category: per object a
  list of indecomposable labels, per 1-morphism F : i -> j a matrix with rows
  indexed by the labels over j and columns by the labels over i. The entry
  (Y, X) is the multiplicity of Y as a direct summand of F X.

  A simple transitive quotient carries the same matrices as its transitive
  parent: the unique maximal ideal avoiding identity morphisms of nonzero
  indecomposables lies in the radical, so it changes neither the set of
  indecomposables nor any action multiplicity. Transitive representations
  therefore stand in for their simple transitive quotients everywhere below.
*/
class MatrixRep {
 public:
  using IndMap = std::map<std::string, std::vector<std::string>>;
  using MatrixMap = std::map<std::string, IntMatrix>;

  MatrixRep(std::shared_ptr<const BasedCategory> category, IndMap ind_objects,
            MatrixMap matrices);
  MatrixRep(const BasedCategory& category, IndMap ind_objects, MatrixMap matrices);

  static MatrixRep empty(std::shared_ptr<const BasedCategory> category);

  const BasedCategory& category() const { return *category_; }
  const std::shared_ptr<const BasedCategory>& category_ptr() const { return category_; }

  const IndMap& ind_objects() const { return ind_objects_; }
  const std::vector<std::string>& ind(const std::string& object) const;
  const MatrixMap& matrices() const { return matrices_; }
  const IntMatrix& matrix(const std::string& morphism) const;

  // Global label order: category objects in declared order, labels in their
  // per-object order. All labels are unique across objects.
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label_object(const std::string& label) const;
  int label_index(const std::string& label) const;
  int total_indecomposables() const { return static_cast<int>(labels_.size()); }

 private:
  std::shared_ptr<const BasedCategory> category_;
  IndMap ind_objects_;
  MatrixMap matrices_;
  std::vector<std::string> labels_;
  std::map<std::string, std::string> label_object_;
  std::map<std::string, int> label_index_;
};

// Reports violations of the representation axioms: per-morphism matrix
// presence and shape, identity morphisms acting as identity matrices,
// non-negative entries, and the homomorphism law
//   matrix(F) * matrix(G) = Σ_H c_{F,G}^H * matrix(H).
ValidationReport validate_rep(const MatrixRep& rep);

// The principal representation at object i: labels over j are the
// 1-morphisms i -> j, matrix entries are structure constants.
MatrixRep principal_rep(const BasedCategory& cat, const std::string& object);
MatrixRep principal_rep(std::shared_ptr<const BasedCategory> cat, const std::string& object);

struct ActionPreorder {
  std::vector<std::string> labels;               // global order, as in MatrixRep
  std::vector<std::vector<bool>> geq;            // label a >= label b
  std::vector<std::vector<std::string>> classes; // canonical order, named members
  std::vector<int> class_of;                     // label index -> class index
  std::vector<std::vector<bool>> class_geq;      // induced partial order, reflexive
  std::vector<std::pair<int, int>> class_order;  // strict pairs (above, below)
};

// X >= Y iff X is a summand of F Y for some 1-morphism F; the one-step
// relation is already transitive for valid representations (asserted).
ActionPreorder action_preorder(const MatrixRep& rep);

bool is_transitive(const MatrixRep& rep);

// All coideals (upward-closed subsets) of the class poset, canonical order:
// by size, then lexicographically. Classes are indexed as in ActionPreorder.
std::vector<std::set<int>> coideals(const ActionPreorder& order);
std::vector<std::set<int>> coideals(const MatrixRep& rep);

// Restriction of the representation to the classes in R \ Q, for coideals
// Q ⊆ R. The discarded blocks of every matrix vanish by coideal closedness
// (asserted). Q = ∅ yields the subrepresentation attached to R.
MatrixRep subquotient(const MatrixRep& rep, const std::set<int>& q, const std::set<int>& r);

struct Filtration {
  std::vector<std::set<int>> chain;  // ∅ = Q_0 ⊂ Q_1 ⊂ ... ⊂ Q_k = everything
  std::vector<int> added;            // class added at each step
};

std::vector<Filtration> complete_filtrations(const MatrixRep& rep, std::size_t cap = 10000);

// One transitive representation per filtration step.
std::vector<MatrixRep> jh_subquotients(const MatrixRep& rep, const Filtration& f);

// One permutation per category object, mapping positions of rep1's labels to
// positions of rep2's labels, with P_j * M1(F) * P_i^t = M2(F) throughout.
using ObjectPermutations = std::map<std::string, std::vector<int>>;
std::optional<ObjectPermutations> reps_equivalent(const MatrixRep& rep1, const MatrixRep& rep2);

struct WeakJhResult {
  bool verdict = false;
  bool sampled = false;        // filtration count exceeded the cap; random sample used
  std::size_t filtration_count = 0;
  int subquotient_classes = 0;                // equivalence classes among subquotients
  std::vector<std::vector<int>> matchings;    // per filtration: step -> step of filtration 0
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;  // filtration pair
};

// Checks that every complete filtration yields the same multiset of
// subquotients up to reps_equivalent.
WeakJhResult weak_jh_verify(const MatrixRep& rep, std::size_t cap = 10000,
                            int sample_count = 200, unsigned seed = 1);

// The simple-multiplicity matrices ⟦F⟧ := matrix(F*)^t; the family satisfies
// the homomorphism law again (asserted). Requires the involution.
std::map<std::string, IntMatrix> simple_basis_matrices(const MatrixRep& rep);

// Block-diagonal sum; labels of the right summand are renamed on collision.
MatrixRep direct_sum(const MatrixRep& rep1, const MatrixRep& rep2);

}  // namespace cellrep
