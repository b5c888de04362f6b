#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cellrep/errors.hpp"
#include "cellrep/int_matrix.hpp"

namespace cellrep {

// Formal non-negative integer combination of 1-morphisms, keyed by name.
// Entries are kept strictly positive; a missing key means multiplicity zero.
using Multiset = std::map<std::string, long long>;

Multiset& add_scaled(Multiset& into, const Multiset& other, long long factor);

struct OneMorphism {
  std::string name;
  std::string dom;
  std::string cod;
  bool is_identity = false;
};

struct Violation {
  std::string rule;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// The single object label used by all one-object builders ("♣").
inline const std::string kClub = "\xE2\x99\xA3";

/*
  Decategorified finitary 2-category: objects, indecomposable 1-morphism
  classes, and the structure constants c_{F,G}^H giving the multiplicity of H
  as a direct summand of F∘G. An optional bijection * on 1-morphism names
  models weak fiatness at the level of composition data.

  Construction performs only structural normalization (unique names, no '|'
  in names, zero multiplicities dropped). The semantic axioms (unit laws,
  associativity of the structure constants, involution compatibility) are
  checked by validate_category, which reports every violation with a witness.
*/
class BasedCategory {
 public:
  using CompositionMap = std::map<std::pair<std::string, std::string>, Multiset>;
  using Involution = std::map<std::string, std::string>;

  BasedCategory(std::vector<std::string> objects, std::vector<OneMorphism> one_morphisms,
                CompositionMap composition, std::optional<Involution> involution = std::nullopt,
                nlohmann::json metadata = nlohmann::json::object());

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<OneMorphism>& one_morphisms() const { return one_morphisms_; }
  const CompositionMap& composition() const { return composition_; }
  const std::optional<Involution>& involution() const { return involution_; }
  const nlohmann::json& metadata() const { return metadata_; }

  bool has_object(const std::string& label) const;
  bool has_morphism(const std::string& name) const;
  const OneMorphism& morphism(const std::string& name) const;
  int morphism_index(const std::string& name) const;

  // Name of the identity 1-morphism on the given object; error when the
  // category does not carry exactly one (validate reports the defect).
  const std::string& identity_of(const std::string& object) const;

  bool composable(const std::string& f, const std::string& g) const;

  // Structure constants of f∘g; error when dom(f) != cod(g).
  Multiset compose(const std::string& f, const std::string& g) const;
  long long constant(const std::string& f, const std::string& g, const std::string& h) const;

  // Bilinear extension of compose to formal sums.
  Multiset compose_multisets(const Multiset& a, const Multiset& b) const;

  const std::string& star(const std::string& f) const;  // error without involution

  // Structural equality (metadata excluded); used to decide whether two
  // representations live over the same category.
  bool same_structure(const BasedCategory& other) const;

 private:
  std::vector<std::string> objects_;
  std::vector<OneMorphism> one_morphisms_;
  CompositionMap composition_;
  std::optional<Involution> involution_;
  nlohmann::json metadata_;
  std::map<std::string, int> index_;
  std::map<std::string, std::string> identities_;  // object -> identity morphism name
};

ValidationReport validate_category(const BasedCategory& cat);

// Finite multiplication table over labelled elements: table[i][j] is the
// index of elements[i] * elements[j].
struct MultTable {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const std::string& label) const;
  int product(int i, int j) const { return table[i][j]; }
};

// Empty result means the table is a group (monoid); otherwise a reason.
std::optional<std::string> check_monoid(const MultTable& t, int* identity_out = nullptr);
std::optional<std::string> check_group(const MultTable& t);
std::vector<int> inverse_map(const MultTable& t);  // group only

struct KLRingData {
  // Elements listed in a total order refining the Bruhat order; the identity
  // must come first. basis maps element label w to the expansion of the basis
  // element over the group basis (indexed like `ring.elements`).
  MultTable ring;
  std::map<std::string, std::vector<long long>> basis;
  // When set, structure constants of F_u ∘ F_v are read off θ_v·θ_u instead
  // of θ_u·θ_v (composition in the correspondence order).
  bool opposite_composition = false;
};

std::optional<std::string> check_kl_ring_data(const KLRingData& data);

// One object ♣, one 1-morphism F_g per group element, F_g ∘ F_h = F_{gh},
// involution F_g ↦ F_{g^{-1}}.
BasedCategory build_group_category(const MultTable& group);

// Projective-functor category of a basic connected self-injective algebra
// with Cartan matrix `cartan` and Nakayama permutation `sigma` (0-based):
// 1-morphisms 1 and F_{ij}, composition F_{ij} ∘ F_{st} = C_{js}·F_{it},
// involution F_{ij} ↦ F_{σ^{-1}(j) i}. Records m = Σ C_{ij} in metadata.
BasedCategory build_cartan_category(const IntMatrix& cartan, const std::vector<int>& sigma);

// One object, one 1-morphism per basis element; structure constants obtained
// by multiplying basis expansions in the group basis and converting back via
// the unitriangular change of basis. Negative conversion output means the
// input is not a based ring.
BasedCategory build_kl_category(const KLRingData& data);

// Dihedral group of order 2n with the Kazhdan-Lusztig basis θ_w = Σ_{v≤w} v;
// 1-morphisms are named th_<word>. For n = 4 the eight expansions are
// cross-checked against the known closed form at build time.
BasedCategory build_dihedral_soergel(int n);

// Multiplication table of the dihedral group of order 2n, elements labelled
// by reduced words in s, t ("e", "s", "t", "st", ...), ordered by length with
// s-leading words first.
MultTable dihedral_table(int n);

}  // namespace cellrep
