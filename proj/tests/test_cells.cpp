#include "cellrep/cells.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace cellrep;
using namespace testsupport;

namespace {

std::set<std::set<std::string>> cell_sets(const CellStructure& cs) {
  std::set<std::set<std::string>> out;
  for (const auto& cell : cs.cells) out.insert({cell.begin(), cell.end()});
  return out;
}

}  // namespace

TEST_CASE("one-generator category has two left cells") {
  BasedCategory cat = one_generator_category(2);
  CellStructure left = cell_structure(cat, Side::left);
  CHECK(cell_sets(left) == std::set<std::set<std::string>>{{"1"}, {"F"}});

  int f = 1, one = 0;
  REQUIRE(left.morphisms[one] == "1");
  REQUIRE(left.morphisms[f] == "F");
  CHECK(left.geq[f][one]);       // F >= 1
  CHECK_FALSE(left.geq[one][f]);  // 1 >= F fails
  CHECK(left.geq[f][f]);

  // {F} sits above {1}.
  int cf = left.cell_index_of("F"), c1 = left.cell_index_of("1");
  CHECK(left.cell_geq(cf, c1));
  CHECK_FALSE(left.cell_geq(c1, cf));
}

TEST_CASE("projective-functor category cells") {
  BasedCategory cat = build_cartan_category(IntMatrix{{2, 1}, {1, 2}}, {0, 1});
  CellStructure left = cell_structure(cat, Side::left);
  CellStructure right = cell_structure(cat, Side::right);
  CellStructure two_sided = cell_structure(cat, Side::two_sided);

  // L_j = {F_ij : i}, R_i = {F_ij : j}, plus the identity cell.
  CHECK(cell_sets(left) == std::set<std::set<std::string>>{
                               {"1"}, {"F11", "F21"}, {"F12", "F22"}});
  CHECK(cell_sets(right) == std::set<std::set<std::string>>{
                                {"1"}, {"F11", "F12"}, {"F21", "F22"}});
  CHECK(cell_sets(two_sided) == std::set<std::set<std::string>>{
                                    {"1"}, {"F11", "F12", "F21", "F22"}});
}

TEST_CASE("B2 Soergel cells") {
  BasedCategory b2 = build_dihedral_soergel(4);
  CellStructure two_sided = cell_structure(b2, Side::two_sided);
  CHECK(cell_sets(two_sided) ==
        std::set<std::set<std::string>>{
            {"th_e"}, {"th_s", "th_t", "th_st", "th_ts", "th_sts", "th_tst"}, {"th_stst"}});

  CellStructure left = cell_structure(b2, Side::left);
  CHECK(cell_sets(left) == std::set<std::set<std::string>>{{"th_e"},
                                                           {"th_s", "th_st", "th_sts"},
                                                           {"th_t", "th_ts", "th_tst"},
                                                           {"th_stst"}});
  CellStructure right = cell_structure(b2, Side::right);
  CHECK(cell_sets(right) == std::set<std::set<std::string>>{{"th_e"},
                                                            {"th_s", "th_ts", "th_sts"},
                                                            {"th_t", "th_st", "th_tst"},
                                                            {"th_stst"}});

  // Cell order: {th_e} < middle cell < {th_stst}.
  int je = two_sided.cell_index_of("th_e");
  int j2 = two_sided.cell_index_of("th_s");
  int j3 = two_sided.cell_index_of("th_stst");
  CHECK(two_sided.cell_geq(j2, je));
  CHECK(two_sided.cell_geq(j3, j2));
  CHECK_FALSE(two_sided.cell_geq(je, j2));
}

TEST_CASE("two-sided preorder contains both one-sided preorders") {
  for (const auto& cat :
       {build_dihedral_soergel(4), build_cartan_category(IntMatrix{{2, 1}, {1, 2}}, {0, 1}),
        build_group_category(symmetric_table(3)), one_generator_category(3)}) {
    CellStructure left = cell_structure(cat, Side::left);
    CellStructure right = cell_structure(cat, Side::right);
    CellStructure two_sided = cell_structure(cat, Side::two_sided);
    const std::size_t n = cat.one_morphisms().size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (left.geq[a][b]) CHECK(two_sided.geq[a][b]);
        if (right.geq[a][b]) CHECK(two_sided.geq[a][b]);
      }
    // left and right cells refine the two-sided cells
    for (const auto& structure : {left, right})
      for (const auto& cell : structure.cells) {
        int ts = two_sided.cell_index_of(cell.front());
        for (const auto& member : cell) CHECK(two_sided.cell_index_of(member) == ts);
      }
  }
}

TEST_CASE("strong regularity") {
  BasedCategory cartan = build_cartan_category(IntMatrix{{2, 1}, {1, 2}}, {0, 1});
  CellStructure ts = cell_structure(cartan, Side::two_sided);
  StrongRegularity on_j = is_strongly_regular(cartan, ts.cell_containing("F11"));
  CHECK(on_j.verdict);

  BasedCategory b2 = build_dihedral_soergel(4);
  CellStructure b2ts = cell_structure(b2, Side::two_sided);
  StrongRegularity on_j2 = is_strongly_regular(b2, b2ts.cell_containing("th_s"));
  CHECK_FALSE(on_j2.verdict);
  REQUIRE(on_j2.intersection.has_value());
  CHECK(on_j2.intersection->intersection == std::vector<std::string>{"th_s", "th_sts"});

  // Singleton cells are trivially strongly regular.
  StrongRegularity top = is_strongly_regular(b2, {"th_stst"});
  CHECK(top.verdict);

  CHECK_THROWS_AS(is_strongly_regular(b2, {"th_s", "th_t"}), Error);  // not a cell
}

TEST_CASE("numerical condition") {
  BasedCategory cartan = build_cartan_category(IntMatrix{{2, 1}, {1, 2}}, {0, 1});
  CellStructure ts = cell_structure(cartan, Side::two_sided);
  NumericalCondition nc = numerical_condition(cartan, ts.cell_containing("F11"));
  CHECK(nc.verdict);
  // value on R_i equals the diagonal Cartan entry
  CHECK(nc.per_morphism.at("F11") == 2);
  CHECK(nc.per_morphism.at("F12") == 2);
  CHECK(nc.per_morphism.at("F21") == 2);
  CHECK(nc.per_morphism.at("F22") == 2);

  BasedCategory asym = build_cartan_category(IntMatrix{{3, 1}, {1, 2}}, {0, 1});
  NumericalCondition nc2 =
      numerical_condition(asym, cell_structure(asym, Side::two_sided).cell_containing("F11"));
  CHECK(nc2.verdict);
  CHECK(nc2.per_morphism.at("F11") == 3);
  CHECK(nc2.per_morphism.at("F21") == 2);

  BasedCategory dual = build_cartan_category(IntMatrix(1, 1, 2), {0});
  NumericalCondition nc3 =
      numerical_condition(dual, cell_structure(dual, Side::two_sided).cell_containing("F11"));
  CHECK(nc3.verdict);
  CHECK(nc3.right_cell_values.at("F11") == 2);

  // Without multiplicities the value is constantly one on strongly regular cells.
  NumericalCondition nc4 = numerical_condition(dual,
      cell_structure(dual, Side::two_sided).cell_containing("F11"), false);
  CHECK(nc4.verdict);
  CHECK(nc4.right_cell_values.at("F11") == 1);

  // No involution: the one-generator category carries none.
  BasedCategory bare = one_generator_category(2);
  CHECK_THROWS_AS(numerical_condition(bare, {"F"}), Error);

  // The unique two-sided cell of a group category with |G| >= 2 is not
  // strongly regular (left cell = right cell = the whole cell), so the
  // numerical condition is undefined there.
  BasedCategory c2 = build_group_category(cyclic_table(2));
  CellStructure c2ts = cell_structure(c2, Side::two_sided);
  REQUIRE(c2ts.cells.size() == 1);
  try {
    numerical_condition(c2, c2ts.cells[0]);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition);
  }

  // For the trivial group the cell is a singleton and the value is 1.
  BasedCategory c1 = build_group_category(cyclic_table(1));
  NumericalCondition nc5 =
      numerical_condition(c1, cell_structure(c1, Side::two_sided).cells[0]);
  CHECK(nc5.verdict);
  CHECK(nc5.right_cell_values.begin()->second == 1);
}

TEST_CASE("cell representations") {
  BasedCategory cat = one_generator_category(2);
  MatrixRep on_f = cell_rep(cat, {"F"});
  CHECK(on_f.matrix("F") == IntMatrix{{2}});
  CHECK(validate_rep(on_f).ok());
  CHECK(is_transitive(on_f));

  MatrixRep on_one = cell_rep(cat, {"1"});
  CHECK(on_one.matrix("F") == IntMatrix{{0}});
  CHECK(validate_rep(on_one).ok());

  BasedCategory dual = build_cartan_category(IntMatrix(1, 1, 2), {0});
  MatrixRep dual_cell = cell_rep(dual, {"F11"});
  CHECK(dual_cell.matrix("F11") == IntMatrix{{2}});

  // A non-singleton left cell of the B2 category still gives a valid
  // transitive representation.
  BasedCategory b2 = build_dihedral_soergel(4);
  CellStructure left = cell_structure(b2, Side::left);
  MatrixRep middle = cell_rep(b2, left.cell_containing("th_s"));
  CHECK(validate_rep(middle).ok());
  CHECK(is_transitive(middle));
  CHECK(middle.total_indecomposables() == 3);

  CHECK_THROWS_AS(cell_rep(b2, {"th_s"}), Error);  // not a left cell
}

TEST_CASE("annihilator consistency") {
  BasedCategory b2 = build_dihedral_soergel(4);

  AnnihilatorCheck bad = annihilator_consistency(
      b2, {{"th_s", IntMatrix(1, 1, 0)}, {"th_t", IntMatrix(1, 1, 2)}});
  CHECK_FALSE(bad.consistent);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->first == "th_s");
  CHECK(bad.witness->second == "th_t");

  std::map<std::string, IntMatrix> top_killed{{"th_stst", IntMatrix(2, 2, 0)}};
  for (const auto& name : {"th_s", "th_t", "th_st", "th_ts", "th_sts", "th_tst"})
    top_killed.emplace(name, IntMatrix(2, 2, 1));
  CHECK(annihilator_consistency(b2, top_killed).consistent);

  std::map<std::string, IntMatrix> all_zero;
  for (const auto& m : b2.one_morphisms()) all_zero.emplace(m.name, IntMatrix(1, 1, 0));
  CHECK(annihilator_consistency(b2, all_zero).consistent);

  // The zero set must be closed upward: zero above nonzero is fine, zero
  // below nonzero is not.
  AnnihilatorCheck zero_on_top = annihilator_consistency(
      b2, {{"th_e", IntMatrix(1, 1, 1)}, {"th_stst", IntMatrix(1, 1, 0)}});
  CHECK(zero_on_top.consistent);
  AnnihilatorCheck zero_below = annihilator_consistency(
      b2, {{"th_e", IntMatrix(1, 1, 0)}, {"th_stst", IntMatrix(1, 1, 1)}});
  CHECK_FALSE(zero_below.consistent);
}
