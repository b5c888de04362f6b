#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cellrep/based_category.hpp"
#include "cellrep/cells.hpp"
#include "cellrep/matrix_rep.hpp"

namespace testsupport {

using namespace cellrep;

// One object, 1-morphisms {1, F} with F ∘ F = k·F.
inline BasedCategory one_generator_category(long long k = 2) {
  return BasedCategory(
      {kClub}, {{"1", kClub, kClub, true}, {"F", kClub, kClub, false}},
      {{{"1", "1"}, {{"1", 1}}},
       {{"1", "F"}, {{"F", 1}}},
       {{"F", "1"}, {{"F", 1}}},
       {{"F", "F"}, {{"F", k}}}});
}

// The transitive representation with F ∘ F = k·F acting by the k-by-k
// all-ones matrix (its square is k times itself).
inline MatrixRep all_ones_rep(std::shared_ptr<const BasedCategory> cat) {
  const int k = static_cast<int>(cat->constant("F", "F", "F"));
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back("X" + std::to_string(i + 1));
  return MatrixRep(std::move(cat), {{kClub, labels}},
                   {{"1", IntMatrix::identity(k)}, {"F", IntMatrix(k, k, 1)}});
}

inline MultTable cyclic_table(int n) {
  MultTable t;
  for (int i = 0; i < n; ++i) t.elements.push_back("c" + std::to_string(i));
  t.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.table[i][j] = (i + j) % n;
  return t;
}

inline MultTable klein_table() {
  MultTable t;
  t.elements = {"e", "a", "b", "ab"};
  t.table = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return t;
}

// S_n via one-line-notation labels; identity first.
inline MultTable symmetric_table(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  MultTable t;
  for (const auto& p : perms) {
    std::string label;
    for (int v : p) label += std::to_string(v);
    t.elements.push_back(label);
  }
  auto index_of = [&](const std::vector<int>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    return -1;
  };
  const int size = static_cast<int>(perms.size());
  t.table.assign(size, std::vector<int>(size));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      std::vector<int> composed(n);
      for (int i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i]];
      t.table[a][b] = index_of(composed);
    }
  return t;
}

// Subgroup count by exhaustive subset closure; usable for |G| <= 16.
inline std::size_t subgroup_count_oracle(const MultTable& g) {
  const int n = g.size();
  int identity = -1;
  check_monoid(g, &identity);
  std::size_t count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> identity & 1)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < n; ++b) {
        if (!(mask >> b & 1)) continue;
        if (!(mask >> g.product(a, b) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;  // finite + closed + contains identity = subgroup
  }
  return count;
}

// Random Cartan data compatible with a Nakayama permutation: entries are
// constant on the orbits of (a, b) -> (sigma(b), a).
struct CartanSample {
  IntMatrix cartan;
  std::vector<int> sigma;
};

inline CartanSample random_cartan(std::mt19937& rng, int max_n = 3, long long max_entry = 3) {
  std::uniform_int_distribution<int> n_dist(1, max_n);
  while (true) {
    const int n = n_dist(rng);
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    std::shuffle(sigma.begin(), sigma.end(), rng);

    IntMatrix c(n, n, -1);
    std::uniform_int_distribution<long long> entry(0, max_entry);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (c(a, b) >= 0) continue;
        long long value = entry(rng);
        int x = a, y = b;
        while (c(x, y) < 0) {  // fill the whole orbit
          c(x, y) = value;
          int nx = sigma[y], ny = x;
          x = nx;
          y = ny;
        }
      }

    bool diag_ok = true;
    for (int i = 0; i < n; ++i) diag_ok &= c(i, i) >= 1;
    if (!diag_ok) continue;

    std::vector<bool> reached(n, false);
    std::vector<int> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < n; ++b)
        if (!reached[b] && (c(a, b) > 0 || c(b, a) > 0)) {
          reached[b] = true;
          stack.push_back(b);
        }
    }
    if (std::all_of(reached.begin(), reached.end(), [](bool v) { return v; }))
      return {c, sigma};
  }
}

// Relabel and reorder the indecomposables of a representation at random.
inline MatrixRep shuffle_rep(const MatrixRep& rep, std::mt19937& rng, const std::string& prefix) {
  std::map<std::string, std::vector<int>> position;  // object -> new-to-old
  MatrixRep::IndMap ind;
  int counter = 0;
  for (const auto& object : rep.category().objects()) {
    const auto& old_labels = rep.ind(object);
    std::vector<int> order(old_labels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::shuffle(order.begin(), order.end(), rng);
    position[object] = order;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < order.size(); ++i)
      labels.push_back(prefix + std::to_string(counter++));
    ind[object] = std::move(labels);
  }
  MatrixRep::MatrixMap matrices;
  for (const auto& m : rep.category().one_morphisms()) {
    const IntMatrix& old = rep.matrix(m.name);
    const auto& rows = position.at(m.cod);
    const auto& cols = position.at(m.dom);
    IntMatrix mat(old.rows(), old.cols());
    for (int r = 0; r < old.rows(); ++r)
      for (int c = 0; c < old.cols(); ++c) mat(r, c) = old(rows[r], cols[c]);
    matrices.emplace(m.name, std::move(mat));
  }
  return MatrixRep(rep.category_ptr(), std::move(ind), std::move(matrices));
}

// A pool of valid categories for property tests: group categories, rank-one
// Cartan categories, one-generator categories, and small dihedral Soergel
// categories.
inline std::shared_ptr<const BasedCategory> random_category(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 6);
  switch (pick(rng)) {
    case 0: return std::make_shared<const BasedCategory>(build_group_category(cyclic_table(1)));
    case 1: return std::make_shared<const BasedCategory>(build_group_category(cyclic_table(2)));
    case 2: return std::make_shared<const BasedCategory>(build_group_category(cyclic_table(3)));
    case 3: return std::make_shared<const BasedCategory>(build_group_category(klein_table()));
    case 4: {
      std::uniform_int_distribution<long long> k(1, 3);
      return std::make_shared<const BasedCategory>(one_generator_category(k(rng)));
    }
    case 5: {
      std::uniform_int_distribution<long long> m(1, 3);
      return std::make_shared<const BasedCategory>(
          build_cartan_category(IntMatrix(1, 1, m(rng)), {0}));
    }
    default: return std::make_shared<const BasedCategory>(build_dihedral_soergel(2));
  }
}

// Random valid representation: a direct sum of shuffled cell, principal, and
// hand-made transitive representations, capped at max_ind indecomposables.
inline MatrixRep random_rep(std::shared_ptr<const BasedCategory> cat, std::mt19937& rng,
                            int max_ind = 5) {
  std::vector<MatrixRep> pieces;
  CellStructure left = cell_structure(*cat, Side::left);
  for (const auto& cell : left.cells) pieces.push_back(cell_rep(cat, cell));
  for (const auto& object : cat->objects()) pieces.push_back(principal_rep(cat, object));
  if (cat->has_morphism("F")) pieces.push_back(all_ones_rep(cat));

  std::uniform_int_distribution<int> count_dist(1, 3);
  std::uniform_int_distribution<std::size_t> piece_dist(0, pieces.size() - 1);
  MatrixRep acc = MatrixRep::empty(cat);
  const int count = count_dist(rng);
  for (int i = 0; i < count; ++i) {
    const MatrixRep& piece = pieces[piece_dist(rng)];
    if (acc.total_indecomposables() + piece.total_indecomposables() > max_ind) continue;
    acc = direct_sum(acc, piece);
  }
  if (acc.total_indecomposables() == 0) acc = direct_sum(acc, pieces[0]);
  return shuffle_rep(acc, rng, "Z");
}

}  // namespace testsupport
