#include "cellrep/matrix_rep.hpp"

#include <algorithm>
#include <numeric>

#include "cellrep/poset.hpp"

namespace cellrep {

MatrixRep::MatrixRep(std::shared_ptr<const BasedCategory> category, IndMap ind_objects,
                     MatrixMap matrices)
    : category_(std::move(category)),
      ind_objects_(std::move(ind_objects)),
      matrices_(std::move(matrices)) {
  if (!category_) fail(Errc::invalid_input, "representation without a category");
  for (const auto& [object, labels] : ind_objects_) {
    if (!category_->has_object(object))
      fail(Errc::invalid_input, "ind_objects references unknown object " + object);
    (void)labels;
  }
  for (const auto& object : category_->objects())
    ind_objects_.try_emplace(object, std::vector<std::string>{});
  for (const auto& object : category_->objects())
    for (const auto& label : ind_objects_.at(object)) {
      if (!label_index_.emplace(label, static_cast<int>(labels_.size())).second)
        fail(Errc::invalid_input, "duplicate indecomposable label " + label);
      labels_.push_back(label);
      label_object_.emplace(label, object);
    }
  for (const auto& [name, m] : matrices_) {
    (void)m;
    if (!category_->has_morphism(name))
      fail(Errc::invalid_input, "matrix assigned to unknown 1-morphism " + name);
  }
}

MatrixRep::MatrixRep(const BasedCategory& category, IndMap ind_objects, MatrixMap matrices)
    : MatrixRep(std::make_shared<BasedCategory>(category), std::move(ind_objects),
                std::move(matrices)) {}

MatrixRep MatrixRep::empty(std::shared_ptr<const BasedCategory> category) {
  MatrixMap matrices;
  for (const auto& m : category->one_morphisms()) matrices.emplace(m.name, IntMatrix(0, 0));
  return MatrixRep(std::move(category), {}, std::move(matrices));
}

const std::vector<std::string>& MatrixRep::ind(const std::string& object) const {
  auto it = ind_objects_.find(object);
  if (it == ind_objects_.end()) fail(Errc::invalid_input, "unknown object " + object);
  return it->second;
}

const IntMatrix& MatrixRep::matrix(const std::string& morphism) const {
  auto it = matrices_.find(morphism);
  if (it == matrices_.end()) fail(Errc::invalid_input, "no matrix for 1-morphism " + morphism);
  return it->second;
}

const std::string& MatrixRep::label_object(const std::string& label) const {
  auto it = label_object_.find(label);
  if (it == label_object_.end()) fail(Errc::invalid_input, "unknown label " + label);
  return it->second;
}

int MatrixRep::label_index(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) fail(Errc::invalid_input, "unknown label " + label);
  return it->second;
}

ValidationReport validate_rep(const MatrixRep& rep) {
  ValidationReport report;
  auto flag = [&](const std::string& rule, const std::string& msg) {
    report.violations.push_back({rule, msg});
  };
  const BasedCategory& cat = rep.category();

  std::set<std::string> usable;
  for (const auto& m : cat.one_morphisms()) {
    auto it = rep.matrices().find(m.name);
    if (it == rep.matrices().end()) {
      flag("structure", "no matrix for 1-morphism " + m.name);
      continue;
    }
    const IntMatrix& mat = it->second;
    const int want_rows = static_cast<int>(rep.ind(m.cod).size());
    const int want_cols = static_cast<int>(rep.ind(m.dom).size());
    if (mat.rows() != want_rows || mat.cols() != want_cols) {
      flag("structure", "matrix of " + m.name + " is " + std::to_string(mat.rows()) + "x" +
                            std::to_string(mat.cols()) + ", wants " + std::to_string(want_rows) +
                            "x" + std::to_string(want_cols));
      continue;
    }
    if (!mat.is_nonnegative()) flag("negative-entry", "matrix of " + m.name + " has entries < 0");
    if (m.is_identity && mat != IntMatrix::identity(want_rows))
      flag("identity", "identity 1-morphism " + m.name + " does not act as the identity matrix");
    usable.insert(m.name);
  }

  for (const auto& f : cat.one_morphisms()) {
    if (!usable.count(f.name)) continue;
    for (const auto& g : cat.one_morphisms()) {
      if (f.dom != g.cod || !usable.count(g.name)) continue;
      bool all_usable = true;
      IntMatrix rhs(static_cast<int>(rep.ind(f.cod).size()),
                    static_cast<int>(rep.ind(g.dom).size()), 0);
      for (const auto& [h, c] : cat.compose(f.name, g.name)) {
        if (!usable.count(h)) {
          all_usable = false;
          break;
        }
        rhs += c * rep.matrix(h);
      }
      if (!all_usable) continue;
      if (rep.matrix(f.name) * rep.matrix(g.name) != rhs)
        flag("homomorphism-law", "[" + f.name + "][" + g.name + "] != sum of c_{" + f.name + "," +
                                     g.name + "}^H [H]");
    }
  }
  return report;
}

MatrixRep principal_rep(std::shared_ptr<const BasedCategory> cat, const std::string& object) {
  if (!cat->has_object(object)) fail(Errc::invalid_input, "unknown object " + object);
  MatrixRep::IndMap ind;
  for (const auto& m : cat->one_morphisms())
    if (m.dom == object) ind[m.cod].push_back(m.name);

  MatrixRep::MatrixMap matrices;
  for (const auto& g : cat->one_morphisms()) {
    const auto& cols = ind.count(g.dom) ? ind.at(g.dom) : std::vector<std::string>{};
    const auto& rows = ind.count(g.cod) ? ind.at(g.cod) : std::vector<std::string>{};
    IntMatrix mat(static_cast<int>(rows.size()), static_cast<int>(cols.size()), 0);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Multiset prod = cat->compose(g.name, cols[c]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        auto it = prod.find(rows[r]);
        if (it != prod.end()) mat(static_cast<int>(r), static_cast<int>(c)) = it->second;
      }
    }
    matrices.emplace(g.name, std::move(mat));
  }
  return MatrixRep(std::move(cat), std::move(ind), std::move(matrices));
}

MatrixRep principal_rep(const BasedCategory& cat, const std::string& object) {
  return principal_rep(std::make_shared<BasedCategory>(cat), object);
}

ActionPreorder action_preorder(const MatrixRep& rep) {
  const int n = rep.total_indecomposables();
  std::vector<std::vector<bool>> one_step(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) one_step[i][i] = true;

  const BasedCategory& cat = rep.category();
  for (const auto& m : cat.one_morphisms()) {
    const auto& cols = rep.ind(m.dom);
    const auto& rows = rep.ind(m.cod);
    const IntMatrix& mat = rep.matrix(m.name);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (mat(static_cast<int>(r), static_cast<int>(c)) > 0)
          one_step[rep.label_index(rows[r])][rep.label_index(cols[c])] = true;
  }

  detail::PreorderAnalysis analysis = detail::analyze_preorder(one_step, rep.labels());
  ActionPreorder out;
  out.labels = rep.labels();
  out.geq = std::move(analysis.geq);
  out.class_of = std::move(analysis.class_of);
  out.class_geq = std::move(analysis.class_geq);
  out.classes.reserve(analysis.classes.size());
  for (const auto& cls : analysis.classes) {
    std::vector<std::string> names;
    names.reserve(cls.size());
    for (int i : cls) names.push_back(out.labels[i]);
    out.classes.push_back(std::move(names));
  }
  const int k = static_cast<int>(out.classes.size());
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && out.class_geq[a][b]) out.class_order.emplace_back(a, b);
  return out;
}

bool is_transitive(const MatrixRep& rep) {
  if (rep.total_indecomposables() == 0) return false;
  return action_preorder(rep).classes.size() == 1;
}

std::vector<std::set<int>> coideals(const ActionPreorder& order) {
  return detail::upward_closed_sets(order.class_geq, 100000);
}

std::vector<std::set<int>> coideals(const MatrixRep& rep) {
  return coideals(action_preorder(rep));
}

MatrixRep subquotient(const MatrixRep& rep, const std::set<int>& q, const std::set<int>& r) {
  ActionPreorder order = action_preorder(rep);
  if (!std::includes(r.begin(), r.end(), q.begin(), q.end()))
    fail(Errc::precondition, "Q is not contained in R");
  for (const auto& s : {q, r})
    if (!detail::is_upward_closed(order.class_geq, s))
      fail(Errc::precondition, "input is not a coideal of the class poset");

  std::set<std::string> keep;
  for (int cls : r)
    if (!q.count(cls))
      for (const auto& label : order.classes[cls]) keep.insert(label);

  MatrixRep::IndMap ind;
  std::map<std::string, std::vector<int>> positions;  // object -> kept positions
  for (const auto& object : rep.category().objects()) {
    const auto& full = rep.ind(object);
    std::vector<std::string> kept;
    std::vector<int> pos;
    for (std::size_t i = 0; i < full.size(); ++i)
      if (keep.count(full[i])) {
        kept.push_back(full[i]);
        pos.push_back(static_cast<int>(i));
      }
    ind[object] = std::move(kept);
    positions[object] = std::move(pos);
  }

  MatrixRep::MatrixMap matrices;
  for (const auto& m : rep.category().one_morphisms()) {
    const IntMatrix& full = rep.matrix(m.name);
    const auto& row_pos = positions.at(m.cod);
    const auto& col_pos = positions.at(m.dom);
    IntMatrix sub(static_cast<int>(row_pos.size()), static_cast<int>(col_pos.size()), 0);
    for (std::size_t rr = 0; rr < row_pos.size(); ++rr)
      for (std::size_t cc = 0; cc < col_pos.size(); ++cc)
        sub(static_cast<int>(rr), static_cast<int>(cc)) = full(row_pos[rr], col_pos[cc]);
    matrices.emplace(m.name, std::move(sub));

    // Coideal closedness: a kept column may not feed a discarded-above row or
    // a kept row may not be fed from a strictly-lower discarded piece; both
    // reduce to blocks that must vanish.
    const auto& full_rows = rep.ind(m.cod);
    const auto& full_cols = rep.ind(m.dom);
    for (std::size_t fr = 0; fr < full_rows.size(); ++fr)
      for (std::size_t fc = 0; fc < full_cols.size(); ++fc) {
        bool row_kept = keep.count(full_rows[fr]) > 0;
        bool col_kept = keep.count(full_cols[fc]) > 0;
        if (row_kept == col_kept) continue;
        int row_class = order.class_of[rep.label_index(full_rows[fr])];
        int col_class = order.class_of[rep.label_index(full_cols[fc])];
        bool row_in_q = q.count(row_class) > 0;
        bool col_in_q = q.count(col_class) > 0;
        bool row_in_r = r.count(row_class) > 0;
        // zero blocks: target outside R with source in R\Q, or target in R\Q
        // with source in Q
        bool must_vanish = (!row_in_r && col_kept) || (row_kept && col_in_q);
        (void)row_in_q;
        if (must_vanish && full(static_cast<int>(fr), static_cast<int>(fc)) != 0)
          fail(Errc::internal, "nonzero block outside the coideal subquotient of " + m.name);
      }
  }
  return MatrixRep(rep.category_ptr(), std::move(ind), std::move(matrices));
}

std::vector<Filtration> complete_filtrations(const MatrixRep& rep, std::size_t cap) {
  ActionPreorder order = action_preorder(rep);
  bool truncated = false;
  auto chains = detail::complete_chains_topdown(order.class_geq, cap, truncated);
  if (truncated)
    fail(Errc::budget_exceeded,
         "more than " + std::to_string(cap) + " complete filtrations");
  std::vector<Filtration> out;
  out.reserve(chains.size());
  for (const auto& chain : chains) {
    Filtration f;
    f.added = chain;
    std::set<int> acc;
    f.chain.push_back(acc);
    for (int cls : chain) {
      acc.insert(cls);
      f.chain.push_back(acc);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<MatrixRep> jh_subquotients(const MatrixRep& rep, const Filtration& f) {
  std::vector<MatrixRep> out;
  for (std::size_t t = 1; t < f.chain.size(); ++t) {
    MatrixRep sq = subquotient(rep, f.chain[t - 1], f.chain[t]);
    if (!is_transitive(sq))
      fail(Errc::internal, "one-class subquotient is not transitive");
    out.push_back(std::move(sq));
  }
  return out;
}

namespace {

// Backtracking search for per-object permutations carrying rep1 to rep2.
struct EquivalenceSearch {
  const MatrixRep& a;
  const MatrixRep& b;
  std::vector<std::string> objects;
  ObjectPermutations perm;          // partial: -1 = unassigned
  std::map<std::string, std::vector<bool>> used;

  bool entries_consistent(const std::string& object, int pos, int image) {
    // Check every matrix entry with both endpoints assigned.
    for (const auto& m : a.category().one_morphisms()) {
      const IntMatrix& ma = a.matrix(m.name);
      const IntMatrix& mb = b.matrix(m.name);
      const auto& rows = a.ind(m.cod);
      const auto& cols = a.ind(m.dom);
      const auto& prow = perm.at(m.cod);
      const auto& pcol = perm.at(m.dom);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        int ri = (m.cod == object && static_cast<int>(r) == pos) ? image : prow[r];
        if (ri < 0) continue;
        for (std::size_t c = 0; c < cols.size(); ++c) {
          int ci = (m.dom == object && static_cast<int>(c) == pos) ? image : pcol[c];
          if (ci < 0) continue;
          if (ma(static_cast<int>(r), static_cast<int>(c)) != mb(ri, ci)) return false;
        }
      }
    }
    return true;
  }

  bool assign(std::size_t slot, const std::vector<std::pair<std::string, int>>& slots) {
    if (slot == slots.size()) return true;
    const auto& [object, pos] = slots[slot];
    const int n = static_cast<int>(a.ind(object).size());
    for (int image = 0; image < n; ++image) {
      if (used.at(object)[image]) continue;
      if (!entries_consistent(object, pos, image)) continue;
      perm.at(object)[pos] = image;
      used.at(object)[image] = true;
      if (assign(slot + 1, slots)) return true;
      perm.at(object)[pos] = -1;
      used.at(object)[image] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<ObjectPermutations> reps_equivalent(const MatrixRep& rep1, const MatrixRep& rep2) {
  if (rep1.category_ptr() != rep2.category_ptr() &&
      !rep1.category().same_structure(rep2.category()))
    fail(Errc::precondition, "representations live over different categories");

  for (const auto& object : rep1.category().objects())
    if (rep1.ind(object).size() != rep2.ind(object).size()) return std::nullopt;

  EquivalenceSearch search{rep1, rep2, rep1.category().objects(), {}, {}};
  std::vector<std::pair<std::string, int>> slots;
  for (const auto& object : search.objects) {
    const int n = static_cast<int>(rep1.ind(object).size());
    search.perm[object].assign(n, -1);
    search.used[object].assign(n, false);
    for (int pos = 0; pos < n; ++pos) slots.emplace_back(object, pos);
  }
  if (!search.assign(0, slots)) return std::nullopt;
  return search.perm;
}

WeakJhResult weak_jh_verify(const MatrixRep& rep, std::size_t cap, int sample_count,
                            unsigned seed) {
  WeakJhResult result;
  ActionPreorder order = action_preorder(rep);

  bool truncated = false;
  auto chains = detail::complete_chains_topdown(order.class_geq, cap, truncated);
  std::mt19937 rng(seed);
  if (truncated) {
    result.sampled = true;
    chains.resize(0);
    for (int i = 0; i < sample_count; ++i)
      chains.push_back(detail::random_chain_topdown(order.class_geq, rng));
  }
  result.filtration_count = chains.size();
  if (chains.empty()) fail(Errc::internal, "no complete filtration found");

  auto filtration_of = [&](const std::vector<int>& chain) {
    Filtration f;
    f.added = chain;
    std::set<int> acc;
    f.chain.push_back(acc);
    for (int cls : chain) {
      acc.insert(cls);
      f.chain.push_back(acc);
    }
    return f;
  };

  // Equivalence classes among the subquotients of the first filtration.
  std::vector<MatrixRep> reference = jh_subquotients(rep, filtration_of(chains[0]));
  std::vector<int> ref_class(reference.size());
  std::vector<std::size_t> class_rep;  // index into `reference`
  for (std::size_t i = 0; i < reference.size(); ++i) {
    int found = -1;
    for (std::size_t c = 0; c < class_rep.size(); ++c)
      if (reps_equivalent(reference[class_rep[c]], reference[i])) {
        found = static_cast<int>(c);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(class_rep.size());
      class_rep.push_back(i);
    }
    ref_class[i] = found;
  }
  result.subquotient_classes = static_cast<int>(class_rep.size());
  std::vector<int> ref_histogram(class_rep.size(), 0);
  for (int c : ref_class) ++ref_histogram[c];

  result.verdict = true;
  for (std::size_t fi = 0; fi < chains.size(); ++fi) {
    std::vector<MatrixRep> subs = jh_subquotients(rep, filtration_of(chains[fi]));
    std::vector<int> histogram(class_rep.size(), 0);
    std::vector<int> classes(subs.size(), -1);
    bool ok = subs.size() == reference.size();
    for (std::size_t i = 0; ok && i < subs.size(); ++i) {
      int found = -1;
      for (std::size_t c = 0; c < class_rep.size(); ++c)
        if (reps_equivalent(reference[class_rep[c]], subs[i])) {
          found = static_cast<int>(c);
          break;
        }
      if (found < 0) {
        ok = false;
        break;
      }
      classes[i] = found;
      ++histogram[found];
    }
    if (ok && histogram != ref_histogram) ok = false;
    if (!ok) {
      result.verdict = false;
      result.counterexample = {std::size_t{0}, fi};
      return result;
    }
    // The matching against filtration 0: hand out reference steps per class.
    std::vector<std::vector<int>> pool(class_rep.size());
    for (std::size_t i = 0; i < ref_class.size(); ++i)
      pool[ref_class[i]].push_back(static_cast<int>(i));
    std::vector<int> matching(subs.size(), -1);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      matching[i] = pool[classes[i]].back();
      pool[classes[i]].pop_back();
    }
    result.matchings.push_back(std::move(matching));
  }
  return result;
}

std::map<std::string, IntMatrix> simple_basis_matrices(const MatrixRep& rep) {
  const BasedCategory& cat = rep.category();
  if (!cat.involution()) fail(Errc::missing_involution, "category carries no involution");
  std::map<std::string, IntMatrix> out;
  for (const auto& m : cat.one_morphisms()) out.emplace(m.name, rep.matrix(cat.star(m.name)).transpose());

  // The transposed-star family obeys the homomorphism law again.
  for (const auto& f : cat.one_morphisms())
    for (const auto& g : cat.one_morphisms()) {
      if (f.dom != g.cod) continue;
      IntMatrix rhs(out.at(f.name).rows(), out.at(g.name).cols(), 0);
      for (const auto& [h, c] : cat.compose(f.name, g.name)) rhs += c * out.at(h);
      if (out.at(f.name) * out.at(g.name) != rhs)
        fail(Errc::internal, "simple-basis family violates the homomorphism law at " + f.name +
                                 " \xE2\x88\x98 " + g.name);
    }
  return out;
}

MatrixRep direct_sum(const MatrixRep& rep1, const MatrixRep& rep2) {
  if (rep1.category_ptr() != rep2.category_ptr() &&
      !rep1.category().same_structure(rep2.category()))
    fail(Errc::invalid_input, "direct sum of representations over different categories");

  std::set<std::string> taken(rep1.labels().begin(), rep1.labels().end());
  std::map<std::string, std::string> rename;
  for (const auto& label : rep2.labels()) {
    std::string candidate = label;
    while (taken.count(candidate)) candidate += "'";
    taken.insert(candidate);
    rename[label] = candidate;
  }

  MatrixRep::IndMap ind;
  for (const auto& object : rep1.category().objects()) {
    std::vector<std::string> labels = rep1.ind(object);
    for (const auto& label : rep2.ind(object)) labels.push_back(rename.at(label));
    ind[object] = std::move(labels);
  }

  MatrixRep::MatrixMap matrices;
  for (const auto& m : rep1.category().one_morphisms()) {
    const IntMatrix& a = rep1.matrix(m.name);
    const IntMatrix& b = rep2.matrix(m.name);
    IntMatrix block(a.rows() + b.rows(), a.cols() + b.cols(), 0);
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < a.cols(); ++c) block(r, c) = a(r, c);
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c) block(a.rows() + r, a.cols() + c) = b(r, c);
    matrices.emplace(m.name, std::move(block));
  }
  return MatrixRep(rep1.category_ptr(), std::move(ind), std::move(matrices));
}

}  // namespace cellrep
