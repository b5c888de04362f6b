#include "cellrep/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>

namespace cellrep {

namespace {

void validate_constraints(const MatrixConstraintSet& c) {
  if (c.size < 1) fail(Errc::invalid_input, "matrix size must be >= 1");
  if (c.entry_bound < 1) fail(Errc::invalid_input, "entry bound must be >= 1");
  if (c.polynomial.empty() || c.polynomial[0] != 0)
    fail(Errc::invalid_input, "constraint polynomial must have zero constant term");
}

bool satisfies(const MatrixConstraintSet& c, const IntMatrix& x) {
  if (c.trace && x.trace() != *c.trace) return false;
  if (c.determinant && det_exact(x) != *c.determinant) return false;
  return eval_matrix_poly(c.polynomial, x).is_zero();
}

}  // namespace

std::vector<IntMatrix> enumerate_matrix_solutions_raw(const MatrixConstraintSet& c) {
  validate_constraints(c);
  const int k = c.size;
  const long long lo = c.positivity == Positivity::positive ? 1 : 0;
  const long long hi = c.entry_bound;
  if (hi < lo) return {};
  const long long range = hi - lo + 1;

  // Diagonal tuples first (pruned by the trace constraint), off-diagonal
  // entries by plain odometer.
  std::vector<std::vector<long long>> diagonals;
  std::vector<long long> diag(k, lo);
  auto gen_diag = [&](auto&& self, int pos, long long sum) -> void {
    if (c.trace && sum > *c.trace) return;
    if (pos == k) {
      if (!c.trace || sum == *c.trace) diagonals.push_back(diag);
      return;
    }
    for (long long v = lo; v <= hi; ++v) {
      diag[pos] = v;
      self(self, pos + 1, sum + v);
    }
  };
  gen_diag(gen_diag, 0, 0);

  const int off_count = k * k - k;
  long double visits = static_cast<long double>(diagonals.size()) *
                       std::pow(static_cast<long double>(range), off_count);
  if (visits > static_cast<long double>(c.budget))
    fail(Errc::budget_exceeded,
         "search space of about " + std::to_string(static_cast<double>(visits)) +
             " matrices exceeds the budget of " + std::to_string(c.budget));

  std::vector<std::pair<int, int>> off_positions;
  for (int r = 0; r < k; ++r)
    for (int cc = 0; cc < k; ++cc)
      if (r != cc) off_positions.emplace_back(r, cc);

  std::vector<IntMatrix> out;
  IntMatrix x(k, k, lo);
  for (const auto& d : diagonals) {
    for (int i = 0; i < k; ++i) x(i, i) = d[i];
    std::vector<long long> odo(off_count, lo);
    for (const auto& [r, cc] : off_positions) x(r, cc) = lo;
    while (true) {
      if (satisfies(c, x)) out.push_back(x);
      int pos = 0;
      while (pos < off_count) {
        auto [r, cc] = off_positions[pos];
        if (odo[pos] < hi) {
          ++odo[pos];
          x(r, cc) = odo[pos];
          break;
        }
        odo[pos] = lo;
        x(r, cc) = lo;
        ++pos;
      }
      if (pos == off_count) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix permutation_canonical_form(const IntMatrix& a) {
  if (!a.is_square()) fail(Errc::precondition, "canonical form of a non-square matrix");
  const int k = a.rows();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  IntMatrix best = a;
  IntMatrix candidate(k, k);
  do {
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) candidate(r, c) = a(perm[r], perm[c]);
    if (candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool permutation_conjugate(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return permutation_canonical_form(a) == permutation_canonical_form(b);
}

std::vector<IntMatrix> enumerate_matrix_solutions(const MatrixConstraintSet& c) {
  std::set<IntMatrix> canonical;
  for (const auto& x : enumerate_matrix_solutions_raw(c))
    canonical.insert(permutation_canonical_form(x));
  return {canonical.begin(), canonical.end()};
}

std::vector<IntMatrix> with_sorted_diagonal(const std::vector<IntMatrix>& raw) {
  std::vector<IntMatrix> out;
  for (const auto& x : raw) {
    bool sorted = true;
    for (int i = 0; i + 1 < x.rows(); ++i)
      if (x(i, i) < x(i + 1, i + 1)) {
        sorted = false;
        break;
      }
    if (sorted) out.push_back(x);
  }
  return out;
}

ClassificationReport classify_quasi_idempotent(long long m, int size_max) {
  if (m < 1) fail(Errc::precondition, "m must be >= 1");
  if (size_max < 1 || size_max > m)
    fail(Errc::precondition, "size_max must lie in 1..m (positive diagonals sum to the trace m)");

  ClassificationReport report;
  report.parameters =
      nlohmann::json{{"m", m}, {"size_max", size_max}, {"positivity", "positive"}};
  nlohmann::json bounds = nlohmann::json::array();

  std::set<IntMatrix> canonical;
  for (int k = 1; k <= size_max; ++k) {
    // A positive solution has rank one (the dominant eigenvalue of a positive
    // matrix is simple), hence trace m; and a_ij * a_ji = a_ii * a_jj bounds
    // every entry by the largest diagonal-pair product.
    long long bound = (k == 1) ? m : (m / 2) * ((m + 1) / 2);
    bounds.push_back(bound);
    MatrixConstraintSet c;
    c.size = k;
    c.polynomial = {0, -m, 1};
    c.positivity = Positivity::positive;
    c.trace = m;
    c.entry_bound = bound;
    for (const auto& x : enumerate_matrix_solutions_raw(c))
      canonical.insert(permutation_canonical_form(x));
  }
  report.parameters["entry_bounds"] = bounds;
  report.solutions.assign(canonical.begin(), canonical.end());
  report.conclusion = "X^2 = " + std::to_string(m) + "X has " +
                      std::to_string(report.solutions.size()) +
                      " positive integer solution classes up to simultaneous permutation";
  return report;
}

namespace {

using Mask = std::uint64_t;

Mask closure_of(const MultTable& g, Mask seed) {
  const int n = g.size();
  Mask m = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < n && !grew; ++a) {
      if (!(m >> a & 1)) continue;
      for (int b = 0; b < n; ++b) {
        if (!(m >> b & 1)) continue;
        int p = g.product(a, b);
        if (!(m >> p & 1)) {
          m |= Mask{1} << p;
          grew = true;
          // Lagrange: a subgroup of order > n/2 is the whole group.
          if (2 * __builtin_popcountll(m) > n) return (Mask{1} << n) - 1;
        }
      }
    }
  }
  return m;
}

std::vector<int> mask_to_vector(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (m >> i & 1) out.push_back(i);
  return out;
}

}  // namespace

SubgroupClasses enumerate_subgroups(const MultTable& group) {
  if (auto why = check_group(group)) fail(Errc::invalid_input, "not a group: " + *why);
  const int n = group.size();
  if (n > 60) fail(Errc::budget_exceeded, "subgroup enumeration supports groups of order <= 60");
  int identity = -1;
  check_monoid(group, &identity);
  std::vector<int> inv = inverse_map(group);

  std::set<Mask> subgroups;
  std::vector<Mask> worklist{closure_of(group, Mask{1} << identity)};
  subgroups.insert(worklist[0]);
  while (!worklist.empty()) {
    Mask h = worklist.back();
    worklist.pop_back();
    for (int g = 0; g < n; ++g) {
      if (h >> g & 1) continue;
      Mask k = closure_of(group, h | (Mask{1} << g));
      if (subgroups.insert(k).second) worklist.push_back(k);
    }
  }

  // Group into conjugacy classes.
  auto conjugate = [&](Mask h, int g) {
    Mask out = 0;
    for (int a = 0; a < n; ++a)
      if (h >> a & 1) out |= Mask{1} << group.product(group.product(g, a), inv[g]);
    return out;
  };

  std::set<Mask> seen;
  SubgroupClasses out;
  out.subgroup_count = subgroups.size();
  for (Mask h : subgroups) {
    if (seen.count(h)) continue;
    std::set<Mask> orbit;
    for (int g = 0; g < n; ++g) orbit.insert(conjugate(h, g));
    std::vector<std::vector<int>> members;
    for (Mask o : orbit) {
      seen.insert(o);
      if (!subgroups.count(o)) fail(Errc::internal, "conjugate of a subgroup is missing");
      members.push_back(mask_to_vector(o));
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) {
              if (a[0].size() != b[0].size()) return a[0].size() < b[0].size();
              return a[0] < b[0];
            });
  return out;
}

std::vector<GroupRepEntry> classify_group_reps(const MultTable& group) {
  auto category = std::make_shared<BasedCategory>(build_group_category(group));
  SubgroupClasses classes = enumerate_subgroups(group);
  const int n = group.size();

  std::vector<GroupRepEntry> out;
  for (const auto& cls : classes.classes) {
    const std::vector<int>& h = cls.front();
    std::set<int> members(h.begin(), h.end());

    // Left cosets gH, labelled by their minimal member.
    std::vector<std::vector<int>> cosets;
    std::vector<int> coset_of(n, -1);
    for (int g = 0; g < n; ++g) {
      if (coset_of[g] >= 0) continue;
      std::set<int> coset;
      for (int x : h) coset.insert(group.product(g, x));
      int idx = static_cast<int>(cosets.size());
      for (int e : coset) coset_of[e] = idx;
      cosets.emplace_back(coset.begin(), coset.end());
    }

    std::vector<std::string> labels;
    labels.reserve(cosets.size());
    for (const auto& coset : cosets) labels.push_back(group.elements[coset.front()] + "H");

    MatrixRep::MatrixMap matrices;
    const int count = static_cast<int>(cosets.size());
    for (int g = 0; g < n; ++g) {
      IntMatrix mat(count, count, 0);
      for (int c = 0; c < count; ++c) mat(coset_of[group.product(g, cosets[c].front())], c) = 1;
      matrices.emplace("F_" + group.elements[g], std::move(mat));
    }

    MatrixRep rep(category, {{kClub, labels}}, std::move(matrices));
    if (!is_transitive(rep)) fail(Errc::internal, "coset representation is not transitive");
    out.push_back(GroupRepEntry{h, std::move(labels), std::move(rep)});
  }
  return out;
}

namespace {

[[noreturn]] void stage_fail(int stage, const std::string& msg) {
  fail(Errc::internal, "b2 pipeline stage " + std::to_string(stage) + ": " + msg);
}

// Trace/determinant of the candidate matrix from the factorization of the
// quartic: the char polynomial must divide the squarefree part, have a
// non-negative trace, and exclude the all-zero spectrum.
std::pair<long long, long long> derive_trace_det(long long q1, long long q0) {
  // cubic x^3 + q1 x + q0, the quartic divided by its x factor
  std::vector<long long> roots{0};  // 0 from the x factor
  long long a3 = 1, a2 = 0, a1 = q1, a0 = q0;
  if (a0 == 0) stage_fail(3, "cubic factor has zero constant term");
  for (long long d = 1; d * d <= std::llabs(a0); ++d) {
    if (a0 % d != 0) continue;
    for (long long r : {d, -d, a0 / d, -(a0 / d)}) {
      if (((a3 * r + a2) * r + a1) * r + a0 == 0 &&
          std::find(roots.begin(), roots.end(), r) == roots.end())
        roots.push_back(r);
    }
  }
  std::vector<std::pair<long long, long long>> candidates;  // (trace, det)
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i; j < roots.size(); ++j) {
      if (roots[i] == 0 && roots[j] == 0) continue;  // the zero matrix
      candidates.emplace_back(roots[i] + roots[j], roots[i] * roots[j]);
    }
  // Irreducible quadratic factor: divide the cubic by each linear root found
  // (other than the artificial 0) and keep a quadratic remainder factor.
  for (long long r : roots) {
    if (r == 0) continue;
    // x^3 + q1 x + q0 = (x - r)(x^2 + r x + (q1 + r^2)) when r is a root
    long long qb = r, qc = q1 + r * r;
    long long disc = qb * qb - 4 * qc;
    bool square = false;
    for (long long s = 0; s * s <= disc; ++s)
      if (s * s == disc) {
        square = true;
        break;
      }
    if (disc < 0 || !square) candidates.emplace_back(-qb, qc);
  }
  std::vector<std::pair<long long, long long>> admissible;
  for (auto [t, d] : candidates)
    if (t >= 0) admissible.emplace_back(t, d);
  std::sort(admissible.begin(), admissible.end());
  admissible.erase(std::unique(admissible.begin(), admissible.end()), admissible.end());
  if (admissible.size() != 1)
    stage_fail(3, "expected a unique admissible (trace, det) pair, found " +
                      std::to_string(admissible.size()));
  return admissible[0];
}

}  // namespace

B2Report b2_obstruction_pipeline() {
  B2Report report;

  // Stage 1: the category and its cell structure.
  auto cat = std::make_shared<const BasedCategory>(build_dihedral_soergel(4));
  CellStructure two_sided = cell_structure(*cat, Side::two_sided);
  if (two_sided.cells.size() != 3) stage_fail(1, "expected three two-sided cells");
  const std::vector<std::string> j2 = two_sided.cell_containing("th_s");
  if (j2.size() != 6 || two_sided.cell_containing("th_e").size() != 1 ||
      two_sided.cell_containing("th_stst").size() != 1)
    stage_fail(1, "unexpected two-sided cell sizes");

  // Stage 2: quadratic relations of the middle cell, modulo the top cell.
  auto mod_top = [](Multiset m) {
    m.erase("th_stst");
    return m;
  };
  Multiset x_element{{"th_st", 1}, {"th_ts", 1}};
  Multiset theta;
  for (const auto& w : j2) theta[w] = 1;

  Multiset x_sq = mod_top(cat->compose_multisets(x_element, x_element));
  if (x_sq.empty() || x_sq.size() != j2.size()) stage_fail(2, "X^2 has unexpected support");
  long long c = x_sq.begin()->second;
  {
    Multiset expected;
    add_scaled(expected, theta, c);
    if (x_sq != expected) stage_fail(2, "X^2 is not a multiple of the cell sum");
  }
  report.x_sq_coeff = c;

  Multiset t_sq = mod_top(cat->compose_multisets(theta, theta));
  long long a = 0;
  {
    auto it = t_sq.find("th_s");
    if (it == t_sq.end()) stage_fail(2, "Theta^2 misses th_s");
    a = it->second;
  }
  auto it_st = t_sq.find("th_st");
  if (it_st == t_sq.end()) stage_fail(2, "Theta^2 misses th_st");
  long long b = it_st->second - a;
  {
    Multiset expected;
    add_scaled(expected, theta, a);
    add_scaled(expected, x_element, b);
    if (t_sq != expected) stage_fail(2, "Theta^2 is not of the form a*Theta + b*X");
  }
  report.t_sq_t_coeff = a;
  report.t_sq_x_coeff = b;

  // Stage 3: X^2 = cT and T^2 = aT + bX give X^4 = ca X^2 + c^2 b X; then the
  // admissible trace/det from the factorization, and the exhaustive entry
  // bound (b*c = a11*a22 - det for trace/det-constrained 2x2 matrices).
  report.derived_polynomial = {0, -c * c * b, -c * a, 0, 1};
  auto [tr, det] = derive_trace_det(-c * a, -c * c * b);
  report.derived_trace = tr;
  report.derived_det = det;
  if (det >= 0) stage_fail(3, "expected a negative determinant");
  long long x_bound = std::max(tr, (tr * tr) / 4 - det);

  MatrixConstraintSet x_constraints;
  x_constraints.size = 2;
  x_constraints.polynomial = report.derived_polynomial;
  x_constraints.positivity = Positivity::nonnegative;
  x_constraints.trace = tr;
  x_constraints.determinant = det;
  x_constraints.entry_bound = x_bound;
  std::vector<IntMatrix> x_raw = enumerate_matrix_solutions_raw(x_constraints);
  if (x_raw.empty()) stage_fail(3, "no candidate matrices");
  report.x_candidates = with_sorted_diagonal(x_raw);
  std::sort(report.x_candidates.begin(), report.x_candidates.end(),
            [](const IntMatrix& l, const IntMatrix& r) { return r < l; });  // descending

  // Stage 4: generator candidates from th_s ∘ th_s = q·th_s.
  Multiset s_sq = cat->compose("th_s", "th_s");
  if (s_sq.size() != 1 || s_sq.begin()->first != "th_s")
    stage_fail(4, "th_s is not quasi-idempotent");
  long long q = s_sq.begin()->second;
  long long gen_bound = 0;
  for (const auto& x : report.x_candidates) gen_bound = std::max(gen_bound, x.max_entry());
  report.generator_entry_bound = gen_bound;

  MatrixConstraintSet gen_constraints;
  gen_constraints.size = 2;
  gen_constraints.polynomial = {0, -q, 1};
  gen_constraints.positivity = Positivity::nonnegative;
  gen_constraints.entry_bound = gen_bound;
  std::vector<IntMatrix> gen_raw = enumerate_matrix_solutions_raw(gen_constraints);
  report.generator_candidates = with_sorted_diagonal(gen_raw);
  std::sort(report.generator_candidates.begin(), report.generator_candidates.end(),
            [](const IntMatrix& l, const IntMatrix& r) { return r < l; });

  // Stage 5: intersect via [X] = [th_s][th_t] + [th_t][th_s].
  std::set<IntMatrix> x_raw_set(x_raw.begin(), x_raw.end());
  std::vector<std::pair<IntMatrix, IntMatrix>> survivors;
  for (const auto& s : report.generator_candidates)
    for (const auto& t : report.generator_candidates) {
      IntMatrix combined = s * t + t * s;
      if (!satisfies(x_constraints, combined)) continue;
      if (!x_raw_set.count(combined))
        stage_fail(5, "combination satisfies the constraints but is not a stage-3 solution");
      survivors.emplace_back(s, t);
    }
  // Dedup up to a simultaneous basis permutation of the pair.
  {
    std::set<std::pair<IntMatrix, IntMatrix>> canonical;
    std::vector<std::pair<IntMatrix, IntMatrix>> deduped;
    for (const auto& [s, t] : survivors) {
      std::pair<IntMatrix, IntMatrix> best = {s, t};
      IntMatrix swapped_s(2, 2), swapped_t(2, 2);
      for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col) {
          swapped_s(r, col) = s(1 - r, 1 - col);
          swapped_t(r, col) = t(1 - r, 1 - col);
        }
      std::pair<IntMatrix, IntMatrix> alt = {swapped_s, swapped_t};
      if (alt < best) best = alt;
      if (canonical.insert(best).second) deduped.push_back({s, t});
    }
    survivors = std::move(deduped);
  }
  std::sort(survivors.begin(), survivors.end());
  report.surviving_pairs = survivors;
  if (survivors.empty()) stage_fail(5, "no surviving generator pair");

  // Stage 6: obstruction certificate per surviving pair.
  for (const auto& [s_matrix, t_matrix] : report.surviving_pairs) {
    B2Report::Obstruction obstruction;
    // Additive action of the self-adjoint generator is the transpose of its
    // simple-multiplicity matrix; restrict to whichever generator acts
    // transitively.
    struct Option {
      std::string generator;
      IntMatrix additive;
    };
    std::vector<Option> options{{"s", s_matrix.transpose()}, {"t", t_matrix.transpose()}};
    bool found = false;
    for (const auto& option : options) {
      auto subcat = std::make_shared<const BasedCategory>(BasedCategory(
          {kClub},
          {{"th_e", kClub, kClub, true}, {"th_" + option.generator, kClub, kClub, false}},
          {{{"th_e", "th_e"}, {{"th_e", 1}}},
           {{"th_e", "th_" + option.generator}, {{"th_" + option.generator, 1}}},
           {{"th_" + option.generator, "th_e"}, {{"th_" + option.generator, 1}}},
           {{"th_" + option.generator, "th_" + option.generator},
            {{"th_" + option.generator, q}}}},
          BasedCategory::Involution{{"th_e", "th_e"},
                                    {"th_" + option.generator, "th_" + option.generator}}));
      if (!validate_category(*subcat).ok()) stage_fail(6, "restricted subcategory is invalid");

      MatrixRep candidate(subcat, {{kClub, {"X1", "X2"}}},
                          {{"th_e", IntMatrix::identity(2)},
                           {"th_" + option.generator, option.additive}});
      if (!validate_rep(candidate).ok())
        stage_fail(6, "restricted candidate violates the homomorphism law");
      if (!is_transitive(candidate)) continue;

      obstruction.generator = option.generator;
      obstruction.restricted_matrix = option.additive;
      obstruction.restriction_transitive = true;

      // For a fiat category whose two-sided cells are all strongly regular
      // and numerically constant, simple transitive actions are exhausted by
      // cell representations; certify those hypotheses for the subcategory.
      CellStructure sub_cells = cell_structure(*subcat, Side::two_sided);
      obstruction.hypotheses_strongly_regular = true;
      obstruction.hypotheses_numerical = true;
      for (const auto& cell : sub_cells.cells) {
        StrongRegularity reg = is_strongly_regular(*subcat, cell);
        obstruction.hypotheses_strongly_regular &= reg.verdict;
        if (reg.verdict)
          obstruction.hypotheses_numerical &= numerical_condition(*subcat, cell).verdict;
      }

      CellStructure sub_left = cell_structure(*subcat, Side::left);
      obstruction.equivalent_to_some_cell_rep = false;
      for (const auto& cell : sub_left.cells) {
        MatrixRep cr = cell_rep(subcat, cell);
        obstruction.cell_rep_matrices.push_back(cr.matrix("th_" + option.generator));
        if (reps_equivalent(candidate, cr)) obstruction.equivalent_to_some_cell_rep = true;
      }
      found = true;
      break;
    }
    if (!found) stage_fail(6, "no generator restricts to a transitive action");
    if (obstruction.equivalent_to_some_cell_rep)
      stage_fail(6, "restricted candidate is equivalent to a cell representation");
    if (!obstruction.hypotheses_strongly_regular || !obstruction.hypotheses_numerical)
      stage_fail(6, "subcategory cells are not strongly regular and numerically constant");
    report.obstructions.push_back(std::move(obstruction));
  }

  // Stage 7: mixed-sign one-dimensional modules die on the middle cell.
  for (const auto& [name, zero_gen, live_gen] :
       {std::tuple<std::string, std::string, std::string>{"V_{-1,1}", "th_s", "th_t"},
        std::tuple<std::string, std::string, std::string>{"V_{1,-1}", "th_t", "th_s"}}) {
    std::map<std::string, IntMatrix> assignment{{zero_gen, IntMatrix(1, 1, 0)},
                                                {live_gen, IntMatrix(1, 1, q)}};
    AnnihilatorCheck check = annihilator_consistency(*cat, assignment);
    if (check.consistent) stage_fail(7, name + " was not eliminated");
    report.sign_eliminations.push_back({name, std::move(check)});
  }

  // The two realizable modules, read off the rank-one cell representations.
  CellStructure left = cell_structure(*cat, Side::left);
  for (const auto& member : {std::string("th_stst"), std::string("th_e")}) {
    MatrixRep cr = cell_rep(cat, left.cell_containing(member));
    if (cr.total_indecomposables() != 1) stage_fail(7, "expected a rank-one cell representation");
    long long sign_s = cr.matrix("th_s")(0, 0) - 1;
    long long sign_t = cr.matrix("th_t")(0, 0) - 1;
    if (std::llabs(sign_s) != 1 || std::llabs(sign_t) != 1)
      stage_fail(7, "cell representation does not decategorify to a sign module");
    B2Report::Realization realization;
    realization.module_name = "V_{" + std::to_string(sign_s) + "," + std::to_string(sign_t) + "}";
    realization.left_cell_member = member;
    realization.theta_s = cr.matrix("th_s");
    realization.theta_t = cr.matrix("th_t");
    report.realizations.push_back(std::move(realization));
  }

  report.conclusion =
      "Only V_{1,1} and V_{-1,-1} admit a finitary categorification: both are realized by "
      "cell representations; V_{-1,1} and V_{1,-1} are excluded because th_s and th_t lie in "
      "the same two-sided cell, and V_2 is excluded by the obstruction certificate for the "
      "surviving matrix pair.";
  return report;
}

namespace {

nlohmann::json matrix_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

ClassificationReport to_classification_report(const B2Report& b2) {
  ClassificationReport out;
  out.conclusion = b2.conclusion;

  std::set<IntMatrix> surviving_x;
  for (const auto& [s, t] : b2.surviving_pairs) surviving_x.insert(s * t + t * s);
  for (const auto& x : b2.x_candidates) {
    bool survived = false;
    for (const auto& sx : surviving_x)
      if (permutation_conjugate(x, sx)) survived = true;
    if (survived)
      out.eliminated.emplace_back(
          x, "generator pair survives but its restricted action is not equivalent to any cell "
             "representation of the rank-one subcategory");
    else
      out.eliminated.emplace_back(x,
                                  "no generator pair realizes this matrix as [th_s][th_t] + "
                                  "[th_t][th_s]");
  }
  for (const auto& se : b2.sign_eliminations)
    out.eliminated.emplace_back(IntMatrix(1, 1, 0), se.module_name + ": " + se.check.reason);

  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [s, t] : b2.surviving_pairs)
    pairs.push_back({{"theta_s", matrix_json(s)}, {"theta_t", matrix_json(t)}});
  nlohmann::json realizations = nlohmann::json::array();
  for (const auto& r : b2.realizations)
    realizations.push_back({{"module", r.module_name},
                            {"left_cell_member", r.left_cell_member},
                            {"theta_s", matrix_json(r.theta_s)},
                            {"theta_t", matrix_json(r.theta_t)}});
  nlohmann::json candidates = nlohmann::json::array();
  for (const auto& x : b2.x_candidates) candidates.push_back(matrix_json(x));

  out.parameters = {
      {"x_sq_coeff", b2.x_sq_coeff},
      {"t_sq_t_coeff", b2.t_sq_t_coeff},
      {"t_sq_x_coeff", b2.t_sq_x_coeff},
      {"polynomial", b2.derived_polynomial},
      {"trace", b2.derived_trace},
      {"det", b2.derived_det},
      {"x_candidates", candidates},
      {"generator_entry_bound", b2.generator_entry_bound},
      {"surviving_pairs", pairs},
      {"realizations", realizations},
      {"basis_convention",
       "candidate matrices are presented with non-increasing diagonal (a common basis ordering)"},
  };
  return out;
}

}  // namespace cellrep
