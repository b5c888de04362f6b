#include "cellrep/poset.hpp"

#include <algorithm>

#include "cellrep/errors.hpp"

namespace cellrep::detail {

std::vector<std::vector<bool>> transitive_closure(std::vector<std::vector<bool>> adj) {
  const int n = static_cast<int>(adj.size());
  for (int i = 0; i < n; ++i) adj[i][i] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (adj[i][k])
        for (int j = 0; j < n; ++j)
          if (adj[k][j]) adj[i][j] = true;
  return adj;
}

bool is_transitive(const std::vector<std::vector<bool>>& adj) {
  return adj == transitive_closure(adj);
}

PreorderAnalysis analyze_preorder(const std::vector<std::vector<bool>>& one_step,
                                  const std::vector<std::string>& names) {
  const int n = static_cast<int>(one_step.size());
  PreorderAnalysis out;
  out.geq = one_step;
  for (int i = 0; i < n; ++i) out.geq[i][i] = true;
  if (!is_transitive(out.geq))
    fail(Errc::internal, "one-step relation is not transitive; input data violates the axioms");

  // Mutual comparability classes.
  std::vector<int> raw_class(n, -1);
  int raw_count = 0;
  for (int i = 0; i < n; ++i) {
    if (raw_class[i] >= 0) continue;
    raw_class[i] = raw_count;
    for (int j = i + 1; j < n; ++j)
      if (raw_class[j] < 0 && out.geq[i][j] && out.geq[j][i]) raw_class[j] = raw_count;
    ++raw_count;
  }

  std::vector<std::vector<int>> raw_members(raw_count);
  for (int i = 0; i < n; ++i) raw_members[raw_class[i]].push_back(i);

  std::vector<int> order(raw_count);
  for (int c = 0; c < raw_count; ++c) order[c] = c;
  auto min_name = [&](int c) -> const std::string& {
    int best = raw_members[c][0];
    for (int i : raw_members[c])
      if (names[i] < names[best]) best = i;
    return names[best];
  };
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return min_name(a) < min_name(b); });

  out.classes.resize(raw_count);
  out.class_of.assign(n, -1);
  for (int pos = 0; pos < raw_count; ++pos) {
    out.classes[pos] = raw_members[order[pos]];
    std::sort(out.classes[pos].begin(), out.classes[pos].end(),
              [&](int a, int b) { return names[a] < names[b]; });
    for (int i : out.classes[pos]) out.class_of[i] = pos;
  }

  out.class_geq.assign(raw_count, std::vector<bool>(raw_count, false));
  for (int c = 0; c < raw_count; ++c) out.class_geq[c][c] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (out.geq[i][j]) out.class_geq[out.class_of[i]][out.class_of[j]] = true;
  for (int a = 0; a < raw_count; ++a)
    for (int b = 0; b < raw_count; ++b)
      if (a != b && out.class_geq[a][b] && out.class_geq[b][a])
        fail(Errc::internal, "class order is not antisymmetric");
  return out;
}

bool is_upward_closed(const std::vector<std::vector<bool>>& class_geq, const std::set<int>& q) {
  const int n = static_cast<int>(class_geq.size());
  for (int below : q)
    for (int above = 0; above < n; ++above)
      if (class_geq[above][below] && !q.count(above)) return false;
  return true;
}

std::vector<std::set<int>> upward_closed_sets(const std::vector<std::vector<bool>>& class_geq,
                                              std::size_t budget) {
  const int n = static_cast<int>(class_geq.size());

  // Visit classes from top to bottom so that the inclusion constraint only
  // looks at already-decided classes.
  std::vector<int> topo;
  {
    std::vector<bool> used(n, false);
    for (int step = 0; step < n; ++step) {
      for (int c = 0; c < n; ++c) {
        if (used[c]) continue;
        bool maximal = true;
        for (int above = 0; above < n; ++above)
          if (above != c && !used[above] && class_geq[above][c]) {
            maximal = false;
            break;
          }
        if (maximal) {
          topo.push_back(c);
          used[c] = true;
          break;
        }
      }
    }
  }

  std::vector<std::set<int>> result;
  std::set<int> current;
  auto dfs = [&](auto&& self, int pos) -> void {
    if (result.size() > budget)
      fail(Errc::budget_exceeded, "more than " + std::to_string(budget) + " coideals");
    if (pos == n) {
      result.push_back(current);
      return;
    }
    int c = topo[pos];
    self(self, pos + 1);  // exclude c
    bool can_include = true;
    for (int above = 0; above < n; ++above)
      if (above != c && class_geq[above][c] && !current.count(above)) {
        can_include = false;
        break;
      }
    if (can_include) {
      current.insert(c);
      self(self, pos + 1);
      current.erase(c);
    }
  };
  dfs(dfs, 0);
  std::sort(result.begin(), result.end(), [](const std::set<int>& a, const std::set<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return result;
}

std::vector<std::vector<int>> complete_chains_topdown(
    const std::vector<std::vector<bool>>& class_geq, std::size_t cap, bool& truncated) {
  const int n = static_cast<int>(class_geq.size());
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<bool> used(n, false);
  truncated = false;
  auto dfs = [&](auto&& self) -> void {
    if (truncated) return;
    if (static_cast<int>(current.size()) == n) {
      if (out.size() == cap) {
        truncated = true;
        return;
      }
      out.push_back(current);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool maximal = true;
      for (int above = 0; above < n; ++above)
        if (above != c && !used[above] && class_geq[above][c]) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      used[c] = true;
      current.push_back(c);
      self(self);
      current.pop_back();
      used[c] = false;
      if (truncated) return;
    }
  };
  dfs(dfs);
  return out;
}

std::vector<int> random_chain_topdown(const std::vector<std::vector<bool>>& class_geq,
                                      std::mt19937& rng) {
  const int n = static_cast<int>(class_geq.size());
  std::vector<int> chain;
  std::vector<bool> used(n, false);
  while (static_cast<int>(chain.size()) < n) {
    std::vector<int> maximal;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int above = 0; above < n; ++above)
        if (above != c && !used[above] && class_geq[above][c]) {
          ok = false;
          break;
        }
      if (ok) maximal.push_back(c);
    }
    std::uniform_int_distribution<std::size_t> pick(0, maximal.size() - 1);
    int chosen = maximal[pick(rng)];
    used[chosen] = true;
    chain.push_back(chosen);
  }
  return chain;
}

}  // namespace cellrep::detail
