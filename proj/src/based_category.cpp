#include "cellrep/based_category.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cellrep {

Multiset& add_scaled(Multiset& into, const Multiset& other, long long factor) {
  if (factor == 0) return into;
  for (const auto& [name, count] : other) {
    long long& slot = into[name];
    slot += factor * count;
    if (slot == 0) into.erase(name);
  }
  return into;
}

namespace {

std::string multiset_to_string(const Multiset& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [name, count] : m) {
    if (!first) os << ", ";
    first = false;
    os << name << ": " << count;
  }
  os << '}';
  return os.str();
}

}  // namespace

BasedCategory::BasedCategory(std::vector<std::string> objects,
                             std::vector<OneMorphism> one_morphisms, CompositionMap composition,
                             std::optional<Involution> involution, nlohmann::json metadata)
    : objects_(std::move(objects)),
      one_morphisms_(std::move(one_morphisms)),
      composition_(std::move(composition)),
      involution_(std::move(involution)),
      metadata_(std::move(metadata)) {
  std::set<std::string> seen_objects(objects_.begin(), objects_.end());
  if (seen_objects.size() != objects_.size())
    fail(Errc::invalid_input, "duplicate object labels");
  for (const auto& obj : objects_)
    if (obj.find('|') != std::string::npos)
      fail(Errc::invalid_input, "object label contains '|': " + obj);

  for (std::size_t i = 0; i < one_morphisms_.size(); ++i) {
    const auto& m = one_morphisms_[i];
    if (m.name.find('|') != std::string::npos)
      fail(Errc::invalid_input, "1-morphism name contains '|': " + m.name);
    if (!index_.emplace(m.name, static_cast<int>(i)).second)
      fail(Errc::invalid_input, "duplicate 1-morphism name: " + m.name);
    if (m.is_identity) identities_.emplace(m.dom, m.name);  // defects reported by validate
  }

  // Normalize: zero multiplicities carry no information.
  for (auto& [key, multiset] : composition_) {
    (void)key;
    for (auto it = multiset.begin(); it != multiset.end();)
      it = (it->second == 0) ? multiset.erase(it) : std::next(it);
  }
}

bool BasedCategory::has_object(const std::string& label) const {
  return std::find(objects_.begin(), objects_.end(), label) != objects_.end();
}

bool BasedCategory::has_morphism(const std::string& name) const { return index_.count(name) > 0; }

const OneMorphism& BasedCategory::morphism(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(Errc::invalid_input, "unknown 1-morphism: " + name);
  return one_morphisms_[it->second];
}

int BasedCategory::morphism_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(Errc::invalid_input, "unknown 1-morphism: " + name);
  return it->second;
}

const std::string& BasedCategory::identity_of(const std::string& object) const {
  auto it = identities_.find(object);
  if (it == identities_.end())
    fail(Errc::invalid_input, "no identity 1-morphism on object " + object);
  return it->second;
}

bool BasedCategory::composable(const std::string& f, const std::string& g) const {
  return morphism(f).dom == morphism(g).cod;
}

Multiset BasedCategory::compose(const std::string& f, const std::string& g) const {
  if (!composable(f, g))
    fail(Errc::composition_undefined,
         f + " \xE2\x88\x98 " + g + " undefined: dom(" + f + ") != cod(" + g + ")");
  auto it = composition_.find({f, g});
  return it == composition_.end() ? Multiset{} : it->second;
}

long long BasedCategory::constant(const std::string& f, const std::string& g,
                                  const std::string& h) const {
  Multiset m = compose(f, g);
  auto it = m.find(h);
  return it == m.end() ? 0 : it->second;
}

Multiset BasedCategory::compose_multisets(const Multiset& a, const Multiset& b) const {
  Multiset out;
  for (const auto& [f, cf] : a)
    for (const auto& [g, cg] : b) add_scaled(out, compose(f, g), cf * cg);
  return out;
}

const std::string& BasedCategory::star(const std::string& f) const {
  if (!involution_) fail(Errc::missing_involution, "category carries no involution");
  auto it = involution_->find(f);
  if (it == involution_->end()) fail(Errc::invalid_input, "involution undefined on " + f);
  return it->second;
}

bool BasedCategory::same_structure(const BasedCategory& other) const {
  auto morphism_eq = [](const OneMorphism& a, const OneMorphism& b) {
    return a.name == b.name && a.dom == b.dom && a.cod == b.cod &&
           a.is_identity == b.is_identity;
  };
  return objects_ == other.objects_ &&
         std::equal(one_morphisms_.begin(), one_morphisms_.end(), other.one_morphisms_.begin(),
                    other.one_morphisms_.end(), morphism_eq) &&
         composition_ == other.composition_ && involution_ == other.involution_;
}

ValidationReport validate_category(const BasedCategory& cat) {
  ValidationReport report;
  auto flag = [&](const std::string& rule, const std::string& msg) {
    report.violations.push_back({rule, msg});
  };

  // Morphism endpoints must be declared objects.
  for (const auto& m : cat.one_morphisms()) {
    if (!cat.has_object(m.dom)) flag("endpoints", m.name + " has unknown dom " + m.dom);
    if (!cat.has_object(m.cod)) flag("endpoints", m.name + " has unknown cod " + m.cod);
  }

  // Exactly one identity per object, with dom == cod.
  for (const auto& obj : cat.objects()) {
    int count = 0;
    for (const auto& m : cat.one_morphisms())
      if (m.is_identity && m.dom == obj) {
        ++count;
        if (m.cod != obj) flag("identity", m.name + " is an identity with dom != cod");
      }
    if (count != 1)
      flag("identity", "object " + obj + " has " + std::to_string(count) +
                           " identity 1-morphisms (wants exactly 1)");
  }
  for (const auto& m : cat.one_morphisms())
    if (m.is_identity && m.dom != m.cod)
      flag("identity", m.name + " flagged identity but dom != cod");

  // Composition entries: known names, composable key, matching target
  // endpoints, non-negative multiplicities.
  for (const auto& [key, multiset] : cat.composition()) {
    const auto& [f, g] = key;
    if (!cat.has_morphism(f) || !cat.has_morphism(g)) {
      flag("composition-key", f + "|" + g + " references an unknown 1-morphism");
      continue;
    }
    if (cat.morphism(f).dom != cat.morphism(g).cod) {
      flag("composition-key", f + "|" + g + " is not a composable pair");
      continue;
    }
    for (const auto& [h, count] : multiset) {
      if (!cat.has_morphism(h)) {
        flag("composition-entry", f + "|" + g + " produces unknown 1-morphism " + h);
        continue;
      }
      if (count < 0)
        flag("composition-entry",
             "c_{" + f + "," + g + "}^{" + h + "} = " + std::to_string(count) + " < 0");
      const auto& hm = cat.morphism(h);
      if (hm.dom != cat.morphism(g).dom || hm.cod != cat.morphism(f).cod)
        flag("composition-entry", f + "|" + g + " -> " + h + " has mismatched dom/cod");
    }
  }
  if (!report.ok()) return report;  // later checks assume structural sanity

  // Unit laws.
  for (const auto& m : cat.one_morphisms()) {
    if (!cat.has_object(m.dom) || !cat.has_object(m.cod)) continue;
    const Multiset expected{{m.name, 1}};
    const std::string& left_id = cat.identity_of(m.cod);
    const std::string& right_id = cat.identity_of(m.dom);
    if (cat.compose(left_id, m.name) != expected)
      flag("unit-law", left_id + " \xE2\x88\x98 " + m.name + " = " +
                           multiset_to_string(cat.compose(left_id, m.name)));
    if (cat.compose(m.name, right_id) != expected)
      flag("unit-law", m.name + " \xE2\x88\x98 " + right_id + " = " +
                           multiset_to_string(cat.compose(m.name, right_id)));
  }

  // Associativity of structure constants:
  //   Σ_H c_{F,G}^H c_{H,K}^X  =  Σ_H c_{G,K}^H c_{F,H}^X   for all X.
  for (const auto& f : cat.one_morphisms())
    for (const auto& g : cat.one_morphisms()) {
      if (f.dom != g.cod) continue;
      for (const auto& k : cat.one_morphisms()) {
        if (g.dom != k.cod) continue;
        Multiset lhs, rhs;
        for (const auto& [h, c] : cat.compose(f.name, g.name))
          add_scaled(lhs, cat.compose(h, k.name), c);
        for (const auto& [h, c] : cat.compose(g.name, k.name))
          add_scaled(rhs, cat.compose(f.name, h), c);
        if (lhs != rhs) {
          flag("associativity", "(" + f.name + ", " + g.name + ", " + k.name + "): " +
                                    multiset_to_string(lhs) + " != " + multiset_to_string(rhs));
        }
      }
    }

  // Involution: bijection, swaps dom/cod, fixes identities, anti-automorphism
  // on structure constants.
  if (cat.involution()) {
    const auto& inv = *cat.involution();
    std::set<std::string> values;
    bool structurally_ok = true;
    for (const auto& m : cat.one_morphisms()) {
      auto it = inv.find(m.name);
      if (it == inv.end()) {
        flag("involution", "* undefined on " + m.name);
        structurally_ok = false;
        continue;
      }
      if (!cat.has_morphism(it->second)) {
        flag("involution", m.name + "* = " + it->second + " is not a 1-morphism");
        structurally_ok = false;
        continue;
      }
      values.insert(it->second);
      const auto& target = cat.morphism(it->second);
      if (target.dom != m.cod || target.cod != m.dom)
        flag("involution", m.name + "* does not swap dom and cod");
      if (m.is_identity && it->second != m.name)
        flag("involution", "identity " + m.name + " is not a fixed point of *");
    }
    if (inv.size() != cat.one_morphisms().size() || values.size() != cat.one_morphisms().size())
      flag("involution", "* is not a bijection on 1-morphism names");
    if (structurally_ok && values.size() == cat.one_morphisms().size()) {
      for (const auto& f : cat.one_morphisms())
        for (const auto& g : cat.one_morphisms()) {
          if (f.dom != g.cod) continue;
          for (const auto& h : cat.one_morphisms()) {
            long long lhs = cat.constant(f.name, g.name, h.name);
            long long rhs = cat.constant(cat.star(g.name), cat.star(f.name), cat.star(h.name));
            if (lhs != rhs)
              flag("involution-anti",
                   "c_{" + f.name + "," + g.name + "}^{" + h.name + "} = " + std::to_string(lhs) +
                       " but c_{" + g.name + "*," + f.name + "*}^{" + h.name +
                       "*} = " + std::to_string(rhs));
          }
        }
    }
  }

  return report;
}

int MultTable::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == label) return i;
  fail(Errc::invalid_input, "unknown element label: " + label);
}

std::optional<std::string> check_monoid(const MultTable& t, int* identity_out) {
  const int n = t.size();
  if (n == 0) return "empty element set";
  if (static_cast<int>(t.table.size()) != n) return "table has wrong number of rows";
  for (const auto& row : t.table) {
    if (static_cast<int>(row.size()) != n) return "table has a ragged row";
    for (int v : row)
      if (v < 0 || v >= n) return "table entry out of range";
  }
  {
    std::set<std::string> labels(t.elements.begin(), t.elements.end());
    if (static_cast<int>(labels.size()) != n) return "duplicate element labels";
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.product(t.product(a, b), c) != t.product(a, t.product(b, c)))
          return "not associative at (" + t.elements[a] + ", " + t.elements[b] + ", " +
                 t.elements[c] + ")";
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (t.product(e, a) != a || t.product(a, e) != a) {
        ok = false;
        break;
      }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) return "no two-sided identity element";
  if (identity_out) *identity_out = identity;
  return std::nullopt;
}

std::optional<std::string> check_group(const MultTable& t) {
  int identity = -1;
  if (auto why = check_monoid(t, &identity)) return why;
  const int n = t.size();
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (t.product(a, b) == identity && t.product(b, a) == identity) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) return "element " + t.elements[a] + " has no inverse";
  }
  return std::nullopt;
}

std::vector<int> inverse_map(const MultTable& t) {
  if (auto why = check_group(t)) fail(Errc::invalid_input, "not a group: " + *why);
  int identity = -1;
  check_monoid(t, &identity);
  std::vector<int> inv(t.size(), -1);
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b)
      if (t.product(a, b) == identity && t.product(b, a) == identity) inv[a] = b;
  return inv;
}

BasedCategory build_group_category(const MultTable& group) {
  if (auto why = check_group(group)) fail(Errc::invalid_input, "not a group: " + *why);
  int identity = -1;
  check_monoid(group, &identity);
  const int n = group.size();

  auto name_of = [&](int g) { return "F_" + group.elements[g]; };

  std::vector<OneMorphism> morphisms;
  morphisms.reserve(n);
  for (int g = 0; g < n; ++g)
    morphisms.push_back({name_of(g), kClub, kClub, g == identity});

  BasedCategory::CompositionMap comp;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) comp[{name_of(g), name_of(h)}] = {{name_of(group.product(g, h)), 1}};

  BasedCategory::Involution inv;
  std::vector<int> invmap = inverse_map(group);
  for (int g = 0; g < n; ++g) inv[name_of(g)] = name_of(invmap[g]);

  nlohmann::json meta{{"builder", "group"}, {"order", n}};
  return BasedCategory({kClub}, std::move(morphisms), std::move(comp), std::move(inv),
                       std::move(meta));
}

BasedCategory build_cartan_category(const IntMatrix& cartan, const std::vector<int>& sigma) {
  if (!cartan.is_square() || cartan.rows() == 0)
    fail(Errc::invalid_input, "Cartan matrix must be square and non-empty");
  const int n = cartan.rows();
  for (int i = 0; i < n; ++i) {
    if (cartan(i, i) < 1) fail(Errc::invalid_input, "Cartan diagonal entries must be >= 1");
    for (int j = 0; j < n; ++j)
      if (cartan(i, j) < 0) fail(Errc::invalid_input, "Cartan entries must be >= 0");
  }
  if (static_cast<int>(sigma.size()) != n)
    fail(Errc::invalid_input, "sigma must be a permutation of 0.." + std::to_string(n - 1));
  std::vector<int> sigma_inv(n, -1);
  for (int i = 0; i < n; ++i) {
    if (sigma[i] < 0 || sigma[i] >= n || sigma_inv[sigma[i]] != -1)
      fail(Errc::invalid_input, "sigma is not a permutation");
    sigma_inv[sigma[i]] = i;
  }

  // Nakayama compatibility: dim e_aAe_b = dim e_{sigma(b)}Ae_a for a
  // self-injective algebra, so the declared involution respects composition.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (cartan(a, b) != cartan(sigma[b], a))
        fail(Errc::invalid_input,
             "Cartan matrix is not compatible with the Nakayama permutation at (" +
                 std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");

  // Connectedness: indecomposable under simultaneous row/column permutation.
  {
    std::vector<int> component(n, -1);
    std::vector<int> stack{0};
    component[0] = 0;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < n; ++b)
        if (component[b] < 0 && (cartan(a, b) > 0 || cartan(b, a) > 0)) {
          component[b] = 0;
          stack.push_back(b);
        }
    }
    for (int b = 0; b < n; ++b)
      if (component[b] < 0)
        fail(Errc::invalid_input, "Cartan matrix decomposes into blocks (algebra not connected)");
  }

  auto name_of = [&](int i, int j) {
    if (n <= 9) return "F" + std::to_string(i + 1) + std::to_string(j + 1);
    return "F" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
  };

  std::vector<OneMorphism> morphisms;
  morphisms.push_back({"1", kClub, kClub, true});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) morphisms.push_back({name_of(i, j), kClub, kClub, false});

  BasedCategory::CompositionMap comp;
  comp[{"1", "1"}] = {{"1", 1}};
  long long m_total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m_total += cartan(i, j);
      comp[{"1", name_of(i, j)}] = {{name_of(i, j), 1}};
      comp[{name_of(i, j), "1"}] = {{name_of(i, j), 1}};
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          long long c = cartan(j, s);
          if (c > 0) comp[{name_of(i, j), name_of(s, t)}] = {{name_of(i, t), c}};
        }

  BasedCategory::Involution inv;
  inv["1"] = "1";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[name_of(i, j)] = name_of(sigma_inv[j], i);

  nlohmann::json cartan_json = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n; ++j) row.push_back(cartan(i, j));
    cartan_json.push_back(row);
  }
  nlohmann::json meta{{"builder", "cartan"}, {"m", m_total}, {"cartan", cartan_json},
                      {"sigma", sigma}};
  return BasedCategory({kClub}, std::move(morphisms), std::move(comp), std::move(inv),
                       std::move(meta));
}

std::optional<std::string> check_kl_ring_data(const KLRingData& data) {
  int identity = -1;
  if (auto why = check_monoid(data.ring, &identity)) return why;
  if (identity != 0) return "the identity element must be listed first";
  const int n = data.ring.size();
  if (static_cast<int>(data.basis.size()) != n)
    return "basis must have exactly one expansion per element";
  for (int w = 0; w < n; ++w) {
    auto it = data.basis.find(data.ring.elements[w]);
    if (it == data.basis.end()) return "no basis expansion for element " + data.ring.elements[w];
    const auto& vec = it->second;
    if (static_cast<int>(vec.size()) != n)
      return "basis expansion for " + data.ring.elements[w] + " has wrong length";
    if (vec[w] != 1)
      return "basis expansion for " + data.ring.elements[w] + " is not unitriangular (diagonal)";
    for (int v = w + 1; v < n; ++v)
      if (vec[v] != 0)
        return "basis expansion for " + data.ring.elements[w] +
               " is not unitriangular (support above its element)";
  }
  return std::nullopt;
}

BasedCategory build_kl_category(const KLRingData& data) {
  if (auto why = check_kl_ring_data(data)) fail(Errc::invalid_input, *why);
  const int n = data.ring.size();
  const auto& elements = data.ring.elements;

  std::vector<std::vector<long long>> expansion(n);
  for (int w = 0; w < n; ++w) expansion[w] = data.basis.at(elements[w]);

  // Solve the unitriangular system Σ_w x_w θ_w = y over the integers.
  auto to_theta_basis = [&](std::vector<long long> y) {
    std::vector<long long> x(n, 0);
    for (int w = n - 1; w >= 0; --w) {
      x[w] = y[w];
      if (x[w] != 0)
        for (int v = 0; v <= w; ++v) y[v] -= x[w] * expansion[w][v];
    }
    return x;
  };

  auto name_of = [&](int w) { return "th_" + elements[w]; };

  std::vector<OneMorphism> morphisms;
  for (int w = 0; w < n; ++w) morphisms.push_back({name_of(w), kClub, kClub, w == 0});

  BasedCategory::CompositionMap comp;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const auto& left = data.opposite_composition ? expansion[v] : expansion[u];
      const auto& right = data.opposite_composition ? expansion[u] : expansion[v];
      std::vector<long long> prod(n, 0);
      for (int i = 0; i < n; ++i) {
        if (left[i] == 0) continue;
        for (int j = 0; j < n; ++j)
          if (right[j] != 0) prod[data.ring.product(i, j)] += left[i] * right[j];
      }
      std::vector<long long> coeffs = to_theta_basis(std::move(prod));
      Multiset entry;
      for (int w = 0; w < n; ++w) {
        if (coeffs[w] < 0)
          fail(Errc::not_a_based_ring, "negative structure constant c_{" + name_of(u) + "," +
                                           name_of(v) + "}^{" + name_of(w) + "} = " +
                                           std::to_string(coeffs[w]));
        if (coeffs[w] > 0) entry[name_of(w)] = coeffs[w];
      }
      comp[{name_of(u), name_of(v)}] = std::move(entry);
    }

  // θ_w ↦ θ_{w^{-1}} when the ring is a group and the basis is *-compatible.
  std::optional<BasedCategory::Involution> involution;
  if (!check_group(data.ring)) {
    std::vector<int> invmap = inverse_map(data.ring);
    bool compatible = true;
    for (int u = 0; u < n && compatible; ++u)
      for (int v = 0; v < n && compatible; ++v)
        for (int w = 0; w < n; ++w) {
          auto coeff = [&](int a, int b, int c) {
            auto it = comp.at({name_of(a), name_of(b)}).find(name_of(c));
            return it == comp.at({name_of(a), name_of(b)}).end() ? 0LL : it->second;
          };
          if (coeff(u, v, w) != coeff(invmap[v], invmap[u], invmap[w])) {
            compatible = false;
            break;
          }
        }
    if (compatible) {
      BasedCategory::Involution inv;
      for (int w = 0; w < n; ++w) inv[name_of(w)] = name_of(invmap[w]);
      involution = std::move(inv);
    }
  }

  nlohmann::json meta{{"builder", "kl"},
                      {"composition", data.opposite_composition ? "opposite-ring" : "ring"}};
  return BasedCategory({kClub}, std::move(morphisms), std::move(comp), std::move(involution),
                       std::move(meta));
}

namespace {

// Dihedral element as r^k s^f with r = st of order n.
struct DihedralElement {
  int k = 0;
  int f = 0;
};

DihedralElement dihedral_mul(int n, DihedralElement a, DihedralElement b) {
  if (a.f == 0) return {(a.k + b.k) % n, b.f};
  return {((a.k - b.k) % n + n) % n, 1 - b.f};
}

DihedralElement word_to_element(int n, const std::string& word) {
  DihedralElement acc{0, 0};
  for (char ch : word) {
    DihedralElement letter = (ch == 's') ? DihedralElement{0, 1} : dihedral_mul(n, {0, 1}, {1, 0});
    acc = dihedral_mul(n, acc, letter);
  }
  return acc;
}

std::string alternating_word(char lead, int length) {
  std::string w;
  for (int i = 0; i < length; ++i) w += (i % 2 == 0) ? lead : (lead == 's' ? 't' : 's');
  return w;
}

}  // namespace

MultTable dihedral_table(int n) {
  if (n < 2) fail(Errc::invalid_input, "dihedral order parameter must be >= 2");
  std::vector<std::string> words{"e"};
  for (int len = 1; len < n; ++len) {
    words.push_back(alternating_word('s', len));
    words.push_back(alternating_word('t', len));
  }
  words.push_back(alternating_word('s', n));  // the longest element; s- and t-words coincide

  const int size = static_cast<int>(words.size());
  std::vector<DihedralElement> encoding(size);
  std::map<std::pair<int, int>, int> lookup;
  for (int i = 0; i < size; ++i) {
    encoding[i] = word_to_element(n, words[i] == "e" ? "" : words[i]);
    if (!lookup.emplace(std::make_pair(encoding[i].k, encoding[i].f), i).second)
      fail(Errc::internal, "dihedral word encoding collision");
  }

  MultTable t;
  t.elements = words;
  t.table.assign(size, std::vector<int>(size, 0));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      DihedralElement p = dihedral_mul(n, encoding[a], encoding[b]);
      t.table[a][b] = lookup.at({p.k, p.f});
    }
  return t;
}

BasedCategory build_dihedral_soergel(int n) {
  MultTable w = dihedral_table(n);
  const int size = w.size();

  KLRingData data;
  data.ring = w;
  data.opposite_composition = true;  // compose as correspondences; see README
  auto word_length = [](const std::string& word) {
    return word == "e" ? 0 : static_cast<int>(word.size());
  };
  for (int i = 0; i < size; ++i) {
    std::vector<long long> vec(size, 0);
    // Bruhat order on a dihedral group: v < w iff len(v) < len(w).
    for (int j = 0; j < size; ++j)
      if (word_length(w.elements[j]) < word_length(w.elements[i])) vec[j] = 1;
    vec[i] = 1;
    data.basis[w.elements[i]] = std::move(vec);
  }

  if (n == 4) {
    // Cross-check the eight expansions against the known closed form.
    const std::map<std::string, std::vector<std::string>> expected{
        {"e", {"e"}},
        {"s", {"e", "s"}},
        {"t", {"e", "t"}},
        {"st", {"e", "s", "t", "st"}},
        {"ts", {"e", "s", "t", "ts"}},
        {"sts", {"e", "s", "t", "st", "ts", "sts"}},
        {"tst", {"e", "s", "t", "st", "ts", "tst"}},
        {"stst", {"e", "s", "t", "st", "ts", "sts", "tst", "stst"}},
    };
    for (const auto& [elem, support] : expected) {
      std::vector<long long> vec(size, 0);
      for (const auto& v : support) vec[w.index_of(v)] = 1;
      if (data.basis.at(elem) != vec)
        fail(Errc::internal, "dihedral basis expansion mismatch for " + elem);
    }
  }

  return build_kl_category(data);
}

}  // namespace cellrep
