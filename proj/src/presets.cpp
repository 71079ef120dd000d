#include "sympair/presets.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympair {

void ThetaPreset::validate() const {
  const auto fail = [&](const std::string& what) { throw std::invalid_argument("preset '" + name + "': " + what); };
  if (iota.size() != delta_min_size) fail("iota must permute all " + std::to_string(delta_min_size) + " simple roots");
  for (std::size_t i = 0; i < iota.size(); ++i) {
    if (iota[i] >= delta_min_size) fail("iota(" + std::to_string(i) + ") out of range");
    if (iota[iota[i]] != i) fail("iota is not an involution at " + std::to_string(i));
  }
  std::vector<std::size_t> fixed;
  for (std::size_t i = 0; i < iota.size(); ++i)
    if (iota[i] == i) fixed.push_back(i);
  if (delta_minus != fixed) fail("delta_minus must list the fixed points of iota in increasing order");
  if (m() > kMaxF2Rank) fail("delta_minus is too large");
  std::vector<int> seen(delta_min_size, 0);
  for (auto s : s_choice) {
    if (s >= delta_min_size || iota[s] == s) fail("s_choice must consist of roots moved by iota");
    if (seen[s]++ || seen[iota[s]]++) fail("s_choice meets its image under iota");
  }
  for (std::size_t i = 0; i < delta_min_size; ++i)
    if (iota[i] != i && !seen[i]) fail("s_choice and its image do not cover the moved roots");
  if (b.ambient_rank() != m()) fail("B must be a subgroup of (Z/2)^" + std::to_string(m()));
  if (h1_h_order && *h1_h_order < 1) fail("h1_h must be positive");
}

ThetaPreset builtin_preset(const std::string& family, int n) {
  if (n < 1) throw std::invalid_argument("preset size must be >= 1");
  ThetaPreset p;
  p.family = family;
  p.n = n;
  p.name = family + ":" + std::to_string(n);
  p.delta_min_size = static_cast<std::size_t>(n - 1);
  p.iota.resize(p.delta_min_size);
  if (family == "GL") {
    // theta reverses the Dynkin diagram of GL_n; the middle root is fixed when n is even
    for (std::size_t i = 0; i < p.delta_min_size; ++i) {
      p.iota[i] = p.delta_min_size - 1 - i;
      if (p.iota[i] == i) p.delta_minus.push_back(i);
      if (i < p.iota[i]) p.s_choice.push_back(i);
    }
    p.b = F2Subgroup::full(p.m());
    p.h1_h_order = 1;
    p.note = "H = GL_n: B is all of (Z/2)^{Delta_-}, omega = (eta o det)^{n+1}";
  } else if (family == "U") {
    for (std::size_t i = 0; i < p.delta_min_size; ++i) {
      p.iota[i] = i;
      p.delta_minus.push_back(i);
    }
    p.b = F2Subgroup(p.m());
    p.h1_h_order = 2;
    p.note = "H = U(n): B is trivial, elliptic twisted Levis are labelled by compositions of n";
  } else {
    throw std::invalid_argument("no built-in preset for family '" + family + "' (supply a fixture)");
  }
  p.validated = true;
  p.validate();
  return p;
}

ThetaPreset preset_from_selector(const std::string& selector) {
  const auto colon = selector.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("preset selector must look like FAMILY:n, got '" + selector + "'");
  const std::string n = selector.substr(colon + 1);
  if (n.empty() || n.size() > 4 || !std::all_of(n.begin(), n.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("bad preset size in '" + selector + "'");
  return builtin_preset(selector.substr(0, colon), std::stoi(n));
}

ThetaPreset preset_from_json(const nlohmann::json& j) {
  ThetaPreset p;
  p.name = j.value("name", std::string("fixture"));
  p.family = j.value("family", std::string("fixture"));
  p.n = j.value("n", 0);
  p.delta_min_size = j.at("delta_min").get<std::size_t>();
  p.iota = j.at("iota").get<std::vector<std::size_t>>();
  p.delta_minus = j.at("delta_minus").get<std::vector<std::size_t>>();
  if (j.contains("s_choice")) p.s_choice = j.at("s_choice").get<std::vector<std::size_t>>();
  if (p.delta_minus.size() > kMaxF2Rank) throw std::invalid_argument("preset fixture: delta_minus is too large");
  std::vector<Mask> gens;
  for (const auto& g : j.value("B", nlohmann::json::array())) gens.push_back(parse_mask(g.get<std::string>(), p.delta_minus.size()));
  p.b = F2Subgroup::span(p.delta_minus.size(), gens);
  if (j.contains("h1_h")) p.h1_h_order = j.at("h1_h").get<std::int64_t>();
  p.note = j.value("note", std::string());
  p.validated = false;
  p.validate();
  return p;
}

nlohmann::json preset_to_json(const ThetaPreset& p) {
  nlohmann::json b = nlohmann::json::array();
  for (Mask x : p.b.basis()) b.push_back(mask_string(x, p.m()));
  nlohmann::json j{{"name", p.name},         {"family", p.family},       {"n", p.n},
                   {"delta_min", p.delta_min_size}, {"iota", p.iota}, {"delta_minus", p.delta_minus},
                   {"s_choice", p.s_choice}, {"B", b},                  {"validated", p.validated}};
  if (p.h1_h_order) j["h1_h"] = *p.h1_h_order;
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

std::vector<int> composition_from_cuts(int n, Mask cuts) {
  std::vector<int> parts;
  int start = 0;
  for (int i = 0; i + 1 < n; ++i)
    if ((cuts >> i) & 1) {
      parts.push_back(i + 1 - start);
      start = i + 1;
    }
  parts.push_back(n - start);
  return parts;
}

std::vector<EllipticLeviDatum> enumerate_elliptic_levis(const ThetaPreset& p) {
  const std::size_t m = p.m();
  const Mask all = full_mask(m);
  std::vector<EllipticLeviDatum> out;
  for (Mask i = 0;; ++i) {
    EllipticLeviDatum d;
    d.i = i;
    d.size = static_cast<std::size_t>(__builtin_popcount(i));
    d.sign = (m - d.size) % 2 ? -1 : 1;
    d.h1 = F2Subgroup::coordinate(m, i);
    d.a_i = F2Subgroup::coordinate(m, all & ~i);
    d.mab_index = p.b.projection(i).order();
    const std::uint64_t h1 = std::uint64_t{1} << d.size;
    if (h1 % d.mab_index) throw std::logic_error("enumerate_elliptic_levis: |proj_I B| does not divide 2^|I|");
    d.ker1_size = h1 / d.mab_index;
    if (p.family == "U") d.composition = composition_from_cuts(p.n, i);
    out.push_back(std::move(d));
    if (i == all) break;
  }
  return out;
}

SubgroupLatticeReport a_subgroup_lattice_check(const ThetaPreset& p) {
  const std::size_t m = p.m();
  if (m > 10) throw std::invalid_argument("a_subgroup_lattice_check: exhaustive check limited to |Delta_-| <= 10");
  const Mask all = full_mask(m);
  SubgroupLatticeReport rep;
  std::vector<F2Subgroup> a;
  for (Mask i = 0;; ++i) {
    a.push_back(F2Subgroup::coordinate(m, all & ~i));
    if (i == all) break;
  }
  for (Mask i = 0; i < a.size(); ++i)
    for (Mask j = 0; j < a.size(); ++j) {
      ++rep.pairs;
      if (!(a[i] + a[j] == a[i & j])) rep.failures.emplace_back(i, j);
    }
  return rep;
}

FiberCount inner_form_fiber_count(const LatticeWithAction& torus, std::int64_t h1_g_order) {
  if (h1_g_order < 1) throw std::invalid_argument("inner_form_fiber_count: |H^1(F,G)| must be >= 1");
  FiberCount f;
  f.h1_t = torus_h1(torus);
  f.h1_g = h1_g_order;
  f.count = Rational(f.h1_t.order(), Integer(h1_g_order));
  return f;
}

}  // namespace sympair
