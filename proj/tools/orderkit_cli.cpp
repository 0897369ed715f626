//  Copyright 2026 The orderkit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Command-line front end.  Every verb prints sorted key=value lines; table
// rows hold several sorted pairs.  Exit status: 0 ok, 1 a checked property
// failed, 2 input or usage error (including refused computations).

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orderkit/orderkit.hpp"

namespace ok = orderkit;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

class Report {
 public:
  template <typename T>
  void set(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    values_[key] = s.str();
  }
  void flag(const std::string& key, bool value) { values_[key] = value ? "true" : "false"; }
  void fraction(const std::string& key, const ok::Rational& q) { values_[key] = ok::to_fraction(q); }
  void print(std::ostream& out) const {
    for (const auto& [k, v] : values_) out << k << '=' << v << '\n';
  }
  std::string row() const {
    std::string out;
    for (const auto& [k, v] : values_) out += (out.empty() ? "" : " ") + k + '=' + v;
    return out;
  }

 private:
  std::map<std::string, std::string> values_;
};

// Constructors by descriptive name; the numeric aliases follow the example
// numbering users know them by.
struct ConstructorInfo {
  const char* name;
  const char* alias;
  bool uses_k;
};
constexpr ConstructorInfo kConstructors[] = {
    {"prefix-point", "3.3.2", false},      {"end-segments", "3.3.4", false},
    {"prefix-window", "3.4.2", true},      {"short-arcs", "3.6.2", true},
    {"short-segments", "3.6.7", true},     {"layered-segments", "3.8.2", true},
    {"sixfold", "3.8.4", false},           {"layered-antichains", "3.7.9", false},
};

struct ExampleInfo {
  const char* name;
  const char* alias;
};
constexpr ExampleInfo kExamples[] = {{"escape-graph", "4.11.8"}, {"pentagon-edges", "pentagon"}};

std::string resolve_constructor(const std::string& key) {
  for (const auto& c : kConstructors) {
    if (key == c.name || key == c.alias) return c.name;
  }
  throw ok::InputError("unknown constructor: " + key);
}

// A family with element names, so reports can use the example's vertex labels.
struct NamedFamily {
  ok::SetFamily family;
  std::vector<std::string> names;
};

NamedFamily example_family(const std::string& key) {
  std::string name;
  for (const auto& e : kExamples) {
    if (key == e.name || key == e.alias) name = e.name;
  }
  auto edge = [](int x, int y) { return ok::bit(x) | ok::bit(y); };
  if (name == "escape-graph") {
    return {ok::graph_family(7, {edge(0, 1), edge(2, 0), edge(3, 0), edge(4, 0), edge(4, 1), edge(5, 1), edge(5, 6)}),
            {"a", "b", "x1", "x2", "x3", "x4", "x5"}};
  }
  if (name == "pentagon-edges") {
    return {ok::graph_family(5, {edge(0, 1), edge(1, 2), edge(2, 3), edge(3, 4), edge(4, 0)}), {"0", "1", "2", "3", "4"}};
  }
  throw ok::InputError("unknown example: " + key);
}

std::vector<std::string> numeric_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string named_set(ok::Mask m, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (int e : ok::elements_of(m)) {
    out += (first ? "" : ",") + names.at(e);
    first = false;
  }
  return out + "}";
}

std::string named_family(const ok::SetFamily& f, const std::vector<std::string>& names) {
  std::string out;
  for (ok::Mask m : f) out += (out.empty() ? "" : ",") + named_set(m, names);
  return out;
}

ok::Mask parse_named_set(const std::string& text, const std::vector<std::string>& names) {
  ok::Mask out = 0;
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == '{' || c == '}' || c == ' '; }), t.end());
  std::stringstream s(t);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty()) continue;
    auto it = std::find(names.begin(), names.end(), item);
    if (it == names.end()) throw ok::InputError("unknown element: " + item);
    out |= ok::bit(static_cast<int>(it - names.begin()));
  }
  return out;
}

std::pair<std::string, int> split_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, -1};
  try {
    return {spec.substr(0, colon), std::stoi(spec.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ok::InputError("bad size in " + spec);
  }
}

int require_size(int v, const std::string& spec) {
  if (v < 0) throw ok::InputError("missing size in " + spec);
  return v;
}

// chain:N, antichain:N, antichain-top:N (N-antichain under a top),
// layered:W, or a .poset file.
ok::Poset poset_from_spec(const std::string& spec) {
  auto [kind, n] = split_spec(spec);
  if (kind == "chain") return ok::Poset::chain(require_size(n, spec));
  if (kind == "antichain") return ok::Poset::antichain(require_size(n, spec));
  if (kind == "antichain-top") {
    const int k = require_size(n, spec);
    std::vector<ok::Poset::Cover> covers;
    for (int i = 0; i < k; ++i) covers.emplace_back(i, k);
    return ok::Poset::from_covers(k + 1, covers);
  }
  if (kind == "layered") return ok::layered_antichains_poset(require_size(n, spec));
  return ok::parse_poset(ok::read_file(spec));
}

// boolean:N, m-flat:N, m-hat:N, chain:N, pentagon, or a .fam file read
// under inclusion.
ok::Semilattice lattice_from_spec(const std::string& spec) {
  auto [kind, n] = split_spec(spec);
  if (kind == "boolean") return ok::boolean_lattice(require_size(n, spec));
  if (kind == "m-flat") return ok::m_flat(require_size(n, spec));
  if (kind == "m-hat") return ok::m_hat(require_size(n, spec));
  if (kind == "chain") return ok::chain_lattice(require_size(n, spec));
  if (kind == "pentagon") return ok::pentagon_lattice();
  return ok::Semilattice::from_family(ok::parse_family(ok::read_file(spec)));
}

NamedFamily family_from_args(const std::string& file, const std::string& example) {
  if (!example.empty()) return example_family(example);
  if (file.empty()) throw ok::InputError("either --family or --example is required");
  auto f = ok::parse_family(ok::read_file(file));
  return {f, numeric_names(f.ground())};
}

void write_family(const ok::SetFamily& f, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << ok::serialize_family(f);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ok::InputError("cannot write " + out_path);
  out << ok::serialize_family(f);
}

bool all_members(const ok::SetFamily& f, const std::function<bool(ok::Mask)>& pred) {
  return std::all_of(f.begin(), f.end(), pred);
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::string constructor;
  int k = 1;
  int n = 1;
  std::string out;
};

struct Generated {
  ok::SetFamily family;
  std::string predicate;
  bool holds = false;
  std::uint64_t expected = 0;
  std::uint64_t bound = 0;
};

void require_domain(bool ok, const std::string& what) {
  if (!ok) throw ok::InputError(what);
}

Generated generate(const std::string& name, int k, int n) {
  require_domain(n >= 1 && n <= 63, "need 1 <= n <= 63");
  if (name == "short-arcs") require_domain(k >= 1 && k <= n, "need 1 <= k <= n");
  if (name == "short-segments") require_domain(k >= 1, "need k >= 1");
  if (name == "layered-segments") require_domain(k >= 2, "need k >= 2");
  Generated g;
  if (name == "prefix-point") {
    g.family = ok::prefix_point_family(n);
    g.predicate = "centered";
    g.holds = ok::is_centered(g.family);
    g.expected = static_cast<std::uint64_t>(n) * (n + 1) / 2;
    g.bound = ok::bound(ok::BoundClass::kCentered, 0, n).bound;
  } else if (name == "end-segments") {
    g.family = ok::end_segments_family(n);
    g.predicate = "centered-segments";
    g.holds = ok::is_centered(g.family) && all_members(g.family, ok::is_segment);
    g.expected = 3 * static_cast<std::uint64_t>(n) - 3;
    g.bound = ok::bound(ok::BoundClass::kCenteredSegments, 0, n).bound;
  } else if (name == "prefix-window") {
    g.family = ok::prefix_window_family(k, n);
    g.predicate = "pseudotree";
    g.holds = ok::is_pseudotree(g.family, k);
    g.expected = static_cast<std::uint64_t>(k + 1) * n - static_cast<std::uint64_t>(k) * (k + 1) / 2;
    g.bound = ok::bound(ok::BoundClass::kPseudotree, k, n).bound;
  } else if (name == "short-arcs") {
    g.family = ok::short_arcs_family(k, n);
    g.predicate = "locally-k-wide-arcs";
    g.holds = ok::is_locally_k_wide(g.family, k) && all_members(g.family, [&](ok::Mask m) { return ok::is_arc(n, m); });
    g.expected = 2ULL * k * n - static_cast<std::uint64_t>(k) * k - k + 2;
    g.bound = ok::bound(ok::BoundClass::kArcs, k, n).bound;
  } else if (name == "short-segments") {
    g.family = ok::short_segments_family(k, n);
    g.predicate = "locally-k-wide-segments";
    g.holds = ok::is_locally_k_wide(g.family, k) && all_members(g.family, ok::is_segment);
    g.expected = ok::segments_max(k, n);
    g.bound = g.expected;
  } else if (name == "layered-segments") {
    g.family = ok::layered_segments_family(k, n);
    g.predicate = "locally-k-wide";
    g.holds = ok::is_locally_k_wide(g.family, k);
    g.bound = ok::bound(ok::BoundClass::kGeneral, k, n).bound;
    g.expected = g.family.size();
  } else if (name == "sixfold") {
    g.family = ok::sixfold_family(n);
    g.predicate = "locally-k-wide";
    g.holds = ok::is_locally_k_wide(g.family, 4);
    g.bound = ok::bound(ok::BoundClass::kGeneral, 4, n).bound;
    g.expected = g.family.size();
  } else {
    throw ok::InputError("not a family constructor: " + name);
  }
  return g;
}

int run_gen(const GenArgs& a) {
  const std::string name = resolve_constructor(a.constructor);
  Report r;
  r.set("constructor", name);
  r.set("n", a.n);
  if (name == "layered-antichains") {
    ok::Poset p = ok::layered_antichains_poset(a.n);
    const auto w = ok::width(p).width;
    const auto h = ok::height(p);
    if (a.out.empty()) {
      std::cout << ok::serialize_poset(p);
    } else {
      std::ofstream(a.out) << ok::serialize_poset(p);
    }
    r.set("height", h);
    r.set("size", p.size());
    r.set("width", w);
    const bool holds = w == static_cast<std::size_t>(a.n) && p.size() == static_cast<std::size_t>(a.n) * (a.n + 1) / 2;
    r.flag("holds", holds);
    r.print(std::cout);
    return holds ? 0 : kExitFailed;
  }
  Generated g = generate(name, a.k, a.n);
  if (!g.holds) {
    r.set("failed", g.predicate);
    r.flag("holds", false);
    r.print(std::cout);
    return kExitFailed;
  }
  write_family(g.family, a.out);
  for (const auto& c : kConstructors) {
    if (name == c.name && c.uses_k) r.set("k", a.k);
  }
  r.set("bound", g.bound);
  r.set("expected", g.expected);
  r.flag("holds", true);
  r.set("predicate", g.predicate);
  r.set("size", g.family.size());
  r.print(std::cout);
  return g.family.size() == g.expected && g.family.size() <= g.bound ? 0 : kExitFailed;
}

// ---- check -----------------------------------------------------------------

int run_check(const std::string& file, const std::string& property, int k) {
  auto f = ok::parse_family(ok::read_file(file));
  Report r;
  r.set("property", property);
  r.set("size", f.size());
  bool holds = false;
  if (property == "centered") {
    holds = ok::is_centered(f);
  } else if (property == "locally-k-wide") {
    auto c = ok::check_locally_k_wide(f, k);
    holds = c.ok;
    r.set("k", k);
    if (!holds) r.set("witness", named_family(ok::SetFamily(f.ground(), c.witness), numeric_names(f.ground())));
  } else if (property == "pseudotree") {
    holds = ok::is_pseudotree(f, k);
    r.set("k", k);
  } else if (property == "tree") {
    holds = ok::is_tree(f);
  } else if (property == "forest") {
    holds = ok::is_forest(f);
  } else if (property == "union-closed") {
    holds = ok::is_union_closed(f);
  } else if (property == "intersection-closed") {
    holds = ok::is_intersection_closed(f);
  } else {
    throw ok::InputError("unknown property: " + property);
  }
  r.flag("holds", holds);
  r.print(std::cout);
  return holds ? 0 : kExitFailed;
}

// ---- bound -----------------------------------------------------------------

int run_bound(const std::string& cls, int k, int n, int r_arg, int p_arg, const std::string& poset) {
  Report r;
  r.set("class", cls);
  r.set("n", n);
  auto p_value = [&]() -> std::uint64_t {
    if (!poset.empty()) return ok::filter_count(poset_from_spec(poset));
    if (p_arg < 2) throw ok::InputError("--p (at least 2) or --poset is required");
    return static_cast<std::uint64_t>(p_arg);
  };
  if (cls == "lattice-m") {
    const auto p = p_value();
    r.set("p", p);
    r.set("bound", ok::m_bound(n, p));
    r.set("k", ok::m_bound_argmax(n, p));
  } else if (cls == "lattice-m-circ") {
    if (poset.empty()) throw ok::InputError("--poset is required");
    ok::Poset p = poset_from_spec(poset);
    r.set("p", ok::filter_count(p));
    r.set("bound", ok::m_circ_bound(n, p));
  } else if (cls == "delta") {
    if (poset.empty()) throw ok::InputError("--poset is required");
    ok::Poset p = poset_from_spec(poset);
    r.set("k", k);
    r.set("p", ok::filter_count(p));
    r.set("delta", ok::delta(k, p));
  } else if (cls == "g") {
    const auto p = p_value();
    r.set("p", p);
    r.set("bound", ok::g_formula(n, p));
  } else {
    auto rep = ok::bound(ok::parse_bound_class(cls), k, n, r_arg);
    r.set("k", k);
    r.set("formula", rep.formula);
    r.set("bound", rep.bound);
    if (rep.cls == ok::BoundClass::kUniform) r.set("r", r_arg);
    if (rep.cls == ok::BoundClass::kGeneralLog) {
      r.fraction("log_hi", rep.log_hi);
      r.fraction("log_lo", rep.log_lo);
      r.set("proof_bound", rep.proof_bound);
    } else {
      r.fraction("value", rep.value);
    }
    if (rep.attained) {
      r.set("attained", *rep.attained);
      r.flag("holds", *rep.attained <= rep.bound);
      r.print(std::cout);
      return *rep.attained <= rep.bound ? 0 : kExitFailed;
    }
  }
  r.print(std::cout);
  return 0;
}

// ---- maxsearch -------------------------------------------------------------

int run_maxsearch(const std::string& cls, std::optional<int> k, int n, std::uint64_t budget, bool emit) {
  auto res = ok::max_search(ok::parse_search_class(cls), k, n, budget);
  if (emit) std::cout << ok::serialize_family(res.witness);
  Report r;
  r.set("class", cls);
  if (k) r.set("k", *k);
  r.set("max_size", res.max_size);
  r.set("n", n);
  r.set("nodes", res.nodes);
  r.print(std::cout);
  return 0;
}

// ---- density ---------------------------------------------------------------

int run_density(const std::string& lattice, const std::string& poset, const std::string& what, int n) {
  Report r;
  r.set("what", what);
  ok::Poset p = poset_from_spec(poset);
  if (what == "h-lower" || what == "h-upper" || what == "g-lower") {
    auto kind = what == "h-lower" ? ok::SmallKind::kHLower
                : what == "h-upper" ? ok::SmallKind::kHUpper
                                    : ok::SmallKind::kGLower;
    auto res = ok::h_small(kind, p, static_cast<std::uint64_t>(n));
    r.set("examined", res.examined);
    r.set("n", n);
    r.set("p", ok::filter_count(p));
    r.set("value", res.value ? std::to_string(*res.value) : std::string(kind == ok::SmallKind::kHUpper ? "0" : "inf"));
    if (res.value) r.set("witness", named_family(res.witness, numeric_names(res.witness.ground())));
    r.print(std::cout);
    return 0;
  }
  ok::Semilattice l = lattice_from_spec(lattice);
  r.set("lattice_size", l.size());
  if (what == "property") {
    auto w = ok::density_property(l, p);
    r.set("p", w.p);
    if (w.a) {
      r.set("a", *w.a);
      r.fraction("density", w.density);
    }
    r.flag("holds", w.holds);
    r.set("p_size", ok::count_order_maps(p, l.order()));
    r.print(std::cout);
    return w.holds ? 0 : kExitFailed;
  }
  if (what == "threshold") {
    auto t = ok::density_threshold(l, static_cast<std::size_t>(n));
    r.set("n_max", n);
    r.set("threshold", t.m ? std::to_string(*t.m) : std::string("none"));
    std::string pattern;
    for (bool b : t.holds) pattern += b ? '1' : '0';
    r.set("holds_by_n", pattern);
    r.print(std::cout);
    return t.m ? 0 : kExitFailed;
  }
  throw ok::InputError("unknown --what: " + what);
}

// ---- matching --------------------------------------------------------------

int run_matching(const std::string& lattice, const std::string& poset, const std::string& kind, const std::string& dir,
                 std::optional<std::size_t> a) {
  ok::Semilattice l = lattice_from_spec(lattice);
  ok::Poset p = poset_from_spec(poset);
  ok::MatchKind mk;
  if (kind == "full") mk = ok::MatchKind::kFull;
  else if (kind == "top") mk = ok::MatchKind::kTop;
  else if (kind == "weak") mk = ok::MatchKind::kWeak;
  else throw ok::InputError("unknown --kind: " + kind);
  ok::Direction d;
  if (dir == "down") d = ok::Direction::kDecreasing;
  else if (dir == "up") d = ok::Direction::kIncreasing;
  else throw ok::InputError("unknown --dir: " + dir);
  auto res = a ? ok::decide_matching_property(l, p, *a, mk, d) : ok::decide_matching_property(l, p, mk, d);
  Report r;
  r.set("property", ok::match_kind_name(mk, d));
  r.flag("holds", res.holds);
  if (res.a) r.set("a", *res.a);
  if (!res.holds) {
    r.set("fail_from", ok::set_to_string(res.fail_from));
    r.set("fail_from_count", res.fail_from_count);
    r.set("fail_to", ok::set_to_string(res.fail_to));
    r.set("fail_to_count", res.fail_to_count);
    r.set("hall_violator_size", res.hall_violator.size());
  }
  r.print(std::cout);
  return res.holds ? 0 : kExitFailed;
}

// ---- mu --------------------------------------------------------------------

int run_mu(const std::string& file, const std::string& example, const std::string& u_text,
           const std::optional<std::string>& x_text) {
  NamedFamily nf = family_from_args(file, example);
  const auto& f = nf.family;
  ok::Mask u = u_text.empty() ? ok::Mask{0} : parse_named_set(u_text, nf.names);
  if (u == 0) {
    if (example.empty()) throw ok::InputError("--U is required");
    u = ok::bit(0) | ok::bit(1);
  }
  Report r;
  r.set("U", named_set(u, nf.names));
  if (x_text) {
    ok::Mask x = parse_named_set(*x_text, nf.names);
    auto e = ok::escape_set(f, u, x);
    auto e2 = ok::escape_set_by_generators(f, u, x);
    r.set("E", named_family(e, nf.names));
    r.set("X", named_set(x, nf.names));
    r.flag("generator_form_agrees", e == e2);
    r.set("pi", named_set(ok::pi_closure(f, x), nf.names));
    r.print(std::cout);
    return e == e2 ? 0 : kExitFailed;
  }
  auto nb = ok::neighborhoods(f, u);
  r.set("N", named_set(nb.n, nf.names));
  r.set("N2", named_set(nb.n2, nf.names));
  r.fraction("mu_trivial", ok::mu(f, f, u));
  r.fraction("density", ok::Rational(ok::restrict(f, u, ok::Restriction::kSupersetOf).size()) / ok::Rational(f.size()));
  bool ok_all = true;
  auto gens = ok::nonempty_generators(f);
  if (std::find(gens.begin(), gens.end(), u) != gens.end()) {
    auto m = ok::min_mu_over_extensions(f, u);
    r.fraction("min_mu", m.value);
    r.set("min_mu_witness_size", m.witness.size());
    if (ok::popcount(u) == 2) {
      try {
        auto nu = ok::nu_lower_bound(f, u);
        r.fraction("nu_bound", nu.value);
      } catch (const ok::InputError&) {
        r.set("nu_bound", "n/a");
      }
      auto md = ok::min_degree_density_check(f, u);
      r.flag("min_degree_hypotheses", md.hypotheses);
      r.flag("min_degree_certified", md.certified);
      if (md.violating_edge) r.set("min_degree_violating_edge", named_set(*md.violating_edge, nf.names));
      ok_all = md.consistent;
      r.flag("consistent", md.consistent);
    }
  }
  r.print(std::cout);
  return ok_all ? 0 : kExitFailed;
}

// ---- zeta ------------------------------------------------------------------

int run_zeta(const std::string& poset, int m) {
  ok::Poset p = poset_from_spec(poset);
  Report r;
  std::string counts;
  for (auto c : ok::chain_counts(p)) counts += (counts.empty() ? "" : ",") + std::to_string(c);
  const auto z = ok::zeta(p, m);
  const auto direct = ok::count_order_maps(ok::Poset::chain(m + 1), p);
  r.set("chain_counts", counts);
  r.set("direct", direct);
  r.set("m", m);
  r.set("zeta", z);
  r.flag("holds", z == direct);
  r.print(std::cout);
  return z == direct ? 0 : kExitFailed;
}

// ---- ucsc ------------------------------------------------------------------

int run_ucsc(int max_domain, const std::string& file) {
  Report r;
  if (!file.empty()) {
    auto f = ok::parse_family(ok::read_file(file));
    auto d = ok::ucsc_brute(f);
    r.fraction("max_density", d.max_density);
    r.set("max_x", d.max_x);
    r.fraction("min_density", d.min_density);
    r.set("min_x", d.min_x);
    r.flag("holds", d.holds);
    r.print(std::cout);
    return d.holds ? 0 : kExitFailed;
  }
  auto s = ok::ucsc_sweep(max_domain);
  r.set("instances", s.instances);
  r.set("max_domain", max_domain);
  r.set("violations", s.violations);
  r.print(std::cout);
  return s.violations == 0 ? 0 : kExitFailed;
}

// ---- report ----------------------------------------------------------------

int run_report(const std::string& table, int n_max) {
  bool all_ok = true;
  auto emit = [&](Report& row, bool ok_row) {
    row.flag("ok", ok_row);
    all_ok = all_ok && ok_row;
    std::cout << row.row() << '\n';
  };
  if (table == "extremal") {
    for (const auto& c : kConstructors) {
      const std::string name = c.name;
      if (name == "layered-antichains") continue;
      const int k_max = c.uses_k ? 3 : 1;
      for (int k = c.uses_k ? 1 : 0; k <= k_max; ++k) {
        if (name == "layered-segments" && k < 2) continue;
        for (int n = 2; n <= n_max; ++n) {
          if (name == "prefix-window" && n <= k) continue;
          if (name == "short-arcs" && n < k) continue;
          Generated g = generate(name, k, n);
          Report row;
          row.set("constructor", name);
          if (c.uses_k) row.set("k", k);
          row.set("n", n);
          row.set("size", g.family.size());
          row.set("expected", g.expected);
          row.set("bound", g.bound);
          emit(row, g.holds && g.family.size() == g.expected && g.family.size() <= g.bound);
        }
      }
    }
  } else if (table == "lattice") {
    for (std::uint64_t p = 2; p <= 4; ++p) {
      for (int n = 1; n <= n_max; ++n) {
        Report row;
        row.set("p", p);
        row.set("n", n);
        row.set("m_bound", ok::m_bound(n, p));
        row.set("g", ok::g_formula(n, p));
        emit(row, true);
      }
    }
  } else if (table == "graph") {
    NamedFamily nf = example_family("escape-graph");
    const ok::Mask u = ok::bit(0) | ok::bit(1);
    for (ok::Mask x = 0; x < (ok::Mask{1} << 5); ++x) {
      const ok::Mask xs = x << 2;
      auto e = ok::escape_set(nf.family, u, xs);
      Report row;
      row.set("X", named_set(xs, nf.names));
      row.set("E", named_family(e, nf.names));
      emit(row, e == ok::escape_set_by_generators(nf.family, u, xs));
    }
  } else {
    throw ok::InputError("unknown table: " + table);
  }
  return all_ok ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orderkit: posets, set families and lattice densities"};
  app.require_subcommand(1);
  std::function<int()> action;

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Build an extremal family (or the layered antichain poset)");
  g->add_option("constructor", gen.constructor, "Constructor name or numeric alias")->required();
  g->add_option("--k", gen.k, "Local width parameter");
  g->add_option("--n", gen.n, "Ground set size (poset: width)")->required();
  g->add_option("--out", gen.out, "Write the family here instead of stdout");
  g->callback([&] { action = [&] { return run_gen(gen); }; });

  std::string file, property, example, cls, poset = "chain:1", lattice, what = "property", kind = "weak", dir = "down";
  std::string u_text, table = "extremal";
  std::optional<std::string> x_text;
  int k = 1, n = 1, r_arg = 2, p_arg = 0, m = 0, max_domain = 4;
  std::optional<int> k_opt;
  std::optional<std::size_t> a_opt;
  std::uint64_t budget = 200'000'000;
  bool emit = false;

  auto* c = app.add_subcommand("check", "Test a structural property of a family file");
  c->add_option("--family", file)->required();
  c->add_option("--property", property)->required();
  c->add_option("--k", k);
  c->callback([&] { action = [&] { return run_check(file, property, k); }; });

  auto* b = app.add_subcommand("bound", "Evaluate a size bound");
  b->add_option("--class", cls)->required();
  b->add_option("--k", k);
  b->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  b->add_option("--r", r_arg);
  b->add_option("--p", p_arg, "Number of filters of P");
  b->add_option("--poset", poset, "P, for classes that need it");
  b->callback([&] {
    action = [&] { return run_bound(cls, k, n, r_arg, p_arg, b->count("--poset") ? poset : std::string()); };
  });

  auto* s = app.add_subcommand("maxsearch", "Exhaustive maximum family size");
  s->add_option("--class", cls)->required();
  s->add_option("--k", k_opt);
  s->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  s->add_option("--budget", budget);
  s->add_flag("--emit", emit, "Print the witness family");
  s->callback([&] { action = [&] { return run_maxsearch(cls, k_opt, n, budget, emit); }; });

  auto* d = app.add_subcommand("density", "P-density property, threshold and small extrema");
  d->add_option("--lattice", lattice);
  d->add_option("--poset", poset);
  d->add_option("--what", what)->check(CLI::IsMember({"property", "threshold", "h-lower", "h-upper", "g-lower"}));
  d->add_option("--n", n)->check(CLI::NonNegativeNumber);
  d->callback([&] { action = [&] { return run_density(lattice, poset, what, n); }; });

  auto* mt = app.add_subcommand("matching", "Decide a matching property");
  mt->add_option("--lattice", lattice)->required();
  mt->add_option("--poset", poset);
  mt->add_option("--kind", kind);
  mt->add_option("--dir", dir);
  mt->add_option("--a", a_opt, "Join-irreducible index (default: any)");
  mt->callback([&] { action = [&] { return run_matching(lattice, poset, kind, dir, a_opt); }; });

  auto* mu = app.add_subcommand("mu", "Escape sets and the mu statistic of a graph-generated family");
  mu->add_option("--family", file);
  mu->add_option("--example", example);
  mu->add_option("--U", u_text);
  mu->add_option("--X", x_text);
  mu->callback([&] { action = [&] { return run_mu(file, example, u_text, x_text); }; });

  auto* z = app.add_subcommand("zeta", "Chain counts and multichain counts");
  z->add_option("--poset", poset)->required();
  z->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  z->callback([&] { action = [&] { return run_zeta(poset, m); }; });

  auto* uc = app.add_subcommand("ucsc", "Element densities of union-closed families");
  uc->add_option("--max-domain", max_domain)->check(CLI::Range(0, 4));
  uc->add_option("--family", file);
  uc->callback([&] { action = [&] { return run_ucsc(max_domain, file); }; });

  auto* rp = app.add_subcommand("report", "Reproduction tables");
  rp->add_option("--table", table)->check(CLI::IsMember({"extremal", "lattice", "graph"}));
  rp->add_option("--n-max", n)->check(CLI::Range(2, 12));
  rp->callback([&] { action = [&] { return run_report(table, rp->count("--n-max") ? n : 8); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  try {
    return action();
  } catch (const ok::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ok::Refusal& e) {
    std::cerr << "refused: " << e.what() << '\n';
  } catch (const ok::OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
  }
  return kExitInput;
}
