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

#include "orderkit/extremal.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace orderkit {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

// Segment [a, b] of the 1-based line clipped to [1, n], returned 0-based.
Mask clipped(int a, int b, int n) {
  a = std::max(a, 1);
  b = std::min(b, n);
  if (b < a) return 0;
  return segment(a - 1, b - 1);
}

Mask clipped_point(int x, int n) { return (x >= 1 && x <= n) ? bit(x - 1) : 0; }

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

SetFamily prefix_point_family(int n) {
  require(n >= 0 && n <= 63, "n must be in [0, 63]");
  std::vector<Mask> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) out.push_back(low_bits(i) | bit(j));
  }
  return SetFamily(n, std::move(out));
}

SetFamily end_segments_family(int n) {
  require(n >= 1 && n <= 63, "n must be in [1, 63]");
  std::vector<Mask> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(bit(i));
    out.push_back(segment(0, i));
    out.push_back(segment(i, n - 1));
  }
  return SetFamily(n, std::move(out));
}

SetFamily prefix_window_family(int k, int n) {
  require(k >= 1 && n > k && n <= 63, "need 1 <= k < n <= 63");
  std::vector<Mask> out;
  for (int i = 0; i < n; ++i) out.push_back(bit(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= std::min(i + k, n - 1); ++j) out.push_back(segment(0, i) | bit(j));
  }
  return SetFamily(n, std::move(out));
}

SetFamily short_arcs_family(int k, int n) {
  require(k >= 0 && n >= 1 && n <= 63, "need k >= 0 and 1 <= n <= 63");
  std::vector<Mask> out{0, low_bits(n)};
  for (int start = 0; start < n; ++start) {
    for (int len = 1; len < n; ++len) {
      if (len <= k || start < k) out.push_back(arc(n, start, len));
    }
  }
  return SetFamily(n, std::move(out));
}

SetFamily short_segments_family(int k, int n) {
  require(k >= 0 && n >= 0 && n <= 63, "need k >= 0 and 0 <= n <= 63");
  std::vector<Mask> out{0};
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (j <= i + k - 1 || i < k) out.push_back(segment(i, j));
    }
  }
  return SetFamily(n, std::move(out));
}

SetFamily layered_segments_family(int k, int n) {
  require(k >= 2 && n >= 0 && n <= 63, "need k >= 2 and 0 <= n <= 63");
  std::vector<Mask> out{0, low_bits(n)};
  for (int m = 1; m <= k; ++m) {
    // Segments with m elements, then the ray starting at m.
    for (int i = 1 - m; i <= n; ++i) out.push_back(clipped(i, i + m - 1, n));
    for (int l = m; l <= n; ++l) out.push_back(clipped(m, l, n));
  }
  for (int m = 3; m <= k; ++m) {
    const int h = m - 1;
    const int period = 2 * h;
    for (int x = -2 * period; x <= n + 2 * period; ++x) {
      if (floor_mod(x, period) == 1 % period) {
        for (int i = x; i <= x + h - 2; ++i) out.push_back(clipped(x, i, n) | clipped_point(x + h, n));
      }
      if (floor_mod(x, period) == 0) {
        for (int i = x - h + 2; i <= x; ++i) out.push_back(clipped_point(x - h, n) | clipped(i, x, n));
      }
    }
  }
  return SetFamily(n, std::move(out));
}

SetFamily sixfold_family(int n) {
  require(n >= 0 && n <= 63, "n must be in [0, 63]");
  std::vector<Mask> out{0};
  for (int i = -4; i <= n; ++i) {
    for (int len = 1; len <= 4; ++len) out.push_back(clipped(i, i + len - 1, n));
  }
  for (int i = 1; i <= 4; ++i) {
    for (int l = i; l <= n; ++l) out.push_back(clipped(i, l, n));
  }
  for (int i = -2; i <= n; ++i) out.push_back(clipped_point(i, n) | clipped_point(i + 2, n));
  for (int b = -6; b <= n + 6; b += 6) {
    const int base = b - floor_mod(b, 6);
    out.push_back(clipped_point(base, n) | clipped_point(base + 1, n) | clipped_point(base + 3, n));
    out.push_back(clipped_point(base + 2, n) | clipped_point(base + 4, n) | clipped_point(base + 5, n));
  }
  return SetFamily(n, std::move(out));
}

Poset layered_antichains_poset(int w) {
  require(w >= 0 && w <= 60, "w must be in [0, 60]");
  std::vector<int> layer;
  for (int i = 0; i < w; ++i) {
    for (int c = 0; c < w - i; ++c) layer.push_back(i);
  }
  return Poset::from_relation(layer.size(), [&](std::size_t x, std::size_t y) { return x == y || layer[x] < layer[y]; });
}

std::uint64_t segments_max(int k, int n) {
  require(k >= 0 && n >= 0, "k and n must be non-negative");
  if (n == 0 || k == 0) return 1;
  if (n == 1) return 2;
  return checked_add(static_cast<std::uint64_t>(2 * n - 1), segments_max(k - 1, n - 2));
}

namespace {

const std::map<std::string, BoundClass>& bound_class_table() {
  static const std::map<std::string, BoundClass> table{
      {"uniform-r", BoundClass::kUniform},       {"general", BoundClass::kGeneral},
      {"general-log", BoundClass::kGeneralLog},  {"centered", BoundClass::kCentered},
      {"centered-segments", BoundClass::kCenteredSegments},
      {"pseudotree", BoundClass::kPseudotree},   {"segments", BoundClass::kSegments},
      {"arcs", BoundClass::kArcs},
  };
  return table;
}

}  // namespace

BoundClass parse_bound_class(const std::string& name) {
  auto it = bound_class_table().find(name);
  if (it == bound_class_table().end()) throw InputError("unknown bound class '" + name + "'");
  return it->second;
}

std::string bound_class_name(BoundClass c) {
  for (const auto& [name, value] : bound_class_table()) {
    if (value == c) return name;
  }
  return "?";
}

namespace {

// 2 atanh(z) = ln((1+z)/(1-z)) for rational 0 <= z < 1, as an enclosure.
std::pair<Rational, Rational> two_atanh(const Rational& z, const Rational& tolerance) {
  Rational sum = 0;
  Rational power = z;
  const Rational z2 = z * z;
  for (int j = 0;; ++j) {
    sum += power / (2 * j + 1);
    power *= z2;
    Rational tail = power / ((2 * j + 3) * (1 - z2));
    if (tail < tolerance || z == 0) return {2 * sum, 2 * (sum + tail)};
  }
}

}  // namespace

std::pair<Rational, Rational> ln_enclosure(std::uint64_t x, int bits) {
  require(x >= 1, "ln needs a positive argument");
  const int m = 63 - std::countl_zero(x);
  const Rational tolerance = Rational(1) / Rational(BigInt(1) << (bits + 8));
  auto [ln2_lo, ln2_hi] = two_atanh(Rational(1, 3), tolerance);
  // x = 2^m y with 1 <= y < 2, and ln y = 2 atanh((y-1)/(y+1)).
  Rational y = Rational(x) / Rational(BigInt(1) << m);
  auto [ly_lo, ly_hi] = two_atanh((y - 1) / (y + 1), tolerance);
  return {m * ln2_lo + ly_lo, m * ln2_hi + ly_hi};
}

namespace {

std::uint64_t floor_of(const Rational& q) {
  BigInt f = boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
  return f.convert_to<std::uint64_t>();
}

// floor(2 + n + kn ln(arg)), refining until the enclosure pins it down.
std::uint64_t log_bound_floor(int k, int n, std::uint64_t arg, Rational* lo_out, Rational* hi_out) {
  for (int bits = 64;; bits *= 2) {
    auto [lo, hi] = ln_enclosure(arg, bits);
    Rational base = 2 + n;
    Rational lo_v = base + Rational(k) * n * lo;
    Rational hi_v = base + Rational(k) * n * hi;
    if (floor_of(lo_v) == floor_of(hi_v) || bits > 4096) {
      *lo_out = lo_v;
      *hi_out = hi_v;
      return floor_of(lo_v);
    }
  }
}

}  // namespace

BoundReport bound(BoundClass cls, int k, int n, int r) {
  BoundReport rep;
  rep.cls = cls;
  rep.k = k;
  rep.n = n;
  rep.r = r;
  require(k >= 0 && n >= 0, "k and n must be non-negative");
  const auto K = static_cast<std::uint64_t>(k);
  const auto N = static_cast<std::uint64_t>(n);
  switch (cls) {
    case BoundClass::kUniform:
      require(r >= 2, "uniform-r bound needs r >= 2");
      rep.formula = "nk/r";
      rep.value = Rational(checked_mul(N, K), r);
      rep.bound = checked_mul(N, K) / static_cast<std::uint64_t>(r);
      rep.integral = checked_mul(N, K) % static_cast<std::uint64_t>(r) == 0;
      break;
    case BoundClass::kGeneral:
      require(k >= 2 && n >= 1, "general bound needs k >= 2 and n >= 1");
      rep.formula = "(2k)^(k-1)n";
      rep.bound = checked_mul(checked_pow(2 * K, static_cast<unsigned>(k - 1)), N);
      rep.value = rep.bound;
      if (n <= 63) rep.attained = layered_segments_family(k, n).size();
      break;
    case BoundClass::kGeneralLog:
      require(n >= 2, "logarithmic bound needs n >= 2");
      rep.formula = "2+n+kn*ln(n)";
      rep.integral = false;
      rep.bound = log_bound_floor(k, n, N, &rep.log_lo, &rep.log_hi);
      rep.proof_bound = log_bound_floor(k, n, N - 1, &rep.log_proof_lo, &rep.log_proof_hi);
      break;
    case BoundClass::kCentered:
      rep.formula = "n(n+1)/2";
      rep.bound = N * (N + 1) / 2;
      rep.value = rep.bound;
      if (n <= 63) rep.attained = prefix_point_family(n).size();
      break;
    case BoundClass::kCenteredSegments:
      require(n >= 2, "centered segment bound needs n >= 2");
      rep.formula = "3n-3";
      rep.bound = 3 * N - 3;
      rep.value = rep.bound;
      if (n <= 63) rep.attained = end_segments_family(n).size();
      break;
    case BoundClass::kPseudotree:
      require(n > k && k >= 1, "pseudotree bound needs n > k >= 1");
      rep.formula = "(k+1)n-k(k+1)/2";
      rep.bound = (K + 1) * N - K * (K + 1) / 2;
      rep.value = rep.bound;
      if (n <= 63) rep.attained = prefix_window_family(k, n).size();
      break;
    case BoundClass::kSegments:
      require(n >= 2 * k, "segment closed form needs n >= 2k");
      rep.formula = "2kn-2k^2+k+1";
      rep.bound = 2 * K * N - 2 * K * K + K + 1;
      rep.value = rep.bound;
      if (n <= 63) rep.attained = short_segments_family(k, n).size();
      break;
    case BoundClass::kArcs:
      require(n >= 1, "arc bound needs n >= 1");
      rep.formula = "2kn-k+1";
      rep.bound = 2 * K * N - K + 1;
      rep.value = rep.bound;
      if (n <= 63) rep.attained = short_arcs_family(k, n).size();
      break;
  }
  return rep;
}

Mask left_overlap(int n, Mask v, Mask u) {
  if (subset_of(v, u) || subset_of(u, v)) return 0;
  const int v_last = (arc_start(n, v) + popcount(v) - 1) % n;
  if (!(u & bit(v_last))) return 0;
  const int u_first = arc_start(n, u);
  return arc(n, u_first, (v_last - u_first + n) % n + 1);
}

OverlapReduction left_overlap_reduction(const SetFamily& f) {
  const int n = f.ground();
  require(n >= 1, "arc families need n >= 1");
  for (Mask u : f) require(is_arc(n, u), "member " + set_to_string(u) + " is not an arc");

  OverlapReduction out;
  std::vector<Mask> reduced, overlaps;
  for (Mask u : f) {
    Mask best = 0;
    for (Mask v : f) {
      Mask o = left_overlap(n, v, u);
      if (popcount(o) > popcount(best)) best = o;
    }
    out.overline.push_back(best);
    reduced.push_back(u & ~best);
    overlaps.push_back(best);
  }
  out.reduced = SetFamily(n, reduced);
  out.overlaps = SetFamily(n, overlaps);

  // σ picks the smallest member with the given image; the preimages form a chain.
  auto smallest = [&](auto matches) {
    Mask pick = 0;
    int size = -1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Mask u = f.members()[i];
      if (matches(i) && (size < 0 || popcount(u) < size)) {
        pick = u;
        size = popcount(u);
      }
    }
    return pick;
  };
  std::vector<Mask> image;
  for (Mask a : out.reduced) {
    Mask s = smallest([&](std::size_t i) { return (f.members()[i] & ~out.overline[i]) == a; });
    out.sigma_reduced.push_back(s);
    image.push_back(s);
  }
  for (Mask a : out.overlaps) {
    if (a == 0) continue;
    Mask s = smallest([&](std::size_t i) { return out.overline[i] == a; });
    out.sigma_overlaps.push_back(s);
    image.push_back(s);
  }
  out.surjective = SetFamily(n, image) == f;
  return out;
}

namespace {

const std::map<std::string, SearchClass>& search_class_table() {
  static const std::map<std::string, SearchClass> table{
      {"all", SearchClass::kAll},   {"centered", SearchClass::kCentered}, {"pseudotree", SearchClass::kPseudotree},
      {"arcs", SearchClass::kArcs}, {"segments", SearchClass::kSegments},
  };
  return table;
}

// Adding s keeps a locally k-wide family locally k-wide iff, for each x in s,
// the members through x that are incomparable to s have width below k.
bool can_add(const std::vector<Mask>& fam, Mask s, int k) {
  for (int x : elements_of(s)) {
    std::vector<Mask> rivals;
    for (Mask v : fam) {
      if ((v & bit(x)) && !subset_of(v, s) && !subset_of(s, v)) rivals.push_back(v);
    }
    if (static_cast<int>(rivals.size()) >= k && static_cast<int>(family_width(rivals)) >= k) return false;
  }
  return true;
}

}  // namespace

SearchClass parse_search_class(const std::string& name) {
  auto it = search_class_table().find(name);
  if (it == search_class_table().end()) throw InputError("unknown search class '" + name + "'");
  return it->second;
}

std::string search_class_name(SearchClass c) {
  for (const auto& [name, value] : search_class_table()) {
    if (value == c) return name;
  }
  return "?";
}

SearchResult max_search(SearchClass cls, std::optional<int> k, int n, std::uint64_t node_budget) {
  require(n >= 0, "n must be non-negative");
  if (k) require(*k >= 0, "k must be non-negative");
  SearchResult res;
  auto tick = [&] {
    if (++res.nodes > node_budget) throw Refusal("max_search exceeded its node budget of " + std::to_string(node_budget));
  };

  if (cls == SearchClass::kCentered || cls == SearchClass::kPseudotree) {
    if (n > 4) throw Refusal("centered and pseudotree searches enumerate all families; n <= 4 only");
    if (cls == SearchClass::kPseudotree) require(k.has_value(), "pseudotree search needs k");
    const int m = 1 << n;
    std::vector<Mask> best;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
      tick();
      if (static_cast<std::size_t>(std::popcount(sub)) <= best.size()) continue;
      std::vector<Mask> members;
      for (int s = 0; s < m; ++s) {
        if (sub & (std::uint64_t{1} << s)) members.push_back(static_cast<Mask>(s));
      }
      SetFamily f(n, members);
      bool ok = cls == SearchClass::kPseudotree ? is_pseudotree(f, *k)
                                                : is_centered(f) && (!k || is_locally_k_wide(f, *k));
      if (ok) best = members;
    }
    res.max_size = best.size();
    res.witness = SetFamily(n, best);
    return res;
  }

  std::vector<Mask> candidates;
  switch (cls) {
    case SearchClass::kAll:
      if (n > 4) throw Refusal("search over all families is limited to n <= 4");
      for (Mask s = 0; s < (Mask{1} << n); ++s) candidates.push_back(s);
      break;
    case SearchClass::kArcs:
      require(n >= 1, "arc search needs n >= 1");
      if (n > 8) throw Refusal("arc search is limited to n <= 8");
      candidates = {0, low_bits(n)};
      for (int len = 1; len < n; ++len) {
        for (int start = 0; start < n; ++start) candidates.push_back(arc(n, start, len));
      }
      break;
    case SearchClass::kSegments:
      if (n > 8) throw Refusal("segment search is limited to n <= 8");
      candidates = {0};
      for (int len = 1; len <= n; ++len) {
        for (int i = 0; i + len <= n; ++i) candidates.push_back(segment(i, i + len - 1));
      }
      break;
    default:
      break;
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const int width = k ? *k : static_cast<int>(candidates.size());
  std::vector<Mask> current, best;
  bool have_best = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
    tick();
    if (have_best && current.size() + (candidates.size() - idx) <= best.size()) return;
    if (idx == candidates.size()) {
      best = current;
      have_best = true;
      return;
    }
    const Mask s = candidates[idx];
    if (can_add(current, s, width)) {
      current.push_back(s);
      dfs(idx + 1);
      current.pop_back();
    }
    dfs(idx + 1);
  };
  dfs(0);
  res.max_size = best.size();
  res.witness = SetFamily(n, best);
  return res;
}

}  // namespace orderkit
