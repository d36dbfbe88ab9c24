// Copyright 2026 The cmatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cmatch/connected_matching.hpp"
#include "cmatch/error.hpp"
#include "cmatch/gallai_edmonds.hpp"
#include "cmatch/graph.hpp"
#include "cmatch/matching.hpp"

namespace cmatch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "p/q" and plain decimals such as "0.125".
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] { return PreconditionError("not a rational number: '" + std::string(text) + "'"); };
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  bool negative = false;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
    negative = t.front() == '-';
    t.remove_prefix(1);
  }
  auto digits = [&](std::string_view d) {
    if (d.empty()) throw bad();
    BigInt v = 0;
    for (char c : d) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
      v = v * 10 + (c - '0');
    }
    return v;
  };
  Rational r;
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    BigInt q = digits(t.substr(slash + 1));
    if (q == 0) throw bad();
    r = Rational(digits(t.substr(0, slash)), q);
  } else if (auto dot = t.find('.'); dot != std::string_view::npos) {
    std::string_view whole = t.substr(0, dot), frac = t.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw bad();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = whole.empty() ? BigInt(0) : digits(whole);
    BigInt f = frac.empty() ? BigInt(0) : digits(frac);
    r = Rational(w * scale + f, scale);
  } else {
    r = Rational(digits(t));
  }
  return negative ? Rational(-r) : r;
}

inline std::string to_string(const Rational& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1)
    s += "/" + boost::multiprecision::denominator(r).str();
  return s;
}

inline BigInt floor_of(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

inline BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

inline Rational power(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// Saturating conversion for counts that are compared with graph sizes.
inline long long clamp_to_ll(const BigInt& v) {
  const BigInt hi = std::numeric_limits<long long>::max();
  const BigInt lo = std::numeric_limits<long long>::min();
  if (v > hi) return std::numeric_limits<long long>::max();
  if (v < lo) return std::numeric_limits<long long>::min();
  return v.convert_to<long long>();
}

inline int clamp_to_int(const BigInt& v) {
  long long x = clamp_to_ll(v);
  return static_cast<int>(std::clamp<long long>(x, std::numeric_limits<int>::min(),
                                                std::numeric_limits<int>::max()));
}

enum class GroundKind { complete, blowup };

inline const char* to_string(GroundKind g) {
  return g == GroundKind::complete ? "complete" : "blowup";
}

struct ReductionParams {
  int k = 1;
  // Colours 0..k0-1 forbid every large connected (2-)matching; colours
  // k0..k-1 only those inside non-bipartite components.
  int k0 = 1;
  int s = 1;
  std::vector<Rational> alphas;
  Rational beta = 1;
  Rational eps = 1;
  int n = 1;
  // N for the complete case, N_1..N_s for a blow-up.
  std::vector<int> targets;
  CmMode mode = CmMode::matching;
  std::optional<Rational> delta_override;

  Rational alpha() const {
    if (alphas.empty()) throw PreconditionError("params: no alphas");
    return *std::min_element(alphas.begin(), alphas.end());
  }

  int target_total() const {
    int t = 0;
    for (int x : targets) t += x;
    return t;
  }

  void validate() const {
    auto fail = [](const std::string& what) { throw PreconditionError("params: " + what); };
    if (k < 1 || k > kMaxColours) fail("k must be in [1, 16]");
    if (k0 < 0 || k0 > k) fail("k0 must be in [0, k]");
    if (s < 1) fail("s must be positive");
    if (static_cast<int>(alphas.size()) != k) fail("need one alpha per colour");
    for (const auto& a : alphas)
      if (a <= 0) fail("alphas must be positive");
    if (beta < alpha()) fail("beta must be at least the minimum alpha");
    if (eps <= 0) fail("eps must be positive");
    if (n < 1) fail("n must be positive");
    if (static_cast<int>(targets.size()) != s) fail("need one target size per part");
    for (int t : targets) {
      if (t < 0) fail("target sizes must be non-negative");
      if (Rational(t) > beta * n) fail("target size exceeds beta*n");
    }
    if (delta_override && *delta_override < 0) fail("delta override must be non-negative");
  }

  // Integer vertex-count thresholds ceil(alpha_l * n).
  std::vector<int> thresholds() const {
    std::vector<int> t;
    for (const auto& a : alphas) t.push_back(clamp_to_int(ceil_of(a * n)));
    return t;
  }
};

inline Rational delta_threshold(const ReductionParams& p, GroundKind kind = GroundKind::complete) {
  Rational scale = kind == GroundKind::complete ? Rational(16) : Rational(56 * p.s * p.s * p.s);
  return p.eps / 2 * power(p.alpha() / (scale * p.beta), 2 * p.k);
}

inline Rational effective_delta(const ReductionParams& p, GroundKind kind) {
  return p.delta_override ? *p.delta_override : delta_threshold(p, kind);
}

inline long long complement_matching_bound(const ReductionParams& p,
                                           GroundKind kind = GroundKind::complete) {
  Rational scale = kind == GroundKind::complete ? Rational(16) : Rational(56 * p.s * p.s * p.s);
  return clamp_to_ll(
      floor_of(power(scale * p.beta / p.alpha(), 2 * p.k) * effective_delta(p, kind) * p.n));
}

namespace detail {

inline int component_value(const Graph& sub, CmMode mode) {
  return mode == CmMode::matching ? 2 * matching_number(sub) : two_matching_order(sub);
}

inline VertexSet component_of(const Graph& h, Vertex s) {
  std::vector<char> seen(static_cast<std::size_t>(h.order()), 0);
  VertexSet out{s};
  seen[static_cast<std::size_t>(s)] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Vertex w : h.neighbours(out[i]))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        out.push_back(w);
      }
  return normalized(std::move(out));
}

}  // namespace detail

struct MaximalizeStats {
  int colours_added = 0;
  int pairs_added = 0;
  int passes = 0;
};

// Adds colours to ground pairs in lexicographic (u, v, colour) order, full
// passes until a pass changes nothing, skipping every addition that would
// create a forbidden connected (2-)matching.
inline ColouredGraph maximalize(const ColouredGraph& g, const Ground& ground,
                                std::span<const int> thresholds, int k0, CmMode mode,
                                MaximalizeStats* stats = nullptr) {
  Graph host = require_within(g, ground);
  if (auto w = has_cm_at_least(g, thresholds, k0, mode))
    throw PreconditionError("maximalize: input already has a forbidden structure: " +
                            describe(*w, mode));
  const int n = g.order();
  ColouredGraph g1 = g;
  std::vector<Graph> layers;
  for (int c = 0; c < g.colours(); ++c) layers.push_back(g.colour_subgraph(c));
  MaximalizeStats st;
  for (bool changed = true; changed;) {
    changed = false;
    ++st.passes;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (!host.adjacent(u, v)) continue;
        for (int c = 0; c < g.colours(); ++c) {
          if (g1.has_colour(u, v, c)) continue;
          Graph& h = layers[static_cast<std::size_t>(c)];
          h.add_edge(u, v);
          VertexSet comp = detail::component_of(h, u);
          bool forbidden = false;
          if (static_cast<int>(comp.size()) >= thresholds[static_cast<std::size_t>(c)]) {
            Graph sub = induced(h, comp);
            forbidden = (c < k0 || !is_bipartite(sub)) &&
                        detail::component_value(sub, mode) >= thresholds[static_cast<std::size_t>(c)];
          }
          if (forbidden) {
            h.remove_edge(u, v);
            continue;
          }
          if (!g1.present(u, v)) ++st.pairs_added;
          g1.add_colour(u, v, c);
          ++st.colours_added;
          changed = true;
        }
      }
  }
  if (stats) *stats = st;
  return g1;
}

inline ColouredGraph maximalize(const ColouredGraph& g, const Ground& ground,
                                const ReductionParams& p) {
  p.validate();
  std::vector<int> t = p.thresholds();
  return maximalize(g, ground, t, p.k0, p.mode);
}

enum class Role { H, T, L, R, I };

inline char role_char(Role r) { return "HTLRI"[static_cast<int>(r)]; }

enum class Template { star, bipartite };

struct ComponentStructure {
  int colour = 0;
  VertexSet vertices;
  Template kind = Template::star;
  VertexSet head;
  std::vector<VertexSet> leaves;
  VertexSet left, right;
};

struct ColourStructure {
  // Components with at least two vertices, ordered by smallest vertex.
  std::vector<ComponentStructure> components;
  // Index into components, -1 when the vertex has no edge of this colour.
  std::vector<int> component_of;
};

struct Structure {
  std::vector<ColourStructure> colours;
  // Blow-up part per vertex; all zero on a complete ground.
  std::vector<int> part;
};

// Matches every colour component of a maximalized graph against the
// star-blow-up template (intersected with the ground) or, for colours >= k0
// with bipartite components, the complete-bipartite template.
inline Structure detect_structure(const ColouredGraph& g1, const Ground& ground, int k0,
                                  CmMode mode) {
  Graph host = require_within(g1, ground);
  const int n = g1.order();
  Structure out;
  out.part.assign(static_cast<std::size_t>(n), 0);
  if (!ground.is_complete()) {
    auto lay = ground.spec().layout();
    for (std::size_t i = 0; i < lay.size(); ++i)
      for (Vertex v = lay[i].lo; v <= lay[i].hi; ++v)
        out.part[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  for (int c = 0; c < g1.colours(); ++c) {
    Graph h = g1.colour_subgraph(c);
    ColourStructure cs;
    cs.component_of.assign(static_cast<std::size_t>(n), -1);
    for (auto& comp : connected_components(h)) {
      if (comp.size() < 2) continue;
      Graph sub = induced(h, comp);
      Graph local_ground = induced(host, comp);
      const int m = static_cast<int>(comp.size());
      auto fail = [&](const char* what) {
        return StructuralError("colour " + std::to_string(c + 1) + " component containing vertex " +
                               std::to_string(comp.front()) + " " + what);
      };
      ComponentStructure st;
      st.colour = c;
      auto sides = two_colouring(sub);
      if (c >= k0 && sides) {
        st.kind = Template::bipartite;
        int left_side = (*sides)[0];
        for (Vertex a = 0; a < m; ++a)
          for (Vertex b = a + 1; b < m; ++b) {
            bool cross = (*sides)[static_cast<std::size_t>(a)] != (*sides)[static_cast<std::size_t>(b)];
            if (sub.adjacent(a, b) != (cross && local_ground.adjacent(a, b)))
              throw fail("is not a complete bipartite graph intersected with the ground");
          }
        for (Vertex a = 0; a < m; ++a)
          ((*sides)[static_cast<std::size_t>(a)] == left_side ? st.left : st.right)
              .push_back(comp[static_cast<std::size_t>(a)]);
      } else {
        int value = mode == CmMode::matching ? matching_number(sub) : two_matching_order(sub);
        StarBlowup star = mode == CmMode::matching ? maximal_star_extension(sub, value + 1)
                                                   : maximal_two_matching_extension(sub, value + 1);
        Graph full = star_graph(m, star);
        for (Vertex a = 0; a < m; ++a)
          for (Vertex b = a + 1; b < m; ++b)
            if (sub.adjacent(a, b) != (full.adjacent(a, b) && local_ground.adjacent(a, b)))
              throw fail("is not a star blow-up intersected with the ground");
        auto lift = [&](const VertexSet& local) {
          VertexSet s;
          for (Vertex a : local) s.push_back(comp[static_cast<std::size_t>(a)]);
          return normalized(std::move(s));
        };
        st.head = lift(star.head);
        for (const auto& leaf : star.leaves)
          if (!leaf.empty()) st.leaves.push_back(lift(leaf));
        std::sort(st.leaves.begin(), st.leaves.end());
      }
      for (Vertex v : comp) cs.component_of[static_cast<std::size_t>(v)] = static_cast<int>(cs.components.size());
      st.vertices = std::move(comp);
      cs.components.push_back(std::move(st));
    }
    out.colours.push_back(std::move(cs));
  }
  return out;
}

struct TypeSignature {
  std::vector<int> components;
  std::vector<Role> roles;
  int part = 0;

  auto operator<=>(const TypeSignature&) const = default;
  bool operator==(const TypeSignature&) const = default;
};

inline TypeSignature type_of(const Structure& s, Vertex u) {
  TypeSignature t;
  for (const auto& cs : s.colours) {
    int id = cs.component_of.at(static_cast<std::size_t>(u));
    t.components.push_back(id);
    if (id < 0) {
      t.roles.push_back(Role::I);
      continue;
    }
    const ComponentStructure& comp = cs.components[static_cast<std::size_t>(id)];
    if (comp.kind == Template::bipartite)
      t.roles.push_back(contains(comp.left, u) ? Role::L : Role::R);
    else
      t.roles.push_back(contains(comp.head, u) ? Role::H : Role::T);
  }
  t.part = s.part.at(static_cast<std::size_t>(u));
  return t;
}

inline std::map<TypeSignature, VertexSet> type_census(const Structure& s) {
  std::map<TypeSignature, VertexSet> out;
  for (Vertex u = 0; u < static_cast<Vertex>(s.part.size()); ++u) out[type_of(s, u)].push_back(u);
  return out;
}

inline std::string to_string(const TypeSignature& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    if (i) s += ",";
    s += t.components[i] < 0 ? "I" : std::to_string(t.components[i]);
  }
  s += ";";
  for (Role r : t.roles) s += role_char(r);
  return s + ";" + std::to_string(t.part) + ")";
}

struct CmAudit {
  std::string stage;
  // Per colour, the connected (2-)matching vertex count the k0 rule compares
  // with the threshold.
  std::vector<int> governed;
};

struct ReductionReport {
  GroundKind kind = GroundKind::complete;
  ReductionParams params;
  Rational delta;
  int delta_n = 0;
  std::vector<int> thresholds;
  ColouredGraph g1;
  int edges_added = 0;
  int colours_added = 0;
  int maximalize_passes = 0;
  Structure structure;
  Graph complement;
  Matching complement_matching;
  long long complement_bound = 0;
  VertexSet survivors;
  VertexSet kept;
  ColouredGraph g_prime;
  std::vector<CmAudit> audit;
  std::map<std::string, bool> property_checks;

  bool passed() const {
    return std::all_of(property_checks.begin(), property_checks.end(),
                       [](const auto& kv) { return kv.second; });
  }
};

namespace detail {

inline CmAudit audit_of(const char* stage, const ColouredGraph& g, const ReductionParams& p) {
  CMReport r = largest_mono_cm(g);
  CmAudit a{stage, {}};
  for (int c = 0; c < g.colours(); ++c) a.governed.push_back(r.governed(c, p.mode, p.k0));
  return a;
}

inline ReductionReport reduce(const ColouredGraph& input, const Ground& ground,
                              const ReductionParams& p, GroundKind kind) {
  p.validate();
  if (input.colours() != p.k) throw PreconditionError("reduce: graph colour count differs from k");
  const bool complete = kind == GroundKind::complete;
  const char* s1 = complete ? "S1" : "G1";
  const char* s2 = complete ? "S2" : "G2";
  const char* s3 = complete ? "S3" : "G3";
  ColouredGraph g = input;
  if (complete) {
    g.clear_parts();
  } else {
    if (g.order() != ground.spec().order())
      throw PreconditionError("reduce_blowup: vertex count differs from the ground blow-up");
    g.set_parts(ground.spec().layout());
  }
  const int n = g.order();

  ReductionReport rep;
  rep.kind = kind;
  rep.params = p;
  rep.delta = effective_delta(p, kind);
  rep.delta_n = clamp_to_int(floor_of(rep.delta * p.n));
  rep.thresholds = p.thresholds();
  rep.complement_bound = complement_matching_bound(p, kind);

  // Hypotheses.
  if (complete) {
    if (Rational(n) < Rational(p.targets[0]) + p.eps * p.n)
      throw PreconditionError("reduce_complete: need at least N + eps*n vertices, have " +
                              std::to_string(n));
  } else {
    const auto& sizes = ground.spec().sizes();
    for (int i = 0; i < p.s; ++i)
      if (Rational(sizes[static_cast<std::size_t>(i)]) <
          Rational(p.targets[static_cast<std::size_t>(i)]) + p.eps * p.n)
        throw PreconditionError("reduce_blowup: part " + std::to_string(i) +
                                " has fewer than N_i + eps*n vertices");
  }
  const int deficit = min_ground_degree_deficit(g, ground);
  if (deficit > rep.delta_n)
    throw PreconditionError("reduce: a vertex misses " + std::to_string(deficit) +
                            " ground neighbours, more than floor(delta*n) = " +
                            std::to_string(rep.delta_n));

  MaximalizeStats ms;
  rep.g1 = maximalize(g, ground, rep.thresholds, p.k0, p.mode, &ms);
  rep.edges_added = ms.pairs_added;
  rep.colours_added = ms.colours_added;
  rep.maximalize_passes = ms.passes;
  rep.audit.push_back(audit_of("input", g, p));
  rep.audit.push_back(audit_of("maximalized", rep.g1, p));

  rep.property_checks[s1] = min_ground_degree_deficit(rep.g1, ground) <= rep.delta_n;
  {
    bool ok = true;
    for (int c = 0; c < p.k; ++c) {
      const Rational limit = p.alphas[static_cast<std::size_t>(c)] * p.n;
      int small = 0;
      for (const auto& comp : mono_components(rep.g1, c)) {
        const int sz = static_cast<int>(comp.size());
        if (!complete && sz < 2) continue;
        if (Rational(2 * sz) < limit) ++small;
      }
      ok = ok && small <= (complete ? 1 : ground.spec().pattern_edge_count());
    }
    rep.property_checks[s2] = ok;
  }
  rep.structure = detect_structure(rep.g1, ground, p.k0, p.mode);
  rep.property_checks[s3] = true;
  if (!rep.property_checks[s2])
    throw InternalError(std::string("reduce: property ") + s2 +
                        " fails after maximalize (too many small colour components)");

  rep.complement = complement_within(rep.g1, ground).edges;
  rep.complement_matching = max_matching(rep.complement);
  rep.property_checks["complement_bound"] = rep.complement_matching.size() <= rep.complement_bound;
  if (!rep.property_checks["complement_bound"] && !p.delta_override)
    throw InternalError("reduce: complement matching of size " +
                        std::to_string(rep.complement_matching.size()) + " exceeds the bound " +
                        std::to_string(rep.complement_bound));

  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : rep.complement_matching.edges)
    removed[static_cast<std::size_t>(u)] = removed[static_cast<std::size_t>(v)] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[static_cast<std::size_t>(v)]) rep.survivors.push_back(v);
  {
    bool full = true;
    for (auto [u, v] : rep.complement.edges())
      if (!removed[static_cast<std::size_t>(u)] && !removed[static_cast<std::size_t>(v)]) full = false;
    rep.property_checks["g2_has_all_ground_edges"] = full;
    if (!full) throw InternalError("reduce: G1 minus V(M) still misses a ground edge");
  }

  // Trim each part to its target, keeping the lowest ids.
  std::vector<PartRange> lay = complete ? std::vector<PartRange>{{0, n - 1}} : ground.spec().layout();
  std::vector<int> out_parts;
  for (std::size_t i = 0; i < lay.size(); ++i) {
    const int want = p.targets[i];
    int have = 0;
    for (Vertex v : rep.survivors)
      if (v >= lay[i].lo && v <= lay[i].hi && have < want) {
        rep.kept.push_back(v);
        ++have;
      }
    if (have < want)
      throw PreconditionError("reduce: only " + std::to_string(have) + " vertices survive in part " +
                              std::to_string(i) + ", need " + std::to_string(want));
    out_parts.push_back(want);
  }
  rep.kept = normalized(std::move(rep.kept));

  ColouredGraph g2 = induced_subgraph(rep.g1, rep.survivors);
  rep.audit.push_back(audit_of("g2", g2, p));

  ColouredGraph out(static_cast<int>(rep.kept.size()), p.k);
  for (std::size_t i = 0; i < rep.kept.size(); ++i)
    for (std::size_t j = i + 1; j < rep.kept.size(); ++j) {
      Vertex u = rep.kept[i], v = rep.kept[j];
      ColourMask m = g.present(u, v) ? g.mask(u, v) : rep.g1.mask(u, v);
      if (m) out.set_mask(static_cast<int>(i), static_cast<int>(j), colour_bit(min_colour(m)));
    }
  if (!complete) {
    BlowupSpec target = ground.spec().with_sizes(out_parts);
    out.set_parts(target.layout());
  }
  rep.g_prime = std::move(out);
  rep.audit.push_back(audit_of("output", rep.g_prime, p));

  // Postconditions, checked directly.
  Ground out_ground =
      complete ? Ground::complete() : Ground::blowup(ground.spec().with_sizes(out_parts));
  Graph target_graph = out_ground.graph(rep.g_prime.order());
  rep.property_checks["output_is_full_colouring"] = rep.g_prime.support() == target_graph;
  rep.property_checks["output_no_forbidden_cm"] =
      !has_cm_at_least(rep.g_prime, rep.thresholds, p.k0, p.mode).has_value();
  {
    bool agrees = true;
    for (std::size_t i = 0; i < rep.kept.size(); ++i)
      for (std::size_t j = i + 1; j < rep.kept.size(); ++j) {
        ColourMask orig = g.mask(rep.kept[i], rep.kept[j]);
        if (orig && !(orig & rep.g_prime.mask(static_cast<int>(i), static_cast<int>(j)))) agrees = false;
      }
    rep.property_checks["output_respects_input_colours"] = agrees;
  }
  for (const char* key :
       {"output_is_full_colouring", "output_no_forbidden_cm", "output_respects_input_colours"})
    if (!rep.property_checks[key])
      throw InternalError(std::string("reduce: postcondition ") + key + " failed");
  return rep;
}

}  // namespace detail

inline ReductionReport reduce_complete(const ColouredGraph& g, const ReductionParams& p) {
  if (p.s != 1 || p.targets.size() != 1)
    throw PreconditionError("reduce_complete: params must have s = 1 and a single N");
  return detail::reduce(g, Ground::complete(), p, GroundKind::complete);
}

inline ReductionReport reduce_blowup(const ColouredGraph& g, const BlowupSpec& ground,
                                     const ReductionParams& p) {
  if (p.s != ground.parts())
    throw PreconditionError("reduce_blowup: params.s differs from the number of ground parts");
  return detail::reduce(g, Ground::blowup(ground), p, GroundKind::blowup);
}

}  // namespace cmatch
