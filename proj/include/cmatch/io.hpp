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

// Line-based graph file format:
//
//   v <n> <k>            vertex count and colour count (first record)
//   p <i> <lo> <hi>      optional: part i spans ids lo..hi (inclusive)
//   e <u> <v> <c1,c2>    edge uv with 1-based colours; omitted for non-edges
//
// Blank lines and '#' comments are ignored. Vertex ids and part indices are
// 0-based. The writer emits parts in index order and edges sorted by (u, v).

#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "cmatch/error.hpp"
#include "cmatch/graph.hpp"

namespace cmatch {

inline void write_graph(std::ostream& os, const ColouredGraph& g) {
  os << "v " << g.order() << ' ' << g.colours() << '\n';
  for (std::size_t i = 0; i < g.parts().size(); ++i)
    os << "p " << i << ' ' << g.parts()[i].lo << ' ' << g.parts()[i].hi << '\n';
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      ColourMask m = g.mask(u, v);
      if (m == 0) continue;
      os << "e " << u << ' ' << v << ' ';
      bool first = true;
      for (int c = 0; c < g.colours(); ++c)
        if (m & colour_bit(c)) {
          if (!first) os << ',';
          os << c + 1;
          first = false;
        }
      os << '\n';
    }
}

inline std::string to_graph_string(const ColouredGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

namespace detail {

inline long parse_int(const std::string& tok, int line) {
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != tok.size())
    throw ParseError("line " + std::to_string(line) + ": expected integer, got '" +
                     tok + "'");
  return value;
}

}  // namespace detail

inline ColouredGraph read_graph(std::istream& is) {
  std::optional<ColouredGraph> g;
  std::map<long, PartRange> parts;
  std::string raw;
  int line = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
  };
  while (std::getline(is, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string tag;
    if (!(ls >> tag)) continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (tag == "v") {
      if (g) fail("duplicate 'v' record");
      if (toks.size() != 2) fail("'v' expects <n> <k>");
      long n = detail::parse_int(toks[0], line);
      long k = detail::parse_int(toks[1], line);
      if (n < 0) fail("negative vertex count");
      if (k < 1 || k > kMaxColours) fail("colour count must be in [1, 16]");
      g.emplace(static_cast<int>(n), static_cast<int>(k));
    } else if (tag == "p") {
      if (!g) fail("'p' before 'v'");
      if (toks.size() != 3) fail("'p' expects <index> <lo> <hi>");
      long idx = detail::parse_int(toks[0], line);
      long lo = detail::parse_int(toks[1], line);
      long hi = detail::parse_int(toks[2], line);
      if (idx < 0 || parts.count(idx)) fail("bad or duplicate part index");
      parts[idx] = {static_cast<Vertex>(lo), static_cast<Vertex>(hi)};
    } else if (tag == "e") {
      if (!g) fail("'e' before 'v'");
      if (toks.size() != 3) fail("'e' expects <u> <v> <colours>");
      long u = detail::parse_int(toks[0], line);
      long v = detail::parse_int(toks[1], line);
      if (u < 0 || v < 0 || u >= g->order() || v >= g->order() || u == v)
        fail("bad edge endpoints");
      if (g->present(static_cast<Vertex>(u), static_cast<Vertex>(v)))
        fail("duplicate edge");
      ColourMask m = 0;
      std::istringstream cs(toks[2]);
      for (std::string c; std::getline(cs, c, ',');) {
        long col = detail::parse_int(c, line);
        if (col < 1 || col > g->colours()) fail("colour out of range");
        m = static_cast<ColourMask>(m | colour_bit(static_cast<int>(col - 1)));
      }
      if (m == 0) fail("empty colour list");
      g->set_mask(static_cast<Vertex>(u), static_cast<Vertex>(v), m);
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (!g) throw ParseError("missing 'v' record");
  if (!parts.empty()) {
    std::vector<PartRange> ranges;
    long expect = 0;
    for (const auto& [idx, r] : parts) {
      if (idx != expect++) throw ParseError("part indices must be 0..s-1");
      ranges.push_back(r);
    }
    try {
      g->set_parts(std::move(ranges));
    } catch (const StructuralError& e) {
      throw ParseError(e.what());
    }
  }
  return *g;
}

inline ColouredGraph parse_graph(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

}  // namespace cmatch
