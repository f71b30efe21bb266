// Copyright 2026 The quatbranch Authors
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

#include "quatbranch/tree.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <sstream>

namespace qb {

Vertex Vertex::make(int r, const Series& center) {
  if (!center.is_exact()) {
    if (center.prec() < r) throw PrecisionError("center not known modulo t^" + std::to_string(r));
  }
  return {r, center.reduce_mod(r)};
}

bool Vertex::contains(const Series& x) const { return (x + center).val() >= r; }

Vertex Vertex::parent() const { return {r - 1, center.reduce_mod(r - 1)}; }

std::vector<Vertex> Vertex::children() const {
  const GF2Field& f = center.field();
  std::vector<Vertex> out;
  out.reserve(f.size());
  for (FieldElem c = 0; c < f.size(); ++c) {
    out.push_back({r + 1, c == 0 ? center : center + Series::monomial(f, c, r)});
  }
  return out;
}

std::vector<Vertex> Vertex::neighbors() const {
  std::vector<Vertex> out;
  out.push_back(parent());
  for (auto& c : children()) out.push_back(std::move(c));
  return out;
}

std::string Vertex::to_string() const {
  return "B_{" + center.to_string() + "}^{[" + std::to_string(r) + "]}";
}

int tree_distance(const Vertex& v1, const Vertex& v2) {
  const int m = std::min({v1.r, v2.r, (v1.center + v2.center).val()});
  return (v1.r - m) + (v2.r - m);
}

std::size_t Window::expected_size(int tau, int radius) {
  const std::size_t q = std::size_t{1} << tau;
  std::size_t pw = 1;
  for (int i = 0; i < radius; ++i) pw *= q;
  return 1 + (q + 1) * (pw - 1) / (q - 1);
}

Window Window::enumerate(const GF2Field& f, int radius, int cap) {
  if (radius < 0) throw WindowError("window radius must be nonnegative");
  if (expected_size(f.tau(), radius) > expected_size(1, cap))
    throw WindowError("window radius " + std::to_string(radius) + " exceeds the cap");
  Window w;
  w.f_ = &f;
  w.radius_ = radius;
  w.vertices_.reserve(expected_size(f.tau(), radius));
  std::vector<int> parent;
  w.vertices_.push_back(Vertex::root(f));
  w.dist_.push_back(0);
  parent.push_back(-1);
  w.index_.emplace(w.vertices_.back(), 0);
  for (std::size_t head = 0; head < w.vertices_.size(); ++head) {
    const int d = w.dist_[head];
    if (d == radius) continue;
    const Vertex v = w.vertices_[head];
    for (Vertex& nb : v.neighbors()) {
      if (w.index_.count(nb)) continue;
      const int idx = static_cast<int>(w.vertices_.size());
      w.index_.emplace(nb, idx);
      w.vertices_.push_back(std::move(nb));
      w.dist_.push_back(d + 1);
      parent.push_back(static_cast<int>(head));
    }
  }
  w.adj_.assign(w.vertices_.size(), {});
  for (std::size_t i = 1; i < w.vertices_.size(); ++i) {
    w.adj_[i].push_back(parent[i]);
    w.adj_[static_cast<std::size_t>(parent[i])].push_back(static_cast<int>(i));
  }
  w.prefix_.assign(static_cast<std::size_t>(radius) + 1, 0);
  for (int d : w.dist_) ++w.prefix_[static_cast<std::size_t>(d)];
  for (std::size_t i = 1; i < w.prefix_.size(); ++i) w.prefix_[i] += w.prefix_[i - 1];
  return w;
}

int Window::index(const Vertex& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

std::size_t Window::prefix(int n) const {
  if (n < 0) return 0;
  if (n >= radius_) return vertices_.size();
  return prefix_[static_cast<std::size_t>(n)];
}

bool member(const Mat2& q, const Vertex& v) {
  if (!q.is_exact()) throw std::invalid_argument("membership needs exact matrix entries");
  if (!q.c.is_zero() && q.c.val() + v.r < 0) return false;
  const Series xc = v.center * q.c;
  if ((xc + q.a).val() < 0) return false;
  if ((xc + q.d).val() < 0) return false;
  const Series fx = (xc + q.a + q.d) * v.center + q.b;
  return fx.val() >= v.r;
}

std::vector<int> oracle_branch_indices(const Mat2& q, const Window& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (member(q, w.vertex(static_cast<int>(i)))) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<Vertex> oracle_branch(const Mat2& q, const Window& w) {
  std::vector<Vertex> out;
  for (int i : oracle_branch_indices(q, w)) out.push_back(w.vertex(i));
  return out;
}

std::string to_string(MeasuredKind k) {
  switch (k) {
    case MeasuredKind::Empty: return "Empty";
    case MeasuredKind::Thick: return "Thick";
    case MeasuredKind::Foliage: return "Foliage";
    case MeasuredKind::Irregular: return "Irregular";
  }
  return "?";
}

std::string to_string(MeasuredRel r) {
  switch (r) {
    case MeasuredRel::Disjoint: return "Disjoint";
    case MeasuredRel::Overlap: return "Overlap";
    case MeasuredRel::Ray: return "Ray";
    case MeasuredRel::Line: return "Line";
    case MeasuredRel::FoliageMeet: return "FoliageMeet";
    case MeasuredRel::FoliageContained: return "FoliageContained";
    case MeasuredRel::Irregular: return "Irregular";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Oracle internals. Indices refer to the outer window; the inner window is a
// prefix of it and the "ring" is the layer at distance radius+1.

struct TreeOracle::Branch {
  MeasuredKind kind = MeasuredKind::Empty;
  std::vector<char> in;    // membership over the outer window
  std::vector<char> stem;  // stem over inner window and ring
  int local_max = -1;      // max local depth on the stem
  std::string note;
};

TreeOracle::TreeOracle(const GF2Field& f, int radius, int margin, int cap)
    : radius_(radius),
      margin_(margin),
      extra_(std::max(margin, 0) + 2),
      inner_(Window::enumerate(f, radius, cap)),
      outer_(Window::enumerate(f, radius + extra_, cap + extra_)) {}

std::vector<bool> TreeOracle::membership(const Mat2& q) const {
  std::vector<bool> out(inner_.size());
  for (std::size_t i = 0; i < inner_.size(); ++i) out[i] = member(q, inner_.vertex(static_cast<int>(i)));
  return out;
}

TreeOracle::Branch TreeOracle::analyze(const Mat2& q) const {
  Branch br;
  const std::size_t n_out = outer_.size();
  const std::size_t n_in = inner_.size();
  const std::size_t n_ring = outer_.prefix(radius_ + 1);
  const int outer_r = outer_.radius();
  br.in.assign(n_out, 0);
  for (std::size_t i = 0; i < n_out; ++i) br.in[i] = member(q, outer_.vertex(static_cast<int>(i)));

  // Distance to the nearest non-member seen inside the outer window.
  std::vector<int> ld(n_out, INT_MAX);
  std::deque<int> queue;
  for (std::size_t i = 0; i < n_out; ++i) {
    if (!br.in[i]) {
      ld[i] = 0;
      queue.push_back(static_cast<int>(i));
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : outer_.adj(u)) {
      if (ld[static_cast<std::size_t>(v)] == INT_MAX) {
        ld[static_cast<std::size_t>(v)] = ld[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }

  bool any_inner = false;
  for (std::size_t i = 0; i < n_in; ++i) any_inner |= br.in[i] != 0;
  if (!any_inner) {
    br.kind = MeasuredKind::Empty;
    return br;
  }

  // Exact local depth: certified from the outer BFS, or by a local search in
  // the full tree capped at `cap`.
  const int cap = outer_r + 1;
  std::unordered_map<Vertex, bool, VertexHash> memo;
  auto is_member = [&](const Vertex& v) {
    const int idx = outer_.index(v);
    if (idx >= 0) return br.in[static_cast<std::size_t>(idx)] != 0;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    const bool m = member(q, v);
    memo.emplace(v, m);
    return m;
  };
  auto local_depth = [&](const Vertex& start) {
    std::unordered_map<Vertex, int, VertexHash> seen;
    std::deque<Vertex> bfs;
    bfs.push_back(start);
    seen.emplace(start, 0);
    while (!bfs.empty()) {
      Vertex v = bfs.front();
      bfs.pop_front();
      const int d = seen[v];
      if (!is_member(v)) return d;
      if (d >= cap) continue;
      for (Vertex& nb : v.neighbors()) {
        if (seen.count(nb)) continue;
        seen.emplace(nb, d + 1);
        bfs.push_back(std::move(nb));
      }
    }
    return cap;
  };
  const Vertex root = Vertex::root(outer_.field());
  // Follow strictly increasing local depth away from the root. Foliages keep
  // climbing until the cap; a thick line levels off at its depth plus one.
  auto climbs_to_cap = [&](int start, int start_ld) {
    Vertex cur = outer_.vertex(start);
    int cur_ld = start_ld;
    while (cur_ld < cap) {
      const int dcur = tree_distance(root, cur);
      bool moved = false;
      for (Vertex& nb : cur.neighbors()) {
        if (tree_distance(root, nb) < dcur || !is_member(nb)) continue;
        const int d = local_depth(nb);
        if (d > cur_ld) {
          cur = std::move(nb);
          cur_ld = d;
          moved = true;
          break;
        }
      }
      if (!moved) return false;
    }
    return true;
  };
  auto mark_foliage = [&] {
    br.kind = MeasuredKind::Foliage;
    br.stem.assign(n_ring, 0);
    for (std::size_t k = 0; k < n_ring; ++k) br.stem[k] = br.in[k];
    br.note = "local depth reaches " + std::to_string(cap);
  };

  std::vector<int> exact(n_ring, -1);
  std::vector<int> pending;
  for (std::size_t i = 0; i < n_ring; ++i) {
    if (!br.in[i]) {
      exact[i] = 0;
      continue;
    }
    const long long bound = static_cast<long long>(outer_r) + 1 - outer_.dist(static_cast<int>(i));
    if (ld[i] != INT_MAX && ld[i] <= bound) exact[i] = ld[i];
    else pending.push_back(static_cast<int>(i));
  }
  std::sort(pending.begin(), pending.end(), [&](int a, int b) {
    return ld[static_cast<std::size_t>(a)] > ld[static_cast<std::size_t>(b)];
  });
  for (int i : pending) {
    const int d = local_depth(outer_.vertex(i));
    if (d >= cap) {
      mark_foliage();
      return br;
    }
    exact[static_cast<std::size_t>(i)] = d;
  }

  int m_in = 0;
  for (std::size_t i = 0; i < n_in; ++i) m_in = std::max(m_in, exact[i]);
  int m_ring = 0;
  for (std::size_t i = n_in; i < n_ring; ++i) m_ring = std::max(m_ring, exact[i]);
  br.local_max = m_in;
  br.stem.assign(n_ring, 0);
  for (std::size_t i = 0; i < n_ring; ++i) br.stem[i] = exact[i] == m_in;
  if (m_ring > m_in) {
    // Depth still growing at the ring: a foliage end, or a thick line whose
    // stem lies outside. Tell them apart with one capped search.
    std::size_t top = n_in;
    for (std::size_t i = n_in; i < n_ring; ++i) {
      if (exact[i] > exact[top]) top = i;
    }
    if (climbs_to_cap(static_cast<int>(top), exact[top])) {
      mark_foliage();
      return br;
    }
    br.kind = MeasuredKind::Irregular;
    br.note = "local depth keeps growing past the window";
    return br;
  }
  br.kind = MeasuredKind::Thick;
  return br;
}

namespace {

// Path structure of a vertex subset of the inner window plus ring.
struct PathInfo {
  bool connected = false;
  bool is_path = false;
  int open_ends = 0;
  int diameter = 0;
  std::vector<int> inner_members;
  std::vector<int> endpoints;  // inner vertices with < 2 neighbors in the set
};

PathInfo path_info(const Window& outer, std::size_t n_in, const std::vector<char>& set) {
  PathInfo info;
  for (std::size_t i = 0; i < n_in; ++i) {
    if (set[i]) info.inner_members.push_back(static_cast<int>(i));
  }
  if (info.inner_members.empty()) return info;
  info.is_path = true;
  for (int i : info.inner_members) {
    int deg = 0, deg_inner = 0;
    for (int v : outer.adj(i)) {
      if (static_cast<std::size_t>(v) < set.size() && set[static_cast<std::size_t>(v)]) {
        ++deg;
        if (static_cast<std::size_t>(v) < n_in) ++deg_inner;
        else ++info.open_ends;
      }
    }
    if (deg > 2) info.is_path = false;
    if (deg_inner < 2) info.endpoints.push_back(i);
  }
  // Connectivity and diameter via two breadth-first sweeps inside the set.
  auto sweep = [&](int start, int* far, int* count) {
    std::unordered_map<int, int> dist;
    std::deque<int> q;
    q.push_back(start);
    dist[start] = 0;
    int best = start;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      if (dist[u] > dist[best]) best = u;
      for (int v : outer.adj(u)) {
        if (static_cast<std::size_t>(v) >= n_in || !set[static_cast<std::size_t>(v)]) continue;
        if (dist.count(v)) continue;
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
    *far = best;
    *count = static_cast<int>(dist.size());
    return dist[best];
  };
  int far = 0, count = 0;
  sweep(info.inner_members.front(), &far, &count);
  info.connected = count == static_cast<int>(info.inner_members.size());
  int far2 = 0;
  info.diameter = sweep(far, &far2, &count);
  return info;
}

std::vector<Vertex> collect(const Window& w, const std::vector<int>& idx) {
  std::vector<Vertex> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(w.vertex(i));
  return out;
}

}  // namespace

MeasuredShape TreeOracle::measure_branch(const Mat2& q) const {
  const Branch br = analyze(q);
  MeasuredShape ms;
  ms.kind = br.kind;
  ms.note = br.note;
  const std::size_t n_in = inner_.size();
  std::vector<int> members;
  for (std::size_t i = 0; i < n_in; ++i) {
    if (br.in[i]) members.push_back(static_cast<int>(i));
  }
  ms.vertex_set = collect(inner_, members);
  if (br.kind == MeasuredKind::Empty || br.kind == MeasuredKind::Irregular) return ms;

  const PathInfo pi = path_info(outer_, n_in, br.stem);
  ms.stem = collect(inner_, pi.inner_members);
  ms.open_ends = pi.open_ends;
  if (br.kind == MeasuredKind::Foliage) {
    ms.boundary_safe = true;
    return ms;
  }
  ms.depth = br.local_max - 1;
  if (!pi.connected || !pi.is_path) {
    ms.kind = MeasuredKind::Irregular;
    ms.note = "stem is not a path";
    return ms;
  }
  ms.diameter = pi.diameter;
  const int limit = radius_ - margin_;
  if (pi.open_ends == 0) {
    // Finite branch: all of it must sit well inside the window.
    bool inside = true;
    for (int i : members) inside &= inner_.dist(i) <= limit;
    for (std::size_t i = n_in; i < br.in.size(); ++i) inside &= !br.in[i];
    ms.boundary_safe = inside;
  } else {
    bool ok = true;
    for (int e : pi.endpoints) {
      const bool open = inner_.dist(e) == radius_;
      if (!open) ok &= inner_.dist(e) <= limit;
    }
    ms.boundary_safe = ok;
  }
  return ms;
}

IntersectionMeasurement TreeOracle::measure_intersection(const Mat2& q1, const Mat2& q2) const {
  IntersectionMeasurement im;
  im.first = measure_branch(q1);
  im.second = measure_branch(q2);
  const Branch b1 = analyze(q1);
  const Branch b2 = analyze(q2);
  auto usable = [](const Branch& b) {
    return b.kind == MeasuredKind::Thick || b.kind == MeasuredKind::Foliage;
  };
  if (!usable(b1) || !usable(b2)) {
    im.note = "branch measurement not usable";
    return im;
  }
  const bool thick_ok = (b1.kind != MeasuredKind::Thick || im.first.kind == MeasuredKind::Thick) &&
                        (b2.kind != MeasuredKind::Thick || im.second.kind == MeasuredKind::Thick);
  if (!thick_ok) {
    im.note = "irregular stem";
    return im;
  }
  const std::size_t n_in = inner_.size();
  const std::size_t n_ring = b1.stem.size();
  const int limit = radius_ - margin_;

  std::vector<char> both(n_ring, 0);
  bool any = false;
  for (std::size_t i = 0; i < n_ring; ++i) {
    both[i] = b1.stem[i] && b2.stem[i];
    if (i < n_in) any |= both[i] != 0;
  }

  if (!any) {
    // Distance between the stems: breadth-first from stem 1 inside the window.
    std::vector<int> dist(n_in, -1);
    std::deque<int> queue;
    for (std::size_t i = 0; i < n_in; ++i) {
      if (b1.stem[i]) {
        dist[i] = 0;
        queue.push_back(static_cast<int>(i));
      }
    }
    int hit = -1;
    while (!queue.empty() && hit < 0) {
      int u = queue.front();
      queue.pop_front();
      if (b2.stem[static_cast<std::size_t>(u)]) {
        hit = u;
        break;
      }
      for (int v : inner_.adj(u)) {
        if (static_cast<std::size_t>(v) >= n_in || dist[static_cast<std::size_t>(v)] >= 0) continue;
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
    bool s2_any = false;
    for (std::size_t i = 0; i < n_in; ++i) s2_any |= b2.stem[i] != 0;
    if (hit < 0 || !s2_any) {
      im.note = "a stem misses the window";
      return im;
    }
    im.rel = MeasuredRel::Disjoint;
    im.distance = dist[static_cast<std::size_t>(hit)];
    // Walk back to the realizing vertex on stem 1.
    int cur = hit;
    bool ok = inner_.dist(hit) <= limit;
    while (dist[static_cast<std::size_t>(cur)] > 0) {
      for (int v : inner_.adj(cur)) {
        if (dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(cur)] - 1) {
          cur = v;
          break;
        }
      }
    }
    ok &= inner_.dist(cur) <= limit;
    im.boundary_safe = ok;
    return im;
  }

  const PathInfo pi = path_info(outer_, n_in, both);
  im.intersection.kind = MeasuredKind::Thick;
  im.intersection.vertex_set = collect(inner_, pi.inner_members);
  im.intersection.open_ends = pi.open_ends;
  im.intersection.diameter = pi.diameter;
  if (!pi.connected) {
    im.note = "disconnected intersection";
    return im;
  }
  bool interior = true;
  for (int i : pi.inner_members) interior &= inner_.dist(i) <= limit;

  const bool fol1 = b1.kind == MeasuredKind::Foliage;
  const bool fol2 = b2.kind == MeasuredKind::Foliage;
  if (fol1 && fol2) {
    if (pi.open_ends == 0) {
      // Center of a finite tree: vertices of minimal eccentricity.
      std::vector<int> ecc;
      int best = INT_MAX;
      for (int u : pi.inner_members) {
        int e = 0;
        for (int v : pi.inner_members) e = std::max(e, tree_distance(inner_.vertex(u), inner_.vertex(v)));
        ecc.push_back(e);
        best = std::min(best, e);
      }
      std::vector<int> center;
      for (std::size_t k = 0; k < ecc.size(); ++k) {
        if (ecc[k] == best) center.push_back(pi.inner_members[k]);
      }
      int depth = 0;
      for (int v : pi.inner_members) {
        int dmin = INT_MAX;
        for (int c : center) dmin = std::min(dmin, tree_distance(inner_.vertex(v), inner_.vertex(c)));
        depth = std::max(depth, dmin);
      }
      im.rel = MeasuredRel::FoliageMeet;
      im.length = pi.diameter;
      im.depth = depth;
      im.stem_is_edge = center.size() == 2;
      im.intersection.stem = collect(inner_, center);
      im.intersection.depth = depth;
      im.boundary_safe = interior;
      return im;
    }
    bool eq1 = true, eq2 = true;
    for (std::size_t i = 0; i < n_in; ++i) {
      eq1 &= (both[i] != 0) == (b1.stem[i] != 0);
      eq2 &= (both[i] != 0) == (b2.stem[i] != 0);
    }
    if (eq1 || eq2) {
      im.rel = MeasuredRel::FoliageContained;
      im.boundary_safe = true;
    } else {
      im.note = "unbounded foliage intersection without containment";
    }
    return im;
  }

  if (!pi.is_path) {
    im.note = "intersection of stems is not a path";
    return im;
  }
  im.intersection.stem = im.intersection.vertex_set;
  im.length = pi.diameter;
  if (pi.open_ends == 0) {
    im.rel = MeasuredRel::Overlap;
    im.boundary_safe = interior;
  } else if (pi.open_ends == 1) {
    im.rel = MeasuredRel::Ray;
    bool ok = true;
    for (int e : pi.endpoints) {
      if (inner_.dist(e) != radius_) ok &= inner_.dist(e) <= limit;
    }
    im.boundary_safe = ok;
  } else if (pi.open_ends == 2) {
    im.rel = MeasuredRel::Line;
    im.boundary_safe = true;
  } else {
    im.note = "intersection leaves the window more than twice";
  }
  return im;
}

IntersectionMeasurement measure_intersection(const Mat2& q1, const Mat2& q2, const Window& w,
                                             int margin) {
  TreeOracle oracle(w.field(), w.radius(), margin, std::max(w.radius(), Window::kDefaultCap));
  return oracle.measure_intersection(q1, q2);
}

std::string window_to_dot(const Window& w, const std::vector<bool>& in1,
                          const std::vector<bool>& in2) {
  std::ostringstream os;
  os << "graph window {\n  node [style=filled, fontsize=9];\n";
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool a = i < in1.size() && in1[i];
    const bool b = i < in2.size() && in2[i];
    const char* color = a && b ? "orchid" : a ? "tomato" : b ? "lightblue" : "white";
    os << "  v" << i << " [label=\"" << w.vertex(static_cast<int>(i)).to_string()
       << "\", fillcolor=" << color << "];\n";
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (int j : w.adj(static_cast<int>(i))) {
      if (static_cast<std::size_t>(j) > i) os << "  v" << i << " -- v" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace qb
