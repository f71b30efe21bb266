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

#ifndef QUATBRANCH_TREE_HPP_
#define QUATBRANCH_TREE_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "quatbranch/quaternion.hpp"
#include "quatbranch/series.hpp"

namespace qb {

// The ball B_center^{[r]} = {x : v(x - center) >= r}; center is exact and
// reduced modulo pi^r.
struct Vertex {
  int r = 0;
  Series center;

  static Vertex make(int r, const Series& center);
  static Vertex root(const GF2Field& f) { return {0, Series::zero(f)}; }

  bool operator==(const Vertex& o) const { return r == o.r && center == o.center; }
  bool operator!=(const Vertex& o) const { return !(*this == o); }
  bool contains(const Series& x) const;  // x in the ball
  Vertex parent() const;
  std::vector<Vertex> children() const;
  std::vector<Vertex> neighbors() const;  // parent first, then children
  std::string to_string() const;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const {
    return v.center.hash() ^ (static_cast<std::size_t>(v.r) * 0x9e3779b97f4a7c15ULL);
  }
};

int tree_distance(const Vertex& v1, const Vertex& v2);

class WindowError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ball of radius N around B_0^{[0]}. Vertices are stored in breadth-first
// order, so the sub-window of any smaller radius is a prefix.
class Window {
 public:
  static constexpr int kDefaultCap = 10;

  // Cap applies to tau = 1; larger residue fields scale it to a comparable
  // vertex count.
  static Window enumerate(const GF2Field& f, int radius, int cap = kDefaultCap);

  const GF2Field& field() const { return *f_; }
  int radius() const { return radius_; }
  std::size_t size() const { return vertices_.size(); }
  const Vertex& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  int dist(int i) const { return dist_[static_cast<std::size_t>(i)]; }
  // Neighbors inside the window.
  const std::vector<int>& adj(int i) const { return adj_[static_cast<std::size_t>(i)]; }
  // Index of v, or -1 when outside.
  int index(const Vertex& v) const;
  // Number of vertices at distance <= n.
  std::size_t prefix(int n) const;

  static std::size_t expected_size(int tau, int radius);

 private:
  const GF2Field* f_ = nullptr;
  int radius_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<int> dist_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::size_t> prefix_;
  std::unordered_map<Vertex, int, VertexHash> index_;
};

inline Window enumerate_window(const GF2Field& f, int radius, int cap = Window::kDefaultCap) {
  return Window::enumerate(f, radius, cap);
}

// q lies in the maximal order of v. Requires exact entries.
bool member(const Mat2& q, const Vertex& v);

// Members of the window, as a sorted list of indices.
std::vector<int> oracle_branch_indices(const Mat2& q, const Window& w);
std::vector<Vertex> oracle_branch(const Mat2& q, const Window& w);

enum class MeasuredKind { Empty, Thick, Foliage, Irregular };
std::string to_string(MeasuredKind k);

struct MeasuredShape {
  MeasuredKind kind = MeasuredKind::Empty;
  std::vector<Vertex> vertex_set;  // branch (or intersection) inside the window
  std::vector<Vertex> stem;        // inside the window
  int depth = -1;                  // -1 when unbounded
  int diameter = -1;               // of the stem inside the window
  int open_ends = 0;               // stem ends continuing past the window
  bool boundary_safe = false;
  std::string note;
};

enum class MeasuredRel { Disjoint, Overlap, Ray, Line, FoliageMeet, FoliageContained, Irregular };
std::string to_string(MeasuredRel r);

struct IntersectionMeasurement {
  MeasuredShape first;
  MeasuredShape second;
  MeasuredShape intersection;  // stems intersected; vertex_set empty when disjoint
  MeasuredRel rel = MeasuredRel::Irregular;
  int distance = 0;            // Disjoint
  int length = 0;              // Overlap (finite) or in-window length when open
  int depth = 0;               // FoliageMeet
  bool stem_is_edge = false;   // FoliageMeet
  bool boundary_safe = false;
  std::string note;
};

// Brute-force measurement engine. Works on the window of the requested
// radius and peeks into a few extra layers to certify local depths.
class TreeOracle {
 public:
  TreeOracle(const GF2Field& f, int radius, int margin, int cap = Window::kDefaultCap);

  const Window& window() const { return inner_; }
  int radius() const { return radius_; }
  int margin() const { return margin_; }

  MeasuredShape measure_branch(const Mat2& q) const;
  IntersectionMeasurement measure_intersection(const Mat2& q1, const Mat2& q2) const;

  // Membership flags over the window, for DOT export.
  std::vector<bool> membership(const Mat2& q) const;

 private:
  struct Branch;
  Branch analyze(const Mat2& q) const;

  int radius_;
  int margin_;
  int extra_;
  Window inner_;
  Window outer_;
};

IntersectionMeasurement measure_intersection(const Mat2& q1, const Mat2& q2, const Window& w,
                                             int margin);

// Graphviz rendering of a window; vertices colored by branch membership.
std::string window_to_dot(const Window& w, const std::vector<bool>& in1,
                          const std::vector<bool>& in2);

}  // namespace qb

#endif  // QUATBRANCH_TREE_HPP_
