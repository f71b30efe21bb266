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

#include <deque>
#include <set>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "qbtool/generators.hpp"
#include "quatbranch/tree.hpp"

namespace {

using qb::GF2Field;
using qb::Mat2;
using qb::Series;
using qb::Vertex;
using qb::Window;

const GF2Field& F1() { return GF2Field::standard(1); }
Series S(const std::string& s) { return qb::parse_series(F1(), s); }
Mat2 M(const std::string& s) { return qb::parse_mat2(F1(), s); }
Vertex V(int r, const std::string& c) { return Vertex::make(r, S(c)); }

TEST(Tree, DistanceExamples) {
  EXPECT_EQ(qb::tree_distance(V(3, "t"), V(3, "t")), 0);
  EXPECT_EQ(qb::tree_distance(V(0, "0"), V(3, "0")), 3);
  EXPECT_EQ(qb::tree_distance(V(2, "0"), V(2, "t")), 2);
}

TEST(Tree, VerticesAreCanonical) {
  EXPECT_EQ(V(2, "1 + t + t^5"), V(2, "1 + t"));
  EXPECT_NE(V(2, "t"), V(3, "t"));
  EXPECT_EQ(V(-1, "t^-3 + t^2").center, S("t^-3"));
  EXPECT_EQ(V(1, "0").parent(), V(0, "0"));
  EXPECT_EQ(V(1, "0").children().size(), 2u);
  EXPECT_EQ(V(1, "0").neighbors().size(), 3u);
}

TEST(Tree, WindowSizes) {
  EXPECT_EQ(Window::enumerate(F1(), 0).size(), 1u);
  EXPECT_EQ(Window::enumerate(F1(), 1).size(), 4u);
  EXPECT_EQ(Window::enumerate(F1(), 3).size(), 22u);
  for (int tau = 1; tau <= 3; ++tau) {
    const std::size_t q = std::size_t{1} << tau;
    for (int n = 0; n <= 3; ++n) {
      std::size_t pw = 1;
      for (int i = 0; i < n; ++i) pw *= q;
      const std::size_t closed = 1 + (q + 1) * (pw - 1) / (q - 1);
      const Window w = Window::enumerate(GF2Field::standard(tau), n);
      ASSERT_EQ(w.size(), closed);
      std::set<std::string> seen;
      for (const Vertex& v : w.vertices()) seen.insert(v.to_string());
      ASSERT_EQ(seen.size(), w.size());
    }
  }
  EXPECT_THROW(Window::enumerate(F1(), 11), qb::WindowError);
}

TEST(Tree, DistanceAgreesWithBreadthFirstSearch) {
  for (int tau : {1, 2}) {
    const Window w = Window::enumerate(GF2Field::standard(tau), tau == 1 ? 5 : 3);
    const auto d = oracle::bfs_distances(w);
    for (std::size_t i = 0; i < w.size(); ++i) {
      ASSERT_EQ(w.dist(static_cast<int>(i)), d[0][i]);
      for (std::size_t j = 0; j < w.size(); ++j) {
        ASSERT_EQ(qb::tree_distance(w.vertex(static_cast<int>(i)), w.vertex(static_cast<int>(j))), d[i][j]);
      }
    }
  }
}

TEST(Tree, MembershipAgreesWithConjugationOracle) {
  for (int tau : {1, 2}) {
    const GF2Field& f = GF2Field::standard(tau);
    const Window w = Window::enumerate(f, tau == 1 ? 6 : 3);
    qbtool::InstanceGen gen(f, 41);
    for (int i = 0; i < 60; ++i) {
      const Mat2 q{gen.poly(-3, 3), gen.poly(-3, 3), gen.poly(-3, 3), gen.poly(-3, 3)};
      for (const Vertex& v : w.vertices()) {
        ASSERT_EQ(qb::member(q, v), oracle::member_by_conjugation(q, v)) << q.to_string() << " " << v.to_string();
        // another representative of the same ball
        const Vertex alt{v.r, v.center + gen.poly(v.r, v.r + 2)};
        ASSERT_EQ(qb::member(q, alt), qb::member(q, v));
      }
    }
  }
}

TEST(Tree, BranchExamples) {
  const Window w = Window::enumerate(F1(), 5);
  EXPECT_EQ(qb::oracle_branch(Mat2::identity(F1()), w).size(), w.size());
  for (const Vertex& v : w.vertices()) {
    EXPECT_EQ(qb::member(M("[[0,1],[0,0]]"), v), v.r <= 0);
    EXPECT_EQ(qb::member(M("[[1,0],[0,0]]"), v), v.center.is_zero()) << v.to_string();
    // the nilpotent foliage turned towards 0: r >= 0 and v(x^2) >= r
    const bool near_zero = v.center.is_zero() || 2 * v.center.val() >= v.r;
    EXPECT_EQ(qb::member(M("[[0,0],[1,0]]"), v), v.r >= 0 && near_zero) << v.to_string();
  }
}

bool connected(const Window& w, const std::vector<int>& members) {
  if (members.empty()) return true;
  std::set<int> in(members.begin(), members.end()), seen{members[0]};
  std::deque<int> queue{members[0]};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : w.adj(u)) {
      if (in.count(v) && seen.insert(v).second) queue.push_back(v);
    }
  }
  return seen.size() == in.size();
}

TEST(Tree, BranchesAreConnected) {
  const Window w = Window::enumerate(F1(), 7);
  qbtool::InstanceGen gen(F1(), 42);
  for (int i = 0; i < 100; ++i) {
    const Mat2 q = qb::conjugate(gen.conjugator(), gen.integral());
    const auto idx = qb::oracle_branch_indices(q, w);
    ASSERT_FALSE(idx.empty());
    ASSERT_TRUE(connected(w, idx)) << q.to_string();
  }
}

// g = [[1, a], [0, 1]] moves the ball B_x^[r] to B_{x+a}^[r].
TEST(Tree, ConjugationEquivariance) {
  const Window w = Window::enumerate(F1(), 6);
  qbtool::InstanceGen gen(F1(), 43);
  for (int i = 0; i < 40; ++i) {
    const Mat2 q = gen.integral();
    const Series a = gen.poly(0, 2);
    const Mat2 g{Series::one(F1()), a, Series::zero(F1()), Series::one(F1())};
    const Mat2 gq = qb::conjugate(g, q);
    for (const Vertex& v : w.vertices()) {
      if (w.dist(w.index(v)) > 3) continue;
      ASSERT_EQ(qb::member(q, v), qb::member(gq, Vertex::make(v.r, v.center + a)))
          << q.to_string() << " " << v.to_string();
    }
  }
}

TEST(Tree, IntersectionExamples) {
  const qb::TreeOracle orc(F1(), 6, 2);
  const Mat2 q = M("[[1,0],[t,0]]");
  const qb::IntersectionMeasurement same = orc.measure_intersection(q, q);
  EXPECT_EQ(same.intersection.vertex_set.size(), same.first.vertex_set.size());
  EXPECT_NE(same.rel, qb::MeasuredRel::Disjoint);

  const qb::IntersectionMeasurement meet = orc.measure_intersection(M("[[0,1],[0,0]]"), M("[[0,0],[1,0]]"));
  EXPECT_EQ(meet.rel, qb::MeasuredRel::FoliageMeet);
  EXPECT_EQ(meet.intersection.vertex_set.size(), 1u);
  EXPECT_EQ(meet.intersection.vertex_set[0], V(0, "0"));
  EXPECT_EQ(meet.depth, 0);
}

TEST(Tree, FoliagesAtDistance) {
  for (int s = 1; s <= 3; ++s) {
    const qb::TreeOracle orc(F1(), s + 3, 1);
    // leaves at level s around the end 0
    const Mat2 q2{S("0"), S("0"), Series::monomial(F1(), 1, -s), S("0")};
    const qb::IntersectionMeasurement m = orc.measure_intersection(M("[[0,1],[0,0]]"), q2);
    EXPECT_EQ(m.rel, qb::MeasuredRel::Disjoint) << s;
    EXPECT_EQ(m.distance, s);
    EXPECT_TRUE(m.boundary_safe);
  }
}

TEST(Tree, DotExport) {
  const qb::TreeOracle orc(F1(), 2, 1);
  const std::string dot =
      qb::window_to_dot(orc.window(), orc.membership(M("[[0,1],[0,0]]")), orc.membership(M("[[0,0],[1,0]]")));
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("--"), std::string::npos);
}

}  // namespace
