// Copyright 2026 The salv Authors
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

// Finite-type recognition by matching Coxeter graph components against the
// classification of irreducible finite Coxeter groups.

#include <algorithm>
#include <array>
#include <limits>

#include "salv/coxeter.hpp"

namespace salv {

namespace {

IrreducibleComponent finite(TypeSubset members, std::string name, std::uint64_t order) {
  return {members, std::move(name), order};
}

IrreducibleComponent infinite(TypeSubset members) { return {members, "infinite", std::nullopt}; }

// Saturates at UINT64_MAX; such groups are far beyond enumeration anyway.
std::uint64_t checked_order(std::uint64_t base, int exponent_of_two, int fact) {
  std::uint64_t out = base;
  auto times = [&out](std::uint64_t f) {
    if (__builtin_mul_overflow(out, f, &out)) out = std::numeric_limits<std::uint64_t>::max();
  };
  for (int i = 2; i <= fact; ++i) times(static_cast<std::uint64_t>(i));
  for (int i = 0; i < exponent_of_two; ++i) times(2);
  return out;
}

IrreducibleComponent classify_component(const CoxeterMatrix& m, const std::vector<Gen>& verts) {
  TypeSubset members;
  for (Gen v : verts) members = members.with(v);
  const int k = static_cast<int>(verts.size());
  if (k == 1) return finite(members, "A1", 2);

  struct Edge { Gen a, b; int label; };
  std::vector<Edge> edges;
  std::array<int, kMaxRank> degree{};
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const int label = m(verts[i], verts[j]);
      if (label == 2) continue;
      if (label == kInfinity) return infinite(members);
      edges.push_back({verts[i], verts[j], label});
      ++degree[verts[i]];
      ++degree[verts[j]];
    }
  }
  if (static_cast<int>(edges.size()) != k - 1) return infinite(members);  // has a cycle

  if (k == 2) {
    const int label = edges[0].label;
    std::string name = label == 3 ? "A2" : label == 4 ? "B2" : label == 6 ? "G2"
                                                                           : "I2(" + std::to_string(label) + ")";
    return finite(members, name, static_cast<std::uint64_t>(2 * label));
  }

  auto label_between = [&](Gen a, Gen b) { return m(a, b); };
  int max_degree = 0;
  for (Gen v : verts) max_degree = std::max(max_degree, degree[v]);

  if (max_degree <= 2) {
    // Walk the path from one end.
    Gen start = verts[0];
    for (Gen v : verts) {
      if (degree[v] == 1) { start = v; break; }
    }
    std::vector<Gen> path{start};
    std::vector<int> labels;
    while (static_cast<int>(path.size()) < k) {
      const Gen cur = path.back();
      for (Gen v : verts) {
        if (v == cur || std::find(path.begin(), path.end(), v) != path.end()) continue;
        if (label_between(cur, v) != 2) {
          labels.push_back(label_between(cur, v));
          path.push_back(v);
          break;
        }
      }
    }
    int heavy = 0;
    int heavy_pos = -1;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] > 3) {
        ++heavy;
        heavy_pos = static_cast<int>(i);
      }
    }
    const int last = static_cast<int>(labels.size()) - 1;
    if (heavy == 0) return finite(members, "A" + std::to_string(k), checked_order(1, 0, k + 1));
    if (heavy > 1) return infinite(members);
    const int label = labels[static_cast<std::size_t>(heavy_pos)];
    const bool at_end = heavy_pos == 0 || heavy_pos == last;
    if (label == 4 && at_end) return finite(members, "B" + std::to_string(k), checked_order(1, k, k));
    if (label == 4 && k == 4) return finite(members, "F4", 1152);
    if (label == 5 && at_end && k == 3) return finite(members, "H3", 120);
    if (label == 5 && at_end && k == 4) return finite(members, "H4", 14400);
    return infinite(members);
  }

  if (max_degree == 3) {
    for (const auto& e : edges) {
      if (e.label != 3) return infinite(members);
    }
    Gen center = verts[0];
    int branch_points = 0;
    for (Gen v : verts) {
      if (degree[v] == 3) {
        center = v;
        ++branch_points;
      }
    }
    if (branch_points != 1) return infinite(members);
    std::vector<int> arms;
    for (const auto& e : edges) {
      if (e.a != center && e.b != center) continue;
      Gen prev = center;
      Gen cur = e.a == center ? e.b : e.a;
      int len = 1;
      while (degree[cur] == 2) {
        for (const auto& f : edges) {
          const Gen other = f.a == cur ? f.b : f.b == cur ? f.a : cur;
          if (other != cur && other != prev) {
            prev = cur;
            cur = other;
            break;
          }
        }
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return finite(members, "D" + std::to_string(k), checked_order(1, k - 1, k));
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return finite(members, "E6", 51840);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return finite(members, "E7", 2903040);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return finite(members, "E8", 696729600);
  }
  return infinite(members);
}

}  // namespace

std::vector<IrreducibleComponent> CoxeterSystem::components(TypeSubset t) const {
  const auto& m = matrix();
  std::vector<IrreducibleComponent> out;
  std::uint64_t unvisited = t.bits();
  while (unvisited != 0) {
    const Gen root = static_cast<Gen>(std::countr_zero(unvisited));
    std::vector<Gen> comp{root};
    unvisited &= ~(std::uint64_t{1} << root);
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Gen v : TypeSubset(unvisited).members()) {
        if (m(comp[head], v) != 2) {
          comp.push_back(v);
          unvisited &= ~(std::uint64_t{1} << v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(classify_component(m, comp));
  }
  return out;
}

}  // namespace salv
