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

#include "salv/check.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace salv {

namespace {

using Rng = std::mt19937_64;
// Returns an empty string on success, otherwise what went wrong.
using Body = std::function<std::string(Rng&)>;

struct Task {
  std::string suite;
  std::string name;
  std::string system;
  Body body;
};

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ArrangementSpec dihedral_spec(int m) {
  ArrangementSpec spec;
  spec.generators = {"s", "t"};
  spec.coxeter_matrix = {{1, m}, {m, 1}};
  spec.preset = ChamberPreset::Interval;
  return spec;
}

ArrangementSpec simplex_spec(const CoxeterMatrix& m) {
  ArrangementSpec spec;
  for (int i = 0; i < m.rank(); ++i) spec.generators.push_back("s" + std::to_string(i + 1));
  spec.coxeter_matrix = m.rows();
  spec.preset = ChamberPreset::Simplex;
  return spec;
}

std::string fail_if(bool bad, const std::string& message) { return bad ? message : std::string(); }

std::string elem_text(const Elem& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.word.size(); ++i) out += (i ? "," : "") + std::to_string(w.word[i]);
  return out + "]";
}

std::vector<Gen> random_word(Rng& rng, int rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, rank - 1);
  std::vector<Gen> word(len(rng));
  for (Gen& g : word) g = static_cast<Gen>(letter(rng));
  return word;
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::vector<TypeSubset> all_subsets(int rank) {
  std::vector<TypeSubset> out;
  const TypeSubset all = TypeSubset::all(rank);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rank); ++bits) {
    TypeSubset t;
    for (Gen s : all.members()) {
      if (bits >> s & 1) t = t.with(s);
    }
    out.push_back(t);
  }
  return out;
}

std::vector<Reflection> sym_diff(const std::vector<Reflection>& a, const std::vector<Reflection>& b) {
  std::vector<Reflection> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Context {
  std::vector<std::pair<std::string, std::shared_ptr<const Session>>> finite;
  std::shared_ptr<const Session> affine;
  std::shared_ptr<const Session> rank_one;
};

Context make_context() {
  Context ctx;
  for (const auto& b : bundled_systems()) {
    auto session = std::make_shared<const Session>(b.spec);
    if (b.name == "affine-A2") {
      ctx.affine = session;
    } else if (b.name == "A1") {
      ctx.rank_one = session;
    } else {
      ctx.finite.emplace_back(b.name, session);
    }
  }
  return ctx;
}

// ---------------------------------------------------------------------------

void coxeter_tasks(const Context& ctx, std::vector<Task>& tasks) {
  for (const auto& [name, session] : ctx.finite) {
    const Session* s = session.get();
    tasks.push_back({"coxeter", "enumeration_matches_order", name, [s](Rng&) -> std::string {
      const auto& sys = s->system();
      const auto elems = sys.enumerate(sys.generators());
      const auto order = sys.parabolic_order(sys.generators());
      if (!order || elems.size() != *order) {
        return "enumerated " + std::to_string(elems.size()) + " elements, table says " +
               (order ? std::to_string(*order) : std::string("infinite"));
      }
      std::set<Elem> distinct(elems.begin(), elems.end());
      if (distinct.size() != elems.size()) return std::string("duplicate canonical words");
      for (const Elem& w : elems) {
        if (sys.reduce(w.word) != w) return "canonical word " + elem_text(w) + " is not a fixed point";
        if (sys.multiply(w, sys.inverse(w)) != sys.identity()) return "w w^-1 != 1 for " + elem_text(w);
      }
      return std::string();
    }});
    tasks.push_back({"coxeter", "inversion_count_is_length", name, [s](Rng&) -> std::string {
      const auto& sys = s->system();
      for (const Elem& w : sys.enumerate(sys.generators())) {
        const auto inv = sys.inversion_set(w);
        if (inv.size() != w.length()) return "|N(w)| != l(w) for " + elem_text(w);
        for (const Reflection& r : inv) {
          if (sys.multiply(r.elem, w).length() >= w.length()) return "inversion does not shorten " + elem_text(w);
        }
      }
      return std::string();
    }});
    tasks.push_back({"coxeter", "minimality_conditions_agree", name, [s](Rng&) -> std::string {
      const auto& sys = s->system();
      const auto elems = sys.enumerate(sys.generators());
      for (TypeSubset t : all_subsets(sys.rank())) {
        const auto group = sys.enumerate(t);
        for (const Elem& w : elems) {
          bool shortest = true;
          bool additive = true;
          for (const Elem& u : group) {
            const std::size_t l = sys.multiply(w, u).length();
            shortest = shortest && l >= w.length();
            additive = additive && l == w.length() + u.length();
          }
          const bool no_descent = (sys.descents(w, Side::Right) & t).empty();
          const bool reported = sys.is_coset_minimal(w, t);
          if (shortest != additive || shortest != no_descent || shortest != reported) {
            return "conditions disagree for " + elem_text(w) + " and " + format_subset(t);
          }
          if (shortest != (sys.coset_min(w, t) == w)) return "coset_min disagrees for " + elem_text(w);
        }
      }
      return std::string();
    }});
    tasks.push_back({"coxeter", "associativity_and_idempotence", name, [s](Rng& rng) -> std::string {
      const auto& sys = s->system();
      for (int i = 0; i < 300; ++i) {
        const Elem a = sys.reduce(random_word(rng, sys.rank(), 12));
        const Elem b = sys.reduce(random_word(rng, sys.rank(), 12));
        const Elem c = sys.reduce(random_word(rng, sys.rank(), 12));
        if (sys.multiply(sys.multiply(a, b), c) != sys.multiply(a, sys.multiply(b, c))) {
          return "(ab)c != a(bc) for " + elem_text(a) + elem_text(b) + elem_text(c);
        }
        if (sys.reduce(a.word) != a) return "reduce is not idempotent on " + elem_text(a);
      }
      return std::string();
    }});
    tasks.push_back({"coxeter", "cache_off_identical", name, [s](Rng& rng) -> std::string {
      const auto& sys = s->system();
      const CoxeterSystem plain(sys.matrix(), false);
      for (int i = 0; i < 200; ++i) {
        const auto word = random_word(rng, sys.rank(), 16);
        if (sys.reduce(word) != plain.reduce(word)) return std::string("memoized and plain reduction differ");
      }
      return std::string();
    }});
    tasks.push_back({"coxeter", "concurrent_reduction", name, [s](Rng& rng) -> std::string {
      const CoxeterSystem shared(s->system().matrix(), true);
      const CoxeterSystem plain(s->system().matrix(), false);
      std::vector<std::vector<Gen>> words;
      for (int i = 0; i < 400; ++i) words.push_back(random_word(rng, shared.rank(), 16));
      std::vector<Elem> results(words.size());
      std::vector<std::thread> workers;
      for (std::size_t t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
          for (std::size_t i = t; i < words.size(); i += 4) results[i] = shared.reduce(words[i]);
        });
      }
      for (auto& w : workers) w.join();
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (results[i] != plain.reduce(words[i])) return std::string("concurrent result differs from serial");
      }
      return std::string();
    }});
  }
  const Session* affine = ctx.affine.get();
  tasks.push_back({"coxeter", "infinite_group_detected", "affine-A2", [affine](Rng&) -> std::string {
    const auto& sys = affine->system();
    if (sys.is_finite() || sys.parabolic_order(sys.generators())) return std::string("reported finite");
    try {
      sys.enumerate(sys.generators());
      return std::string("unbounded enumeration did not refuse");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WouldNotTerminate) return std::string("wrong error kind");
    }
    const auto ball = sys.enumerate(sys.generators(), 6);
    for (const Elem& w : ball) {
      if (w.length() > 6 || sys.reduce(w.word) != w) return "bad element " + elem_text(w);
    }
    return std::string();
  }});
}

void chamber_tasks(const Context& ctx, std::vector<Task>& tasks) {
  for (const auto& [name, session] : ctx.finite) {
    const Session* s = session.get();
    tasks.push_back({"chamber", "invariants", name, [s](Rng&) -> std::string {
      const auto& chamber = s->arrangement().chamber_complex();
      const auto& sys = s->system();
      for (TypeSubset t : chamber.acceptable()) {
        if (!sys.is_spherical(t)) return "non-spherical " + format_subset(t);
        for (Gen g : t.members()) {
          if (!chamber.is_acceptable(t.without(g))) return "not downward closed at " + format_subset(t);
        }
      }
      if (!chamber.warnings().empty()) return "unexpected warning: " + chamber.warnings().front();
      const long long expected = chamber.dim() % 2 == 0 ? 1 : -1;
      return fail_if(chamber.euler_sum() != expected, "alternating count is not (-1)^dim");
    }});
  }
  const Session* one = ctx.rank_one.get();
  tasks.push_back({"chamber", "lenient_warnings", "A1", [one](Rng&) -> std::string {
    return fail_if(one->arrangement().chamber_complex().warnings().empty(), "expected an Euler-test warning");
  }});
  tasks.push_back({"chamber", "strict_rejections", "I2(3)", [](Rng&) -> std::string {
    auto expect = [](std::vector<TypeSubset> family, ErrorKind kind, bool strict) -> std::string {
      try {
        validate_chamber(CoxeterSystem(matrices::dihedral(3)), std::move(family), strict);
      } catch (const Error& e) {
        return fail_if(e.kind() != kind, "got " + std::string(to_string(e.kind())));
      }
      return "accepted a family that should raise " + std::string(to_string(kind));
    };
    std::string r = expect({TypeSubset{0}, TypeSubset{1}, TypeSubset{0, 1}}, ErrorKind::EulerTestFailed, true);
    if (r.empty()) r = expect({TypeSubset{0, 1}}, ErrorKind::MissingSingleton, false);
    if (r.empty()) r = expect({TypeSubset{2}}, ErrorKind::LetterOutOfRange, false);
    return r;
  }});
  tasks.push_back({"chamber", "non_spherical_rejected", "affine-A2", [](Rng&) -> std::string {
    try {
      validate_chamber(CoxeterSystem(matrices::affine_a2()), {TypeSubset{0, 1, 2}}, false);
    } catch (const Error& e) {
      return fail_if(e.kind() != ErrorKind::NonSphericalMember && e.kind() != ErrorKind::MissingSingleton,
                     "got " + std::string(to_string(e.kind())));
    }
    return std::string("accepted the full affine generating set");
  }});
}

void arrangement_tasks(const Context& ctx, std::vector<Task>& tasks) {
  for (const auto& [name, session] : ctx.finite) {
    const Session* s = session.get();
    tasks.push_back({"arrangement", "separation_identity", name, [s](Rng& rng) -> std::string {
      const auto& arr = s->arrangement();
      const auto& sys = s->system();
      std::vector<Chamber> chambers;
      for (const Elem& w : sys.enumerate(sys.generators())) chambers.push_back({w});
      auto check = [&](const Chamber& c, const Chamber& d, const Chamber& e) {
        return arr.separating(c, e) == sym_diff(arr.separating(c, d), arr.separating(d, e));
      };
      if (chambers.size() <= 24) {
        for (const auto& c : chambers)
          for (const auto& d : chambers)
            for (const auto& e : chambers)
              if (!check(c, d, e)) return std::string("R(C,E) != R(C,D) ^ R(D,E)");
      } else {
        for (int i = 0; i < 3000; ++i) {
          if (!check(pick(rng, chambers), pick(rng, chambers), pick(rng, chambers))) {
            return std::string("R(C,E) != R(C,D) ^ R(D,E)");
          }
        }
      }
      for (const auto& c : chambers) {
        for (int i = 0; i < 8; ++i) {
          const Chamber& d = pick(rng, chambers);
          if (arr.separating(c, d).size() != arr.distance(c, d)) return std::string("|R(C,D)| != d(C,D)");
        }
      }
      return std::string();
    }});
    tasks.push_back({"arrangement", "projection_is_unique_nearest", name, [s](Rng&) -> std::string {
      const auto& arr = s->arrangement();
      const auto& sys = s->system();
      const auto poset = arr.build_faces();
      const auto elems = sys.enumerate(sys.generators());
      for (const Face& f : poset.faces) {
        const auto above = arr.chambers_above(f);
        if (above.size() != *sys.parabolic_order(f.type)) return "wrong number of chambers above a face";
        for (const Elem& w : elems) {
          const Chamber c{w};
          std::size_t best = SIZE_MAX, ties = 0;
          Chamber arg;
          for (const Chamber& d : above) {
            const std::size_t dist = arr.distance(c, d);
            if (dist < best) {
              best = dist;
              arg = d;
              ties = 1;
            } else if (dist == best) {
              ++ties;
            }
          }
          if (ties != 1) return std::string("nearest chamber is not unique");
          if (arr.project(f, c) != arg) return "projection differs for chamber " + elem_text(w);
        }
      }
      return std::string();
    }});
    tasks.push_back({"arrangement", "projection_tower_law", name, [s](Rng& rng) -> std::string {
      const auto& arr = s->arrangement();
      const auto& sys = s->system();
      const auto poset = arr.build_faces();
      const auto elems = sys.enumerate(sys.generators());
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < poset.faces.size(); ++i)
        for (std::uint32_t j : poset.above[i]) pairs.emplace_back(i, j);
      const bool exhaustive = pairs.size() * elems.size() <= 200000;
      const std::size_t rounds = exhaustive ? pairs.size() * elems.size() : 20000;
      for (std::size_t k = 0; k < rounds; ++k) {
        const auto& [i, j] = exhaustive ? pairs[k / elems.size()] : pick(rng, pairs);
        const Chamber c{exhaustive ? elems[k % elems.size()] : pick(rng, elems)};
        const Face& f = poset.faces[i];
        const Face& g = poset.faces[j];
        if (arr.project(g, arr.project(f, c)) != arr.project(g, c)) return std::string("G(FC) != GC for F <= G");
      }
      return std::string();
    }});
    tasks.push_back({"arrangement", "face_order_consistent", name, [s](Rng& rng) -> std::string {
      const auto& arr = s->arrangement();
      const auto poset = arr.build_faces();
      const std::size_t n = poset.faces.size();
      auto agree = [&](std::size_t i, std::size_t j) {
        const bool listed = std::binary_search(poset.above[i].begin(), poset.above[i].end(), static_cast<std::uint32_t>(j));
        return listed == (i != j && arr.face_leq(poset.faces[i], poset.faces[j]));
      };
      if (n * n <= 40000) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (!agree(i, j)) return std::string("face poset disagrees with face_leq");
      } else {
        for (int k = 0; k < 20000; ++k) {
          const auto i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
          const auto j = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
          if (!agree(i, j)) return std::string("face poset disagrees with face_leq");
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t j : poset.above[i]) {
          if (j <= i) return std::string("listing is not a linear extension");
          if (!std::includes(poset.above[i].begin(), poset.above[i].end(), poset.above[j].begin(), poset.above[j].end())) {
            return std::string("face order is not transitive");
          }
        }
      }
      return std::string();
    }});
    tasks.push_back({"arrangement", "manifold_is_sphere", name, [s](Rng&) -> std::string {
      const auto betti = space_homology(*s, Space::Manifold).betti();
      std::vector<std::size_t> expected(static_cast<std::size_t>(s->arrangement().chamber_complex().dim()) + 1, 0);
      expected.front() += 1;
      expected.back() += 1;
      return fail_if(betti != expected, "manifold homology is not that of a sphere");
    }});
    tasks.push_back({"arrangement", "walls_wedge_of_spheres", name, [s](Rng&) -> std::string {
      // Reduced homology of the union of walls: |W| - 1 spheres of dimension dim - 1.
      auto betti = space_homology(*s, Space::Walls).betti();
      const auto dim = static_cast<std::size_t>(s->arrangement().chamber_complex().dim());
      const auto order = *s->system().parabolic_order(s->system().generators());
      betti[0] -= 1;
      std::vector<std::size_t> expected(dim, 0);
      expected[dim - 1] = order - 1;
      return fail_if(betti != expected, "unexpected homology of the walls");
    }});
  }
  const Session* affine = ctx.affine.get();
  tasks.push_back({"arrangement", "truncated_poset_refused", "affine-A2", [affine](Rng&) -> std::string {
    const auto poset = affine->arrangement().build_faces(4);
    if (!poset.truncated) return std::string("bounded face poset of an infinite group is not flagged");
    try {
      affine->arrangement().manifold_complex(poset);
    } catch (const Error& e) {
      return fail_if(e.kind() != ErrorKind::TruncatedPoset, "wrong error kind");
    }
    return std::string("homology of a truncated poset was not refused");
  }});
}

void salvetti_tasks(const Context& ctx, std::vector<Task>& tasks) {
  for (const auto& [name, session] : ctx.finite) {
    const Session* s = session.get();
    tasks.push_back({"salvetti", "phi_order_reversing_isomorphism", name, [s](Rng& rng) -> std::string {
      const auto& sal = s->salvetti();
      const auto poset = sal.build_sal();
      const auto& cells = poset.cells;
      std::vector<GeometricCell> geo;
      for (const SalCell& c : cells) {
        geo.push_back(sal.phi_inverse(c));
        if (sal.phi(geo.back()) != c) return std::string("phi does not invert phi_inverse");
      }
      auto agree = [&](std::size_t i, std::size_t j) {
        return sal.geometric_leq(geo[i], geo[j]) == sal.sal_leq(cells[j], cells[i]);
      };
      const std::size_t n = cells.size();
      if (n <= 200) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (!agree(i, j)) return "order mismatch at " + std::to_string(i) + "," + std::to_string(j);
      } else {
        std::uniform_int_distribution<std::size_t> idx(0, n - 1);
        for (int k = 0; k < 5000; ++k) {
          const std::size_t i = idx(rng);
          // Half the samples are drawn from comparable pairs.
          const std::size_t j = (k % 2 == 0 || poset.below[i].empty()) ? idx(rng) : pick(rng, poset.below[i]);
          if (!agree(i, j)) return "order mismatch at " + std::to_string(i) + "," + std::to_string(j);
        }
      }
      return std::string();
    }});
    tasks.push_back({"salvetti", "poset_matches_sal_leq", name, [s](Rng& rng) -> std::string {
      const auto& sal = s->salvetti();
      const auto poset = sal.build_sal();
      const std::size_t n = poset.cells.size();
      auto agree = [&](std::size_t i, std::size_t j) {
        const bool listed = std::binary_search(poset.below[i].begin(), poset.below[i].end(), static_cast<std::uint32_t>(j));
        return listed == (i != j && sal.sal_leq(poset.cells[j], poset.cells[i]));
      };
      if (n <= 400) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (!agree(i, j)) return std::string("cells_below disagrees with sal_leq");
      } else {
        std::uniform_int_distribution<std::size_t> idx(0, n - 1);
        for (int k = 0; k < 20000; ++k) {
          if (!agree(idx(rng), idx(rng))) return std::string("cells_below disagrees with sal_leq");
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t j : poset.below[i]) {
          if (!std::includes(poset.below[i].begin(), poset.below[i].end(), poset.below[j].begin(), poset.below[j].end())) {
            return std::string("Sal order is not transitive");
          }
        }
      }
      return std::string();
    }});
    tasks.push_back({"salvetti", "free_equivariant_action", name, [s](Rng& rng) -> std::string {
      const auto& sal = s->salvetti();
      const auto& sys = s->system();
      const auto poset = sal.build_sal();
      const auto elems = sys.enumerate(sys.generators());
      for (const Elem& w : elems) {
        if (w.is_identity()) continue;
        for (const SalCell& c : poset.cells) {
          if (sal.translate(w, c) == c) return "w.c == c for w = " + elem_text(w);
        }
      }
      for (int k = 0; k < 3000; ++k) {
        const SalCell& a = pick(rng, poset.cells);
        const SalCell& b = pick(rng, poset.cells);
        const Elem& w = pick(rng, elems);
        if (sal.sal_leq(a, b) != sal.sal_leq(sal.translate(w, a), sal.translate(w, b))) {
          return std::string("action does not preserve the order");
        }
      }
      return std::string();
    }});
    tasks.push_back({"salvetti", "euler_and_quotient_counts", name, [s](Rng&) -> std::string {
      const auto& sal = s->salvetti();
      const auto& sys = s->system();
      const auto poset = sal.build_sal();
      const auto order = *sys.parabolic_order(sys.generators());
      long long chi = 0;
      for (const SalCell& c : poset.cells) chi += c.dimension() % 2 == 0 ? 1 : -1;
      const long long expected = (sal.arrangement().chamber_complex().dim() % 2 == 0 ? 1 : -1) * static_cast<long long>(order);
      if (chi != expected) return "chi = " + std::to_string(chi) + ", expected " + std::to_string(expected);
      const auto oc = sal.order_complex(poset);
      const auto q = sal.quotient_complex();
      if (static_cast<std::size_t>(oc.dimension()) + 1 != q.simplices.size()) return std::string("dimension mismatch");
      for (std::size_t d = 0; d < q.simplices.size(); ++d) {
        if (oc.count(static_cast<int>(d)) != order * q.simplices[d].size()) {
          return "orbit count mismatch in dimension " + std::to_string(d);
        }
      }
      return std::string();
    }});
  }
  std::vector<std::pair<std::string, const Session*>> all;
  for (const auto& [name, session] : ctx.finite) all.emplace_back(name, session.get());
  all.emplace_back("affine-A2", ctx.affine.get());
  for (const auto& [name, s] : all) {
    tasks.push_back({"salvetti", "presentation_matches_quotient_h1", name, [s](Rng&) -> std::string {
      const auto& sal = s->salvetti();
      const auto h = homology(chain_complex(sal.quotient_complex().delta));
      const auto p = h1_from_presentation(sal.pi1_presentation());
      if (h.degrees.size() < 2) return std::string("quotient has no 1-cells");
      return fail_if(h.degrees[1].betti != p.betti || h.degrees[1].torsion != p.torsion,
                     "H1 of the quotient differs from the abelianized presentation");
    }});
    tasks.push_back({"salvetti", "two_cell_boundaries_close", name, [s](Rng& rng) -> std::string {
      const auto& sal = s->salvetti();
      const auto& sys = s->system();
      std::vector<Elem> elems;
      if (sys.is_finite()) {
        elems = sys.enumerate(sys.generators());
      } else {
        for (int k = 0; k < 50; ++k) elems.push_back(sys.reduce(random_word(rng, sys.rank(), 10)));
      }
      const auto& m = sys.matrix();
      for (TypeSubset t : sal.arrangement().chamber_complex().acceptable_of_size(2)) {
        const auto st = t.members();
        const int order = m(st[0], st[1]);
        for (const Elem& w : elems) {
          const auto word = sal.two_cell_boundary(t, w);
          if (word.size() != static_cast<std::size_t>(2 * order)) return std::string("boundary has the wrong length");
          Elem at = w;
          for (const EdgeTerm& e : word) {
            const Elem end = sys.multiply(e.start, e.label);
            if (e.exponent == 1) {
              if (e.start != at) return std::string("boundary path is not connected");
              at = end;
            } else {
              if (end != at) return std::string("boundary path is not connected");
              at = e.start;
            }
          }
          if (at != w) return std::string("boundary path is not closed");
        }
      }
      return std::string();
    }});
  }
  tasks.push_back({"salvetti", "dihedral_presentation_is_free", "I2(2..6)", [&ctx](Rng&) -> std::string {
    for (const auto& [name, session] : ctx.finite) {
      if (name.rfind("I2(", 0) == 0 && !session->salvetti().pi1_presentation().relations.empty()) {
        return name + " has relations";
      }
    }
    return std::string();
  }});
}

void homology_tasks(const Context& ctx, std::vector<Task>& tasks) {
  tasks.push_back({"homology", "smith_examples", "-", [](Rng&) -> std::string {
    auto factors = [](std::vector<std::vector<long long>> m) {
      std::vector<long long> out;
      for (const Integer& f : smith_normal_form(m).factors) out.push_back(static_cast<long long>(f));
      return out;
    };
    if (factors({{2, 0}, {0, 3}}) != std::vector<long long>{1, 6}) return std::string("diag(2,3)");
    if (!factors({{0, 0}, {0, 0}}).empty()) return std::string("zero matrix");
    if (factors({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) != std::vector<long long>{1, 1, 1}) return std::string("identity");
    return std::string();
  }});
  tasks.push_back({"homology", "smith_permutation_invariant", "-", [](Rng& rng) -> std::string {
    std::uniform_int_distribution<int> size(1, 8), entry(-6, 6);
    for (int k = 0; k < 60; ++k) {
      const int r = size(rng), c = size(rng);
      std::vector<std::vector<long long>> m(static_cast<std::size_t>(r), std::vector<long long>(static_cast<std::size_t>(c)));
      for (auto& row : m)
        for (auto& v : row) v = entry(rng) / 2;
      auto shuffled = m;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      std::vector<std::size_t> perm(static_cast<std::size_t>(c));
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      for (auto& row : shuffled) {
        auto copy = row;
        for (std::size_t i = 0; i < perm.size(); ++i) row[i] = copy[perm[i]];
      }
      if (smith_normal_form(m).factors != smith_normal_form(shuffled).factors) {
        return std::string("invariant factors changed under permutation");
      }
    }
    return std::string();
  }});
  for (const auto& [name, session] : ctx.finite) {
    const Session* s = session.get();
    const std::string system = name;
    tasks.push_back({"homology", "euler_matches_betti", name, [s](Rng&) -> std::string {
      for (Space space : {Space::Complement, Space::Quotient, Space::Manifold, Space::Walls}) {
        const auto h = space_homology(*s, space);
        long long alt = 0;
        for (std::size_t d = 0; d < h.degrees.size(); ++d) {
          alt += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(h.degrees[d].betti);
        }
        if (alt != h.euler) return "alternating Betti sum differs from chi for " + std::string(to_string(space));
      }
      return std::string();
    }});
    if (name.rfind("I2(", 0) == 0) {
      tasks.push_back({"homology", "dihedral_complement_and_quotient", name, [s](Rng&) -> std::string {
        const int m = s->system().matrix()(0, 1);
        const std::vector<std::size_t> complement{1, static_cast<std::size_t>(2 * m + 1)};
        if (space_homology(*s, Space::Complement).betti() != complement) return std::string("complement is not a wedge of 2m+1 circles");
        return fail_if(space_homology(*s, Space::Quotient).betti() != std::vector<std::size_t>{1, 2},
                       "quotient is not a wedge of two circles");
      }});
    }
  }
}

void cli_tasks(const Context& ctx, std::vector<Task>& tasks) {
  tasks.push_back({"cli", "spec_round_trip", "bundled", [](Rng&) -> std::string {
    for (const auto& b : bundled_systems()) {
      const std::string text = serialize_spec(b.spec);
      if (parse_spec_text(text) != b.spec) return b.name + " does not round-trip";
      if (serialize_spec(parse_spec_text(text)) != text) return b.name + " serialization is not stable";
    }
    return std::string();
  }});
  for (const auto& [name, session] : ctx.finite) {
    const Session* s = session.get();
    tasks.push_back({"cli", "json_output_stable", name, [s](Rng&) -> std::string {
      if (cmd_validate(*s, Format::Json) != cmd_validate(*s, Format::Json)) return std::string("validate");
      const Session fresh(s->spec());
      if (cmd_homology(*s, Space::Quotient, Format::Json) != cmd_homology(fresh, Space::Quotient, Format::Json)) {
        return std::string("homology");
      }
      return fail_if(cmd_pi1(*s, Format::Json) != cmd_pi1(fresh, Format::Json), "pi1");
    }});
  }
  tasks.push_back({"cli", "diagnostics", "-", [](Rng&) -> std::string {
    auto spec = dihedral_spec(3);
    spec.coxeter_matrix[0][1] = spec.coxeter_matrix[1][0] = 1;
    try {
      Session bad(spec);
      return std::string("bond order 1 accepted");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BadBondOrder || e.path() != "coxeter_matrix[0][1]" ||
          exit_code(e.error_class()) != 1) {
        return std::string("bond order 1 reported as ") + e.what();
      }
    }
    try {
      parse_spec_text(R"({"generators":["s","t"],"coxeter_matrix":[[1,3],[3,1]],"chamber":{"acceptable":[["u"]]}})");
      return std::string("unknown generator accepted");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnknownGenerator) return std::string("unknown generator reported as ") + e.what();
    }
    try {
      cmd_euler(Session(simplex_spec(matrices::affine_a2())), Format::Text);
      return std::string("euler of an infinite group succeeded");
    } catch (const Error& e) {
      if (exit_code(e.error_class()) != 2) return std::string("infinite euler reported as ") + e.what();
    }
    return std::string();
  }});
}

void run_tasks(std::vector<Task>& tasks, std::uint64_t seed, unsigned threads, CheckReport& report) {
  report.outcomes.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      CheckOutcome& o = report.outcomes[i];
      o.suite = t.suite;
      o.name = t.name;
      o.system = t.system;
      Rng rng(seed ^ fnv1a(t.suite + "/" + t.name + "/" + t.system));
      try {
        o.detail = t.body(rng);
      } catch (const std::exception& e) {
        o.detail = std::string("exception: ") + e.what();
      }
      o.passed = o.detail.empty();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace

Suite suite_from_string(std::string_view name) {
  if (name == "coxeter") return Suite::Coxeter;
  if (name == "chamber") return Suite::Chamber;
  if (name == "arrangement") return Suite::Arrangement;
  if (name == "salvetti") return Suite::Salvetti;
  if (name == "homology") return Suite::Homology;
  if (name == "cli") return Suite::Cli;
  if (name == "all") return Suite::All;
  throw Error(ErrorKind::ParseError, "cli", "unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::Coxeter: return "coxeter";
    case Suite::Chamber: return "chamber";
    case Suite::Arrangement: return "arrangement";
    case Suite::Salvetti: return "salvetti";
    case Suite::Homology: return "homology";
    case Suite::Cli: return "cli";
    case Suite::All: return "all";
  }
  return "";
}

bool CheckReport::passed() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return !o.passed; }));
}

std::vector<BundledSystem> bundled_systems() {
  std::vector<BundledSystem> out;
  for (int m = 2; m <= 6; ++m) out.push_back({"I2(" + std::to_string(m) + ")", dihedral_spec(m)});
  out.push_back({"A3", simplex_spec(matrices::type_a(3))});
  out.push_back({"B3", simplex_spec(matrices::type_b(3))});
  out.push_back({"H3", simplex_spec(matrices::type_h3())});
  out.push_back({"affine-A2", simplex_spec(matrices::affine_a2())});
  ArrangementSpec one;
  one.generators = {"s"};
  one.coxeter_matrix = {{1}};
  one.acceptable = {{}, {"s"}};
  out.push_back({"A1", one});
  return out;
}

CheckReport run_checks(Suite suite, std::uint64_t seed, unsigned threads) {
  const Context ctx = make_context();
  std::vector<Task> tasks;
  auto wanted = [suite](Suite s) { return suite == Suite::All || suite == s; };
  if (wanted(Suite::Coxeter)) coxeter_tasks(ctx, tasks);
  if (wanted(Suite::Chamber)) chamber_tasks(ctx, tasks);
  if (wanted(Suite::Arrangement)) arrangement_tasks(ctx, tasks);
  if (wanted(Suite::Salvetti)) salvetti_tasks(ctx, tasks);
  if (wanted(Suite::Homology)) homology_tasks(ctx, tasks);
  if (wanted(Suite::Cli)) cli_tasks(ctx, tasks);
  CheckReport report;
  report.seed = seed;
  run_tasks(tasks, seed, threads, report);
  return report;
}

std::string format_report(const CheckReport& report, Format format) {
  if (format == Format::Dot) {
    throw Error(ErrorKind::PreconditionViolated, "cli", "--format dot is not available for 'check'");
  }
  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["seed"] = report.seed;
    j["passed"] = report.passed();
    j["failures"] = report.failures();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& o : report.outcomes) {
      checks.push_back({{"suite", o.suite}, {"name", o.name}, {"system", o.system}, {"passed", o.passed}, {"detail", o.detail}});
    }
    j["checks"] = checks;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& o : report.outcomes) {
    out << (o.passed ? "PASS " : "FAIL ") << o.suite << '.' << o.name << " [" << o.system << ']';
    if (!o.passed) out << ": " << o.detail;
    out << '\n';
  }
  out << report.outcomes.size() - report.failures() << '/' << report.outcomes.size() << " checks passed (seed "
      << report.seed << ")\n";
  return out.str();
}

unsigned threads_from_env() {
  if (const char* env = std::getenv("SALV_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 256UL));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace salv
