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

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "salv/homology.hpp"

using namespace testing;
using salv::Chamber;
using salv::ErrorKind;
using salv::GeometricCell;
using salv::SalCell;
using salv::Salvetti;

namespace {

Salvetti sal_interval(int m) { return Salvetti(interval(m)); }
Salvetti sal_simplex(const CoxeterMatrix& m) { return Salvetti(simplex(m)); }

long long sign_power(int d) { return d % 2 == 0 ? 1 : -1; }

// Geometric order computed from chamber sets and root signs only.
struct GeometricOracle {
  oracle::Geometric g;
  oracle::Roots roots;

  explicit GeometricOracle(const salv::CoxeterSystem& sys)
      : g(sys.matrix().rows()), roots(oracle::positive_roots(g, oracle::enumerate(g, oracle::all_bits(sys.rank()), 64))) {}

  bool leq(const GeometricCell& p, const GeometricCell& q) const {
    const auto fp = oracle::coset(g, word_of(p.face.rep), p.face.type.bits());
    const auto fq = oracle::coset(g, word_of(q.face.rep), q.face.type.bits());
    if (!std::includes(fp.begin(), fp.end(), fq.begin(), fq.end())) return false;
    const auto sep = oracle::separating(g, roots, word_of(p.chamber.elem), word_of(q.chamber.elem));
    for (const auto& w : oracle::walls_through(g, roots, word_of(q.face.rep), q.face.type.bits())) {
      if (sep.count(w)) return false;
    }
    return true;
  }
};

}  // namespace

TEST_CASE("cell counts") {
  const auto i2 = sal_interval(3).build_sal();
  CHECK(i2.cells.size() == 18);
  const auto a3 = sal_simplex(salv::matrices::type_a(3)).build_sal();
  CHECK(a3.cells.size() == 168);
  std::size_t vertices = 0;
  for (const auto& c : a3.cells) vertices += c.dimension() == 0;
  CHECK(vertices == 24);
  CHECK(std::is_sorted(a3.cells.begin(), a3.cells.end(), salv::sal_cell_less));
}

TEST_CASE("phi is an order-reversing isomorphism onto the group model") {
  const std::vector<CoxeterMatrix> systems{salv::matrices::dihedral(3), salv::matrices::dihedral(4),
                                           salv::matrices::type_a(3)};
  for (const auto& m : systems) {
    const Salvetti sal = m.rank() == 2 ? sal_interval(m(0, 1)) : sal_simplex(m);
    const auto cells = sal.build_sal().cells;
    std::vector<GeometricCell> geo;
    std::set<std::pair<salv::Face, Chamber>, bool (*)(const std::pair<salv::Face, Chamber>&, const std::pair<salv::Face, Chamber>&)>
        distinct([](const auto& a, const auto& b) {
          if (!(a.first == b.first)) return salv::face_order_less(a.first, b.first);
          return a.second < b.second;
        });
    for (const SalCell& c : cells) {
      geo.push_back(sal.phi_inverse(c));
      CHECK(sal.phi(geo.back()) == c);
      CHECK(sal.arrangement().face_below_chamber(geo.back().face, geo.back().chamber));
      distinct.insert({geo.back().face, geo.back().chamber});
    }
    CHECK(distinct.size() == cells.size());
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = 0; j < cells.size(); ++j, ++pairs) {
        CHECK(sal.geometric_leq(geo[i], geo[j]) == sal.sal_leq(cells[j], cells[i]));
      }
    }
    CHECK(pairs == cells.size() * cells.size());
  }
}

TEST_CASE("the geometric order matches an oracle built from roots") {
  for (const Salvetti& sal : {sal_interval(3), sal_interval(5), sal_simplex(salv::matrices::type_a(3))}) {
    const GeometricOracle o(sal.system());
    const auto cells = sal.build_sal().cells;
    std::vector<GeometricCell> geo;
    for (const SalCell& c : cells) geo.push_back(sal.phi_inverse(c));
    for (std::size_t i = 0; i < geo.size(); ++i) {
      for (std::size_t j = 0; j < geo.size(); ++j) {
        // Only pairs with comparable faces carry information; the rest are false on both sides.
        CHECK(sal.geometric_leq(geo[i], geo[j]) == o.leq(geo[i], geo[j]));
      }
    }
  }
}

TEST_CASE("the group-side relation is a partial order and cells_below is its down-set") {
  for (const Salvetti& sal : {sal_interval(3), sal_interval(6), sal_simplex(salv::matrices::type_a(3))}) {
    const auto poset = sal.build_sal();
    const auto& cells = poset.cells;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      CHECK(sal.sal_leq(cells[i], cells[i]));
      std::vector<SalCell> expected;
      for (std::size_t j = 0; j < cells.size(); ++j) {
        if (j != i && sal.sal_leq(cells[j], cells[i])) {
          expected.push_back(cells[j]);
          CHECK_FALSE(sal.sal_leq(cells[i], cells[j]));
        }
      }
      CHECK(sal.cells_below(cells[i]) == expected);
      for (std::uint32_t j : poset.below[i]) {
        for (std::uint32_t k : poset.below[j]) CHECK(sal.sal_leq(cells[k], cells[i]));
      }
    }
  }
}

TEST_CASE("the group acts freely and preserves the order") {
  std::mt19937_64 rng(41);
  for (const Salvetti& sal : {sal_interval(4), sal_simplex(salv::matrices::type_a(3)), sal_simplex(salv::matrices::type_h3())}) {
    const auto& sys = sal.system();
    const auto elems = sys.enumerate(sys.generators());
    const auto cells = sal.build_sal().cells;
    for (const Elem& w : elems) {
      if (w.is_identity()) continue;
      for (const SalCell& c : cells) CHECK(sal.translate(w, c) != c);
    }
    std::uniform_int_distribution<std::size_t> ci(0, cells.size() - 1), wi(0, elems.size() - 1);
    for (int k = 0; k < 2000; ++k) {
      const SalCell& a = cells[ci(rng)];
      const auto below = sal.cells_below(a);
      const SalCell& b = below.empty() ? cells[ci(rng)] : below[std::uniform_int_distribution<std::size_t>(0, below.size() - 1)(rng)];
      const Elem& w = elems[wi(rng)];
      CHECK(sal.sal_leq(b, a) == sal.sal_leq(sal.translate(w, b), sal.translate(w, a)));
    }
  }
}

TEST_CASE("malformed geometric pairs are rejected") {
  const Salvetti sal = sal_interval(3);
  const auto& arr = sal.arrangement();
  const salv::Face vertex = arr.face(Elem{}, TypeSubset{0});
  const Chamber far{sal.system().reduce({1, 0})};
  CHECK(error_kind([&] { sal.phi({vertex, far}); }) == ErrorKind::MalformedPair);
  CHECK(error_kind([&] { sal.geometric_leq({vertex, far}, {vertex, Chamber{}}); }) == ErrorKind::MalformedPair);
}

TEST_CASE("Euler characteristic of the complement is (-1)^dim |W|") {
  auto chi = [](const Salvetti& sal) {
    long long out = 0;
    for (const auto& c : sal.build_sal().cells) out += sign_power(c.dimension());
    return out;
  };
  for (int m = 2; m <= 6; ++m) CHECK(chi(sal_interval(m)) == -2 * m);
  CHECK(chi(sal_simplex(salv::matrices::type_a(3))) == 24);
  CHECK(chi(sal_simplex(salv::matrices::type_b(3))) == 48);
  CHECK(chi(sal_simplex(salv::matrices::type_h3())) == 120);
  CHECK(chi(sal_simplex(salv::matrices::type_a(4))) == -120);
}

TEST_CASE("complement homology of the dihedral family") {
  for (int m = 2; m <= 6; ++m) {
    CAPTURE(m);
    const Salvetti sal = sal_interval(m);
    const auto oc = sal.order_complex(sal.build_sal());
    const auto h = salv::homology(salv::chain_complex(oc));
    CHECK(h.betti() == std::vector<std::size_t>{1, static_cast<std::size_t>(2 * m + 1)});
    CHECK(h.torsion_free());
    CHECK(oracle::betti_mod_p(oc.simplices) == h.betti());
  }
  const Salvetti sal = sal_interval(3);
  const auto oc = sal.order_complex(sal.build_sal());
  CHECK(oc.count(0) == 18);
  CHECK(oc.count(1) == 24);
}

TEST_CASE("complement homology of sphere arrangements") {
  const Salvetti sal = sal_simplex(salv::matrices::type_a(3));
  const auto oc = sal.order_complex(sal.build_sal());
  const auto h = salv::homology(salv::chain_complex(oc));
  CHECK(h.euler == 24);
  CHECK(h.torsion_free());
  CHECK(oracle::betti_mod_p(oc.simplices) == h.betti());
  CHECK(h.betti() == std::vector<std::size_t>{1, 6, 29});
}

TEST_CASE("the quotient complex") {
  const Salvetti sal = sal_interval(3);
  const auto q = sal.quotient_complex();
  REQUIRE(q.simplices.size() == 2);
  CHECK(q.simplices[0].size() == 3);
  CHECK(q.simplices[1].size() == 4);
  const auto h = salv::homology(salv::chain_complex(q.delta));
  CHECK(h.euler == -1);
  CHECK(h.betti() == std::vector<std::size_t>{1, 2});
  // Every chain is normalized so that its top cell sits at the identity.
  for (const auto& level : q.simplices)
    for (const auto& chain : level) CHECK(chain.back().elem.is_identity());
}

TEST_CASE("quotient cells are orbits of order-complex simplices") {
  for (const Salvetti& sal : {sal_interval(2), sal_interval(5), sal_simplex(salv::matrices::type_a(3)),
                              sal_simplex(salv::matrices::type_b(3))}) {
    const auto order = *sal.system().parabolic_order(sal.system().generators());
    const auto oc = sal.order_complex(sal.build_sal());
    const auto q = sal.quotient_complex();
    REQUIRE(q.simplices.size() == static_cast<std::size_t>(oc.dimension() + 1));
    for (std::size_t d = 0; d < q.simplices.size(); ++d) CHECK(oc.count(static_cast<int>(d)) == order * q.simplices[d].size());
  }
}

TEST_CASE("dihedral presentations have no relations") {
  for (int m = 2; m <= 8; ++m) {
    const auto p = sal_interval(m).pi1_presentation();
    CHECK(p.generator_count == 2);
    CHECK(p.relations.empty());
    const auto h1 = salv::h1_from_presentation(p);
    CHECK(h1.betti == 2);
  }
}

TEST_CASE("braid relations for the sphere arrangements") {
  const auto p = sal_simplex(salv::matrices::type_a(3)).pi1_presentation();
  CHECK(p.to_text() == "e1 e2 e1 = e2 e1 e2\ne1 e3 = e3 e1\ne2 e3 e2 = e3 e2 e3\n");
  const auto b3 = sal_simplex(salv::matrices::type_b(3)).pi1_presentation();
  REQUIRE(b3.relations.size() == 3);
  CHECK(b3.relations[0].left == std::vector<Gen>{0, 1, 0, 1});
  CHECK(b3.relations[0].right == std::vector<Gen>{1, 0, 1, 0});
  CHECK(salv::h1_from_presentation(b3).betti == 2);
  CHECK(salv::h1_from_presentation(sal_simplex(salv::matrices::type_h3()).pi1_presentation()).betti == 1);
}

TEST_CASE("presentation and quotient agree on the first homology") {
  for (const Salvetti& sal : {sal_interval(3), sal_interval(4), sal_simplex(salv::matrices::type_a(3)),
                              sal_simplex(salv::matrices::type_b(3)), sal_simplex(salv::matrices::type_h3()),
                              sal_simplex(salv::matrices::affine_a2())}) {
    const auto h = salv::homology(salv::chain_complex(sal.quotient_complex().delta));
    const auto p = salv::h1_from_presentation(sal.pi1_presentation());
    REQUIRE(h.degrees.size() >= 2);
    CHECK(h.degrees[1].betti == p.betti);
    CHECK(h.degrees[1].torsion == p.torsion);
  }
}

TEST_CASE("the affine case") {
  const Salvetti sal = sal_simplex(salv::matrices::affine_a2());
  CHECK(error_kind([&] { sal.build_sal(); }) == ErrorKind::WouldNotTerminate);
  const auto q = sal.quotient_complex();
  const auto h = salv::homology(salv::chain_complex(q.delta));
  CHECK(h.betti() == std::vector<std::size_t>{1, 1, 1});
  CHECK(h.euler == 1);
  const auto p = sal.pi1_presentation();
  CHECK(p.to_text() == "e1 e2 e1 = e2 e1 e2\ne1 e3 e1 = e3 e1 e3\ne2 e3 e2 = e3 e2 e3\n");
}

TEST_CASE("two-cell boundaries walk around the 2m-gon") {
  std::mt19937_64 rng(8);
  for (const Salvetti& sal : {sal_interval(4), sal_simplex(salv::matrices::type_a(3)), sal_simplex(salv::matrices::type_b(3)),
                              sal_simplex(salv::matrices::affine_a2())}) {
    const auto& sys = sal.system();
    const oracle::Geometric g(sys.matrix().rows());
    std::vector<Elem> elems;
    if (sys.is_finite()) {
      elems = sys.enumerate(sys.generators());
    } else {
      for (int k = 0; k < 40; ++k) elems.push_back(sys.reduce(random_word(rng, sys.rank(), 12)));
    }
    for (TypeSubset t : sal.arrangement().chamber_complex().acceptable_of_size(2)) {
      const auto st = t.members();
      const Gen s = st[0], u = st[1];
      const int m = sys.matrix()(s, u);
      for (const Elem& w : elems) {
        const auto word = sal.two_cell_boundary(t, w);
        REQUIRE(word.size() == static_cast<std::size_t>(2 * m));
        // Positive half: w, w s, w s t, ...; negative half: the t-first path read backwards.
        auto pos = word_of(w);
        for (int k = 0; k < m; ++k) {
          const Gen letter = k % 2 == 0 ? s : u;
          CHECK(word[static_cast<std::size_t>(k)].label == letter);
          CHECK(word[static_cast<std::size_t>(k)].exponent == 1);
          CHECK(g.key_of(word_of(word[static_cast<std::size_t>(k)].start)) == g.key_of(pos));
          pos.push_back(letter);
        }
        std::vector<oracle::Word> neg_starts;
        auto neg = word_of(w);
        for (int k = 0; k < m; ++k) {
          neg_starts.push_back(neg);
          neg.push_back(k % 2 == 0 ? u : s);
        }
        CHECK(g.key_of(pos) == g.key_of(neg));
        for (int k = m - 1, at = m; k >= 0; --k, ++at) {
          const auto& term = word[static_cast<std::size_t>(at)];
          CHECK(term.label == (k % 2 == 0 ? u : s));
          CHECK(term.exponent == -1);
          CHECK(g.key_of(word_of(term.start)) == g.key_of(neg_starts[static_cast<std::size_t>(k)]));
        }
        // In the orbit space the word becomes the braid relator.
        const auto image = salv::quotient_image(word);
        for (int k = 0; k < m; ++k) CHECK(image[static_cast<std::size_t>(k)] == std::pair<Gen, int>{k % 2 == 0 ? s : u, 1});
      }
    }
  }
  const Salvetti sal = sal_interval(3);
  CHECK(error_kind([&] { sal.two_cell_boundary(TypeSubset{0, 1}, Elem{}); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("vertex links in the quotient") {
  // Each 1-cell ({s}, 1) of Sal has two vertices, so the quotient has 1 + n vertices
  // and 2n edges in rank n with the interval or simplex chamber's singletons.
  const auto q = sal_interval(5).quotient_complex();
  CHECK(q.delta.count(0) == 3);
  CHECK(q.delta.count(1) == 4);
  for (const auto& faces : q.delta.faces[1]) CHECK(faces.size() == 2);
}
