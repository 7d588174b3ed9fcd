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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "salv/arrangement.hpp"
#include "salv/complex.hpp"
#include "salv/homology.hpp"

namespace salv {

/// A cell (type, element) of the Salvetti complex; its dimension is |type|.
struct SalCell {
  TypeSubset type;
  Elem elem;

  int dimension() const { return type.size(); }
  friend bool operator==(const SalCell&, const SalCell&) = default;
};

/// Listing order: by dimension, then type, then element.
bool sal_cell_less(const SalCell& a, const SalCell& b);

/// A pair (face, chamber above it): the geometric description of a cell.
struct GeometricCell {
  Face face;
  Chamber chamber;

  friend bool operator==(const GeometricCell&, const GeometricCell&) = default;
};

struct SalPoset {
  std::vector<SalCell> cells;                     // sorted by sal_cell_less
  std::vector<std::vector<std::uint32_t>> below;  // strictly below, by index
  std::vector<std::vector<std::uint32_t>> above;  // strictly above, by index

  std::optional<std::size_t> index_of(const SalCell& c) const;
};

/// A chain (c0 ≺ c1 ≺ ... ≺ cd) of Salvetti cells.
using SalChain = std::vector<SalCell>;

/// Orbit Δ-complex: chains normalized so the top cell sits at the identity.
struct QuotientComplex {
  std::vector<std::vector<SalChain>> simplices;  // simplices[d]
  DeltaComplex delta;                            // ordered face maps
};

struct Relation {
  std::vector<Gen> left;
  std::vector<Gen> right;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Positive group presentation on generators e_1..e_n.
struct Presentation {
  int generator_count = 0;
  std::vector<Relation> relations;

  std::string symbol(Gen s) const { return "e" + std::to_string(s + 1); }
  /// One relation per line: "e1 e2 e1 = e2 e1 e2".
  std::string to_text() const;
};

/// One oriented edge e(label, start) of the Salvetti complex, raised to ±1.
struct EdgeTerm {
  Gen label;
  Elem start;
  int exponent;

  friend bool operator==(const EdgeTerm&, const EdgeTerm&) = default;
};

class Salvetti {
 public:
  explicit Salvetti(Arrangement arrangement) : arrangement_(std::move(arrangement)) {}

  const Arrangement& arrangement() const { return arrangement_; }
  const CoxeterSystem& system() const { return arrangement_.system(); }

  /// (T,v) ⪯ (U,w) iff T ⊆ U, w⁻¹v ∈ W_U and w⁻¹v is (∅,T)-minimal.
  bool sal_leq(const SalCell& a, const SalCell& b) const;
  /// (F,C) ⪯ (G,D) iff F ≤ G and no wall through G separates C from D.
  bool geometric_leq(const GeometricCell& p, const GeometricCell& q) const;
  SalCell phi(const GeometricCell& p) const;
  GeometricCell phi_inverse(const SalCell& c) const;
  SalCell translate(const Elem& u, const SalCell& c) const;

  /// Cells strictly below c, sorted.
  std::vector<SalCell> cells_below(const SalCell& c) const;

  /// All cells acceptable × W. Refuses infinite W with WouldNotTerminate.
  SalPoset build_sal() const;
  SimplicialComplex order_complex(const SalPoset& poset) const;
  QuotientComplex quotient_complex() const;

  Presentation pi1_presentation() const;
  /// Boundary word of the 2-cell (T, w), |T| = 2.
  std::vector<EdgeTerm> two_cell_boundary(TypeSubset t, const Elem& w) const;

 private:
  void check_pair(const GeometricCell& p) const;

  Arrangement arrangement_;
};

/// Image of a boundary word in the orbit complex: (generator, ±1) letters.
std::vector<std::pair<Gen, int>> quotient_image(const std::vector<EdgeTerm>& word);

/// Abelianization of a presentation: Betti number and torsion of H₁.
DegreeHomology h1_from_presentation(const Presentation& p);

}  // namespace salv
