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

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "salv/chamber.hpp"
#include "salv/complex.hpp"
#include "salv/coxeter.hpp"

namespace salv {

/// A face of the arrangement: the parabolic coset rep·W_type, keyed by its
/// minimal representative. Lower-dimensional faces carry larger types.
struct Face {
  Elem rep;
  TypeSubset type;

  friend bool operator==(const Face&, const Face&) = default;
};

/// Face order used for listings: larger types first, then type, then rep.
bool face_order_less(const Face& a, const Face& b);

struct Chamber {
  Elem elem;

  friend bool operator==(const Chamber&, const Chamber&) = default;
  friend std::strong_ordering operator<=>(const Chamber& a, const Chamber& b) { return a.elem <=> b.elem; }
};

/// The face poset, listed along a linear extension of the face order.
struct FacePoset {
  std::vector<Face> faces;
  bool truncated = false;
  /// above[i]: indices of faces strictly above faces[i] (containing it in
  /// their closure).
  std::vector<std::vector<std::uint32_t>> above;

  std::optional<std::size_t> index_of(const Face& f) const;
};

/// Combinatorial model of the reflection arrangement generated by the
/// chamber's Coxeter equipment.
class Arrangement {
 public:
  explicit Arrangement(ChamberComplex chamber);

  const ChamberComplex& chamber_complex() const { return chamber_; }
  const CoxeterSystem& system() const { return chamber_.system(); }

  /// The face w·W_T; throws PreconditionViolated unless T is acceptable.
  Face face(const Elem& w, TypeSubset t) const;
  Face chamber_face(const Chamber& c) const { return {c.elem, TypeSubset{}}; }

  /// F ≤ G: F lies in the closure of G.
  bool face_leq(const Face& f, const Face& g) const;
  bool face_below_chamber(const Face& f, const Chamber& c) const;

  FacePoset build_faces(std::optional<std::size_t> max_length = {}) const;

  /// Chambers whose closure contains f, ShortLex sorted.
  std::vector<Chamber> chambers_above(const Face& f) const;
  /// Faces strictly above f.
  std::vector<Face> faces_above(const Face& f) const;

  std::vector<Reflection> separating(const Chamber& c, const Chamber& d) const;
  bool separates(const Reflection& r, const Chamber& c, const Chamber& d) const;
  std::size_t distance(const Chamber& c, const Chamber& d) const;
  /// F∘C: the chamber above f nearest to c.
  Chamber project(const Face& f, const Chamber& c) const;
  /// Walls containing g.
  std::vector<Reflection> walls_through(const Face& g) const;
  /// C_F ⊆ D_G: no wall through g separates c from d. Requires f ≤ g.
  bool local_chamber_leq(const Face& f, const Chamber& c, const Face& g, const Chamber& d) const;

  /// Order complex of the face poset (a subdivision of the manifold).
  SimplicialComplex manifold_complex(const FacePoset& poset) const;
  /// Order complex of the faces of nonempty type (the union of the walls).
  SimplicialComplex walls_subcomplex(const FacePoset& poset) const;

 /// Elements of W_T for acceptable T, ShortLex sorted.
  const std::vector<Elem>& parabolic_elements(TypeSubset t) const;

 private:

  ChamberComplex chamber_;
  std::map<std::uint64_t, std::vector<Elem>> parabolic_cache_;
  std::map<std::uint64_t, std::vector<Reflection>> reflection_cache_;
};

}  // namespace salv
