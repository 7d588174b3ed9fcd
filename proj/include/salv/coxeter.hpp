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

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace salv {

/// Generator index, 0-based.
using Gen = std::uint8_t;

inline constexpr int kMaxRank = 64;

/// Bond order encoding of m = infinity.
inline constexpr int kInfinity = 0;

/// A subset of the generating set, stored as a 64-bit mask.
class TypeSubset {
 public:
  constexpr TypeSubset() = default;
  constexpr explicit TypeSubset(std::uint64_t bits) : bits_(bits) {}
  TypeSubset(std::initializer_list<Gen> members);

  static TypeSubset all(int rank);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Gen s) const { return (bits_ >> s) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(TypeSubset other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  TypeSubset with(Gen s) const { return TypeSubset(bits_ | (std::uint64_t{1} << s)); }
  TypeSubset without(Gen s) const { return TypeSubset(bits_ & ~(std::uint64_t{1} << s)); }
  TypeSubset operator|(TypeSubset o) const { return TypeSubset(bits_ | o.bits_); }
  TypeSubset operator&(TypeSubset o) const { return TypeSubset(bits_ & o.bits_); }

  std::vector<Gen> members() const;

  friend constexpr bool operator==(TypeSubset, TypeSubset) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Display order for subsets: by cardinality, then by sorted member list.
bool canonical_less(TypeSubset a, TypeSubset b);

/// A group element in ShortLex canonical form. Only words produced by a
/// CoxeterSystem are guaranteed canonical; equality of canonical Elems is
/// equality in the group.
struct Elem {
  std::vector<Gen> word;

  std::size_t length() const { return word.size(); }
  bool is_identity() const { return word.empty(); }

  friend bool operator==(const Elem&, const Elem&) = default;
  /// ShortLex: length first, then lexicographic.
  friend std::strong_ordering operator<=>(const Elem& a, const Elem& b);
};

/// A conjugate of a generator; identified with the wall it fixes.
struct Reflection {
  Elem elem;

  friend bool operator==(const Reflection&, const Reflection&) = default;
  friend std::strong_ordering operator<=>(const Reflection& a, const Reflection& b) {
    return a.elem <=> b.elem;
  }
};

/// Symmetric table of bond orders. Entries: 1 on the diagonal, >= 2 or
/// kInfinity (0) off the diagonal. Validation happens in CoxeterSystem.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  explicit CoxeterMatrix(std::vector<std::vector<int>> rows);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * rank_ + j)]; }
  bool is_infinite(int i, int j) const { return (*this)(i, j) == kInfinity; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  int rank_ = 0;
  std::vector<int> entries_;
};

/// Common matrices used by presets, tests and the check suites.
namespace matrices {
CoxeterMatrix dihedral(int m);  // I2(m); m == kInfinity gives the infinite dihedral group
CoxeterMatrix type_a(int n);
CoxeterMatrix type_b(int n);
CoxeterMatrix type_h3();
CoxeterMatrix affine_a2();
CoxeterMatrix rank_one();
}  // namespace matrices

/// One connected component of the Coxeter graph restricted to a subset.
struct IrreducibleComponent {
  TypeSubset members;
  std::string name;  // "A3", "I2(5)", ... or "infinite"
  std::optional<std::uint64_t> order;  // nullopt: infinite
};

enum class Side { Left, Right };

/// A Coxeter system with its word engine. Copies share the reduction memo;
/// the memo is synchronized, so a system may be used from several threads.
class CoxeterSystem {
 public:
  /// Validates the matrix. Throws MatrixAsymmetric / BadDiagonal /
  /// BadBondOrder naming the offending indices.
  explicit CoxeterSystem(CoxeterMatrix matrix, bool memoize = true);

  const CoxeterMatrix& matrix() const;
  int rank() const;
  TypeSubset generators() const { return TypeSubset::all(rank()); }
  bool memoized() const;

  Elem identity() const { return {}; }
  Elem generator(Gen s) const;

  Elem reduce(std::span<const Gen> word) const;
  Elem reduce(std::initializer_list<Gen> word) const {
    return reduce(std::span<const Gen>(word.begin(), word.size()));
  }
  Elem multiply(const Elem& a, const Elem& b) const;
  Elem multiply(const Elem& a, Gen s) const;
  Elem left_multiply(Gen s, const Elem& a) const;
  Elem inverse(const Elem& a) const;
  std::size_t length(const Elem& a) const { return a.length(); }

  TypeSubset descents(const Elem& a, Side side) const;

  std::vector<IrreducibleComponent> components(TypeSubset t) const;
  bool is_spherical(TypeSubset t) const;
  /// |W_T|, or nullopt when W_T is infinite.
  std::optional<std::uint64_t> parabolic_order(TypeSubset t) const;
  bool is_finite() const { return is_spherical(generators()); }

  /// Elements of W_T, ShortLex sorted, optionally bounded by length.
  std::vector<Elem> enumerate(TypeSubset t, std::optional<std::size_t> max_length = {}) const;

  bool is_coset_minimal(const Elem& w, TypeSubset t) const;
  Elem coset_min(const Elem& w, TypeSubset t) const;
  /// w ∈ W_T.
  bool in_parabolic(const Elem& w, TypeSubset t) const;

  std::vector<Reflection> reflections(std::optional<std::size_t> max_length = {}) const;
  /// Reflections of the finite parabolic W_T.
  std::vector<Reflection> parabolic_reflections(TypeSubset t) const;
  /// N(w) = {r : l(r w) < l(w)}, ShortLex sorted.
  std::vector<Reflection> inversion_set(const Elem& w) const;
  Elem conjugate(const Elem& x, const Elem& g) const;  // g x g^-1

 private:
  struct State;
  std::shared_ptr<State> state_;

  std::string right_step(const std::string& word, Gen s) const;
};

}  // namespace salv
