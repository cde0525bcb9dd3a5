#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "su3cd/errors.hpp"
#include "su3cd/monomial.hpp"

namespace su3cd {

inline constexpr std::uint64_t kDefaultClosureCap = 1'000'000;
inline constexpr std::uint64_t kDefaultTableCap = 4096;
inline constexpr std::uint64_t kDefaultIsoCap = 1000;

/// Hashable canonical key of a group element at a fixed shared modulus.
struct ElemKey {
  std::uint8_t perm = 0;
  std::array<std::uint32_t, 3> phase{};
  friend bool operator==(const ElemKey&, const ElemKey&) = default;
  friend auto operator<=>(const ElemKey&, const ElemKey&) = default;
};

struct ElemKeyHash {
  std::size_t operator()(const ElemKey& k) const {
    std::uint64_t h = k.perm;
    for (auto p : k.phase) h = (h << 32 | h >> 32) ^ (p + 0x9e3779b97f4a7c15ull + (h << 6));
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebull;
    h ^= h >> 31;
    return std::size_t(h);
  }
};

/// A fully enumerated finite group of monomial matrices sharing one modulus.
/// Immutable once built; elements are kept in a deterministic sorted order.
class FiniteMatrixGroup {
 public:
  std::uint64_t order() const { return elements_.size(); }
  std::uint32_t modulus() const { return modulus_; }
  const std::vector<MonomialMatrix>& elements() const { return elements_; }
  const std::vector<MonomialMatrix>& generators() const { return generators_; }

  bool contains(const MonomialMatrix& m) const { return index_of(m).has_value(); }
  std::optional<std::uint32_t> index_of(const MonomialMatrix& m) const;

  /// True iff both groups consist of exactly the same complex matrices.
  bool same_element_set(const FiniteMatrixGroup& other) const;

  bool is_abelian() const;

 private:
  FiniteMatrixGroup(std::vector<MonomialMatrix> elements,
                    std::vector<MonomialMatrix> generators, std::uint32_t modulus);

  friend FiniteMatrixGroup closure(std::vector<MonomialMatrix> generators,
                                   std::uint64_t cap);
  friend FiniteMatrixGroup diagonal_subgroup(const FiniteMatrixGroup& g);
  friend FiniteMatrixGroup conjugated(const FiniteMatrixGroup& g, const MonomialMatrix& x);

  std::vector<MonomialMatrix> elements_;
  std::vector<MonomialMatrix> generators_;
  std::uint32_t modulus_ = 1;
  std::unordered_map<ElemKey, std::uint32_t, ElemKeyHash> index_;
};

/// Breadth-first product closure of the generators. Throws CapExceededError
/// when the element count grows past cap.
FiniteMatrixGroup closure(std::vector<MonomialMatrix> generators,
                          std::uint64_t cap = kDefaultClosureCap);

/// Subgroup of all diagonal elements of g.
FiniteMatrixGroup diagonal_subgroup(const FiniteMatrixGroup& g);

/// The group {x m x^-1 : m in g}.
FiniteMatrixGroup conjugated(const FiniteMatrixGroup& g, const MonomialMatrix& x);

/// Small generating subset found greedily over the element list.
std::vector<MonomialMatrix> small_generating_set(const FiniteMatrixGroup& g);

/// Abstract multiplication table of a finite group; element identity is the
/// index of the neutral element.
struct GroupTable {
  std::uint32_t size = 0;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> product;  // row-major size*size
  std::vector<std::uint32_t> inverse;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return product[std::size_t(a) * size + b];
  }
};

GroupTable group_table(const FiniteMatrixGroup& g, std::uint64_t cap = kDefaultTableCap);

/// Isomorphism-invariant summary used as a fast non-isomorphism filter.
struct Fingerprint {
  std::uint64_t order = 0;
  std::map<std::uint64_t, std::uint64_t> order_histogram;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::vector<std::uint64_t> abelian_invariants;  // d1 | d2 | ... | dk
  std::vector<std::uint64_t> class_sizes;         // sorted ascending
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const GroupTable& t);
Fingerprint fingerprint(const FiniteMatrixGroup& g, std::uint64_t cap = kDefaultTableCap);

/// Full element bijection plus the generating set it was built on.
struct TableIso {
  std::vector<std::uint32_t> map;         // a-index -> b-index
  std::vector<std::uint32_t> generators;  // a-indices of the generating set
};

/// Exhaustive backtracking search for an isomorphism between two groups given
/// by multiplication tables. Candidate generator images are pruned by element
/// order, conjugacy-class size and centrality. An empty result is a proof of
/// non-isomorphism.
std::optional<TableIso> table_isomorphism(const GroupTable& a, const GroupTable& b);

struct IsoWitness {
  std::vector<std::pair<MonomialMatrix, MonomialMatrix>> generator_images;
};

/// Matrix-group wrapper around table_isomorphism. Throws CapExceededError when
/// either order exceeds cap; never returns a wrong answer.
std::optional<IsoWitness> brute_force_isomorphism(const FiniteMatrixGroup& g1,
                                                  const FiniteMatrixGroup& g2,
                                                  std::uint64_t cap = kDefaultIsoCap);

struct Z3Decomposition {
  std::vector<MonomialMatrix> z3;  // {1, w*1, w^2*1}
  FiniteMatrixGroup complement;    // subgroup H with g = Z3 x H
};

/// Splits g as Z3 x H when the scalar matrix w*1 lies in g and a complement
/// subgroup of index 3 avoiding it exists; empty optional otherwise.
std::optional<Z3Decomposition> central_z3_decomposition(const FiniteMatrixGroup& g);

}  // namespace su3cd
