#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "biggs/permutation.hpp"
#include "biggs/types.hpp"

namespace biggs {

/// Largest degree schreier_sims() accepts.
inline constexpr std::size_t kMaxGroupDegree = 5000;

/// One level of a stabilizer chain: the orbit of the base point under the
/// strong generators fixing all earlier base points, with a coset
/// representative (and its inverse) for every orbit point.
struct StabilizerLevel {
  Vertex base_point = 0;
  std::vector<std::size_t> generator_indices;  // into strong_generators
  std::vector<Vertex> orbit;
  std::vector<std::int32_t> orbit_position;  // degree-sized, -1 outside the orbit
  std::vector<Permutation> representatives;  // base_point -> orbit[k]
  std::vector<Permutation> inverse_representatives;
};

/// Base and strong generating set.
class BaseStrongGenSet {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::vector<Vertex> base() const;
  std::span<const Permutation> strong_generators() const noexcept { return strong_generators_; }
  std::span<const StabilizerLevel> levels() const noexcept { return levels_; }

  /// Product of the basic orbit lengths.
  BigInt order() const;
  /// Sifts p through the chain; true iff the residue is the identity.
  bool contains(const Permutation& p) const;

  /// Strong generators fixing every base point before `level`.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

 private:
  friend BaseStrongGenSet schreier_sims(std::span<const Permutation> generators);
  std::size_t degree_ = 0;
  std::vector<Permutation> strong_generators_;
  std::vector<StabilizerLevel> levels_;
};

/// Schreier-Sims with reproducible output. Base points are the smallest point
/// moved by the generator that opens a new level. Elements from a fixed-seed
/// random walk are sifted first; then every Schreier generator is sifted. The
/// run stops as soon as the orbit product reaches N! (or N!/2 when every
/// generator is even), which is an exact certificate of completeness.
BaseStrongGenSet schreier_sims(std::span<const Permutation> generators);

inline BigInt group_order(const BaseStrongGenSet& bsgs) { return bsgs.order(); }
inline bool contains(const BaseStrongGenSet& bsgs, const Permutation& p) { return bsgs.contains(p); }

enum class GroupType { Alternating, Symmetric, Dihedral, Other };
std::string to_string(GroupType t);

struct Transitivity {
  bool transitive = false;
  bool two_transitive = false;
  bool sharply_two_transitive = false;
  bool operator==(const Transitivity&) const = default;
};

struct GroupVerdict {
  BigInt order;
  GroupType type = GroupType::Other;
  Transitivity transitivity;
};

/// Orbits of the group generated by `generators` on {0..degree-1}, each sorted,
/// listed by smallest point.
std::vector<std::vector<Vertex>> orbits(std::span<const Permutation> generators, std::size_t degree);

Transitivity transitivity_profile(const BaseStrongGenSet& bsgs, std::span<const Permutation> generators);

/// Exact recognition by order: Symmetric iff |G| = N!, Alternating iff
/// |G| = N!/2 (all generators must then be even), Dihedral iff |G| = 2N with
/// N odd and two involutory generators whose product has order N.
GroupVerdict classify_alt_sym(const BaseStrongGenSet& bsgs, std::span<const Permutation> generators);

BigInt factorial(std::size_t n);

}  // namespace biggs
