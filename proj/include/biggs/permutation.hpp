#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biggs/colored_tree.hpp"
#include "biggs/types.hpp"

namespace biggs {

/// Multiset of cycle lengths, fixed points included as 1s, sorted descending.
struct CycleType {
  std::vector<std::size_t> lengths;

  std::size_t count(std::size_t length) const;
  bool operator==(const CycleType&) const = default;
};

/// A bijection of {0..N-1}, acting on the right: images()[v] is v.g.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t degree);
  /// Throws ParameterError unless `images` is a bijection of {0..size-1}.
  static Permutation from_images(std::vector<Vertex> images);
  /// Builds from disjoint or overlapping cycles, multiplied left to right.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Vertex>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  std::span<const Vertex> images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);

  explicit Permutation(std::vector<Vertex> images) : images_(std::move(images)) {}
  std::vector<Vertex> images_;
};

/// "Apply p, then q": compose(p, q)(v) == q(p(v)).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// p^k for any integer k (negative allowed); reduces k per cycle.
Permutation power(const Permutation& p, const BigInt& k);

std::vector<std::vector<Vertex>> cycles(const Permutation& p, bool include_fixed = false);
CycleType cycle_type(const Permutation& p);
BigInt order(const Permutation& p);
int sign(const Permutation& p);
std::vector<Vertex> fixed_points(const Permutation& p);
std::size_t support_size(const Permutation& p);
/// True iff p is a single n-cycle (n >= 2) plus fixed points.
bool is_n_cycle(const Permutation& p, std::size_t n);

/// The involution swapping the ends of every c-colored edge of the tree.
Permutation generator_perm(const ColoredTree& tree, Color c);
std::vector<Permutation> biggs_generators(const ColoredTree& tree);

/// "[0 2 1]"
std::string to_image_string(const Permutation& p);
/// "(0 1)(2 5 7)"; the identity is "()".
std::string to_cycle_string(const Permutation& p);
Permutation parse_image_string(std::string_view text);
Permutation parse_cycle_string(std::string_view text, std::size_t degree);

}  // namespace biggs
