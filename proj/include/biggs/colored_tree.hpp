#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "biggs/types.hpp"

namespace biggs {

/// Number of vertices of the radius-R ball in the C-regular tree.
/// 2R+1 when C == 2, otherwise (C(C-1)^R - 2)/(C-2). Defined for R >= 0.
BigInt vertex_count_formula(int colors, int radius);

/// Number of edges of each single color in the same ball, (N-1)/C.
BigInt edge_count_formula(int colors, int radius);

/// Largest tree build_tree() will materialise.
inline constexpr std::size_t kMaxTreeVertices = std::size_t{1} << 27;

struct DownEdge {
  Vertex vertex;
  Color color;
  bool operator==(const DownEdge&) const = default;
};

struct Step {
  Vertex to;
  bool mirrored;
  bool operator==(const Step&) const = default;
};

/// Radius-R ball of the C-regular, properly C-edge-colored tree, with mirrored
/// half-edges at every boundary vertex for each color other than its down edge.
///
/// Vertices are numbered breadth-first from the root (0); the children of a
/// vertex are enumerated in ascending color order. Immutable once built.
class ColoredTree {
 public:
  static ColoredTree build(int colors, int radius);

  int color_count() const noexcept { return colors_; }
  int radius() const noexcept { return radius_; }
  std::size_t vertex_count() const noexcept { return heights_.size(); }

  int height(Vertex v) const { return heights_.at(v); }
  std::optional<DownEdge> parent(Vertex v) const;
  std::optional<Vertex> child(Vertex v, Color c) const;
  bool is_mirror(Vertex v, Color c) const { return neighbor(v, c).mirrored; }
  std::vector<Color> mirrors(Vertex v) const;

  /// The c-colored neighbour of v, or v itself (mirrored) if c is a mirror at v.
  Step neighbor(Vertex v, Color c) const {
    const Vertex to = adjacency_[static_cast<std::size_t>(v) * colors_ + index_of(c)];
    return {to, to == v};
  }

  /// Vertices at height R, in ascending order.
  std::vector<Vertex> boundary() const;

  /// Colors read along the geodesic from the root to v.
  std::vector<Color> root_path_colors(Vertex v) const;

  /// Colors read along the geodesic from u to v.
  std::vector<Color> geodesic_colors(Vertex u, Vertex v) const;

  /// Maximal subtrees spanned by edges whose color is in `colors`. Components
  /// are listed in order of their smallest vertex; each is sorted.
  std::vector<std::vector<Vertex>> color_components(std::span<const Color> colors) const;

 private:
  ColoredTree() = default;

  int colors_ = 0;
  int radius_ = 0;
  std::vector<int> heights_;
  // adjacency_[v*C + c] is the c-neighbour of v, or v for a mirror (the root
  // has no mirrors, and no other loop exists).
  std::vector<Vertex> adjacency_;
  std::vector<Color> down_color_;
};

}  // namespace biggs
