#include "biggs/colored_tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace biggs {

namespace {

void require_colors(int colors) {
  if (colors < 2) throw ParameterError("color count must be at least 2, got " + std::to_string(colors));
}

}  // namespace

BigInt vertex_count_formula(int colors, int radius) {
  require_colors(colors);
  if (radius < 0) throw ParameterError("radius must be non-negative");
  if (colors == 2) return BigInt(2 * radius + 1);
  const BigInt power = boost::multiprecision::pow(BigInt(colors - 1), static_cast<unsigned>(radius));
  return (colors * power - 2) / (colors - 2);
}

BigInt edge_count_formula(int colors, int radius) {
  require_colors(colors);
  if (radius < 1) throw ParameterError("radius must be at least 1");
  if (colors == 2) return BigInt(radius);
  const BigInt power = boost::multiprecision::pow(BigInt(colors - 1), static_cast<unsigned>(radius));
  return (power - 1) / (colors - 2);
}

ColoredTree ColoredTree::build(int colors, int radius) {
  require_colors(colors);
  if (radius < 1) throw ParameterError("radius must be at least 1, got " + std::to_string(radius));
  if (colors > 0xFFFF) throw CapacityError("too many colors");
  const BigInt n_big = vertex_count_formula(colors, radius);
  if (n_big > kMaxTreeVertices || n_big * colors > BigInt(std::numeric_limits<std::size_t>::max() / 8))
    throw CapacityError("tree with " + n_big.str() + " vertices exceeds capacity");
  const auto n = static_cast<std::size_t>(n_big);

  ColoredTree t;
  t.colors_ = colors;
  t.radius_ = radius;
  t.heights_.reserve(n);
  t.down_color_.reserve(n);
  t.adjacency_.assign(n * colors, 0);

  t.heights_.push_back(0);
  t.down_color_.push_back(Color{});
  // Breadth-first: the queue is the vertex list itself.
  for (std::size_t v = 0; v < t.heights_.size(); ++v) {
    const auto vid = static_cast<Vertex>(v);
    for (int c = 0; c < colors; ++c) {
      auto& slot = t.adjacency_[v * colors + c];
      if (v != 0 && index_of(t.down_color_[v]) == static_cast<unsigned>(c)) continue;  // set by parent
      if (t.heights_[v] == radius) {
        slot = vid;  // mirror
        continue;
      }
      const auto child = static_cast<Vertex>(t.heights_.size());
      t.heights_.push_back(t.heights_[v] + 1);
      t.down_color_.push_back(color(c));
      slot = child;
      t.adjacency_[static_cast<std::size_t>(child) * colors + c] = vid;
    }
  }
  if (t.heights_.size() != n) throw ContradictionError("built tree size disagrees with closed form");
  return t;
}

std::optional<DownEdge> ColoredTree::parent(Vertex v) const {
  if (v >= vertex_count()) throw ParameterError("vertex out of range");
  if (v == 0) return std::nullopt;
  const Color c = down_color_[v];
  return DownEdge{neighbor(v, c).to, c};
}

std::optional<Vertex> ColoredTree::child(Vertex v, Color c) const {
  if (v >= vertex_count()) throw ParameterError("vertex out of range");
  if (v != 0 && c == down_color_[v]) return std::nullopt;
  const Step s = neighbor(v, c);
  if (s.mirrored) return std::nullopt;
  return s.to;
}

std::vector<Color> ColoredTree::mirrors(Vertex v) const {
  if (v >= vertex_count()) throw ParameterError("vertex out of range");
  std::vector<Color> out;
  for (int c = 0; c < colors_; ++c)
    if (neighbor(v, color(c)).mirrored) out.push_back(color(c));
  return out;
}

std::vector<Vertex> ColoredTree::boundary() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (heights_[v] == radius_) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<Color> ColoredTree::root_path_colors(Vertex v) const {
  if (v >= vertex_count()) throw ParameterError("vertex out of range");
  std::vector<Color> out;
  while (v != 0) {
    out.push_back(down_color_[v]);
    v = neighbor(v, down_color_[v]).to;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Color> ColoredTree::geodesic_colors(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) throw ParameterError("vertex out of range");
  // Climb from the deeper endpoint until the two meet.
  std::vector<Color> up;    // from u towards the meeting point
  std::vector<Color> down;  // from v towards the meeting point, reversed later
  while (u != v) {
    if (heights_[u] >= heights_[v]) {
      up.push_back(down_color_[u]);
      u = neighbor(u, down_color_[u]).to;
    } else {
      down.push_back(down_color_[v]);
      v = neighbor(v, down_color_[v]).to;
    }
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<std::vector<Vertex>> ColoredTree::color_components(std::span<const Color> colors) const {
  std::vector<bool> used(colors_, false);
  for (Color c : colors) {
    if (index_of(c) >= static_cast<unsigned>(colors_)) throw ParameterError("color out of range");
    used[index_of(c)] = true;
  }
  if (std::count(used.begin(), used.end(), true) < 2)
    throw ParameterError("components need at least two distinct colors");

  const std::size_t n = vertex_count();
  std::vector<int> component(n, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    stack.assign(1, static_cast<Vertex>(start));
    component[start] = id;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int c = 0; c < colors_; ++c) {
        if (!used[c]) continue;
        const Step s = neighbor(v, color(c));
        if (!s.mirrored && component[s.to] < 0) {
          component[s.to] = id;
          stack.push_back(s.to);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace biggs
