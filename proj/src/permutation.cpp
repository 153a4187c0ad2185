#include "biggs/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

namespace biggs {

std::size_t CycleType::count(std::size_t length) const {
  return static_cast<std::size_t>(std::count(lengths.begin(), lengths.end(), length));
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Vertex> images(degree);
  std::iota(images.begin(), images.end(), Vertex{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Vertex> images) {
  std::vector<bool> seen(images.size(), false);
  for (Vertex v : images) {
    if (v >= images.size() || seen[v]) throw ParameterError("image list is not a bijection");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Vertex>>& cycle_list) {
  Permutation result = identity(degree);
  for (const auto& cyc : cycle_list) {
    std::vector<bool> seen(degree, false);
    for (Vertex v : cyc) {
      if (v >= degree) throw ParameterError("cycle point out of range");
      if (seen[v]) throw ParameterError("repeated point inside a cycle");
      seen[v] = true;
    }
    Permutation c = identity(degree);
    for (std::size_t i = 0; i < cyc.size(); ++i) c.images_[cyc[i]] = cyc[(i + 1) % cyc.size()];
    result = compose(result, c);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t v = 0; v < images_.size(); ++v)
    if (images_[v] != v) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (std::size_t v = 0; v < images_.size(); ++v) inv[images_[v]] = static_cast<Vertex>(v);
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw ParameterError("cannot compose permutations of different degree");
  std::vector<Vertex> images(p.degree());
  const auto pi = p.images();
  const auto qi = q.images();
  for (std::size_t v = 0; v < images.size(); ++v) images[v] = qi[pi[v]];
  return Permutation(std::move(images));
}

Permutation power(const Permutation& p, const BigInt& k) {
  std::vector<Vertex> images(p.degree());
  for (const auto& cyc : cycles(p, true)) {
    const BigInt len(cyc.size());
    BigInt shift = k % len;
    if (shift < 0) shift += len;
    const auto s = static_cast<std::size_t>(shift);
    for (std::size_t i = 0; i < cyc.size(); ++i) images[cyc[i]] = cyc[(i + s) % cyc.size()];
  }
  return Permutation::from_images(std::move(images));
}

std::vector<std::vector<Vertex>> cycles(const Permutation& p, bool include_fixed) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(p.degree(), false);
  for (Vertex start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cyc;
    for (Vertex v = start; !seen[v]; v = p(v)) {
      seen[v] = true;
      cyc.push_back(v);
    }
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  std::vector<bool> seen(p.degree(), false);
  for (Vertex start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Vertex v = start; !seen[v]; v = p(v)) {
      seen[v] = true;
      ++len;
    }
    t.lengths.push_back(len);
  }
  std::sort(t.lengths.begin(), t.lengths.end(), std::greater<>());
  return t;
}

BigInt order(const Permutation& p) {
  BigInt result = 1;
  const CycleType t = cycle_type(p);
  std::size_t previous = 0;
  for (std::size_t len : t.lengths) {
    if (len == previous) continue;
    previous = len;
    result = boost::multiprecision::lcm(result, BigInt(len));
  }
  return result;
}

int sign(const Permutation& p) {
  const std::size_t cycle_count = cycle_type(p).lengths.size();
  return (p.degree() - cycle_count) % 2 == 0 ? 1 : -1;
}

std::vector<Vertex> fixed_points(const Permutation& p) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < p.degree(); ++v)
    if (p(v) == v) out.push_back(v);
  return out;
}

std::size_t support_size(const Permutation& p) { return p.degree() - fixed_points(p).size(); }

bool is_n_cycle(const Permutation& p, std::size_t n) {
  if (n < 2) return false;
  const CycleType t = cycle_type(p);
  return t.lengths.front() == n && (t.lengths.size() == 1 || t.lengths[1] == 1);
}

Permutation generator_perm(const ColoredTree& tree, Color c) {
  if (index_of(c) >= static_cast<unsigned>(tree.color_count())) throw ParameterError("color out of range");
  std::vector<Vertex> images(tree.vertex_count());
  for (Vertex v = 0; v < images.size(); ++v) images[v] = tree.neighbor(v, c).to;
  return Permutation::from_images(std::move(images));
}

std::vector<Permutation> biggs_generators(const ColoredTree& tree) {
  std::vector<Permutation> gens;
  gens.reserve(tree.color_count());
  for (int c = 0; c < tree.color_count(); ++c) gens.push_back(generator_perm(tree, color(c)));
  return gens;
}

std::string to_image_string(const Permutation& p) {
  std::string out = "[";
  for (std::size_t v = 0; v < p.degree(); ++v) {
    if (v) out += ' ';
    out += std::to_string(p(static_cast<Vertex>(v)));
  }
  return out + "]";
}

std::string to_cycle_string(const Permutation& p) {
  const auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cs) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

namespace {

// Parses whitespace-separated unsigned integers from `text`.
std::vector<Vertex> parse_numbers(std::string_view text) {
  std::vector<Vertex> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    Vertex value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + i) throw ParameterError("expected a number in '" + std::string(text) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    out.push_back(value);
  }
  return out;
}

}  // namespace

Permutation parse_image_string(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  const auto last = text.find_last_not_of(" \t\n");
  if (first == std::string_view::npos || text[first] != '[' || text[last] != ']')
    throw ParameterError("image list must be enclosed in brackets");
  return Permutation::from_images(parse_numbers(text.substr(first + 1, last - first - 1)));
}

Permutation parse_cycle_string(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Vertex>> cs;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParameterError("expected '(' in cycle notation");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw ParameterError("unterminated cycle");
    auto cyc = parse_numbers(text.substr(i + 1, close - i - 1));
    if (!cyc.empty()) cs.push_back(std::move(cyc));
    i = close + 1;
  }
  return Permutation::from_cycles(degree, cs);
}

}  // namespace biggs
