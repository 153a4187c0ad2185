#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biggs/colored_tree.hpp"
#include "biggs/permutation.hpp"

namespace biggs {

/// A freely reduced word over the colors: no letter appears twice in a row.
/// Since every generator is an involution, reduced words are exactly the
/// non-backtracking paths in the Cayley graph.
class Word {
 public:
  Word() = default;

  /// Cancels equal adjacent letters until none remain.
  static Word free_reduce(std::span<const Color> letters);
  /// Throws ParameterError if `letters` is not already reduced.
  static Word from_reduced(std::vector<Color> letters);

  std::span<const Color> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Color operator[](std::size_t i) const { return letters_[i]; }

  Word reversed() const;
  bool is_palindrome() const;

  bool operator==(const Word&) const = default;

 private:
  explicit Word(std::vector<Color> letters) : letters_(std::move(letters)) {}
  std::vector<Color> letters_;
};

/// Concatenation followed by free reduction.
Word operator+(const Word& a, const Word& b);

/// Product of the generators over the letters, left to right.
Permutation evaluate(const Word& word, std::span<const Permutation> generators);
Permutation evaluate(const Word& word, const ColoredTree& tree);

struct Track {
  std::vector<Vertex> path;
  Vertex endpoint;
};

/// Pushes v along the letters; a mirror reflects in place. Accepts any color
/// sequence; for reduced words the endpoint equals evaluate(word)(v).
Track track(const ColoredTree& tree, std::span<const Color> letters, Vertex v);

/// c1 c2 ... cC.
Word rainbow_word(int colors);
/// First N_{C,R} letters of the rainbow word repeated; with `reversed_colors`
/// the repeated block is cC ... c1.
Word rotation_prefix_word(int colors, int radius, bool reversed_colors = false);
/// a b a b ... truncated to `length` letters.
Word alternating_word(Color a, Color b, std::size_t length);
/// For each boundary vertex v and each mirror color c at v: path(o->v) c path(v->o).
std::vector<Word> palindrome_words(const ColoredTree& tree);
/// Forward rotation prefix followed by the backward one: a reduced relator of length 2N.
Word relator_2n(int colors, int radius);
/// Color sequence of the tree geodesic from u to v; pushes u onto v.
Word geodesic_word(const ColoredTree& tree, Vertex u, Vertex v);

/// Calls visit(word) for every nonempty reduced word of length <= max_length
/// over `colors` letters, shortest first and lexicographically within a length.
void for_each_reduced_word(int colors, std::size_t max_length, const std::function<void(const Word&)>& visit);

/// "0.1.2"; the empty word is "".
std::string to_string(const Word& w);
/// Parses the dotted form without reducing it.
std::vector<Color> parse_letters(std::string_view text, int colors);
/// Parses the dotted form; the result is freely reduced.
Word parse_word(std::string_view text, int colors);

}  // namespace biggs
