#include "biggs/word.hpp"

#include <algorithm>
#include <charconv>

namespace biggs {

Word Word::free_reduce(std::span<const Color> letters) {
  // Stack-based cancellation gives the unique reduced form in one pass.
  std::vector<Color> out;
  out.reserve(letters.size());
  for (Color c : letters) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return Word(std::move(out));
}

Word Word::from_reduced(std::vector<Color> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i] == letters[i - 1]) throw ParameterError("word is not freely reduced");
  return Word(std::move(letters));
}

Word Word::reversed() const { return Word(std::vector<Color>(letters_.rbegin(), letters_.rend())); }

bool Word::is_palindrome() const { return std::equal(letters_.begin(), letters_.end(), letters_.rbegin()); }

Word operator+(const Word& a, const Word& b) {
  std::vector<Color> joined(a.letters().begin(), a.letters().end());
  joined.insert(joined.end(), b.letters().begin(), b.letters().end());
  return Word::free_reduce(joined);
}

Permutation evaluate(const Word& word, std::span<const Permutation> generators) {
  if (generators.empty()) throw ParameterError("no generators");
  const std::size_t n = generators.front().degree();
  std::vector<Vertex> images(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex x = v;
    for (Color c : word.letters()) {
      if (index_of(c) >= generators.size()) throw ParameterError("letter out of range");
      x = generators[index_of(c)](x);
    }
    images[v] = x;
  }
  return Permutation::from_images(std::move(images));
}

Permutation evaluate(const Word& word, const ColoredTree& tree) {
  const auto gens = biggs_generators(tree);
  return evaluate(word, gens);
}

Track track(const ColoredTree& tree, std::span<const Color> letters, Vertex v) {
  if (v >= tree.vertex_count()) throw ParameterError("vertex out of range");
  Track t;
  t.path.reserve(letters.size() + 1);
  t.path.push_back(v);
  for (Color c : letters) {
    if (index_of(c) >= static_cast<unsigned>(tree.color_count())) throw ParameterError("letter out of range");
    v = tree.neighbor(v, c).to;
    t.path.push_back(v);
  }
  t.endpoint = v;
  return t;
}

Word rainbow_word(int colors) {
  if (colors < 2) throw ParameterError("rainbow word needs at least two colors");
  std::vector<Color> letters;
  for (int c = 0; c < colors; ++c) letters.push_back(color(c));
  return Word::from_reduced(std::move(letters));
}

Word rotation_prefix_word(int colors, int radius, bool reversed_colors) {
  if (colors < 2) throw ParameterError("rotation word needs at least two colors");
  const BigInt n_big = vertex_count_formula(colors, radius);
  if (n_big > kMaxTreeVertices) throw CapacityError("rotation word too long");
  const auto n = static_cast<std::size_t>(n_big);
  std::vector<Color> letters(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<int>(i % static_cast<std::size_t>(colors));
    letters[i] = color(reversed_colors ? colors - 1 - k : k);
  }
  return Word::from_reduced(std::move(letters));
}

Word alternating_word(Color a, Color b, std::size_t length) {
  if (a == b) throw ParameterError("alternating word needs two distinct colors");
  std::vector<Color> letters(length);
  for (std::size_t i = 0; i < length; ++i) letters[i] = (i % 2 == 0) ? a : b;
  return Word::from_reduced(std::move(letters));
}

std::vector<Word> palindrome_words(const ColoredTree& tree) {
  std::vector<Word> out;
  for (Vertex v : tree.boundary()) {
    const auto path = tree.root_path_colors(v);
    for (Color m : tree.mirrors(v)) {
      std::vector<Color> letters(path);
      letters.push_back(m);
      letters.insert(letters.end(), path.rbegin(), path.rend());
      out.push_back(Word::from_reduced(std::move(letters)));
    }
  }
  return out;
}

Word relator_2n(int colors, int radius) {
  if (colors < 3) throw ParameterError("the 2N relator needs at least three colors");
  const Word forward = rotation_prefix_word(colors, radius, false);
  const Word backward = rotation_prefix_word(colors, radius, true);
  const Word joined = forward + backward;
  if (joined.size() != forward.size() + backward.size())
    throw ContradictionError("rotation words cancel at the seam");
  return joined;
}

Word geodesic_word(const ColoredTree& tree, Vertex u, Vertex v) {
  return Word::from_reduced(tree.geodesic_colors(u, v));
}

void for_each_reduced_word(int colors, std::size_t max_length, const std::function<void(const Word&)>& visit) {
  if (colors < 1) throw ParameterError("need at least one color");
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (int c = 0; c < colors; ++c) {
        if (!w.empty() && index_of(w.letters().back()) == static_cast<unsigned>(c)) continue;
        std::vector<Color> letters(w.letters().begin(), w.letters().end());
        letters.push_back(color(c));
        next.push_back(Word::from_reduced(std::move(letters)));
        visit(next.back());
      }
    }
    level = std::move(next);
  }
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(index_of(w[i]));
  }
  return out;
}

std::vector<Color> parse_letters(std::string_view text, int colors) {
  std::vector<Color> letters;
  if (text.empty()) return letters;
  std::size_t i = 0;
  while (true) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + i) throw ParameterError("malformed word '" + std::string(text) + "'");
    if (value >= static_cast<unsigned>(colors)) throw ParameterError("letter " + std::to_string(value) + " out of range");
    letters.push_back(color(value));
    i = static_cast<std::size_t>(ptr - text.data());
    if (i == text.size()) break;
    if (text[i] != '.') throw ParameterError("malformed word '" + std::string(text) + "'");
    ++i;
  }
  return letters;
}

Word parse_word(std::string_view text, int colors) { return Word::free_reduce(parse_letters(text, colors)); }

}  // namespace biggs
