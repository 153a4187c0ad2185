#include "biggs/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace biggs {

namespace {

using Images = std::vector<Vertex>;

struct TreeEdge {
  std::int32_t parent = -1;  // orbit index the point was reached from
  std::int32_t generator = -1;  // position in the level's generator list
};

struct WorkLevel {
  Vertex base_point = 0;
  std::vector<std::size_t> gens;
  std::vector<Vertex> orbit;
  std::vector<std::int32_t> position;
  std::vector<Images> reps;
  std::vector<Images> inverse_reps;
  std::vector<TreeEdge> tree;
  // Schreier generators (orbit[a], gens[b]) with a < tested_points and
  // b < tested_gens are known to sift.
  std::size_t tested_points = 0;
  std::size_t tested_gens = 0;
  // Snapshot and cursor of the sweep in progress over the untested pairs.
  bool sweeping = false;
  std::size_t sweep_points = 0;
  std::size_t sweep_gens = 0;
  std::size_t cursor_point = 0;
  std::size_t cursor_gen = 0;
};

class ChainBuilder {
 public:
  ChainBuilder(std::size_t degree, std::vector<Images> gens) : n_(degree), strong_(std::move(gens)) {}

  void run(const BigInt& order_bound) {
    if (strong_.empty()) return;
    const std::size_t input_count = strong_.size();
    open_level(smallest_moved(strong_.front()));
    for (std::size_t g = 0; g < strong_.size(); ++g) add_generator_to(0, g);
    // Every generator must move some base point.
    for (std::size_t g = 0; g < strong_.size(); ++g) {
      if (!fixes_base(strong_[g], levels_.size())) continue;
      const std::size_t depth = levels_.size();
      open_level(smallest_moved(strong_[g]));
      for (std::size_t h = 0; h < strong_.size(); ++h)
        if (fixes_base(strong_[h], depth)) add_generator_to(depth, h);
    }
    if (order_reached(order_bound)) return;
    if (random_phase(order_bound, input_count)) return;

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    Images residue(n_);
    while (i >= 0) {
      const auto level = static_cast<std::size_t>(i);
      std::size_t drop_level = 0;
      if (!next_nonsifting(level, residue, drop_level)) {
        --i;
        continue;
      }
      const std::size_t g = strong_.size();
      strong_.push_back(residue);
      if (drop_level == levels_.size()) open_level(smallest_moved(strong_.back()));
      for (std::size_t l = level + 1; l <= drop_level; ++l) add_generator_to(l, g);
      if (order_reached(order_bound)) return;
      i = static_cast<std::ptrdiff_t>(drop_level);
    }
  }

  const std::vector<Images>& strong() const { return strong_; }
  std::vector<WorkLevel>& levels() { return levels_; }

 private:
  static Vertex smallest_moved(const Images& g) {
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g[v] != v) return static_cast<Vertex>(v);
    throw ContradictionError("identity element reached the base extension step");
  }

  bool fixes_base(const Images& g, std::size_t depth) const {
    for (std::size_t l = 0; l < depth; ++l)
      if (g[levels_[l].base_point] != levels_[l].base_point) return false;
    return true;
  }

  void open_level(Vertex base_point) {
    WorkLevel lvl;
    lvl.base_point = base_point;
    lvl.position.assign(n_, -1);
    lvl.orbit.push_back(base_point);
    lvl.position[base_point] = 0;
    Images id(n_);
    std::iota(id.begin(), id.end(), Vertex{0});
    lvl.reps.push_back(id);
    lvl.inverse_reps.push_back(std::move(id));
    lvl.tree.push_back({});
    levels_.push_back(std::move(lvl));
  }

  void add_orbit_point(WorkLevel& lvl, std::int32_t from, std::int32_t gen_pos, Vertex point) {
    const Images& s = strong_[lvl.gens[gen_pos]];
    const Images& u = lvl.reps[from];
    Images rep(n_);
    for (std::size_t v = 0; v < n_; ++v) rep[v] = s[u[v]];
    Images inv(n_);
    for (std::size_t v = 0; v < n_; ++v) inv[rep[v]] = static_cast<Vertex>(v);
    lvl.position[point] = static_cast<std::int32_t>(lvl.orbit.size());
    lvl.orbit.push_back(point);
    lvl.reps.push_back(std::move(rep));
    lvl.inverse_reps.push_back(std::move(inv));
    lvl.tree.push_back({from, gen_pos});
  }

  // Adds strong generator g to the level and closes the orbit; existing
  // representatives are never replaced.
  void add_generator_to(std::size_t level, std::size_t g) {
    WorkLevel& lvl = levels_[level];
    lvl.gens.push_back(g);
    const auto gpos = static_cast<std::int32_t>(lvl.gens.size() - 1);
    const std::size_t old_size = lvl.orbit.size();
    for (std::size_t a = 0; a < old_size; ++a) {
      const Vertex img = strong_[g][lvl.orbit[a]];
      if (lvl.position[img] < 0) add_orbit_point(lvl, static_cast<std::int32_t>(a), gpos, img);
    }
    for (std::size_t a = old_size; a < lvl.orbit.size(); ++a) {
      for (std::size_t b = 0; b < lvl.gens.size(); ++b) {
        const Vertex img = strong_[lvl.gens[b]][lvl.orbit[a]];
        if (lvl.position[img] < 0) add_orbit_point(lvl, static_cast<std::int32_t>(a), static_cast<std::int32_t>(b), img);
      }
    }
  }

  // Sifts `g` (modified in place) from `level` down. Returns the level at which
  // it dropped out, or levels_.size() if it passed every level.
  std::size_t strip(Images& g, std::size_t level, Images& scratch) const {
    for (; level < levels_.size(); ++level) {
      const WorkLevel& lvl = levels_[level];
      const std::int32_t pos = lvl.position[g[lvl.base_point]];
      if (pos < 0) return level;
      const Images& inv = lvl.inverse_reps[pos];
      for (std::size_t v = 0; v < n_; ++v) scratch[v] = inv[g[v]];
      g.swap(scratch);
    }
    return levels_.size();
  }

  static bool is_identity(const Images& g) {
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g[v] != v) return false;
    return true;
  }

  // Advances the level's sweep over untested Schreier generators until one
  // fails to sift. On success `residue` holds the non-trivial residue.
  bool next_nonsifting(std::size_t level, Images& residue, std::size_t& drop_level) {
    Images scratch(n_);
    while (true) {
      WorkLevel& lvl = levels_[level];
      if (!lvl.sweeping) {
        if (lvl.tested_points == lvl.orbit.size() && lvl.tested_gens == lvl.gens.size()) return false;
        lvl.sweeping = true;
        lvl.sweep_points = lvl.orbit.size();
        lvl.sweep_gens = lvl.gens.size();
        lvl.cursor_point = 0;
        lvl.cursor_gen = lvl.cursor_point < lvl.tested_points ? lvl.tested_gens : 0;
      }
      while (lvl.cursor_point < lvl.sweep_points) {
        const std::size_t a = lvl.cursor_point;
        const std::size_t b = lvl.cursor_gen;
        if (b >= lvl.sweep_gens) {
          ++lvl.cursor_point;
          lvl.cursor_gen = lvl.cursor_point < lvl.tested_points ? lvl.tested_gens : 0;
          continue;
        }
        ++lvl.cursor_gen;
        const Images& s = strong_[lvl.gens[b]];
        const Vertex beta_s = s[lvl.orbit[a]];
        const std::int32_t target = lvl.position[beta_s];
        const TreeEdge& edge = lvl.tree[target];
        if (edge.parent == static_cast<std::int32_t>(a) && edge.generator == static_cast<std::int32_t>(b)) continue;
        // u_beta * s * u_{beta.s}^{-1}
        const Images& u = lvl.reps[a];
        const Images& w = lvl.inverse_reps[target];
        for (std::size_t v = 0; v < n_; ++v) residue[v] = w[s[u[v]]];
        drop_level = strip(residue, level + 1, scratch);
        if (drop_level < levels_.size() || !is_identity(residue)) return true;
      }
      lvl.sweeping = false;
      lvl.tested_points = lvl.sweep_points;
      lvl.tested_gens = lvl.sweep_gens;
    }
  }

  // Sifts pseudo-random group elements and keeps every nontrivial residue.
  // The walk multiplies by a random subproduct of the input generators each
  // step (fixed seed). Only group elements are added, so the chain stays
  // sound; completeness still needs the order bound or the sweep. Returns
  // true if the order bound was reached.
  bool random_phase(const BigInt& order_bound, std::size_t input_count) {
    if (order_bound == 0) return false;
    std::mt19937_64 rng(0x5eed);
    Images acc(n_);
    std::iota(acc.begin(), acc.end(), Vertex{0});
    Images tmp(n_), scratch(n_);
    auto step = [&] {
      for (std::size_t g = 0; g < input_count; ++g) {
        if (!(rng() & 1)) continue;
        const Images& s = strong_[g];
        for (std::size_t v = 0; v < n_; ++v) tmp[v] = s[acc[v]];
        acc.swap(tmp);
      }
    };

    // A level missing k of its true orbit points is exposed with probability
    // about k/N per element, so the patience grows with the degree.
    const std::size_t quiet_limit = 40 + 4 * n_;
    std::size_t quiet = 0;
    while (quiet < quiet_limit) {
      step();
      Images residue = acc;
      const std::size_t drop = strip(residue, 0, scratch);
      if (drop == levels_.size() && is_identity(residue)) {
        ++quiet;
        continue;
      }
      quiet = 0;
      const std::size_t g = strong_.size();
      strong_.push_back(std::move(residue));
      if (drop == levels_.size()) open_level(smallest_moved(strong_.back()));
      for (std::size_t l = drop >= 1 ? 1 : 0; l <= drop; ++l) add_generator_to(l, g);
      if (order_reached(order_bound)) return true;
    }
    return false;
  }

  bool order_reached(const BigInt& bound) const {
    if (bound == 0) return false;
    BigInt product = 1;
    for (const auto& lvl : levels_) product *= lvl.orbit.size();
    if (product > bound) throw ContradictionError("orbit product exceeds the order bound");
    return product == bound;
  }

  std::size_t n_;
  std::vector<Images> strong_;
  std::vector<WorkLevel> levels_;
};

}  // namespace

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<Vertex> BaseStrongGenSet::base() const {
  std::vector<Vertex> b;
  for (const auto& lvl : levels_) b.push_back(lvl.base_point);
  return b;
}

BigInt BaseStrongGenSet::order() const {
  BigInt product = 1;
  for (const auto& lvl : levels_) product *= lvl.orbit.size();
  return product;
}

bool BaseStrongGenSet::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw ParameterError("membership query of the wrong degree");
  std::vector<Vertex> g(p.images().begin(), p.images().end());
  std::vector<Vertex> scratch(degree_);
  for (const auto& lvl : levels_) {
    const std::int32_t pos = lvl.orbit_position[g[lvl.base_point]];
    if (pos < 0) return false;
    const auto inv = lvl.inverse_representatives[pos].images();
    for (std::size_t v = 0; v < degree_; ++v) scratch[v] = inv[g[v]];
    g.swap(scratch);
  }
  for (std::size_t v = 0; v < degree_; ++v)
    if (g[v] != v) return false;
  return true;
}

std::vector<Permutation> BaseStrongGenSet::stabilizer_generators(std::size_t level) const {
  std::vector<Permutation> out;
  if (level >= levels_.size()) return out;
  for (std::size_t idx : levels_[level].generator_indices) out.push_back(strong_generators_[idx]);
  return out;
}

BaseStrongGenSet schreier_sims(std::span<const Permutation> generators) {
  if (generators.empty()) throw ParameterError("schreier_sims needs at least one generator");
  const std::size_t n = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != n) throw ParameterError("generators have different degrees");
  if (n > kMaxGroupDegree) throw CapacityError("degree " + std::to_string(n) + " exceeds the group engine capacity");

  std::vector<Images> gens;
  bool all_even = true;
  for (const auto& g : generators) {
    if (g.is_identity()) continue;
    Images img(g.images().begin(), g.images().end());
    if (std::find(gens.begin(), gens.end(), img) != gens.end()) continue;
    if (sign(g) < 0) all_even = false;
    gens.push_back(std::move(img));
  }
  BigInt bound = factorial(n);
  if (all_even && n >= 2) bound /= 2;

  ChainBuilder builder(n, std::move(gens));
  builder.run(bound);

  BaseStrongGenSet out;
  out.degree_ = n;
  for (const auto& g : builder.strong()) out.strong_generators_.push_back(Permutation::from_images(g));
  for (auto& w : builder.levels()) {
    StabilizerLevel lvl;
    lvl.base_point = w.base_point;
    lvl.generator_indices = std::move(w.gens);
    lvl.orbit = std::move(w.orbit);
    lvl.orbit_position = std::move(w.position);
    lvl.representatives.reserve(w.reps.size());
    for (auto& r : w.reps) lvl.representatives.push_back(Permutation::from_images(std::move(r)));
    for (auto& r : w.inverse_reps) lvl.inverse_representatives.push_back(Permutation::from_images(std::move(r)));
    out.levels_.push_back(std::move(lvl));
  }
  return out;
}

std::string to_string(GroupType t) {
  switch (t) {
    case GroupType::Alternating: return "Alternating";
    case GroupType::Symmetric: return "Symmetric";
    case GroupType::Dihedral: return "Dihedral";
    case GroupType::Other: return "Other";
  }
  return "Other";
}

std::vector<std::vector<Vertex>> orbits(std::span<const Permutation> generators, std::size_t degree) {
  std::vector<std::int32_t> id(degree, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < degree; ++start) {
    if (id[start] >= 0) continue;
    const auto k = static_cast<std::int32_t>(out.size());
    out.emplace_back();
    id[start] = k;
    stack.assign(1, start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out[k].push_back(v);
      for (const auto& g : generators) {
        const Vertex w = g(v);
        if (id[w] < 0) {
          id[w] = k;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[k].begin(), out[k].end());
  }
  return out;
}

Transitivity transitivity_profile(const BaseStrongGenSet& bsgs, std::span<const Permutation> generators) {
  Transitivity t;
  const std::size_t n = bsgs.degree();
  if (n == 0) return t;
  t.transitive = orbits(generators, n).size() == 1;
  if (!t.transitive) return t;
  if (n == 1) return t;
  // The first base point's stabilizer is generated by the level-1 strong
  // generators (empty when the stabilizer is trivial).
  const Vertex anchor = bsgs.levels().front().base_point;
  const auto stab_gens = bsgs.stabilizer_generators(1);
  const auto stab_orbits = orbits(stab_gens, n);
  std::size_t nontrivial = 0;
  for (const auto& o : stab_orbits)
    if (!(o.size() == 1 && o.front() == anchor)) ++nontrivial;
  t.two_transitive = nontrivial == 1;
  t.sharply_two_transitive = t.two_transitive && bsgs.order() == BigInt(n) * (n - 1);
  return t;
}

GroupVerdict classify_alt_sym(const BaseStrongGenSet& bsgs, std::span<const Permutation> generators) {
  GroupVerdict v;
  v.order = bsgs.order();
  v.transitivity = transitivity_profile(bsgs, generators);
  const std::size_t n = bsgs.degree();
  const BigInt full = factorial(n);

  bool dihedral = false;
  if (n >= 3 && n % 2 == 1 && v.order == BigInt(2 * n)) {
    for (std::size_t a = 0; a < generators.size() && !dihedral; ++a)
      for (std::size_t b = a + 1; b < generators.size() && !dihedral; ++b) {
        const auto& x = generators[a];
        const auto& y = generators[b];
        if (!(x * x).is_identity() || !(y * y).is_identity() || x.is_identity() || y.is_identity()) continue;
        dihedral = order(x * y) == BigInt(n);
      }
  }
  if (dihedral) {
    v.type = GroupType::Dihedral;
  } else if (v.order == full) {
    v.type = GroupType::Symmetric;
  } else if (n >= 2 && v.order * 2 == full) {
    for (const auto& g : generators)
      if (sign(g) < 0) throw ContradictionError("group of order N!/2 has an odd generator");
    v.type = GroupType::Alternating;
  } else {
    v.type = GroupType::Other;
  }
  return v;
}

}  // namespace biggs
