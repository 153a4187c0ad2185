#include <algorithm>
#include <cstdint>
#include <cstring>
#include <limits>
#include <vector>

#include "biggs/frontier.hpp"
#include "biggs/types.hpp"

namespace biggs {
namespace {

constexpr unsigned kShardBits = 6;
constexpr std::size_t kShards = std::size_t{1} << kShardBits;
constexpr std::size_t kChunkCandidates = std::size_t{1} << 20;
constexpr std::uint16_t kNoLetter = 0xFFFF;

// Slot reference encoding: 0 empty, kTomb removed, kTempBit|cand a candidate of
// the chunk being inserted, otherwise state index + 1.
constexpr std::uint32_t kTomb = 0xFFFFFFFFu;
constexpr std::uint32_t kTempBit = 0x80000000u;
constexpr std::size_t kMaxStoredStates = kTempBit - 2;

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t hash_bytes(const unsigned char* p, std::size_t len) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ len;
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    std::uint64_t w;
    std::memcpy(&w, p + i, 8);
    h = mix(h ^ w);
  }
  if (i < len) {
    std::uint64_t w = 0;
    std::memcpy(&w, p + i, len - i);
    h = mix(h ^ w);
  }
  return h;
}

struct Slot {
  std::uint32_t fp;
  std::uint32_t ref;
};

std::size_t shard_of(std::uint64_t h) { return static_cast<std::size_t>(h >> (64 - kShardBits)); }
std::uint32_t fingerprint(std::uint64_t h) { return static_cast<std::uint32_t>(h >> 26); }

struct Shard {
  std::vector<Slot> slots = std::vector<Slot>(1024, Slot{0, 0});
  std::size_t used = 0;

  std::size_t mask() const { return slots.size() - 1; }

  void reserve_for(std::size_t extra) {
    std::size_t cap = slots.size();
    while (2 * (used + extra) > cap) cap *= 2;
    if (cap == slots.size()) return;
    std::vector<Slot> grown(cap, Slot{0, 0});
    const std::size_t m = cap - 1;
    for (const Slot& s : slots) {
      if (s.ref == 0 || s.ref == kTomb) continue;
      std::size_t i = s.fp & m;
      while (grown[i].ref != 0) i = (i + 1) & m;
      grown[i] = s;
    }
    slots = std::move(grown);
  }
};

enum class Status : std::uint8_t { Unused, SameLevel, NextLevel, Earlier, New, DupInChunk };

template <class T>
class ParallelFrontier {
 public:
  ParallelFrontier(std::span<const Permutation> gens, const SearchBudget& budget)
      : n_(gens.front().degree()), letters_(gens.size()), budget_(budget), shards_(kShards) {
    gen_images_.resize(letters_ * n_);
    for (std::size_t c = 0; c < letters_; ++c)
      for (std::size_t v = 0; v < n_; ++v) gen_images_[c * n_ + v] = static_cast<T>(gens[c](static_cast<Vertex>(v)));
    max_states_ = std::min(budget.max_states, kMaxStoredStates);
  }

  SearchOutcome run(SearchMode mode) {
    std::vector<T> id(n_);
    for (std::size_t v = 0; v < n_; ++v) id[v] = static_cast<T>(v);
    const std::uint64_t h0 = hash_bytes(bytes(id.data()), row_bytes());
    arena_.assign(id.begin(), id.end());
    last_.push_back(kNoLetter);
    insert_final(h0, 0);

    SearchOutcome out;
    capped_ = max_states_ <= 1;
    std::size_t depth = 0;
    std::size_t lb = 0, le = 1;

    while (true) {
      may_store_ = !capped_ && depth < budget_.depth_limit;
      same_hit_ = next_hit_ = any_unseen_ = false;
      for (std::size_t chunk = lb; chunk < le;) {
        const std::size_t per_chunk = std::max<std::size_t>(1, kChunkCandidates / letters_);
        const std::size_t chunk_end = std::min(le, chunk + per_chunk);
        expand_chunk(chunk, chunk_end, lb, le);
        chunk = chunk_end;
      }
      const std::size_t next_end = state_count();

      if (mode == SearchMode::Girth) {
        if (same_hit_ || next_hit_) {
          out = {OutcomeKind::Exact, same_hit_ ? 2 * depth + 1 : 2 * depth + 2, 0, depth};
          break;
        }
        if (!may_store_ || capped_) {
          out = {OutcomeKind::LowerBoundOnly, 2 * depth + 1, 0, depth};
          break;
        }
      } else {
        if (!any_unseen_) {
          out = {OutcomeKind::Exact, depth, 0, depth};
          break;
        }
        if (!may_store_ || capped_) {
          out = {OutcomeKind::LowerBoundOnly, depth, 0, depth};
          break;
        }
      }
      lb = le;
      le = next_end;
      ++depth;
      if (lb == le) {
        out = {OutcomeKind::LowerBoundOnly, 2 * depth + 1, 0, depth};
        break;
      }
    }
    out.states_explored = state_count();
    return out;
  }

 private:
  std::size_t row_bytes() const { return n_ * sizeof(T); }
  static const unsigned char* bytes(const T* p) { return reinterpret_cast<const unsigned char*>(p); }
  std::size_t state_count() const { return last_.size(); }
  const T* state(std::size_t j) const { return arena_.data() + j * n_; }

  const T* resolve(std::uint32_t ref) const {
    if (ref & kTempBit) return cand_.data() + static_cast<std::size_t>(ref & ~kTempBit) * n_;
    return state(ref - 1);
  }

  // Returns the matching reference or 0.
  std::uint32_t find(const Shard& sh, std::uint64_t h, const T* row) const {
    const std::uint32_t fp = fingerprint(h);
    const std::size_t m = sh.mask();
    for (std::size_t i = fp & m;; i = (i + 1) & m) {
      const Slot& s = sh.slots[i];
      if (s.ref == 0) return 0;
      if (s.ref != kTomb && s.fp == fp && std::memcmp(resolve(s.ref), row, row_bytes()) == 0) return s.ref;
    }
  }

  static void place(Shard& sh, std::uint64_t h, std::uint32_t ref) {
    const std::uint32_t fp = fingerprint(h);
    const std::size_t m = sh.mask();
    std::size_t i = fp & m;
    while (sh.slots[i].ref != 0) i = (i + 1) & m;
    sh.slots[i] = Slot{fp, ref};
    ++sh.used;
  }

  static void rewrite(Shard& sh, std::uint64_t h, std::uint32_t from, std::uint32_t to) {
    const std::size_t m = sh.mask();
    for (std::size_t i = fingerprint(h) & m;; i = (i + 1) & m) {
      if (sh.slots[i].ref == from) {
        sh.slots[i].ref = to;
        return;
      }
    }
  }

  void insert_final(std::uint64_t h, std::size_t index) {
    Shard& sh = shards_[shard_of(h)];
    sh.reserve_for(1);
    place(sh, h, static_cast<std::uint32_t>(index + 1));
  }

  void expand_chunk(std::size_t begin, std::size_t end, std::size_t lb, std::size_t le) {
    const std::size_t count = (end - begin) * letters_;
    cand_.resize(count * n_);
    hash_.resize(count);
    status_.assign(count, Status::Unused);

    // Phase A: children, hashes and read-only lookups.
    bool same = false, next = false, unseen = false;
    const long long parents = static_cast<long long>(end - begin);
#pragma omp parallel for schedule(static) num_threads(budget_.threads) reduction(|| : same, next, unseen)
    for (long long pi = 0; pi < parents; ++pi) {
      const std::size_t p = begin + static_cast<std::size_t>(pi);
      const T* parent = state(p);
      for (std::size_t c = 0; c < letters_; ++c) {
        if (c == last_[p]) continue;
        const std::size_t k = static_cast<std::size_t>(pi) * letters_ + c;
        T* child = cand_.data() + k * n_;
        const T* g = gen_images_.data() + c * n_;
        for (std::size_t v = 0; v < n_; ++v) child[v] = g[parent[v]];
        const std::uint64_t h = hash_bytes(bytes(child), row_bytes());
        hash_[k] = h;
        const std::uint32_t ref = find(shards_[shard_of(h)], h, child);
        if (ref == 0) {
          status_[k] = Status::New;
          unseen = true;
          continue;
        }
        const std::size_t j = ref - 1;
        if (j >= le) {
          status_[k] = Status::NextLevel;
          next = true;
        } else if (j >= lb) {
          status_[k] = Status::SameLevel;
          same = true;
        } else {
          status_[k] = Status::Earlier;
        }
      }
    }
    same_hit_ = same_hit_ || same;
    next_hit_ = next_hit_ || next;
    any_unseen_ = any_unseen_ || unseen;
    if (!may_store_ || capped_ || !unseen) return;

    // Phase B1: per shard, keep the first occurrence of each new child under a
    // temporary reference and point later copies at it.
    for (auto& list : shard_lists_) list.clear();
    shard_lists_.resize(kShards);
    for (std::size_t k = 0; k < count; ++k)
      if (status_[k] == Status::New) shard_lists_[shard_of(hash_[k])].push_back(static_cast<std::uint32_t>(k));
    dup_of_.resize(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(budget_.threads)
    for (long long s = 0; s < static_cast<long long>(kShards); ++s) {
      Shard& sh = shards_[static_cast<std::size_t>(s)];
      const auto& list = shard_lists_[static_cast<std::size_t>(s)];
      sh.reserve_for(list.size());
      for (std::uint32_t k : list) {
        const T* row = cand_.data() + static_cast<std::size_t>(k) * n_;
        const std::uint32_t ref = find(sh, hash_[k], row);
        if (ref != 0) {
          status_[k] = Status::DupInChunk;
          dup_of_[k] = ref & ~kTempBit;
        } else {
          place(sh, hash_[k], kTempBit | k);
        }
      }
    }

    // Phase B2: final indices in candidate order, up to the state cap.
    final_of_.assign(count, 0);
    for (std::size_t k = 0; k < count; ++k) {
      if (status_[k] == Status::New) {
        if (!capped_ && state_count() < max_states_) {
          final_of_[k] = static_cast<std::uint32_t>(state_count() + 1);
          const T* row = cand_.data() + k * n_;
          arena_.insert(arena_.end(), row, row + n_);
          last_.push_back(static_cast<std::uint16_t>(k % letters_));
        } else {
          capped_ = true;
        }
      } else if (status_[k] == Status::DupInChunk && final_of_[dup_of_[k]] != 0) {
        next_hit_ = true;
      }
    }

    // Phase B3: swap temporary references for final ones; dropped children
    // become tombstones.
#pragma omp parallel for schedule(dynamic, 1) num_threads(budget_.threads)
    for (long long s = 0; s < static_cast<long long>(kShards); ++s) {
      Shard& sh = shards_[static_cast<std::size_t>(s)];
      for (std::uint32_t k : shard_lists_[static_cast<std::size_t>(s)]) {
        if (status_[k] != Status::New) continue;
        rewrite(sh, hash_[k], kTempBit | k, final_of_[k] != 0 ? final_of_[k] : kTomb);
      }
    }
  }

  std::size_t n_;
  std::size_t letters_;
  SearchBudget budget_;
  std::size_t max_states_ = 0;
  std::vector<T> gen_images_;
  std::vector<T> arena_;
  std::vector<std::uint16_t> last_;
  std::vector<Shard> shards_;

  std::vector<T> cand_;
  std::vector<std::uint64_t> hash_;
  std::vector<Status> status_;
  std::vector<std::uint32_t> dup_of_;
  std::vector<std::uint32_t> final_of_;
  std::vector<std::vector<std::uint32_t>> shard_lists_;

  bool capped_ = false;
  bool may_store_ = false;
  bool same_hit_ = false;
  bool next_hit_ = false;
  bool any_unseen_ = false;
};

}  // namespace

SearchOutcome frontier_search_parallel(std::span<const Permutation> generators, SearchMode mode,
                                       const SearchBudget& budget) {
  const std::size_t n = generators.front().degree();
  if (generators.size() >= kNoLetter) throw CapacityError("too many generators for the frontier kernel");
  if (n <= 256) return ParallelFrontier<std::uint8_t>(generators, budget).run(mode);
  if (n <= 65536) return ParallelFrontier<std::uint16_t>(generators, budget).run(mode);
  throw CapacityError("degree too large for the frontier kernel");
}

}  // namespace biggs
