#pragma once

#include <cstdint>
#include <vector>

#include "sylint/arith.hpp"
#include "sylint/permgroup.hpp"

namespace sylint::perm {

/// Open-addressing hash set of fixed-width byte strings, arena-backed.
/// Lookups verify full bytes, so hash collisions never merge entries.
class FixedBytesSet {
 public:
  explicit FixedBytesSet(size_t width);
  size_t width() const { return width_; }
  size_t size() const { return count_; }
  void reserve(size_t n);
  /// Index of the entry, inserting if new. *inserted reports which.
  size_t insert(const uint8_t* bytes, bool* inserted);
  /// Index or SIZE_MAX.
  size_t find(const uint8_t* bytes) const;
  const uint8_t* at(size_t idx) const { return arena_.data() + idx * width_; }
  size_t memory_bytes() const { return arena_.size() + slots_.size() * 4; }

 private:
  void rehash(size_t want);
  size_t width_;
  size_t count_ = 0;
  std::vector<uint8_t> arena_;
  std::vector<uint32_t> slots_;  // UINT32_MAX = empty
  uint64_t mask_ = 0;
};

/// Canonical representative machinery for right cosets Hg: the greedy
/// per-level minimization through H's stabilizer chain yields a unique
/// representative, so coset labels are reproducible across runs.
class CosetCanonicalizer {
 public:
  explicit CosetCanonicalizer(const PermGroup& H);
  unsigned degree() const { return degree_; }
  const Int& subgroup_order() const { return order_; }
  /// In-place canonicalization; scratch must have degree() capacity.
  void canonicalize(std::vector<uint32_t>& c, std::vector<uint32_t>& scratch) const;
  Perm canonical(const Perm& g) const;

 private:
  struct Lvl {
    std::vector<uint32_t> orbit;
    std::vector<std::vector<uint32_t>> u;  // u[k] maps beta -> orbit[k]
  };
  std::vector<Lvl> lvls_;
  unsigned degree_ = 0;
  Int order_ = 1;
};

/// Enumerated coset space G/H with packed canonical representatives.
/// Construction verifies that exactly |G:H| cosets are found.
class CosetSpace {
 public:
  CosetSpace(const PermGroup& G, const PermGroup& H, size_t index_cap);

  size_t size() const { return set_.size(); }
  unsigned degree() const { return degree_; }
  const CosetCanonicalizer& canonicalizer() const { return canon_; }

  struct Scratch {
    std::vector<uint32_t> cur, nxt, tmp;
    std::vector<uint8_t> packed;
  };

  /// Index of the coset (Hc)*g; the space is closed, so this always hits.
  size_t image(size_t coset, const Perm& g) const;
  size_t image(size_t coset, const Perm& g, Scratch& s) const;
  size_t coset_of(const Perm& g) const;
  Perm representative(size_t coset) const;

 private:
  size_t pack_lookup(const std::vector<uint32_t>& canon_img,
                     std::vector<uint8_t>& packed) const;
  unsigned degree_;
  unsigned bpp_;
  CosetCanonicalizer canon_;
  FixedBytesSet set_;
};

/// Spec surface: the permutation images of G's generators on G/H.
struct CosetActionResult {
  size_t index = 0;
  std::vector<Perm> generator_images;  // parallel to the generator list used
  std::vector<Perm> generators_used;
};
CosetActionResult coset_action(const PermGroup& G, const PermGroup& H,
                               size_t index_cap = 30000000);

struct RegularOrbitResult {
  Int regular_orbits;     // s
  arith::Rat qp;          // 1 - s|H|/|G:H|
  Int index;
  Int orbit_count_total;
};
/// Number of regular H-orbits on G/H and the derived non-base probability.
RegularOrbitResult regular_orbit_count(const PermGroup& G, const PermGroup& H,
                                       size_t index_cap = 30000000);

}  // namespace sylint::perm
