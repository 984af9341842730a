#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "sylint/arith.hpp"
#include "sylint/perm.hpp"

namespace sylint::perm {

using arith::Int;

/// Base and strong generating set via deterministic Schreier-Sims.
/// Transversal elements are rebuilt on demand from Schreier trees.
class PermGroup {
 public:
  PermGroup() = default;
  /// Builds a BSGS; throws on inconsistent degrees.
  explicit PermGroup(std::vector<Perm> generators);

  unsigned degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const Int& order() const { return order_; }
  const std::vector<unsigned>& base() const { return base_; }
  bool trivial() const { return order_ == 1; }

  bool contains(const Perm& g) const;
  /// Residue of sifting; identity iff g in the group.
  Perm sift(const Perm& g) const;

  /// Unique element with the given base images; nullopt if none exists.
  std::optional<Perm> from_base_images(const std::vector<uint32_t>& images) const;
  std::vector<uint32_t> base_images(const Perm& g) const;

  size_t num_levels() const { return levels_.size(); }
  unsigned base_point(size_t level) const { return levels_[level].beta; }
  const std::vector<uint32_t>& basic_orbit(size_t level) const {
    return levels_[level].orbit;
  }
  /// Transversal element u with u[beta_level] = point.
  Perm transversal(size_t level, uint32_t point) const;
  /// Generators of the level-th stabilizer in the chain.
  const std::vector<Perm>& level_generators(size_t level) const {
    return levels_[level].gens;
  }

  /// All elements, BFS order; throws if the order exceeds cap.
  std::vector<Perm> elements(size_t cap = 1u << 20) const;

 private:
  struct Level {
    unsigned beta = 0;
    std::vector<Perm> gens;
    std::vector<uint32_t> orbit;            // BFS order, orbit[0] = beta
    std::vector<int32_t> pos;               // point -> index in orbit, -1 if absent
    std::vector<std::pair<uint32_t, uint32_t>> tree;  // (parent point, gen index)
    std::vector<Perm> u_cache;              // explicit transversals, small groups
    void rebuild_orbit(unsigned degree);
  };

  Perm rep_from_tree(const Level& lv, uint32_t point) const;
  bool check_level(size_t i, size_t* added_at);
  void schreier_sims();

  unsigned degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  std::vector<unsigned> base_;
  Int order_ = 1;
};

/// Orbit of a point under a generator set.
std::vector<uint32_t> point_orbit(const std::vector<Perm>& gens, uint32_t start);

/// Orbit partition of {0..degree-1}: orbit id per point and orbit sizes.
struct OrbitPartition {
  std::vector<uint32_t> orbit_of;
  std::vector<uint64_t> sizes;
};
OrbitPartition orbit_partition(const std::vector<Perm>& gens, unsigned degree);

/// Product-replacement random elements; deterministic for a given seed.
class RandomElements {
 public:
  RandomElements(const std::vector<Perm>& gens, uint64_t seed);
  Perm next();

 private:
  std::vector<Perm> state_;
  Perm acc_;
  std::mt19937_64 rng_;
};

/// H intersect K = 1, by enumerating the smaller group's non-identity
/// elements and sifting against the other.
bool trivial_intersection(const PermGroup& H, const PermGroup& K,
                          size_t enumeration_cap = 1u << 20);

/// Try to find few elements generating the same group; used to keep
/// breadth-first edge counts low in coset enumerations.
std::vector<Perm> reduced_generators(const PermGroup& G, uint64_t seed = 1);

}  // namespace sylint::perm
