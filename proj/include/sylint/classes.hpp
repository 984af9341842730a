#pragma once

#include <cstdint>
#include <vector>

#include "sylint/cosets.hpp"
#include "sylint/permgroup.hpp"

namespace sylint::perm {

/// Conjugacy class x^G enumerated as a packed set with membership tests.
class ConjOrbit {
 public:
  /// Enumerates the full class; throws std::domain_error when the class
  /// exceeds cap elements (the caller falls back or reports out of scale).
  ConjOrbit(const std::vector<Perm>& gens, const Perm& x, size_t cap);
  size_t size() const { return set_.size(); }
  bool contains(const Perm& g) const;

 private:
  unsigned degree_;
  unsigned bpp_;
  FixedBytesSet set_;
};

/// One G-class of order-p elements: exact size and which of the queried
/// elements fall in it.
struct OrderPClass {
  Int size;
  std::vector<size_t> members;
};

enum class ClassifyStrategy {
  Auto,           // element orbits while they fit, subgroup orbits beyond
  ElementOrbit,   // enumerate each class in full
  SubgroupOrbit,  // orbit of <x> plus exact normalizer/power-fusion analysis
};

/// Partitions the given order-p elements of G into G-classes with exact
/// class sizes. Exactness of the subgroup-orbit route rests on the
/// orbit-stabilizer identity |G| = #conjugates * |N| and on recovering
/// N = N_G(<x>) generators until the BSGS order matches |G|/#conjugates.
std::vector<OrderPClass> classify_order_p(const PermGroup& G,
                                          const std::vector<Perm>& elts,
                                          unsigned long p,
                                          ClassifyStrategy strategy,
                                          size_t element_orbit_cap,
                                          uint64_t seed);

}  // namespace sylint::perm
