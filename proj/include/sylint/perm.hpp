#pragma once

#include <cstdint>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sylint::perm {

/// A permutation of {0..d-1} stored as its image array.
/// Composition is left-to-right: (a*b)[x] = b[a[x]].
struct Perm {
  std::vector<uint32_t> img;

  Perm() = default;
  explicit Perm(std::vector<uint32_t> images) : img(std::move(images)) {}

  static Perm identity(unsigned degree) {
    Perm p;
    p.img.resize(degree);
    std::iota(p.img.begin(), p.img.end(), 0u);
    return p;
  }

  unsigned degree() const { return static_cast<unsigned>(img.size()); }
  uint32_t operator[](uint32_t x) const { return img[x]; }

  bool is_identity() const {
    for (uint32_t i = 0; i < img.size(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  bool is_bijection() const;

  Perm inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (uint32_t i = 0; i < img.size(); ++i) r.img[img[i]] = i;
    return r;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm r;
    r.img.resize(a.img.size());
    for (uint32_t i = 0; i < a.img.size(); ++i) r.img[i] = b.img[a.img[i]];
    return r;
  }

  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator!=(const Perm& o) const { return img != o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
};

/// g^-1 * x * g without forming the inverse.
inline Perm conjugate(const Perm& x, const Perm& g) {
  Perm r;
  r.img.resize(x.img.size());
  for (uint32_t i = 0; i < x.img.size(); ++i) r.img[g.img[i]] = g.img[x.img[i]];
  return r;
}

Perm perm_power(const Perm& g, uint64_t e);

/// Order as lcm of cycle lengths.
uint64_t perm_order(const Perm& g);

/// Cycle type as sorted (length, count) pairs, fixed points omitted.
std::vector<std::pair<uint32_t, uint32_t>> cycle_type(const Perm& g);

/// g^(|g| / p^a): the p-primary component of g.
Perm p_primary_part(const Perm& g, uint64_t p);

uint64_t hash_bytes(const uint8_t* data, size_t len, uint64_t seed = 0x9e3779b97f4a7c15ull);

/// Parse/emit one-line 0-based image arrays, e.g. "[1,2,0]".
std::string perm_to_string(const Perm& g);
Perm perm_from_images(const std::vector<uint32_t>& images);

/// Cycle-notation constructor on a given degree; cycles use 0-based points.
Perm perm_from_cycles(unsigned degree,
                      const std::vector<std::vector<uint32_t>>& cycles);

}  // namespace sylint::perm
