#include "sylint/perm.hpp"

#include <sstream>

namespace sylint::perm {

bool Perm::is_bijection() const {
  std::vector<bool> seen(img.size(), false);
  for (uint32_t v : img) {
    if (v >= img.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm perm_power(const Perm& g, uint64_t e) {
  Perm r = Perm::identity(g.degree());
  Perm base = g;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

uint64_t perm_order(const Perm& g) {
  std::vector<bool> seen(g.degree(), false);
  uint64_t ord = 1;
  for (uint32_t i = 0; i < g.degree(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    uint32_t j = i;
    do {
      seen[j] = true;
      j = g.img[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<std::pair<uint32_t, uint32_t>> cycle_type(const Perm& g) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<uint32_t> lens;
  for (uint32_t i = 0; i < g.degree(); ++i) {
    if (seen[i]) continue;
    uint32_t len = 0;
    uint32_t j = i;
    do {
      seen[j] = true;
      j = g.img[j];
      ++len;
    } while (j != i);
    if (len > 1) lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t l : lens) {
    if (!out.empty() && out.back().first == l)
      ++out.back().second;
    else
      out.emplace_back(l, 1);
  }
  return out;
}

Perm p_primary_part(const Perm& g, uint64_t p) {
  uint64_t ord = perm_order(g);
  uint64_t cop = ord;
  while (cop % p == 0) cop /= p;
  return perm_power(g, cop);
}

uint64_t hash_bytes(const uint8_t* data, size_t len, uint64_t seed) {
  // FNV-1a with a final mix; collisions are always confirmed by full compare
  uint64_t h = seed ^ 0xcbf29ce484222325ull;
  for (size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 0x100000001b3ull;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return h;
}

std::string perm_to_string(const Perm& g) {
  std::ostringstream os;
  os << "[";
  for (uint32_t i = 0; i < g.degree(); ++i) {
    if (i) os << ",";
    os << g.img[i];
  }
  os << "]";
  return os.str();
}

Perm perm_from_images(const std::vector<uint32_t>& images) {
  Perm p(images);
  if (!p.is_bijection()) throw std::invalid_argument("perm_from_images: not a bijection");
  return p;
}

Perm perm_from_cycles(unsigned degree,
                      const std::vector<std::vector<uint32_t>>& cycles) {
  Perm p = Perm::identity(degree);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      uint32_t from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || to >= degree)
        throw std::invalid_argument("perm_from_cycles: point out of range");
      p.img[from] = to;
    }
  }
  if (!p.is_bijection()) throw std::invalid_argument("perm_from_cycles: overlapping cycles");
  return p;
}

}  // namespace sylint::perm
