#include "sylint/cosets.hpp"

#include <algorithm>
#include <cstring>

namespace sylint::perm {

using arith::Int;
using arith::Rat;

FixedBytesSet::FixedBytesSet(size_t width) : width_(width) { rehash(1024); }

void FixedBytesSet::reserve(size_t n) {
  arena_.reserve(n * width_);
  rehash(n * 2);
}

void FixedBytesSet::rehash(size_t want) {
  size_t cap = 1024;
  while (cap < want) cap <<= 1;
  if (cap <= slots_.size()) return;
  slots_.assign(cap, UINT32_MAX);
  mask_ = cap - 1;
  for (size_t i = 0; i < count_; ++i) {
    uint64_t h = hash_bytes(arena_.data() + i * width_, width_);
    size_t s = h & mask_;
    while (slots_[s] != UINT32_MAX) s = (s + 1) & mask_;
    slots_[s] = static_cast<uint32_t>(i);
  }
}

size_t FixedBytesSet::insert(const uint8_t* bytes, bool* inserted) {
  if ((count_ + 1) * 5 > slots_.size() * 3) rehash(slots_.size() * 2);
  uint64_t h = hash_bytes(bytes, width_);
  size_t s = h & mask_;
  while (slots_[s] != UINT32_MAX) {
    if (std::memcmp(arena_.data() + size_t(slots_[s]) * width_, bytes, width_) == 0) {
      if (inserted) *inserted = false;
      return slots_[s];
    }
    s = (s + 1) & mask_;
  }
  size_t idx = count_++;
  arena_.insert(arena_.end(), bytes, bytes + width_);
  slots_[s] = static_cast<uint32_t>(idx);
  if (inserted) *inserted = true;
  return idx;
}

size_t FixedBytesSet::find(const uint8_t* bytes) const {
  uint64_t h = hash_bytes(bytes, width_);
  size_t s = h & mask_;
  while (slots_[s] != UINT32_MAX) {
    if (std::memcmp(arena_.data() + size_t(slots_[s]) * width_, bytes, width_) == 0)
      return slots_[s];
    s = (s + 1) & mask_;
  }
  return SIZE_MAX;
}

CosetCanonicalizer::CosetCanonicalizer(const PermGroup& H)
    : degree_(H.degree()), order_(H.order()) {
  for (size_t lev = 0; lev < H.num_levels(); ++lev) {
    Lvl lv;
    lv.orbit = H.basic_orbit(lev);
    if (lv.orbit.size() == 1) continue;  // trivial level contributes nothing
    for (uint32_t pt : lv.orbit) lv.u.push_back(H.transversal(lev, pt).img);
    lvls_.push_back(std::move(lv));
  }
}

void CosetCanonicalizer::canonicalize(std::vector<uint32_t>& c,
                                      std::vector<uint32_t>& scratch) const {
  scratch.resize(degree_);
  for (const Lvl& lv : lvls_) {
    size_t best = 0;
    uint32_t best_val = c[lv.orbit[0]];
    for (size_t k = 1; k < lv.orbit.size(); ++k) {
      uint32_t v = c[lv.orbit[k]];
      if (v < best_val) {
        best_val = v;
        best = k;
      }
    }
    if (best == 0) continue;  // transversal of the base point is the identity
    const std::vector<uint32_t>& u = lv.u[best];
    for (unsigned x = 0; x < degree_; ++x) scratch[x] = c[u[x]];
    c.swap(scratch);
  }
}

Perm CosetCanonicalizer::canonical(const Perm& g) const {
  std::vector<uint32_t> c = g.img, scratch;
  canonicalize(c, scratch);
  return Perm(c);
}

namespace {

unsigned bytes_per_point(unsigned degree) {
  if (degree <= 256) return 1;
  if (degree <= 65536) return 2;
  return 4;
}

void pack_img(const std::vector<uint32_t>& img, unsigned bpp, uint8_t* out) {
  switch (bpp) {
    case 1:
      for (size_t i = 0; i < img.size(); ++i) out[i] = static_cast<uint8_t>(img[i]);
      break;
    case 2:
      for (size_t i = 0; i < img.size(); ++i) {
        out[2 * i] = static_cast<uint8_t>(img[i] & 0xff);
        out[2 * i + 1] = static_cast<uint8_t>(img[i] >> 8);
      }
      break;
    default:
      std::memcpy(out, img.data(), img.size() * 4);
  }
}

void unpack_img(const uint8_t* in, unsigned bpp, std::vector<uint32_t>& img) {
  switch (bpp) {
    case 1:
      for (size_t i = 0; i < img.size(); ++i) img[i] = in[i];
      break;
    case 2:
      for (size_t i = 0; i < img.size(); ++i)
        img[i] = static_cast<uint32_t>(in[2 * i]) |
                 (static_cast<uint32_t>(in[2 * i + 1]) << 8);
      break;
    default:
      std::memcpy(img.data(), in, img.size() * 4);
  }
}

}  // namespace

CosetSpace::CosetSpace(const PermGroup& G, const PermGroup& H, size_t index_cap)
    : degree_(G.degree()),
      bpp_(bytes_per_point(G.degree())),
      canon_(H),
      set_(bytes_per_point(G.degree()) * size_t(G.degree())) {
  if (H.degree() != G.degree())
    throw std::invalid_argument("CosetSpace: degree mismatch");
  Int index_int = G.order() / H.order();
  if (G.order() % H.order() != 0)
    throw std::domain_error("CosetSpace: |H| does not divide |G|");
  if (index_int > Int(static_cast<unsigned long>(index_cap)))
    throw std::domain_error("CosetSpace: index " + index_int.get_str() +
                            " exceeds cap " + std::to_string(index_cap));
  size_t index = index_int.get_ui();
  set_.reserve(index);

  std::vector<Perm> gens = reduced_generators(G);
  std::vector<uint32_t> cur(degree_), nxt(degree_), scratch(degree_);
  std::vector<uint8_t> packed(set_.width());

  // seed with the canonical representative of H itself
  for (unsigned i = 0; i < degree_; ++i) cur[i] = i;
  canon_.canonicalize(cur, scratch);
  pack_img(cur, bpp_, packed.data());
  bool ins = false;
  set_.insert(packed.data(), &ins);

  for (size_t head = 0; head < set_.size(); ++head) {
    unpack_img(set_.at(head), bpp_, cur);
    for (const Perm& g : gens) {
      for (unsigned x = 0; x < degree_; ++x) nxt[x] = g.img[cur[x]];
      canon_.canonicalize(nxt, scratch);
      pack_img(nxt, bpp_, packed.data());
      set_.insert(packed.data(), &ins);
      if (set_.size() > index)
        throw std::logic_error("CosetSpace: more cosets than |G:H|");
    }
  }
  if (set_.size() != index)
    throw std::logic_error("CosetSpace: enumeration found " +
                           std::to_string(set_.size()) + " cosets, expected " +
                           index_int.get_str());
}

size_t CosetSpace::pack_lookup(const std::vector<uint32_t>& canon_img,
                               std::vector<uint8_t>& packed) const {
  packed.resize(set_.width());
  pack_img(canon_img, bpp_, packed.data());
  size_t idx = set_.find(packed.data());
  if (idx == SIZE_MAX) throw std::logic_error("CosetSpace: lookup missed a coset");
  return idx;
}

size_t CosetSpace::image(size_t coset, const Perm& g, Scratch& s) const {
  s.cur.resize(degree_);
  s.nxt.resize(degree_);
  unpack_img(set_.at(coset), bpp_, s.cur);
  for (unsigned x = 0; x < degree_; ++x) s.nxt[x] = g.img[s.cur[x]];
  canon_.canonicalize(s.nxt, s.tmp);
  return pack_lookup(s.nxt, s.packed);
}

size_t CosetSpace::image(size_t coset, const Perm& g) const {
  Scratch s;
  return image(coset, g, s);
}

size_t CosetSpace::coset_of(const Perm& g) const {
  Scratch s;
  s.cur = g.img;
  canon_.canonicalize(s.cur, s.tmp);
  return pack_lookup(s.cur, s.packed);
}

Perm CosetSpace::representative(size_t coset) const {
  std::vector<uint32_t> img(degree_);
  unpack_img(set_.at(coset), bpp_, img);
  return Perm(img);
}

CosetActionResult coset_action(const PermGroup& G, const PermGroup& H,
                               size_t index_cap) {
  CosetSpace space(G, H, index_cap);
  CosetActionResult out;
  out.index = space.size();
  out.generators_used = G.generators();
  const size_t n = space.size();
  CosetSpace::Scratch scratch;
  for (const Perm& g : out.generators_used) {
    Perm im;
    im.img.resize(n);
    for (size_t c = 0; c < n; ++c)
      im.img[c] = static_cast<uint32_t>(space.image(c, g, scratch));
    if (!im.is_bijection())
      throw std::logic_error("coset_action: generator image is not a permutation");
    out.generator_images.push_back(std::move(im));
  }
  return out;
}

RegularOrbitResult regular_orbit_count(const PermGroup& G, const PermGroup& H,
                                       size_t index_cap) {
  CosetSpace space(G, H, index_cap);
  const size_t n = space.size();
  std::vector<Perm> hgens = H.generators();
  if (hgens.empty()) hgens.push_back(Perm::identity(H.degree()));
  Int horder = H.order();

  std::vector<bool> visited(n, false);
  std::vector<size_t> stack;
  CosetSpace::Scratch scr;
  Int s = 0, orbits = 0;
  for (size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    stack.assign(1, start);
    visited[start] = true;
    uint64_t size = 0;
    while (!stack.empty()) {
      size_t c = stack.back();
      stack.pop_back();
      ++size;
      for (const Perm& h : hgens) {
        size_t im = space.image(c, h, scr);
        if (!visited[im]) {
          visited[im] = true;
          stack.push_back(im);
        }
      }
    }
    orbits += 1;
    if (Int(size) == horder) s += 1;
  }
  RegularOrbitResult out;
  out.regular_orbits = s;
  out.index = Int(static_cast<unsigned long>(n));
  out.orbit_count_total = orbits;
  out.qp = Rat(1) - Rat(s * horder) / Rat(out.index);
  return out;
}

}  // namespace sylint::perm
