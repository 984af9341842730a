#include "sylint/classes.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace sylint::perm {

using arith::Int;

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

ConjOrbit::ConjOrbit(const std::vector<Perm>& gens, const Perm& x, size_t cap)
    : degree_(x.degree()),
      bpp_(bytes_per_point(x.degree())),
      set_(bytes_per_point(x.degree()) * size_t(x.degree())) {
  std::vector<uint8_t> packed(set_.width());
  std::vector<uint32_t> cur(degree_), nxt(degree_);
  pack_img(x.img, bpp_, packed.data());
  bool ins;
  set_.insert(packed.data(), &ins);
  for (size_t head = 0; head < set_.size(); ++head) {
    unpack_img(set_.at(head), bpp_, cur);
    for (const Perm& g : gens) {
      // nxt = g^-1 * cur * g
      for (unsigned i = 0; i < degree_; ++i) nxt[g.img[i]] = g.img[cur[i]];
      pack_img(nxt, bpp_, packed.data());
      set_.insert(packed.data(), &ins);
      if (set_.size() > cap)
        throw std::domain_error("conjugation orbit exceeds cap of " +
                                std::to_string(cap) + " elements");
    }
  }
}

bool ConjOrbit::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  std::vector<uint8_t> packed(set_.width());
  pack_img(g.img, bpp_, packed.data());
  return set_.find(packed.data()) != SIZE_MAX;
}

namespace {

// Canonical key of the cyclic subgroup <z> of prime order p: the base
// images (under G's stabilizer chain) of the lexicographically least
// element among z, z^2, ..., z^(p-1). Base images identify elements of G
// uniquely, so keys identify subgroups exactly.
struct SubgroupKeyer {
  const PermGroup& G;
  unsigned long p;
  size_t key_width;

  explicit SubgroupKeyer(const PermGroup& g, unsigned long prime)
      : G(g), p(prime) {
    key_width = std::max<size_t>(1, G.num_levels());
  }

  // least power of z (also returned), writing the key into out
  Perm min_power(const Perm& z, uint8_t* out) const {
    Perm best = z;
    Perm cur = z;
    for (unsigned long j = 2; j < p; ++j) {
      cur = cur * z;
      if (cur.img < best.img) best = cur;
    }
    write_key(best, out);
    return best;
  }

  void write_key(const Perm& g, uint8_t* out) const {
    for (size_t i = 0; i < key_width; ++i)
      out[i] = static_cast<uint8_t>(i < G.num_levels() ? g[G.base_point(i)] : 0);
  }
};

struct SubgroupOrbit {
  FixedBytesSet keys;
  std::vector<uint32_t> parent;  // BFS tree: entry -> parent entry
  std::vector<uint8_t> gen_idx;  // generator labelling the tree edge

  explicit SubgroupOrbit(size_t width) : keys(width) {}
};

// Conjugating element u with root^u = entry (walking the BFS tree).
Perm tree_conjugator(const SubgroupOrbit& so, const std::vector<Perm>& gens,
                     size_t entry, unsigned degree) {
  std::vector<uint8_t> path;
  size_t cur = entry;
  while (so.parent[cur] != cur) {
    path.push_back(so.gen_idx[cur]);
    cur = so.parent[cur];
  }
  Perm u = Perm::identity(degree);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * gens[*it];
  return u;
}

// Discrete log of y in <x> (y = x^j); throws if y is not a power of x.
unsigned long power_index(const Perm& x, const Perm& y, unsigned long p) {
  Perm cur = x;
  for (unsigned long j = 1; j < p; ++j) {
    if (cur == y) return j;
    cur = cur * x;
  }
  throw std::logic_error("power_index: element is not a power");
}

std::vector<OrderPClass> classify_by_element_orbits(const std::vector<Perm>& gens,
                                                    const std::vector<Perm>& elts,
                                                    size_t cap) {
  std::vector<OrderPClass> out;
  std::vector<bool> done(elts.size(), false);
  for (size_t i = 0; i < elts.size(); ++i) {
    if (done[i]) continue;
    ConjOrbit orbit(gens, elts[i], cap);
    OrderPClass cls;
    cls.size = Int(static_cast<unsigned long>(orbit.size()));
    for (size_t j = i; j < elts.size(); ++j)
      if (!done[j] && orbit.contains(elts[j])) {
        done[j] = true;
        cls.members.push_back(j);
      }
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<OrderPClass> classify_by_subgroup_orbits(const PermGroup& G,
                                                     const std::vector<Perm>& gens,
                                                     const std::vector<Perm>& elts,
                                                     unsigned long p,
                                                     uint64_t seed) {
  const unsigned degree = G.degree();
  SubgroupKeyer keyer(G, p);
  std::vector<OrderPClass> out;
  std::vector<bool> done(elts.size(), false);
  std::vector<uint8_t> key(keyer.key_width);

  for (size_t i0 = 0; i0 < elts.size(); ++i0) {
    if (done[i0]) continue;
    // orbit of <elts[i0]> under conjugation, keyed canonically
    SubgroupOrbit so(keyer.key_width);
    Perm root = keyer.min_power(elts[i0], key.data());
    bool ins;
    so.keys.insert(key.data(), &ins);
    so.parent.push_back(0);
    so.gen_idx.push_back(0);
    std::vector<uint32_t> imgbuf;
    for (size_t head = 0; head < so.keys.size(); ++head) {
      // reconstruct the canonical element of this subgroup from its key
      std::vector<uint32_t> bimg(keyer.key_width);
      for (size_t t = 0; t < keyer.key_width; ++t) bimg[t] = so.keys.at(head)[t];
      bimg.resize(G.num_levels());
      auto melt = G.from_base_images(bimg);
      if (!melt) throw std::logic_error("subgroup orbit: bad key reconstruction");
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        Perm y = conjugate(*melt, gens[gi]);
        keyer.min_power(y, key.data());
        size_t idx = so.keys.insert(key.data(), &ins);
        if (ins) {
          so.parent.push_back(static_cast<uint32_t>(head));
          so.gen_idx.push_back(static_cast<uint8_t>(gi));
          (void)idx;
        }
      }
    }
    const Int S(static_cast<unsigned long>(so.keys.size()));
    Int norm_order = G.order() / S;
    if (G.order() % S != 0)
      throw std::logic_error("subgroup orbit: orbit size does not divide |G|");

    // power-fusion subgroup J <= (Z/p)^* realized by N_G(<root>)
    std::vector<bool> in_j(p, false);
    in_j[1] = true;
    unsigned long j_size = 1;
    if (p > 2) {
      // uniform elements of N: random w plus the tree conjugator back to root
      RandomElements re(gens, seed ^ 0xa5a5a5a5ull);
      std::vector<Perm> ngens;
      auto j_close = [&](unsigned long j) {
        if (in_j[j]) return;
        // close under multiplication
        std::vector<unsigned long> added{j};
        in_j[j] = true;
        while (!added.empty()) {
          unsigned long a = added.back();
          added.pop_back();
          for (unsigned long b = 1; b < p; ++b)
            if (in_j[b]) {
              unsigned long c = (a * b) % p;
              if (!in_j[c]) {
                in_j[c] = true;
                added.push_back(c);
              }
            }
        }
        j_size = 0;
        for (unsigned long t = 1; t < p; ++t)
          if (in_j[t]) ++j_size;
      };
      if (norm_order > 1) {
        for (unsigned tries = 0; tries < 4000; ++tries) {
          Perm w = re.next();
          Perm y = conjugate(root, w);
          keyer.min_power(y, key.data());
          size_t e = so.keys.find(key.data());
          if (e == SIZE_MAX) throw std::logic_error("subgroup orbit: escape");
          Perm u = tree_conjugator(so, gens, e, degree);
          Perm s = w * u.inverse();
          ngens.push_back(s);
          PermGroup N(ngens);
          if (N.order() == norm_order) {
            // N fully recovered; J is generated by the realized exponents
            Perm root_elt = root;
            for (const Perm& nelt : N.generators()) {
              Perm conj_root = conjugate(root_elt, nelt);
              j_close(power_index(root_elt, conj_root, p));
            }
            break;
          }
          if (tries == 3999)
            throw std::logic_error("subgroup orbit: normalizer not recovered");
        }
      }
    }

    // classes among the powers of root: cosets of J in (Z/p)^*
    Int class_size = S * Int(j_size);
    std::vector<long> class_of_power(p, -1);
    std::vector<OrderPClass> local;
    for (unsigned long j = 1; j < p; ++j) {
      if (class_of_power[j] >= 0) continue;
      long cid = static_cast<long>(local.size());
      for (unsigned long t = 1; t < p; ++t)
        if (in_j[t]) class_of_power[(j * t) % p] = cid;
      OrderPClass cls;
      cls.size = class_size;
      local.push_back(std::move(cls));
    }

    // attach every queried element whose subgroup lies in this orbit
    for (size_t i = i0; i < elts.size(); ++i) {
      if (done[i]) continue;
      keyer.min_power(elts[i], key.data());
      size_t e = so.keys.find(key.data());
      if (e == SIZE_MAX) continue;  // different subgroup orbit
      Perm u = tree_conjugator(so, gens, e, degree);
      // root^u generates <elts[i]>; express elts[i] as a power of it
      Perm y = conjugate(root, u);
      unsigned long j = power_index(y, elts[i], p);
      local[static_cast<size_t>(class_of_power[j])].members.push_back(i);
      done[i] = true;
    }
    for (auto& cls : local)
      if (!cls.members.empty()) out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace

std::vector<OrderPClass> classify_order_p(const PermGroup& G,
                                          const std::vector<Perm>& elts,
                                          unsigned long p,
                                          ClassifyStrategy strategy,
                                          size_t element_orbit_cap,
                                          uint64_t seed) {
  for (const Perm& z : elts)
    if (perm_order(z) != p)
      throw std::invalid_argument("classify_order_p: element of wrong order");
  if (elts.empty()) return {};
  std::vector<Perm> gens = reduced_generators(G);
  switch (strategy) {
    case ClassifyStrategy::ElementOrbit:
      return classify_by_element_orbits(gens, elts, element_orbit_cap);
    case ClassifyStrategy::SubgroupOrbit:
      return classify_by_subgroup_orbits(G, gens, elts, p, seed);
    case ClassifyStrategy::Auto:
      try {
        return classify_by_element_orbits(gens, elts, element_orbit_cap);
      } catch (const std::domain_error&) {
        return classify_by_subgroup_orbits(G, gens, elts, p, seed);
      }
  }
  throw std::logic_error("classify_order_p: bad strategy");
}

}  // namespace sylint::perm
