#include "sylint/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace sylint::perm {

void PermGroup::Level::rebuild_orbit(unsigned degree) {
  orbit.clear();
  pos.assign(degree, -1);
  tree.clear();
  orbit.push_back(beta);
  pos[beta] = 0;
  tree.emplace_back(beta, 0);
  for (size_t head = 0; head < orbit.size(); ++head) {
    uint32_t pt = orbit[head];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      uint32_t im = gens[gi][pt];
      if (pos[im] < 0) {
        pos[im] = static_cast<int32_t>(orbit.size());
        orbit.push_back(im);
        tree.emplace_back(pt, static_cast<uint32_t>(gi));
      }
    }
  }
}

Perm PermGroup::rep_from_tree(const Level& lv, uint32_t point) const {
  if (!lv.u_cache.empty()) return lv.u_cache[lv.pos[point]];
  // product of tree-edge generators along beta -> point, built back to front
  std::vector<uint32_t> genidx;
  uint32_t cur = point;
  while (cur != lv.beta) {
    const auto& [parent, gi] = lv.tree[lv.pos[cur]];
    genidx.push_back(gi);
    cur = parent;
  }
  Perm u = Perm::identity(degree_);
  for (auto it = genidx.rbegin(); it != genidx.rend(); ++it) u = u * lv.gens[*it];
  return u;
}

Perm PermGroup::transversal(size_t level, uint32_t point) const {
  const Level& lv = levels_[level];
  if (lv.pos[point] < 0) throw std::domain_error("transversal: point not in basic orbit");
  return rep_from_tree(lv, point);
}

PermGroup::PermGroup(std::vector<Perm> generators) {
  if (generators.empty()) throw std::invalid_argument("PermGroup: no generators");
  degree_ = generators[0].degree();
  for (const auto& g : generators) {
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup: degree mismatch");
    if (!g.is_identity()) gens_.push_back(g);
  }
  if (gens_.empty()) {
    // trivial group on this degree
    order_ = 1;
    return;
  }
  schreier_sims();
}

bool PermGroup::check_level(size_t i, size_t* added_at) {
  Level& lv = levels_[i];
  for (size_t oi = 0; oi < lv.orbit.size(); ++oi) {
    uint32_t delta = lv.orbit[oi];
    Perm u_delta = rep_from_tree(lv, delta);
    for (const Perm& s : lv.gens) {
      uint32_t gamma = s[delta];
      Perm u_gamma_inv = rep_from_tree(lv, gamma).inverse();
      Perm sg = u_delta * s * u_gamma_inv;
      if (sg.is_identity()) continue;
      // strip through deeper levels
      Perm h = sg;
      size_t j = i + 1;
      for (; j < levels_.size(); ++j) {
        uint32_t d = h[levels_[j].beta];
        if (levels_[j].pos[d] < 0) break;
        h = h * rep_from_tree(levels_[j], d).inverse();
      }
      if (h.is_identity()) continue;
      if (j == levels_.size()) {
        Level nl;
        nl.beta = 0;
        while (h[nl.beta] == nl.beta) ++nl.beta;
        levels_.push_back(nl);
      }
      for (size_t l = i + 1; l <= j; ++l) {
        levels_[l].gens.push_back(h);
        levels_[l].rebuild_orbit(degree_);
      }
      *added_at = j;
      return false;
    }
  }
  return true;
}

void PermGroup::schreier_sims() {
  Level l0;
  l0.gens = gens_;
  l0.beta = 0;
  bool moved = false;
  for (unsigned b = 0; b < degree_ && !moved; ++b)
    for (const auto& g : gens_)
      if (g[b] != b) {
        l0.beta = b;
        moved = true;
        break;
      }
  levels_.push_back(l0);
  levels_[0].rebuild_orbit(degree_);

  // verify levels from the deepest upwards; descend when a strong
  // generator is added
  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    size_t added = 0;
    if (check_level(static_cast<size_t>(i), &added))
      --i;
    else
      i = static_cast<long>(added);
  }

  order_ = 1;
  for (const auto& lv : levels_) order_ *= Int(static_cast<unsigned long>(lv.orbit.size()));
  base_.clear();
  for (const auto& lv : levels_) base_.push_back(lv.beta);

  // explicit transversals when small, to make representative lookups cheap
  size_t cache_cost = 0;
  for (const auto& lv : levels_) cache_cost += lv.orbit.size() * size_t(degree_);
  if (cache_cost <= 8u << 20) {
    for (auto& lv : levels_) {
      std::vector<Perm> cache(lv.orbit.size());
      cache[0] = Perm::identity(degree_);
      for (size_t k = 1; k < lv.orbit.size(); ++k) {
        const auto& [parent, gi] = lv.tree[k];
        cache[k] = cache[lv.pos[parent]] * lv.gens[gi];
      }
      lv.u_cache = std::move(cache);
    }
  }

  for (const auto& g : gens_)
    if (!sift(g).is_identity())
      throw std::logic_error("schreier_sims: generator fails to sift");
}

Perm PermGroup::sift(const Perm& g) const {
  Perm h = g;
  for (const auto& lv : levels_) {
    uint32_t d = h[lv.beta];
    if (d == lv.beta) continue;
    if (lv.pos[d] < 0) return h;
    h = h * rep_from_tree(lv, d).inverse();
  }
  return h;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).is_identity();
}

std::vector<uint32_t> PermGroup::base_images(const Perm& g) const {
  std::vector<uint32_t> out;
  out.reserve(levels_.size());
  for (const auto& lv : levels_) out.push_back(g[lv.beta]);
  return out;
}

std::optional<Perm> PermGroup::from_base_images(
    const std::vector<uint32_t>& images) const {
  if (images.size() != levels_.size()) return std::nullopt;
  std::vector<uint32_t> targets = images;
  std::vector<Perm> us;
  us.reserve(levels_.size());
  for (size_t i = 0; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    if (targets[i] >= degree_ || lv.pos[targets[i]] < 0) return std::nullopt;
    Perm u = rep_from_tree(lv, targets[i]);
    Perm uinv = u.inverse();
    for (size_t j = i + 1; j < levels_.size(); ++j) targets[j] = uinv[targets[j]];
    us.push_back(std::move(u));
  }
  Perm g = us.back();
  for (size_t i = us.size() - 1; i-- > 0;) g = g * us[i];
  for (size_t i = 0; i < levels_.size(); ++i)
    if (g[levels_[i].beta] != images[i]) return std::nullopt;
  return g;
}

std::vector<Perm> PermGroup::elements(size_t cap) const {
  if (order_ > Int(static_cast<unsigned long>(cap)))
    throw std::domain_error("elements: order exceeds enumeration cap");
  std::vector<Perm> out;
  out.push_back(Perm::identity(degree_));
  std::unordered_set<uint64_t> seen;
  auto key = [&](const Perm& p) {
    return hash_bytes(reinterpret_cast<const uint8_t*>(p.img.data()),
                      p.img.size() * sizeof(uint32_t));
  };
  seen.insert(key(out[0]));
  for (size_t head = 0; head < out.size(); ++head) {
    Perm cur = out[head];
    for (const auto& g : gens_) {
      Perm nxt = cur * g;
      uint64_t k = key(nxt);
      if (seen.count(k)) {
        // hash hit: confirm by scan (collisions are unlikely but checked)
        bool dup = false;
        for (const auto& e : out)
          if (e == nxt) {
            dup = true;
            break;
          }
        if (dup) continue;
      }
      seen.insert(k);
      out.push_back(std::move(nxt));
    }
  }
  if (Int(static_cast<unsigned long>(out.size())) != order_)
    throw std::logic_error("elements: enumeration does not match order");
  return out;
}

std::vector<uint32_t> point_orbit(const std::vector<Perm>& gens, uint32_t start) {
  if (gens.empty()) return {start};
  std::vector<int32_t> pos(gens[0].degree(), -1);
  std::vector<uint32_t> orbit{start};
  pos[start] = 0;
  for (size_t head = 0; head < orbit.size(); ++head)
    for (const auto& g : gens) {
      uint32_t im = g[orbit[head]];
      if (pos[im] < 0) {
        pos[im] = static_cast<int32_t>(orbit.size());
        orbit.push_back(im);
      }
    }
  return orbit;
}

OrbitPartition orbit_partition(const std::vector<Perm>& gens, unsigned degree) {
  OrbitPartition out;
  out.orbit_of.assign(degree, UINT32_MAX);
  for (uint32_t s = 0; s < degree; ++s) {
    if (out.orbit_of[s] != UINT32_MAX) continue;
    uint32_t id = static_cast<uint32_t>(out.sizes.size());
    std::vector<uint32_t> stack{s};
    out.orbit_of[s] = id;
    uint64_t size = 0;
    while (!stack.empty()) {
      uint32_t pt = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& g : gens) {
        uint32_t im = g[pt];
        if (out.orbit_of[im] == UINT32_MAX) {
          out.orbit_of[im] = id;
          stack.push_back(im);
        }
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

RandomElements::RandomElements(const std::vector<Perm>& gens, uint64_t seed)
    : rng_(seed ^ 0x5851f42d4c957f2dull) {
  if (gens.empty()) throw std::invalid_argument("RandomElements: no generators");
  unsigned degree = gens[0].degree();
  const size_t slots = std::max<size_t>(10, gens.size());
  for (size_t i = 0; i < slots; ++i) state_.push_back(gens[i % gens.size()]);
  acc_ = Perm::identity(degree);
  for (int burn = 0; burn < 80; ++burn) next();
}

Perm RandomElements::next() {
  std::uniform_int_distribution<size_t> pick(0, state_.size() - 1);
  size_t i = pick(rng_);
  size_t j = pick(rng_);
  while (j == i) j = pick(rng_);
  bool invert = (rng_() & 1) != 0;
  state_[i] = invert ? state_[i] * state_[j].inverse() : state_[i] * state_[j];
  acc_ = (rng_() & 1) ? acc_ * state_[i] : state_[i] * acc_;
  return acc_;
}

bool trivial_intersection(const PermGroup& H, const PermGroup& K,
                          size_t enumeration_cap) {
  const PermGroup& small = (H.order() <= K.order()) ? H : K;
  const PermGroup& large = (H.order() <= K.order()) ? K : H;
  if (small.trivial()) return true;
  auto elems = small.elements(enumeration_cap);
  for (const auto& e : elems) {
    if (e.is_identity()) continue;
    if (large.contains(e)) return false;
  }
  return true;
}

std::vector<Perm> reduced_generators(const PermGroup& G, uint64_t seed) {
  if (G.generators().size() <= 3) return G.generators();
  RandomElements re(G.generators(), seed);
  for (unsigned tries = 0; tries < 20; ++tries) {
    std::vector<Perm> cand{re.next(), re.next()};
    if (tries >= 10) cand.push_back(re.next());
    try {
      PermGroup P(cand);
      if (P.order() == G.order()) return cand;
    } catch (const std::exception&) {
    }
  }
  return G.generators();
}

}  // namespace sylint::perm
