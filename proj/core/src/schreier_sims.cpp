#include "posethom/schreier_sims.hpp"

#include "posethom/errors.hpp"

namespace posethom {

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Perm>& generators) : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw ArgumentError("StabilizerChain: generator degree mismatch");
    if (!g.is_identity()) sift_into(0, g);
  }
}

void StabilizerChain::add_generator(std::size_t level, const Perm& g) {
  if (level == levels_.size()) {
    Level fresh;
    fresh.base_point = g.first_moved();
    fresh.transversal.resize(degree_);
    fresh.transversal[fresh.base_point] = Perm::identity(degree_);
    fresh.orbit.push_back(fresh.base_point);
    levels_.push_back(std::move(fresh));
  }
  levels_[level].generators.push_back(g);
}

void StabilizerChain::close_orbit(std::size_t level, const Perm& g) {
  const auto snapshot = levels_[level].orbit;
  for (auto beta : snapshot) schreier_generator(level, *levels_[level].transversal[beta], g);
}

void StabilizerChain::extend_orbit(std::size_t level, const Perm& u) {
  Level& lv = levels_[level];
  const auto gamma = u(lv.base_point);
  lv.transversal[gamma] = u;
  lv.orbit.push_back(gamma);
  // generators of this level do not change while its orbit grows
  for (std::size_t t = 0; t < lv.generators.size(); ++t) schreier_generator(level, u, lv.generators[t]);
}

void StabilizerChain::schreier_generator(std::size_t level, const Perm& u, const Perm& s) {
  const Perm us = s * u;
  Level& lv = levels_[level];
  const auto gamma = us(lv.base_point);
  if (!lv.transversal[gamma]) {
    extend_orbit(level, us);
    return;
  }
  Perm h = lv.transversal[gamma]->inverse() * us;
  if (!h.is_identity()) sift_into(level + 1, std::move(h));
}

void StabilizerChain::sift_into(std::size_t level, Perm h) {
  const std::size_t start = level;
  for (; level < levels_.size(); ++level) {
    const Level& lv = levels_[level];
    const auto gamma = h(lv.base_point);
    if (!lv.transversal[gamma]) break;
    h = lv.transversal[gamma]->inverse() * h;
    if (h.is_identity()) return;
  }
  // h fixes every base point above `level`, so it generates there too
  for (std::size_t l = start; l <= level; ++l) add_generator(l, h);
  for (std::size_t l = level + 1; l-- > start;) close_orbit(l, h);
}

std::vector<std::uint32_t> StabilizerChain::base() const {
  std::vector<std::uint32_t> b;
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& lv : levels_) s.push_back(lv.orbit.size());
  return s;
}

BigInt StabilizerChain::order() const {
  BigInt o = 1;
  for (const auto& lv : levels_) o *= lv.orbit.size();
  return o;
}

bool StabilizerChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  Perm h = g;
  for (const auto& lv : levels_) {
    if (h.is_identity()) return true;
    const auto gamma = h(lv.base_point);
    if (!lv.transversal[gamma]) return false;
    h = lv.transversal[gamma]->inverse() * h;
  }
  return h.is_identity();
}

}  // namespace posethom
