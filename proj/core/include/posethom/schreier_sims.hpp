#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "posethom/permutation.hpp"
#include "posethom/qarith.hpp"

namespace posethom {

/// Base and strong generating set of a permutation group, built by the
/// deterministic incremental Schreier-Sims algorithm. Each level stores
/// explicit transversal elements, which is fine for degrees in the hundreds.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Perm>& generators);

  std::size_t degree() const { return degree_; }
  std::vector<std::uint32_t> base() const;
  std::vector<std::size_t> orbit_sizes() const;
  /// Product of the basic orbit lengths.
  BigInt order() const;
  bool contains(const Perm& g) const;

 private:
  struct Level {
    std::uint32_t base_point;
    std::vector<Perm> generators;
    std::vector<std::optional<Perm>> transversal;  // point -> u with u(base_point) = point
    std::vector<std::uint32_t> orbit;
  };

  void add_generator(std::size_t level, const Perm& g);
  void close_orbit(std::size_t level, const Perm& g);
  void extend_orbit(std::size_t level, const Perm& u);
  void schreier_generator(std::size_t level, const Perm& u, const Perm& s);
  void sift_into(std::size_t level, Perm h);

  std::size_t degree_;
  std::deque<Level> levels_;
};

}  // namespace posethom
