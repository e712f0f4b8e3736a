#include "posethom/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "posethom/errors.hpp"

namespace posethom {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    const auto y = images_[x];
    if (y >= images_.size())
      throw DataError("permutation: image " + std::to_string(y + 1) + " of point " + std::to_string(x + 1) +
                      " exceeds degree " + std::to_string(images_.size()));
    if (hit[y]) throw DataError("permutation: repeated image " + std::to_string(y + 1));
    hit[y] = 1;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  for (std::size_t x = 0; x < degree; ++x) im[x] = static_cast<std::uint32_t>(x);
  Perm g;
  g.images_ = std::move(im);
  return g;
}

Perm Perm::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  for (std::size_t x = 0; x < degree; ++x) im[x] = static_cast<std::uint32_t>(x);
  std::vector<char> used(degree, 0);

  const auto fail = [&](std::size_t pos, const std::string& what) -> ParseError {
    return ParseError("cycle notation '" + std::string(text) + "' at column " + std::to_string(pos + 1) + ": " + what);
  };

  std::size_t pos = 0;
  const auto skip_blank = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_blank();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail(pos, "expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_blank();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos < text.size() && text[pos] == ',') {
        if (cycle.empty()) throw fail(pos, "unexpected ','");
        ++pos;
        skip_blank();
      }
      unsigned long v = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
      if (ec != std::errc()) throw fail(pos, "expected a point number");
      if (v < 1 || v > degree) throw fail(pos, "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      const auto x = static_cast<std::uint32_t>(v - 1);
      if (used[x]) throw DataError("cycle notation '" + std::string(text) + "': point " + std::to_string(v) +
                                   " appears twice (repeated image)");
      used[x] = 1;
      cycle.push_back(x);
      pos = static_cast<std::size_t>(ptr - text.data());
    }
    for (std::size_t t = 0; t < cycle.size(); ++t) im[cycle[t]] = cycle[(t + 1) % cycle.size()];
    skip_blank();
  }
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::uint32_t Perm::first_moved() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return static_cast<std::uint32_t>(x);
  return static_cast<std::uint32_t>(images_.size());
}

Perm Perm::inverse() const {
  Perm g;
  g.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) g.images_[images_[x]] = static_cast<std::uint32_t>(x);
  return g;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw ArgumentError("permutation product: degree mismatch");
  Perm g;
  g.images_.resize(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x) g.images_[x] = a.images_[b.images_[x]];
  return g;
}

std::string Perm::to_cycles() const {
  std::string s;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    s += '(';
    for (auto y = static_cast<std::uint32_t>(x); !seen[y]; y = images_[y]) {
      if (y != x) s += ',';
      s += std::to_string(y + 1);
      seen[y] = 1;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Partition cycle_type(const Perm& g) {
  Partition lengths;
  std::vector<char> seen(g.degree(), 0);
  for (std::uint32_t x = 0; x < g.degree(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (auto y = x; !seen[y]; y = g(y)) {
      seen[y] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

}  // namespace posethom
