#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace permdiam {

using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = std::size_t{1} << 16;

/// A permutation of {0,...,n-1} stored as its image sequence.
/// Composition is left-to-right: (p * q)(x) = q(p(x)).
/// Immutable after construction.
class Perm {
 public:
  Perm() = default;

  /// Identity of the given degree.
  explicit Perm(std::size_t degree);

  /// Takes ownership of an image sequence; validates it is a bijection.
  static Perm from_images(std::vector<Point> images);

  std::size_t degree() const { return img_.size(); }

  Point operator()(Point x) const { return img_[x]; }

  const std::vector<Point>& images() const { return img_; }

  Perm operator*(const Perm& q) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g^-1 * (*this) * g
  Perm power(std::int64_t e) const;

  bool is_identity() const;

  /// Order as a group element (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Smallest moved point, or degree() if identity.
  std::size_t first_moved() const;

  std::vector<Point> moved_points() const;

  /// Nontrivial cycles, each rotated to start at its least point,
  /// sorted by first point.
  std::vector<std::vector<Point>> cycles() const;

  /// "(0 1 2)(3 4)"; identity renders as "()".
  std::string cycle_string() const;

  /// Multiset of nontrivial cycle lengths, sorted ascending.
  std::vector<std::size_t> cycle_type() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  /// Lexicographic by (degree, images); total order used wherever
  /// deterministic output is required.
  bool operator<(const Perm& o) const;

  std::size_t hash() const;

 private:
  std::vector<Point> img_;
};

/// Parses disjoint-cycle notation over points 0..degree-1, e.g. "(0 1 2)(3 4)".
/// Whitespace-separated points inside parentheses; cycles juxtaposed; "()" or
/// an empty/blank string is the identity. Unnamed points are fixed.
/// Throws ParseError naming the offending token on repeated points, points
/// >= degree, or malformed parentheses.
Perm parse_cycles(std::string_view text, std::size_t degree);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace permdiam
