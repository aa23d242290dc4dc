#include "core/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace permdiam {

Perm::Perm(std::size_t degree) {
  if (degree > kMaxDegree)
    throw CapacityError("degree " + std::to_string(degree) + " exceeds max degree 2^16");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm Perm::from_images(std::vector<Point> images) {
  if (images.size() > kMaxDegree)
    throw CapacityError("degree " + std::to_string(images.size()) + " exceeds max degree 2^16");
  std::vector<bool> seen(images.size(), false);
  for (Point v : images) {
    if (v >= images.size() || seen[v])
      throw DomainError("image sequence is not a bijection of {0,...," +
                        std::to_string(images.size() ? images.size() - 1 : 0) + "}");
    seen[v] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::operator*(const Perm& q) const {
  if (degree() != q.degree())
    throw DomainError("composing permutations of different degrees");
  Perm r;
  r.img_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.img_[i] = q.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const { return g.inverse() * (*this) * g; }

Perm Perm::power(std::int64_t e) const {
  Perm base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Perm r(degree());
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    std::uint64_t g = std::gcd(ord, len);
    if (len / g > (std::uint64_t{1} << 62) / ord)
      throw CapacityError("element order exceeds 2^62");
    ord = ord / g * len;
  }
  return ord;
}

std::size_t Perm::first_moved() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return i;
  return degree();
}

std::vector<Point> Perm::moved_points() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] != i) out.push_back(static_cast<Point>(i));
  return out;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<Point> cyc;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<Point>(j));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> t;
  for (const auto& c : cycles()) t.push_back(c.size());
  std::sort(t.begin(), t.end());
  return t;
}

bool Perm::operator<(const Perm& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  return img_ < o.img_;
}

std::size_t Perm::hash() const {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ull;
  for (Point v : img_) {
    h ^= static_cast<std::size_t>(v & 0xff);
    h *= 1099511628211ull;
    h ^= static_cast<std::size_t>(v >> 8);
    h *= 1099511628211ull;
  }
  return h;
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  if (degree > kMaxDegree)
    throw CapacityError("degree " + std::to_string(degree) + " exceeds max degree 2^16");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' at \"" + std::string(text.substr(i, 8)) + "\"");
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle: missing ')'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point number at \"" + std::string(text.substr(i, 8)) + "\"");
      std::size_t start = i;
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > kMaxDegree) break;
        ++i;
      }
      std::string tok(text.substr(start, i - start));
      if (v >= degree)
        throw ParseError("point " + tok + " is not in 0.." + std::to_string(degree ? degree - 1 : 0));
      if (used[v]) throw ParseError("point " + tok + " repeated");
      used[v] = true;
      cyc.push_back(static_cast<Point>(v));
    }
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k) img[cyc[k]] = cyc[k + 1];
    if (cyc.size() > 1) img[cyc.back()] = cyc.front();
    skip_ws();
  }
  return Perm::from_images(std::move(img));
}

}  // namespace permdiam
