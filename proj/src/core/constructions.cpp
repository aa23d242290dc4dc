#include "core/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "core/action.hpp"
#include "core/engine.hpp"
#include "core/errors.hpp"
#include "core/numeric_util.hpp"

namespace permdiam {

namespace {

Perm cycle_perm(std::size_t degree, const std::vector<Point>& cyc) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i + 1 < cyc.size(); ++i) img[cyc[i]] = cyc[i + 1];
  if (cyc.size() > 1) img[cyc.back()] = cyc.front();
  return Perm::from_images(std::move(img));
}

Perm full_cycle(std::size_t degree) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>((i + 1) % degree);
  return Perm::from_images(std::move(img));
}

}  // namespace

PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group of degree 0");
  if (n == 1) return PermGroup::trivial(1);
  GenSet X(n);
  X.add("a", full_cycle(n));
  return PermGroup(std::move(X));
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw DomainError("dihedral group needs at least 3 points");
  GenSet X(n);
  X.add("r", full_cycle(n));
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>(n - 1 - i);
  X.add("s", Perm::from_images(std::move(refl)));
  return PermGroup(std::move(X));
}

PermGroup symmetric_group(std::size_t n) {
  if (n == 0) throw DomainError("symmetric group of degree 0");
  if (n == 1) return PermGroup::trivial(1);
  GenSet X(n);
  X.add("t", cycle_perm(n, {0, 1}));
  if (n > 2) X.add("c", full_cycle(n));
  return PermGroup(std::move(X));
}

PermGroup alternating_group(std::size_t n) {
  if (n < 3) return PermGroup::trivial(n == 0 ? 1 : n);
  GenSet X(n);
  X.add("t", cycle_perm(n, {0, 1, 2}));
  if (n > 3) {
    if (n % 2 == 1) {
      X.add("c", full_cycle(n));
    } else {
      std::vector<Point> cyc;
      for (std::size_t i = 1; i < n; ++i) cyc.push_back(static_cast<Point>(i));
      X.add("c", cycle_perm(n, cyc));
    }
  }
  return PermGroup(std::move(X));
}

PermGroup elementary_abelian(std::uint64_t p, std::uint32_t k) {
  if (!is_prime_u64(p)) throw DomainError("elementary abelian: p must be prime");
  if (k == 0) return PermGroup::trivial(1);
  std::size_t degree = static_cast<std::size_t>(p) * k;
  if (degree > kMaxDegree) throw CapacityError("elementary abelian degree exceeds 2^16");
  GenSet X(degree);
  for (std::uint32_t i = 0; i < k; ++i) {
    std::vector<Point> cyc;
    for (std::uint64_t j = 0; j < p; ++j) cyc.push_back(static_cast<Point>(i * p + j));
    X.add("e" + std::to_string(i), cycle_perm(degree, cyc));
  }
  return PermGroup(std::move(X));
}

PermGroup quaternion8() {
  GenSet X(8);
  X.add("i", parse_cycles("(0 1 2 3)(4 5 6 7)", 8));
  X.add("j", parse_cycles("(0 4 2 6)(1 7 3 5)", 8));
  return PermGroup(std::move(X));
}

PermGroup sl23_degree8() {
  // action on the 8 nonzero vectors of F_3^2, vector (x,y) -> index 3x+y-1
  auto vec_index = [](int x, int y) { return 3 * x + y - 1; };
  auto mat_perm = [&](int a, int b, int c, int d) {
    std::vector<Point> img(8);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        if (x == 0 && y == 0) continue;
        int nx = ((a * x + b * y) % 3 + 3) % 3;
        int ny = ((c * x + d * y) % 3 + 3) % 3;
        img[vec_index(x, y)] = static_cast<Point>(vec_index(nx, ny));
      }
    return Perm::from_images(std::move(img));
  };
  GenSet X(8);
  X.add("s", mat_perm(1, 1, 0, 1));
  X.add("t", mat_perm(0, -1, 1, 0));
  return PermGroup(std::move(X));
}

PermGroup agl1(std::uint64_t p) {
  if (!is_prime_u64(p)) throw DomainError("AGL(1,p): p must be prime");
  if (p > kMaxDegree) throw CapacityError("degree exceeds 2^16");
  std::uint64_t g = 2;
  for (;; ++g) {
    std::uint64_t x = g % p, ord = 1;
    while (x != 1) {
      x = x * g % p;
      ++ord;
    }
    if (ord == p - 1) break;
  }
  GenSet X(p);
  X.add("t", full_cycle(p));
  std::vector<Point> mul(p);
  for (std::uint64_t z = 0; z < p; ++z) mul[z] = static_cast<Point>(z * g % p);
  X.add("m", Perm::from_images(std::move(mul)));
  return PermGroup(std::move(X));
}

PermGroup psl2(std::uint64_t p) {
  if (!is_prime_u64(p) || p < 5) throw DomainError("PSL(2,p) needs a prime p >= 5");
  std::size_t degree = static_cast<std::size_t>(p) + 1;  // projective line, infinity = p
  if (degree > kMaxDegree) throw CapacityError("degree exceeds 2^16");
  std::vector<Point> t(degree), s(degree);
  for (std::uint64_t z = 0; z < p; ++z) t[z] = static_cast<Point>((z + 1) % p);
  t[p] = static_cast<Point>(p);
  // s: z -> -1/z, 0 <-> infinity
  auto inv_mod = [&](std::uint64_t z) { return powmod_u64(z, p - 2, p); };
  s[0] = static_cast<Point>(p);
  s[p] = 0;
  for (std::uint64_t z = 1; z < p; ++z) s[z] = static_cast<Point>((p - inv_mod(z)) % p);
  GenSet X(degree);
  X.add("t", Perm::from_images(std::move(t)));
  X.add("s", Perm::from_images(std::move(s)));
  return PermGroup(std::move(X));
}

PermGroup frobenius21() {
  GenSet X(7);
  X.add("t", full_cycle(7));
  std::vector<Point> m(7);
  for (std::uint64_t z = 0; z < 7; ++z) m[z] = static_cast<Point>(z * 2 % 7);
  X.add("m", Perm::from_images(std::move(m)));
  return PermGroup(std::move(X));
}

PermGroup symmetric_on_2subsets(std::size_t n) {
  if (n < 3) throw DomainError("2-subset action needs n >= 3");
  std::size_t degree = n * (n - 1) / 2;
  if (degree > kMaxDegree) throw CapacityError("degree exceeds 2^16");
  std::vector<std::vector<std::size_t>> pair_index(n, std::vector<std::size_t>(n));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pair_index[i][j] = pair_index[j][i] = idx++;
    }
  PermGroup sn = symmetric_group(n);
  GenSet X(degree);
  for (const auto& [label, g] : sn.gens().entries()) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        img[pair_index[i][j]] = static_cast<Point>(pair_index[g(static_cast<Point>(i))][g(static_cast<Point>(j))]);
    X.add(label, Perm::from_images(std::move(img)));
  }
  return PermGroup(std::move(X));
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
  std::size_t n = A.degree() + B.degree();
  if (n > kMaxDegree) throw CapacityError("direct product degree exceeds 2^16");
  GenSet X(n);
  for (const auto& [label, p] : A.gens().entries()) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < A.degree(); ++i) img[i] = p(static_cast<Point>(i));
    for (std::size_t i = A.degree(); i < n; ++i) img[i] = static_cast<Point>(i);
    X.add(label, Perm::from_images(std::move(img)));
  }
  for (const auto& [label, p] : B.gens().entries()) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < A.degree(); ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < B.degree(); ++i)
      img[A.degree() + i] = static_cast<Point>(A.degree() + p(static_cast<Point>(i)));
    std::string l = label;
    while (X.find(l)) l += "'";
    X.add(l, Perm::from_images(std::move(img)));
  }
  return PermGroup(std::move(X));
}

PermGroup wreath(const PermGroup& bottom, const PermGroup& top, WreathAction action) {
  std::size_t d = bottom.degree(), e = top.degree();
  bool top_transitive = is_transitive(top.gen_perms(), e);

  if (action == WreathAction::Imprimitive) {
    std::size_t n = d * e;
    if (d == 0 || e == 0 || n > kMaxDegree)
      throw CapacityError("imprimitive wreath degree exceeds 2^16");
    GenSet X(n);
    auto add_block_copy = [&](const std::string& label, const Perm& g, std::size_t b) {
      std::vector<Point> img(n);
      for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
      for (std::size_t i = 0; i < d; ++i) img[b * d + i] = static_cast<Point>(b * d + g(static_cast<Point>(i)));
      X.add(label, Perm::from_images(std::move(img)));
    };
    for (const auto& [label, g] : bottom.gens().entries()) {
      if (top_transitive) {
        add_block_copy(label, g, 0);
      } else {
        for (std::size_t b = 0; b < e; ++b) add_block_copy(label + "@" + std::to_string(b), g, b);
      }
    }
    for (const auto& [label, t] : top.gens().entries()) {
      std::vector<Point> img(n);
      for (std::size_t b = 0; b < e; ++b)
        for (std::size_t i = 0; i < d; ++i)
          img[b * d + i] = static_cast<Point>(t(static_cast<Point>(b)) * d + i);
      X.add("t_" + label, Perm::from_images(std::move(img)));
    }
    return PermGroup(std::move(X));
  }

  // product action on tuples; coordinate i is the i-th base-d digit
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < e; ++i) {
    n *= d;
    if (n > kMaxDegree) throw CapacityError("product-action degree exceeds 2^16");
  }
  std::vector<std::uint64_t> pow(e + 1, 1);
  for (std::size_t i = 0; i < e; ++i) pow[i + 1] = pow[i] * d;
  GenSet X(n);
  auto add_coord_copy = [&](const std::string& label, const Perm& g, std::size_t c) {
    std::vector<Point> img(n);
    for (std::uint64_t x = 0; x < n; ++x) {
      std::uint64_t digit = (x / pow[c]) % d;
      std::uint64_t y = x - digit * pow[c] + g(static_cast<Point>(digit)) * pow[c];
      img[x] = static_cast<Point>(y);
    }
    X.add(label, Perm::from_images(std::move(img)));
  };
  for (const auto& [label, g] : bottom.gens().entries()) {
    if (top_transitive) {
      add_coord_copy(label, g, 0);
    } else {
      for (std::size_t c = 0; c < e; ++c) add_coord_copy(label + "@" + std::to_string(c), g, c);
    }
  }
  for (const auto& [label, t] : top.gens().entries()) {
    std::vector<Point> img(n);
    Perm tinv = t.inverse();
    for (std::uint64_t x = 0; x < n; ++x) {
      std::uint64_t y = 0;
      for (std::size_t i = 0; i < e; ++i) {
        std::uint64_t digit = (x / pow[tinv(static_cast<Point>(i))]) % d;
        y += digit * pow[i];
      }
      img[x] = static_cast<Point>(y);
    }
    X.add("t_" + label, Perm::from_images(std::move(img)));
  }
  return PermGroup(std::move(X));
}

PermGroup iterated_wreath_a5(std::uint32_t h, WreathAction action) {
  if (h == 0) throw DomainError("iterated wreath needs h >= 1");
  PermGroup w = alternating_group(5);
  for (std::uint32_t i = 2; i <= h; ++i)
    w = wreath(alternating_group(5), w, i == h ? action : WreathAction::Imprimitive);
  return w;
}

PermGroup affine_deleted_module(std::uint32_t n, std::uint64_t p) {
  if (!is_prime_u64(p)) throw DomainError("affine deleted module: p must be prime");
  if (n < 3) throw DomainError("affine deleted module needs n >= 3");
  if (n % p == 0)
    throw DomainError("affine deleted module requires p not dividing n (p | n given)");
  std::uint64_t degree = 1;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    degree *= p;
    if (degree > kMaxDegree) throw CapacityError("affine module degree exceeds 2^16");
  }

  auto decode = [&](std::uint64_t idx) {
    std::vector<std::uint64_t> w(n);
    std::uint64_t sum = 0;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      w[i] = idx % p;
      sum += w[i];
      idx /= p;
    }
    w[n - 1] = (p - sum % p) % p;
    return w;
  };
  auto encode = [&](const std::vector<std::uint64_t>& w) {
    std::uint64_t idx = 0, mult = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      idx += (w[i] % p) * mult;
      mult *= p;
    }
    return idx;
  };

  GenSet X(degree);
  {
    std::vector<Point> img(degree);
    for (std::uint64_t x = 0; x < degree; ++x) {
      auto w = decode(x);
      w[0] = (w[0] + 1) % p;
      w[1] = (w[1] + p - 1) % p;
      img[x] = static_cast<Point>(encode(w));
    }
    X.add("v", Perm::from_images(std::move(img)));
  }
  PermGroup an = alternating_group(n);
  std::size_t gi = 0;
  for (const auto& [label, sigma] : an.gens().entries()) {
    (void)label;
    Perm sinv = sigma.inverse();
    std::vector<Point> img(degree);
    for (std::uint64_t x = 0; x < degree; ++x) {
      auto w = decode(x);
      std::vector<std::uint64_t> u(n);
      for (std::uint32_t i = 0; i < n; ++i) u[i] = w[sinv(static_cast<Point>(i))];
      img[x] = static_cast<Point>(encode(u));
    }
    X.add("a" + std::to_string(gi++), Perm::from_images(std::move(img)));
  }
  return PermGroup(std::move(X));
}

PermGroup grigorchuk_level(std::uint32_t h) {
  if (h == 0) throw DomainError("grigorchuk level needs h >= 1");
  if (h > 16) throw CapacityError("grigorchuk degree exceeds 2^16");
  std::size_t n = std::size_t{1} << h;
  // levelwise image arrays, vertices read as binary strings (first letter
  // most significant); identities at level 0
  std::vector<std::vector<Point>> A(h + 1), B(h + 1), C(h + 1), D(h + 1);
  A[0] = B[0] = C[0] = D[0] = {0};
  for (std::uint32_t k = 1; k <= h; ++k) {
    std::size_t m = std::size_t{1} << k, half = m >> 1;
    A[k].resize(m);
    B[k].resize(m);
    C[k].resize(m);
    D[k].resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      A[k][i] = static_cast<Point>(i < half ? i + half : i - half);
      if (i < half) {
        B[k][i] = A[k - 1][i];
        C[k][i] = A[k - 1][i];
        D[k][i] = static_cast<Point>(i);
      } else {
        B[k][i] = static_cast<Point>(half + C[k - 1][i - half]);
        C[k][i] = static_cast<Point>(half + D[k - 1][i - half]);
        D[k][i] = static_cast<Point>(half + B[k - 1][i - half]);
      }
    }
  }
  GenSet X(n);
  X.add("a", Perm::from_images(std::move(A[h])));
  X.add("b", Perm::from_images(std::move(B[h])));
  X.add("c", Perm::from_images(std::move(C[h])));
  X.add("d", Perm::from_images(std::move(D[h])));
  return PermGroup(std::move(X));
}

SpinalSpec grigorchuk_spec(std::uint32_t levels) {
  SpinalSpec spec;
  {
    GenSet A(2);
    A.add("a", parse_cycles("(0 1)", 2));
    spec.rooted = PermGroup(std::move(A));
  }
  GenSet B(6);
  B.add("b", parse_cycles("(0 1)(2 3)", 6));
  B.add("c", parse_cycles("(0 1)(4 5)", 6));
  B.add("d", parse_cycles("(2 3)(4 5)", 6));
  spec.directed = std::move(B);
  spec.coord_offset = {0, 2, 4};
  spec.coord_size = {2, 2, 2};
  spec.degrees.assign(levels, 2);
  for (std::uint32_t i = 2; i <= levels; ++i)
    spec.alpha.push_back({static_cast<int>((i - 2) % 3)});
  return spec;
}

SpinalSpec mixed_spinal_spec(std::uint32_t levels) {
  SpinalSpec spec;
  {
    GenSet A(2);
    A.add("a", parse_cycles("(0 1)", 2));
    spec.rooted = PermGroup(std::move(A));
  }
  GenSet B(11);
  B.add("b", parse_cycles("(0 1)(2 3)", 11));
  B.add("c", parse_cycles("(0 1)(4 5)", 11));
  B.add("x", parse_cycles("(6 7 8 9 10)", 11));
  B.add("y", parse_cycles("(6 7 8)", 11));
  spec.directed = std::move(B);
  spec.coord_offset = {0, 2, 4, 6};
  spec.coord_size = {2, 2, 2, 5};
  // degrees 2,2,5,2,2,2,5,...: every 5 is followed by three 2s
  spec.degrees.push_back(2);
  std::uint32_t since_five = 3;
  for (std::uint32_t i = 2; i <= levels; ++i) {
    if (since_five >= 3 && i >= 3) {
      spec.degrees.push_back(5);
      since_five = 0;
    } else {
      spec.degrees.push_back(2);
      ++since_five;
    }
  }
  std::uint32_t binary_count = 0;
  for (std::uint32_t i = 2; i <= levels; ++i) {
    std::size_t di = spec.degrees[i - 1];
    std::vector<int> row(spec.degrees[i - 2] - 1, -1);
    row[0] = (di == 2) ? static_cast<int>(binary_count++ % 3) : 3;
    spec.alpha.push_back(std::move(row));
  }
  return spec;
}

PermGroup spinal_level(const SpinalSpec& spec, std::uint32_t h) {
  if (h == 0) throw DomainError("spinal level needs h >= 1");
  if (h > spec.degrees.size())
    throw DomainError("spinal spec supplies only " + std::to_string(spec.degrees.size()) +
                      " levels");
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    n *= spec.degrees[i];
    if (n > kMaxDegree) throw CapacityError("spinal degree exceeds 2^16");
  }
  // directed generators must preserve every coordinate domain
  for (const auto& [label, b] : spec.directed.entries()) {
    for (std::size_t c = 0; c < spec.coord_offset.size(); ++c) {
      for (std::size_t i = 0; i < spec.coord_size[c]; ++i) {
        Point y = b(static_cast<Point>(spec.coord_offset[c] + i));
        if (y < spec.coord_offset[c] || y >= spec.coord_offset[c] + spec.coord_size[c])
          throw DomainError("directed generator \"" + label + "\" does not preserve coordinate " +
                            std::to_string(c));
      }
    }
  }
  // spherical transitivity of every level in use
  if (!is_transitive(spec.rooted.gen_perms(), spec.degrees[0]))
    throw DomainError("spherical transitivity fails at level 1");
  for (std::uint32_t i = 2; i <= h; ++i) {
    std::size_t di = spec.degrees[i - 1];
    std::vector<Perm> level_perms;
    for (int c : spec.alpha[i - 2]) {
      if (c < 0) continue;
      if (spec.coord_size[c] != di)
        throw DomainError("alpha coordinate size mismatch at level " + std::to_string(i));
      for (const auto& [label, b] : spec.directed.entries()) {
        (void)label;
        std::vector<Point> img(di);
        for (std::size_t x = 0; x < di; ++x)
          img[x] = static_cast<Point>(b(static_cast<Point>(spec.coord_offset[c] + x)) -
                                      spec.coord_offset[c]);
        level_perms.push_back(Perm::from_images(std::move(img)));
      }
    }
    if (!is_transitive(level_perms, di))
      throw DomainError("spherical transitivity fails at level " + std::to_string(i));
  }

  std::vector<std::uint64_t> suffix(h + 1, 1);
  for (std::uint32_t i = h; i-- > 0;) suffix[i] = suffix[i + 1] * spec.degrees[i];
  auto decode = [&](std::uint64_t idx, std::vector<std::size_t>& w) {
    for (std::uint32_t i = 0; i < h; ++i) {
      w[i] = idx / suffix[i + 1];
      idx %= suffix[i + 1];
    }
  };

  GenSet X(n);
  for (const auto& [label, a] : spec.rooted.gens().entries()) {
    std::vector<Point> img(n);
    for (std::uint64_t x = 0; x < n; ++x) {
      std::uint64_t first = x / suffix[1];
      std::uint64_t y = x - first * suffix[1] + a(static_cast<Point>(first)) * suffix[1];
      img[x] = static_cast<Point>(y);
    }
    X.add(label, Perm::from_images(std::move(img)));
  }
  std::vector<std::size_t> w(h);
  for (const auto& [label, b] : spec.directed.entries()) {
    std::vector<Point> img(n);
    for (std::uint64_t x = 0; x < n; ++x) {
      decode(x, w);
      std::uint32_t t = 0;
      while (t < h && w[t] == spec.degrees[t] - 1) ++t;
      // fixed if the whole prefix is maximal or the first non-maximal
      // letter is at the last level (nothing below to act on)
      if (t >= h - 1) {
        img[x] = static_cast<Point>(x);
        continue;
      }
      int c = spec.alpha[t + 2 - 2][w[t]];
      if (c < 0) {
        img[x] = static_cast<Point>(x);
        continue;
      }
      std::uint64_t digit = w[t + 1];
      std::uint64_t image = b(static_cast<Point>(spec.coord_offset[c] + digit)) -
                            spec.coord_offset[c];
      std::uint64_t y = x - digit * suffix[t + 2] + image * suffix[t + 2];
      img[x] = static_cast<Point>(y);
    }
    X.add(label, Perm::from_images(std::move(img)));
  }
  return PermGroup(std::move(X));
}

namespace {

PermGroup classic_by_name(const std::string& name) {
  if (name.size() < 2) throw ParseError("unknown group name \"" + name + "\"");
  char kind = name[0];
  std::size_t n = std::stoul(name.substr(1));
  switch (kind) {
    case 'C':
      return cyclic_group(n);
    case 'S':
      return symmetric_group(n);
    case 'A':
      return alternating_group(n);
    case 'D':
      return dihedral_group(n);
    default:
      throw ParseError("unknown group name \"" + name + "\"");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::vector<CorpusEntry> primitive_corpus(std::size_t max_degree) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 5; n <= max_degree; ++n) {
    out.push_back({"alternating:" + std::to_string(n), alternating_group(n),
                   alternating_group(n)});
    out.push_back({"symmetric:" + std::to_string(n), symmetric_group(n), symmetric_group(n)});
  }
  for (std::uint64_t p = 2; p <= max_degree; ++p) {
    if (!is_prime_u64(p)) continue;
    out.push_back({"cyclic:" + std::to_string(p), cyclic_group(p), cyclic_group(p)});
    if (p >= 3)
      out.push_back({"agl1:" + std::to_string(p), agl1(p), agl1(p)});
  }
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23}) {
    if (p + 1 <= max_degree)
      out.push_back({"psl2:" + std::to_string(p), psl2(p), psl2(p)});
  }
  if (max_degree >= 3125)
    out.push_back({"wreath:A5^2:product", iterated_wreath_a5(2, WreathAction::Product),
                   iterated_wreath_a5(2, WreathAction::Imprimitive)});
  for (std::size_t n = 5; n <= 10; ++n) {
    if (n * (n - 1) / 2 <= max_degree)
      out.push_back({"symmetric:" + std::to_string(n) + ":2sets", symmetric_on_2subsets(n),
                     symmetric_group(n)});
  }
  return out;
}

std::vector<CorpusEntry> transitive_corpus(std::uint64_t max_order) {
  std::vector<std::pair<std::string, PermGroup>> all;
  for (std::size_t n = 2; n <= 32; ++n)
    all.emplace_back("cyclic:" + std::to_string(n), cyclic_group(n));
  for (std::size_t n = 3; n <= 16; ++n)
    all.emplace_back("dihedral:" + std::to_string(n), dihedral_group(n));
  for (std::size_t n = 3; n <= 7; ++n)
    all.emplace_back("symmetric:" + std::to_string(n), symmetric_group(n));
  for (std::size_t n = 4; n <= 7; ++n)
    all.emplace_back("alternating:" + std::to_string(n), alternating_group(n));
  all.emplace_back("q8", quaternion8());
  all.emplace_back("sl23", sl23_degree8());
  all.emplace_back("frob21", frobenius21());
  for (std::uint64_t p : {5, 7, 11, 13}) all.emplace_back("agl1:" + std::to_string(p), agl1(p));
  for (std::uint64_t p : {7, 11, 13, 17, 19, 23})
    all.emplace_back("psl2:" + std::to_string(p), psl2(p));
  all.emplace_back("wreath:C2:C2:imprimitive",
                   wreath(cyclic_group(2), cyclic_group(2), WreathAction::Imprimitive));
  all.emplace_back("wreath:C2:C3:imprimitive",
                   wreath(cyclic_group(2), cyclic_group(3), WreathAction::Imprimitive));
  all.emplace_back("wreath:C3:C2:imprimitive",
                   wreath(cyclic_group(3), cyclic_group(2), WreathAction::Imprimitive));
  all.emplace_back("wreath:S3:S2:imprimitive",
                   wreath(symmetric_group(3), symmetric_group(2), WreathAction::Imprimitive));
  all.emplace_back("wreath:C3:C3:imprimitive",
                   wreath(cyclic_group(3), cyclic_group(3), WreathAction::Imprimitive));
  for (std::uint32_t h : {3, 4, 5})
    all.emplace_back("grigorchuk:h=" + std::to_string(h), grigorchuk_level(h));
  all.emplace_back("affine:4:3", affine_deleted_module(4, 3));
  all.emplace_back("affine:5:2", affine_deleted_module(5, 2));
  all.emplace_back("affine:4:5", affine_deleted_module(4, 5));
  all.emplace_back("affine:4:7", affine_deleted_module(4, 7));

  std::vector<CorpusEntry> out;
  for (auto& [label, g] : all) {
    if (g.order() <= BigInt(max_order)) out.push_back({label, g, g});
  }
  return out;
}

std::vector<CorpusEntry> soluble_corpus(std::uint64_t max_order) {
  std::vector<CorpusEntry> out;
  for (auto& e : transitive_corpus(max_order)) {
    if (is_soluble(e.group)) out.push_back(std::move(e));
  }
  for (auto& a : abelian_groups_upto(std::min<std::uint64_t>(max_order, 48))) {
    bool dup = false;
    for (const auto& e : out)
      if (e.label == a.label) dup = true;
    if (!dup && a.group.order() > 1 && !is_transitive(a.group.gen_perms(), a.group.degree()))
      out.push_back({a.label, a.group, a.group});
  }
  return out;
}

std::vector<AbelianEntry> abelian_groups_upto(std::uint64_t max_order) {
  // one entry per multiset of prime-power cyclic factors: pick a prime, pick
  // a non-increasing sequence of p-power block sizes, move to larger primes
  std::vector<AbelianEntry> out;
  std::vector<std::vector<std::uint64_t>> types;
  std::function<void(std::uint64_t, std::uint64_t, std::vector<std::uint64_t>&)> go =
      [&](std::uint64_t product, std::uint64_t min_prime, std::vector<std::uint64_t>& acc) {
        types.push_back(acc);
        for (std::uint64_t p = min_prime; p * product <= max_order; ++p) {
          if (!is_prime_u64(p)) continue;
          std::vector<std::uint64_t> powers;
          for (std::uint64_t q = p; q * product <= max_order; q *= p) powers.push_back(q);
          std::vector<std::uint64_t> blocks;
          std::function<void(std::uint64_t, std::size_t)> pgo = [&](std::uint64_t prod2,
                                                                    std::size_t max_bi) {
            if (!blocks.empty()) {
              std::size_t before = acc.size();
              for (std::uint64_t b : blocks) acc.push_back(b);
              go(prod2, p + 1, acc);
              acc.resize(before);
            }
            for (std::size_t bi = 0; bi < std::min(max_bi, powers.size()); ++bi) {
              if (powers[bi] > max_order / prod2) break;
              blocks.push_back(powers[bi]);
              pgo(prod2 * powers[bi], bi + 1);
              blocks.pop_back();
            }
          };
          pgo(product, powers.size());
        }
      };
  std::vector<std::uint64_t> acc;
  go(1, 2, acc);

  for (auto& type : types) {
    // invariant factors: repeatedly take the largest remaining power of
    // each prime; the group and the label are built from the chain
    std::map<std::uint64_t, std::vector<std::uint64_t>> per_prime;
    for (std::uint64_t q : type) {
      std::uint64_t p = factorize_u64(q).begin()->first;
      per_prime[p].push_back(q);
    }
    std::size_t k = 0;
    for (auto& [p, qs] : per_prime) {
      std::sort(qs.rbegin(), qs.rend());
      k = std::max(k, qs.size());
    }
    std::vector<std::uint64_t> divisors(k, 1);
    for (auto& [p, qs] : per_prime)
      for (std::size_t i = 0; i < qs.size(); ++i) divisors[i] *= qs[i];
    std::reverse(divisors.begin(), divisors.end());

    PermGroup g = PermGroup::trivial(1);
    std::string label = "abelian:";
    if (divisors.empty()) label += "1";
    bool first = true;
    for (std::uint64_t d : divisors) {
      PermGroup c = cyclic_group(d);
      g = first ? c : direct_product(g, c);
      first = false;
      if (label.back() != ':') label += "x";
      label += "C" + std::to_string(d);
    }
    out.push_back({label, g, divisors});
  }
  std::sort(out.begin(), out.end(), [](const AbelianEntry& a, const AbelianEntry& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.label < b.label;
  });
  return out;
}

PermGroup construct_by_label(const std::string& label) {
  auto parts = split(label, ':');
  const std::string& head = parts[0];
  auto need = [&](std::size_t n) {
    if (parts.size() != n) throw ParseError("bad label \"" + label + "\"");
  };
  try {
    if (head == "trivial") {
      need(2);
      return PermGroup::trivial(std::stoul(parts[1]));
    }
    if (head == "cyclic") {
      need(2);
      return cyclic_group(std::stoul(parts[1]));
    }
    if (head == "dihedral") {
      need(2);
      return dihedral_group(std::stoul(parts[1]));
    }
    if (head == "symmetric") {
      if (parts.size() == 3 && parts[2] == "2sets")
        return symmetric_on_2subsets(std::stoul(parts[1]));
      need(2);
      return symmetric_group(std::stoul(parts[1]));
    }
    if (head == "alternating") {
      need(2);
      return alternating_group(std::stoul(parts[1]));
    }
    if (head == "elemab") {
      need(3);
      return elementary_abelian(std::stoull(parts[1]), std::stoul(parts[2]));
    }
    if (head == "q8") return quaternion8();
    if (head == "sl23") return sl23_degree8();
    if (head == "frob21") return frobenius21();
    if (head == "agl1") {
      need(2);
      return agl1(std::stoull(parts[1]));
    }
    if (head == "psl2") {
      need(2);
      return psl2(std::stoull(parts[1]));
    }
    if (head == "grigorchuk") {
      need(2);
      if (parts[1].rfind("h=", 0) != 0) throw ParseError("bad label \"" + label + "\"");
      return grigorchuk_level(std::stoul(parts[1].substr(2)));
    }
    if (head == "spinal") {
      need(3);
      if (parts[2].rfind("h=", 0) != 0) throw ParseError("bad label \"" + label + "\"");
      std::uint32_t h = std::stoul(parts[2].substr(2));
      if (parts[1] == "grig") return spinal_level(grigorchuk_spec(h), h);
      if (parts[1] == "mixed") return spinal_level(mixed_spinal_spec(h), h);
      throw ParseError("unknown spinal spec \"" + parts[1] + "\"");
    }
    if (head == "affine") {
      need(3);
      return affine_deleted_module(std::stoul(parts[1]), std::stoull(parts[2]));
    }
    if (head == "abelian") {
      need(2);
      if (parts[1] == "1") return PermGroup::trivial(1);
      PermGroup g = PermGroup::trivial(1);
      bool first = true;
      for (const auto& piece : split(parts[1], 'x')) {
        if (piece.empty() || piece[0] != 'C') throw ParseError("bad abelian type \"" + label + "\"");
        PermGroup c = cyclic_group(std::stoull(piece.substr(1)));
        g = first ? c : direct_product(g, c);
        first = false;
      }
      return g;
    }
    if (head == "wreath") {
      WreathAction act;
      const std::string& akey = parts.back();
      if (akey == "imprimitive")
        act = WreathAction::Imprimitive;
      else if (akey == "product")
        act = WreathAction::Product;
      else
        throw ParseError("wreath label must end in imprimitive|product: \"" + label + "\"");
      if (parts.size() == 3) {
        auto caret = parts[1].find('^');
        if (caret == std::string::npos || parts[1].substr(0, caret) != "A5")
          throw ParseError("bad wreath label \"" + label + "\"");
        return iterated_wreath_a5(std::stoul(parts[1].substr(caret + 1)), act);
      }
      need(4);
      return wreath(classic_by_name(parts[1]), classic_by_name(parts[2]), act);
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("bad number in label \"" + label + "\"");
  } catch (const std::out_of_range&) {
    throw ParseError("bad number in label \"" + label + "\"");
  }
  throw ParseError("unknown corpus label \"" + label + "\"");
}

std::vector<std::string> label_grammar_help() {
  return {
      "trivial:N", "cyclic:N", "dihedral:N", "symmetric:N", "symmetric:N:2sets",
      "alternating:N", "elemab:P:K", "abelian:C2xC4", "q8", "sl23", "frob21",
      "agl1:P", "psl2:P", "grigorchuk:h=H", "spinal:grig:h=H", "spinal:mixed:h=H",
      "affine:N:P", "wreath:A5^H:imprimitive|product", "wreath:G1:G2:imprimitive|product",
  };
}

}  // namespace permdiam
