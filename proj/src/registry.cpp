#include "fusion/registry.hpp"

#include <functional>
#include <numeric>
#include <regex>

#include "fusion/error.hpp"
#include "fusion/numbers.hpp"

namespace fusion {

namespace {

using Matrix = std::vector<std::vector<long>>;

long mod(long a, long p) { return ((a % p) + p) % p; }

GroupPtr with_label(const GroupPtr& g, std::string label) {
  return FiniteGroup::generate(g->degree(), g->generators(), std::move(label));
}

GroupPtr from_images(std::size_t degree, const std::vector<std::vector<Point>>& gens, std::string label) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.emplace_back(g);
  return FiniteGroup::generate(degree, std::move(perms), std::move(label));
}

/// Left regular representation of a group given by a multiplication rule.
GroupPtr regular(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                 const std::vector<std::size_t>& gens, std::string label) {
  std::vector<std::vector<Point>> perms;
  for (std::size_t g : gens) {
    std::vector<Point> im(n);
    for (std::size_t x = 0; x < n; ++x) im[x] = static_cast<Point>(mul(g, x));
    perms.push_back(std::move(im));
  }
  return from_images(n, perms, std::move(label));
}

GroupPtr cyclic(std::size_t n, std::string label) {
  if (n == 1) return FiniteGroup::generate(1, {}, std::move(label));
  std::vector<Point> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<Point>((i + 1) % n);
  return from_images(n, {im}, std::move(label));
}

GroupPtr symmetric(std::size_t n, std::string label) {
  if (n == 1) return FiniteGroup::generate(1, {}, std::move(label));
  std::vector<Point> t(n), c(n);
  std::iota(t.begin(), t.end(), Point{0});
  std::swap(t[0], t[1]);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
  return from_images(n, {t, c}, std::move(label));
}

GroupPtr alternating(std::size_t n, std::string label) {
  if (n < 3) return FiniteGroup::generate(n == 0 ? 1 : n, {}, std::move(label));
  std::vector<Point> three(n), c(n);
  std::iota(three.begin(), three.end(), Point{0});
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::iota(c.begin(), c.end(), Point{0});
  // (0 1 ... n-1) for odd n, (1 2 ... n-1) for even n.
  const std::size_t start = (n % 2 == 1) ? 0 : 1;
  for (std::size_t i = start; i < n; ++i) c[i] = static_cast<Point>(i + 1 < n ? i + 1 : start);
  return from_images(n, {three, c}, std::move(label));
}

GroupPtr dihedral(std::size_t order, std::string label) {
  const std::size_t n = order / 2;
  if (n == 2) return direct_product(cyclic(2, {}), cyclic(2, {}), std::move(label));
  std::vector<Point> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((2 * n - i + (n % 2 == 0 ? 2 : 0)) % n);
  }
  // For D8 this gives (0 1 2 3) and (0 2), matching <(1234),(13)>.
  return from_images(n, {rot, refl}, std::move(label));
}

/// Metacyclic 2-groups <x, y> of order 2m with y x y^-1 = x^s and y^2 = x^t.
GroupPtr metacyclic_two_generator(std::size_t m, std::size_t s, std::size_t t, std::string label) {
  auto enc = [m](std::size_t a, std::size_t b) { return b * m + a; };
  auto mul = [=](std::size_t u, std::size_t v) {
    const std::size_t a = u % m, b = u / m, c = v % m, d = v / m;
    if (b == 0) return enc((a + c) % m, d);
    const std::size_t conj_c = (c * s) % m;  // y x^c = x^(cs) y
    std::size_t exp = (a + conj_c) % m;
    if (d == 0) return enc(exp, 1);
    exp = (exp + t) % m;
    return enc(exp, 0);
  };
  return regular(2 * m, mul, {enc(1, 0), enc(0, 1)}, std::move(label));
}

std::size_t unit_order(std::size_t r, std::size_t m) {
  std::size_t k = 1;
  std::size_t x = r % m;
  while (x != 1 % m) {
    x = (x * r) % m;
    ++k;
    if (k > m) return 0;
  }
  return k;
}

GroupPtr semidirect_cyclic(std::size_t m, std::size_t k, std::string label) {
  std::size_t r = 1;
  std::size_t best = 1;
  for (std::size_t cand = 2; cand < m; ++cand) {
    if (std::gcd(cand, m) != 1) continue;
    const std::size_t o = unit_order(cand, m);
    if (o > 1 && k % o == 0 && o > best) {
      best = o;
      r = cand;
    }
  }
  if (r == 1) throw FusionError(ErrorKind::UnknownName, "no nontrivial action of C" + std::to_string(k) +
                                                            " on C" + std::to_string(m));
  std::vector<std::size_t> rpow(k);
  rpow[0] = 1;
  for (std::size_t i = 1; i < k; ++i) rpow[i] = (rpow[i - 1] * r) % m;
  auto mul = [=](std::size_t u, std::size_t v) {
    const std::size_t a = u % m, b = u / m, c = v % m, d = v / m;
    return ((b + d) % k) * m + (a + rpow[b] * c) % m;
  };
  return regular(m * k, mul, {1, m}, std::move(label));
}

GroupPtr wreath(std::size_t p, std::string label) {
  const std::size_t n = p * p;
  std::vector<Point> base(n), top(n);
  std::iota(base.begin(), base.end(), Point{0});
  for (std::size_t i = 0; i < p; ++i) base[i] = static_cast<Point>((i + 1) % p);
  for (std::size_t blk = 0; blk < p; ++blk)
    for (std::size_t i = 0; i < p; ++i) top[blk * p + i] = static_cast<Point>(((blk + 1) % p) * p + i);
  return from_images(n, {base, top}, std::move(label));
}

std::vector<long> decode(std::size_t v, std::size_t n, long p) {
  std::vector<long> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<long>(v % p);
    v /= p;
  }
  return out;
}

std::size_t encode(const std::vector<long>& x, long p) {
  std::size_t v = 0;
  for (std::size_t i = x.size(); i-- > 0;) v = v * p + static_cast<std::size_t>(mod(x[i], p));
  return v;
}

std::vector<long> apply(const Matrix& m, const std::vector<long>& x, long p) {
  std::vector<long> y(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] = mod(y[i] + m[i][j] * x[j], p);
  return y;
}

/// Matrices acting on nonzero vectors (point = encoding - 1).
GroupPtr linear_on_vectors(std::size_t n, long p, const std::vector<Matrix>& mats, std::string label) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(p);
  std::vector<std::vector<Point>> gens;
  for (const auto& m : mats) {
    std::vector<Point> im(total - 1);
    for (std::size_t v = 1; v < total; ++v)
      im[v - 1] = static_cast<Point>(encode(apply(m, decode(v, n, p), p), p) - 1);
    gens.push_back(std::move(im));
  }
  return from_images(total - 1, gens, std::move(label));
}

/// Affine group generated by the unit translation and the given matrices.
GroupPtr affine(std::size_t n, long p, const std::vector<Matrix>& mats, std::string label) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(p);
  std::vector<std::vector<Point>> gens;
  std::vector<Point> shift(total);
  for (std::size_t v = 0; v < total; ++v) {
    auto x = decode(v, n, p);
    x[0] = mod(x[0] + 1, p);
    shift[v] = static_cast<Point>(encode(x, p));
  }
  gens.push_back(std::move(shift));
  for (const auto& m : mats) {
    std::vector<Point> im(total);
    for (std::size_t v = 0; v < total; ++v) im[v] = static_cast<Point>(encode(apply(m, decode(v, n, p), p), p));
    gens.push_back(std::move(im));
  }
  return from_images(total, gens, std::move(label));
}

Matrix elementary(std::size_t n, std::size_t i, std::size_t j, long a) {
  Matrix m(n, std::vector<long>(n, 0));
  for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
  m[i][j] = a;
  return m;
}

std::vector<Matrix> sl_generators(std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.push_back(elementary(n, i, j, 1));
  return out;
}

long primitive_root(long p) {
  for (long g = 2; g < p; ++g)
    if (unit_order(static_cast<std::size_t>(g), static_cast<std::size_t>(p)) == static_cast<std::size_t>(p - 1))
      return g;
  return 1;
}

long inverse_mod(long a, long p) {
  for (long x = 1; x < p; ++x)
    if (mod(a * x, p) == 1) return x;
  return 0;
}

/// PSL(2,q) or PGL(2,q) on {0..q-1, inf}, q prime.
GroupPtr projective_line(long q, bool full, std::string label) {
  const std::size_t n = static_cast<std::size_t>(q) + 1;
  const Point inf = static_cast<Point>(q);
  std::vector<Point> shift(n), invert(n), scale(n);
  for (long x = 0; x < q; ++x) shift[x] = static_cast<Point>((x + 1) % q);
  shift[inf] = inf;
  for (long x = 1; x < q; ++x) invert[x] = static_cast<Point>(mod(-inverse_mod(x, q), q));
  invert[0] = inf;
  invert[inf] = 0;
  std::vector<std::vector<Point>> gens{shift, invert};
  if (full) {
    const long g = primitive_root(q);
    for (long x = 0; x < q; ++x) scale[x] = static_cast<Point>(mod(g * x, q));
    scale[inf] = inf;
    gens.push_back(scale);
  }
  return from_images(n, gens, std::move(label));
}

std::size_t to_size(const std::string& s) { return static_cast<std::size_t>(std::stoul(s)); }

/// Splits on 'x' outside parentheses; returns one piece when no split applies.
std::vector<std::string> split_product(std::string_view name) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : name) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == 'x' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

GroupPtr named_atom(const std::string& name) {
  std::smatch m;
  auto unknown = [&]() { return FusionError(ErrorKind::UnknownName, "unknown group name '" + name + "'"); };

  if (name == "GL(3,2)" || name == "PSL(2,7)" || name == "L3(2)") {
    const Matrix transvection{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    const Matrix companion{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}};  // x^3 + x + 1
    return linear_on_vectors(3, 2, {transvection, companion}, name);
  }
  if (name == "V4") return direct_product(cyclic(2, {}), cyclic(2, {}), name);
  if (name == "C2^3:C7") {
    const Matrix companion{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}};
    return affine(3, 2, {companion}, name);
  }
  if (name == "C3^2:C4") return affine(2, 3, {{{0, 2}, {1, 0}}}, name);
  if (name == "C3^2:Q8") return affine(2, 3, {{{0, 2}, {1, 0}}, {{1, 1}, {1, 2}}}, name);

  if (std::regex_match(name, m, std::regex(R"(S(\d+))"))) {
    const auto n = to_size(m[1]);
    if (n == 0 || n > 7) throw unknown();
    return symmetric(n, name);
  }
  if (std::regex_match(name, m, std::regex(R"(A(\d+))"))) {
    const auto n = to_size(m[1]);
    if (n == 0 || n > 7) throw unknown();
    return alternating(n, name);
  }
  if (std::regex_match(name, m, std::regex(R"(C(\d+)\^(\d+))"))) {
    const auto p = to_size(m[1]);
    const auto k = to_size(m[2]);
    if (p < 2 || k == 0 || k > 12) throw unknown();
    GroupPtr g = cyclic(p, {});
    for (std::size_t i = 1; i < k; ++i) g = direct_product(g, cyclic(p, {}), {});
    return with_label(g, name);
  }
  if (std::regex_match(name, m, std::regex(R"(C(\d+))"))) {
    const auto n = to_size(m[1]);
    if (n == 0) throw unknown();
    return cyclic(n, name);
  }
  if (std::regex_match(name, m, std::regex(R"(D(\d+))"))) {
    const auto n = to_size(m[1]);
    if (n < 4 || n % 2 != 0) throw unknown();
    return dihedral(n, name);
  }
  if (std::regex_match(name, m, std::regex(R"(SD(\d+))"))) {
    const auto n = to_size(m[1]);
    if (n < 16 || !is_p_power(n, 2)) throw unknown();
    const std::size_t half = n / 2;
    return metacyclic_two_generator(half, half / 2 - 1, 0, name);
  }
  if (std::regex_match(name, m, std::regex(R"(Q(\d+))"))) {
    const auto n = to_size(m[1]);
    if (n < 8 || !is_p_power(n, 2)) throw unknown();
    const std::size_t half = n / 2;
    return metacyclic_two_generator(half, half - 1, half / 2, name);
  }
  if (std::regex_match(name, m, std::regex(R"(C(\d+):C(\d+))"))) {
    const auto a = to_size(m[1]);
    const auto b = to_size(m[2]);
    if (a < 3 || b < 2) throw unknown();
    return semidirect_cyclic(a, b, name);
  }
  if (std::regex_match(name, m, std::regex(R"(C(\d+)wrC(\d+))"))) {
    const auto a = to_size(m[1]);
    const auto b = to_size(m[2]);
    if (a != b || !is_prime(a)) throw unknown();
    return wreath(a, name);
  }
  if (std::regex_match(name, m, std::regex(R"((P?)(GL|SL)\((\d+),(\d+)\))"))) {
    const bool projective = !m[1].str().empty();
    const bool general = m[2] == "GL";
    const auto n = to_size(m[3]);
    const auto q = static_cast<long>(to_size(m[4]));
    if (!is_prime(static_cast<std::size_t>(q))) throw unknown();
    if (projective) {
      if (n != 2) throw unknown();
      return projective_line(q, general, name);
    }
    if (n == 0 || n > 4) throw unknown();
    auto mats = sl_generators(n);
    if (general) {
      Matrix d = elementary(n, 0, 0, 0);
      d[0][0] = primitive_root(q);
      mats.push_back(d);
    }
    return linear_on_vectors(n, q, mats, name);
  }
  if (std::regex_match(name, m, std::regex(R"(Qd\((\d+)\))"))) {
    const auto p = static_cast<long>(to_size(m[1]));
    if (!is_prime(static_cast<std::size_t>(p)) || p > 7) throw unknown();
    return affine(2, p, sl_generators(2), name);
  }
  throw unknown();
}

}  // namespace

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::string label) {
  const std::size_t da = a->degree();
  const std::size_t db = b->degree();
  std::vector<Permutation> gens;
  for (const auto& g : a->generators()) {
    std::vector<Point> im(da + db);
    std::iota(im.begin(), im.end(), Point{0});
    for (std::size_t i = 0; i < da; ++i) im[i] = g[i];
    gens.emplace_back(std::move(im));
  }
  for (const auto& g : b->generators()) {
    std::vector<Point> im(da + db);
    std::iota(im.begin(), im.end(), Point{0});
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<Point>(da + g[i]);
    gens.emplace_back(std::move(im));
  }
  return FiniteGroup::generate(da + db, std::move(gens), std::move(label));
}

GroupPtr named_group(std::string_view name) {
  const std::string full(name);
  const auto parts = split_product(name);
  if (parts.size() == 1) return named_atom(full);
  GroupPtr g = named_atom(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, named_atom(parts[i]), {});
  return with_label(g, full);
}

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names{
      "S3",      "S4",      "S5",      "A4",      "A5",       "D8",       "D10",     "D12",
      "D16",     "Q8",      "Q16",     "SD16",    "C2^2",     "C2xC4",    "C2^3",    "C3:C4",
      "C7:C3",   "C5:C4",   "C9:C3",   "S3xS3",   "C3^2:C4",  "C3^2:Q8",  "C2^3:C7", "SL(2,3)",
      "GL(2,3)", "GL(3,2)", "PGL(2,7)", "PSL(2,17)", "Qd(3)", "C2wrC2",  "C3wrC3"};
  return names;
}

}  // namespace fusion
