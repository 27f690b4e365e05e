#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace bzeta {

/// a x^2 + b xy + c y^2, positive definite.
struct QuadForm {
  std::int64_t a = 1, b = 0, c = 1;
  std::int64_t disc() const { return b * b - 4 * a * c; }
  auto operator<=>(const QuadForm&) const = default;
  std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")"; }
};

/// [[p, q], [r, s]] in SL2(Z); the form f maps to f(p x + q y, r x + s y).
using Mat2 = std::array<std::int64_t, 4>;

struct Reduction {
  QuadForm form;
  Mat2 witness;
};

inline QuadForm act(const QuadForm& f, const Mat2& m) {
  const auto [p, q, r, s] = m;
  return {f.a * p * p + f.b * p * r + f.c * r * r, 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s,
          f.a * q * q + f.b * q * s + f.c * s * s};
}

inline Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

inline bool is_reduced(const QuadForm& f) {
  if (!(std::abs(f.b) <= f.a && f.a <= f.c)) return false;
  if ((std::abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

inline Reduction reduce_form(QuadForm f) {
  if (f.a <= 0 || f.disc() >= 0) throw std::invalid_argument("reduce_form: form " + f.str() + " is not positive definite");
  Mat2 w{1, 0, 0, 1};
  auto apply = [&](const Mat2& m) {
    f = act(f, m);
    w = mat2_mul(w, m);
  };
  while (true) {
    // b into (-a, a]
    if (f.b > f.a || f.b <= -f.a) {
      // x -> x + k y sends b to b + 2 a k
      const std::int64_t two_a = 2 * f.a;
      std::int64_t k = -((f.b + f.a - 1) >= 0 ? (f.b + f.a - 1) / two_a : -((-(f.b + f.a - 1) + two_a - 1) / two_a));
      apply({1, k, 0, 1});
      continue;
    }
    if (f.a > f.c) {
      apply({0, -1, 1, 0});
      continue;
    }
    if (f.a == f.c && f.b < 0) apply({0, -1, 1, 0});
    break;
  }
  return {f, w};
}

inline bool is_fundamental_discriminant(std::int64_t D) {
  auto squarefree = [](std::int64_t n) {
    n = std::abs(n);
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % (d * d) == 0) return false;
    return true;
  };
  if (D == 0 || D == 1) return false;
  const std::int64_t r = ((D % 4) + 4) % 4;
  if (r == 1) return squarefree(D);
  if (r == 0) {
    const std::int64_t m = D / 4, mr = ((m % 4) + 4) % 4;
    return (mr == 2 || mr == 3) && squarefree(m);
  }
  return false;
}

/// Reduced primitive forms of discriminant D, by direct |b| <= a <= c search.
inline std::vector<QuadForm> reduced_forms(std::int64_t D) {
  if (D >= 0) throw std::invalid_argument("reduced_forms: D must be negative");
  std::vector<QuadForm> out;
  for (std::int64_t a = 1; 3 * a * a <= -D; ++a)
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const QuadForm f{a, b, num / (4 * a)};
      if (!is_reduced(f)) continue;
      if (std::gcd(std::gcd(f.a, std::abs(f.b)), f.c) != 1) continue;
      out.push_back(f);
    }
  return out;
}

namespace detail {

inline std::int64_t floor_mod(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

/// g = gcd(x, y) = x u + y v.
inline std::int64_t ext_gcd(std::int64_t x, std::int64_t y, std::int64_t& u, std::int64_t& v) {
  std::int64_t r0 = x, r1 = y, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
  while (r1 != 0) {
    const std::int64_t qt = r0 / r1;
    std::tie(r0, r1) = std::make_tuple(r1, r0 - qt * r1);
    std::tie(u0, u1) = std::make_tuple(u1, u0 - qt * u1);
    std::tie(v0, v1) = std::make_tuple(v1, v0 - qt * v1);
  }
  if (r0 < 0) {
    r0 = -r0;
    u0 = -u0;
    v0 = -v0;
  }
  u = u0;
  v = v0;
  return r0;
}

}  // namespace detail

/// Dirichlet composition, reduced.
inline QuadForm compose_forms(const QuadForm& f, const QuadForm& g) {
  const std::int64_t D = f.disc();
  if (g.disc() != D) throw std::invalid_argument("compose: discriminant mismatch " + f.str() + " vs " + g.str());
  const std::int64_t s = (f.b + g.b) / 2;
  std::int64_t x, y, u, v;
  const std::int64_t g1 = detail::ext_gcd(f.a, g.a, x, y);
  const std::int64_t e = detail::ext_gcd(g1, s, u, v);
  const std::int64_t p = x * u, q = y * u, r = v;
  const std::int64_t A = f.a * g.a / (e * e);
  const __int128 num =
      static_cast<__int128>(f.a) * g.b * p + static_cast<__int128>(g.a) * f.b * q + static_cast<__int128>(r) * ((f.b * g.b + D) / 2);
  std::int64_t B = static_cast<std::int64_t>((num / e) % (2 * A));
  B = detail::floor_mod(B, 2 * A);
  if (B > A) B -= 2 * A;
  const std::int64_t C = (B * B - D) / (4 * A);
  return reduce_form({A, B, C}).form;
}

/// Independent route: multiply the ideals [a, (-b + sqrt D)/2] as Z-lattices
/// and read the form back off the Hermite basis.
inline QuadForm compose_via_ideals(const QuadForm& f, const QuadForm& g) {
  const std::int64_t D = f.disc();
  if (g.disc() != D) throw std::invalid_argument("compose_via_ideals: discriminant mismatch");
  // (x + y sqrt D)/2 stored as (x, y)
  using V = std::array<std::int64_t, 2>;
  const std::array<V, 2> gf{V{2 * f.a, 0}, V{-f.b, 1}}, gg{V{2 * g.a, 0}, V{-g.b, 1}};
  std::vector<V> vs;
  for (const V& s : gf)
    for (const V& t : gg) vs.push_back({(s[0] * t[0] + s[1] * t[1] * D) / 2, (s[0] * t[1] + s[1] * t[0]) / 2});
  // Hermite form: one vector (x0, h), the rest on the x-axis
  while (true) {
    std::size_t best = vs.size();
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (vs[i][1] != 0 && (best == vs.size() || std::abs(vs[i][1]) < std::abs(vs[best][1]))) best = i;
    bool done = true;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i == best || vs[i][1] == 0) continue;
      const std::int64_t k = vs[i][1] / vs[best][1];
      vs[i][0] -= k * vs[best][0];
      vs[i][1] -= k * vs[best][1];
      done = false;
    }
    if (done) {
      V piv = vs[best];
      if (piv[1] < 0) piv = {-piv[0], -piv[1]};
      std::int64_t n = 0;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (i != best) n = std::gcd(n, std::abs(vs[i][0]));
      const std::int64_t h = piv[1];
      if (n % (2 * h) != 0 || piv[0] % h != 0) throw std::logic_error("compose_via_ideals: lattice is not h times a primitive ideal");
      const std::int64_t A = n / (2 * h);
      std::int64_t B = detail::floor_mod(-piv[0] / h, 2 * A);
      if (B > A) B -= 2 * A;
      if ((B * B - D) % (4 * A) != 0) throw std::logic_error("compose_via_ideals: inconsistent norm");
      return reduce_form({A, B, (B * B - D) / (4 * A)}).form;
    }
  }
}

/// The form (1, t, n) of theta with trace t and norm n.
inline QuadForm t_theta(std::int64_t D, std::int64_t t, std::int64_t n) {
  if (t * t - 4 * n != D)
    throw std::invalid_argument("t_theta: t^2 - 4n = " + std::to_string(t * t - 4 * n) + " differs from D = " + std::to_string(D));
  const QuadForm f{1, t, n};
  if (f.a <= 0 || f.disc() >= 0) throw std::invalid_argument("t_theta: not positive definite");
  return f;
}

class ClassGroup;

/// Character of Cl(D): value on class i is exp(2 pi i k_i / order).
struct ClassChar {
  std::vector<std::int64_t> k;
  std::int64_t order = 1;
  std::complex<double> operator()(std::size_t i) const {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k.at(i)) / static_cast<double>(order));
  }
  ClassChar conj() const {
    ClassChar c = *this;
    for (auto& x : c.k) x = detail::floor_mod(-x, order);
    return c;
  }
  bool is_trivial() const {
    return std::all_of(k.begin(), k.end(), [](std::int64_t x) { return x == 0; });
  }
};

class ClassGroup {
 public:
  explicit ClassGroup(std::int64_t D) : D_(D) {
    if (D >= 0) throw std::invalid_argument("ClassGroup: D must be negative");
    if (!is_fundamental_discriminant(D)) throw std::invalid_argument("ClassGroup: D = " + std::to_string(D) + " is not fundamental");
    classes_ = reduced_forms(D);
    // principal class first
    const QuadForm one = principal_form(D);
    std::stable_partition(classes_.begin(), classes_.end(), [&](const QuadForm& f) { return f == one; });
    for (std::size_t i = 0; i < classes_.size(); ++i) index_[classes_[i]] = i;
    const std::size_t h = classes_.size();
    table_.assign(h, std::vector<std::size_t>(h));
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) table_[i][j] = index_of(compose_forms(classes_[i], classes_[j]));
    compute_structure();
  }

  static QuadForm principal_form(std::int64_t D) {
    const std::int64_t b = ((D % 4) + 4) % 4 == 0 ? 0 : 1;
    return {1, b, (b * b - D) / 4};
  }

  std::int64_t D() const noexcept { return D_; }
  std::size_t h() const noexcept { return classes_.size(); }
  const std::vector<QuadForm>& classes() const noexcept { return classes_; }
  const QuadForm& form(std::size_t i) const { return classes_.at(i); }
  int w() const noexcept { return D_ == -3 ? 6 : D_ == -4 ? 4 : 2; }
  std::size_t identity() const noexcept { return 0; }

  std::size_t index_of(const QuadForm& f) const {
    if (f.disc() != D_) throw std::invalid_argument("ClassGroup: form " + f.str() + " has the wrong discriminant");
    auto it = index_.find(reduce_form(f).form);
    if (it == index_.end()) throw std::logic_error("ClassGroup: reduced form " + f.str() + " not in table");
    return it->second;
  }
  std::size_t compose(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  std::size_t conjugate(std::size_t i) const {
    const QuadForm& f = classes_.at(i);
    return index_of({f.a, -f.b, f.c});
  }
  std::size_t inverse(std::size_t i) const {
    for (std::size_t j = 0; j < h(); ++j)
      if (compose(i, j) == identity()) return j;
    throw std::logic_error("ClassGroup: no inverse");
  }
  std::size_t power(std::size_t i, std::int64_t n) const {
    std::size_t r = identity();
    for (std::int64_t k = 0; k < n; ++k) r = compose(r, i);
    return r;
  }
  std::int64_t element_order(std::size_t i) const {
    std::size_t x = i;
    std::int64_t n = 1;
    while (x != identity()) {
      x = compose(x, i);
      ++n;
    }
    return n;
  }
  /// Invariant factors n1 | n2 | ... (empty for the trivial group).
  const std::vector<std::int64_t>& structure() const noexcept { return structure_; }
  std::int64_t exponent() const { return structure_.empty() ? 1 : structure_.back(); }

  /// All h characters, trivial first.
  std::vector<ClassChar> characters() const {
    // generators: greedily add classes outside the current span
    std::vector<std::size_t> gens;
    std::vector<bool> span(h(), false);
    span[identity()] = true;
    auto close = [&] {
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t i = 0; i < h(); ++i)
          if (span[i])
            for (std::size_t g : gens)
              if (!span[compose(i, g)]) span[compose(i, g)] = grew = true;
      }
    };
    for (std::size_t i = 0; i < h(); ++i)
      if (!span[i]) {
        gens.push_back(i);
        close();
      }
    const std::int64_t n = exponent();
    std::vector<ClassChar> out;
    std::vector<std::int64_t> vals(gens.size(), 0);
    double combos = std::pow(static_cast<double>(n), static_cast<double>(gens.size()));
    if (combos > 1e7) throw std::length_error("ClassGroup::characters: group too large for enumeration");
    while (true) {
      ClassChar c;
      c.order = n;
      if (extend(gens, vals, c)) out.push_back(std::move(c));
      std::size_t pos = 0;
      while (pos < vals.size() && ++vals[pos] == n) vals[pos++] = 0;
      if (pos == vals.size()) break;
    }
    if (out.size() != h()) throw std::logic_error("ClassGroup::characters: found " + std::to_string(out.size()) + " characters");
    return out;
  }

 private:
  std::int64_t D_;
  std::vector<QuadForm> classes_;
  std::map<QuadForm, std::size_t> index_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::int64_t> structure_;

  bool extend(const std::vector<std::size_t>& gens, const std::vector<std::int64_t>& vals, ClassChar& c) const {
    const std::int64_t n = c.order;
    std::vector<std::int64_t> k(h(), -1);
    k[identity()] = 0;
    std::vector<std::size_t> frontier{identity()};
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t x : frontier)
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          const std::size_t y = compose(x, gens[gi]);
          const std::int64_t ky = (k[x] + vals[gi]) % n;
          if (k[y] < 0) {
            k[y] = ky;
            next.push_back(y);
          } else if (k[y] != ky) {
            return false;
          }
        }
      frontier = std::move(next);
    }
    for (std::size_t i = 0; i < h(); ++i)
      for (std::size_t j = 0; j < h(); ++j)
        if (k[compose(i, j)] != (k[i] + k[j]) % n) return false;
    c.k = std::move(k);
    return true;
  }

  void compute_structure() {
    // per prime l: counts of elements killed by l^t give the l-part partition
    std::map<std::int64_t, std::vector<std::int64_t>> parts;  // l -> exponents, descending
    std::int64_t m = static_cast<std::int64_t>(h());
    for (std::int64_t l = 2; m > 1; ++l) {
      if (m % l != 0) continue;
      int top = 0;
      while (m % l == 0) {
        m /= l;
        ++top;
      }
      // r_t = #{x : l^t x = 0} = l^{sum_i min(t, e_i)}
      std::vector<int> logr(static_cast<std::size_t>(top) + 2, 0);
      for (int t = 1; t <= top + 1; ++t) {
        std::int64_t cnt = 0, lt = 1;
        for (int z = 0; z < t; ++z) lt *= l;
        for (std::size_t i = 0; i < h(); ++i)
          if (power(i, lt) == identity()) ++cnt;
        int lg = 0;
        while (cnt > 1) {
          cnt /= l;
          ++lg;
        }
        logr[static_cast<std::size_t>(t)] = lg;
      }
      // number of e_i >= t is logr[t] - logr[t-1]
      std::vector<std::int64_t> ex;
      for (int t = top; t >= 1; --t) {
        const int ge_t = logr[static_cast<std::size_t>(t)] - logr[static_cast<std::size_t>(t - 1)];
        const int ge_t1 = logr[static_cast<std::size_t>(t + 1)] - logr[static_cast<std::size_t>(t)];
        for (int z = 0; z < ge_t - ge_t1; ++z) ex.push_back(t);
      }
      parts[l] = ex;
    }
    std::size_t rank = 0;
    for (auto& [l, ex] : parts) rank = std::max(rank, ex.size());
    structure_.assign(rank, 1);
    for (auto& [l, ex] : parts)
      for (std::size_t i = 0; i < ex.size(); ++i) {
        std::int64_t pw = 1;
        for (std::int64_t z = 0; z < ex[i]; ++z) pw *= l;
        structure_[rank - 1 - i] *= pw;
      }
  }
};

/// R = sum over classes of coeffs(x) chi(x)^-1.
inline std::complex<double> bessel_coeff_sum(const ClassGroup& G, const std::map<QuadForm, std::complex<double>>& coeffs,
                                             const ClassChar& chi) {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < G.h(); ++i) {
    auto it = coeffs.find(G.form(i));
    if (it == coeffs.end()) throw std::invalid_argument("bessel_coeff_sum: no coefficient for class " + G.form(i).str());
    s += it->second * std::conj(chi(i));
  }
  return s;
}

}  // namespace bzeta
