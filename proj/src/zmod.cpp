#include "veech/zmod.hpp"

#include "veech/error.hpp"

#include <limits>
#include <numeric>
#include <utility>

namespace veech {

namespace {

struct Gcdx {
  std::int64_t g, s, t;
};

// g = s*a + t*b with g >= 0.
Gcdx gcdx(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const auto q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

using Row = std::vector<std::int64_t>;

// Replace (x, y) by (s x + t y, -b x + a y); the transform has determinant 1.
void combine_rows(Row& x, Row& y, std::size_t col, std::int64_t d) {
  const auto [g, s, t] = gcdx(x[col], y[col]);
  const auto a = x[col] / g;
  const auto b = y[col] / g;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto xj = x[j], yj = y[j];
    x[j] = mod(s * xj + t * yj, d);
    y[j] = mod(-b * xj + a * yj, d);
  }
}

// A unit u of Z_d with u * a = gcd(a, d) (mod d).
std::int64_t normalizing_unit(std::int64_t a, std::int64_t d) {
  const auto g = std::gcd(a, d);
  const auto dd = d / g;
  auto u = mod(gcdx(a / g, dd).s, dd);
  while (std::gcd(u, d) != 1) u += dd;
  return u;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) r = saturating_mul(r, base);
  return r;
}

}  // namespace

MatrixModD identity_mod(Eigen::Index n, std::int64_t d) {
  MatrixModD m = MatrixModD::Identity(n, n);
  return reduced(m, d);
}

std::int64_t determinant_mod(const MatrixModD& m, std::int64_t d) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::invalid_argument, "determinant of non-square matrix");
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<Row> a(n, Row(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mod(m(i, j), d);

  std::int64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      if (a[c][c] == 0) {
        std::swap(a[c], a[i]);
        det = -det;
        continue;
      }
      combine_rows(a[c], a[i], c, d);
    }
    det = mod(det * a[c][c], d);
  }
  return mod(det, d);
}

std::uint64_t sl_order(int n, std::int64_t d) {
  if (d < 1 || n < 1) throw Error(ErrorKind::invalid_argument, "sl_order: bad arguments");
  std::uint64_t total = 1;
  auto prime_power = [&](std::uint64_t p, std::uint64_t k) {
    // |SL(n, F_p)| = p^(n(n-1)/2) * prod_{i=2..n} (p^i - 1)
    auto field = saturating_pow(p, static_cast<std::uint64_t>(n) * (n - 1) / 2);
    for (int i = 2; i <= n; ++i) field = saturating_mul(field, saturating_pow(p, i) - 1);
    // kernel of reduction mod p has order p^((k-1)(n^2-1))
    const auto lift = saturating_pow(p, (k - 1) * static_cast<std::uint64_t>(n * n - 1));
    total = saturating_mul(total, saturating_mul(field, lift));
  };
  auto rest = static_cast<std::uint64_t>(d);
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    std::uint64_t k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (k > 0) prime_power(p, k);
  }
  if (rest > 1) prime_power(rest, 1);
  return total;
}

SubgroupCanonicalForm::SubgroupCanonicalForm(Eigen::Index dimension, std::int64_t modulus,
                                             MatrixModD rows, std::vector<Eigen::Index> pivots)
    : dimension_(dimension), modulus_(modulus), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

std::uint64_t SubgroupCanonicalForm::cardinality() const {
  std::uint64_t card = 1;
  for (Eigen::Index r = 0; r < rows_.rows(); ++r) {
    const auto factor = static_cast<std::uint64_t>(modulus_ / rows_(r, pivots_[r]));
    if (factor != 0 && card > std::numeric_limits<std::uint64_t>::max() / factor)
      throw Error(ErrorKind::invalid_argument, "subgroup cardinality overflows 64 bits");
    card *= factor;
  }
  return card;
}

VectorModD SubgroupCanonicalForm::reduce(const VectorModD& v) const {
  VectorModD out = reduced(v, modulus_);
  for (Eigen::Index r = 0; r < rows_.rows(); ++r) {
    const auto c = pivots_[r];
    const auto q = out(c) / rows_(r, c);
    if (q != 0) out = reduced(out - q * rows_.row(r).transpose(), modulus_);
  }
  return out;
}

bool SubgroupCanonicalForm::contains(const VectorModD& v) const {
  return reduce(v).isZero();
}

std::size_t SubgroupCanonicalForm::hash() const {
  std::size_t h = static_cast<std::size_t>(modulus_) * 0x9e3779b97f4a7c15ull + rows_.rows();
  for (Eigen::Index i = 0; i < rows_.rows(); ++i)
    for (Eigen::Index j = 0; j < rows_.cols(); ++j)
      h = (h ^ static_cast<std::size_t>(rows_(i, j))) * 0x100000001b3ull;
  return h;
}

SubgroupCanonicalForm canonicalize(const MatrixModD& generators, std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::invalid_argument, "modulus must be positive");
  const auto n = static_cast<std::size_t>(generators.cols());
  std::vector<Row> a;
  for (Eigen::Index i = 0; i < generators.rows(); ++i) {
    Row row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = mod(generators(i, j), d);
    a.push_back(std::move(row));
  }

  std::vector<Eigen::Index> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      if (a[r][c] == 0) {
        std::swap(a[r], a[i]);
        continue;
      }
      combine_rows(a[r], a[i], c, d);
    }
    if (a[r][c] == 0) continue;

    const auto u = normalizing_unit(a[r][c], d);
    for (auto& x : a[r]) x = mod(x * u, d);
    const auto pivot = a[r][c];

    for (std::size_t i = 0; i < r; ++i) {
      const auto q = a[i][c] / pivot;
      if (q == 0) continue;
      for (std::size_t j = 0; j < n; ++j) a[i][j] = mod(a[i][j] - q * a[r][j], d);
    }

    // Howell property: (d / pivot) * row vanishes in column c and must stay
    // in the span of the later rows.
    Row annihilated(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      annihilated[j] = mod((d / pivot) * a[r][j], d);
      nonzero = nonzero || annihilated[j] != 0;
    }
    if (nonzero) a.push_back(std::move(annihilated));

    pivots.push_back(static_cast<Eigen::Index>(c));
    ++r;
  }

  MatrixModD rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = a[i][j];
  return SubgroupCanonicalForm(static_cast<Eigen::Index>(n), d, std::move(rows), std::move(pivots));
}

SubgroupCanonicalForm canonicalize(std::span<const VectorModD> generators, std::int64_t d,
                                   Eigen::Index n) {
  MatrixModD m(static_cast<Eigen::Index>(generators.size()), n);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != n)
      throw Error(ErrorKind::invalid_argument, "generator has wrong length");
    m.row(static_cast<Eigen::Index>(i)) = generators[i].transpose();
  }
  return canonicalize(m, d);
}

}  // namespace veech
