#include "cargoflow/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cargoflow/kernels.hpp"

namespace cargoflow {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPermSlack = 1e-12;

void check_share_vector(std::span<const double> v, const char* name) {
  if (v.empty()) throw std::invalid_argument("empty share vector");
  double total = 0.0;
  for (double s : v) {
    if (s < 0.0)
      throw std::invalid_argument(std::string(name) + ": negative share");
    total += s;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(name) +
                                ": shares must sum to 1 (non-normalized input)");
}

std::vector<double> midrank(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0
                       + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

// Lentz continued fraction for the incomplete beta function.
double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-16;
  constexpr double kFpMin = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

// Regularized incomplete beta I_x(a, b).
double ibeta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) -
                             std::lgamma(b) + a * std::log(x) +
                             b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return bt * betacf(a, b, x) / a;
  }
  return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

// Two-sided p-value for a Student t statistic with df degrees of freedom.
double student_t_two_sided(double t, double df) {
  return ibeta(df / 2.0, 0.5, df / (df + t * t));
}

double normal_two_sided(double z) {
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

struct PearsonParts {
  double mean_x, mean_y, ss_x, ss_y;  // centered sums of squares
};

PearsonParts pearson_parts(std::span<const double> x,
                           std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += (x[i] - mx) * (x[i] - mx);
    sy += (y[i] - my) * (y[i] - my);
  }
  return {mx, my, sx, sy};
}

double pearson_from_parts(std::span<const double> x, std::span<const double> y,
                          const PearsonParts& parts) {
  double cov = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cov += (x[i] - parts.mean_x) * (y[i] - parts.mean_y);
  }
  return std::clamp(cov / std::sqrt(parts.ss_x * parts.ss_y), -1.0, 1.0);
}

// Fraction of distinct arrangements of `pool` whose |statistic| reaches
// |observed|. Enumerating distinct arrangements weights tied values
// correctly because every arrangement collapses the same number of raw
// permutations.
template <typename Stat>
double exact_permutation_p(std::vector<double> pool, double observed,
                           Stat stat) {
  std::sort(pool.begin(), pool.end());
  const double threshold = std::abs(observed) - kPermSlack;
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  do {
    ++total;
    if (std::abs(stat(pool)) >= threshold) ++hits;
  } while (std::next_permutation(pool.begin(), pool.end()));
  return static_cast<double>(hits) / static_cast<double>(total);
}

struct TieStats {
  double pairs = 0.0;   // sum t(t-1)/2
  double prod2 = 0.0;   // sum t(t-1)(t-2)
  double weighted = 0.0;  // sum t(t-1)(2t+5)
};

TieStats tie_stats(std::vector<double> sorted_values) {
  TieStats out;
  std::size_t i = 0;
  const std::size_t n = sorted_values.size();
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && sorted_values[j + 1] == sorted_values[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    out.pairs += t * (t - 1.0) / 2.0;
    out.prod2 += t * (t - 1.0) * (t - 2.0);
    out.weighted += t * (t - 1.0) * (2.0 * t + 5.0);
    i = j + 1;
  }
  return out;
}

// Counts pairs i < j with v[i] > v[j] by bottom-up merge sort.
std::uint64_t count_inversions(std::vector<double> v) {
  const std::size_t n = v.size();
  std::vector<double> buf(n);
  std::uint64_t swaps = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
      const std::size_t mid = lo + width;
      const std::size_t hi = std::min(n, mid + width);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (v[i] <= v[j]) {
          buf[k++] = v[i++];
        } else {
          swaps += mid - i;
          buf[k++] = v[j++];
        }
      }
      while (i < mid) buf[k++] = v[i++];
      while (j < hi) buf[k++] = v[j++];
      std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
                buf.begin() + static_cast<std::ptrdiff_t>(hi),
                v.begin() + static_cast<std::ptrdiff_t>(lo));
    }
  }
  return swaps;
}

struct TauParts {
  double tau = 0.0;
  double con_minus_dis = 0.0;
  TieStats x_ties, y_ties;
  double xy_tie_pairs = 0.0;
  bool defined = false;
};

TauParts tau_b_parts(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return y[a] < y[b];
  });

  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = x[order[i]];
    ys[i] = y[order[i]];
  }

  TauParts out;
  out.x_ties = tie_stats(xs);

  // joint ties: runs of equal (x, y)
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && xs[j + 1] == xs[i] && ys[j + 1] == ys[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    out.xy_tie_pairs += t * (t - 1.0) / 2.0;
    i = j + 1;
  }

  const auto swaps = count_inversions(ys);
  std::sort(ys.begin(), ys.end());
  out.y_ties = tie_stats(ys);

  const double n0 = static_cast<double>(n) * (static_cast<double>(n) - 1.0) /
                    2.0;
  out.con_minus_dis = n0 - out.x_ties.pairs - out.y_ties.pairs +
                      out.xy_tie_pairs - 2.0 * static_cast<double>(swaps);
  const double denom =
      std::sqrt((n0 - out.x_ties.pairs) * (n0 - out.y_ties.pairs));
  if (denom <= 0.0) return out;  // fully tied on one side
  out.tau = std::clamp(out.con_minus_dis / denom, -1.0, 1.0);
  out.defined = true;
  return out;
}

void check_rank_inputs(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("rank correlation: length mismatch");
  if (x.size() < 3)
    throw std::invalid_argument("rank correlation needs n >= 3");
}

}  // namespace

std::string_view to_string(PValueMethod m) {
  return m == PValueMethod::ExactPermutation ? "exact_permutation"
                                             : "asymptotic";
}

double js_distance(std::span<const double> p, std::span<const double> q,
                   double log_base) {
  if (p.size() != q.size())
    throw std::invalid_argument("js_distance: length mismatch");
  if (!(log_base > 1.0))
    throw std::invalid_argument("js_distance: log base must exceed 1");
  check_share_vector(p, "p");
  check_share_vector(q, "q");

  std::vector<double> mid(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mid[i] = (p[i] + q[i]) / 2.0;

  const double kl_p = kernels::kl_sum(p, mid);
  const double kl_q = kernels::kl_sum(q, mid);
  const double ln_base = std::log(log_base);
  double jsd_sq = (kl_p + kl_q) / (2.0 * ln_base);

  // divergence is bounded by ln 2 nats
  const double upper = std::log(2.0) / ln_base;
  jsd_sq = std::clamp(jsd_sq, 0.0, upper);
  return std::sqrt(jsd_sq);
}

CorrelationResult spearman(std::span<const double> x,
                           std::span<const double> y,
                           std::size_t exact_max_n) {
  check_rank_inputs(x, y);
  const std::size_t n = x.size();
  const std::vector<double> rx = midrank(x);
  const std::vector<double> ry = midrank(y);
  const PearsonParts parts = pearson_parts(rx, ry);
  if (parts.ss_x <= 0.0 || parts.ss_y <= 0.0) {
    return {kNaN, kNaN, false, PValueMethod::Asymptotic};
  }
  const double rho = pearson_from_parts(rx, ry, parts);

  CorrelationResult out;
  out.statistic = rho;
  out.defined = true;
  if (n <= exact_max_n) {
    out.method = PValueMethod::ExactPermutation;
    out.p_value = exact_permutation_p(
        ry, rho, [&](const std::vector<double>& perm) {
          return pearson_from_parts(rx, perm, parts);
        });
  } else {
    out.method = PValueMethod::Asymptotic;
    const double df = static_cast<double>(n) - 2.0;
    const double denom = 1.0 - rho * rho;
    out.p_value = denom <= 0.0
                      ? 0.0
                      : student_t_two_sided(rho * std::sqrt(df / denom), df);
  }
  return out;
}

CorrelationResult kendall(std::span<const double> x,
                          std::span<const double> y,
                          std::size_t exact_max_n) {
  check_rank_inputs(x, y);
  const std::size_t n = x.size();
  const TauParts parts = tau_b_parts(x, y);
  if (!parts.defined) {
    return {kNaN, kNaN, false, PValueMethod::Asymptotic};
  }

  CorrelationResult out;
  out.statistic = parts.tau;
  out.defined = true;
  if (n <= exact_max_n) {
    out.method = PValueMethod::ExactPermutation;
    std::vector<double> pool(y.begin(), y.end());
    out.p_value = exact_permutation_p(
        pool, parts.tau, [&](const std::vector<double>& perm) {
          const TauParts p = tau_b_parts(x, perm);
          return p.defined ? p.tau : 0.0;
        });
  } else {
    out.method = PValueMethod::Asymptotic;
    const double nd = static_cast<double>(n);
    const double m = nd * (nd - 1.0);
    const double var = (m * (2.0 * nd + 5.0) - parts.x_ties.weighted -
                        parts.y_ties.weighted) /
                           18.0 +
                       (2.0 * parts.x_ties.pairs * parts.y_ties.pairs) / m +
                       parts.x_ties.prod2 * parts.y_ties.prod2 /
                           (9.0 * m * (nd - 2.0));
    out.p_value =
        var <= 0.0 ? 1.0 : normal_two_sided(parts.con_minus_dis /
                                            std::sqrt(var));
  }
  return out;
}

OrientationTable orientation_index(
    const std::map<std::string, double>& export_shares,
    const std::map<std::string, double>& import_shares, double epsilon) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("orientation epsilon must be positive");
  auto share_or_zero = [](const std::map<std::string, double>& m,
                          const std::string& key) {
    auto it = m.find(key);
    const double s = it == m.end() ? 0.0 : it->second;
    if (s < 0.0) throw std::invalid_argument("negative share for " + key);
    return s;
  };

  OrientationTable out;
  out.epsilon = epsilon;
  for (const auto& kv : export_shares) out.r.emplace(kv.first, 0.0);
  for (const auto& kv : import_shares) out.r.emplace(kv.first, 0.0);
  for (auto& [industry, r] : out.r) {
    // difference of logs so a direction swap negates the value exactly
    r = std::log(share_or_zero(export_shares, industry) + epsilon) -
        std::log(share_or_zero(import_shares, industry) + epsilon);
  }
  return out;
}

AsymmetryReport asymmetry_report(const WeightedDistribution& p,
                                 const WeightedDistribution& q,
                                 double log_base, std::size_t exact_max_n) {
  const Alignment aligned = align(p, q);
  AsymmetryReport out;
  out.dimension = p.dimension();
  out.jsd = js_distance(aligned.p, aligned.q, log_base);
  out.jsd_log_base = log_base;
  out.spearman = spearman(aligned.p, aligned.q, exact_max_n);
  out.kendall = kendall(aligned.p, aligned.q, exact_max_n);
  out.union_n = aligned.categories.size();
  return out;
}

}  // namespace cargoflow
