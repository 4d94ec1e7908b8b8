#include "mgh/disjoint_union.hpp"
#include "mgh/errors.hpp"
#include "mgh/gromov_hausdorff.hpp"

namespace mgh {

ConvergenceReport gh_convergence_certificate(const SpaceProvider& seq, std::size_t n_max,
                                             const Rational& tol, std::size_t window,
                                             std::size_t size_limit) {
  if (n_max < 2 || window == 0) throw InputError("convergence certificate: degenerate window");

  std::vector<FiniteMetricSpace> spaces;
  spaces.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) spaces.push_back(seq(n));

  ConvergenceReport report;
  for (std::size_t tail = 1; tail + window <= n_max; ++tail) {
    CauchyCertificate cert;
    cert.tail_index = tail;
    cert.tolerance = tol;
    bool ok = true;
    for (std::size_t m = tail; m <= tail + window && ok; ++m)
      for (std::size_t n = m + 1; n <= tail + window && ok; ++n) {
        Rational bound = gh_upper_estimate(spaces[m - 1], spaces[n - 1], size_limit);
        if (bound > tol) {
          report.violation = std::make_tuple(m, n, bound);
          ok = false;
        } else {
          cert.pair_bounds.emplace_back(m, n, bound);
        }
      }
    if (ok) {
      report.certified = true;
      report.certificate = std::move(cert);
      return report;
    }
  }
  return report;
}

DisjointSumReport verify_disjoint_sum_convergence(const SpaceProvider& xseq,
                                                  const SpaceProvider& yseq,
                                                  const FiniteMetricSpace& x,
                                                  const FiniteMetricSpace& y, const Rational& r,
                                                  const Rational& tol, std::size_t n_max,
                                                  std::size_t size_limit) {
  auto join = [&](const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    AdmissibleUnionSpec spec;
    spec.components = {a, b};
    spec.params = {r};
    return admissible_union(spec).space;  // -> TriangleError when r is too small
  };

  const FiniteMetricSpace limit_union = join(x, y);

  DisjointSumReport report;
  for (std::size_t n = 1; n <= n_max; ++n) {
    FiniteMetricSpace xn = xseq(n);
    FiniteMetricSpace yn = yseq(n);
    FiniteMetricSpace un = join(xn, yn);

    DisjointSumRow row;
    row.index = n;
    row.union_distance = gh_upper_estimate(un, limit_union, size_limit);
    row.sum_distance =
        gh_upper_estimate(xn, x, size_limit) + gh_upper_estimate(yn, y, size_limit);
    row.within_sum = row.union_distance <= row.sum_distance;
    report.rows.push_back(std::move(row));
  }

  // Certified tail: the largest suffix whose union distances sit below tol.
  std::size_t tail = n_max + 1;
  for (std::size_t n = n_max; n >= 1; --n) {
    if (report.rows[n - 1].union_distance > tol) break;
    tail = n;
  }
  if (tail <= n_max) {
    report.certified = true;
    report.tail_index = tail;
  }
  return report;
}

}  // namespace mgh
