// Copyright 2026 The Kissing Polynomials Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kissing/roots.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "kissing/polynomial.hpp"

namespace kp {

namespace {

constexpr int kMaxHalvings = 20;
constexpr int kMaxInserted = 400;
const char* const kDisplacementBound = "0.1";

int sign_of(const Real& x) { return x.sign(); }

std::vector<Complex> sorted_roots(std::vector<Complex> roots) {
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

Real max_displacement(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Real worst(0);
  for (size_t i = 0; i < a.size(); ++i) worst = max(worst, abs(a[i] - b[i]));
  return worst;
}

struct RawSample {
  bool exists = false;
  std::vector<Complex> roots;
};

RawSample sample_roots(int n, const Real& omega, const PrecisionPolicy& policy) {
  RawSample s;
  try {
    const MonicPolynomial p = monic_op(n, Complex(omega), policy);
    s.roots = poly_roots(p, policy).roots;
    s.exists = true;
  } catch (const Error&) {
    s.exists = false;
  }
  return s;
}

std::string describe(const Real& x) { return x.to_string(20); }

}  // namespace

RootSet poly_roots(const std::vector<Complex>& coeffs, const PrecisionPolicy& policy) {
  policy.validate();
  WorkingPrecision wp(policy.bits);
  if (coeffs.size() < 2) throw InvalidArgument("poly_roots needs degree >= 1");
  Real norm(0);
  for (const auto& c : coeffs) norm = max(norm, abs(c));
  const Complex& lead = coeffs.back();
  if (abs(lead) <= Real(1e-15) * norm) {
    throw InvalidArgument("leading coefficient is below the degeneracy threshold");
  }
  std::vector<Complex> monic;
  monic.reserve(coeffs.size());
  for (const auto& c : coeffs) monic.push_back(c / lead);
  const int degree = static_cast<int>(coeffs.size()) - 1;
  const Real tol = ldexp(Real(1), -(policy.bits - 12));
  auto result = aberth(monic, tol, 200 + 20 * degree);
  if (!result.converged) {
    throw NoConvergence("Aberth iteration did not settle after " +
                        std::to_string(result.iterations) + " sweeps");
  }
  Real residual = root_residual(coeffs, result.roots);
  return {std::move(result.roots), std::move(residual), result.iterations};
}

RootSet poly_roots(const MonicPolynomial& p, const PrecisionPolicy& policy) {
  if (p.degree == 0) {
    WorkingPrecision wp(policy.bits);
    return {{}, Real(0), 0};
  }
  return poly_roots(p.coeffs, policy);
}

std::vector<Complex> match_roots(const std::vector<Complex>& previous,
                                 const std::vector<Complex>& next) {
  if (previous.size() != next.size()) throw InvalidArgument("root sets differ in size");
  struct Pair {
    double distance;
    size_t from;
    size_t to;
  };
  std::vector<Pair> pairs;
  for (size_t i = 0; i < previous.size(); ++i) {
    for (size_t j = 0; j < next.size(); ++j) {
      pairs.push_back({abs(previous[i] - next[j]).to_double(), i, j});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) { return a.distance < b.distance; });
  std::vector<Complex> out(previous.size());
  std::vector<bool> used_from(previous.size(), false);
  std::vector<bool> used_to(next.size(), false);
  for (const auto& p : pairs) {
    if (used_from[p.from] || used_to[p.to]) continue;
    out[p.from] = next[p.to];
    used_from[p.from] = true;
    used_to[p.to] = true;
  }
  return out;
}

std::vector<TrajectorySample> trajectory(int n, const Real& omega_start, const Real& omega_end,
                                         int steps, const PrecisionPolicy& policy, int threads) {
  if (n < 0) throw IndexOutOfRange("degree must be >= 0");
  if (steps < 0) throw InvalidArgument("steps must be >= 0");
  policy.validate();
  WorkingPrecision wp(policy.bits);
  const int count = omega_start == omega_end ? 1 : steps + 1;
  std::vector<Real> grid(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    grid[static_cast<size_t>(i)] =
        count == 1 ? omega_start : omega_start + (omega_end - omega_start) * i / steps;
  }
  std::vector<RawSample> base(static_cast<size_t>(count));
  parallel_for(count, threads, [&](int i) {
    base[static_cast<size_t>(i)] = sample_roots(n, grid[static_cast<size_t>(i)], policy);
  });

  std::vector<TrajectorySample> out;
  std::vector<Complex> last;
  bool have_last = false;
  const Real bound{std::string_view(kDisplacementBound)};
  int inserted = 0;

  auto emit = [&](const Real& omega, const RawSample& s) {
    if (!s.exists) {
      out.push_back({omega, {}, false});
      return;
    }
    std::vector<Complex> roots = have_last ? match_roots(last, s.roots) : sorted_roots(s.roots);
    last = roots;
    have_last = true;
    out.push_back({omega, std::move(roots), true});
  };

  // Depth-first halving; only the offending subinterval is refined.
  auto advance = [&](auto&& self, const Real& a, const Real& b, const RawSample& at_b,
                     int depth) -> void {
    if (at_b.exists && have_last && depth < kMaxHalvings && inserted < kMaxInserted &&
        max_displacement(last, match_roots(last, at_b.roots)) > bound) {
      const Real mid = (a + b) / 2;
      const RawSample at_mid = sample_roots(n, mid, policy);
      ++inserted;
      self(self, a, mid, at_mid, depth + 1);
      self(self, mid, b, at_b, depth + 1);
      return;
    }
    emit(b, at_b);
  };

  emit(grid[0], base[0]);
  for (int i = 1; i < count; ++i) {
    advance(advance, grid[static_cast<size_t>(i - 1)], grid[static_cast<size_t>(i)],
            base[static_cast<size_t>(i)], 0);
  }
  return out;
}

Real refine_real_zero(int n, Real lo, Real hi, const PrecisionPolicy& policy) {
  WorkingPrecision wp(policy.bits);
  auto h = [&](const Real& w) { return hankel_det(n, w, policy).value; };
  int s_lo = sign_of(h(lo));
  if (s_lo == 0) return lo;
  const Real coarse("1e-12");
  const Real fine("1e-25");
  while (hi - lo > coarse * max(Real(1), abs(hi))) {
    const Real mid = (lo + hi) / 2;
    const int s = sign_of(h(mid));
    if (s == 0) return mid;
    if (s == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Real w = (lo + hi) / 2;
  for (int it = 0; it < 30; ++it) {
    const Real d = hankel_det_derivative(n, w, 1, policy);
    if (d.is_zero()) break;
    const Real step = h(w) / d;
    w -= step;
    if (w < lo || w > hi) break;
    if (abs(step) <= fine) return w;
  }
  // Newton left the bracket: finish by bisection.
  while (hi - lo > fine) {
    const Real mid = (lo + hi) / 2;
    const int s = sign_of(h(mid));
    if (s == 0) return mid;
    if (s == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

namespace {

// Minimum of |h_n| between lo and hi: zero of h_n' by bisection + Newton.
Real refine_dip(int n, Real lo, Real hi, const PrecisionPolicy& policy) {
  auto d1 = [&](const Real& w) { return hankel_det_derivative(n, w, 1, policy); };
  int s_lo = sign_of(d1(lo));
  if (s_lo == 0 || s_lo == sign_of(d1(hi))) return (lo + hi) / 2;
  while (hi - lo > Real("1e-20")) {
    const Real mid = (lo + hi) / 2;
    const int s = sign_of(d1(mid));
    if (s == 0) return mid;
    if (s == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace

std::vector<HankelZero> real_zero_scan(int n, const Real& omega_lo, const Real& omega_hi,
                                       int grid_points, const PrecisionPolicy& policy,
                                       int threads) {
  policy.validate();
  WorkingPrecision wp(policy.bits);
  if (!(omega_lo > Real(0)) || !(omega_lo < omega_hi)) {
    throw InvalidArgument("scan needs 0 < omega_lo < omega_hi");
  }
  if (grid_points < 2) throw InvalidArgument("scan needs at least 2 grid points");
  const auto g = static_cast<size_t>(grid_points);
  std::vector<Real> grid(g);
  std::vector<Real> values(g);
  std::vector<Real> ratio(g);
  for (size_t i = 0; i < g; ++i) {
    grid[i] = omega_lo + (omega_hi - omega_lo) * static_cast<long>(i) / (grid_points - 1);
  }
  parallel_for(grid_points, threads, [&](int i) {
    const auto ui = static_cast<size_t>(i);
    values[ui] = hankel_det(n, grid[ui], policy).value;
    ratio[ui] = abs(values[ui]) / envelope(n, Complex(grid[ui]));
  });

  struct Task {
    Real lo, hi;
    bool dip;
  };
  std::vector<Task> tasks;
  for (size_t i = 0; i + 1 < g; ++i) {
    const int a = sign_of(values[i]);
    const int b = sign_of(values[i + 1]);
    if (a == 0) {
      tasks.push_back({grid[i], grid[i], false});
    } else if (b != 0 && a != b) {
      tasks.push_back({grid[i], grid[i + 1], false});
    }
  }
  if (sign_of(values[g - 1]) == 0) tasks.push_back({grid[g - 1], grid[g - 1], false});
  for (size_t i = 1; i + 1 < g; ++i) {
    const bool same = sign_of(values[i - 1]) == sign_of(values[i]) &&
                      sign_of(values[i]) == sign_of(values[i + 1]) && sign_of(values[i]) != 0;
    if (same && ratio[i] < ratio[i - 1] && ratio[i] <= ratio[i + 1] &&
        ratio[i] < Real(kDipThreshold)) {
      tasks.push_back({grid[i - 1], grid[i + 1], true});
    }
  }

  std::vector<HankelZero> zeros(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), threads, [&](int k) {
    const Task& t = tasks[static_cast<size_t>(k)];
    const Real w = t.dip ? refine_dip(n, t.lo, t.hi, policy)
                         : (t.lo == t.hi ? t.lo : refine_real_zero(n, t.lo, t.hi, policy));
    const Real r = abs(hankel_det(n, w, policy).value) / envelope(n, Complex(w));
    zeros[static_cast<size_t>(k)] = {n, Complex(w), ZeroKind::RealLine, r, t.dip};
  });
  std::stable_sort(zeros.begin(), zeros.end(), [](const HankelZero& a, const HankelZero& b) {
    return a.omega.real() < b.omega.real();
  });
  return zeros;
}

HankelZero complex_zero_refine(int n, const Complex& omega_guess, const PrecisionPolicy& policy) {
  policy.validate();
  WorkingPrecision wp(policy.bits);
  const Real tol("1e-20");
  const Real escape = 10 * abs(omega_guess) + 10;
  Complex w = omega_guess;
  Complex h;
  for (int it = 0; it < 100; ++it) {
    h = hankel_det_complex(n, w, policy);
    if (h.is_zero()) break;
    const Complex d1 = hankel_det_derivative_complex(n, w, 1, policy);
    const Complex d2 = hankel_det_derivative_complex(n, w, 2, policy);
    // Halley's step; in the oscillatory region its cubic local model keeps
    // the iterate in the basin of the seed where Newton jumps away.
    const Complex denom = d1 * d1 * 2 - h * d2;
    if (denom.is_zero()) throw NoConvergence("vanishing Halley denominator during refinement");
    Complex step = h * d1 * 2 / denom;
    const Real length = abs(step);
    if (length > Real(1)) step /= length;
    w -= step;
    if (abs(w) > escape) {
      throw NoConvergence("refinement left the search region from guess " +
                          describe(omega_guess.real()) + " + " + describe(omega_guess.imag()) +
                          "i");
    }
    if (abs(step) <= tol) {
      const Real r = abs(hankel_det_complex(n, w, policy)) / envelope(n, w);
      const ZeroKind kind = abs(w.imag()) <= tol ? ZeroKind::RealLine : ZeroKind::ComplexPlane;
      return {n, w, kind, r, false};
    }
  }
  throw NoConvergence("refinement of h_" + std::to_string(n) + " did not converge from " +
                      describe(omega_guess.real()) + " + " + describe(omega_guess.imag()) + "i");
}

std::vector<HankelZero> complex_zero_search(int n, const Real& re_max, const Real& im_max,
                                            int grid, const PrecisionPolicy& policy,
                                            int threads) {
  policy.validate();
  if (grid < 3) throw InvalidArgument("zero search needs grid >= 3");
  if (re_max.sign() <= 0 || im_max.sign() <= 0) throw InvalidArgument("search box must be nonempty");
  WorkingPrecision wp(policy.bits);
  const size_t g = static_cast<size_t>(grid);
  auto node = [&](size_t i, size_t j) {
    return Complex(re_max * static_cast<long>(i + 1) / grid, im_max * static_cast<long>(j + 1) / grid);
  };
  std::vector<std::vector<Real>> merit(g, std::vector<Real>(g));
  parallel_for(grid, threads, [&](int i) {
    for (size_t j = 0; j < g; ++j) {
      const Complex w = node(static_cast<size_t>(i), j);
      merit[static_cast<size_t>(i)][j] = abs(hankel_det_complex(n, w, policy)) / envelope(n, w);
    }
  });

  std::vector<Complex> seeds;
  for (size_t i = 0; i < g; ++i) {
    for (size_t j = 0; j < g; ++j) {
      bool minimum = true;
      for (int di = -1; di <= 1 && minimum; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const long a = static_cast<long>(i) + di;
          const long b = static_cast<long>(j) + dj;
          if (a < 0 || b < 0 || a >= grid || b >= grid) continue;
          if (merit[static_cast<size_t>(a)][static_cast<size_t>(b)] < merit[i][j]) {
            minimum = false;
            break;
          }
        }
      }
      if (minimum) seeds.push_back(node(i, j));
    }
  }

  std::vector<std::optional<HankelZero>> refined(seeds.size());
  parallel_for(static_cast<int>(seeds.size()), threads, [&](int k) {
    try {
      refined[static_cast<size_t>(k)] = complex_zero_refine(n, seeds[static_cast<size_t>(k)], policy);
    } catch (const NoConvergence&) {
    }
  });

  const Real slack = (re_max + im_max) / grid;
  std::vector<HankelZero> out;
  for (auto& z : refined) {
    if (!z || z->kind != ZeroKind::ComplexPlane) continue;
    const Complex& w = z->omega;
    if (w.real().sign() <= 0 || w.imag().sign() <= 0) continue;
    if (w.real() > re_max + slack || w.imag() > im_max + slack) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const HankelZero& o) {
      return abs(o.omega - w) < Real(1e-10);
    });
    if (!seen) out.push_back(std::move(*z));
  }
  std::sort(out.begin(), out.end(),
            [](const HankelZero& a, const HankelZero& b) { return abs(a.omega) < abs(b.omega); });
  return out;
}

Real kissing_residual(int N, const Real& omega, const PrecisionPolicy& policy, Complex* factor) {
  if (N < 1) throw IndexOutOfRange("kissing needs N >= 1");
  WorkingPrecision wp(policy.bits);
  const Complex w(omega);
  const TildePolynomial upper = tilde_op(2 * N + 1, w, policy);
  const TildePolynomial lower = tilde_op(2 * N, w, policy);
  const Real d = hankel_det_derivative(2 * N, omega, 1, policy);
  const Real h = hankel_det(2 * N - 1, omega, policy).value;
  const Complex c(Real(0), d / h);
  if (factor != nullptr) *factor = c;
  Real worst(0);
  for (size_t k = 0; k < upper.coeffs.size(); ++k) {
    const Complex scaled = k < lower.coeffs.size() ? lower.coeffs[k] * c : Complex(Real(0));
    worst = max(worst, abs(upper.coeffs[k] - scaled));
  }
  return worst / coefficient_norm(lower.coeffs);
}

std::vector<KissingEvent> kissing_detect(int N, const Real& omega_lo, const Real& omega_hi,
                                         const PrecisionPolicy& policy, int threads) {
  if (N < 1) throw IndexOutOfRange("kissing needs N >= 1");
  WorkingPrecision wp(policy.bits);
  const double width = (omega_hi - omega_lo).to_double();
  const int grid = std::max(2, static_cast<int>(std::ceil(100 * width)) + 1);
  const auto zeros = real_zero_scan(2 * N, omega_lo, omega_hi, grid, policy, threads);
  std::vector<KissingEvent> events;
  for (const auto& z : zeros) {
    if (z.suspected_double) continue;
    const Real w = z.omega.real();
    KissingEvent e{w, Complex(Real(0)), Real(0), Real(0)};
    e.residual = kissing_residual(N, w, policy, &e.factor);
    const MonicPolynomial p = monic_op(2 * N, Complex(w), policy);
    const TildePolynomial t = tilde_op(2 * N + 1, Complex(w), policy);
    std::vector<Complex> head(t.coeffs.begin(), t.coeffs.end() - 1);
    const auto a = poly_roots(p, policy).roots;
    const auto b = poly_roots(head, policy).roots;
    e.root_distance = max_displacement(a, match_roots(a, b));
    events.push_back(std::move(e));
  }
  return events;
}

bool strictly_interlace(const std::vector<Real>& a, const std::vector<Real>& b) {
  if (a.empty() || b.empty()) return true;
  std::vector<std::pair<Real, int>> merged;
  for (const auto& x : a) merged.emplace_back(x, 0);
  for (const auto& x : b) merged.emplace_back(x, 1);
  std::stable_sort(merged.begin(), merged.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  size_t first = 0;
  while (first + 1 < merged.size() && merged[first + 1].second == merged[0].second) ++first;
  size_t last = merged.size() - 1;
  while (last > 0 && merged[last - 1].second == merged.back().second) --last;
  for (size_t i = first; i < last; ++i) {
    if (merged[i].second == merged[i + 1].second) return false;
    if (merged[i].first == merged[i + 1].first) return false;
  }
  return true;
}

InterlacingReport interlacing_check(int N_max, const Real& omega_lo, const Real& omega_hi,
                                    int grid_points, const PrecisionPolicy& policy, int threads) {
  if (N_max < 1) throw InvalidArgument("interlacing check needs N_max >= 1");
  if (grid_points < 3) throw InvalidArgument("interlacing check needs at least 3 grid points");
  policy.validate();
  WorkingPrecision wp(policy.bits);
  const int top = 2 * N_max + 1;
  const auto g = static_cast<size_t>(grid_points);
  std::vector<Real> grid(g);
  for (size_t i = 0; i < g; ++i) {
    grid[i] = omega_lo + (omega_hi - omega_lo) * static_cast<long>(i) / (grid_points - 1);
  }
  // scaled[i][n] = h_n(omega_i) / envelope_n(omega_i)
  std::vector<std::vector<Real>> scaled(g);
  parallel_for(grid_points, threads, [&](int i) {
    const auto ui = static_cast<size_t>(i);
    const std::vector<Real> h = hankel_dets(top, grid[ui], policy);
    for (int n = 0; n <= top; ++n) {
      scaled[ui].push_back(h[static_cast<size_t>(n)] / envelope(n, Complex(grid[ui])));
    }
  });

  auto zeros_of = [&](int n) {
    std::vector<std::pair<Real, Real>> brackets;
    for (size_t i = 0; i + 1 < g; ++i) {
      const int a = sign_of(scaled[i][static_cast<size_t>(n)]);
      const int b = sign_of(scaled[i + 1][static_cast<size_t>(n)]);
      if (a != b) brackets.emplace_back(grid[i], grid[i + 1]);
    }
    std::vector<Real> zs(brackets.size());
    parallel_for(static_cast<int>(brackets.size()), threads, [&](int k) {
      const auto& br = brackets[static_cast<size_t>(k)];
      zs[static_cast<size_t>(k)] = refine_real_zero(n, br.first, br.second, policy);
    });
    return zs;
  };

  InterlacingReport report;
  for (int n = 0; n <= top; ++n) {
    if (n % 2 == 0) {
      if (n <= 2 * N_max) report.even_zeros.push_back(zeros_of(n));
    } else if (n <= 2 * N_max - 1) {
      report.odd_zeros.push_back(zeros_of(n));
    }
  }

  for (size_t k = 0; k < report.odd_zeros.size(); ++k) {
    if (!report.odd_zeros[k].empty()) {
      report.odd_zero_free = false;
      std::ostringstream msg;
      msg << "finding: h_" << 2 * k + 1 << " has " << report.odd_zeros[k].size()
          << " positive real zero(s), first at " << report.odd_zeros[k].front().to_string(20);
      report.findings.push_back(msg.str());
    }
  }
  for (size_t k = 0; k + 1 < report.even_zeros.size(); ++k) {
    if (!strictly_interlace(report.even_zeros[k], report.even_zeros[k + 1])) {
      report.interlacing_holds = false;
      report.findings.push_back("finding: zeros of h_" + std::to_string(2 * k) + " and h_" +
                                std::to_string(2 * k + 2) + " do not interlace");
    }
  }

  const Real bound("1e-6");
  auto pair_min = [&](int a, int b) {
    Real m = max(abs(scaled[0][static_cast<size_t>(a)]), abs(scaled[0][static_cast<size_t>(b)]));
    for (size_t i = 1; i < g; ++i) {
      m = min(m, max(abs(scaled[i][static_cast<size_t>(a)]), abs(scaled[i][static_cast<size_t>(b)])));
    }
    return m;
  };
  for (int n = 0; n + 1 <= top && n <= 2 * N_max - 1; ++n) {
    report.adjacent_min.push_back(pair_min(n, n + 1));
    if (report.adjacent_min.back() <= bound) {
      report.propositions_hold = false;
      report.findings.push_back("violation: h_" + std::to_string(n) + " and h_" +
                                std::to_string(n + 1) + " nearly share a zero");
    }
    if (n + 2 <= top) {
      report.skip_min.push_back(pair_min(n, n + 2));
      if (report.skip_min.back() <= bound) {
        report.propositions_hold = false;
        report.findings.push_back("violation: h_" + std::to_string(n) + " and h_" +
                                  std::to_string(n + 2) + " nearly share a zero");
      }
    }
  }
  return report;
}

}  // namespace kp
