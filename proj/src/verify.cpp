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

#include "kissing/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "kissing/asymptotics.hpp"
#include "kissing/hankel.hpp"
#include "kissing/oracle.hpp"
#include "kissing/orthopoly.hpp"
#include "kissing/roots.hpp"

namespace kp {

namespace {

std::string fmt(const Real& x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x.to_double());
  return buf;
}

Real linspace(const Real& a, const Real& b, int i, int count) {
  return a + (b - a) * i / (count - 1);
}

// Terminating expansions of h_0..h_3.
Real closed_form(int n, const Real& w) {
  const Real s = sin(w);
  const Real c = cos(w);
  const Real c2 = cos(2 * w);
  const Real s2 = sin(2 * w);
  switch (n) {
    case 0:
      return 2 * s / w;
    case 1:
      return 4 / pow(w, 2L) + 2 * (c2 - 1) / pow(w, 4L);
    case 2:
      return -32 * s / pow(w, 5L) - 64 * c / pow(w, 6L) + 96 * s / pow(w, 7L) -
             32 * pow(s, 3L) / pow(w, 9L);
    default:
      return 256 / pow(w, 8L) + 512 * (c2 - 4) / pow(w, 10L) - 3072 * s2 / pow(w, 11L) -
             768 * (11 * c2 - 2) / pow(w, 12L) + 9216 * s2 / pow(w, 13L) +
             6912 * (c2 - 1) / pow(w, 14L) + 576 * pow(c2 - 1, 2L) / pow(w, 16L);
  }
}

struct Outcome {
  bool pass;
  std::string detail;
};

double tol_or(const VerifyOptions& o, double fallback) { return o.tol.value_or(fallback); }

Outcome closed_forms(const VerifyOptions& o) {
  const auto& p = o.policy;
  const Real tol(tol_or(o, 1e-25));
  Real worst(0);
  for (int n = 0; n <= 3; ++n) {
    for (int i = 0; i < 20; ++i) {
      const Real w = linspace(Real("0.5"), Real(50), i, 20);
      Real exact;
      {
        WorkingPrecision guard(p.bits + 64);
        exact = closed_form(n, w);
      }
      worst = max(worst, relative_difference(hankel_det(n, w, p).value, exact));
    }
  }
  // h_n(w) = c + q w^2 + O(w^4).
  const Real c[] = {Real(2), Real(4) / 3, Real(32) / 135, Real(256) / 23625};
  const Real q[] = {Real(-1) / 3, Real(-8) / 45, Real(-16) / 525, Real(-2048) / 1488375};
  const Real small("1e-3");
  Real taylor(0);
  for (int n = 0; n <= 3; ++n) {
    taylor = max(taylor, relative_difference(hankel_det(n, small, p).value, c[n] + q[n] * small * small));
  }
  const bool pass = worst <= tol && taylor <= Real(1e-9);
  return {pass,
          "max rel " + fmt(worst) + " (tol " + fmt(tol) + "), small-omega rel " + fmt(taylor) +
              " (tol 1e-09)"};
}

Outcome toda(const VerifyOptions& o) {
  const auto& p = o.policy;
  const Real tol(tol_or(o, 1e-20));
  std::vector<Real> worst(100);
  parallel_for(100, o.threads, [&](int i) {
    WorkingPrecision guard(p.bits);
    const Real w = linspace(Real("0.5"), Real(50), i, 100);
    Real r(0);
    for (int n = 1; n <= 6; ++n) r = max(r, toda_residual(n, w, p));
    worst[static_cast<size_t>(i)] = r;
  });
  Real m(0);
  for (const auto& r : worst) m = max(m, r);
  return {m <= tol,
          "max residual " + fmt(m) + " (tol " + fmt(tol) + ")"};
}

Outcome heine(const VerifyOptions& o) {
  const auto& p = o.policy;
  const Real tol(tol_or(o, 1e-10));
  Real worst(0);
  for (int n = 1; n <= 3; ++n) {
    for (const char* w : {"0.5", "1", "2", "5"}) {
      const Real omega{std::string_view(w)};
      const Real det = hankel_det(n - 1, omega, p).value;
      const Complex q = heine_hankel(n, Complex(omega), 0, p, o.threads);
      worst = max(worst, abs(q - Complex(det)) / abs(det));
    }
  }
  Real poly(0);
  const Complex omega(Real(2));
  const MonicPolynomial p3 = monic_op(3, omega, p);
  const Complex points[] = {Complex(Real("0.5"), Real("0.1")), Complex(Real("-0.3"), Real("0.2")),
                            Complex(Real("0.9"), Real("-0.4"))};
  for (const auto& x : points) {
    poly = max(poly, relative_difference(heine_poly(3, omega, x, 0, p, o.threads), evaluate(p3, x)));
  }
  return {worst <= tol && poly <= tol,
          "determinant rel " + fmt(worst) + ", polynomial rel " + fmt(poly) + " (tol " + fmt(tol) +
              ")"};
}

Outcome leading_even_check(const VerifyOptions& o) {
  const auto& p = o.policy;
  bool pass = true;
  std::string detail = "error ratio omega 50 -> 100:";
  for (int N = 1; N <= 3; ++N) {
    const Real a = abs(hankel_det(2 * N - 1, Real(50), p).value / leading_even(N, Real(50)) - 1);
    const Real b = abs(hankel_det(2 * N - 1, Real(100), p).value / leading_even(N, Real(100)) - 1);
    const Real ratio = a / b;
    pass = pass && ratio >= Real("1.5") && ratio <= Real("2.5");
    detail += " N=" + std::to_string(N) + " " + fmt(ratio);
  }
  return {pass, detail + " (window [1.5, 2.5])"};
}

Outcome leading_odd_check(const VerifyOptions& o) {
  const auto& p = o.policy;
  bool pass = true;
  std::string detail;
  for (int N = 1; N <= 2; ++N) {
    Real dev[2];
    Real omega[2];
    int i = 0;
    for (int m : {16, 32}) {
      omega[i] = (m + Real("0.5")) * pi();
      const Real s = sin(omega[i]);
      dev[i] = abs(hankel_det(2 * N, omega[i], p).value / leading_odd(N, omega[i]) * s - s);
      ++i;
    }
    // C is fixed at the first node; the second must satisfy dev <= C / omega.
    const Real c = dev[0] * omega[0];
    const bool ok = dev[1] <= c / omega[1];
    pass = pass && ok;
    detail += (N == 1 ? "" : "; ") + std::string("N=") + std::to_string(N) + " C " + fmt(c) +
              " ratio " + fmt(dev[0] / dev[1]);
  }
  return {pass, detail + " (second node must satisfy dev <= C/omega)"};
}

Outcome laguerre_check(const VerifyOptions& o) {
  const auto& p = o.policy;
  bool pass = true;
  std::string detail;
  for (int N = 1; N <= 3; ++N) {
    Real gaps[3];
    int i = 0;
    std::string odd_note;
    for (int w : {100, 200, 400}) {
      const Real omega(w);
      const Real bound = Real(8) / (omega * omega);
      const auto predicted = laguerre_root_prediction(N, omega, p);
      const auto even = poly_roots(monic_op(2 * N, Complex(omega), p), p).roots;
      const auto matched = match_roots(predicted, even);
      Real gap(0);
      for (size_t k = 0; k < predicted.size(); ++k) gap = max(gap, abs(predicted[k] - matched[k]));
      gaps[i++] = gap;
      pass = pass && gap <= bound;

      auto odd = poly_roots(monic_op(2 * N + 1, Complex(omega), p), p).roots;
      const auto axis = std::count_if(odd.begin(), odd.end(), [](const Complex& z) {
        return abs(z.real()) <= Real(1e-12);
      });
      std::vector<Complex> rest;
      for (const auto& z : odd)
        if (abs(z.real()) > Real(1e-12)) rest.push_back(z);
      Real odd_gap(0);
      if (rest.size() == predicted.size()) {
        const auto m = match_roots(predicted, rest);
        for (size_t k = 0; k < predicted.size(); ++k) odd_gap = max(odd_gap, abs(predicted[k] - m[k]));
      }
      const bool odd_ok = axis == 1 && rest.size() == predicted.size() && odd_gap <= bound;
      pass = pass && odd_ok;
      if (!odd_ok) odd_note += " odd fails at " + std::to_string(w) + " (" + fmt(odd_gap * omega * omega) + "/w^2)";
    }
    const Real r1 = gaps[0] / gaps[1];
    const Real r2 = gaps[1] / gaps[2];
    pass = pass && r1 >= 3 && r1 <= 5 && r2 >= 3 && r2 <= 5;
    detail += (N == 1 ? "" : "; ") + std::string("N=") + std::to_string(N) + " gap*w^2 " +
              fmt(gaps[0] * 10000) + "," + fmt(gaps[1] * 40000) + "," + fmt(gaps[2] * 160000) +
              " decay " + fmt(r1) + "," + fmt(r2) + odd_note;
  }
  return {pass, detail + " (bound 8/w^2, decay in [3, 5])"};
}

Outcome kissing_check(const VerifyOptions& o) {
  const auto& p = o.policy;
  const Real tol(tol_or(o, 1e-15));
  const auto events = kissing_detect(1, Real(5), Real(20), p, o.threads);
  if (events.size() < 3) {
    return {false,
            "found " + std::to_string(events.size()) + " zeros of h_2 in [5, 20]"};
  }
  Real residual(0);
  Real roots(0);
  for (size_t i = 0; i < 3; ++i) {
    residual = max(residual, events[i].residual);
    roots = max(roots, events[i].root_distance);
  }
  return {residual <= tol && roots <= Real(1e-12),
          "max residual " + fmt(residual) + " (tol " + fmt(tol) + "), root distance " + fmt(roots) +
              " (tol 1e-12)"};
}

Outcome peel_check(const VerifyOptions& o) {
  const auto& p = o.policy;
  const Real tol(tol_or(o, 1e-30));
  Real ratio(0);
  for (auto family : {PeelFamily::Odd, PeelFamily::Even})
    for (int N = 1; N <= 4; ++N)
      for (int k = 0; k < N; ++k)
        ratio = max(ratio, relative_difference(peel_ratio_raw(family, N, k),
                                               peel_ratio_simplified(family, N, k)));
  bool pass = ratio <= tol;
  std::string detail = "ratio rel " + fmt(ratio) + " (tol " + fmt(tol) + ")";
  for (auto family : {PeelFamily::Odd, PeelFamily::Even}) {
    for (int N = 1; N <= 2; ++N) {
      // Seeds that refine to a zero more than one unit away, or not at all,
      // belong to no zero of their own: the low branches at small |omega|.
      std::vector<std::pair<Complex, Real>> matched;
      int unmatched = 0;
      for (int ell = 0; ell < peel_phase_count(family, 0); ++ell) {
        for (const auto& pred : peel_prediction(family, N, 0, ell, p)) {
          try {
            const auto z = complex_zero_refine(pred.hankel_index, pred.omega_pred, p);
            const Real d = abs(z.omega - pred.omega_pred);
            if (d < Real(1)) {
              matched.emplace_back(z.omega, d);
            } else {
              ++unmatched;
            }
          } catch (const NoConvergence&) {
            ++unmatched;
          }
        }
      }
      std::sort(matched.begin(), matched.end(),
                [](const auto& a, const auto& b) { return abs(a.first) < abs(b.first); });
      // Distinct zeros, keeping the largest discrepancy of any seed.
      std::vector<std::pair<Complex, Real>> zeros;
      for (const auto& m : matched) {
        if (!zeros.empty() && abs(zeros.back().first - m.first) < Real(1e-10)) {
          zeros.back().second = max(zeros.back().second, m.second);
        } else {
          zeros.push_back(m);
        }
      }
      bool ok = zeros.size() >= 4;
      std::string list;
      for (size_t i = 0; i < std::min<size_t>(4, zeros.size()); ++i) {
        ok = ok && zeros[i].second <= Real("0.5");
        if (i > 0) ok = ok && zeros[i].second <= zeros[i - 1].second;
        list += (i ? "," : "") + fmt(zeros[i].second);
      }
      for (const auto& z : zeros) ok = ok && z.second <= Real("0.5");
      pass = pass && ok;
      detail += std::string("; ") + (family == PeelFamily::Odd ? "odd" : "even") + " N=" +
                std::to_string(N) + " d " + list + " (" + std::to_string(unmatched) +
                " seeds outside the asymptotic regime)";
    }
  }
  return {pass, detail};
}

Outcome scan_check(const VerifyOptions& o) {
  const auto& p = o.policy;
  const auto report = interlacing_check(3, Real("0.1"), Real(40), 4000, p, o.threads);
  const bool h1_free = report.odd_zeros[0].empty();
  const bool h3_free = report.odd_zeros[1].empty();
  const bool h24 = strictly_interlace(report.even_zeros[1], report.even_zeros[2]);
  Real adj(1e300);
  Real skip(1e300);
  for (int n = 0; n <= 5; ++n) {
    adj = min(adj, report.adjacent_min[static_cast<size_t>(n)]);
    skip = min(skip, report.skip_min[static_cast<size_t>(n)]);
  }
  std::string detail = std::string("h_1 zero-free ") + (h1_free ? "yes" : "no") + ", h_3 zero-free " +
                       (h3_free ? "yes" : "no") + ", h_2/h_4 interlace " + (h24 ? "yes" : "no") +
                       ", min adjacent " + fmt(adj) + ", min skip " + fmt(skip) + " (floor 1e-06)";
  for (const auto& f : report.findings) detail += "; finding: " + f;
  return {report.propositions_hold, detail};
}

Outcome combinatorial(const VerifyOptions&) {
  bool pass = true;
  for (int s = 0; s <= 8; ++s) pass = pass && pascal_det_check(s) == 1;
  for (int N = 0; N <= 8; ++N)
    for (int s = 0; s <= N; ++s) pass = pass && c_matrix_det_check(N, s) == binomial(N, s);
  return {pass,
          "det A[s] for s <= 8, det C[N, s] for N <= 8"};
}

using Check = std::function<Outcome(const VerifyOptions&)>;

struct Entry {
  int id;
  const char* suite;
  const char* name;
  Check run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {1, "closedforms", "closed forms of h_0..h_3", closed_forms},
      {2, "toda", "Toda identity n = 1..6", toda},
      {3, "heine", "Heine oracle against determinants", heine},
      {4, "leading", "leading order of h_{2N-1}", leading_even_check},
      {5, "leading", "leading order of h_{2N}", leading_odd_check},
      {6, "laguerre", "Laguerre endpoint roots", laguerre_check},
      {7, "kissing", "kissing at zeros of h_2", kissing_check},
      {8, "peel", "onion-peel predictions", peel_check},
      {9, "scanprops", "real-line zero structure", scan_check},
      {10, "combinatorial", "Pascal determinant identities", combinatorial},
  };
  return entries;
}

SuiteResult run_entry(const Entry& e, const VerifyOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r{e.id, e.suite, e.name, false, "", 0};
  try {
    WorkingPrecision guard(o.policy.bits);
    const Outcome out = e.run(o);
    r.pass = out.pass;
    r.detail = out.detail;
  } catch (const Error& err) {
    r.detail = err.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"closedforms", "toda",    "heine",
                                                 "leading",     "laguerre", "kissing",
                                                 "peel",        "scanprops", "combinatorial"};
  return names;
}

std::vector<SuiteResult> run_suite(std::string_view suite, const VerifyOptions& options) {
  options.policy.validate();
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
  }
  std::vector<SuiteResult> out;
  for (const auto& e : registry()) {
    if (suite == "all" || suite == e.suite) out.push_back(run_entry(e, options));
  }
  return out;
}

SuiteResult run_criterion(int id, const VerifyOptions& options) {
  options.policy.validate();
  for (const auto& e : registry()) {
    if (e.id == id) return run_entry(e, options);
  }
  throw IndexOutOfRange("criteria are numbered 1..10, got " + std::to_string(id));
}

}  // namespace kp
