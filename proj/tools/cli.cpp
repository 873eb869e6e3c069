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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "kissing/asymptotics.hpp"
#include "kissing/hankel.hpp"
#include "kissing/moments.hpp"
#include "kissing/oracle.hpp"
#include "kissing/orthopoly.hpp"
#include "kissing/roots.hpp"
#include "kissing/verify.hpp"

namespace kp::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A command's result in both output shapes.
struct Output {
  Json result = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Globals {
  long bits = 256;
  double rel_tol = 1e-30;
  std::string format = "auto";
  std::string out;
  int threads = 1;
};

class Writer {
 public:
  explicit Writer(long bits) : digits_(decimal_digits_for_bits(bits)) {}
  std::string real(const Real& x) const { return x.to_string(digits_); }
  Json complex(const Complex& z) const { return Json::array({real(z.real()), real(z.imag())}); }
  Json complexes(const std::vector<Complex>& v) const {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(complex(z));
    return a;
  }

 private:
  int digits_;
};

Real parse_real(const std::string& text, const std::string& flag) {
  try {
    return Real(std::string_view(text));
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": expected a decimal number, got '" + text + "'");
  }
}

std::pair<Real, Real> parse_range(const std::string& text, const std::string& flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError(flag + ": expected <a>:<b>, got '" + text + "'");
  Real a = parse_real(text.substr(0, colon), flag);
  Real b = parse_real(text.substr(colon + 1), flag);
  if (!(a < b)) throw UsageError(flag + ": empty range '" + text + "'");
  return {std::move(a), std::move(b)};
}

Complex parse_point(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return Complex(parse_real(text, flag));
  return {parse_real(text.substr(0, comma), flag), parse_real(text.substr(comma + 1), flag)};
}

PrecisionPolicy policy_of(const Globals& g) {
  PrecisionPolicy p;
  p.bits = g.bits;
  p.rel_tol = g.rel_tol;
  p.max_bits = std::max(p.max_bits, 4 * g.bits);
  return p;
}

// ---------------------------------------------------------------------------
// Subcommands. Each registers its flags and returns a runner.

using Runner = std::function<int(const Globals&, Output&)>;

struct Command {
  CLI::App* app = nullptr;
  Runner run;
  std::string default_format = "json";
};

Command moments_command(CLI::App& root) {
  auto* app = root.add_subcommand("moments", "moments mu_0..mu_m");
  auto m = std::make_shared<int>(0);
  auto omega = std::make_shared<std::string>();
  app->add_option("--n", *m, "highest moment index")->required()->check(CLI::NonNegativeNumber);
  app->add_option("--omega", *omega, "frequency")->required();
  return {app, [=](const Globals& g, Output& o) {
            const PrecisionPolicy p = policy_of(g);
            const Writer w(g.bits);
            const auto mu = moments(*m, Complex(parse_real(*omega, "--omega")), p);
            o.result["omega"] = *omega;
            o.result["moments"] = w.complexes(mu.values);
            o.columns = {"k", "re", "im"};
            for (int k = 0; k <= mu.degree(); ++k) {
              o.rows.push_back({std::to_string(k), w.real(mu[k].real()), w.real(mu[k].imag())});
            }
            return 0;
          }};
}

Command hankel_command(CLI::App& root) {
  auto* app = root.add_subcommand("hankel", "Hankel determinant h_n and its omega derivatives");
  auto n = std::make_shared<int>(0);
  auto omega = std::make_shared<std::string>();
  auto deriv = std::make_shared<int>(0);
  app->add_option("--n", *n, "determinant index")->required();
  app->add_option("--omega", *omega, "frequency")->required();
  app->add_option("--deriv", *deriv, "derivative order")->check(CLI::Range(0, 2))->capture_default_str();
  return {app, [=](const Globals& g, Output& o) {
            const PrecisionPolicy p = policy_of(g);
            const Writer w(g.bits);
            const Real x = parse_real(*omega, "--omega");
            const Real h = *deriv == 0 ? hankel_det(*n, x, p).value : hankel_det_derivative(*n, x, *deriv, p);
            o.result["n"] = *n;
            o.result["omega"] = *omega;
            o.result["deriv"] = *deriv;
            o.result["h"] = w.real(h);
            o.columns = {"n", "omega", "deriv", "h"};
            o.rows.push_back({std::to_string(*n), *omega, std::to_string(*deriv), w.real(h)});
            return 0;
          }};
}

Command poly_command(CLI::App& root) {
  auto* app = root.add_subcommand("poly", "orthogonal polynomial coefficients");
  auto n = std::make_shared<int>(0);
  auto omega = std::make_shared<std::string>();
  auto tilde = std::make_shared<bool>(false);
  auto at = std::make_shared<std::string>();
  app->add_option("--n", *n, "degree")->required()->check(CLI::NonNegativeNumber);
  app->add_option("--omega", *omega, "frequency")->required();
  app->add_flag("--tilde", *tilde, "h_{n-1} p_n, defined at every omega");
  app->add_option("--eval", *at, "evaluation point <re>,<im>");
  return {app, [=](const Globals& g, Output& o) {
            const PrecisionPolicy p = policy_of(g);
            const Writer w(g.bits);
            const Complex x(parse_real(*omega, "--omega"));
            std::vector<Complex> coeffs;
            std::optional<Complex> value;
            std::optional<Complex> point;
            if (!at->empty()) point = parse_point(*at, "--eval");
            o.result["n"] = *n;
            o.result["omega"] = *omega;
            o.result["tilde"] = *tilde;
            if (*tilde) {
              const TildePolynomial t = tilde_op(*n, x, p);
              coeffs = t.coeffs;
              if (point) value = evaluate(t, *point);
              o.result["numerical_degree"] = t.numerical_degree(Real(kDegeneracyThreshold));
            } else {
              const MonicPolynomial m = monic_op(*n, x, p);
              coeffs = m.coeffs;
              if (point) value = evaluate(m, *point);
            }
            o.result["coefficients"] = w.complexes(coeffs);
            if (value) {
              o.result["eval"] = w.complex(*point);
              o.result["value"] = w.complex(*value);
            }
            o.columns = {"k", "re", "im"};
            for (size_t k = 0; k < coeffs.size(); ++k) {
              o.rows.push_back({std::to_string(k), w.real(coeffs[k].real()), w.real(coeffs[k].imag())});
            }
            if (value) o.rows.push_back({"value", w.real(value->real()), w.real(value->imag())});
            return 0;
          }};
}

Command recurrence_command(CLI::App& root) {
  auto* app = root.add_subcommand("recurrence", "three-term recurrence coefficients");
  auto m = std::make_shared<int>(0);
  auto omega = std::make_shared<std::string>();
  app->add_option("--m", *m, "number of alphas")->required()->check(CLI::PositiveNumber);
  app->add_option("--omega", *omega, "frequency")->required();
  return {app, [=](const Globals& g, Output& o) {
            const PrecisionPolicy p = policy_of(g);
            const Writer w(g.bits);
            const auto rc = recurrence_coeffs(*m, parse_real(*omega, "--omega"), p);
            o.result["m"] = *m;
            o.result["omega"] = *omega;
            o.result["alpha"] = w.complexes(rc.alphas);
            o.result["beta"] = w.complexes(rc.betas);
            o.columns = {"n", "alpha_re", "alpha_im", "beta_re", "beta_im"};
            for (size_t k = 0; k < rc.alphas.size(); ++k) {
              std::vector<std::string> row = {std::to_string(k), w.real(rc.alphas[k].real()),
                                              w.real(rc.alphas[k].imag()), "", ""};
              if (k >= 1) {
                row[3] = w.real(rc.betas[k - 1].real());
                row[4] = w.real(rc.betas[k - 1].imag());
              }
              o.rows.push_back(std::move(row));
            }
            return 0;
          }};
}

Command trajectory_command(CLI::App& root) {
  auto* app = root.add_subcommand("trajectory", "roots of p_n along an omega interval");
  auto n = std::make_shared<int>(0);
  auto range = std::make_shared<std::string>();
  auto steps = std::make_shared<int>(100);
  app->add_option("--n", *n, "degree")->required()->check(CLI::PositiveNumber);
  app->add_option("--omega-range", *range, "<a>:<b>")->required();
  app->add_option("--steps", *steps, "equispaced steps")->check(CLI::PositiveNumber)->capture_default_str();
  return {app,
          [=](const Globals& g, Output& o) {
            const PrecisionPolicy p = policy_of(g);
            const Writer w(g.bits);
            const auto [a, b] = parse_range(*range, "--omega-range");
            const auto samples = trajectory(*n, a, b, *steps, p, g.threads);
            o.result["n"] = *n;
            Json list = Json::array();
            o.columns = {"omega", "root_index", "re", "im", "exists_flag"};
            for (const auto& s : samples) {
              list.push_back({{"omega", w.real(s.omega)}, {"exists", s.exists}, {"roots", w.complexes(s.roots)}});
              for (int k = 0; k < *n; ++k) {
                const bool have = s.exists && static_cast<size_t>(k) < s.roots.size();
                o.rows.push_back({w.real(s.omega), std::to_string(k),
                                  have ? w.real(s.roots[static_cast<size_t>(k)].real()) : "nan",
                                  have ? w.real(s.roots[static_cast<size_t>(k)].imag()) : "nan",
                                  s.exists ? "1" : "0"});
              }
            }
            o.result["samples"] = std::move(list);
            return 0;
          },
          "csv"};
}

Json zero_json(const HankelZero& z, const Writer& w) {
  return {{"omega", w.complex(z.omega)},
          {"kind", z.kind == ZeroKind::RealLine ? "real" : "complex"},
          {"residual", w.real(z.residual)},
          {"suspected_double", z.suspected_double}};
}

void zero_row(Output& o, const HankelZero& z, const Writer& w) {
  o.rows.push_back({std::to_string(z.n), w.real(z.omega.real()), w.real(z.omega.imag()),
                    z.kind == ZeroKind::RealLine ? "real" : "complex", w.real(z.residual),
                    z.suspected_double ? "1" : "0"});
}

Command scan_command(CLI::App& root) {
  auto* app = root.add_subcommand("scan", "real zeros of h_n on an interval");
  auto n = std::make_shared<int>(0);
  auto range = std::make_shared<std::string>();
  auto grid = std::make_shared<int>(1000);
  app->add_option("--n", *n, "determinant index")->required()->check(CLI::NonNegativeNumber);
  app->add_option("--range", *range, "<a>:<b>")->required();
  app->add_option("--grid", *grid, "grid points")->check(CLI::Range(2, 100000000))->capture_default_str();
  return {app,
          [=](const Globals& g, Output& o) {
            const PrecisionPolicy p = policy_of(g);
            const Writer w(g.bits);
            const auto [a, b] = parse_range(*range, "--range");
            const auto zeros = real_zero_scan(*n, a, b, *grid, p, g.threads);
            o.result["n"] = *n;
            Json list = Json::array();
            o.columns = {"n", "re", "im", "kind", "residual", "suspected_double"};
            for (const auto& z : zeros) {
              list.push_back(zero_json(z, w));
              zero_row(o, z, w);
            }
            o.result["zeros"] = std::move(list);
            return 0;
          },
          "csv"};
}

// Zeros of h_n seeded by every onion-peel prediction of its family.
std::vector<std::pair<HankelZero, PeelPrediction>> peel_seeded(int n, const PrecisionPolicy& p) {
  if (n < 1) throw IndexOutOfRange("peel seeds need n >= 1");
  const PeelFamily family = n % 2 == 1 ? PeelFamily::Odd : PeelFamily::Even;
  const int N = n % 2 == 1 ? (n + 1) / 2 : n / 2;
  std::vector<std::pair<HankelZero, PeelPrediction>> out;
  for (int k = 0; k < N; ++k) {
    for (int ell = 0; ell < peel_phase_count(family, k); ++ell) {
      for (const auto& pred : peel_prediction(family, N, k, ell, p)) {
        try {
          HankelZero z = complex_zero_refine(n, pred.omega_pred, p);
          if (z.kind != ZeroKind::ComplexPlane || z.omega.real().sign() <= 0 || z.omega.imag().sign() <= 0)
            continue;
          const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& e) {
            return abs(e.first.omega - z.omega) < Real(1e-10);
          });
          if (!seen) out.emplace_back(std::move(z), pred);
        } catch (const NoConvergence&) {
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return abs(a.first.omega) < abs(b.first.omega);
  });
  return out;
}

Command zeros_command(CLI::App& root) {
  auto* app = root.add_subcommand("zeros", "complex zeros of h_n");
  auto n = std::make_shared<int>(0);
  auto quadrant = std::make_shared<bool>(false);
  auto from = std::make_shared<std::string>("peel");
  auto re_max = std::make_shared<std::string>("30");
  auto im_max = std::make_shared<std::string>("10");
  auto grid = std::make_shared<int>(60);
  app->add_option("--n", *n, "determinant index")->required()->check(CLI::PositiveNumber);
  app->add_flag("--quadrant", *quadrant, "first quadrant only (otherwise conjugates are added)");
  app->add_option("--refine-from", *from, "seed source")
      ->check(CLI::IsMember({"peel", "grid"}))
      ->capture_default_str();
  app->add_option("--re-max", *re_max, "grid search box, real extent")->capture_default_str();
  app->add_option("--im-max", *im_max, "grid search box, imaginary extent")->capture_default_str();
  app->add_option("--grid", *grid, "grid search lattice size")->check(CLI::Range(3, 100000))->capture_default_str();
  return {app,
          [=](const Globals& g, Output& o) {
            const PrecisionPolicy p = policy_of(g);
            const Writer w(g.bits);
            std::vector<HankelZero> zeros;
            std::vector<std::optional<PeelPrediction>> seeds;
            if (*from == "peel") {
              for (auto& [z, pred] : peel_seeded(*n, p)) {
                zeros.push_back(std::move(z));
                seeds.emplace_back(pred);
              }
            } else {
              zeros = complex_zero_search(*n, parse_real(*re_max, "--re-max"), parse_real(*im_max, "--im-max"),
                                          *grid, p, g.threads);
              seeds.resize(zeros.size());
            }
            if (!*quadrant) {
              const size_t count = zeros.size();
              for (size_t i = 0; i < count; ++i) {
                HankelZero c = zeros[i];
                c.omega = conj(c.omega);
                zeros.push_back(std::move(c));
                seeds.push_back(seeds[i]);
              }
            }
            o.result["n"] = *n;
            o.result["refine_from"] = *from;
            Json list = Json::array();
            o.columns = {"n", "re", "im", "kind", "residual", "suspected_double"};
            for (size_t i = 0; i < zeros.size(); ++i) {
              Json z = zero_json(zeros[i], w);
              if (seeds[i]) {
                z["seed"] = {{"k", seeds[i]->k}, {"ell", seeds[i]->ell}, {"branch", seeds[i]->branch},
                             {"omega_pred", w.complex(seeds[i]->omega_pred)}};
              }
              list.push_back(std::move(z));
              zero_row(o, zeros[i], w);
            }
            o.result["zeros"] = std::move(list);
            return 0;
          }};
}

Command peel_command(CLI::App& root) {
  auto* app = root.add_subcommand("peel", "onion-peel zero predictions");
  auto parity = std::make_shared<std::string>();
  auto N = std::make_shared<int>(1);
  auto k = std::make_shared<int>(0);
  auto branches = std::make_shared<int>(4);
  app->add_option("--parity", *parity, "odd: zeros of h_{2N-1}; even: zeros of h_{2N}")
      ->required()
      ->check(CLI::IsMember({"even", "odd"}));
  app->add_option("--N", *N, "half degree")->required()->check(CLI::PositiveNumber);
  app->add_option("--k", *k, "peel index")->check(CLI::NonNegativeNumber)->capture_default_str();
  app->add_option("--branches", *branches, "Lambert W branches -b..b")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  return {app, [=](const Globals& g, Output& o) {
            const PrecisionPolicy p = policy_of(g);
            const Writer w(g.bits);
            const PeelFamily family = *parity == "odd" ? PeelFamily::Odd : PeelFamily::Even;
            o.result["parity"] = *parity;
            o.result["N"] = *N;
            o.result["k"] = *k;
            o.result["ratio_raw"] = w.complex(peel_ratio_raw(family, *N, *k));
            o.result["ratio_simplified"] = w.complex(peel_ratio_simplified(family, *N, *k));
            Json list = Json::array();
            o.columns = {"hankel_index", "ell", "branch", "re", "im"};
            for (int ell = 0; ell < peel_phase_count(family, *k); ++ell) {
              for (const auto& pred : peel_prediction(family, *N, *k, ell, p, *branches)) {
                list.push_back({{"hankel_index", pred.hankel_index}, {"ell", ell}, {"branch", pred.branch},
                                {"omega_pred", w.complex(pred.omega_pred)}});
                o.rows.push_back({std::to_string(pred.hankel_index), std::to_string(ell),
                                  std::to_string(pred.branch), w.real(pred.omega_pred.real()),
                                  w.real(pred.omega_pred.imag())});
              }
            }
            o.result["predictions"] = std::move(list);
            return 0;
          }};
}

Command kissing_command(CLI::App& root) {
  auto* app = root.add_subcommand("kissing", "degeneracy events at real zeros of h_{2N}");
  auto N = std::make_shared<int>(1);
  auto range = std::make_shared<std::string>();
  app->add_option("--N", *N, "half degree")->required()->check(CLI::PositiveNumber);
  app->add_option("--range", *range, "<a>:<b>")->required();
  return {app, [=](const Globals& g, Output& o) {
            const PrecisionPolicy p = policy_of(g);
            const Writer w(g.bits);
            const auto [a, b] = parse_range(*range, "--range");
            const auto events = kissing_detect(*N, a, b, p, g.threads);
            o.result["N"] = *N;
            Json list = Json::array();
            o.columns = {"omega", "factor_re", "factor_im", "residual", "root_distance"};
            for (const auto& e : events) {
              list.push_back({{"omega", w.real(e.omega)}, {"factor", w.complex(e.factor)},
                              {"residual", w.real(e.residual)}, {"root_distance", w.real(e.root_distance)}});
              o.rows.push_back({w.real(e.omega), w.real(e.factor.real()), w.real(e.factor.imag()),
                                w.real(e.residual), w.real(e.root_distance)});
            }
            o.result["events"] = std::move(list);
            return 0;
          }};
}

Command oracle_command(CLI::App& root) {
  auto* app = root.add_subcommand("oracle", "h_{n-1} by n-fold quadrature");
  auto n = std::make_shared<int>(1);
  auto omega = std::make_shared<std::string>();
  auto order = std::make_shared<int>(0);
  app->add_option("--n", *n, "integral dimension")->required()->check(CLI::PositiveNumber);
  app->add_option("--omega", *omega, "frequency")->required();
  app->add_option("--order", *order, "points per axis (0: automatic)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  return {app, [=](const Globals& g, Output& o) {
            const PrecisionPolicy p = policy_of(g);
            const Writer w(g.bits);
            const Real x = parse_real(*omega, "--omega");
            const int q = *order > 0 ? *order : default_heine_order(*n, Complex(x));
            const Complex value = heine_hankel(*n, Complex(x), q, p, g.threads);
            const Real det = hankel_det(*n - 1, x, p).value;
            const Real rel = abs(value - Complex(det)) / abs(det);
            o.result["n"] = *n;
            o.result["omega"] = *omega;
            o.result["order"] = q;
            o.result["quadrature"] = w.complex(value);
            o.result["determinant"] = w.real(det);
            o.result["relative_difference"] = w.real(rel);
            o.columns = {"n", "omega", "order", "quadrature_re", "quadrature_im", "determinant", "relative_difference"};
            o.rows.push_back({std::to_string(*n), *omega, std::to_string(q), w.real(value.real()),
                              w.real(value.imag()), w.real(det), w.real(rel)});
            return 0;
          }};
}

Command verify_command(CLI::App& root) {
  auto* app = root.add_subcommand("verify", "acceptance suites");
  auto suite = std::make_shared<std::string>("all");
  auto tol = std::make_shared<double>(0);
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  app->add_option("--suite", *suite, "suite name")->check(CLI::IsMember(names))->capture_default_str();
  app->add_option("--tol", *tol, "overrides the principal tolerance")->check(CLI::PositiveNumber);
  return {app, [=](const Globals& g, Output& o) {
            VerifyOptions options;
            options.policy = policy_of(g);
            options.threads = g.threads;
            if (*tol > 0) options.tol = *tol;
            const auto results = run_suite(*suite, options);
            bool all = true;
            Json list = Json::array();
            o.columns = {"id", "suite", "name", "pass", "detail"};
            for (const auto& r : results) {
              all = all && r.pass;
              list.push_back({{"id", r.id}, {"suite", r.suite}, {"name", r.name}, {"pass", r.pass},
                              {"detail", r.detail}});
              o.rows.push_back({std::to_string(r.id), r.suite, r.name, r.pass ? "1" : "0", r.detail});
            }
            o.result["suite"] = *suite;
            o.result["pass"] = all;
            o.result["results"] = std::move(list);
            return all ? 0 : 2;
          }};
}

// ---------------------------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// Every option of the app and the selected subcommand with its effective
// value, in registration order.
Json flag_record(const CLI::App& root, const CLI::App& sub) {
  Json flags = Json::object();
  auto add = [&](const CLI::App& app) {
    for (const CLI::Option* opt : app.get_options()) {
      const std::string name = opt->get_name();
      if (name == "--help" || name == "--version" || name.empty()) continue;
      if (opt->count() > 0) {
        const auto& r = opt->results();
        if (opt->get_type_size() == 0) {
          flags[name] = true;
        } else {
          flags[name] = r.empty() ? "" : r.back();
        }
      } else if (opt->get_type_size() == 0) {
        flags[name] = false;
      } else if (!opt->get_default_str().empty()) {
        flags[name] = opt->get_default_str();
      }
    }
  };
  add(root);
  add(sub);
  return flags;
}

void emit(std::ostream& os, const Output& o, const std::string& format, const Json& provenance) {
  if (format == "json") {
    Json doc = Json::object();
    doc["provenance"] = provenance;
    doc["result"] = o.result;
    os << doc.dump(2) << '\n';
    return;
  }
  os << "# program: " << provenance["program"].get<std::string>() << ' '
     << provenance["version"].get<std::string>() << '\n';
  os << "# command: " << provenance["command"].get<std::string>() << '\n';
  os << "# flags: " << provenance["flags"].dump() << '\n';
  os << "# bits: " << provenance["bits"].get<long>() << '\n';
  for (size_t i = 0; i < o.columns.size(); ++i) os << (i ? "," : "") << csv_field(o.columns[i]);
  os << '\n';
  for (const auto& row : o.rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomials orthogonal with respect to exp(i omega x) on [-1, 1]", "kissing"};
  app.set_version_flag("--version", std::string(KISSING_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.threads = default_thread_count();
  app.add_option("--bits", g.bits, "working precision in bits (>= 64)")
      ->check(CLI::Range(64L, 1L << 20))
      ->capture_default_str();
  app.add_option("--rel-tol", g.rel_tol, "self-check tolerance")->capture_default_str();
  app.add_option("--format", g.format, "json, csv, or auto (csv for trajectory and scan)")
      ->check(CLI::IsMember({"auto", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "output file (default: standard output)");
  app.add_option("--threads", g.threads, "worker threads (default: KP_THREADS or 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<Command> commands = {
      moments_command(app),    hankel_command(app), poly_command(app),    recurrence_command(app),
      trajectory_command(app), scan_command(app),   zeros_command(app),   peel_command(app),
      kissing_command(app),    oracle_command(app), verify_command(app)};

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << KISSING_VERSION << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }

  const auto selected = std::find_if(commands.begin(), commands.end(),
                                     [](const Command& c) { return c.app->parsed(); });
  if (selected == commands.end()) {
    err << "usage error: a subcommand is required\n";
    return 1;
  }

  Output output;
  int status = 0;
  try {
    PrecisionPolicy probe = policy_of(g);
    probe.validate();
    WorkingPrecision wp(g.bits);
    status = selected->run(g, output);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  Json provenance = Json::object();
  provenance["program"] = "kissing";
  provenance["version"] = KISSING_VERSION;
  provenance["command"] = selected->app->get_name();
  provenance["flags"] = flag_record(app, *selected->app);
  provenance["bits"] = g.bits;
  provenance["rel_tol"] = g.rel_tol;
  provenance["threads"] = g.threads;

  const std::string format = g.format == "auto" ? selected->default_format : g.format;
  if (g.out.empty()) {
    emit(out, output, format, provenance);
  } else {
    std::ofstream file(g.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << g.out << "' for writing\n";
      return 1;
    }
    emit(file, output, format, provenance);
  }
  return status;
}

}  // namespace kp::cli
