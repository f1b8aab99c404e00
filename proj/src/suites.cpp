// Copyright 2026 The stochan Authors
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


#include "stochan/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <stdexcept>

#include "stochan/designs.hpp"
#include "stochan/diamond.hpp"
#include "stochan/random.hpp"
#include "stochan/stochastic.hpp"
#include "stochan/twirl.hpp"

namespace stochan::suites {

namespace {

std::string sci(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3e", v);
  return buffer;
}

CheckResult result(int id, std::string name, bool passed, std::string detail) {
  return {id, std::move(name), passed, std::move(detail)};
}

double sdp_value(const Channel& phi, bool* converged) {
  DiamondOptions opt;
  opt.force_sdp = true;
  const DiamondResult r = diamond_distance(phi, opt);
  if (r.method != DiamondMethod::kSdp) *converged = false;
  return r.value;
}

CheckResult stochastic_diamond_equals_infidelity() {
  double worst = 0.0;
  bool converged = true;
  for (const Index d : {4, 6}) {
    for (const double lam : {0.5, 0.9, 0.99}) {
      const Channel phi = paper_example(lam, d);
      worst = std::max(worst, std::abs(sdp_value(phi, &converged) -
                                       process_infidelity(phi)));
    }
  }
  for (const Index d : {2, 3, 4}) {
    Rng rng = make_rng(101, std::uint64_t(d));
    for (int k = 0; k < 50; ++k) {
      const Channel phi = random_stochastic_channel(d, rng);
      worst = std::max(worst, std::abs(sdp_value(phi, &converged) -
                                       process_infidelity(phi)));
    }
  }
  return result(1, "stochastic channels: SDP diamond distance equals infidelity",
                converged && worst <= 1e-6,
                "max |r_diamond - r| = " + sci(worst) +
                    (converged ? "" : " (SDP did not converge)"));
}

CheckResult infidelity_lower_bound() {
  double worst = -1.0;  // max of r - r_diamond
  bool converged = true;
  for (const Index d : {2, 3}) {
    Rng rng = make_rng(102, std::uint64_t(d));
    for (int k = 0; k < 100; ++k) {
      const Channel phi = random_channel(d, rng, 1 + Index(k % (d * d)));
      worst = std::max(worst, process_infidelity(phi) - sdp_value(phi, &converged));
    }
  }
  return result(2, "random channels: SDP diamond distance >= infidelity",
                converged && worst <= 1e-7,
                "max (r - r_diamond) = " + sci(worst) +
                    (converged ? "" : " (SDP did not converge)"));
}

CheckResult nonunital_example() {
  const Channel phi = paper_example(0.9, 4);
  const CptpReport report = validate_cptp(phi);
  const auto lambda = stochastic_eigenvalue(phi);
  const ComplexMatrix id4 = ComplexMatrix::Identity(4, 4);
  const ComplexMatrix image = stochan::apply(phi, id4);
  const ComplexMatrix expected =
      0.9 * id4 + 0.1 * kron(ComplexMatrix::Identity(2, 2), 2.0 * ket_bra(0, 0, 2));
  const double image_err = max_abs_diff(image, expected);
  const double norm_err = std::abs(trace_norm(image - id4) - 0.4);
  const double lambda_err = lambda ? std::abs(*lambda - 0.9) : 1.0;
  const bool ok = report.is_cptp() && !report.is_unital && lambda &&
                  lambda_err <= 1e-12 && image_err <= 1e-12 && norm_err <= 1e-10;
  return result(3, "non-unital stochastic example (lambda = 0.9, d = 4)", ok,
                "|lambda - 0.9| = " + sci(lambda_err) + ", image error " +
                    sci(image_err) + ", |nonunitality - 0.4| = " + sci(norm_err));
}

std::vector<std::pair<std::string, UnitaryDesign>> cross_check_designs() {
  Rng rng = make_rng(104, 99);
  return {{"pauli:1", pauli_design(1)},
          {"pauli:2", pauli_design(2)},
          {"wh:3", weyl_heisenberg_design(3)},
          {"wh:4", weyl_heisenberg_design(4)},
          {"rotated pauli:1", rotated_design(random_unitary(2, rng), pauli_design(1))}};
}

CheckResult twirl_routes_agree() {
  double worst = 0.0;
  for (const auto& [key, mu] : cross_check_designs()) {
    Rng rng = make_rng(104, std::uint64_t(mu.dim * 100 + mu.elements.size()));
    for (int k = 0; k < 20; ++k) {
      const Channel phi = random_channel(mu.dim, rng);
      worst = std::max(worst, max_abs_diff(twirl_definition(phi, mu).choi(),
                                           twirl_choi(phi, mu).choi()));
    }
  }
  return result(4, "twirl: Kraus-side definition matches Choi-side formula",
                worst <= 1e-11, "max Choi deviation = " + sci(worst));
}

struct TwirlSweep {
  bool all_detected = true;
  bool designs_verified = true;
  double worst_lambda = 0.0;
  double worst_unitality = 0.0;
  int outputs = 0;
};

// Random channels with F_e > 0.01 at d = 2, 3, 4, twirled over every design
// of matching dimension.
TwirlSweep twirl_sweep() {
  TwirlSweep s;
  Rng urng = make_rng(105, 0);
  std::vector<UnitaryDesign> designs = {
      pauli_design(1), weyl_heisenberg_design(2),
      rotated_design(random_unitary(2, urng), pauli_design(1)),
      weyl_heisenberg_design(3),
      rotated_design(random_unitary(3, urng), weyl_heisenberg_design(3)),
      pauli_design(2), weyl_heisenberg_design(4)};
  for (const auto& mu : designs) {
    if (!verify_1design(mu).passes) s.designs_verified = false;
  }
  for (const Index d : {2, 3, 4}) {
    Rng rng = make_rng(105, std::uint64_t(d));
    int accepted = 0;
    while (accepted < 20) {
      const Channel phi = random_channel(d, rng);
      const double fe = process_fidelity(phi);
      if (fe <= 0.01) continue;
      ++accepted;
      for (const auto& mu : designs) {
        if (mu.dim != d) continue;
        const Channel out = twirl_choi(phi, mu);
        ++s.outputs;
        const auto lambda = stochastic_eigenvalue(out);
        if (!lambda) {
          s.all_detected = false;
        } else {
          s.worst_lambda = std::max(s.worst_lambda, std::abs(*lambda - fe));
        }
        s.worst_unitality =
            std::max(s.worst_unitality, validate_cptp(out).unitality_residual);
      }
    }
  }
  return s;
}

CheckResult twirls_are_stochastic() {
  const TwirlSweep s = twirl_sweep();
  return result(5, "twirled channels are stochastic with lambda = F_e",
                s.designs_verified && s.all_detected && s.worst_lambda <= 1e-10,
                std::to_string(s.outputs) + " twirls, max |lambda - F_e| = " +
                    sci(s.worst_lambda) +
                    (s.all_detected ? "" : ", detection failed") +
                    (s.designs_verified ? "" : ", design not verified"));
}

CheckResult twirls_are_unital() {
  const TwirlSweep s = twirl_sweep();
  return result(6, "twirled channels are unital",
                s.designs_verified && s.worst_unitality <= 1e-10,
                std::to_string(s.outputs) + " twirls, max unitality residual = " +
                    sci(s.worst_unitality));
}

CheckResult design_dependence() {
  const Channel phi = paper_example(0.9, 4);
  Rng rng = make_rng(107);
  const UnitaryDesign wh = weyl_heisenberg_design(4);
  const UnitaryDesign rotated = rotated_design(random_unitary(4, rng), wh);
  const Channel a = twirl_choi(phi, wh);
  const Channel b = twirl_choi(phi, rotated);
  const double choi_diff = max_abs_diff(a.choi(), b.choi());
  const double fe_diff = std::abs(process_fidelity(a) - process_fidelity(b));
  const DiamondResult ra = diamond_distance(a);
  const DiamondResult rb = diamond_distance(b);
  const double rd_diff = std::abs(ra.value - rb.value);
  const bool ok = choi_diff > 1e-3 && fe_diff <= 1e-9 && rd_diff <= 1e-9 &&
                  ra.method == DiamondMethod::kStochasticFastPath &&
                  rb.method == DiamondMethod::kStochasticFastPath;
  return result(7, "twirl output depends on the design, F_e and r_diamond do not",
                ok,
                "Choi difference " + sci(choi_diff) + ", |dF_e| = " +
                    sci(fe_diff) + ", |dr_diamond| = " + sci(rd_diff));
}

QubitParams random_qubit_params(Rng& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> shift(-0.4, 0.4);
  std::bernoulli_distribution coin(0.5);
  QubitParams p;
  for (auto& e : p.eta) e = unit(rng);
  if (coin(rng)) {
    for (auto& k : p.kappa) k = shift(rng);
  }
  return p;
}

CheckResult qubit_unitality() {
  Rng rng = make_rng(108);
  std::bernoulli_distribution mostly(0.9);
  int samples = 0;
  int detected = 0;
  int nonzero_kappa = 0;
  int detected_nonzero_kappa = 0;
  double worst = 0.0;
  while (samples < 10000) {
    const QubitParams p = random_qubit_params(rng);
    const Channel phi = qubit_choi_bz(p);
    if (!validate_cptp(phi).is_cp) continue;
    ++samples;
    const bool kappa_zero = p.kappa[0] == 0.0 && p.kappa[1] == 0.0 && p.kappa[2] == 0.0;
    if (!kappa_zero) ++nonzero_kappa;
    const ComplexMatrix u = random_unitary(2, rng);
    const ComplexMatrix v = mostly(rng) ? ComplexMatrix(u.adjoint())
                                        : random_unitary(2, rng);
    const Channel xi = sandwich(u, phi, v);
    if (!stochastic_eigenvalue(xi)) continue;
    ++detected;
    worst = std::max(worst, validate_cptp(xi).unitality_residual);
    if (!kappa_zero) ++detected_nonzero_kappa;
  }
  const bool part_a = detected > 0 && nonzero_kappa > 0 && worst <= 1e-8;

  const NonunitalSearchResult qubit = search_nonunital(2, 208, 50);
  NonunitalSearchOptions opt;
  opt.lambda = 0.9;
  const NonunitalSearchResult four = search_nonunital(4, 209, 8, opt);
  const bool part_b = qubit.best_nonunitality <= 1e-6 &&
                      four.best_nonunitality >= 0.4 - 1e-4 &&
                      four.witness_tp_residual <= 1e-9;
  return result(8, "stochastic qubit channels are unital; d = 4 need not be",
                part_a && part_b,
                std::to_string(detected) + "/" + std::to_string(samples) +
                    " CP samples stochastic (" +
                    std::to_string(detected_nonzero_kappa) + " of " +
                    std::to_string(nonzero_kappa) +
                    " with kappa != 0), max unitality residual " + sci(worst) +
                    "; search d=2 best " + sci(qubit.best_nonunitality) +
                    ", d=4 best " + sci(four.best_nonunitality));
}

CheckResult design_verification() {
  double worst_pass = 0.0;
  bool ok = true;
  std::vector<UnitaryDesign> good = {pauli_design(1), pauli_design(2)};
  for (Index d = 2; d <= 6; ++d) good.push_back(weyl_heisenberg_design(d));
  for (const auto& mu : good) {
    const DesignCheck c = verify_1design(mu);
    worst_pass = std::max(worst_pass, c.residual);
    ok = ok && c.passes && c.residual <= 1e-11;
  }
  const UnitaryDesign trivial{2, {{1.0, ComplexMatrix::Identity(2, 2)}}};
  const UnitaryDesign dephasing{
      2, {{0.5, ComplexMatrix::Identity(2, 2)}, {0.5, pauli::z()}}};
  const bool rejects = !verify_1design(trivial).passes &&
                       !verify_1design(dephasing).passes;
  return result(9, "1-design verification", ok && rejects,
                "max residual of Pauli/WH designs " + sci(worst_pass) +
                    (rejects ? ", non-designs rejected" : ", a non-design passed"));
}

CheckResult kernel_identities() {
  Rng rng = make_rng(110);
  double worst_vec = 0.0;
  double worst_trace = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Index d = 2 + k % 3;
    const ComplexMatrix a = random_ginibre(d, d, rng);
    const ComplexMatrix b = random_ginibre(d, d, rng);
    const ComplexMatrix c = random_ginibre(d, d, rng);
    worst_vec = std::max(worst_vec, max_abs_diff(col(a * b * c),
                                                 kron(c.transpose(), a) * col(b)));
    worst_trace = std::max(
        worst_trace, std::abs((a.adjoint() * b).trace() - col(a).dot(col(b))));
  }
  double worst_kraus = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Index d = 2 + k % 3;
    const Channel phi = random_channel(d, rng, 1 + Index(k % (d * d)));
    worst_kraus = std::max(
        worst_kraus, max_abs_diff(choi_of(canonical_kraus(phi), d).choi(), phi.choi()));
  }
  return result(10, "vectorization identities and canonical Kraus round trip",
                worst_vec <= 1e-12 && worst_trace <= 1e-12 && worst_kraus <= 1e-9,
                "col identity " + sci(worst_vec) + ", trace identity " +
                    sci(worst_trace) + ", Kraus round trip " + sci(worst_kraus));
}

}  // namespace

int check_count() { return 10; }

CheckResult run_check(int id) {
  static const std::vector<std::function<CheckResult()>> checks = {
      stochastic_diamond_equals_infidelity, infidelity_lower_bound,
      nonunital_example,                    twirl_routes_agree,
      twirls_are_stochastic,                twirls_are_unital,
      design_dependence,                    qubit_unitality,
      design_verification,                  kernel_identities};
  if (id < 1 || id > check_count()) throw std::out_of_range("no such check");
  try {
    return checks[size_t(id - 1)]();
  } catch (const std::exception& e) {
    return result(id, "check " + std::to_string(id), false,
                  std::string("exception: ") + e.what());
  }
}

std::optional<std::vector<int>> suite_checks(const std::string& name) {
  if (name == "thm1") return std::vector<int>{1, 2};
  if (name == "thm2-3") return std::vector<int>{3, 5, 6, 7};
  if (name == "thm4") return std::vector<int>{8};
  if (name == "lemma1") return std::vector<int>{4, 10};
  if (name == "designs") return std::vector<int>{9};
  if (name == "all") return std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  return std::nullopt;
}

std::string format(const CheckResult& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) +
         "] " + r.name + ": " + r.detail;
}

bool run_suite(const std::string& name, std::ostream& out) {
  const auto ids = suite_checks(name);
  if (!ids) throw std::invalid_argument("unknown suite '" + name + "'");
  bool all = true;
  for (const int id : *ids) {
    const CheckResult r = run_check(id);
    out << format(r) << '\n' << std::flush;
    all = all && r.passed;
  }
  return all;
}

}  // namespace stochan::suites
