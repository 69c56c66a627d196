#include "commands.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "expr.hpp"
#include "sta/errors.hpp"
#include "sta/fierz.hpp"
#include "sta/matrix_bridge.hpp"
#include "sta/measurement.hpp"

namespace sta::cli {

int cmd_eval(const std::string& text, bool matrix, std::ostream& out, std::ostream& err) {
  ExprPtr ast;
  try {
    ast = parse(text);
  } catch (const ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  }
  try {
    const EvalResult r = evaluate(*ast);
    fmt::print(out, "{}\n", format_multivector(r.value));
    if (matrix || r.show_matrix) fmt::print(out, "{}", format_matrix(to_matrix(r.value)));
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kEvalError;
  }
  return kOk;
}

int cmd_prob(Vec2 x, Vec2 y, double phi_x, double phi_y, std::ostream& out) {
  const TransitionProbability p = transition_probability(family_state(x, phi_x), family_state(y, phi_y));
  const FamilyProbability closed = family_probability(x, phi_x, y, phi_y);
  const OmegaRingElement& v = p.projective_path;
  fmt::print(out, "value: {:.12f}\n", v.c1() + 0.0);
  fmt::print(out, "value_I: {:.12f}\n", v.cI() + 0.0);
  fmt::print(out, "probability: {}\n", p.is_probability ? "yes" : "no");
  fmt::print(out, "idempotent path: {:.12f} {:+.12f} I\n", p.idempotent_path.c1() + 0.0,
             p.idempotent_path.cI() + 0.0);
  fmt::print(out, "projective path: {:.12f} {:+.12f} I\n", v.c1() + 0.0, v.cI() + 0.0);
  fmt::print(out, "closed form: {:.12f} {:+.12f} I\n", closed.value + 0.0, closed.value_I + 0.0);
  const double agree = std::max(p.residual, std::max(std::abs(closed.value - v.c1()),
                                                     std::abs(closed.value_I - v.cI())));
  fmt::print(out, "paths agree: {} (max deviation {:.3e})\n", agree <= 1e-10 ? "yes" : "no", agree);
  return kOk;
}

std::vector<GridRow> grid_rows(const GridSpec& spec, unsigned workers) {
  if (spec.steps < 2) throw DomainError("grid: steps must be at least 2");
  if (!(spec.x1_range[0] < spec.x1_range[1]) || !(spec.x2_range[0] < spec.x2_range[1])) {
    throw DomainError("grid: each range needs lo < hi");
  }
  const auto n = static_cast<std::size_t>(spec.steps);
  std::vector<GridRow> rows(n * n);
  auto axis = [&](const std::array<double, 2>& r, std::size_t k) {
    return r[0] + (r[1] - r[0]) * static_cast<double>(k) / static_cast<double>(n - 1);
  };
  const SphereState fixed_y = family_state(spec.y, spec.phi_y);
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const Vec2 x{axis(spec.x1_range, idx / n), axis(spec.x2_range, idx % n)};
      const SphereState b = spec.x_equals_y ? family_state(x, spec.phi_y) : fixed_y;
      const TransitionProbability p = transition_probability(family_state(x, spec.phi_x), b);
      rows[idx] = {x.x1, x.x2, p.projective_path.c1(), p.projective_path.cI(), p.is_probability};
    }
  };
  if (workers == 0) workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  const std::size_t chunk = (rows.size() + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (std::size_t begin = 0; begin < rows.size(); begin += chunk) {
    pool.emplace_back(fill, begin, std::min(rows.size(), begin + chunk));
  }
  for (auto& t : pool) t.join();
  return rows;
}

std::string grid_csv(const std::vector<GridRow>& rows) {
  std::string s = "x1,x2,value,value_I,is_prob\n";
  for (const auto& r : rows) {
    s += fmt::format("{:.12f},{:.12f},{:.12f},{:.12f},{}\n", r.x1 + 0.0, r.x2 + 0.0, r.value + 0.0,
                     r.value_I + 0.0, r.is_prob ? 1 : 0);
  }
  return s;
}

std::string grid_json(const std::vector<GridRow>& rows) {
  auto round12 = [](double v) { return std::round(v * 1e12) / 1e12 + 0.0; };
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"x1", round12(r.x1)},
                   {"x2", round12(r.x2)},
                   {"value", round12(r.value)},
                   {"value_I", round12(r.value_I)},
                   {"is_prob", r.is_prob}});
  }
  return arr.dump(1) + "\n";
}

int cmd_grid(const GridSpec& spec, const std::string& format, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
  if (format != "csv" && format != "json") {
    fmt::print(err, "error: unknown format '{}' (csv or json)\n", format);
    return kUsage;
  }
  std::vector<GridRow> rows;
  try {
    rows = grid_rows(spec);
  } catch (const DomainError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kEvalError;
  }
  const std::string text = format == "csv" ? grid_csv(rows) : grid_json(rows);
  if (out_path.empty() || out_path == "-") {
    out << text;
    return kOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) {
    fmt::print(err, "error: cannot write '{}'\n", out_path);
    return kIoError;
  }
  return kOk;
}

int cmd_observables(const std::array<double, 8>& parts, double tol, std::ostream& out,
                    std::ostream& err) {
  try {
    const DiracSpinor d({parts[0], parts[1]}, {parts[2], parts[3]}, {parts[4], parts[5]},
                        {parts[6], parts[7]});
    const SpinorOperator psi = spinor_operator(d);
    const Observables o = observables(psi);
    fmt::print(out, "J = {}\n", format_multivector(o.J));
    fmt::print(out, "S = {}\n", format_multivector(o.S));
    fmt::print(out, "K = {}\n", format_multivector(o.K));
    fmt::print(out, "R = {:.12g} {:+.12g} I\n", o.R1() + 0.0, o.R2() + 0.0);
    const RegularityReport reg = regularity(psi, tol);
    fmt::print(out, "class: {}\n", to_string(reg.kind));
    fmt::print(out, "vanishing: R1={} R2={} J={} S={} K={}\n", reg.R1_zero, reg.R2_zero, reg.J_zero,
               reg.S_zero, reg.K_zero);
    const FierzReport rep = fierz_check(o, tol);
    for (const auto& r : rep.stated) {
      fmt::print(out, "  {:<24} residual {:.3e}  {}\n", r.name, r.residual, r.passed ? "PASS" : "FAIL");
    }
    for (const auto& r : rep.corrected) {
      fmt::print(out, "  {:<24} residual {:.3e}  {}\n", r.name, r.residual, r.passed ? "PASS" : "FAIL");
    }
    fmt::print(out, "  J^2 >= 0: {}  K^2 <= 0: {}\n", rep.j2_nonnegative, rep.k2_nonpositive);
    return rep.consistent() ? kOk : kIdentityFailure;
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kEvalError;
  }
}

}  // namespace sta::cli
