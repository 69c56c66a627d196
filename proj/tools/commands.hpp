#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sta/spinor_ops.hpp"

namespace sta::cli {

enum ExitCode : int { kOk = 0, kIdentityFailure = 1, kUsage = 2, kEvalError = 3, kIoError = 4 };

int cmd_eval(const std::string& text, bool matrix, std::ostream& out, std::ostream& err);

struct FamilyResidual {
  std::string name;
  double max_residual = 0.0;
};

// Residual families on n seeded random inputs.
std::vector<FamilyResidual> run_identity_suite(std::uint64_t seed, long n);
int cmd_identities(std::uint64_t seed, long n, double tol, std::ostream& out, std::ostream& err);

int cmd_prob(Vec2 x, Vec2 y, double phi_x, double phi_y, std::ostream& out);

struct GridSpec {
  Vec2 y{1.0, 1.0};
  double phi_x = 0.0;
  double phi_y = 0.0;
  std::array<double, 2> x1_range{-3.0, 3.0};
  std::array<double, 2> x2_range{-3.0, 3.0};
  int steps = 61;
  bool x_equals_y = false;  // y tracks x at every point
};

struct GridRow {
  double x1 = 0.0;
  double x2 = 0.0;
  double value = 0.0;
  double value_I = 0.0;
  bool is_prob = false;
};

// Throws DomainError for an invalid spec. Rows are ordered with x1 outer,
// x2 inner, whatever order the workers finish in.
std::vector<GridRow> grid_rows(const GridSpec& spec, unsigned workers = 0);
std::string grid_csv(const std::vector<GridRow>& rows);
std::string grid_json(const std::vector<GridRow>& rows);
int cmd_grid(const GridSpec& spec, const std::string& format, const std::string& out_path,
             std::ostream& out, std::ostream& err);

// Spinor as re/im pairs of phi1..phi4.
int cmd_observables(const std::array<double, 8>& parts, double tol, std::ostream& out,
                    std::ostream& err);

}  // namespace sta::cli
