#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hct/inversion.hpp"
#include "hct/ode.hpp"

namespace hct {

// Exit codes: 0 every check in scope passed, 1 numeric failure, 2 usage or input error.
constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

// args excludes the program name. JSON lines go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ODEJob {
    ODEProblem problem;
    std::vector<double> grid;
    ODEMethod method = ODEMethod::Residue;
    double tol = 1e-6;  // Bromwich line tolerance
};

// Parses an ODE job from JSON text. Unknown keys are rejected.
ODEJob parse_ode_config(const std::string& json_text, int forced_level = 0);

// Laurent coefficients of sum n_k p^k D(p)^{-1} at infinity, with a radius above every pole.
LaurentTail laurent_tail(const RationalImage& R, int terms);

}  // namespace hct
