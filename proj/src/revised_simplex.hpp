#pragma once

#include "signcert/lp_solve.hpp"

namespace signcert::detail {

// Double-precision revised simplex with a product-form basis inverse. Used for
// Arithmetic::kFloat; it avoids the fill-in of the explicit tableau on large
// models.
LpSolution solve_revised(const LpModel& model, const SolveOptions& opt);

}  // namespace signcert::detail
