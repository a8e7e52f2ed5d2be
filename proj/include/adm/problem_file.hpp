#pragma once

#include <adm/problem.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace adm {

/**
 * Malformed problem document. field() is the JSON path of the offending
 * value, e.g. "nonlinear[0].u_power".
 */
class ProblemFileError : public std::runtime_error {
public:
    ProblemFileError(std::string field, const std::string& message);
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/*
 * Problem documents are single JSON objects:
 *
 *   {
 *     "name": "ex41",                        optional
 *     "order": 7,                            optional, default 7
 *     "b": 1.0,
 *     "left":  [1, 0, -1, -2],               u^(i)(0), i = 0, 1, ...
 *     "right": [0, -2.718281828459045, ...], u^(j)(b), j = 0, 1, ...
 *     "phi": [{"poly": [0, 1], "exp_rate": 0}],
 *     "psi": [{"poly": [-6, -2, 1], "exp_rate": 1}],
 *     "nonlinear": [{"weight_poly": [-1], "weight_exp_rate": 1,
 *                    "u_power": 2, "du_power": 0, "coefficient": 1}],
 *     "exact": [{"poly": [1, -1], "exp_rate": 1}]
 *   }
 *
 * phi, psi and exact are sums of poly(x) * exp(exp_rate * x). A null entry
 * in left/right leaves that derivative order unconstrained, which validation
 * then rejects as a gap. Unknown keys are errors at every level.
 */
ProblemSpec parse_problem_string(const std::string& text,
                                 std::size_t truncation_order = default_truncation_order);

/// Throws std::ios_base::failure when the file cannot be read.
ProblemSpec parse_problem_file(const std::filesystem::path& path,
                               std::size_t truncation_order = default_truncation_order);

/// Needs the closed forms (phi_form, psi_form, weight forms); built-ins carry them.
std::string serialize_problem(const ProblemSpec& spec);

} // namespace adm
