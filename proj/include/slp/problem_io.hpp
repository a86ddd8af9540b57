#pragma once

#include <string>
#include <string_view>

#include "slp/problem.hpp"

namespace slp {

/// Problem definition file: a flat key = value document, versioned with
/// `format = 1`. Keys: h1, h2 (numbers); alpha, beta (two numbers each);
/// gamma, delta (four numbers each); r, p, q (three quoted expression
/// strings each, one per subinterval). '#' starts a comment.
///
/// Example:
///   format = 1
///   h1 = -0.3333333333333333
///   h2 = 0.3333333333333333
///   alpha = [0, -1]
///   beta = [1, 0]
///   gamma = [1, 1, 1, 1]
///   delta = [1, 1, 1, 1]
///   r = ["1", "1", "1"]
///   p = ["1", "1", "1"]
///   q = ["0", "0", "0"]
ProblemSpec parse_problem_text(std::string_view text);

ProblemSpec load_problem_file(const std::string& path);

/// Canonical serialization (round-trips bit-exactly: numbers print with
/// enough digits to reparse to the same double).
std::string problem_to_text(const ProblemSpec& spec);

void save_problem_file(const ProblemSpec& spec, const std::string& path);

}  // namespace slp
