#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "jkres/arrangement.hpp"
#include "jkres/eisenstein.hpp"
#include "jkres/residues.hpp"

namespace jkres::io {

using ojson = nlohmann::ordered_json;

// {"rank": r, "forms": [[...], ...]}; the list order is the total
// order used by every order-sensitive construction.
Arrangement parse_arrangement(const ojson& j);

// {"numerator": [{"coefficient": c, "exponents": [...]}, ...],
//  "denominator": [{"form": i, "multiplicity": m}, ...]}
// The numerator defaults to the constant 1.  Rationals are JSON
// integers or strings "a/b".
RationalFunction parse_function(const ojson& j, const Arrangement& arr);

Rational parse_rational(const ojson& j);

// Comma-separated rationals, e.g. "1/3,-2/7".
std::vector<Rational> parse_rational_point(const std::string& s, int rank);

// Comma-separated complex numbers, each "a", "a+bi" or "a-bi".
std::vector<std::complex<double>> parse_complex_point(const std::string& s, int rank);

// Exact values are serialized as decimal strings: they routinely
// exceed 64-bit integer range.
ojson rational_to_json(const Rational& q);
ojson polynomial_to_json(const Polynomial& p);

struct JobSpec {
    std::string command;
    std::optional<ojson> arrangement;
    std::optional<ojson> function;
    std::optional<std::string> t;
    bool limit_zero = false;
    long radius = 100;
    int window_scale = 1;
    long k = -1;                    // one-variable kernel order
    std::optional<std::string> z;   // complex evaluation point
    std::optional<std::string> y;   // kernel shift point
};

// Computes the result envelope; throws the typed errors from
// errors.hpp on invalid input or failed preconditions.
ojson run_job(const JobSpec& spec);

// Serializes run_job's result (or a structured error object) to out
// and returns the process exit code: 0 ok, 2 validation,
// 3 precondition, 4 stability or window overflow.
int run_cli_job(const JobSpec& spec, std::ostream& out);

} // namespace jkres::io
