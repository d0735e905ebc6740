#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hardylab/symbols.hpp"

namespace hardylab::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kBadConfig = 2, kNumeric = 3 };

/// Lambda grammar:
///   i, -i, 0.5, 1/2, 3/5+4/5i   exact Gaussian rationals
///   1e-3, 0.5+0.25e-1i          numeric complex (anything with an exponent)
///   rot:p/q                     exp(2 pi i p/q)
///   irr:theta                   exp(2 pi i theta), theta asserted irrational
///   golden                      irr:(sqrt(5)-1)/2
/// Throws ConfigError on malformed input.
LambdaSpec parse_lambda(const std::string& text);

/// Phi grammar:
///   0.9,0.5           coefficient list c_0,c_1,... (complex literals allowed)
///   @path             same list read from a file (commas or whitespace)
///   psi:p             the psi_p family
///   phi0, phi1        0.9 + 0.5z and 0.99 + 0.5z
/// Coefficient lists made only of decimal or fraction literals count as exact data.
SymbolSpec parse_phi(const std::string& text);

/// One complex literal as used in coefficient lists ("0.5", "-1/2", "3/5+4/5i", "2i").
/// `exact` is cleared when a part is not an exact rational.
cplx parse_complex(const std::string& text, bool* exact = nullptr);

/// Runs one command line (without the program name). Never throws; returns an exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardylab::cli
