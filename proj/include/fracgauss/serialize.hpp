#pragma once

#include <string>

#include "fracgauss/approx.hpp"

namespace fracgauss {

/// {"label", "a", "sigma", "terms": [{"alpha": [re, im], "gamma": [re, im]}]}.
/// a and sigma are null when absent. Doubles round-trip exactly.
std::string sum_to_json(const ExponentialSum& sum, int indent = 2);

/// Inverse of sum_to_json. Extra keys (such as "report") are ignored.
/// Throws Error(kInvalidArgument) on malformed input.
ExponentialSum sum_from_json(const std::string& text);

std::string report_to_json(const SolveReport& report, int indent = 2);

/// Solver output document: the sum fields plus a "report" object.
std::string solution_to_json(const ExponentialSum& sum, const SolveReport& report, int indent = 2);

/// CSV "axis,re,im" (plus "re_exact,im_exact" when `exact` is given), %.17g.
std::string grid_to_csv(const ComplexGrid& grid, const ComplexGrid* exact = nullptr);

/// Write to path.tmp then rename over path. Throws Error(kIo).
void write_file_atomic(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace fracgauss
