#ifndef HYPERD_TOOLS_CLI_SUPPORT_HPP
#define HYPERD_TOOLS_CLI_SUPPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperd/gammakit.hpp"

namespace hyperd::cli {

// Complex literals: "0.5", "-2", "0.5+0.25i", "1e-3-2i", "2i", "-i".
std::optional<cplx> parse_complex(std::string_view text);

// "re0:re1:n,im0:im1:m". Points are ordered with the real part outermost.
std::optional<std::vector<cplx>> parse_grid(std::string_view text);

// Number in 17 significant digits; non-finite values become `null` in JSON
// and nan/inf in CSV.
std::string json_number(double x);
std::string csv_number(double x);

std::string json_string(std::string_view s);

}  // namespace hyperd::cli

#endif  // HYPERD_TOOLS_CLI_SUPPORT_HPP
