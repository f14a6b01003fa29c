#ifndef UNIVALENT_CLI_REGISTRY_HPP
#define UNIVALENT_CLI_REGISTRY_HPP

#include <string>
#include <vector>

#include <univalent/loewner.hpp>
#include <univalent/schlicht.hpp>

namespace univalent::cli
{

/// "koebe", "identity", "koebe-rot:<theta>" or "coeffs:<json>". The JSON is
/// either the series object or an array of reals / [re, im] pairs.
ClassSFunction make_function(const std::string &spec, std::size_t order);

/// True when the spec can be rebuilt at any order (closed forms).
bool is_closed_form(const std::string &spec);

/// "polar:<R>x<A>" (radii i/(R+1), A angles) or "list:<re>,<im>;<re>,<im>;...".
std::vector<Complex> parse_grid(const std::string &spec);

/// Writes text to `path` ("" or "-" means stdout). Relative paths are placed
/// under $UNIVALENT_OUT_DIR when it is set. Throws IoFailure.
void write_output(const std::string &path, const std::string &text);

} // namespace univalent::cli

#endif
