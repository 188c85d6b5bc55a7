#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lnd/dsl.hpp"

namespace lnd::dsl {

using Params = std::map<std::string, long>;

/// df5, roberts (m), f6, new7 (a, b), maubach (b).
std::vector<std::string> builtin_names();

/// Parameter names with their defaults.
Params builtin_defaults(std::string_view name);

/// Canonical check-file text; identical to the shipped corpus file.
/// Throws std::invalid_argument for unknown names, unknown parameters or
/// values out of range.
std::string builtin_text(std::string_view name, const Params& params = {});
CheckFile builtin(std::string_view name, const Params& params = {});

/// Corpus file name, e.g. `roberts_m2.lnd`.
std::string builtin_file_name(std::string_view name, const Params& params = {});

}  // namespace lnd::dsl
