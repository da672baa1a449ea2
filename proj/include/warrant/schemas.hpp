#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "warrant/reason.hpp"

namespace warrant {

/// Built-in reason-schemas, parsed once from their DSL text.
const std::vector<Reason>& builtin_schemas();

/// Throws std::out_of_range for an unknown name.
const Reason& builtin(std::string_view name);
const Reason* find_builtin(std::string_view name);

/// Source text of every built-in, in definition order.
std::string builtin_library_text();

}  // namespace warrant
