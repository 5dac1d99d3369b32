#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pfrob/order.hpp"
#include "pfrob/semigroup.hpp"

namespace pfrob::cli {

/// Process exit statuses; 0 is success.
enum class Status : int {
    Ok = 0,
    Usage = 2,
    Parse = 3,
    Validation = 4,
    Unsupported = 5,
    Overflow = 6,
    OracleBudget = 7,
};

struct LoadedSemigroup {
    Semigroup semigroup;
    OrderSpec order;
    /// Non-empty when the input generators were not minimal.
    std::vector<std::string> warnings;
};

/// {"q": int, "generators": [[...], ...], "order": {"kind": "grlex"|"grevlex"}}.
/// "order" is optional (default grlex). Generators are minimalized.
LoadedSemigroup semigroup_from_json(const nlohmann::json& j);
nlohmann::json semigroup_to_json(const Semigroup& s, OrderSpec order);

/// "21,4" -> (21,4).
Point parse_element(std::string_view csv);

/// Parses argv (without the program name), runs one command, writes JSON or
/// text to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pfrob::cli
