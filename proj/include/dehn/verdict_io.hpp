#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dehn/engine.hpp"

namespace dehn {

inline constexpr int kSchemaVersion = 1;

nlohmann::ordered_json verdict_to_json(const Verdict& v);
nlohmann::ordered_json classify_result_json(const std::string& knot, const Slope& slope,
                                            const Verdict& v);

// Human-readable block; `with_trace` appends the fired rules.
void print_verdict(std::ostream& out, const std::string& knot, const Slope& slope,
                   const Verdict& v, bool with_trace, bool color);

}  // namespace dehn
