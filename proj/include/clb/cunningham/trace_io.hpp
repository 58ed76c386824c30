#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "clb/cunningham/rule.hpp"

namespace clb::cunningham {

// header line then one line per step
std::string to_jsonl(const RunTrace& trace);
RunTrace from_jsonl(std::string_view text);

// nullopt when identical, else a description of the first differing line
std::optional<std::string> diff_traces(std::string_view actual, std::string_view golden);

}  // namespace clb::cunningham
