#pragma once

#include <string>
#include <utility>
#include <vector>

namespace atf::detail {

// (file name, JSON text) for every bundled script; generated at configure time.
const std::vector<std::pair<std::string, std::string>>& embedded_scripts();

}  // namespace atf::detail
