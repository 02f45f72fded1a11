#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cayley {

// Exit codes: 0 success, 1 verified-statement violated (witness printed),
// 2 invalid input, 3 resource guard hit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley
