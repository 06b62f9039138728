#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dseries {

// Exit codes: 0 success, 1 verification or internal failure, 2 usage error.
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// DELTASERIES_MAX_ORDER, default 128.
std::size_t max_order_from_env();

}  // namespace dseries
