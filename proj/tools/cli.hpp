#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padic_henon::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kBudgetExceeded = 3;

// Runs `padic-henon args...` writing results to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic_henon::cli
