#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qzs::cli {

inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Exit codes: 0 success, 1 a verification failed, 2 usage or parameter error.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qzs::cli
