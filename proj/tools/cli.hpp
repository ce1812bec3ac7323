#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace catqi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< verification failed or quadrature did not converge
inline constexpr int kExitUsage = 2;    ///< bad flags, malformed input, domain errors

/// Entry point of the catqi tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catqi::cli
