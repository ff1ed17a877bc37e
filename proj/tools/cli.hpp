#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// Character tables are emitted for s up to this value.
inline constexpr unsigned kCharTableMaxS = 6;
/// `fourier` without --label covers every nontrivial irrep up to this s.
inline constexpr unsigned kFourierAllMaxS = 6;

/// Runs the `hw` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hw::cli
