#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lierig::cli {

enum class Format { Text, Machine };

struct Options {
  Format format = Format::Text;
  std::optional<std::filesystem::path> out;
  std::filesystem::path data_dir;
};

// Exit codes: 0 = computation completed (any verdict), 2 = invalid input, 3 = internal failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInternal = 3;

/// Algebra arguments are file paths, or "catalog:<key>[:params]".
void cmd_check(const std::string& algebra, const Options& opts, std::ostream& os);
void cmd_derivations(const std::string& algebra, const Options& opts, std::ostream& os);
void cmd_char_nilpotent(const std::string& algebra, const Options& opts, std::ostream& os);
void cmd_semidirect(const std::string& algebra, const Options& opts, std::ostream& os);
void cmd_rigidity(const std::filesystem::path& embedding, const Options& opts, std::ostream& os);
void cmd_catalog(const std::string& key, const std::vector<long>& params, const Options& opts, std::ostream& os);
void cmd_abelian_unique(const std::string& algebra, const std::string& ideal_spec, const Options& opts, std::ostream& os);
void cmd_obstruction(const std::string& l, const std::string& g, const Options& opts, std::ostream& os);

/// Parses argv, dispatches, and maps exceptions onto the exit-code contract.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lierig::cli
