#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "effint/error.hpp"
#include "effint/orbifold.hpp"

namespace effint::cli {

inline constexpr std::string_view kSchemaId = "effint.report/v1";
inline constexpr std::string_view kVersion = "0.1.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitBound = 3;

struct FoliationFile {
  std::optional<std::string> name;
  std::string P;
  std::string Q;
  std::vector<std::string> candidates;
};

// A parse failure inside one field of an input file.
class FieldError : public InputError {
 public:
  FieldError(std::string field, std::optional<std::size_t> offset, const std::string& what)
      : InputError(field + ": " + what), field_(std::move(field)), offset_(offset) {}
  const std::string& field() const noexcept { return field_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  std::string field_;
  std::optional<std::size_t> offset_;
};

// JSON object {name?, P, Q, candidates?}. Polynomials are checked here so that syntax
// errors carry their field and offset. Throws InputError / FieldError.
FoliationFile parse_foliation_file(std::string_view text);

// Tokens g=<int> b=<o,o,..> c=<int> d=<m,..> e=<l,..> profile=<name>. Throws InputError.
std::pair<OrbifoldData, KodairaOneProfile> parse_orbifold_tokens(
    const std::vector<std::string>& tokens);

// "7" or "3..30". Throws InputError.
std::pair<int, int> parse_m_range(std::string_view text);

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

// Runs one command line (without the program name). Reports go to `out`, diagnostics to
// `err`. `env_threads` stands in for EFFINT_THREADS.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_threads = std::nullopt);

}  // namespace effint::cli
