#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lauricella::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kNonConvergence = 2, kMismatch = 3, kUsage = 64 };

using Field = std::variant<bool, std::int64_t, double, std::string, std::vector<double>>;
using Row = std::vector<std::pair<std::string, Field>>;

// summary holds the scalar outcome; rows hold per-point or per-draw detail;
// children are the nested reports of a batch run, in manifest order.
struct Report {
  Row summary;
  std::vector<Row> rows;
  std::vector<Report> children;
  int exit_code = kOk;

  const Field* find(const std::string& key) const;
};

enum class Format { json, csv };

struct Command {
  std::string verb;
  std::map<std::string, std::string> params;
};

struct Options {
  std::uint64_t seed = 0;
  std::optional<double> rel_tol;  // overrides LAURICELLA_REL_TOL, which overrides the library default
};

class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

const std::vector<std::string>& verbs();

// Accepted keys and a one-line description per verb.
std::string verb_schema(const std::string& verb);
std::string full_schema();

// Tokens are key=value; lists are comma separated, point lists separate points with ';'.
Command make_command(const std::string& verb, const std::vector<std::string>& tokens);
// One manifest line: "verb key=value ...".
Command parse_command(const std::string& line);

// Never throws; failures are reported through exit_code plus error fields.
Report run(const Command& cmd, const Options& opts);
Report run_batch(std::istream& manifest, const Options& opts);

std::string format_real(double v);
std::string to_json(const Report& r);
std::string to_csv(const Report& r);
std::string serialize(const Report& r, Format f);

// Reads LAURICELLA_REL_TOL; nullopt when unset. Throws UsageError when unparsable.
std::optional<double> rel_tol_from_env();

int main(int argc, char** argv);

}  // namespace lauricella::cli
