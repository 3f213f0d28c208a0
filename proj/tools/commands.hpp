#pragma once

// Subcommands of the apolar tool. Each returns a report whose checks are
// fixed per command; the process exit code is 0 iff every check passed.

#include "apolar/multigraded.hpp"
#include "apolar/parallel.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace apolar::cli {

inline constexpr const char* kVersion = "0.1.0";
/// Derived form seeds tried before a check is reported as rejected-genericity.
inline constexpr int kReseeds = 8;

using ojson = nlohmann::ordered_json;

enum class Status { Pass, Fail, RejectedGenericity };
std::string to_string(Status s);

struct Options {
  std::uint64_t seed = 0;
  double tol_rank = 1e-8;
  double tol_res = 1e-9;
  int restarts = 64;
  std::optional<std::size_t> samples;
  std::size_t seeds = 2;          // rank: number of Terracini seeds
  Schedule schedule = Schedule::Parallel;
};

struct Check {
  std::string name;
  Status status = Status::Fail;
  ojson payload = ojson::object();
};

class Report {
 public:
  Report(std::string command, const Options& opts) : command_(std::move(command)), opts_(opts) {}

  std::string surface;
  std::optional<DegreeClass> degree;
  ojson data = ojson::object();

  void check(const std::string& name, bool ok, ojson payload = ojson::object());
  void reject(const std::string& name, ojson payload = ojson::object());
  /// Adds a failing record for every contract check that was never evaluated.
  void complete(const std::vector<std::string>& contract);
  void time(const std::string& stage, double seconds) { timings_[stage] = seconds; }

  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;
  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }
  ojson to_json(bool with_timings = true) const;

 private:
  std::string command_;
  Options opts_;
  std::vector<Check> checks_;
  std::map<std::string, double> timings_;
};

/// "a,b" -> {a, b}; throws std::invalid_argument.
DegreeClass parse_degree(const std::string& text);

Report cmd_dims(const std::string& surface, DegreeClass degree, const Options& opts);
Report cmd_profile(const std::string& surface, DegreeClass degree, const Options& opts);
Report cmd_rank(const std::string& surface, DegreeClass degree, const Options& opts);
Report cmd_case22(const Options& opts);
Report cmd_case33(const Options& opts);
Report cmd_casef1(const Options& opts);
/// Throws ParseError for malformed files and std::invalid_argument for
/// well-formed inputs that cannot be compared.
Report cmd_check(const std::string& form_text, const std::string& scheme_text, const Options& opts);

}  // namespace apolar::cli
