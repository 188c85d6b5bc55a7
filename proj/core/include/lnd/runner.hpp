#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lnd/dsl.hpp"
#include "lnd/groebner.hpp"
#include "lnd/subalgebra.hpp"

namespace lnd::dsl {

inline constexpr int kSchemaVersion = 1;
const char* tool_version();

struct RunOptions {
  unsigned nmax = kDefaultNmax;
  std::size_t gb_steps = kDefaultGroebnerSteps;
};

enum class Outcome { Pass, Fail, Inconclusive };
std::string to_string(Outcome o);

struct CheckResult {
  std::size_t index = 0;
  int line = 0;
  std::string kind;
  std::string name;  // the directive as printed
  Outcome status = Outcome::Inconclusive;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::string message;
  double elapsed_ms = 0;
};

struct RunReport {
  std::vector<CheckResult> results;
  double elapsed_ms = 0;

  std::size_t count(Outcome o) const;
  /// 0 all pass, 1 any fail, 2 inconclusive without fail.
  int exit_code() const;
};

/// Runs every check in file order. Mathematical failures and resource
/// ceilings become fail / inconclusive entries; nothing is thrown.
RunReport run(const CheckFile& f, const RunOptions& opts = {});

/// 64-bit FNV-1a, hex.
std::string digest(std::string_view bytes);

/// Deterministic JSON apart from the `elapsed_ms` fields.
std::string report_json(const RunReport& r, std::string_view input_name,
                        std::string_view input_text, const RunOptions& opts);

/// The full generator construction for the four-variable example as JSON.
std::string maubach_json(unsigned b);

}  // namespace lnd::dsl
