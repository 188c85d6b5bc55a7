// lndcheck: run check files, expand builtin examples, and small one-off
// computations. Exit codes: 0 all pass, 1 a check failed, 2 inconclusive
// (no failure), 3 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lnd/derivation.hpp"
#include "lnd/dsl.hpp"
#include "lnd/registry.hpp"
#include "lnd/runner.hpp"

namespace {

constexpr int kUsage = 3;

using namespace lnd;

struct RunFlags {
  std::string report;
  unsigned nmax = kDefaultNmax;
  std::size_t gb_steps = kDefaultGroebnerSteps;
  bool quiet = false;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--report", f.report, "Write the JSON report here ('-' for stdout)");
  cmd->add_option("--nmax", f.nmax, "Largest localization exponent tried")->check(CLI::Range(0u, 64u));
  cmd->add_option("--gb-steps", f.gb_steps, "Groebner step ceiling per computation")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("-q,--quiet", f.quiet, "Only print the summary line");
}

// what() already carries the position and the expected-token set.
void print_parse_error(const std::string& where, const ParseError& e) {
  std::cerr << where << ": error: " << e.what() << "\n";
}

int run_text(const std::string& name, const std::string& text, const RunFlags& flags) {
  dsl::CheckFile f;
  try {
    f = dsl::parse(text);
  } catch (const ParseError& e) {
    print_parse_error(name, e);
    return kUsage;
  }
  dsl::RunOptions opts{flags.nmax, flags.gb_steps};
  dsl::RunReport rep = dsl::run(f, opts);
  const bool json_to_stdout = flags.report == "-";
  std::ostream& out = json_to_stdout ? std::cerr : std::cout;
  if (!flags.quiet) {
    for (const auto& r : rep.results) {
      std::string tag = dsl::to_string(r.status);
      for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      out << "[" << tag << "] " << name << ":" << r.line << " " << r.name << "\n";
      if (r.status != dsl::Outcome::Pass) {
        if (!r.message.empty()) out << "    " << r.message << "\n";
        for (const auto& [k, v] : r.witnesses) out << "    " << k << " = " << v << "\n";
      }
    }
  }
  out << rep.results.size() << " checks: " << rep.count(dsl::Outcome::Pass) << " pass, "
      << rep.count(dsl::Outcome::Fail) << " fail, " << rep.count(dsl::Outcome::Inconclusive)
      << " inconclusive\n";
  if (!flags.report.empty()) {
    std::string json = dsl::report_json(rep, name, text, opts);
    if (json_to_stdout) {
      std::cout << json;
    } else {
      std::ofstream os(flags.report, std::ios::binary);
      if (!os) {
        std::cerr << "error: cannot write " << flags.report << "\n";
        return kUsage;
      }
      os << json;
    }
  }
  return rep.exit_code();
}

std::vector<std::string> split_vars(std::string s) {
  for (auto& c : s)
    if (c == '(' || c == ')' || c == ',') c = ' ';
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for locally nilpotent derivations and their invariant rings"};
  app.set_version_flag("--version", std::string(dsl::tool_version()));
  app.require_subcommand(1);

  RunFlags check_flags;
  std::string check_file;
  auto* check = app.add_subcommand("check", "Run the checks in a .lnd file");
  check->add_option("file", check_file, "Check file ('-' reads stdin)")->required();
  add_run_flags(check, check_flags);

  RunFlags ex_flags;
  std::string ex_name;
  std::vector<std::string> ex_params;
  bool emit = false;
  auto* example = app.add_subcommand("example", "Expand or run a builtin example");
  example->add_option("name", ex_name, "df5, roberts, f6, new7 or maubach")->required();
  example->add_option("--param", ex_params, "Parameter as k=v (roberts: m; new7: a, b; maubach: b)");
  example->add_flag("--emit-file", emit, "Print the expanded check file instead of running it");
  add_run_flags(example, ex_flags);

  unsigned mb = 1;
  auto* maubach = app.add_subcommand("maubach", "Kernel generators of y d/dz + z d/du + u^b d/dw as JSON");
  maubach->add_option("--b", mb, "Exponent b >= 1")->required()->check(CLI::Range(1u, 12u));

  std::string th_ring, th_der, th_of;
  auto* theta_cmd = app.add_subcommand("theta", "Exponential map of a derivation applied to a polynomial");
  theta_cmd->add_option("--ring", th_ring, "Variables, e.g. 'x,s,t,u,v'")->required();
  theta_cmd->add_option("--derivation", th_der, "Images, e.g. '{ s -> x^3, t -> s }'")->required();
  theta_cmd->add_option("--of", th_of, "Polynomial to transform")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) {
      std::string text;
      if (check_file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
      } else {
        std::ifstream in(check_file, std::ios::binary);
        if (!in) {
          std::cerr << "error: cannot read " << check_file << "\n";
          return kUsage;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      return run_text(check_file, text, check_flags);
    }

    if (*example) {
      dsl::Params params;
      for (const auto& kv : ex_params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
          std::cerr << "error: --param expects k=v, got '" << kv << "'\n";
          return kUsage;
        }
        try {
          std::size_t used = 0;
          long v = std::stol(kv.substr(eq + 1), &used);
          if (used != kv.size() - eq - 1) throw std::invalid_argument("");
          params[kv.substr(0, eq)] = v;
        } catch (const std::exception&) {
          std::cerr << "error: --param value must be an integer: '" << kv << "'\n";
          return kUsage;
        }
      }
      std::string text;
      try {
        text = dsl::builtin_text(ex_name, params);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
      }
      if (emit) {
        std::cout << text;
        return 0;
      }
      return run_text(dsl::builtin_file_name(ex_name, params), text, ex_flags);
    }

    if (*maubach) {
      std::string json = dsl::maubach_json(mb);
      std::cout << json;
      return json.find("\"ok\": true") != std::string::npos ? 0 : 1;
    }

    if (*theta_cmd) {
      RingPtr ring;
      Derivation d;
      Poly p;
      try {
        ring = Ring::make(split_vars(th_ring));
        d = dsl::parse_derivation(ring, th_der);
        p = parse_poly(ring, th_of);
      } catch (const ParseError& e) {
        print_parse_error("argument", e);
        return kUsage;
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
      }
      TPoly t = theta(d, p);
      std::cout << to_string(t) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
