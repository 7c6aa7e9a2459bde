#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idealcore/errors.hpp"
#include "idealcore/reduction.hpp"
#include "runner.hpp"

using namespace idealcore;

namespace {

const std::vector<std::string> kCommands = {
    "analyze", "core", "hilbert", "reduction-number", "fiber-ring", "check"};

bool known_command(const std::string& c) {
  for (const std::string& k : kCommands)
    if (c == k) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact computation of cores of ideals for desk-scale graded and local "
      "rings"};
  app.name("idealcore");

  std::vector<std::string> positionals;
  std::string command, method, sample, ideal_list, reduction_list;
  std::vector<std::string> field_tokens;
  int n_max = -1;
  long long seed = -1;
  std::vector<long> primes;
  bool json_out = false;

  app.add_option("args", positionals,
                 "job file, optionally preceded by a command token")
      ->expected(1, 2);
  app.add_option("--command", command,
                 "analyze | core | hilbert | reduction-number | fiber-ring | "
                 "check");
  app.add_option("--method", method,
                 "theorem16 | saturation | generic-contraction | bruteforce | "
                 "onedim | equimultiple");
  app.add_option("--n-max", n_max, "stabilization window for the V_n chain");
  app.add_option("--prime", primes, "oracle prime, repeatable")
      ->allow_extra_args(false);
  app.add_option("--sample", sample, "exhaustive | random:<N>");
  app.add_option("--seed", seed, "seed for random sampling");
  app.add_flag("--json", json_out, "machine-readable report");
  app.add_option("--ideal", ideal_list, "bracketed polynomial list");
  app.add_option("--reduction", reduction_list, "bracketed polynomial list");
  app.add_option("--field", field_tokens, "Q | Qbar | Fp <p>")->expected(1, 3);

  CLI11_PARSE(app, argc, argv);

  try {
    // the two-token form "--field Fp 13" tends to swallow the job path as
    // well; hand any overflow back to the positional list
    if (!field_tokens.empty()) {
      size_t want = field_tokens[0] == "Fp" ? 2 : 1;
      for (size_t i = want; i < field_tokens.size(); ++i)
        positionals.push_back(field_tokens[i]);
      if (field_tokens.size() > want) field_tokens.resize(want);
    }
    if (positionals.empty() || positionals.size() > 2)
      throw ContextError("expected a job file (optionally preceded by a "
                         "command token)");

    std::string jobpath, poscmd;
    if (positionals.size() == 2) {
      poscmd = positionals[0];
      jobpath = positionals[1];
      if (!known_command(poscmd))
        throw ContextError("unknown command '" + poscmd + "'");
    } else {
      jobpath = positionals[0];
      if (known_command(jobpath))
        throw ContextError("command '" + jobpath +
                           "' needs a job file argument");
    }

    JobSpec spec = load_job(jobpath);
    if (!poscmd.empty()) spec.command = poscmd;
    if (!command.empty()) spec.command = command;
    if (spec.command.empty()) spec.command = "analyze";
    if (!method.empty()) spec.method = method;
    if (n_max >= 0) spec.n_max = n_max;
    if (!sample.empty()) spec.sample = sample;
    if (seed >= 0) spec.seed = static_cast<unsigned long>(seed);
    if (!primes.empty()) spec.primes = primes;
    if (!ideal_list.empty()) spec.ideal = parse_bracket_list(ideal_list);
    if (!reduction_list.empty())
      spec.reduction = parse_bracket_list(reduction_list);

    if (!field_tokens.empty()) {
      const std::string& t0 = field_tokens[0];
      if (t0 == "Q") {
        spec.field_token = "Q";
        spec.semantics = semantics_name(Semantics::RationalPoints);
      } else if (t0 == "Qbar") {
        spec.field_token = "Qbar";
        spec.semantics = semantics_name(Semantics::AlgClosed);
      } else if (t0 == "Fp") {
        if (field_tokens.size() != 2)
          throw ContextError("--field Fp needs a modulus");
        spec.field_token = "Fp " + field_tokens[1];
        spec.semantics = semantics_name(Semantics::PrimeFieldPoints);
      } else {
        throw ContextError("--field must be Q, Qbar or Fp <p>");
      }
      field_of(spec);  // validates the modulus right away
    }

    RunOutcome out = run_job(spec);
    if (json_out)
      std::cout << out.js.dump(2) << "\n";
    else
      std::cout << out.text;
    return out.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const NotImplementedClass& e) {
    std::cerr << "unsupported input class: " << e.what() << "\n";
    return 2;
  } catch (const InconclusiveStabilization& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const NotAReduction& e) {
    std::cerr << "not a reduction: " << e.what() << "\n";
    return 1;
  } catch (const NotCohenMacaulay& e) {
    std::cerr << "depth obstruction: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
