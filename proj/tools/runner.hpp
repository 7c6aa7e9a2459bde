#pragma once

#include <string>

#include "jobspec.hpp"
#include "json.hpp"

namespace idealcore {

struct RunOutcome {
  int exit_code = 0;           // check batteries flip this on a FAIL line
  std::string text;            // human report, newline terminated
  nlohmann::ordered_json js;   // machine report, stable top-level schema
};

// Executes one validated job. Library errors propagate; the front end maps
// them onto exit codes. The JSON report always carries
//   {command, input_echo, result:{generators}, diagnostics:{r, hilbert,
//    strata, oracle_agreement, ...}}
// with nulls and empty arrays where a command has nothing to say.
RunOutcome run_job(const JobSpec& spec);

}  // namespace idealcore
