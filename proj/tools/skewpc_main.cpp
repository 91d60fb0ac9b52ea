// Command-line front end.  All functionality is reached through the shared
// C API; this translation unit never touches the C++ core directly.

#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "skewpc/skewpc.h"

int main(int argc, char** argv) {
  CLI::App app{
      "skewpc - finite chain rings, skew polynomials, and Hamming equivalence\n"
      "of skew polycyclic codes defined by trinomials"};
  app.footer(
      "Commands: info, central, equiv, classes, count, verify-paper.\n"
      "All commands except verify-paper read their ring, automorphism and\n"
      "parameters from the configuration document (see the README for the\n"
      "grammar).  Exit codes follow the documented status table; 0 is success.");

  std::string config_path, command;
  bool as_json = false, quiet = false;
  std::uint64_t budget = 0;
  bool have_budget = false;

  app.add_option("--config", config_path, "path to a configuration document");
  app.add_option("--command", command,
                 "command to run (overrides the document's command key)");
  app.add_flag("--json", as_json, "emit a machine-readable JSON report");
  app.add_flag("--quiet", quiet, "suppress informational detail");
  app.add_option("--budget", budget, "enumeration bound for set-building commands")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  have_budget = app.count("--budget") > 0;

  spc_job* job = spc_job_create();
  if (!job) {
    std::fprintf(stderr, "error: out of memory\n");
    return int(SPC_ERR_INTERNAL);
  }

  spc_status st = SPC_OK;
  if (!config_path.empty()) {
    st = spc_job_load_config_file(job, config_path.c_str());
    if (st != SPC_OK) {
      std::fprintf(stderr, "error [%s]: %s\n", spc_status_name(st), spc_last_error_message());
      spc_job_destroy(job);
      return int(st);
    }
  }
  if (!command.empty()) {
    st = spc_job_set_command(job, command.c_str());
    if (st != SPC_OK) {
      std::fprintf(stderr, "error [%s]: %s\n", spc_status_name(st), spc_last_error_message());
      spc_job_destroy(job);
      return int(st);
    }
  }
  spc_job_set_json(job, as_json ? 1 : 0);
  spc_job_set_quiet(job, quiet ? 1 : 0);
  if (have_budget) spc_job_set_budget(job, budget);

  char* output = nullptr;
  st = spc_job_run(job, &output);
  if (output) {
    std::fputs(output, stdout);
    spc_string_free(output);
  } else if (st != SPC_OK) {
    std::fprintf(stderr, "error [%s]: %s\n", spc_status_name(st), spc_last_error_message());
  }
  spc_job_destroy(job);
  return int(st);
}
