#pragma once

// Command dispatch: turn a parsed configuration document plus CLI flags into
// a report.  Reports are JSON (schema-versioned, deterministic) or plain
// text; errors map to the stable exit codes of ErrorCode.

#include <cstdint>
#include <string>

#include "skewpc/config.hpp"
#include "skewpc/polycyclic.hpp"

namespace skewpc {

// JSON record for an isometry verification: verdict, witness, per-check
// flags, and the weight distributions of the compared ideals as parallel
// weights/counts arrays.
std::string isometry_report_json(const ChainRing& ring, const IsometryReport& report);

enum class Command { Info, Central, Equiv, Classes, Count, VerifyPaper };

Command command_from_name(const std::string& name);  // throws ParseError

struct JobSpec {
  ParsedConfig cfg;
  Command command = Command::Info;
  bool json = false;
  bool quiet = false;
  std::uint64_t budget = std::uint64_t(1) << 16;
};

struct JobResult {
  int exit_code = 0;
  std::string output;  // report text or JSON, newline-terminated
};

// Builds the ring and automorphism, runs the command, and maps every Error
// to its exit code; never throws.
JobResult run_job(const JobSpec& job);

struct PaperCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The bundled example suite behind the verify-paper command.
std::vector<PaperCheck> run_paper_checks();

}  // namespace skewpc
