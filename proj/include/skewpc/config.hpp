#pragma once

// Flat key/value configuration documents.  One ring presentation plus an
// optional automorphism and command parameters per document; the grammar is
// documented in the README and is the normative input format of the CLI.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewpc/automorphism.hpp"

namespace skewpc {

struct ParsedConfig {
  std::optional<RingPresentation> ring;
  AutomorphismSpec sigma;
  std::optional<std::string> command;
  std::optional<std::uint32_t> n, ell;
  std::optional<std::vector<std::uint32_t>> a0, aell, b0, bell;  // element coordinates
  std::optional<std::uint64_t> budget;
};

// Throws ParseError with a line diagnostic on malformed input.
ParsedConfig parse_config(const std::string& text);

}  // namespace skewpc
