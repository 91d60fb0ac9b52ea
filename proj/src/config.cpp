#include "skewpc/config.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace skewpc {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  raise(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_uint(const std::string& v, std::size_t line) {
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }))
    parse_fail(line, "expected a non-negative integer, got '" + v + "'");
  if (v.size() > 18) parse_fail(line, "integer too large");
  return std::stoull(v);
}

std::vector<std::uint32_t> parse_uint_list(const std::string& v, std::size_t line) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::uint64_t x = parse_uint(item, line);
    if (x > 0xFFFFFFFFull) parse_fail(line, "list entry too large");
    out.push_back(std::uint32_t(x));
  }
  if (out.empty()) parse_fail(line, "expected a comma-separated integer list");
  return out;
}

}  // namespace

ParsedConfig parse_config(const std::string& text) {
  ParsedConfig cfg;
  RingPresentation pres;
  bool have_kind = false;
  std::unordered_set<std::string> seen;

  std::stringstream stream(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(stream, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    line = trim(line);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string::npos) parse_fail(lineno, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) parse_fail(lineno, "empty key");
    if (value.empty()) parse_fail(lineno, "empty value for '" + key + "'");
    if (!seen.insert(key).second) parse_fail(lineno, "duplicate key '" + key + "'");

    if (key == "ring.kind") {
      if (value == "galois") pres.kind = RingKind::Galois;
      else if (value == "truncated") pres.kind = RingKind::Truncated;
      else if (value == "eisenstein") pres.kind = RingKind::Eisenstein;
      else parse_fail(lineno, "ring.kind must be galois, truncated or eisenstein");
      have_kind = true;
    } else if (key == "ring.p") pres.p = std::uint32_t(parse_uint(value, lineno));
    else if (key == "ring.m") pres.m = std::uint32_t(parse_uint(value, lineno));
    else if (key == "ring.r") pres.r = std::uint32_t(parse_uint(value, lineno));
    else if (key == "ring.e") pres.e = std::uint32_t(parse_uint(value, lineno));
    else if (key == "ring.t") pres.t = std::uint32_t(parse_uint(value, lineno));
    else if (key == "ring.s") pres.s = std::uint32_t(parse_uint(value, lineno));
    else if (key == "ring.h") pres.h = parse_uint_list(value, lineno);
    else if (key == "ring.w") pres.w = parse_uint_list(value, lineno);
    else if (key == "ring.size_bound") pres.size_bound = parse_uint(value, lineno);
    else if (key == "sigma.u_image") cfg.sigma.u_image = parse_uint_list(value, lineno);
    else if (key == "sigma.omega_exponent") cfg.sigma.omega_exponent = parse_uint(value, lineno);
    else if (key == "command") cfg.command = value;
    else if (key == "n") cfg.n = std::uint32_t(parse_uint(value, lineno));
    else if (key == "ell") cfg.ell = std::uint32_t(parse_uint(value, lineno));
    else if (key == "a0") cfg.a0 = parse_uint_list(value, lineno);
    else if (key == "aell") cfg.aell = parse_uint_list(value, lineno);
    else if (key == "b0") cfg.b0 = parse_uint_list(value, lineno);
    else if (key == "bell") cfg.bell = parse_uint_list(value, lineno);
    else if (key == "budget") cfg.budget = parse_uint(value, lineno);
    else parse_fail(lineno, "unknown key '" + key + "'");
  }

  if (have_kind) cfg.ring = pres;
  else if (seen.count("ring.p") || seen.count("ring.r"))
    raise(ErrorCode::ParseError, "ring parameters given without ring.kind");
  return cfg;
}

}  // namespace skewpc
