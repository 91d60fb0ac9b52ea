#include "skewpc/skewpc.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "skewpc/class_counting.hpp"
#include "skewpc/job.hpp"

using namespace skewpc;

namespace {

thread_local std::string g_last_error;

spc_status set_error(const Error& err) {
  g_last_error = err.what();
  return spc_status(int(err.code()));
}

spc_status set_error(const std::exception& ex) {
  g_last_error = ex.what();
  return SPC_ERR_INTERNAL;
}

spc_status set_error_msg(spc_status st, const char* msg) {
  g_last_error = msg;
  return st;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
spc_status guarded(Fn&& fn) {
  try {
    fn();
    return SPC_OK;
  } catch (const Error& err) {
    return set_error(err);
  } catch (const std::exception& ex) {
    return set_error(ex);
  }
}

ElemId checked_id(const ChainRing& R, int64_t a) {
  if (a < 0 || std::uint64_t(a) >= R.size())
    raise(ErrorCode::BadArgument, "element id out of range");
  return ElemId(a);
}

}  // namespace

struct spc_ring {
  RingPtr ring;
};

struct spc_sigma {
  SigmaPtr sigma;
};

struct spc_job {
  ParsedConfig cfg;
  bool has_cfg = false;
  std::string command_override;
  bool json = false;
  bool quiet = false;
  std::optional<std::uint64_t> budget;
};

extern "C" {

const char* spc_status_name(spc_status status) { return error_code_name(ErrorCode(int(status))); }

const char* spc_last_error_message(void) { return g_last_error.c_str(); }

void spc_string_free(char* s) { std::free(s); }

/* ---- rings ---------------------------------------------------------- */

spc_status spc_ring_create(const char* config_text, spc_ring** out) {
  if (!config_text || !out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    ParsedConfig cfg = parse_config(config_text);
    if (!cfg.ring) raise(ErrorCode::ParseError, "document does not define a ring");
    *out = new spc_ring{ChainRing::build(*cfg.ring)};
  });
}

void spc_ring_destroy(spc_ring* ring) { delete ring; }

int64_t spc_ring_card(const spc_ring* r) { return r ? int64_t(r->ring->size()) : -1; }
int64_t spc_ring_p(const spc_ring* r) { return r ? int64_t(r->ring->p()) : -1; }
int64_t spc_ring_r(const spc_ring* r) { return r ? int64_t(r->ring->r()) : -1; }
int64_t spc_ring_e(const spc_ring* r) { return r ? int64_t(r->ring->e()) : -1; }
int64_t spc_ring_q(const spc_ring* r) { return r ? int64_t(r->ring->q()) : -1; }
int64_t spc_ring_zero(const spc_ring* r) { return r ? int64_t(r->ring->zero()) : -1; }
int64_t spc_ring_one(const spc_ring* r) { return r ? int64_t(r->ring->one()) : -1; }
int64_t spc_ring_gamma(const spc_ring* r) { return r ? int64_t(r->ring->gamma()) : -1; }
int64_t spc_ring_unit_count(const spc_ring* r) {
  return r ? int64_t(r->ring->units().size()) : -1;
}

spc_status spc_ring_add(const spc_ring* r, int64_t a, int64_t b, int64_t* out) {
  if (!r || !out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    *out = r->ring->add(checked_id(*r->ring, a), checked_id(*r->ring, b));
  });
}

spc_status spc_ring_mul(const spc_ring* r, int64_t a, int64_t b, int64_t* out) {
  if (!r || !out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    *out = r->ring->mul(checked_id(*r->ring, a), checked_id(*r->ring, b));
  });
}

spc_status spc_ring_neg(const spc_ring* r, int64_t a, int64_t* out) {
  if (!r || !out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] { *out = r->ring->neg(checked_id(*r->ring, a)); });
}

spc_status spc_ring_inv(const spc_ring* r, int64_t a, int64_t* out) {
  if (!r || !out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] { *out = r->ring->inv(checked_id(*r->ring, a)); });
}

int spc_ring_is_unit(const spc_ring* r, int64_t a) {
  if (!r || a < 0 || std::uint64_t(a) >= r->ring->size())
    return -int(SPC_ERR_BAD_ARGUMENT);
  return r->ring->is_unit(ElemId(a)) ? 1 : 0;
}

spc_status spc_ring_coords(const spc_ring* r, int64_t a, int64_t* buf, size_t buflen,
                           size_t* ncoords) {
  if (!r || !ncoords) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    auto cs = r->ring->coords(checked_id(*r->ring, a));
    *ncoords = cs.size();
    if (buf) {
      if (buflen < cs.size()) raise(ErrorCode::BadArgument, "coordinate buffer too small");
      for (std::size_t i = 0; i < cs.size(); ++i) buf[i] = cs[i];
    }
  });
}

spc_status spc_ring_from_coords(const spc_ring* r, const int64_t* coords, size_t n, int64_t* out) {
  if (!r || !coords || !out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::uint32_t> cs(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (coords[i] < 0) raise(ErrorCode::BadArgument, "negative coordinate");
      cs[i] = std::uint32_t(coords[i]);
    }
    *out = r->ring->from_coords(cs);
  });
}

spc_status spc_ring_element_text(const spc_ring* r, int64_t a, char** out) {
  if (!r || !out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(r->ring->to_string(checked_id(*r->ring, a))); });
}

/* ---- automorphisms --------------------------------------------------- */

spc_status spc_sigma_create(const spc_ring* ring, const char* config_text, spc_sigma** out) {
  if (!ring || !out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    AutomorphismSpec spec;
    if (config_text && *config_text) spec = parse_config(config_text).sigma;
    SigmaPtr sigma = (spec.u_image || spec.omega_exponent)
                         ? RingAutomorphism::build(ring->ring, spec)
                         : RingAutomorphism::identity(ring->ring);
    *out = new spc_sigma{std::move(sigma)};
  });
}

void spc_sigma_destroy(spc_sigma* sigma) { delete sigma; }

int64_t spc_sigma_order(const spc_sigma* s) { return s ? int64_t(s->sigma->order()) : -1; }
int64_t spc_sigma_residue_order(const spc_sigma* s) {
  return s ? int64_t(s->sigma->residue_order()) : -1;
}
int64_t spc_sigma_teich_exponent(const spc_sigma* s) {
  return s ? int64_t(s->sigma->teich_exponent()) : -1;
}

spc_status spc_sigma_apply(const spc_sigma* s, int64_t a, int64_t* out) {
  if (!s || !out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] { *out = s->sigma->apply(checked_id(s->sigma->ring(), a)); });
}

spc_status spc_sigma_norm(const spc_sigma* s, int64_t beta, int64_t i, int64_t* out) {
  if (!s || !out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  if (i < 0) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "norm index must be >= 0");
  return guarded([&] {
    *out = s->sigma->norm(checked_id(s->sigma->ring(), beta), std::uint64_t(i));
  });
}

/* ---- analyses -------------------------------------------------------- */

spc_status spc_trinomial_is_central(const spc_sigma* s, int64_t n, int64_t ell, int64_t a0,
                                    int64_t aell, int* central) {
  if (!s || !central) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    const ChainRing& R = s->sigma->ring();
    if (n < 2 || ell < 1 || ell >= n) raise(ErrorCode::DegreeMismatch, "need 1 <= ell <= n-1");
    Trinomial f{std::uint32_t(n), std::uint32_t(ell), checked_id(R, aell), checked_id(R, a0)};
    *central = is_central(f.to_poly(s->sigma)).central ? 1 : 0;
  });
}

spc_status spc_equivalent_json(const spc_sigma* s, int64_t n, int64_t ell, int64_t a0,
                               int64_t aell, int64_t b0, int64_t bell, char** json_out) {
  if (!s || !json_out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    const ChainRing& R = s->sigma->ring();
    if (n < 2 || ell < 1 || ell >= n) raise(ErrorCode::DegreeMismatch, "need 1 <= ell <= n-1");
    Binomial a{std::uint32_t(ell), checked_id(R, aell), checked_id(R, a0)};
    Binomial b{std::uint32_t(ell), checked_id(R, bell), checked_id(R, b0)};
    EquivalenceReport rep = equivalent(s->sigma, a, b, std::uint32_t(n));
    std::ostringstream os;
    os << "{\"schema\":\"skewpc.equiv/1\",\"verdict\":" << (rep.verdict ? "true" : "false")
       << ",\"alpha\":";
    if (rep.witness_alpha)
      os << *rep.witness_alpha;
    else
      os << "null";
    os << ",\"conditions\":{\"c2\":" << (rep.c2 ? "true" : "false")
       << ",\"c4\":" << (rep.c4 ? "true" : "false") << "}}";
    *json_out = dup_string(os.str());
  });
}

spc_status spc_count_json(const spc_sigma* s, int64_t n, int64_t ell, char** json_out) {
  if (!s || !json_out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    if (n < 2 || ell < 1 || ell >= n) raise(ErrorCode::DegreeMismatch, "need 1 <= ell <= n-1");
    CountReport rep = h_size_report(*s->sigma, std::uint32_t(n), std::uint32_t(ell));
    std::ostringstream os;
    os << "{\"schema\":\"skewpc.count/1\",\"ker_T\":" << rep.ker_T << ",\"ker_U\":" << rep.ker_U
       << ",\"ker_total\":" << rep.ker_total << ",\"H_size\":" << rep.H_size
       << ",\"brute_ker\":" << rep.brute_ker << ",\"brute_H\":" << rep.brute_H
       << ",\"consistent\":" << (rep.consistent ? "true" : "false") << "}";
    *json_out = dup_string(os.str());
  });
}

spc_status spc_verify_isometry_json(const spc_sigma* s, int64_t alpha, int64_t n, int64_t ell,
                                    int64_t a0, int64_t aell, int64_t b0, int64_t bell,
                                    uint64_t budget, char** json_out) {
  if (!s || !json_out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    const ChainRing& R = s->sigma->ring();
    if (n < 2 || ell < 1 || ell >= n) raise(ErrorCode::DegreeMismatch, "need 1 <= ell <= n-1");
    Trinomial f1{std::uint32_t(n), std::uint32_t(ell), checked_id(R, aell), checked_id(R, a0)};
    Trinomial f2{std::uint32_t(n), std::uint32_t(ell), checked_id(R, bell), checked_id(R, b0)};
    IsometryOptions opts;
    if (budget) {
      opts.sweep_budget = budget;
      opts.closure_budget = budget;
    }
    IsometryReport rep = verify_isometry(s->sigma, checked_id(R, alpha), f1, f2, opts);
    *json_out = dup_string(isometry_report_json(R, rep));
  });
}

/* ---- jobs ------------------------------------------------------------ */

spc_job* spc_job_create(void) { return new (std::nothrow) spc_job; }

void spc_job_destroy(spc_job* job) { delete job; }

spc_status spc_job_load_config_text(spc_job* job, const char* text) {
  if (!job || !text) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    job->cfg = parse_config(text);
    job->has_cfg = true;
  });
}

spc_status spc_job_load_config_file(spc_job* job, const char* path) {
  if (!job || !path) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    std::ifstream in(path);
    if (!in.good()) raise(ErrorCode::ParseError, std::string("cannot open '") + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    job->cfg = parse_config(ss.str());
    job->has_cfg = true;
  });
}

spc_status spc_job_set_command(spc_job* job, const char* name) {
  if (!job || !name) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    command_from_name(name);  // validates
    job->command_override = name;
  });
}

void spc_job_set_json(spc_job* job, int enable) {
  if (job) job->json = enable != 0;
}
void spc_job_set_quiet(spc_job* job, int enable) {
  if (job) job->quiet = enable != 0;
}
void spc_job_set_budget(spc_job* job, uint64_t budget) {
  if (job) job->budget = budget;
}

spc_status spc_job_run(spc_job* job, char** output_out) {
  if (!job || !output_out) return set_error_msg(SPC_ERR_BAD_ARGUMENT, "null argument");
  std::string command;
  if (!job->command_override.empty())
    command = job->command_override;
  else if (job->cfg.command)
    command = *job->cfg.command;
  else
    return set_error_msg(SPC_ERR_PARSE, "no command given (flag or config key)");

  JobSpec spec;
  spec.cfg = job->cfg;
  spec.json = job->json;
  spec.quiet = job->quiet;
  if (job->cfg.budget) spec.budget = *job->cfg.budget;  // document default
  if (job->budget) spec.budget = *job->budget;          // flag wins
  try {
    spec.command = command_from_name(command);
  } catch (const Error& err) {
    return set_error(err);
  }

  JobResult result = run_job(spec);
  *output_out = dup_string(result.output);
  if (result.exit_code != 0) {
    g_last_error = "job finished with status " +
                   std::string(error_code_name(ErrorCode(result.exit_code)));
  }
  return spc_status(result.exit_code);
}

}  // extern "C"
