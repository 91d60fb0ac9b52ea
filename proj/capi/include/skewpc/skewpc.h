#ifndef SKEWPC_C_API_H
#define SKEWPC_C_API_H

/* C interface to the skewpc library: finite chain rings, ring automorphisms,
 * sigma-norms, centrality tests, and the equivalence / class-counting
 * reports, behind opaque handles with status-code error reporting.
 *
 * Conventions:
 *   - every fallible call returns spc_status; SPC_OK is 0
 *   - a human-readable message for the most recent failure on the calling
 *     thread is available from spc_last_error_message()
 *   - ring elements are canonical ids in [0, spc_ring_card(ring))
 *   - strings returned through char** are heap-allocated; release them with
 *     spc_string_free()
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spc_status {
  SPC_OK = 0,
  SPC_ERR_PARSE = 2,
  SPC_ERR_NOT_A_CHAIN_RING = 3,
  SPC_ERR_SIZE_BOUND_EXCEEDED = 4,
  SPC_ERR_NOT_BASIC_IRREDUCIBLE = 5,
  SPC_ERR_NOT_AN_AUTOMORPHISM = 6,
  SPC_ERR_RING_MISMATCH = 7,
  SPC_ERR_NOT_A_UNIT = 8,
  SPC_ERR_NON_UNIT_LEADING_COEFFICIENT = 9,
  SPC_ERR_NOT_MONIC = 10,
  SPC_ERR_MODULUS_MISMATCH = 11,
  SPC_ERR_DEGREE_MISMATCH = 12,
  SPC_ERR_LENGTH_MISMATCH = 13,
  SPC_ERR_IDENTITY_AUTOMORPHISM = 14,
  SPC_ERR_NOT_CENTRAL = 15,
  SPC_ERR_HYPOTHESIS_VIOLATED = 16,
  SPC_ERR_OUT_OF_HYPOTHESIS = 17,
  SPC_ERR_BUDGET_EXCEEDED = 18,
  SPC_ERR_BAD_ARGUMENT = 19,
  SPC_ERR_INTERNAL = 20,
  SPC_ERR_INCONSISTENT = 21,
  SPC_ERR_VERIFY_FAILED = 22
} spc_status;

const char* spc_status_name(spc_status status);
const char* spc_last_error_message(void);
void spc_string_free(char* s);

/* ---- rings ---------------------------------------------------------- */

typedef struct spc_ring spc_ring;

/* Builds a ring from the ring.* keys of a configuration document. */
spc_status spc_ring_create(const char* config_text, spc_ring** out);
void spc_ring_destroy(spc_ring* ring);

int64_t spc_ring_card(const spc_ring* ring);
int64_t spc_ring_p(const spc_ring* ring);
int64_t spc_ring_r(const spc_ring* ring);
int64_t spc_ring_e(const spc_ring* ring);
int64_t spc_ring_q(const spc_ring* ring);
int64_t spc_ring_zero(const spc_ring* ring);
int64_t spc_ring_one(const spc_ring* ring);
int64_t spc_ring_gamma(const spc_ring* ring);
int64_t spc_ring_unit_count(const spc_ring* ring);

spc_status spc_ring_add(const spc_ring* ring, int64_t a, int64_t b, int64_t* out);
spc_status spc_ring_mul(const spc_ring* ring, int64_t a, int64_t b, int64_t* out);
spc_status spc_ring_neg(const spc_ring* ring, int64_t a, int64_t* out);
spc_status spc_ring_inv(const spc_ring* ring, int64_t a, int64_t* out);
/* 1 if a is a unit, 0 if not, negative spc_status on a bad id */
int spc_ring_is_unit(const spc_ring* ring, int64_t a);

/* canonical coordinates; ncoords receives the coordinate count */
spc_status spc_ring_coords(const spc_ring* ring, int64_t a, int64_t* buf, size_t buflen,
                           size_t* ncoords);
spc_status spc_ring_from_coords(const spc_ring* ring, const int64_t* coords, size_t n,
                                int64_t* out);
spc_status spc_ring_element_text(const spc_ring* ring, int64_t a, char** out);

/* ---- automorphisms --------------------------------------------------- */

typedef struct spc_sigma spc_sigma;

/* Builds sigma from the sigma.* keys of a configuration document; an empty
 * document yields the identity.  The handle keeps the ring alive. */
spc_status spc_sigma_create(const spc_ring* ring, const char* config_text, spc_sigma** out);
void spc_sigma_destroy(spc_sigma* sigma);

int64_t spc_sigma_order(const spc_sigma* sigma);
int64_t spc_sigma_residue_order(const spc_sigma* sigma);
int64_t spc_sigma_teich_exponent(const spc_sigma* sigma);
spc_status spc_sigma_apply(const spc_sigma* sigma, int64_t a, int64_t* out);
spc_status spc_sigma_norm(const spc_sigma* sigma, int64_t beta, int64_t i, int64_t* out);

/* ---- analyses -------------------------------------------------------- */

/* x^n - (aell x^ell + a0): *central is set to 1 or 0 */
spc_status spc_trinomial_is_central(const spc_sigma* sigma, int64_t n, int64_t ell, int64_t a0,
                                    int64_t aell, int* central);

/* JSON report of the equivalence decision between aell x^ell + a0 and
 * bell x^ell + b0 for length n */
spc_status spc_equivalent_json(const spc_sigma* sigma, int64_t n, int64_t ell, int64_t a0,
                               int64_t aell, int64_t b0, int64_t bell, char** json_out);

/* JSON count report (kernel sizes, image size, consistency flag) */
spc_status spc_count_json(const spc_sigma* sigma, int64_t n, int64_t ell, char** json_out);

/* Constructive verification that the coefficient-scaling map by alpha is a
 * weight-preserving ring isomorphism from the remainder space of
 * x^n - (aell x^ell + a0) onto that of x^n - (bell x^ell + b0); the JSON
 * carries the verdict, the witness, and per-ideal weight distributions.
 * `budget` caps the enumerations (0 selects the defaults). */
spc_status spc_verify_isometry_json(const spc_sigma* sigma, int64_t alpha, int64_t n, int64_t ell,
                                    int64_t a0, int64_t aell, int64_t b0, int64_t bell,
                                    uint64_t budget, char** json_out);

/* ---- jobs (the CLI surface) ------------------------------------------ */

typedef struct spc_job spc_job;

spc_job* spc_job_create(void);
void spc_job_destroy(spc_job* job);

spc_status spc_job_load_config_text(spc_job* job, const char* text);
spc_status spc_job_load_config_file(spc_job* job, const char* path);
spc_status spc_job_set_command(spc_job* job, const char* name);
void spc_job_set_json(spc_job* job, int enable);
void spc_job_set_quiet(spc_job* job, int enable);
void spc_job_set_budget(spc_job* job, uint64_t budget);

/* Runs the job.  *output_out always receives the report (or error report);
 * the return value doubles as the CLI exit code. */
spc_status spc_job_run(spc_job* job, char** output_out);

#ifdef __cplusplus
}
#endif

#endif /* SKEWPC_C_API_H */
