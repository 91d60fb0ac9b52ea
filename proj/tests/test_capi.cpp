// Exercises the shared-library surface: opaque handles, status codes, and
// the JSON-producing calls.  Links only against the C API.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "json.hpp"
#include "skewpc/skewpc.h"

using nlohmann::json;

namespace {

const char* kZ8uRing = R"(
ring.kind = eisenstein
ring.p = 2
ring.m = 3
ring.r = 1
ring.t = 2
ring.s = 1
ring.w = 1
)";

const char* kZ8uSigma = "sigma.u_image = 0,3\n";

struct RingHandle {
  spc_ring* ptr = nullptr;
  ~RingHandle() { spc_ring_destroy(ptr); }
};
struct SigmaHandle {
  spc_sigma* ptr = nullptr;
  ~SigmaHandle() { spc_sigma_destroy(ptr); }
};

}  // namespace

TEST_CASE("ring handle lifecycle and arithmetic") {
  RingHandle ring;
  REQUIRE(spc_ring_create(kZ8uRing, &ring.ptr) == SPC_OK);
  CHECK(spc_ring_card(ring.ptr) == 32);
  CHECK(spc_ring_p(ring.ptr) == 2);
  CHECK(spc_ring_r(ring.ptr) == 1);
  CHECK(spc_ring_e(ring.ptr) == 5);
  CHECK(spc_ring_q(ring.ptr) == 2);
  CHECK(spc_ring_unit_count(ring.ptr) == 16);
  CHECK(spc_ring_zero(ring.ptr) == 0);
  CHECK(spc_ring_one(ring.ptr) == 1);
  CHECK(spc_ring_gamma(ring.ptr) == 8);  // coords (0, 1) -> 0 + 8*1

  int64_t out = -1;
  CHECK(spc_ring_mul(ring.ptr, 8, 8, &out) == SPC_OK);  // u * u = 2
  CHECK(out == 2);
  CHECK(spc_ring_add(ring.ptr, 7, 1, &out) == SPC_OK);
  CHECK(out == 0);
  CHECK(spc_ring_neg(ring.ptr, 1, &out) == SPC_OK);
  CHECK(out == 7);
  CHECK(spc_ring_inv(ring.ptr, 3, &out) == SPC_OK);
  CHECK(out == 3);  // 3 * 3 = 9 = 1 mod 8
  CHECK(spc_ring_is_unit(ring.ptr, 9) == 1);
  CHECK(spc_ring_is_unit(ring.ptr, 8) == 0);

  // errors set the thread-local message
  CHECK(spc_ring_inv(ring.ptr, 8, &out) == SPC_ERR_NOT_A_UNIT);
  CHECK(std::strlen(spc_last_error_message()) > 0);
  CHECK(spc_ring_mul(ring.ptr, 99, 0, &out) == SPC_ERR_BAD_ARGUMENT);

  // coordinates round-trip
  int64_t coords[4] = {0, 0, 0, 0};
  size_t ncoords = 0;
  CHECK(spc_ring_coords(ring.ptr, 9, coords, 4, &ncoords) == SPC_OK);
  REQUIRE(ncoords == 2);
  CHECK(coords[0] == 1);
  CHECK(coords[1] == 1);
  int64_t back = -1;
  CHECK(spc_ring_from_coords(ring.ptr, coords, 2, &back) == SPC_OK);
  CHECK(back == 9);

  char* text = nullptr;
  CHECK(spc_ring_element_text(ring.ptr, 9, &text) == SPC_OK);
  CHECK(std::string(text) == "1+u");
  spc_string_free(text);
}

TEST_CASE("bad ring configurations produce parse or construction errors") {
  spc_ring* ring = nullptr;
  CHECK(spc_ring_create("not a config", &ring) == SPC_ERR_PARSE);
  CHECK(spc_ring_create("n = 4\n", &ring) == SPC_ERR_PARSE);  // no ring
  CHECK(spc_ring_create(
            "ring.kind = galois\nring.p = 5\nring.m = 1\nring.r = 2\nring.h = 1,0,1\n",
            &ring) == SPC_ERR_NOT_BASIC_IRREDUCIBLE);
}

TEST_CASE("sigma handle, norms and analyses") {
  RingHandle ring;
  REQUIRE(spc_ring_create(kZ8uRing, &ring.ptr) == SPC_OK);
  SigmaHandle sigma;
  REQUIRE(spc_sigma_create(ring.ptr, kZ8uSigma, &sigma.ptr) == SPC_OK);
  CHECK(spc_sigma_order(sigma.ptr) == 2);
  CHECK(spc_sigma_residue_order(sigma.ptr) == 1);
  CHECK(spc_sigma_teich_exponent(sigma.ptr) == 0);

  int64_t out = -1;
  CHECK(spc_sigma_apply(sigma.ptr, 8, &out) == SPC_OK);  // sigma(u) = 3u = id 24
  CHECK(out == 24);
  CHECK(spc_sigma_norm(sigma.ptr, 9, 2, &out) == SPC_OK);  // N_2(1+u) = 7
  CHECK(out == 7);
  CHECK(spc_sigma_norm(sigma.ptr, 9, 4, &out) == SPC_OK);
  CHECK(out == 1);
  CHECK(spc_sigma_norm(sigma.ptr, 9, -1, &out) == SPC_ERR_BAD_ARGUMENT);

  int central = -1;
  CHECK(spc_trinomial_is_central(sigma.ptr, 4, 2, 1, 7, &central) == SPC_OK);
  CHECK(central == 1);
  CHECK(spc_trinomial_is_central(sigma.ptr, 3, 2, 1, 1, &central) == SPC_OK);
  CHECK(central == 0);  // sigma^3 != id

  char* out_json = nullptr;
  REQUIRE(spc_equivalent_json(sigma.ptr, 4, 2, 1, 7, 1, 1, &out_json) == SPC_OK);
  {
    json j = json::parse(out_json);
    CHECK(j["verdict"] == true);
    CHECK(j["alpha"] == 9);
    CHECK(j["conditions"]["c2"] == true);
    CHECK(j["conditions"]["c4"] == true);
  }
  spc_string_free(out_json);

  out_json = nullptr;
  REQUIRE(spc_count_json(sigma.ptr, 4, 2, &out_json) == SPC_OK);
  {
    json j = json::parse(out_json);
    CHECK(j["ker_total"] == 8);
    CHECK(j["H_size"] == 2);
    CHECK(j["consistent"] == true);
  }
  spc_string_free(out_json);

  // hypothesis-violated count surfaces the status
  out_json = nullptr;
  CHECK(spc_count_json(sigma.ptr, 3, 2, &out_json) == SPC_ERR_HYPOTHESIS_VIOLATED);

  // isometry verification for the worked pair, in singleton-ideal mode
  out_json = nullptr;
  REQUIRE(spc_verify_isometry_json(sigma.ptr, 9, 4, 2, 1, 7, 1, 1, 4096, &out_json) == SPC_OK);
  {
    json j = json::parse(out_json);
    CHECK(j["schema"] == "skewpc.isometry/1");
    CHECK(j["verdict"] == true);
    CHECK(j["witness"]["id"] == 9);
    CHECK(j["mode"] == "singleton-ideals");
    REQUIRE(j["ideals"].is_array());
    REQUIRE(!j["ideals"].empty());
    for (const auto& entry : j["ideals"]) {
      CHECK(entry["weights"].is_array());
      CHECK(entry["counts"].is_array());
      CHECK(entry["weights"].size() == entry["counts"].size());
    }
  }
  spc_string_free(out_json);

  // destroying the ring first is safe: the sigma handle keeps it alive
  spc_ring_destroy(ring.ptr);
  ring.ptr = nullptr;
  CHECK(spc_sigma_norm(sigma.ptr, 9, 2, &out) == SPC_OK);
  CHECK(out == 7);
}

TEST_CASE("job interface") {
  spc_job* job = spc_job_create();
  REQUIRE(job != nullptr);

  std::string doc = std::string(kZ8uRing) + kZ8uSigma +
                    "command = equiv\nn = 4\nell = 2\na0 = 1\naell = 7\nb0 = 1\nbell = 1\n";
  REQUIRE(spc_job_load_config_text(job, doc.c_str()) == SPC_OK);
  spc_job_set_json(job, 1);

  char* output = nullptr;
  CHECK(spc_job_run(job, &output) == SPC_OK);
  REQUIRE(output != nullptr);
  {
    json j = json::parse(output);
    CHECK(j["schema"] == "skewpc.equiv/1");
    CHECK(j["verdict"] == true);
  }
  spc_string_free(output);

  // command override
  REQUIRE(spc_job_set_command(job, "count") == SPC_OK);
  output = nullptr;
  CHECK(spc_job_run(job, &output) == SPC_OK);
  {
    json j = json::parse(output);
    CHECK(j["schema"] == "skewpc.count/1");
    CHECK(j["H_size"] == 2);
  }
  spc_string_free(output);

  CHECK(spc_job_set_command(job, "bogus") == SPC_ERR_PARSE);
  spc_job_destroy(job);

  // verify-paper without a config document
  spc_job* vp = spc_job_create();
  REQUIRE(spc_job_set_command(vp, "verify-paper") == SPC_OK);
  output = nullptr;
  CHECK(spc_job_run(vp, &output) == SPC_OK);
  REQUIRE(output != nullptr);
  CHECK(std::string(output).find("[PASS]") != std::string::npos);
  spc_string_free(output);
  spc_job_destroy(vp);

  // a job with no command anywhere
  spc_job* empty = spc_job_create();
  output = nullptr;
  CHECK(spc_job_run(empty, &output) == SPC_ERR_PARSE);
  spc_job_destroy(empty);
}

TEST_CASE("status names are stable") {
  CHECK(std::string(spc_status_name(SPC_OK)) == "Ok");
  CHECK(std::string(spc_status_name(SPC_ERR_NOT_CENTRAL)) == "NotCentral");
  CHECK(std::string(spc_status_name(SPC_ERR_HYPOTHESIS_VIOLATED)) == "HypothesisViolated");
  CHECK(std::string(spc_status_name(SPC_ERR_INCONSISTENT)) == "Inconsistent");
}
