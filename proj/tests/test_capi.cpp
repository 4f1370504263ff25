#include <doctest.h>
#include <json.hpp>

#include <string>
#include <thread>

#include "muperm/muperm.h"

using Json = nlohmann::json;

namespace {

Json take(char* s) {
  REQUIRE(s != nullptr);
  Json j = Json::parse(s);
  muperm_string_free(s);
  return j;
}

muperm_poly* parse(const char* text) {
  muperm_poly* p = nullptr;
  REQUIRE(muperm_poly_parse(text, &p) == MUPERM_OK);
  return p;
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(muperm_status_name(MUPERM_OK)) == "ok");
  CHECK(std::string(muperm_status_name(MUPERM_ERR_PARAMETER)) == "parameter");
  CHECK(std::string(muperm_status_name(MUPERM_ERR_NULL_ARGUMENT)) == "null-argument");
  CHECK(std::string(muperm_status_name(static_cast<muperm_status>(55))) == "unknown");

  muperm_field* f = nullptr;
  CHECK(muperm_field_new(13, 0, &f) == MUPERM_ERR_PARAMETER);
  CHECK(f == nullptr);
  CHECK(std::string(muperm_last_error()).find("[1, 12]") != std::string::npos);
  CHECK(muperm_field_new(2, 0, nullptr) == MUPERM_ERR_NULL_ARGUMENT);
  CHECK(muperm_verify(nullptr, nullptr) == MUPERM_ERR_NULL_ARGUMENT);
  CHECK(muperm_sweep(nullptr, nullptr, nullptr, nullptr) == MUPERM_ERR_NULL_ARGUMENT);
}

TEST_CASE("last error is per thread") {
  muperm_field* f = nullptr;
  REQUIRE(muperm_field_new(0, 0, &f) == MUPERM_ERR_PARAMETER);
  std::string other;
  std::thread t([&] { other = muperm_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(muperm_last_error()).empty());
}

TEST_CASE("field handle") {
  muperm_field* f = nullptr;
  REQUIRE(muperm_field_new(2, 0, &f) == MUPERM_OK);
  char* out = nullptr;
  REQUIRE(muperm_field_json(f, &out) == MUPERM_OK);
  const Json j = take(out);
  CHECK(j["modulus_bits"] == "13");
  CHECK(j["omega"] == "6");
  muperm_field_free(f);

  REQUIRE(muperm_field_new(2, 1, &f) == MUPERM_OK);
  REQUIRE(muperm_field_json(f, &out) == MUPERM_OK);
  CHECK(take(out)["omega"] == "7");
  muperm_field_free(f);
}

TEST_CASE("polynomial handle") {
  muperm_poly* p = parse(R"({"k":2,"terms":[[14,"1"],[8,"1"],[11,"1"]]})");
  char* out = nullptr;
  REQUIRE(muperm_poly_json(p, &out) == MUPERM_OK);
  CHECK(take(out).dump() == R"({"k":2,"terms":[[8,"1"],[11,"1"],[14,"1"]]})");
  int perm = -1;
  REQUIRE(muperm_poly_is_permutation(p, &perm) == MUPERM_OK);
  CHECK(perm == 1);
  muperm_poly_free(p);

  muperm_poly* bad = nullptr;
  CHECK(muperm_poly_parse("{not json", &bad) == MUPERM_ERR_PARSE);
  CHECK(muperm_poly_parse(R"({"k":2,"terms":[[1,"ff"]]})", &bad) == MUPERM_ERR_PARSE);
  CHECK(bad == nullptr);
  muperm_poly_free(nullptr);
}

TEST_CASE("generators") {
  char* out = nullptr;
  REQUIRE(muperm_gen_thm1(2, 1, 2, 2, &out) == MUPERM_OK);
  Json j = take(out);
  CHECK(j["poly"]["terms"].size() == 3);
  CHECK(j["params"]["d1"] == 8);
  CHECK(j["brute_force_ok"] == true);

  REQUIRE(muperm_gen_thm1(2, 1, 2, 1, &out) == MUPERM_OK);
  j = take(out);
  CHECK(j["accepted"] == false);
  CHECK(j["brute_force_ok"].is_null());
  CHECK(muperm_gen_thm1(2, 2, 2, 1, &out) == MUPERM_ERR_PARAMETER);

  REQUIRE(muperm_gen_wydm(2, 1, 2, 1, &out) == MUPERM_OK);
  j = take(out);
  CHECK(j["poly"].dump() == R"({"k":2,"terms":[[1,"1"],[4,"1"],[13,"1"]]})");
  CHECK(j["predicted"] == true);
  CHECK(muperm_gen_wydm(2, 1, 2, 2, &out) == MUPERM_ERR_PARAMETER);

  REQUIRE(muperm_gen_lh(2, 1, &out) == MUPERM_OK);
  j = take(out);
  CHECK(j["params"]["r"] == 2);
  CHECK(j["params"]["s"] == 4);
  CHECK(muperm_gen_lh(1, 2, &out) == MUPERM_ERR_PARAMETER);
}

TEST_CASE("verify, rewrite and equivalence") {
  muperm_poly* f = parse(R"({"k":2,"terms":[[8,"1"],[11,"1"],[14,"1"]]})");
  muperm_poly* g = parse(R"({"k":2,"terms":[[1,"1"],[7,"1"],[13,"1"]]})");
  char* out = nullptr;

  REQUIRE(muperm_verify(f, &out) == MUPERM_OK);
  Json j = take(out);
  CHECK(j["criterion"] == true);
  CHECK(j["brute_force"] == true);
  CHECK(j["agree"] == true);
  CHECK(j["wrapped"]["r"] == 8);

  REQUIRE(muperm_rewrite(f, 11, &out) == MUPERM_OK);
  j = take(out);
  CHECK(j["s"] == 1);
  CHECK(j["g_permutes_circle"] == true);
  CHECK(muperm_rewrite(f, 9, &out) == MUPERM_ERR_PARAMETER);

  REQUIRE(muperm_equiv(f, g, &out) == MUPERM_OK);
  j = take(out);
  CHECK(j.is_object());
  CHECK(j.contains("n"));

  muperm_poly* mono = parse(R"({"k":2,"terms":[[1,"1"]]})");
  REQUIRE(muperm_equiv(f, mono, &out) == MUPERM_OK);
  CHECK(take(out).is_null());

  muperm_poly* other = parse(R"({"k":3,"terms":[[1,"1"]]})");
  CHECK(muperm_equiv(f, other, &out) == MUPERM_ERR_PARAMETER);

  muperm_poly* unwrappable = parse(R"({"k":2,"terms":[[1,"1"],[2,"1"]]})");
  REQUIRE(muperm_verify(unwrappable, &out) == MUPERM_OK);
  j = take(out);
  CHECK(j["criterion"].is_null());
  CHECK(j["brute_force"] == false);
  CHECK(muperm_rewrite(unwrappable, -1, &out) == MUPERM_ERR_NOT_WRAPPABLE);

  for (muperm_poly* p : {f, g, mono, other, unwrappable}) muperm_poly_free(p);
}

TEST_CASE("sweep through the C interface") {
  char* detail = nullptr;
  char* report = nullptr;
  unsigned long long failures = 99;
  REQUIRE(muperm_sweep(R"({"k":"2..3","checks":["thm1","sec3-lh"]})", &detail, &report, &failures) == MUPERM_OK);
  CHECK(failures == 0);
  const Json r = take(report);
  CHECK(r["total"].get<unsigned>() > 0);
  CHECK(std::string(detail).find("\"check\":\"sec3-lh\"") != std::string::npos);
  muperm_string_free(detail);

  CHECK(muperm_sweep(R"({"k":"2","checks":["bogus"]})", nullptr, nullptr, nullptr) == MUPERM_ERR_PARAMETER);
  CHECK(muperm_sweep("{", nullptr, nullptr, nullptr) == MUPERM_ERR_PARSE);
  CHECK(muperm_sweep(R"({"k":"x"})", nullptr, nullptr, nullptr) == MUPERM_ERR_PARAMETER);
}
