// Exercises the shared-library surface the way an external consumer would:
// only epsring.h, opaque handles, status codes, JSON strings.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "epsring.h"

namespace {

using Json = nlohmann::json;

struct Str {
    char* p = nullptr;
    ~Str() { epsr_string_free(p); }
    Json json() const { return Json::parse(std::string(p ? p : "null")); }
};

struct Ring {
    epsr_ring* p = nullptr;
    ~Ring() { epsr_ring_free(p); }
};

struct Action {
    epsr_action* p = nullptr;
    ~Action() { epsr_action_free(p); }
};

void get_example(const char* name, const char* field, Ring& ring, Action& action,
                 int* is_action) {
    Str rep;
    REQUIRE(epsr_example(name, field, 1, &ring.p, &action.p, is_action, &rep.p) == EPSR_OK);
}

}  // namespace

TEST_CASE("version string") {
    CHECK(std::string(epsr_version()).find("epsring") != std::string::npos);
}

TEST_CASE("parse failures carry status and error document") {
    Ring ring;
    Str err;
    CHECK(epsr_ring_parse("{bad", &ring.p, &err.p) == EPSR_ERR_PARSE);
    CHECK(ring.p == nullptr);
    CHECK(err.json()["status"] == EPSR_ERR_PARSE);
}

TEST_CASE("example to classify to separability through the C surface") {
    Ring ring;
    Action action;
    int is_action = 1;
    get_example("dade-modified", "gf:2", ring, action, &is_action);
    REQUIRE(is_action == 0);
    REQUIRE(ring.p != nullptr);

    Str validate;
    CHECK(epsr_ring_validate(ring.p, &validate.p) == EPSR_OK);
    CHECK(validate.json()["algebra_ok"] == true);

    Str cls;
    CHECK(epsr_ring_classify(ring.p, &cls.p) == EPSR_OK);
    CHECK(cls.json()["is_epsilon_strong"] == true);
    CHECK(cls.json()["is_strong"] == false);

    Str sep;
    CHECK(epsr_ring_separability(ring.p, &sep.p) == EPSR_OK);
    CHECK(sep.json()["decision"]["separable"] == true);
    CHECK(sep.json()["channels_agree"] == true);

    Str fro;
    CHECK(epsr_ring_frobenius(ring.p, &fro.p) == EPSR_OK);
    CHECK(fro.json()["identities_verified"] == true);
}

TEST_CASE("ring serialization round trips through the C surface") {
    Ring ring;
    Action action;
    int is_action = 0;
    get_example("group-z3", "q", ring, action, &is_action);
    Str out;
    REQUIRE(epsr_ring_to_json(ring.p, &out.p) == EPSR_OK);
    Ring back;
    Str err;
    REQUIRE(epsr_ring_parse(out.p, &back.p, &err.p) == EPSR_OK);
    Str out2;
    REQUIRE(epsr_ring_to_json(back.p, &out2.p) == EPSR_OK);
    CHECK(std::string(out.p) == std::string(out2.p));
}

TEST_CASE("not epsilon-strong inputs report status 4") {
    Ring ring;
    Action action;
    int is_action = 0;
    get_example("kt3", "q", ring, action, &is_action);
    Str rep;
    CHECK(epsr_ring_classify(ring.p, &rep.p) == EPSR_ERR_NOT_EPSILON_STRONG);
    CHECK(rep.json()["epsilon_failure"]["degree"] == "1");
    Str sep;
    CHECK(epsr_ring_separability(ring.p, &sep.p) == EPSR_ERR_NOT_EPSILON_STRONG);
    CHECK(sep.json()["oracle"]["separable"] == false);
}

TEST_CASE("crossed product and extraction through the C surface") {
    Ring dummy;
    Action action;
    int is_action = 0;
    get_example("kxk-z2-action", "q", dummy, action, &is_action);
    REQUIRE(is_action == 1);

    Str vrep;
    CHECK(epsr_action_validate(action.p, &vrep.p) == EPSR_OK);

    Ring product;
    Str crep;
    CHECK(epsr_crossed_product(action.p, &product.p, &crep.p) == EPSR_OK);
    REQUIRE(product.p != nullptr);
    CHECK(crep.json()["dim"] == 3);

    Action extracted;
    Str xrep;
    CHECK(epsr_extract_action(product.p, nullptr, 1, 1u << 20, 1, &extracted.p, &xrep.p) ==
          EPSR_OK);
    REQUIRE(extracted.p != nullptr);
    CHECK(xrep.json()["roundtrip_isomorphic"] == true);
}

TEST_CASE("extraction refusal is status 7 with a proof note over prime fields") {
    Ring ring;
    Action action;
    int is_action = 0;
    get_example("dade-original", "gf:2", ring, action, &is_action);
    Action extracted;
    Str rep;
    CHECK(epsr_extract_action(ring.p, nullptr, 1, 1u << 20, 0, &extracted.p, &rep.p) ==
          EPSR_ERR_EXHAUSTED);
    CHECK(extracted.p == nullptr);
    CHECK(rep.json()["sections_search"][0]["outcome"] == "proven_absent");
}

TEST_CASE("text rendering through the C surface") {
    Str out;
    CHECK(epsr_render_text("{\"a\": 1, \"b\": [true]}", &out.p) == EPSR_OK);
    CHECK(std::string(out.p).find("a: 1") != std::string::npos);
}
