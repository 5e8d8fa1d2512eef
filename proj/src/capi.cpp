#include "epsring.h"

#include <cstdlib>
#include <cstring>

#include "epsring/io.hpp"

using namespace epsring;

struct epsr_ring {
    GradedRing value;
};

struct epsr_action {
    TwistedPartialAction value;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_report(char** slot, const Json& doc) {
    if (slot) *slot = dup_string(doc.dump(2));
}

int fail(char** slot, int status, const std::string& message) {
    if (slot) {
        Json doc;
        doc["error"] = message;
        doc["status"] = status;
        *slot = dup_string(doc.dump(2));
    }
    return status;
}

// Runs f, routing library errors into status codes + error reports.
template <typename F>
int guarded(char** report, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        return fail(report, e.code(), e.what());
    } catch (const std::exception& e) {
        return fail(report, EPSR_ERR_INTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

const char* epsr_version(void) { return "epsring 1.0.0"; }

void epsr_string_free(char* s) { std::free(s); }

int epsr_ring_parse(const char* json_text, epsr_ring** out, char** error) {
    if (!json_text || !out) return fail(error, EPSR_ERR_INTERNAL, "null argument");
    *out = nullptr;
    return guarded(error, [&] {
        *out = new epsr_ring{parse_ring(json_text)};
        return EPSR_OK;
    });
}

int epsr_ring_to_json(const epsr_ring* ring, char** out) {
    if (!ring || !out) return EPSR_ERR_INTERNAL;
    return guarded(out, [&] {
        *out = dup_string(ring_to_json(ring->value).dump(2));
        return EPSR_OK;
    });
}

void epsr_ring_free(epsr_ring* ring) { delete ring; }

int epsr_action_parse(const char* json_text, epsr_action** out, char** error) {
    if (!json_text || !out) return fail(error, EPSR_ERR_INTERNAL, "null argument");
    *out = nullptr;
    return guarded(error, [&] {
        *out = new epsr_action{parse_action(json_text)};
        return EPSR_OK;
    });
}

int epsr_action_to_json(const epsr_action* action, char** out) {
    if (!action || !out) return EPSR_ERR_INTERNAL;
    return guarded(out, [&] {
        *out = dup_string(action_to_json(action->value).dump(2));
        return EPSR_OK;
    });
}

void epsr_action_free(epsr_action* action) { delete action; }

int epsr_ring_validate(const epsr_ring* ring, char** report) {
    if (!ring) return fail(report, EPSR_ERR_INTERNAL, "null handle");
    return guarded(report, [&] {
        Report rep = validate_ring_report(ring->value);
        set_report(report, rep.doc);
        return rep.status;
    });
}

int epsr_ring_classify(const epsr_ring* ring, char** report) {
    if (!ring) return fail(report, EPSR_ERR_INTERNAL, "null handle");
    return guarded(report, [&] {
        Report rep = classify_report(ring->value);
        set_report(report, rep.doc);
        return rep.status;
    });
}

int epsr_ring_separability(const epsr_ring* ring, char** report) {
    if (!ring) return fail(report, EPSR_ERR_INTERNAL, "null handle");
    return guarded(report, [&] {
        Report rep = separability_report(ring->value);
        set_report(report, rep.doc);
        return rep.status;
    });
}

int epsr_ring_frobenius(const epsr_ring* ring, char** report) {
    if (!ring) return fail(report, EPSR_ERR_INTERNAL, "null handle");
    return guarded(report, [&] {
        Report rep = frobenius_report(ring->value);
        set_report(report, rep.doc);
        return rep.status;
    });
}

int epsr_action_validate(const epsr_action* action, char** report) {
    if (!action) return fail(report, EPSR_ERR_INTERNAL, "null handle");
    return guarded(report, [&] {
        Report rep = validate_action_report(action->value);
        set_report(report, rep.doc);
        return rep.status;
    });
}

int epsr_crossed_product(const epsr_action* action, epsr_ring** out, char** report) {
    if (!action || !out) return fail(report, EPSR_ERR_INTERNAL, "null argument");
    *out = nullptr;
    return guarded(report, [&] {
        Json ring_json;
        Report rep = crossed_product_report(action->value, &ring_json);
        set_report(report, rep.doc);
        if (rep.status == 0) *out = new epsr_ring{parse_ring(ring_json.dump())};
        return rep.status;
    });
}

int epsr_extract_action(const epsr_ring* ring, const char* sections_json, uint64_t seed,
                        uint64_t budget, int verify_roundtrip, epsr_action** out,
                        char** report) {
    if (!ring || !out) return fail(report, EPSR_ERR_INTERNAL, "null argument");
    *out = nullptr;
    return guarded(report, [&] {
        const GradedRing& s = ring->value;
        std::map<GroupElt, Vec> sections;
        bool auto_sections = true;
        if (sections_json && std::strlen(sections_json) > 0) {
            auto_sections = false;
            Json j;
            try {
                j = Json::parse(sections_json);
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("bad sections document: ") + e.what());
            }
            for (const auto& [lbl, coords] : j.items()) {
                auto g = s.group().parse_label(lbl);
                if (!g) throw ParseError("unknown degree '" + lbl + "' in sections");
                sections[*g] =
                    scalar_vec_from_json(s.algebra().field(), coords, s.algebra().dim());
            }
        }
        Json action_json;
        Report rep = extract_action_report(s, sections, auto_sections, seed, budget,
                                           verify_roundtrip != 0, &action_json);
        set_report(report, rep.doc);
        if (rep.status == 0) {
            *out = new epsr_action{parse_action(action_json.dump())};
        }
        return rep.status;
    });
}

int epsr_example(const char* name, const char* field, uint64_t seed, epsr_ring** out_ring,
                 epsr_action** out_action, int* is_action, char** report) {
    if (!name || !out_ring || !out_action || !is_action)
        return fail(report, EPSR_ERR_INTERNAL, "null argument");
    *out_ring = nullptr;
    *out_action = nullptr;
    return guarded(report, [&] {
        FieldSpec spec = FieldSpec::parse(field ? field : "q");
        Json payload;
        bool as_action = false;
        Report rep = example_report(name, spec, seed, &payload, &as_action);
        set_report(report, rep.doc);
        *is_action = as_action ? 1 : 0;
        if (as_action)
            *out_action = new epsr_action{parse_action(payload.dump())};
        else
            *out_ring = new epsr_ring{parse_ring(payload.dump())};
        return rep.status;
    });
}

int epsr_corpus_run(uint64_t seed, size_t count, uint64_t budget, char** report) {
    return guarded(report, [&] {
        Report rep = corpus_run_report(seed, count, budget);
        set_report(report, rep.doc);
        return rep.status;
    });
}

int epsr_render_text(const char* report_json, char** out) {
    if (!report_json || !out) return EPSR_ERR_INTERNAL;
    return guarded(out, [&] {
        Json doc;
        try {
            doc = Json::parse(report_json);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad report document: ") + e.what());
        }
        *out = dup_string(render_text(doc));
        return EPSR_OK;
    });
}

}  // extern "C"
