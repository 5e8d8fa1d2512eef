// Command-line front end for the epsring shared library. Talks to the core
// exclusively through the C API in epsring.h; exit codes are the API status
// codes.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "epsring.h"

namespace {

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { epsr_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        std::exit(1);
    }
    out << text << "\n";
}

void print_report(const OwnedString& report, const std::string& format) {
    if (!report.p) return;
    if (format == "text") {
        OwnedString rendered;
        if (epsr_render_text(report.p, &rendered.p) == EPSR_OK && rendered.p) {
            std::cout << rendered.str();
            return;
        }
    }
    std::cout << report.str() << "\n";
}

struct RingHandle {
    epsr_ring* p = nullptr;
    ~RingHandle() { epsr_ring_free(p); }
};

struct ActionHandle {
    epsr_action* p = nullptr;
    ~ActionHandle() { epsr_action_free(p); }
};

int load_ring(const std::string& path, RingHandle& ring, const std::string& format) {
    OwnedString err;
    int rc = epsr_ring_parse(read_file(path).c_str(), &ring.p, &err.p);
    if (rc != EPSR_OK) print_report(err, format);
    return rc;
}

int load_action(const std::string& path, ActionHandle& action, const std::string& format) {
    OwnedString err;
    int rc = epsr_action_parse(read_file(path).c_str(), &action.p, &err.p);
    if (rc != EPSR_OK) print_report(err, format);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with group-graded algebras: epsilon-strong "
                 "gradings, separability, Frobenius systems, and partial crossed products"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string path, out_path = "-", field = "q", sections_path, name;
    std::uint64_t seed = 1, budget = 1u << 20;
    std::size_t count = 200;
    bool verify_roundtrip = false;

    auto* validate = app.add_subcommand("validate", "validate a ring or action file");
    validate->add_option("path", path)->required();

    auto* classify = app.add_subcommand("classify", "classify a grading");
    classify->add_option("path", path)->required();

    auto* separability =
        app.add_subcommand("separability", "decide separability over the principal component");
    separability->add_option("path", path)->required();

    auto* frobenius = app.add_subcommand("frobenius", "compute a Frobenius system");
    frobenius->add_option("path", path)->required();

    auto* crossed = app.add_subcommand("crossed-product", "build the partial crossed product");
    crossed->add_option("path", path)->required();
    crossed->add_option("-o,--output", out_path, "ring file output");

    auto* extract = app.add_subcommand("extract-action", "present a ring as a crossed product");
    extract->add_option("path", path)->required();
    extract->add_option("--sections", sections_path, "JSON file of sections per degree");
    extract->add_option("--seed", seed);
    extract->add_option("--budget", budget);
    extract->add_flag("--verify-roundtrip", verify_roundtrip);
    extract->add_option("-o,--output", out_path, "action file output");

    auto* example = app.add_subcommand("example", "emit a named example instance");
    example->add_option("name", name)->required();
    example->add_option("--field", field, "q or gf:p");
    example->add_option("--seed", seed);
    example->add_option("-o,--output", out_path, "output path");

    auto* corpus = app.add_subcommand("corpus-run", "run the law suites over a seeded corpus");
    corpus->add_option("--count", count);
    corpus->add_option("--seed", seed);
    corpus->add_option("--budget", budget);

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) {
        // try as a ring first, then as an action
        RingHandle ring;
        OwnedString err;
        std::string text = read_file(path);
        int rc = epsr_ring_parse(text.c_str(), &ring.p, &err.p);
        if (rc == EPSR_OK) {
            OwnedString rep;
            rc = epsr_ring_validate(ring.p, &rep.p);
            print_report(rep, format);
            return rc;
        }
        ActionHandle action;
        OwnedString err2;
        if (epsr_action_parse(text.c_str(), &action.p, &err2.p) == EPSR_OK) {
            OwnedString rep;
            rc = epsr_action_validate(action.p, &rep.p);
            print_report(rep, format);
            return rc;
        }
        print_report(err, format);
        return rc;
    }
    if (classify->parsed()) {
        RingHandle ring;
        int rc = load_ring(path, ring, format);
        if (rc != EPSR_OK) return rc;
        OwnedString rep;
        rc = epsr_ring_classify(ring.p, &rep.p);
        print_report(rep, format);
        return rc;
    }
    if (separability->parsed()) {
        RingHandle ring;
        int rc = load_ring(path, ring, format);
        if (rc != EPSR_OK) return rc;
        OwnedString rep;
        rc = epsr_ring_separability(ring.p, &rep.p);
        print_report(rep, format);
        return rc;
    }
    if (frobenius->parsed()) {
        RingHandle ring;
        int rc = load_ring(path, ring, format);
        if (rc != EPSR_OK) return rc;
        OwnedString rep;
        rc = epsr_ring_frobenius(ring.p, &rep.p);
        print_report(rep, format);
        return rc;
    }
    if (crossed->parsed()) {
        ActionHandle action;
        int rc = load_action(path, action, format);
        if (rc != EPSR_OK) return rc;
        RingHandle ring;
        OwnedString rep;
        rc = epsr_crossed_product(action.p, &ring.p, &rep.p);
        print_report(rep, format);
        if (rc == EPSR_OK && ring.p) {
            OwnedString out;
            if (epsr_ring_to_json(ring.p, &out.p) == EPSR_OK) write_output(out_path, out.str());
        }
        return rc;
    }
    if (extract->parsed()) {
        RingHandle ring;
        int rc = load_ring(path, ring, format);
        if (rc != EPSR_OK) return rc;
        std::string sections;
        if (!sections_path.empty()) sections = read_file(sections_path);
        ActionHandle action;
        OwnedString rep;
        rc = epsr_extract_action(ring.p, sections.empty() ? nullptr : sections.c_str(), seed,
                                 budget, verify_roundtrip ? 1 : 0, &action.p, &rep.p);
        print_report(rep, format);
        if (rc == EPSR_OK && action.p) {
            OwnedString out;
            if (epsr_action_to_json(action.p, &out.p) == EPSR_OK)
                write_output(out_path, out.str());
        }
        return rc;
    }
    if (example->parsed()) {
        RingHandle ring;
        ActionHandle action;
        int is_action = 0;
        OwnedString rep;
        int rc = epsr_example(name.c_str(), field.c_str(), seed, &ring.p, &action.p, &is_action,
                              &rep.p);
        if (rc != EPSR_OK) {
            print_report(rep, format);
            return rc;
        }
        OwnedString out;
        if (is_action)
            epsr_action_to_json(action.p, &out.p);
        else
            epsr_ring_to_json(ring.p, &out.p);
        if (out.p) write_output(out_path, out.str());
        return rc;
    }
    if (corpus->parsed()) {
        OwnedString rep;
        int rc = epsr_corpus_run(seed, count, budget, &rep.p);
        print_report(rep, format);
        return rc;
    }
    return 1;
}
