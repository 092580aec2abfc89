#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ctfrob.h"

namespace {

int to_exit_code(ctf_status s) {
    switch (s) {
        case CTF_OK: return 0;
        case CTF_ERR_PARSE: return 1;
        case CTF_ERR_PRECONDITION: return 1;
        case CTF_ERR_UNCLASSIFIED: return 2;
        case CTF_ERR_VERIFY_FAIL: return 3;
    }
    return 1;
}

int report_error(ctf_status s) {
    std::cerr << "error: " << ctf_last_error() << "\n";
    return to_exit_code(s);
}

ctf_quiver* load_quiver(const std::string& file, int& err) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot open '" << file << "'\n";
        err = 1;
        return nullptr;
    }
    std::ostringstream text;
    text << in.rdbuf();
    ctf_quiver* q = nullptr;
    ctf_status s = ctf_quiver_parse(text.str().c_str(), &q);
    if (s != CTF_OK) {
        err = report_error(s);
        return nullptr;
    }
    return q;
}

int print_report(ctf_status s, char* text) {
    if (text) {
        std::cout << text;
        ctf_string_free(text);
    }
    if (s != CTF_OK && !text) return report_error(s);
    if (s != CTF_OK) {
        std::cerr << "error: " << ctf_last_error() << "\n";
        return to_exit_code(s);
    }
    return 0;
}

struct SeedOpts {
    std::string file;
    std::string type;
    int rank = 0;
};

ctf_quiver* load_seed(const SeedOpts& o, int& err) {
    if (!o.file.empty()) return load_quiver(o.file, err);
    if (o.type.empty()) {
        std::cerr << "error: need --seed FILE or --type FAMILY\n";
        err = 1;
        return nullptr;
    }
    int rank = o.rank == 0 && o.type == "E6" ? 6 : o.rank;
    ctf_quiver* q = nullptr;
    ctf_status s = ctf_quiver_seed(o.type.c_str(), rank, &q);
    if (s != CTF_OK) {
        err = report_error(s);
        return nullptr;
    }
    return q;
}

void add_seed_opts(CLI::App* cmd, SeedOpts& o, bool allow_d_e6) {
    auto* seed = cmd->add_option("--seed", o.file, "quiver file to start from");
    auto* type = cmd->add_option("--type", o.type,
                                 allow_d_e6 ? "family A, D or E6" : "family A");
    cmd->add_option("--rank", o.rank, "number of vertices");
    type->excludes(seed);
    seed->excludes(type);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius dimension of cluster-tilted algebras of Dynkin type"};
    app.require_subcommand(1);

    std::string file;
    int vertex = 0;
    std::string out_file;
    std::string method;
    bool show_basis = false, show_coproducts = false;
    int limit = 10000;
    SeedOpts seed;

    auto* c_classify = app.add_subcommand("classify", "classify a quiver");
    c_classify->add_option("file", file)->required();

    auto* c_relations = app.add_subcommand("relations", "print the defining relations");
    c_relations->add_option("file", file)->required();

    auto* c_basis = app.add_subcommand("basis", "print the algebra basis classes");
    c_basis->add_option("file", file)->required();

    auto* c_mutate = app.add_subcommand("mutate", "mutate at a vertex");
    c_mutate->add_option("file", file)->required();
    c_mutate->add_option("--vertex", vertex, "vertex to mutate at")->required();
    c_mutate->add_option("--out", out_file, "write the result here instead of stdout");

    auto* c_frobdim = app.add_subcommand("frobdim", "compute the Frobenius dimension");
    c_frobdim->add_option("file", file)->required();
    c_frobdim->add_option("--method", method, "formula, oracle or both");
    c_frobdim->add_flag("--show-basis", show_basis, "print the Frobenius space tensors");
    c_frobdim->add_flag("--show-coproducts", show_coproducts,
                        "print Delta(e_v) for every vertex and tensor");

    auto* c_enumerate = app.add_subcommand("enumerate", "enumerate a mutation class");
    add_seed_opts(c_enumerate, seed, true);
    c_enumerate->add_option("--limit", limit, "abort beyond this many classes");

    auto* c_verify = app.add_subcommand("verify", "check the formula against the oracle");
    add_seed_opts(c_verify, seed, true);
    c_verify->add_option("--limit", limit, "abort beyond this many classes");

    CLI11_PARSE(app, argc, argv);

    int err = 0;
    char* text = nullptr;

    if (c_classify->parsed()) {
        ctf_quiver* q = load_quiver(file, err);
        if (!q) return err;
        ctf_status s = ctf_classify_report(q, &text);
        ctf_quiver_free(q);
        return print_report(s, text);
    }
    if (c_relations->parsed()) {
        ctf_quiver* q = load_quiver(file, err);
        if (!q) return err;
        ctf_status s = ctf_relations_report(q, &text);
        ctf_quiver_free(q);
        return print_report(s, text);
    }
    if (c_basis->parsed()) {
        ctf_quiver* q = load_quiver(file, err);
        if (!q) return err;
        ctf_status s = ctf_basis_report(q, &text);
        ctf_quiver_free(q);
        return print_report(s, text);
    }
    if (c_mutate->parsed()) {
        ctf_quiver* q = load_quiver(file, err);
        if (!q) return err;
        ctf_quiver* m = nullptr;
        ctf_status s = ctf_mutate(q, vertex, &m);
        ctf_quiver_free(q);
        if (s != CTF_OK) return report_error(s);
        s = ctf_quiver_print(m, &text);
        ctf_quiver_free(m);
        if (s != CTF_OK) return report_error(s);
        if (out_file.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_file);
            if (!out) {
                std::cerr << "error: cannot write '" << out_file << "'\n";
                ctf_string_free(text);
                return 1;
            }
            out << text;
        }
        ctf_string_free(text);
        return 0;
    }
    if (c_frobdim->parsed()) {
        ctf_quiver* q = load_quiver(file, err);
        if (!q) return err;
        ctf_status s = ctf_frobdim_report(q, method.empty() ? nullptr : method.c_str(),
                                          show_basis, show_coproducts, &text);
        ctf_quiver_free(q);
        return print_report(s, text);
    }
    if (c_enumerate->parsed()) {
        ctf_quiver* q = load_seed(seed, err);
        if (!q) return err;
        ctf_status s = ctf_enumerate_report(q, limit, &text);
        ctf_quiver_free(q);
        return print_report(s, text);
    }
    if (c_verify->parsed()) {
        ctf_quiver* q = load_seed(seed, err);
        if (!q) return err;
        int over_class = seed.file.empty() ? 1 : 0;
        ctf_status s = ctf_verify_report(q, over_class, limit, &text);
        ctf_quiver_free(q);
        return print_report(s, text);
    }
    return 1;
}
