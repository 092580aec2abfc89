#include "ctfrob.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>

#include "ctfrob/algebra.hpp"
#include "ctfrob/frobenius.hpp"
#include "ctfrob/generators.hpp"
#include "ctfrob/io.hpp"
#include "ctfrob/relations.hpp"

using namespace ctf;

struct ctf_quiver {
    ParsedFile pf;
};

namespace {

thread_local std::string g_last_error;

ctf_status fail(ctf_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string path_str(const Path& p) {
    if (p.size() == 1) return "e " + std::to_string(p[0]);
    return print_path(p);
}

std::string rational_str(const mpq_class& c) { return c.get_str(); }

void append_label(std::ostringstream& os, const ClassLabel& label) {
    os << "class: " << to_string(label.tag) << "\n";
    os << "hereditary: " << (label.hereditary ? "true" : "false") << "\n";
    if (label.d) {
        const DWitness& w = *label.d;
        if (w.subtype == 4) {
            os << "witness.central:";
            for (int v : w.central) os << " " << v;
            os << "\n";
            os << "witness.spikes:";
            for (int v : w.spike) os << " " << v;
            os << "\n";
        } else {
            os << "witness.c: " << w.c << "\n";
            if (w.subtype != 1) os << "witness.d: " << w.d << "\n";
            os << "witness.a: " << w.a << "\n";
            os << "witness.b: " << w.b << "\n";
        }
    }
    if (label.e6) {
        os << "template: " << label.e6->template_index << "\n";
        os << "map:";
        for (int i = 1; i <= 6; ++i) os << " " << label.e6->map[i];
        os << "\n";
    }
}

void append_formula(std::ostringstream& os, const FormulaResult& f) {
    const char* kind = f.kind == FormulaResult::Kind::Exact         ? "Exact"
                       : f.kind == FormulaResult::Kind::LowerBound ? "LowerBound"
                                                                   : "NotApplicable";
    os << "formula.kind: " << kind << "\n";
    if (f.kind != FormulaResult::Kind::NotApplicable)
        os << "formula.value: " << f.value << "\n";
    for (const Path& p : f.basis_paths) os << "formula.basis_path: " << path_str(p) << "\n";
    for (const SpecialProduct& s : f.specials)
        os << "formula.special: " << s.vertex << " " << s.into << " " << s.from << "\n";
}

std::string tensor_str(const std::vector<std::pair<std::pair<int, int>, mpq_class>>& t,
                       const PathAlgebra& alg, const std::string& lhs) {
    std::ostringstream os;
    for (const auto& [pair, c] : t) {
        os << lhs << " += " << rational_str(c) << " * (" << path_str(alg.basis()[pair.first])
           << ") (x) (" << path_str(alg.basis()[pair.second]) << ")\n";
    }
    return os.str();
}

ctf_status guard(char** out, const std::function<std::string()>& fn) {
    if (!out) return fail(CTF_ERR_PRECONDITION, "null output pointer");
    try {
        *out = dup_string(fn());
        return CTF_OK;
    } catch (const QuiverError& e) {
        return fail(CTF_ERR_PARSE, e.what());
    } catch (const std::exception& e) {
        return fail(CTF_ERR_PRECONDITION, e.what());
    }
}

}  // namespace

extern "C" {

const char* ctf_last_error(void) { return g_last_error.c_str(); }

void ctf_string_free(char* s) { std::free(s); }

ctf_status ctf_quiver_parse(const char* text, ctf_quiver** out) {
    if (!text || !out) return fail(CTF_ERR_PRECONDITION, "null argument");
    try {
        *out = new ctf_quiver{parse_quiver_file(text)};
        return CTF_OK;
    } catch (const std::exception& e) {
        return fail(CTF_ERR_PARSE, e.what());
    }
}

ctf_status ctf_quiver_seed(const char* family, int rank, ctf_quiver** out) {
    if (!family || !out) return fail(CTF_ERR_PRECONDITION, "null argument");
    try {
        std::string f = family;
        Quiver q(1, {});
        if (f == "A") {
            if (rank < 1) throw QuiverError("type A needs rank >= 1");
            q = gen::linear_A(rank);
        } else if (f == "D") {
            if (rank < 4) throw QuiverError("type D needs rank >= 4");
            q = gen::d1_fork(rank - 3);
        } else if (f == "E6") {
            if (rank != 6) throw QuiverError("type E6 needs rank 6");
            q = gen::e6_tree();
        } else {
            throw QuiverError("unknown family '" + f + "' (expected A, D or E6)");
        }
        *out = new ctf_quiver{ParsedFile{q, {}}};
        return CTF_OK;
    } catch (const std::exception& e) {
        return fail(CTF_ERR_PRECONDITION, e.what());
    }
}

void ctf_quiver_free(ctf_quiver* q) { delete q; }

ctf_status ctf_quiver_print(const ctf_quiver* q, char** out) {
    if (!q) return fail(CTF_ERR_PRECONDITION, "null quiver");
    return guard(out, [&] {
        std::string s = print_quiver(q->pf.quiver);
        for (const Relation& r : q->pf.relations) s += print_relation(r) + "\n";
        return s;
    });
}

ctf_status ctf_mutate(const ctf_quiver* q, int vertex, ctf_quiver** out) {
    if (!q || !out) return fail(CTF_ERR_PRECONDITION, "null argument");
    try {
        *out = new ctf_quiver{ParsedFile{mutate(q->pf.quiver, vertex), {}}};
        return CTF_OK;
    } catch (const std::exception& e) {
        return fail(CTF_ERR_PRECONDITION, e.what());
    }
}

ctf_status ctf_classify_report(const ctf_quiver* q, char** out) {
    if (!q) return fail(CTF_ERR_PRECONDITION, "null quiver");
    return guard(out, [&] {
        std::ostringstream os;
        append_label(os, classify(q->pf.quiver));
        return os.str();
    });
}

ctf_status ctf_relations_report(const ctf_quiver* q, char** out) {
    if (!q) return fail(CTF_ERR_PRECONDITION, "null quiver");
    if (!out) return fail(CTF_ERR_PRECONDITION, "null output pointer");
    try {
        BoundQuiver bq = bound_quiver(q->pf.quiver, q->pf.relations);
        std::string s;
        for (const Relation& r : bq.relations) s += print_relation(r) + "\n";
        *out = dup_string(s);
        return CTF_OK;
    } catch (const QuiverError& e) {
        return fail(CTF_ERR_UNCLASSIFIED, e.what());
    }
}

ctf_status ctf_basis_report(const ctf_quiver* q, char** out) {
    if (!q) return fail(CTF_ERR_PRECONDITION, "null quiver");
    if (!out) return fail(CTF_ERR_PRECONDITION, "null output pointer");
    try {
        PathAlgebra alg = PathAlgebra::build(bound_quiver(q->pf.quiver, q->pf.relations));
        std::ostringstream os;
        for (int k = 0; k < alg.dim(); ++k) {
            const Path& p = alg.basis()[k];
            os << "CLASS " << k << " : " << p.front() << " -> " << p.back() << " : "
               << path_str(p) << "\n";
        }
        *out = dup_string(os.str());
        return CTF_OK;
    } catch (const QuiverError& e) {
        return fail(CTF_ERR_UNCLASSIFIED, e.what());
    }
}

ctf_status ctf_frobdim_report(const ctf_quiver* q, const char* method, int show_basis,
                              int show_coproducts, char** out) {
    if (!q) return fail(CTF_ERR_PRECONDITION, "null quiver");
    if (!out) return fail(CTF_ERR_PRECONDITION, "null output pointer");
    try {
        ClassLabel label = classify(q->pf.quiver);
        std::string m = method ? method : "";
        if (m.empty()) m = label.tag == ClassLabel::Tag::Unknown ? "oracle" : "both";
        if (m != "formula" && m != "oracle" && m != "both")
            return fail(CTF_ERR_PRECONDITION, "unknown method '" + m + "'");
        if (m != "oracle" && label.tag == ClassLabel::Tag::Unknown && q->pf.relations.empty())
            return fail(CTF_ERR_UNCLASSIFIED,
                        "quiver is unclassifiable and a formula was requested");

        BoundQuiver bq;
        try {
            bq = bound_quiver(q->pf.quiver, q->pf.relations);
        } catch (const QuiverError& e) {
            return fail(CTF_ERR_UNCLASSIFIED, e.what());
        }
        PathAlgebra alg = PathAlgebra::build(bq);

        std::ostringstream os;
        append_label(os, label);
        FormulaResult f;
        if (m != "oracle") {
            f = frobdim_formula(alg, label);
            append_formula(os, f);
        }
        if (m != "formula") {
            FrobeniusSpace space = frobdim_oracle(alg);
            os << "oracle.dim: " << space.dim() << "\n";
            if (m == "both") {
                bool pass = true;
                if (f.kind == FormulaResult::Kind::Exact) pass = f.value == space.dim();
                if (f.kind == FormulaResult::Kind::LowerBound) pass = space.dim() >= f.value;
                os << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
            }
            if (show_basis) {
                for (int k = 0; k < space.dim(); ++k)
                    os << tensor_str(space.basis[k], alg, "z[" + std::to_string(k) + "]");
            }
            if (show_coproducts) {
                for (int k = 0; k < space.dim(); ++k) {
                    os << "tensor " << k << ":\n";
                    for (int v = 1; v <= alg.quiver().num_vertices(); ++v) {
                        auto t = coproduct_of(space, k, alg.idempotent(v), alg);
                        os << tensor_str(t, alg, "Delta(e_" + std::to_string(v) + ")");
                    }
                }
            }
        }
        *out = dup_string(os.str());
        return CTF_OK;
    } catch (const std::exception& e) {
        return fail(CTF_ERR_PARSE, e.what());
    }
}

ctf_status ctf_enumerate_report(const ctf_quiver* seed, int limit, char** out) {
    if (!seed) return fail(CTF_ERR_PRECONDITION, "null quiver");
    return guard(out, [&] {
        auto cls = enumerate_mutation_class(seed->pf.quiver, limit);
        std::ostringstream os;
        os << "classes: " << cls.size() << "\n";
        for (std::size_t k = 0; k < cls.size(); ++k) {
            os << "member " << k << ": vertices " << cls[k].num_vertices() << " ;";
            for (const Arrow& a : cls[k].arrows()) os << " " << a.src << "->" << a.tgt;
            os << "\n";
        }
        return os.str();
    });
}

ctf_status ctf_verify_report(const ctf_quiver* seed, int over_class, int limit, char** out) {
    if (!seed) return fail(CTF_ERR_PRECONDITION, "null quiver");
    if (!out) return fail(CTF_ERR_PRECONDITION, "null output pointer");
    try {
        std::vector<Quiver> corpus;
        if (over_class)
            corpus = enumerate_mutation_class(seed->pf.quiver, limit);
        else
            corpus.push_back(seed->pf.quiver);

        std::ostringstream os;
        bool all_pass = true;
        if (over_class) os << "members: " << corpus.size() << "\n";
        for (std::size_t k = 0; k < corpus.size(); ++k) {
            BoundQuiver bq = bound_quiver(corpus[k],
                                          over_class ? std::vector<Relation>{}
                                                     : seed->pf.relations);
            VerifyReport rep = verify(bq);
            all_pass = all_pass && rep.pass;
            if (over_class) {
                const char* kind =
                    rep.formula.kind == FormulaResult::Kind::Exact        ? "Exact"
                    : rep.formula.kind == FormulaResult::Kind::LowerBound ? "LowerBound"
                                                                          : "NotApplicable";
                os << "member " << k << ": class=" << to_string(rep.label.tag)
                   << " formula=" << kind << " " << rep.formula.value
                   << " oracle=" << rep.oracle_dim
                   << " verdict=" << (rep.pass ? "PASS" : "FAIL") << "\n";
            } else {
                append_label(os, rep.label);
                append_formula(os, rep.formula);
                os << "oracle.dim: " << rep.oracle_dim << "\n";
            }
        }
        os << "verdict: " << (all_pass ? "PASS" : "FAIL") << "\n";
        *out = dup_string(os.str());
        return all_pass ? CTF_OK : fail(CTF_ERR_VERIFY_FAIL, "verification failed");
    } catch (const QuiverError& e) {
        return fail(CTF_ERR_UNCLASSIFIED, e.what());
    } catch (const std::exception& e) {
        return fail(CTF_ERR_PRECONDITION, e.what());
    }
}

}  // extern "C"
