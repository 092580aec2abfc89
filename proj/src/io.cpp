#include "ctfrob/io.hpp"

#include <sstream>

namespace ctf {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw QuiverError("line " + std::to_string(line) + ": " + msg);
}

int parse_vertex(int line, const std::string& tok) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 1) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(line, "expected a vertex number, got '" + tok + "'");
    }
}

}  // namespace

ParsedFile parse_quiver_file(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int n = -1;
    std::vector<Arrow> arrows;
    struct RawRel {
        int line;
        Relation rel;
    };
    std::vector<RawRel> rels;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "vertices") {
            if (n >= 0) fail(lineno, "duplicate 'vertices' line");
            if (!(ls >> n) || n < 1) fail(lineno, "expected 'vertices N' with N >= 1");
        } else if (kw == "arrow") {
            if (n < 0) fail(lineno, "'arrow' before 'vertices'");
            std::string name, s, t;
            if (!(ls >> name >> s >> t)) fail(lineno, "expected 'arrow NAME S T'");
            arrows.push_back({name, parse_vertex(lineno, s), parse_vertex(lineno, t)});
            std::string extra;
            if (ls >> extra) fail(lineno, "trailing token '" + extra + "'");
        } else if (kw == "zero") {
            Relation r;
            r.kind = Relation::Kind::Zero;
            std::string tok;
            while (ls >> tok) r.first.push_back(parse_vertex(lineno, tok));
            if (r.first.size() < 3) fail(lineno, "'zero' needs at least 3 vertices");
            rels.push_back({lineno, r});
        } else if (kw == "comm") {
            Relation r;
            r.kind = Relation::Kind::Comm;
            std::string tok;
            bool after_eq = false;
            while (ls >> tok) {
                if (tok == "=") {
                    if (after_eq) fail(lineno, "duplicate '=' in 'comm'");
                    after_eq = true;
                } else {
                    (after_eq ? r.second : r.first).push_back(parse_vertex(lineno, tok));
                }
            }
            if (!after_eq) fail(lineno, "'comm' needs '=' between the two paths");
            if (r.first.size() < 3 || r.second.size() < 3)
                fail(lineno, "'comm' paths need length >= 2");
            rels.push_back({lineno, r});
        } else {
            fail(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (n < 0) throw QuiverError("missing 'vertices' line");

    ParsedFile out{Quiver(n, std::move(arrows)), {}};
    for (auto& [line, r] : rels) {
        try {
            validate_relation(out.quiver, r);
        } catch (const QuiverError& e) {
            fail(line, e.what());
        }
        out.relations.push_back(r);
    }
    return out;
}

std::string print_path(const Path& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i]);
    }
    return s;
}

std::string print_relation(const Relation& r) {
    if (r.kind == Relation::Kind::Zero) return "zero " + print_path(r.first);
    return "comm " + print_path(r.first) + " = " + print_path(r.second);
}

std::string print_quiver(const Quiver& q) {
    std::ostringstream os;
    os << "vertices " << q.num_vertices() << "\n";
    for (const Arrow& a : q.arrows())
        os << "arrow " << a.name << " " << a.src << " " << a.tgt << "\n";
    return os.str();
}

}  // namespace ctf
