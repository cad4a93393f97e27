#include "usf/io.hpp"

#include "usf/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace usf {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

} // namespace

Hypergraph parse_hypergraph_text(std::istream& in) {
    std::vector<std::string> boundary, interior;
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    bool saw_boundary = false, saw_interior = false;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip_comment(raw);
        auto colon = line.find(':');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (colon == std::string::npos)
            throw parse_error(lineno, "expected 'boundary:', 'interior:' or 'edge <id>:'");
        auto head = tokens(line.substr(0, colon));
        auto tail = tokens(line.substr(colon + 1));
        if (head.size() == 1 && head[0] == "boundary") {
            if (saw_boundary) throw parse_error(lineno, "duplicate boundary line");
            saw_boundary = true;
            boundary = tail;
        } else if (head.size() == 1 && head[0] == "interior") {
            if (saw_interior) throw parse_error(lineno, "duplicate interior line");
            saw_interior = true;
            interior = tail;
        } else if (head.size() == 2 && head[0] == "edge") {
            edges.emplace_back(head[1], tail);
        } else {
            throw parse_error(lineno, "unrecognized line '" + raw + "'");
        }
    }
    if (!saw_boundary) throw parse_error(lineno, "missing boundary line");
    return Hypergraph::from_parts(std::move(boundary), std::move(interior), std::move(edges));
}

std::string format_hypergraph_text(const Hypergraph& h) {
    std::ostringstream os;
    os << "boundary:";
    for (const auto& id : h.boundary_ids) os << ' ' << id;
    os << '\n';
    if (!h.interior_ids.empty()) {
        os << "interior:";
        for (const auto& id : h.interior_ids) os << ' ' << id;
        os << '\n';
    }
    for (int e = 0; e < h.edge_count(); ++e) {
        os << "edge " << h.edge_ids[e] << ':';
        for (int v : h.incidence[e]) os << ' ' << h.vertex_id(v);
        os << '\n';
    }
    return os.str();
}

Hypergraph parse_hypergraph_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("boundary") || !j.contains("edges"))
        throw parse_error(0, "expected an object with 'boundary' and 'edges'");
    auto string_list = [](const nlohmann::json& a, const char* what) {
        if (!a.is_array()) throw parse_error(0, std::string(what) + " must be an array");
        std::vector<std::string> out;
        for (const auto& x : a) {
            if (!x.is_string()) throw parse_error(0, std::string(what) + " must hold strings");
            out.push_back(x.get<std::string>());
        }
        return out;
    };
    std::vector<std::string> boundary = string_list(j["boundary"], "boundary");
    std::vector<std::string> interior =
        j.contains("interior") ? string_list(j["interior"], "interior") : std::vector<std::string>{};
    if (!j["edges"].is_object()) throw parse_error(0, "edges must be an object of id -> vertices");
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (const auto& [id, verts] : j["edges"].items())
        edges.emplace_back(id, string_list(verts, "edge vertex list"));
    return Hypergraph::from_parts(std::move(boundary), std::move(interior), std::move(edges));
}

nlohmann::json hypergraph_to_json(const Hypergraph& h) {
    nlohmann::json j;
    j["boundary"] = h.boundary_ids;
    j["interior"] = h.interior_ids;
    nlohmann::json edges = nlohmann::json::object();
    for (int e = 0; e < h.edge_count(); ++e) {
        std::vector<std::string> verts;
        for (int v : h.incidence[e]) verts.push_back(h.vertex_id(v));
        edges[h.edge_ids[e]] = verts;
    }
    j["edges"] = std::move(edges);
    return j;
}

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open '" + path + "'");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return parse_hypergraph_json(in);
    return parse_hypergraph_text(in);
}

namespace {

std::string coord_token(const LatticeBox& box, int64_t v) {
    if (v == box.wired()) return "W";
    auto c = box.coords_of(v);
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

int64_t parse_coord_token(const LatticeBox& box, const std::string& tok, int lineno) {
    if (tok == "W") return box.wired();
    std::vector<int64_t> c;
    std::stringstream ss(tok);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t used = 0;
            c.push_back(std::stoll(part, &used));
            if (used != part.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw parse_error(lineno, "bad coordinate '" + part + "'");
        }
    }
    try {
        return box.index_of(c);
    } catch (const std::exception& e) {
        throw parse_error(lineno, e.what());
    }
}

} // namespace

void dump_forest(const LatticeForest& f, std::ostream& out) {
    if (!f.has_parents()) throw std::invalid_argument("forest has no parent structure to dump");
    for (int64_t v = 0; v < f.box.volume; ++v)
        out << coord_token(f.box, v) << ' ' << coord_token(f.box, f.parent[v]) << '\n';
}

LatticeForest parse_forest(const LatticeBox& box, std::istream& in) {
    std::vector<std::pair<int64_t, int64_t>> edges;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip_comment(raw);
        auto toks = tokens(line);
        if (toks.empty()) continue;
        if (toks.size() != 2) throw parse_error(lineno, "expected 'child parent'");
        edges.emplace_back(parse_coord_token(box, toks[0], lineno),
                           parse_coord_token(box, toks[1], lineno));
    }
    try {
        return forest_from_edges(box, edges);
    } catch (const std::invalid_argument& e) {
        throw parse_error(0, e.what());
    }
}

ObjectiveSpec parse_objective(std::istream& in) {
    ObjectiveSpec f;
    std::map<std::string, int> index;
    bool saw_set = false;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip_comment(raw);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw parse_error(lineno, "expected 'set:' or 'term <c>:'");
        auto head = tokens(line.substr(0, colon));
        auto tail = tokens(line.substr(colon + 1));
        if (head.size() == 1 && head[0] == "set") {
            if (saw_set) throw parse_error(lineno, "duplicate set line");
            saw_set = true;
            for (const auto& id : tail) {
                if (!index.emplace(id, static_cast<int>(f.index_set.size())).second)
                    throw parse_error(lineno, "index '" + id + "' repeated");
                f.index_set.push_back(id);
            }
        } else if (head.size() == 2 && head[0] == "term") {
            if (!saw_set) throw parse_error(lineno, "term before the set line");
            ObjectiveTerm term;
            try {
                term.coeff = parse_rational(head[1]);
            } catch (const std::invalid_argument& e) {
                throw parse_error(lineno, e.what());
            }
            for (const auto& pair_tok : tail) {
                auto comma = pair_tok.find(',');
                if (comma == std::string::npos)
                    throw parse_error(lineno, "pair '" + pair_tok + "' needs the form a,b");
                auto a = index.find(pair_tok.substr(0, comma));
                auto b = index.find(pair_tok.substr(comma + 1));
                if (a == index.end() || b == index.end())
                    throw parse_error(lineno, "pair '" + pair_tok + "' uses an unknown index");
                term.support.emplace_back(a->second, b->second);
            }
            if (term.support.empty()) throw parse_error(lineno, "term with empty support");
            f.terms.push_back(std::move(term));
        } else {
            throw parse_error(lineno, "unrecognized line '" + raw + "'");
        }
    }
    if (!saw_set) throw parse_error(lineno, "missing set line");
    return f;
}

} // namespace usf
