#include "diwallkit/io.hpp"

#include "diwallkit/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace diwallkit {

using nlohmann::json;

std::string dart_token(const Digraph& g, int dart) {
    return g.edge_name(dart_edge(dart)) + (dart_is_head(dart) ? ":H" : ":T");
}

namespace {

std::string id_string(const json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw Error(Errc::ParseError, where + ": expected a string or integer id");
}

} // namespace

Didrawing parse_didrawing(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(Errc::ParseError, "at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw Error(Errc::ParseError, "/: expected an object");
    for (const char* key : {"vertices", "edges", "rotations"})
        if (!doc.contains(key)) throw Error(Errc::ParseError, std::string("/: missing field \"") + key + "\"");
    if (!doc["vertices"].is_array()) throw Error(Errc::ParseError, "/vertices: expected an array");
    if (!doc["edges"].is_array()) throw Error(Errc::ParseError, "/edges: expected an array");
    if (!doc["rotations"].is_object()) throw Error(Errc::ParseError, "/rotations: expected an object");

    Digraph g;
    std::map<std::string, int> vid, eid;
    const auto& verts = doc["vertices"];
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::string where = "/vertices/" + std::to_string(i);
        std::string name = id_string(verts[i], where);
        if (vid.count(name)) throw Error(Errc::ParseError, where + ": duplicate vertex id \"" + name + "\"");
        vid[name] = g.add_vertex(name);
    }
    const auto& edges = doc["edges"];
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string where = "/edges/" + std::to_string(i);
        const auto& e = edges[i];
        if (!e.is_object() || !e.contains("id") || !e.contains("tail") || !e.contains("head"))
            throw Error(Errc::ParseError, where + ": expected {id, tail, head}");
        std::string name = id_string(e["id"], where + "/id");
        std::string tail = id_string(e["tail"], where + "/tail");
        std::string head = id_string(e["head"], where + "/head");
        if (eid.count(name)) throw Error(Errc::ParseError, where + ": duplicate edge id \"" + name + "\"");
        if (!vid.count(tail)) throw Error(Errc::ParseError, where + "/tail: unknown vertex \"" + tail + "\"");
        if (!vid.count(head)) throw Error(Errc::ParseError, where + "/head: unknown vertex \"" + head + "\"");
        eid[name] = g.add_edge(vid[tail], vid[head], name);
    }

    std::vector<std::vector<int>> rot(g.vertex_count());
    for (const auto& [vname, list] : doc["rotations"].items()) {
        std::string where = "/rotations/" + vname;
        auto it = vid.find(vname);
        if (it == vid.end()) throw Error(Errc::ParseError, where + ": unknown vertex");
        if (!list.is_array()) throw Error(Errc::ParseError, where + ": expected an array of darts");
        for (std::size_t i = 0; i < list.size(); ++i) {
            std::string at = where + "/" + std::to_string(i);
            if (!list[i].is_string()) throw Error(Errc::ParseError, at + ": expected \"edge:T\" or \"edge:H\"");
            std::string tok = list[i].get<std::string>();
            auto colon = tok.rfind(':');
            if (colon == std::string::npos || (tok.substr(colon + 1) != "T" && tok.substr(colon + 1) != "H"))
                throw Error(Errc::ParseError, at + ": malformed dart \"" + tok + "\"");
            auto e = eid.find(tok.substr(0, colon));
            if (e == eid.end()) throw Error(Errc::DanglingDart, at + ": dart \"" + tok + "\" names an unknown edge");
            rot[it->second].push_back(dart_of(e->second, tok.substr(colon + 1) == "H"));
        }
    }
    return Didrawing(std::move(g), std::move(rot));
}

std::string write_didrawing(const Didrawing& dr) {
    const Digraph& g = dr.graph();
    std::vector<std::string> vnames;
    for (int v = 0; v < g.vertex_count(); ++v) vnames.push_back(g.vertex_name(v));
    std::sort(vnames.begin(), vnames.end());

    std::vector<int> eorder(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) eorder[e] = e;
    std::sort(eorder.begin(), eorder.end(), [&](int a, int b) { return g.edge_name(a) < g.edge_name(b); });

    json doc;
    doc["vertices"] = vnames;
    doc["edges"] = json::array();
    for (int e : eorder)
        doc["edges"].push_back(
            {{"id", g.edge_name(e)}, {"tail", g.vertex_name(g.edge(e).tail)}, {"head", g.vertex_name(g.edge(e).head)}});
    doc["rotations"] = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::string> toks;
        for (int d : dr.rotation(v)) toks.push_back(dart_token(g, d));
        if (!toks.empty()) {
            auto least = std::min_element(toks.begin(), toks.end());
            std::rotate(toks.begin(), least, toks.end());
        }
        doc["rotations"][g.vertex_name(v)] = toks;
    }
    return doc.dump(2) + "\n";
}

std::string write_dot(const Didrawing& dr) {
    const Digraph& g = dr.graph();
    std::ostringstream out;
    out << "digraph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << json(g.vertex_name(v)).dump() << ";\n";
    for (int e = 0; e < g.edge_count(); ++e)
        out << "  " << json(g.vertex_name(g.edge(e).tail)).dump() << " -> " << json(g.vertex_name(g.edge(e).head)).dump()
            << " [label=" << json(g.edge_name(e)).dump() << "];\n";
    out << "}\n";
    return out.str();
}

} // namespace diwallkit
