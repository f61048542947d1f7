#include "io.hpp"

#include "hypercox/errors.hpp"
#include "hypercox/expr.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace hypercox::cli {

namespace {

std::string entry_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InvalidInput("matrix entries must be strings or integers");
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<std::vector<std::string>> matrix_texts(const json& rows) {
    if (!rows.is_array() || rows.empty()) throw InvalidInput("matrix must be a non-empty array of rows");
    std::vector<std::vector<std::string>> out;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != rows.size()) throw InvalidInput("matrix must be square");
        std::vector<std::string> r;
        for (const auto& v : row) r.push_back(entry_text(v));
        out.push_back(std::move(r));
    }
    return out;
}

Matrix parse_matrix(const std::vector<std::vector<std::string>>& texts, ExprParser& p) {
    const std::size_t n = texts.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = p.parse(texts[i][j]);
    }
    return m.unified();
}

json string_rows(std::size_t n, const std::function<std::string(std::size_t, std::size_t)>& f) {
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(f(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json label_to_json(const AngleLabel& l) {
    switch (l.kind) {
        case AngleLabel::Kind::Angle: return l.m;
        case AngleLabel::Kind::Parallel: return "parallel";
        case AngleLabel::Kind::Divergent:
            if (l.weight.is_zero()) return "divergent";
            return json{{"divergent", to_expression(l.weight)}};
        case AngleLabel::Kind::NonCoxeter: return "non_coxeter";
        case AngleLabel::Kind::RightAngle: return 2;
    }
    return nullptr;
}

std::string dot_label(const AngleLabel& l) {
    switch (l.kind) {
        case AngleLabel::Kind::Angle: return std::to_string(l.m);
        case AngleLabel::Kind::Parallel: return "∞";
        case AngleLabel::Kind::Divergent: return l.weight.is_zero() ? "d" : "d=" + to_expression(l.weight);
        case AngleLabel::Kind::NonCoxeter: return "?";
        case AngleLabel::Kind::RightAngle: return "2";
    }
    return "";
}

}  // namespace

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

CoxeterDiagram diagram_from_json(const json& j) {
    CoxeterDiagram d;
    const json& verts = require(j, "vertices");
    if (!verts.is_array()) throw InvalidInput("\"vertices\" must be an array");
    for (const auto& v : verts) d.vertices.push_back(entry_text(v));
    auto index_of = [&](const json& v) {
        const std::string name = entry_text(v);
        for (std::size_t i = 0; i < d.vertices.size(); ++i) {
            if (d.vertices[i] == name) return static_cast<int>(i);
        }
        throw InvalidInput("unknown vertex \"" + name + "\"");
    };
    ExprParser p;
    for (const auto& e : j.value("edges", json::array())) {
        CoxeterDiagram::Edge edge;
        edge.u = index_of(require(e, "u"));
        edge.v = index_of(require(e, "v"));
        const json& lab = require(e, "label");
        if (lab.is_number_integer()) {
            const long m = lab.get<long>();
            if (m == 2) continue;
            if (m < 2) throw InvalidInput("angle label must be at least 2");
            edge.label.kind = AngleLabel::Kind::Angle;
            edge.label.m = m;
        } else if (lab.is_string()) {
            const auto s = lab.get<std::string>();
            if (s == "parallel" || s == "inf" || s == "∞") {
                edge.label.kind = AngleLabel::Kind::Parallel;
            } else if (s == "divergent") {
                edge.label.kind = AngleLabel::Kind::Divergent;
            } else {
                throw InvalidInput("unknown edge label \"" + s + "\"");
            }
        } else if (lab.is_object() && lab.contains("divergent")) {
            edge.label.kind = AngleLabel::Kind::Divergent;
            edge.label.weight = p.parse(entry_text(lab.at("divergent")));
        } else {
            throw InvalidInput("edge label must be an integer, \"parallel\" or {\"divergent\": expr}");
        }
        d.edges.push_back(std::move(edge));
    }
    return d;
}

json diagram_to_json(const CoxeterDiagram& d) {
    json edges = json::array();
    for (const auto& e : d.edges) {
        edges.push_back({{"u", d.vertices[static_cast<std::size_t>(e.u)]},
                         {"v", d.vertices[static_cast<std::size_t>(e.v)]},
                         {"label", label_to_json(e.label)}});
    }
    return {{"vertices", d.vertices}, {"edges", edges}};
}

PolytopeInput polytope_from_json(const json& j) {
    PolytopeInput in;
    if (!j.is_object()) throw InvalidInput("polytope input must be a JSON object");
    if (!j.contains("gram")) {
        in.diagram = diagram_from_json(require(j, "diagram"));
        for (const auto& e : in.diagram->edges) {
            if (e.label.kind == AngleLabel::Kind::Divergent && e.label.weight.is_zero())
                throw InvalidInput("divergent edge without a weight");
        }
        in.gram = diagram_to_gram(*in.diagram);
    } else {
        auto texts = matrix_texts(require(j, "gram"));
        std::vector<std::string> radicands;
        if (j.contains("tower")) {
            for (const auto& r : j.at("tower")) radicands.push_back(entry_text(r));
        }
        ExprParser p(tower_from_radicands(radicands));
        if (j.contains("scaled")) {
            auto scaled = matrix_texts(j.at("scaled"));
            if (scaled.size() != texts.size()) throw InvalidInput("\"scaled\" and \"gram\" differ in size");
            in.gram = GramMatrix::from_scaled(parse_matrix(scaled, p));
            const std::size_t n = texts.size();
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t k = 0; k < n; ++k) {
                    const AlgNum g = p.parse(texts[i][k]);
                    const bool ok = i == k ? g == AlgNum(1)
                                           : g.sign() == in.gram.entry_sign(i, k) && g * g == in.gram.entry_square(i, k);
                    if (!ok) throw InvalidInput("\"gram\" does not match \"scaled\" at (" + std::to_string(i) + ", " +
                                                std::to_string(k) + ")");
                }
            }
        } else {
            in.gram = GramMatrix(parse_matrix(texts, p));
        }
    }
    for (std::size_t i = 0; i < in.gram.size(); ++i) {
        for (std::size_t k = i + 1; k < in.gram.size(); ++k) {
            if (in.gram.entry_sign(i, k) > 0) throw PositiveEntry();
        }
    }
    if (j.contains("dim")) {
        in.dim = j.at("dim").get<int>();
        const Signature s = signature(in.gram.scaled());
        if (s.neg != 1 || s.pos != *in.dim)
            throw InvalidInput("Gram signature (" + std::to_string(s.pos) + ", " + std::to_string(s.neg) + ", " +
                               std::to_string(s.zero) + ") does not match dim " + std::to_string(*in.dim));
    }
    return in;
}

json gram_to_json(const GramMatrix& g) {
    const std::size_t n = g.size();
    json j;
    const Signature s = signature(g.scaled());
    if (s.neg == 1) j["dim"] = s.pos;
    j["gram"] = string_rows(n, [&](std::size_t a, std::size_t b) {
        return a == b ? std::string("1") : signed_sqrt_expression(g.entry_sign(a, b), g.entry_square(a, b));
    });
    j["scaled"] = string_rows(n, [&](std::size_t a, std::size_t b) { return to_expression(g.scaled()(a, b)); });
    j["tower"] = tower_radicands(g.scaled().common_tower());
    return j;
}

json field_to_json(const SubfieldDescriptor& f) {
    json gens = json::array();
    for (const auto& x : f.reduced_generators()) gens.push_back(to_expression(x));
    return {{"generators", gens}, {"degree", f.degree()}};
}

json witness_to_json(const Witness& w) {
    json emb = json::array();
    for (auto s : w.embedding) emb.push_back(static_cast<int>(s));
    return {{"condition", w.condition},
            {"kind", w.kind},
            {"indices", w.indices},
            {"value", w.value ? json(to_expression(*w.value)) : json(nullptr)},
            {"embedding", emb},
            {"detail", w.detail}};
}

json report_to_json(const ClassificationReport& r) {
    json failures = json::array();
    for (const auto& w : r.failures) failures.push_back(witness_to_json(w));
    return {{"verdict", to_string(r.verdict)},
            {"ground_field", field_to_json(r.ground_field)},
            {"adjacent_field", field_to_json(r.adjacent_field)},
            {"witness", r.failures.empty() ? json(nullptr) : failures.front()},
            {"failures", failures}};
}

json face_to_json(const FaceDescriptor& f) {
    json g = gram_to_json(f.gram);
    return {{"subset", f.subset},
            {"dim", f.dim},
            {"gram", g["gram"]},
            {"scaled", g["scaled"]},
            {"tower", g["tower"]},
            {"facet_map", f.facet_map},
            {"coxeter", f.is_coxeter},
            {"max_m", f.max_m},
            {"classification", f.classification ? report_to_json(*f.classification) : json(nullptr)}};
}

json tree_to_json(const FacetTree& t) {
    json nodes = json::array();
    for (const auto& n : t.nodes) {
        nodes.push_back({{"id", n.id},
                         {"parent", n.parent < 0 ? json(nullptr) : json(n.parent)},
                         {"level", n.level},
                         {"key", n.key},
                         {"children", n.children},
                         {"face", face_to_json(n.face)}});
    }
    json supp = json::array();
    for (const auto& s : t.suppressed) {
        supp.push_back({{"parent", s.parent}, {"subset", s.subset}, {"key", s.key}, {"kept", s.kept}});
    }
    return {{"dimension", t.dimension},
            {"max_m", t.max_m},
            {"dedup", "global_non_coxeter"},
            {"nodes", nodes},
            {"suppressed", supp}};
}

DiagonalLattice lattice_from_json(const json& j) {
    DiagonalLattice l;
    const json& f = require(j, "field");
    if (f.is_string() && f.get<std::string>() == "Q") {
        l.ring = QuadRing();
    } else if (f.is_object() && f.contains("quadratic")) {
        l.ring = QuadRing(f.at("quadratic").get<long>());
    } else {
        throw InvalidInput("\"field\" must be \"Q\" or {\"quadratic\": d}");
    }
    ExprParser p(l.ring.tower());
    for (const auto& d : require(j, "diag")) l.diag.push_back(l.ring.from_alg(p.parse(entry_text(d))));
    l.validate();
    return l;
}

json lattice_to_json(const DiagonalLattice& l) {
    json diag = json::array();
    for (auto d : l.diag) diag.push_back(l.ring.to_string(d));
    json field = l.ring.is_rational() ? json("Q") : json{{"quadratic", l.ring.radicand()}};
    return {{"field", field}, {"diag", diag}};
}

json vinberg_to_json(const VinbergResult& r, bool partial) {
    json roots = json::array();
    for (const auto& e : r.roots) {
        json coords = json::array();
        for (auto c : e.coords) coords.push_back(r.lattice.ring.to_string(c));
        roots.push_back({{"coords", coords}, {"norm", r.lattice.ring.to_string(e.norm)}});
    }
    json out = {{"lattice", lattice_to_json(r.lattice)},
                {"partial", partial},
                {"finite_volume", r.finite_volume},
                {"cone_size", r.cone_size},
                {"roots", roots}};
    json poly = gram_to_json(r.gram);
    if (r.finite_volume) poly["diagram"] = diagram_to_json(gram_to_diagram(r.gram));
    out["polytope"] = poly;
    return out;
}

std::string diagram_to_dot(const CoxeterDiagram& d) {
    std::ostringstream os;
    os << "graph coxeter {\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < d.size(); ++i) os << "  v" << i << " [label=\"" << d.vertices[i] << "\"];\n";
    for (const auto& e : d.edges) {
        os << "  v" << e.u << " -- v" << e.v << " [label=\"" << dot_label(e.label) << "\"";
        if (e.label.kind == AngleLabel::Kind::Divergent) os << ", style=dashed";
        if (e.label.kind == AngleLabel::Kind::Parallel) os << ", style=bold";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string tree_to_dot(const FacetTree& t) {
    std::ostringstream os;
    os << "digraph facet_tree {\n  node [shape=box];\n";
    for (const auto& n : t.nodes) {
        os << "  n" << n.id << " [label=\"dim " << n.face.dim << "\\n"
           << (n.face.is_coxeter ? "coxeter" : "non-coxeter");
        if (n.face.classification) os << "\\n" << to_string(n.face.classification->verdict);
        os << "\"];\n";
    }
    for (const auto& n : t.nodes) {
        for (int c : n.children) os << "  n" << n.id << " -> n" << c << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace hypercox::cli
