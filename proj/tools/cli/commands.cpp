#include "commands.hpp"

#include "io.hpp"

#include "hypercox/algnum.hpp"
#include "hypercox/errors.hpp"
#include "hypercox/expr.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace hypercox::cli {

namespace {

struct Config {
    std::string input;
    std::string output;
    std::string format = "json";
    long max_m = 60;
    std::size_t cycle_cap = kDefaultCycleCap;
    long precision = 0;  // 0: environment or library default
    unsigned jobs = 1;
    int codim = 1;
    int max_depth = -1;
    std::size_t max_roots = 256;
    double max_distance = 1e5;
};

/// What a command produced: the text to emit and the exit code.
struct Outcome {
    std::string text;
    int code = kOk;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool inconclusive(const std::optional<ClassificationReport>& r) {
    return r && r->verdict == Verdict::Inconclusive;
}

std::string field_text(const SubfieldDescriptor& f) {
    std::string s = "Q";
    const auto gens = f.reduced_generators();
    if (!gens.empty()) {
        s += "(";
        for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + to_expression(gens[i]);
        s += ")";
    }
    return s + " [degree " + std::to_string(f.degree()) + "]";
}

std::string report_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << "verdict: " << to_string(r.verdict) << "\n"
       << "ground field: " << field_text(r.ground_field) << "\n"
       << "adjacent field: " << field_text(r.adjacent_field) << "\n";
    for (const auto& w : r.failures) {
        os << "failed " << w.condition << " (" << w.kind << ")";
        if (w.value) os << " at " << to_expression(*w.value);
        if (!w.detail.empty()) os << ": " << w.detail;
        os << "\n";
    }
    return os.str();
}

std::string face_line(const FaceDescriptor& f) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < f.subset.size(); ++i) os << (i ? "," : "") << f.subset[i] + 1;
    os << "} dim " << f.dim << ", " << f.gram.size() << " facets, "
       << (f.is_coxeter ? "coxeter" : "non-coxeter");
    if (f.classification) os << ", " << to_string(f.classification->verdict);
    return os.str();
}

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (c.format == a) return;
    }
    throw InvalidInput("format \"" + c.format + "\" is not available for this command");
}

Outcome cmd_classify(const Config& c) {
    require_format(c, {"json", "text"});
    const auto in = polytope_from_json(read_json_file(c.input));
    const auto report = classify(in.gram, c.cycle_cap);
    const int code = report.verdict == Verdict::Inconclusive ? kInconclusive : kOk;
    return {c.format == "text" ? report_text(report) : dump(report_to_json(report)), code};
}

Outcome cmd_faces(const Config& c) {
    require_format(c, {"json", "text"});
    const auto in = polytope_from_json(read_json_file(c.input));
    FaceOptions opt{c.max_m, true, c.cycle_cap, c.jobs};
    const auto faces = enumerate_faces(in.gram, c.codim, opt);
    int code = kOk;
    json arr = json::array();
    std::string text;
    for (const auto& f : faces) {
        if (inconclusive(f.classification)) code = kInconclusive;
        arr.push_back(face_to_json(f));
        text += face_line(f) + "\n";
    }
    return {c.format == "text" ? text : dump(arr), code};
}

Outcome cmd_tree(const Config& c) {
    const auto in = polytope_from_json(read_json_file(c.input));
    TreeOptions opt;
    opt.max_m = c.max_m;
    opt.cycle_cap = c.cycle_cap;
    opt.max_level = c.max_depth;
    opt.jobs = c.jobs;
    const auto tree = facet_tree(in.gram, opt);
    int code = kOk;
    std::string text;
    for (const auto& n : tree.nodes) {
        if (inconclusive(n.face.classification)) code = kInconclusive;
        text += std::string(static_cast<std::size_t>(2 * n.level), ' ') + "#" + std::to_string(n.id) + " " +
                face_line(n.face) + "\n";
    }
    if (c.format == "dot") return {tree_to_dot(tree), code};
    if (c.format == "text") return {text, code};
    return {dump(tree_to_json(tree)), code};
}

Outcome cmd_vinberg(const Config& c) {
    const auto lattice = lattice_from_json(read_json_file(c.input));
    VinbergOptions opt;
    opt.max_roots = c.max_roots;
    opt.max_distance = c.max_distance;
    try {
        const auto r = vinberg_run(lattice, opt);
        if (c.format == "dot") return {diagram_to_dot(gram_to_diagram(r.gram, c.max_m)), kOk};
        return {dump(vinberg_to_json(r, false)), kOk};
    } catch (const IterationLimit& e) {
        return {dump(vinberg_to_json(e.partial(), true)), kIterationLimit};
    }
}

Outcome cmd_convert(const Config& c) {
    const auto in = polytope_from_json(read_json_file(c.input));
    const auto diagram = in.diagram ? *in.diagram : gram_to_diagram(in.gram, c.max_m);
    if (c.format == "dot") return {diagram_to_dot(diagram), kOk};
    json j = gram_to_json(in.gram);
    j["diagram"] = diagram_to_json(diagram);
    return {dump(j), kOk};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Exact hyperbolic Coxeter polytope toolkit", "hypercox"};
    app.require_subcommand(1);
    app.allow_extras(false);

    auto common = [&](CLI::App* sub, const char* input_help) {
        sub->add_option("input", c.input, input_help)->required()->check(CLI::ExistingFile);
        sub->add_option("--max-m", c.max_m, "largest m recognized in pi/m")->check(CLI::PositiveNumber);
        sub->add_option("--cycle-cap", c.cycle_cap, "simple cycle cap for V3")->check(CLI::PositiveNumber);
        sub->add_option("--precision", c.precision, "starting interval precision in bits")
            ->check(CLI::PositiveNumber);
        sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("--output", c.output, "write to this file instead of standard output");
    };

    std::function<Outcome(const Config&)> action;
    auto bind = [&](CLI::App* sub, Outcome (*f)(const Config&)) {
        sub->callback([&action, f] { action = f; });
    };

    auto* classify_cmd = app.add_subcommand("classify", "classify a polytope by Vinberg's criterion");
    common(classify_cmd, "polytope JSON");
    bind(classify_cmd, cmd_classify);

    auto* faces_cmd = app.add_subcommand("faces", "list the faces of one codimension");
    common(faces_cmd, "polytope JSON");
    faces_cmd->add_option("--codim", c.codim, "codimension")->check(CLI::NonNegativeNumber);
    bind(faces_cmd, cmd_faces);

    auto* tree_cmd = app.add_subcommand("tree", "build the facet tree");
    common(tree_cmd, "polytope JSON");
    tree_cmd->add_option("--max-depth", c.max_depth, "do not expand nodes at this codimension")
        ->check(CLI::NonNegativeNumber);
    bind(tree_cmd, cmd_tree);

    auto* vinberg_cmd = app.add_subcommand("vinberg", "run Vinberg's algorithm on a diagonal lattice");
    common(vinberg_cmd, "lattice JSON");
    vinberg_cmd->add_option("--max-roots", c.max_roots, "stop after this many roots")->check(CLI::PositiveNumber);
    vinberg_cmd->add_option("--max-distance", c.max_distance, "largest x0^2/k searched")
        ->check(CLI::PositiveNumber);
    bind(vinberg_cmd, cmd_vinberg);

    auto* convert_cmd = app.add_subcommand("convert", "convert between Gram matrix and diagram forms");
    common(convert_cmd, "polytope JSON");
    bind(convert_cmd, cmd_convert);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    Outcome result;
    try {
        if (c.precision > 0) set_precision_seed(static_cast<mpfr_prec_t>(c.precision));
        result = action(c);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const NegativeRadicand& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const UnsupportedAngle& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const PositiveEntry& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const NotAFace& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const SizeLimit& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const CycleExplosion& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }

    if (c.output.empty()) {
        out << result.text;
    } else {
        std::ofstream f(c.output);
        if (!(f << result.text)) {
            err << "error: cannot write " << c.output << "\n";
            return kFailure;
        }
    }
    return result.code;
}

}  // namespace hypercox::cli
