#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "collinear/applications.hpp"
#include "collinear/cubic.hpp"
#include "collinear/error.hpp"
#include "collinear/oracle.hpp"
#include "collinear/realize.hpp"
#include "collinear/three_tree.hpp"
#include "collinear/treewidth.hpp"

using namespace col;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("io", "cannot read " + path);
    std::ostringstream o;
    o << in.rdbuf();
    return o.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw input_error("io", "cannot write " + path);
}

std::string yes(bool b) { return b ? "yes" : "no"; }

int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

// best curve of the bundle and its drawing with the curve on y = 0
struct Frame {
    GoodCurve lambda;
    Drawing psi;
};
Frame best_frame(const PlaneGraph& g) {
    auto d = decompose(g);
    auto cb = build_curve_bundle(d);
    Frame f{cb.lambda[cb.best()], {}};
    f.psi = curve_to_drawing(g, f.lambda);
    return f;
}

std::vector<Q> read_rationals(const std::string& text) {
    std::vector<Q> r;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) r.push_back(parse_q(tok));
    }
    return r;
}

std::string item_name(const LabelingOrder::Item& it) {
    if (it.v >= 0) return "v " + std::to_string(it.v);
    return "x " + std::to_string(it.e.first) + " " + std::to_string(it.e.second);
}

// ------------------------------------------------------------------ curve

struct CurveOut {
    std::string curve, report;
    int code = 0;
    std::string error;
    PlaneGraph graph;  // graph the curve lives on
};

CurveOut make_curve(const std::string& path, const std::string& method, const std::string& model_path) {
    CurveOut out;
    auto g = parse_plane_graph(slurp(path));
    GoodCurve c;
    int bound = 0;
    std::ostringstream rep;
    rep << "method " << method << "\n";
    rep << "vertices " << g.n() << "\n";
    out.graph = g;
    if (method == "3tree") {
        auto d = decompose(g);
        auto cb = build_curve_bundle(d);
        c = cb.lambda[cb.best()];
        bound = ceil_div(g.n() - 3, 8);
    } else if (method == "cubic") {
        CubicAudit audit;
        c = theorem4(g, {}, &audit).curve;
        bound = ceil_div(g.n(), 4);
        rep << "levels " << audit.levels << "\n";
    } else {
        if (model_path.empty()) throw input_error("usage", "--method grid needs --model");
        auto r = theorem5_curve(g, parse_grid_model(slurp(model_path)));
        c = r.curve;
        out.graph = r.cut_graph;
        bound = grid_bound(parse_grid_model(slurp(model_path)).g);
        rep << "outer_face " << r.cut_graph.face_key(r.cut_graph.outer_face()) << "\n";
        if (r.transposed) rep << "model transposed\n";
    }
    auto v = validate_curve(out.graph, c);
    rep << "vertices_on_curve " << v.vertex_count_on_curve << "\n";
    rep << "good " << yes(v.good) << "\n";
    rep << "proper " << yes(v.proper) << "\n";
    if (v.vertex_count_on_curve >= bound && v.good && v.proper) {
        rep << "vertices_on_curve >= " << bound << "\n";
    } else {
        out.code = 1;
        out.error = "verify: curve misses the bound " + std::to_string(bound) + " or is not proper and good";
    }
    out.report = rep.str();
    std::ostringstream cs;
    std::istringstream rl(out.report);
    for (std::string line; std::getline(rl, line);) cs << "# " << line << "\n";
    cs << serialize(c);
    out.curve = cs.str();
    return out;
}

int exit_code(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Input: return 2;
        case ErrorKind::Guard: return 3;
        default: return 1;
    }
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collinear vertex sets in plane graphs: curves, drawings and placements."};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::vector<std::string> inputs;
    std::string graph_path, curve_path, drawing_path, model_path, out_path, svg_path, graph_out, model_out, method = "3tree";
    std::string kind, targets_path, points_path;
    std::uint64_t seed = 0;
    int jobs = 1, oracle_limit = 24, n = 0, block = 3;
    bool internal_only = false, list_items = false;

    auto* curve = app.add_subcommand("curve", "Build a good curve through many vertices.");
    curve->add_option("graphs", inputs, "plane graph files")->required()->check(CLI::ExistingFile);
    curve->add_option("--method", method, "3tree, cubic or grid")->check(CLI::IsMember({"3tree", "cubic", "grid"}));
    curve->add_option("--model", model_path, "grid minor model (grid method)")->check(CLI::ExistingFile);
    curve->add_option("--out", out_path, "curve file, or a directory for several inputs");
    curve->add_option("--graph-out", graph_out, "graph with the outer face the curve is proper for");
    curve->add_option("--jobs", jobs, "input files processed in parallel")->check(CLI::PositiveNumber);

    auto* draw = app.add_subcommand("draw", "Straight-line drawing with the curve's vertices on y = 0.");
    draw->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    draw->add_option("curve", curve_path)->required()->check(CLI::ExistingFile);
    draw->add_option("--out", out_path, "drawing file");
    draw->add_option("--svg", svg_path, "SVG file");

    auto* dp = app.add_subcommand("dp", "Exact optimum for a plane 3-tree.");
    dp->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    dp->add_option("--out", out_path);

    auto* oracle = app.add_subcommand("oracle", "Exhaustive search over proper good curves.");
    oracle->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    oracle->add_option("--oracle-limit", oracle_limit, "largest edge count searched");
    oracle->add_flag("--internal-only", internal_only, "count vertices off the outer face only");
    oracle->add_option("--out", out_path);

    auto* place = app.add_subcommand("place", "Put the collinear vertices and crossings of a 3-tree at given x.");
    place->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    place->add_option("targets", targets_path, "one rational per item of the order")->check(CLI::ExistingFile);
    place->add_option("--drawing", drawing_path, "drawing whose y = 0 line fixes labels and order")
        ->check(CLI::ExistingFile);
    place->add_flag("--list", list_items, "print the items of the order and their current x");
    place->add_option("--out", out_path);
    place->add_option("--svg", svg_path);

    auto* unt = app.add_subcommand("untangle", "Planar drawing of a 3-tree keeping some vertices in place.");
    unt->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    unt->add_option("drawing", drawing_path, "possibly crossing drawing")->required()->check(CLI::ExistingFile);
    unt->add_option("--out", out_path);
    unt->add_option("--svg", svg_path);

    auto* ups = app.add_subcommand("ups", "Draw a treewidth-3 graph with vertices on given points.");
    ups->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    ups->add_option("points", points_path, "x y per line")->required()->check(CLI::ExistingFile);
    ups->add_option("--out", out_path);
    ups->add_option("--svg", svg_path);

    auto* gen = app.add_subcommand("gen", "Generate test graphs.");
    gen->add_option("kind", kind, "3tree, cubic, grid, gridlike or dodecahedron")
        ->required()
        ->check(CLI::IsMember({"3tree", "cubic", "grid", "gridlike", "dodecahedron"}));
    gen->add_option("--n", n, "vertex count, or grid side for grid kinds");
    gen->add_option("--seed", seed);
    gen->add_option("--block", block, "largest branch set side for gridlike");
    gen->add_option("--out", out_path);
    gen->add_option("--model-out", model_out, "grid minor model file for grid kinds");

    auto* ver = app.add_subcommand("verify", "Check a drawing or a curve against a graph.");
    ver->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    ver->add_option("--drawing", drawing_path)->check(CLI::ExistingFile);
    ver->add_option("--curve", curve_path)->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error usage: " << one_line(e.what()) << "\n";
        return 2;
    }

    try {
        if (curve->parsed()) {
            if (method == "grid" && inputs.size() > 1) throw input_error("usage", "--method grid takes one graph");
            if (inputs.size() == 1) {
                auto r = make_curve(inputs[0], method, model_path);
                emit(out_path, r.curve);
                if (!out_path.empty()) std::cout << r.report;
                if (!graph_out.empty()) emit(graph_out, serialize(r.graph));
                if (r.code) std::cerr << "error " << r.error << "\n";
                return r.code;
            }
            if (!out_path.empty()) fs::create_directories(out_path);
            std::vector<CurveOut> res(inputs.size());
            auto work = [&](size_t i) {
                try {
                    res[i] = make_curve(inputs[i], method, model_path);
                } catch (const Error& e) {
                    res[i].code = exit_code(e);
                    res[i].error = e.cls() + ": " + one_line(e.what());
                }
            };
            std::vector<std::future<void>> fut;
            for (int w = 0; w < jobs; ++w)
                fut.push_back(std::async(std::launch::async, [&, w] {
                    for (size_t i = w; i < inputs.size(); i += jobs) work(i);
                }));
            for (auto& f : fut) f.get();
            int code = 0;
            for (size_t i = 0; i < inputs.size(); ++i) {
                std::cout << "== " << inputs[i] << "\n" << res[i].report;
                if (res[i].code) {
                    std::cout << "error " << res[i].error << "\n";
                    if (!code) code = res[i].code;
                }
                if (!out_path.empty() && !res[i].curve.empty())
                    emit((fs::path(out_path) / (fs::path(inputs[i]).stem().string() + ".curve")).string(), res[i].curve);
            }
            return code;
        }
        if (draw->parsed()) {
            auto g = parse_plane_graph(slurp(graph_path));
            auto c = parse_curve(slurp(curve_path));
            auto d = curve_to_drawing(g, c);
            auto rep = verify_drawing(g, d);
            if (!rep.ok()) throw verify_error("drawing", one_line(rep.summary()));
            emit(out_path, serialize(d));
            if (!svg_path.empty()) emit(svg_path, to_svg(g, d));
            if (!out_path.empty()) std::cout << "on_line " << d.designated.size() << "\n" << rep.summary() << "\n";
            return 0;
        }
        if (dp->parsed()) {
            auto d = decompose(parse_plane_graph(slurp(graph_path)));
            emit(out_path, serialize(dp_optimal_collinear(d), d));
            return 0;
        }
        if (oracle->parsed()) {
            OracleOptions opt;
            opt.edge_limit = oracle_limit;
            opt.internal_only = internal_only;
            emit(out_path, serialize(enumerate_curves(parse_plane_graph(slurp(graph_path)), opt)));
            return 0;
        }
        if (place->parsed()) {
            auto g = parse_plane_graph(slurp(graph_path));
            Drawing psi = drawing_path.empty() ? best_frame(g).psi : parse_drawing(slurp(drawing_path));
            auto lab = labeling_from_drawing(g, psi);
            if (list_items) {
                std::ostringstream o;
                for (size_t k = 0; k < lab.order.size(); ++k)
                    o << "item " << k << " " << item_name(lab.order[k]) << " at " << fmt_q(lab.target_x[k]) << "\n";
                emit(out_path, o.str());
                return 0;
            }
            if (targets_path.empty()) throw input_error("usage", "place needs a targets file or --list");
            auto xs = read_rationals(slurp(targets_path));
            if (xs.size() != lab.order.size())
                throw input_error("targets", "expected " + std::to_string(lab.order.size()) + " values, got " +
                                                 std::to_string(xs.size()) + " (see --list)");
            set_targets(lab, xs);
            auto d = place_free(g, lab);
            auto rep = verify_drawing(g, d);
            if (!rep.ok()) throw verify_error("drawing", one_line(rep.summary()));
            emit(out_path, serialize(d));
            if (!svg_path.empty()) emit(svg_path, to_svg(g, d));
            return 0;
        }
        if (unt->parsed()) {
            auto g = parse_plane_graph(slurp(graph_path));
            auto bad = parse_drawing(slurp(drawing_path));
            auto r = untangle(g, bad.coords);
            auto rep = verify_drawing(g, r.drawing);
            if (!rep.ok()) throw verify_error("drawing", one_line(rep.summary()));
            int x = point_bound(g.n());
            int need = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(x)) - 1e-9));
            std::ostringstream o;
            o << "# fixed " << r.fixed.size() << " (bound " << need << "):";
            for (int v : r.fixed) o << " " << v;
            o << "\n" << serialize(r.drawing);
            emit(out_path, o.str());
            if (!svg_path.empty()) emit(svg_path, to_svg(g, r.drawing));
            if (static_cast<int>(r.fixed.size()) < need) throw verify_error("untangle", "fixed set below the bound");
            return 0;
        }
        if (ups->parsed()) {
            auto g = parse_plane_graph(slurp(graph_path));
            auto xs = read_rationals(slurp(points_path));
            if (xs.size() % 2) throw input_error("points", "odd number of coordinates");
            PointSet p;
            for (size_t k = 0; k < xs.size(); k += 2) p.points.push_back({xs[k], xs[k + 1]});
            auto r = universal_placement(g, p);
            auto rep = verify_drawing(g, r.drawing);
            if (!rep.ok()) throw verify_error("drawing", one_line(rep.summary()));
            std::ostringstream o;
            for (size_t k = 0; k < r.vertex_of_point.size(); ++k)
                o << "# point " << k << " vertex " << r.vertex_of_point[k] << "\n";
            o << serialize(r.drawing);
            emit(out_path, o.str());
            if (!svg_path.empty()) emit(svg_path, to_svg(g, r.drawing));
            return 0;
        }
        if (gen->parsed()) {
            if (kind == "dodecahedron") {
                emit(out_path, serialize(dodecahedron_graph()));
            } else if (kind == "3tree") {
                emit(out_path, serialize(random_plane_3tree(seed, n)));
            } else if (kind == "cubic") {
                emit(out_path, serialize(generate_triconnected_cubic(seed, n)));
            } else {
                if (model_out.empty()) throw input_error("usage", "grid kinds need --model-out");
                GridInstance inst = kind == "grid" ? GridInstance{grid_graph(n), identity_model(n)}
                                                   : random_grid_instance(seed, n, block);
                emit(out_path, serialize(inst.g));
                emit(model_out, serialize(inst.m));
            }
            return 0;
        }
        if (ver->parsed()) {
            if (drawing_path.empty() && curve_path.empty()) throw input_error("usage", "verify needs --drawing or --curve");
            auto g = parse_plane_graph(slurp(graph_path));
            int code = 0;
            std::string first;
            if (!drawing_path.empty()) {
                auto rep = verify_drawing(g, parse_drawing(slurp(drawing_path)));
                std::cout << "drawing " << rep.summary() << "\n";
                if (!rep.ok()) {
                    code = 1;
                    first = "drawing: " + (rep.witnesses.empty() ? std::string("check failed") : rep.witnesses[0]);
                }
            }
            if (!curve_path.empty()) {
                auto rep = validate_curve(g, parse_curve(slurp(curve_path)));
                std::cout << "curve good=" << yes(rep.good) << " proper=" << yes(rep.proper)
                          << " vertices_on_curve=" << rep.vertex_count_on_curve << "\n";
                for (auto& [e, k] : rep.violations)
                    std::cout << "  edge (" << e.first << "," << e.second << ") met " << k << " times\n";
                if (!rep.good && !code) {
                    code = 1;
                    first = "curve: not good";
                }
            }
            if (code) std::cerr << "error verify: " << first << "\n";
            return code;
        }
    } catch (const Error& e) {
        std::cerr << "error " << e.cls() << ": " << one_line(e.what()) << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error internal: " << one_line(e.what()) << "\n";
        return 1;
    }
    return 0;
}
