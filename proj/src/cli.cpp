#include "twodist/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "twodist/configurations.hpp"
#include "twodist/conflict.hpp"
#include "twodist/discharging.hpp"
#include "twodist/error.hpp"
#include "twodist/exact_solver.hpp"
#include "twodist/generators.hpp"
#include "twodist/json_io.hpp"
#include "twodist/reducer.hpp"

namespace twodist {

namespace {

struct Options {
    std::string in = "-";
    std::string coloring;
    std::string name;
    std::string out_dir;
    std::string dump = "falsification-dumps";
    std::string format = "json";
    std::uint64_t seed = 1;
    std::size_t n = 100;
    std::size_t count = 1;
    std::uint64_t budget = kDefaultNodeBudget;
    std::size_t base = 16;
    bool trace = false;
    bool corpus = true;
};

class Runner {
public:
    Runner(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
        : o_(o), in_(in), out_(out), err_(err) {}

    bool text() const { return o_.format == "text"; }

    std::string read_input(const std::string& path) {
        if (path == "-") {
            std::stringstream ss;
            ss << in_.rdbuf();
            return ss.str();
        }
        std::ifstream f(path);
        if (!f) throw Error(ErrorCode::ParseError, "cannot read " + path);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    PlaneGraph load() { return from_rotation_text(read_input(o_.in)); }

    void dump(const std::string& tag, const std::string& rotation_text) {
        std::error_code ec;
        std::filesystem::create_directories(o_.dump, ec);
        const auto path = std::filesystem::path(o_.dump) / (tag + ".rot");
        std::ofstream f(path);
        f << rotation_text;
        err_ << "falsification artifact written to " << path.string() << "\n";
    }

    int validate() {
        const PlaneGraph g = load();
        if (o_.coloring.empty()) {
            if (text()) {
                out_ << "ok: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, " << g.face_count()
                     << " faces, max degree " << g.max_degree() << "\n";
            } else {
                out_ << Json{{"valid", true},
                             {"n", g.vertex_count()},
                             {"m", g.edge_count()},
                             {"faces", g.face_count()},
                             {"max_degree", g.max_degree()}}
                            .dump()
                     << "\n";
            }
            return kExitOk;
        }
        Json j;
        try {
            j = Json::parse(read_input(o_.coloring));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
        const Coloring c = coloring_from_json(j);
        const ConflictReport r = validate_coloring(g, c);
        if (text()) {
            out_ << (r.valid ? "valid" : "invalid") << ": " << r.violations.size() << " conflicts, "
                 << r.uncolored.size() << " uncolored, " << r.out_of_palette.size() << " out of palette\n";
        } else {
            out_ << to_json(r).dump() << "\n";
        }
        return r.valid ? kExitOk : kExitCheckFailed;
    }

    int color() {
        const PlaneGraph g = load();
        Color16Options opt;
        opt.base_size = o_.base;
        Color16Result r;
        try {
            r = color16(g, opt);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NoAvailableColor || e.code() == ErrorCode::AnomalyNoConfiguration) {
                dump("color-input", to_rotation_text(g));
                err_ << e.what() << "\n";
                return kExitFalsified;
            }
            throw;
        }
        if (o_.trace)
            for (const auto& t : r.traces) out_ << to_json(t).dump() << "\n";
        const ConflictReport check = validate_coloring(g, r.coloring);
        if (text()) {
            for (VertexId v = 0; v < g.vertex_count(); ++v) out_ << v << ": " << r.coloring.colors[v] << "\n";
        } else {
            out_ << to_json(r.coloring).dump() << "\n";
        }
        err_ << r.traces.size() << " reductions, " << r.coloring.colors_used() << " colors used\n";
        for (std::size_t i = 0; i < r.anomalies.size(); ++i) dump("anomaly-" + std::to_string(i), r.anomalies[i].graph);
        if (!r.anomalies.empty()) return kExitFalsified;
        return check.valid ? kExitOk : kExitCheckFailed;
    }

    int chi2() {
        const PlaneGraph g = load();
        const Chi2Result r = chi2_exact(g, SearchBudget{o_.budget});
        if (text()) {
            out_ << (r.value ? std::to_string(*r.value) : "unknown") << "\n";
        } else {
            Json j{{"chi2", r.value ? Json(*r.value) : Json("unknown")}, {"nodes", r.nodes}};
            if (r.witness) j["witness"] = to_json(*r.witness);
            out_ << j.dump() << "\n";
        }
        return kExitOk;
    }

    int detect_cmd() {
        const PlaneGraph g = load();
        const auto m = detect(g);
        if (text()) {
            out_ << (m ? m->rule->id + " deleting " + std::to_string(m->deleted_vertex()) : "none") << "\n";
        } else {
            out_ << (m ? to_json(*m) : Json(nullptr)).dump() << "\n";
        }
        if (!m) {
            dump("detect-none", to_rotation_text(g));
            return kExitFalsified;
        }
        return kExitOk;
    }

    int discharge() {
        const PlaneGraph g = load();
        const AuditReport r = audit(g);
        if (text()) {
            out_ << "total " << r.final_total.reduced() << ", " << r.negatives.size() << " negative, "
                 << r.transfer_count << " transfers, configuration "
                 << (r.configuration ? r.configuration->rule->id : std::string("none"))
                 << (r.falsification ? ", FALSIFIED" : "") << "\n";
        } else {
            out_ << to_json(r).dump() << "\n";
        }
        if (r.falsification) {
            dump("discharge-falsified", to_rotation_text(g));
            return kExitFalsified;
        }
        return r.conserved ? kExitOk : kExitCheckFailed;
    }

    int gen() {
        std::vector<std::pair<std::string, PlaneGraph>> graphs;
        if (!o_.name.empty()) {
            graphs.emplace_back(o_.name, named(o_.name));
        } else {
            for (std::size_t i = 0; i < o_.count; ++i) {
                const std::uint64_t seed = o_.seed + i;
                graphs.emplace_back("random-n" + std::to_string(o_.n) + "-s" + std::to_string(seed),
                                    random_plane(o_.n, seed));
            }
        }
        for (const auto& [label, g] : graphs) {
            if (o_.out_dir.empty()) {
                if (text()) out_ << "# " << label << "\n" << to_rotation_text(g);
                else out_ << Json{{"name", label}, {"graph", graph_to_json(g)}}.dump() << "\n";
                continue;
            }
            std::filesystem::create_directories(o_.out_dir);
            const auto path = std::filesystem::path(o_.out_dir) / (label + ".rot");
            std::ofstream f(path);
            if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
            f << to_rotation_text(g);
            err_ << "wrote " << path.string() << "\n";
        }
        return kExitOk;
    }

    // Named corpus (optional) followed by `count` random graphs whose sizes
    // cycle through 3..n.
    int batch() {
        std::vector<std::pair<std::string, PlaneGraph>> graphs;
        if (o_.corpus)
            for (auto name : named_graphs()) graphs.emplace_back(std::string(name), named(name));
        const std::size_t top = std::max<std::size_t>(o_.n, 3);
        for (std::size_t i = 0; i < o_.count; ++i) {
            const std::size_t n = 3 + i % (top - 2);
            const std::uint64_t seed = o_.seed + i;
            graphs.emplace_back("random-n" + std::to_string(n) + "-s" + std::to_string(seed), random_plane(n, seed));
        }

        std::size_t reductions = 0, anomalies = 0, failures = 0, falsified = 0;
        int max_colors = 0;
        for (std::size_t idx = 0; idx < graphs.size(); ++idx) {
            const auto& [label, g] = graphs[idx];
            Json line{{"index", idx}, {"graph", label}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
            bool ok = true;
            try {
                Color16Options opt;
                opt.base_size = o_.base;
                const Color16Result r = color16(g, opt);
                const bool valid = validate_coloring(g, r.coloring).valid;
                const AuditReport a = audit(g);
                reductions += r.traces.size();
                anomalies += r.anomalies.size();
                max_colors = std::max(max_colors, r.coloring.colors_used());
                for (std::size_t i = 0; i < r.anomalies.size(); ++i)
                    dump(label + "-anomaly-" + std::to_string(i), r.anomalies[i].graph);
                if (a.falsification) {
                    ++falsified;
                    dump(label + "-discharge", to_rotation_text(g));
                }
                // K1 has nothing to reduce; every larger graph must expose a configuration.
                const bool reducible = a.configuration.has_value() || g.vertex_count() == 1;
                ok = valid && a.conserved && reducible && r.anomalies.empty();
                line["valid"] = valid;
                line["colors_used"] = r.coloring.colors_used();
                line["reductions"] = r.traces.size();
                line["anomalies"] = r.anomalies.size();
                line["conservation"] = a.final_total.reduced();
                line["configuration"] = a.configuration ? Json(a.configuration->rule->id) : Json(nullptr);
                line["falsification"] = a.falsification;
            } catch (const Error& e) {
                ok = false;
                if (e.code() == ErrorCode::NoAvailableColor || e.code() == ErrorCode::AnomalyNoConfiguration) {
                    ++falsified;
                    dump(label + "-input", to_rotation_text(g));
                }
                line["error"] = e.what();
            }
            line["ok"] = ok;
            if (!ok) ++failures;
            out_ << line.dump() << "\n";
        }
        out_ << Json{{"summary", true},
                     {"graphs", graphs.size()},
                     {"reductions", reductions},
                     {"anomalies", anomalies},
                     {"falsifications", falsified},
                     {"failures", failures},
                     {"max_colors", max_colors}}
                    .dump()
             << "\n";
        if (anomalies > 0 || falsified > 0) return kExitFalsified;
        return failures == 0 ? kExitOk : kExitCheckFailed;
    }

private:
    static ConflictReport validate_coloring(const PlaneGraph& g, const Coloring& c) { return twodist::validate(g, c); }

    const Options& o_;
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"2-distance coloring of plane graphs with maximum degree 5", "twodist"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_in = [&](CLI::App* c) { c->add_option("--in", o.in, "rotation file, - for stdin")->capture_default_str(); };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    };
    auto add_dump = [&](CLI::App* c) {
        c->add_option("--dump", o.dump, "directory for falsification artifacts")->capture_default_str();
    };

    auto* validate = app.add_subcommand("validate", "check a rotation file, and optionally a coloring of it");
    add_in(validate);
    add_format(validate);
    validate->add_option("--coloring", o.coloring, "coloring JSON to check");

    auto* color = app.add_subcommand("color", "color with at most 16 colors by reductions");
    add_in(color);
    add_format(color);
    add_dump(color);
    color->add_flag("--trace", o.trace, "print one JSON line per reduction before the coloring");
    color->add_option("--base", o.base, "color graphs this small directly (1..16)")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();

    auto* chi2 = app.add_subcommand("chi2", "exact 2-distance chromatic number");
    add_in(chi2);
    add_format(chi2);
    chi2->add_option("--budget", o.budget, "search node limit per palette size")->capture_default_str();

    auto* det = app.add_subcommand("detect", "first reducible configuration");
    add_in(det);
    add_format(det);
    add_dump(det);

    auto* dis = app.add_subcommand("discharge", "discharging audit");
    add_in(dis);
    add_format(dis);
    add_dump(dis);

    auto* gen = app.add_subcommand("gen", "write generated graphs in rotation format");
    add_format(gen);
    gen->add_option("--n", o.n, "target vertex count")->check(CLI::Range(3, 1'000'000))->capture_default_str();
    gen->add_option("--seed", o.seed, "first seed")->capture_default_str();
    gen->add_option("--count", o.count, "number of graphs (seeds seed, seed+1, ...)")->capture_default_str();
    gen->add_option("--name", o.name, "emit a named graph instead");
    gen->add_option("--out", o.out_dir, "directory for .rot files (default: stdout)");

    auto* batch = app.add_subcommand("batch", "color and audit the named corpus plus random graphs");
    add_dump(batch);
    batch->add_option("--n", o.n, "largest random graph size")->check(CLI::Range(3, 1'000'000))->capture_default_str();
    batch->add_option("--seed", o.seed, "first seed")->capture_default_str();
    batch->add_option("--count", o.count, "number of random graphs")->capture_default_str();
    batch->add_option("--base", o.base, "color graphs this small directly (1..16)")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
    batch->add_flag("!--no-corpus", o.corpus, "skip the named corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Runner run(o, in, out, err);
    try {
        if (*validate) return run.validate();
        if (*color) return run.color();
        if (*chi2) return run.chi2();
        if (*det) return run.detect_cmd();
        if (*dis) return run.discharge();
        if (*gen) return run.gen();
        if (*batch) return run.batch();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace twodist
