#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "motsq/cells.hpp"
#include "motsq/chart.hpp"
#include "motsq/diff.hpp"
#include "motsq/steenrod.hpp"

using namespace motsq;

namespace {

struct Flags {
    std::string config;
    std::optional<int> max_s, min_p, max_p, min_q, max_q, threads, generator_cap;
    std::optional<std::uint64_t> max_basis, sparse_threshold;
    std::optional<std::string> cache_dir, out;
};

// flag > environment > config file > default
Config build_config(const Flags& f) {
    Config c;
    if (!f.config.empty()) c = Config::load(f.config);
    if (const char* env = std::getenv(kCacheDirEnv); env && *env) c.cache_dir = env;
    if (f.max_s) c.range.max_s = *f.max_s;
    if (f.max_p) c.range.max_p = *f.max_p;
    if (f.min_q) c.range.min_q = *f.min_q;
    if (f.max_q) c.range.max_q = *f.max_q;
    if (f.min_p) c.range.min_p = *f.min_p;
    else if (!c.min_p_explicit) c.range.min_p = std::min(0, c.range.min_q);
    if (f.threads) c.threads = *f.threads;
    if (f.generator_cap) c.generator_cap = *f.generator_cap;
    if (f.max_basis) c.max_basis = *f.max_basis;
    if (f.sparse_threshold) c.sparse_threshold = *f.sparse_threshold;
    if (f.cache_dir) c.cache_dir = *f.cache_dir;
    if (f.out) c.out = *f.out;
    c.validate();
    return c;
}

ExtEngine make_engine(const Config& c) {
    omp_set_num_threads(c.threads);
    set_generator_cap(c.generator_cap);
    return engine_for(c);
}

void emit(const Config& c, const std::string& text) {
    if (c.out.empty() || c.out == "-") std::cout << text;
    else atomic_write(c.out, text);
}

std::string coords_line(const ExtClass& x) {
    std::ostringstream out;
    out << "Ext^" << x.t.to_string() << " coordinates [" << x.coords.to_string() << "]";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motivic Steenrod operations and Adams d2 differentials over R"};
    app.require_subcommand(1);
    Flags f;
    app.add_option("--config", f.config, "key=value configuration file")->check(CLI::ExistingFile);
    app.add_option("--max-s", f.max_s, "largest Adams filtration s");
    app.add_option("--min-p", f.min_p, "smallest topological degree p");
    app.add_option("--max-p", f.max_p, "largest topological degree p");
    app.add_option("--min-q", f.min_q, "smallest weight q");
    app.add_option("--max-q", f.max_q, "largest weight q");
    app.add_option("--cache-dir", f.cache_dir, "directory for cached Ext groups (env " + std::string(kCacheDirEnv) + ")");
    app.add_option("--threads", f.threads, "OpenMP threads");
    app.add_option("--generator-cap", f.generator_cap, "largest index of xi_i and tau_i");
    app.add_option("--max-basis", f.max_basis, "skip tridegrees whose cobar basis exceeds this size");
    app.add_option("--sparse-threshold", f.sparse_threshold, "basis size above which elimination streams sparse rows");
    app.add_option("--out", f.out, "output file (default stdout)");

    auto* resolve_cmd = app.add_subcommand("resolve", "compute Ext in range and write the chart JSON");

    std::string cls;
    int index = 0;
    auto* sq_cmd = app.add_subcommand("sq", "apply sq^i to a named class");
    sq_cmd->add_option("class", cls, "class name (h0, h1, rho, ...) or key s.p.q.i")->required();
    sq_cmd->add_option("i", index, "operation index")->required();

    auto* d2_cmd = app.add_subcommand("d2", "d2 on sq^{i-1} x for a permanent cycle x");
    d2_cmd->add_option("class", cls, "class name")->required();
    d2_cmd->add_option("i", index, "operation index")->required();
    std::vector<std::string> non_permanent{"h4"};
    d2_cmd->add_option("--non-permanent", non_permanent, "classes refused as sources");

    auto* cells_cmd = app.add_subcommand("cells", "cell structures of projective spaces and extended powers");
    cells_cmd->require_subcommand(1);
    int amax = 8, cp = 0, cq = 0, ck = 1;
    bool cjson = false;
    auto* attach_cmd = cells_cmd->add_subcommand("attach", "table of attaching degrees");
    attach_cmd->add_option("--max", amax, "table size")->check(CLI::Range(1, 64));
    auto* rp_cmd = cells_cmd->add_subcommand("rp", "cell diagram of RP^{p,q}");
    rp_cmd->add_option("--p", cp)->required();
    rp_cmd->add_option("--q", cq)->required();
    rp_cmd->add_flag("--json", cjson);
    auto* dsq_cmd = cells_cmd->add_subcommand("dsq", "cells of the extended power of S^{p,q}");
    dsq_cmd->add_option("--p", cp)->required();
    dsq_cmd->add_option("--q", cq)->required();
    dsq_cmd->add_option("--k", ck, "number of cells above the bottom")->check(CLI::NonNegativeNumber);
    dsq_cmd->add_flag("--json", cjson);

    std::string chart_file;
    std::optional<int> weight;
    auto* svg_cmd = app.add_subcommand("chart-svg", "render a chart JSON file as SVG");
    svg_cmd->add_option("chart", chart_file, "chart JSON")->required();
    svg_cmd->add_option("--weight", weight, "only classes of this weight q");

    CLI11_PARSE(app, argc, argv);

    try {
        Config config = build_config(f);
        if (*resolve_cmd) {
            ExtEngine engine = make_engine(config);
            Chart chart = resolve(engine, config);
            emit(config, chart.dump());
            std::size_t skipped = 0;
            for (const auto& g : chart.groups) skipped += g.skipped;
            if (skipped) std::cerr << "note: " << skipped << " tridegrees exceeded max_basis and were skipped\n";
        } else if (*sq_cmd) {
            ExtEngine engine = make_engine(config);
            ExtClass x = engine.lookup(cls);
            ExtClass y = sq(engine, index, x);
            std::string name = y.coords.size() ? engine.describe(y) : "0";
            std::ostringstream out;
            out << "sq^" << index << "(" << cls << ") = " << name << "\n" << coords_line(y) << "\n";
            emit(config, out.str());
        } else if (*d2_cmd) {
            ExtEngine engine = make_engine(config);
            PermanenceRegistry reg{{non_permanent.begin(), non_permanent.end()}};
            DifferentialStatement st = d2_on_sq(engine, cls, index, reg);
            std::ostringstream out;
            out << st.to_string() << "\n";
            if (st.value) out << coords_line(*st.value) << "\n";
            emit(config, out.str());
        } else if (*cells_cmd) {
            std::string text;
            auto diagram_json = [](const CellDiagram& d) {
                nlohmann::json cells = nlohmann::json::array();
                for (const auto& c : d.cells) {
                    nlohmann::json e{{"dim", {c.dim.p, c.dim.q}}};
                    if (c.projection) {
                        e["projection"] = c.projection->to_string();
                        e["index"] = {c.index->first, c.index->second};
                        e["parities"] = {c.index->first % 2, c.index->second % 2};
                        e["mod2"] = hurewicz_mod2(*c.projection);
                    }
                    cells.push_back(e);
                }
                return nlohmann::json{{"source", d.source}, {"cells", cells}}.dump(2) + "\n";
            };
            if (*attach_cmd) {
                text = attach_table(amax);
            } else if (*rp_cmd) {
                CellDiagram d = rp_diagram(cp, cq);
                if (cjson) {
                    text = diagram_json(d);
                } else {
                    text = d.to_table();
                    text += "underlying " + rp_underlying(cp, cq).to_string() + ", fixed points " + rp_fixed_string(cp, cq) + "\n";
                }
            } else {
                CellDiagram d = extended_power_diagram(cp, cq, ck);
                text = cjson ? diagram_json(d) : d.to_table();
            }
            emit(config, text);
        } else if (*svg_cmd) {
            Chart chart = Chart::load(chart_file);
            emit(config, chart_svg(chart, weight));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
