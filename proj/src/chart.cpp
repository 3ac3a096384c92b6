#include "motsq/chart.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "motsq/steenrod.hpp"

namespace motsq {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        long x = std::stol(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": not an integer: '" + v + "'");
    }
}

}  // namespace

void Config::set(const std::string& key, const std::string& value) {
    if (key == "max_s") range.max_s = int(parse_int(key, value));
    else if (key == "min_p") {
        range.min_p = int(parse_int(key, value));
        min_p_explicit = true;
    }
    else if (key == "max_p") range.max_p = int(parse_int(key, value));
    else if (key == "min_q") range.min_q = int(parse_int(key, value));
    else if (key == "max_q") range.max_q = int(parse_int(key, value));
    else if (key == "generator_cap") generator_cap = int(parse_int(key, value));
    else if (key == "cache_dir") cache_dir = value;
    else if (key == "threads") threads = int(parse_int(key, value));
    else if (key == "out") out = value;
    else if (key == "max_basis") max_basis = std::uint64_t(parse_int(key, value));
    else if (key == "sparse_threshold") sparse_threshold = std::uint64_t(parse_int(key, value));
    else throw ConfigError("unknown config key: " + key);
}

void Config::validate() const {
    try {
        range.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid range: ") + e.what());
    }
    if (threads < 1) throw ConfigError("threads must be at least 1");
    if (generator_cap < 1 || generator_cap > 6) throw ConfigError("generator_cap must be between 1 and 6");
    if (max_basis < 1) throw ConfigError("max_basis must be positive");
}

Config Config::parse(const std::string& text, Config base) {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(n) + ": expected key=value");
        base.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return base;
}

Config Config::load(const std::string& path, Config base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), std::move(base));
}

Config Config::parse(const std::string& text) { return parse(text, Config{}); }
Config Config::load(const std::string& path) { return load(path, Config{}); }

std::string Config::to_string() const {
    std::ostringstream os;
    os << "max_s=" << range.max_s << "\nmin_p=" << range.min_p << "\nmax_p=" << range.max_p << "\nmin_q="
        << range.min_q << "\nmax_q=" << range.max_q << "\ngenerator_cap=" << generator_cap << "\ncache_dir=" << cache_dir
        << "\nthreads=" << threads << "\nout=" << out << "\nmax_basis=" << max_basis
       << "\nsparse_threshold=" << sparse_threshold << "\n";
    return os.str();
}

std::string class_key(TriDegree t, std::size_t i) { return t.to_string() + "." + std::to_string(i); }

std::string class_keys(const ExtClass& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (auto i : x.coords.ones()) out += (out.empty() ? "" : " + ") + class_key(x.t, i);
    return out;
}

namespace {

nlohmann::json tri_json(TriDegree t) { return t.to_string(); }
TriDegree tri_from(const nlohmann::json& j) { return TriDegree::parse(j.get<std::string>()); }

}  // namespace

nlohmann::json Chart::to_json() const {
    using nlohmann::json;
    json cfg{{"max_s", config.range.max_s}, {"min_p", config.range.min_p},   {"max_p", config.range.max_p},
             {"min_q", config.range.min_q}, {"max_q", config.range.max_q},   {"generator_cap", config.generator_cap},
             {"max_basis", config.max_basis}};
    json groups_j = json::array();
    for (const auto& g : groups) {
        json e{{"tridegree", tri_json(g.t)}, {"dim", g.dim}, {"basis_size", g.basis_size}};
        if (g.skipped) {
            e["skipped"] = true;
            e["reason"] = g.reason;
        }
        groups_j.push_back(e);
    }
    json classes_j = json::object();
    for (const auto& [k, alias] : classes) classes_j[k] = alias.empty() ? json::object() : json{{"name", alias}};
    json products_j = json::array();
    for (const auto& p : products)
        products_j.push_back({{"left", p.left}, {"right", p.right}, {"tridegree", tri_json(p.t)}, {"result", p.result}});
    json ops_j = json::array();
    for (const auto& o : operations)
        ops_j.push_back({{"op", o.op}, {"input", o.input}, {"tridegree", tri_json(o.t)}, {"result", o.result}});
    json diffs_j = json::array();
    for (const auto& d : differentials)
        diffs_j.push_back({{"statement", d.statement},
                           {"source", d.source},
                           {"source_tridegree", tri_json(d.source_t)},
                           {"coefficient", d.coefficient},
                           {"target", d.target},
                           {"target_tridegree", tri_json(d.target_t)},
                           {"verdict", d.verdict},
                           {"value", d.value},
                           {"facts", d.facts},
                           {"assumptions", d.assumptions}});
    return json{{"schema_version", schema_version}, {"config", cfg},          {"groups", groups_j},
                {"classes", classes_j},            {"names", names},          {"products", products_j},
                {"operations", ops_j},             {"differentials", diffs_j}};
}

Chart Chart::from_json(const nlohmann::json& j) {
    Chart c;
    try {
        c.schema_version = j.at("schema_version").get<int>();
        if (c.schema_version != kChartSchemaVersion)
            throw std::runtime_error("unsupported chart schema_version " + std::to_string(c.schema_version));
        const auto& cfg = j.at("config");
        c.config.range = Range{cfg.at("max_s").get<int>(), cfg.at("min_p").get<int>(), cfg.at("max_p").get<int>(),
                               cfg.at("min_q").get<int>(), cfg.at("max_q").get<int>()};
        c.config.generator_cap = cfg.at("generator_cap").get<int>();
        c.config.max_basis = cfg.at("max_basis").get<std::uint64_t>();
        for (const auto& g : j.at("groups")) {
            ChartGroup e{tri_from(g.at("tridegree")), g.at("dim").get<std::size_t>(), g.at("basis_size").get<std::size_t>(),
                         g.value("skipped", false), g.value("reason", std::string())};
            c.groups.push_back(e);
        }
        for (const auto& [k, v] : j.at("classes").items()) c.classes[k] = v.value("name", std::string());
        c.names = j.at("names").get<std::map<std::string, std::string>>();
        for (const auto& p : j.at("products"))
            c.products.push_back({p.at("left"), p.at("right"), tri_from(p.at("tridegree")), p.at("result")});
        for (const auto& o : j.at("operations"))
            c.operations.push_back({o.at("op"), o.at("input"), tri_from(o.at("tridegree")), o.at("result")});
        for (const auto& d : j.at("differentials"))
            c.differentials.push_back({d.at("statement"), d.at("source"), tri_from(d.at("source_tridegree")),
                                       d.at("coefficient"), d.at("target"), tri_from(d.at("target_tridegree")),
                                       d.at("verdict"), d.at("value"), d.at("facts").get<std::vector<std::string>>(),
                                       d.at("assumptions").get<std::vector<std::string>>()});
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed chart: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("malformed chart: ") + e.what());
    }
    c.validate();
    return c;
}

std::string Chart::dump() const { return to_json().dump(2) + "\n"; }

Chart Chart::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read chart " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed chart " + path + ": " + e.what());
    }
    return from_json(j);
}

void Chart::validate() const {
    auto check = [&](const std::string& expr, const std::string& where) {
        if (expr == "0") return;
        std::size_t pos = 0;
        while (pos <= expr.size()) {
            auto next = expr.find(" + ", pos);
            std::string k = expr.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            if (!classes.count(k) && !names.count(k))
                throw std::runtime_error("chart " + where + " refers to unknown class " + k);
            if (next == std::string::npos) break;
            pos = next + 3;
        }
    };
    for (const auto& [n, e] : names) check(e, "name " + n);
    for (const auto& p : products) {
        check(p.left, "product");
        check(p.right, "product");
        check(p.result, "product");
    }
    for (const auto& o : operations) {
        check(o.input, "operation");
        check(o.result, "operation");
    }
    for (const auto& d : differentials)
        if (d.verdict != "unevaluated") check(d.value, "differential");
}

ExtEngine engine_for(const Config& config, BasisOrder order) {
    return ExtEngine(config.range, {config.cache_dir, order, config.max_basis, config.sparse_threshold});
}

Chart resolve(ExtEngine& engine, const Config& config, const ResolveOptions& options) {
    Chart chart;
    chart.config = config;
    const Range& r = engine.range();

    std::vector<TriDegree> todo;
    for (int s = 0; s <= r.max_s; ++s)
        for (int p = r.min_p; p <= r.max_p; ++p)
            for (int q = r.min_q; q <= r.max_q; ++q)
                if (cobar_dimension({s, p, q}) > 0) todo.push_back({s, p, q});
    std::vector<ChartGroup> results(todo.size());

#pragma omp parallel for schedule(dynamic)
    for (std::size_t n = 0; n < todo.size(); ++n) {
        ChartGroup& g = results[n];
        g.t = todo[n];
        g.basis_size = cobar_dimension(todo[n]);
        try {
            g.dim = engine.group(todo[n]).dim();
        } catch (const TooLarge& e) {
            g.skipped = true;
            g.reason = e.what();
        }
    }
    for (const auto& g : results) {
        if (g.dim == 0 && !g.skipped) continue;
        chart.groups.push_back(g);
        for (std::size_t i = 0; i < g.dim; ++i) chart.classes[class_key(g.t, i)] = "";
    }

    auto computed = [&](TriDegree t) {
        if (!r.contains(t)) return false;
        try {
            engine.group(t);
            return true;
        } catch (const TooLarge&) {
            return false;
        }
    };

    auto gens = engine.name_generators();
    for (const auto& [name, x] : gens) {
        std::string keys = class_keys(x);
        chart.names[name] = keys;
        if (x.coords.count() == 1) chart.classes[keys] = name;
    }

    std::vector<std::string> order;
    for (const auto& n : generator_names(6))
        if (gens.count(n)) order.push_back(n);
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a; b < order.size(); ++b) {
            const ExtClass &x = gens.at(order[a]), &y = gens.at(order[b]);
            TriDegree t = x.t + y.t;
            if (order[a] == "1" || !computed(t)) continue;
            chart.products.push_back({order[a], order[b], t, class_keys(engine.product(x, y))});
        }

    PhiMap phi;
    for (const auto& n : order) {
        const ExtClass& x = gens.at(n);
        for (int i = 0; i <= x.t.s; ++i) {
            TriDegree t = sq_target(i, x.t);
            if (!computed(t)) continue;
            chart.operations.push_back({"sq^" + std::to_string(i), n, t, class_keys(sq(engine, i, x, &phi))});
        }
    }

    for (const auto& n : options.d2_sources) {
        if (!gens.count(n) || !options.permanence.is_permanent(n)) continue;
        const ExtClass& x = gens.at(n);
        TriDegree src = sq_target(0, x.t), tgt{src.s + 2, src.p + 1, src.q};
        if (!computed(src) || !computed(tgt) || !computed(sq_target(1, x.t))) continue;
        DifferentialStatement st = d2_on_sq(engine, n, 1, options.permanence);
        ChartDifferential d{st.to_string(), st.source, st.source_t, st.coeff.to_string(), st.square, st.target_t,
                            st.evaluated ? (st.target_zero() ? "zero" : "nonzero") : "unevaluated",
                            st.value ? class_keys(*st.value) : "", st.facts, st.assumptions};
        chart.differentials.push_back(d);
    }
    chart.validate();
    return chart;
}

namespace {

std::string color_for(int q) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    return palette[((q % 8) + 8) % 8];
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

}  // namespace

std::string chart_svg(const Chart& chart, std::optional<int> weight) {
    const int cell = 40, margin = 40;
    int max_stem = 0, min_stem = 0, max_s = 0;
    for (const auto& g : chart.groups) {
        max_stem = std::max(max_stem, g.t.p - g.t.s);
        min_stem = std::min(min_stem, g.t.p - g.t.s);
        max_s = std::max(max_s, g.t.s);
    }
    int width = (max_stem - min_stem + 1) * cell + 2 * margin, height = (max_s + 1) * cell + 2 * margin;
    auto X = [&](int stem) { return margin + (stem - min_stem) * cell + cell / 2; };
    auto Y = [&](int s) { return height - margin - s * cell - cell / 2; };

    // Position of each class inside its (stem, s) box; classes of one box spread horizontally.
    std::map<std::pair<int, int>, int> count, seen;
    std::vector<std::pair<std::string, TriDegree>> dots;
    for (const auto& g : chart.groups) {
        if (weight && g.t.q != *weight) continue;
        for (std::size_t i = 0; i < g.dim; ++i) {
            dots.push_back({class_key(g.t, i), g.t});
            ++count[{g.t.p - g.t.s, g.t.s}];
        }
    }
    std::map<std::string, std::pair<double, double>> where;
    std::ostringstream out;
    out << std::fixed << std::setprecision(1);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
        << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<g stroke=\"#ddd\" stroke-width=\"1\">\n";
    for (int stem = min_stem; stem <= max_stem + 1; ++stem) {
        int x = margin + (stem - min_stem) * cell;
        out << "<line x1=\"" << x << "\" y1=\"" << margin << "\" x2=\"" << x << "\" y2=\"" << height - margin << "\"/>\n";
    }
    for (int s = 0; s <= max_s + 1; ++s) {
        int y = height - margin - s * cell;
        out << "<line x1=\"" << margin << "\" y1=\"" << y << "\" x2=\"" << width - margin << "\" y2=\"" << y << "\"/>\n";
    }
    out << "</g>\n<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#444\">\n";
    for (int stem = min_stem; stem <= max_stem; ++stem)
        out << "<text x=\"" << X(stem) << "\" y=\"" << height - margin / 2 << "\" text-anchor=\"middle\">" << stem
            << "</text>\n";
    for (int s = 0; s <= max_s; ++s)
        out << "<text x=\"" << margin / 2 << "\" y=\"" << Y(s) + 3 << "\" text-anchor=\"middle\">" << s << "</text>\n";
    out << "</g>\n<g>\n";
    for (const auto& [key, t] : dots) {
        std::pair<int, int> box{t.p - t.s, t.s};
        int n = count[box], k = seen[box]++;
        double x = X(box.first) + (n > 1 ? (k - (n - 1) / 2.0) * (cell * 0.7 / n) : 0.0), y = Y(box.second);
        where[key] = {x, y};
        std::string name = chart.classes.count(key) ? chart.classes.at(key) : "";
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"" << color_for(t.q) << "\"><title>"
            << xml_escape(key + (name.empty() ? "" : " " + name)) << " q=" << t.q << "</title></circle>\n";
        if (!name.empty())
            out << "<text x=\"" << x + 4 << "\" y=\"" << y - 4 << "\" font-family=\"sans-serif\" font-size=\"9\">"
                << xml_escape(name) << "</text>\n";
    }
    out << "</g>\n<g stroke=\"#000\" stroke-width=\"1.2\" fill=\"none\">\n";
    for (const auto& d : chart.differentials) {
        if (weight && d.source_t.q != *weight) continue;
        double x1 = X(d.source_t.p - d.source_t.s), y1 = Y(d.source_t.s);
        double x2 = X(d.target_t.p - d.target_t.s), y2 = Y(d.target_t.s);
        std::string cls = d.verdict == "nonzero" ? "d2" : "d2 zero";
        out << "<line class=\"" << cls << "\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\"" << (d.verdict == "nonzero" ? "" : " stroke-dasharray=\"3,3\"") << "><title>"
            << xml_escape(d.statement.substr(0, d.statement.find('\n'))) << "</title></line>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace motsq
