#include <CLI11.hpp>

#include <iostream>

#include "nefcox/config_io.hpp"
#include "nefcox/presets.hpp"

using namespace nefcox;

namespace {

struct CommonOpts {
    std::string config;
    std::string preset_name;
    std::string format = "text";
    int jobs = 0;
    int pool_depth = 2;
    std::string seed_order = "canonical";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_surface = true) {
    if (needs_surface) {
        cmd->add_option("config", o.config, "surface config JSON file");
        cmd->add_option("--preset", o.preset_name, "built-in surface name");
    }
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "tsv", "dot"}));
    cmd->add_option("--jobs", o.jobs, "worker threads (0 = default, 1 = serial)");
    cmd->add_option("--pool-depth", o.pool_depth,
                    "max Hilbert-basis summands in elimination pools")
        ->check(CLI::Range(1, 3));
    cmd->add_option("--seed-order", o.seed_order, "candidate ordering (fixed)")
        ->check(CLI::IsMember({"canonical"}));
}

Surface load_surface(const CommonOpts& o) {
    if (!o.preset_name.empty() && !o.config.empty())
        throw Error("give either a config file or --preset, not both");
    SurfaceModel m;
    if (!o.preset_name.empty()) {
        m = preset(o.preset_name);
    } else if (!o.config.empty()) {
        m = load_surface_config(o.config);
    } else {
        throw Error("a config file or --preset is required");
    }
    auto issues = validate_model(m);
    if (!issues.empty()) {
        std::string msg = "model validation failed:";
        for (const auto& i : issues) msg += "\n  - " + i;
        throw Error(msg);
    }
    return Surface(std::move(m), o.jobs);
}

Vec parse_class_arg(const std::string& text, std::size_t rank) {
    Vec v;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw Error("empty coordinate in --class");
            v.emplace_back(Int(cur));
            cur.clear();
        } else if (ch == ' ') {
            continue;
        } else {
            cur += ch;
        }
    }
    if (v.size() != rank)
        throw Error("--class needs " + std::to_string(rank) + " comma-separated integers");
    return v;
}

int run_curves(const CommonOpts& o) {
    Surface s = load_surface(o);
    const auto& neg = s.negative_curves();
    if (o.format == "dot") {
        std::cout << emit_dot(s);
        return 0;
    }
    if (o.format == "json") {
        Json j;
        j["name"] = s.name();
        Json arr = Json::array();
        for (const auto& c : neg) {
            Json e;
            e["class"] = class_to_json(c);
            e["square"] = self_intersection(s.lattice(), c).convert_to<long long>();
            arr.push_back(std::move(e));
        }
        j["negative_curves"] = arr;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& c : neg) {
        Int sq = self_intersection(s.lattice(), c);
        if (o.format == "tsv")
            std::cout << to_string(c.coords) << "\t" << sq << "\n";
        else
            std::cout << "(" << to_string(c.coords) << ")  square " << sq << "\n";
    }
    if (o.format == "text") std::cout << neg.size() << " negative curves\n";
    return 0;
}

int run_nef(const CommonOpts& o) {
    Surface s = load_surface(o);
    if (o.format == "dot") throw Error("dot output is only available for `curves`");
    const auto& hb = s.nef_hilbert_basis();
    if (o.format == "json") {
        Json j;
        j["name"] = s.name();
        Json arr = Json::array();
        for (const Vec& h : hb) {
            DivisorClass c = s.lattice().cls(h);
            Json e;
            e["class"] = class_to_json(c);
            e["type"] = nef_type_name(classify_nef(s, c).type);
            arr.push_back(std::move(e));
        }
        j["nef_hilbert_basis"] = arr;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const Vec& h : hb) {
        DivisorClass c = s.lattice().cls(h);
        auto cls = classify_nef(s, c);
        if (o.format == "tsv")
            std::cout << to_string(h) << "\t" << nef_type_name(cls.type) << "\n";
        else
            std::cout << "(" << to_string(h) << ")  " << nef_type_name(cls.type) << "\n";
    }
    if (o.format == "text")
        std::cout << hb.size() << " Hilbert basis elements of the nef cone\n";
    return 0;
}

int run_cohomology(const CommonOpts& o, const std::string& cls_text) {
    Surface s = load_surface(o);
    if (o.format == "dot") throw Error("dot output is only available for `curves`");
    DivisorClass d = s.lattice().cls(parse_class_arg(cls_text, s.lattice().rank));
    CohomologyVector c = cohomology(s, d);
    if (o.format == "json") {
        Json j;
        j["class"] = class_to_json(d);
        j["h0"] = c.h0.convert_to<long long>();
        j["h1"] = c.h1.convert_to<long long>();
        j["h2"] = c.h2.convert_to<long long>();
        j["chi"] = c.chi.convert_to<long long>();
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "tsv") {
        std::cout << to_string(d.coords) << "\t" << c.h0 << "\t" << c.h1 << "\t" << c.h2
                  << "\t" << c.chi << "\n";
    } else {
        std::cout << "h0=" << c.h0 << " h1=" << c.h1 << " h2=" << c.h2 << " chi=" << c.chi
                  << "\n";
    }
    return 0;
}

int run_analyze(const CommonOpts& o) {
    Surface s = load_surface(o);
    if (o.format == "dot") throw Error("dot output is only available for `curves`");
    KoszulOptions kopt;
    kopt.pool_depth = o.pool_depth;
    Report r = analyze(s, kopt);
    if (o.format == "json")
        std::cout << report_to_json(r).dump(2) << "\n";
    else if (o.format == "tsv")
        std::cout << report_to_tsv(r);
    else
        std::cout << report_to_text(r);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact nef-cone and Cox-ring degree analysis for rational surfaces "
                 "with nef anticanonical class"};
    app.require_subcommand(1);

    CommonOpts curves_o, nef_o, coh_o, an_o;
    std::string coh_class;

    auto* cmd_presets = app.add_subcommand("presets", "list built-in surfaces");
    auto* cmd_curves = app.add_subcommand("curves", "negative curves of the surface");
    add_common(cmd_curves, curves_o);
    auto* cmd_nef =
        app.add_subcommand("nef", "Hilbert basis of the nef cone with classifications");
    add_common(cmd_nef, nef_o);
    auto* cmd_coh = app.add_subcommand("cohomology", "cohomology of a divisor class");
    add_common(cmd_coh, coh_o);
    cmd_coh->add_option("--class", coh_class, "comma-separated coordinates")->required();
    auto* cmd_an = app.add_subcommand("analyze", "full necessary-degree report");
    add_common(cmd_an, an_o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_presets->parsed()) {
            for (const auto& n : preset_names()) std::cout << n << "\n";
            return 0;
        }
        if (cmd_curves->parsed()) return run_curves(curves_o);
        if (cmd_nef->parsed()) return run_nef(nef_o);
        if (cmd_coh->parsed()) return run_cohomology(coh_o, coh_class);
        if (cmd_an->parsed()) return run_analyze(an_o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
