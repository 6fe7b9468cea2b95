#include "nefcox/config_io.hpp"

#include <fstream>

namespace nefcox {

namespace {

Vec vec_from_json(const Json& j, std::size_t rank, const std::string& what) {
    if (!j.is_array() || j.size() != rank)
        throw Error(what + ": expected an array of " + std::to_string(rank) + " integers");
    Vec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error(what + ": coordinates must be integers");
        v.emplace_back(x.get<long long>());
    }
    return v;
}

Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(x.convert_to<long long>());
    return a;
}

}  // namespace

SurfaceModel surface_from_json(const Json& j) {
    if (!j.is_object()) throw Error("surface config: expected a JSON object");
    if (!j.contains("rank")) throw Error("surface config: missing 'rank'");
    std::size_t rank = j.at("rank").get<std::size_t>();
    if (rank == 0 || rank > 32) throw Error("surface config: rank out of range");

    std::vector<std::string> labels;
    if (j.contains("basis_labels"))
        labels = j.at("basis_labels").get<std::vector<std::string>>();

    PicardLattice lat;
    if (j.contains("gram")) {
        const Json& gj = j.at("gram");
        if (!gj.is_array() || gj.size() != rank)
            throw Error("surface config: gram must be a rank x rank matrix");
        Mat gram;
        for (const auto& row : gj) gram.push_back(vec_from_json(row, rank, "gram row"));
        if (!j.contains("canonical"))
            throw Error("surface config: 'canonical' is required with an explicit gram");
        Vec k = vec_from_json(j.at("canonical"), rank, "canonical");
        lat = make_lattice(std::move(gram), std::move(k), labels);
    } else {
        lat = blowup_lattice(rank - 1, labels);
        if (j.contains("canonical")) {
            Vec k = vec_from_json(j.at("canonical"), rank, "canonical");
            if (k != lat.canonical.coords)
                throw Error("surface config: canonical does not match the blow-up form");
        }
    }

    SurfaceModel m;
    m.lattice = std::move(lat);
    m.name = j.value("name", std::string("surface"));

    std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "";
    if (kind == "weak_del_pezzo") {
        m.kind = SurfaceKind::WeakDelPezzo;
    } else if (kind == "elliptic") {
        m.kind = SurfaceKind::Elliptic;
        if (!j.contains("index")) throw Error("surface config: elliptic kind needs 'index'");
        m.index = j.at("index").get<int>();
    } else {
        throw Error("surface config: kind must be 'weak_del_pezzo' or 'elliptic'");
    }

    if (!j.contains("minus_two")) throw Error("surface config: missing 'minus_two'");
    for (const auto& row : j.at("minus_two"))
        m.minus_two.push_back(m.lattice.cls(vec_from_json(row, rank, "minus_two entry")));
    if (j.contains("minus_one")) {
        std::vector<DivisorClass> m1;
        for (const auto& row : j.at("minus_one"))
            m1.push_back(m.lattice.cls(vec_from_json(row, rank, "minus_one entry")));
        m.minus_one = std::move(m1);
    }

    auto issues = validate_model(m);
    if (!issues.empty()) {
        std::string msg = "surface config fails validation:";
        for (const auto& i : issues) msg += "\n  - " + i;
        throw Error(msg);
    }
    return m;
}

SurfaceModel load_surface_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw Error("config parse error in " + path + ": " + e.what());
    }
    return surface_from_json(j);
}

Json surface_to_json(const SurfaceModel& m) {
    Json j;
    j["name"] = m.name;
    j["rank"] = m.lattice.rank;
    j["basis_labels"] = m.lattice.basis_labels;
    Json gram = Json::array();
    for (const auto& row : m.lattice.gram) gram.push_back(vec_to_json(row));
    j["gram"] = gram;
    j["canonical"] = vec_to_json(m.lattice.canonical.coords);
    j["kind"] = m.kind == SurfaceKind::Elliptic ? "elliptic" : "weak_del_pezzo";
    if (m.kind == SurfaceKind::Elliptic) j["index"] = m.index;
    Json m2 = Json::array();
    for (const auto& c : m.minus_two) m2.push_back(vec_to_json(c.coords));
    j["minus_two"] = m2;
    if (m.minus_one) {
        Json m1 = Json::array();
        for (const auto& c : *m.minus_one) m1.push_back(vec_to_json(c.coords));
        j["minus_one"] = m1;
    }
    return j;
}

Json class_to_json(const DivisorClass& c) { return vec_to_json(c.coords); }

namespace {

std::string witness_string(const NecessityVerdict& v) {
    std::string s = v.rule;
    if (!v.witness.empty()) {
        s += " [";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            if (i) s += "; ";
            s += to_string(v.witness[i].coords);
        }
        s += "]";
    }
    return s;
}

}  // namespace

Json report_to_json(const Report& r) {
    Json j;
    j["name"] = r.name;
    j["kind"] = r.kind == SurfaceKind::Elliptic ? "elliptic" : "weak_del_pezzo";
    if (r.kind == SurfaceKind::Elliptic) j["index"] = r.index;
    j["rank"] = r.rank;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json e;
        e["class"] = class_to_json(row.cls);
        e["category"] = row.category;
        e["type"] = row.classification ? nef_type_name(row.classification->type)
                                       : std::string(row.category == "negative-curve"
                                                         ? "negative-curve"
                                                         : "ample-extra");
        e["status"] = necessity_name(row.verdict.status);
        e["rule"] = row.verdict.rule;
        if (!row.verdict.witness.empty()) {
            Json w = Json::array();
            for (const auto& c : row.verdict.witness) w.push_back(class_to_json(c));
            e["witness"] = w;
        }
        if (!row.verdict.note.empty()) e["note"] = row.verdict.note;
        rows.push_back(std::move(e));
    }
    j["candidates"] = rows;
    Json s;
    s["necessary_total"] = r.summary.necessary_total;
    s["negative"] = r.summary.negative;
    s["conic_bundles"] = r.summary.conic_bundles;
    s["twisted_cubics"] = r.summary.twisted_cubics;
    s["anticanonical"] = r.summary.anticanonical;
    s["other_necessary"] = r.summary.other_necessary;
    s["undetermined"] = r.summary.undetermined;
    j["summary"] = s;
    return j;
}

std::string report_to_tsv(const Report& r) {
    std::string out = "class\ttype\tstatus\trule\n";
    for (const auto& row : r.rows) {
        out += to_string(row.cls.coords);
        out += "\t";
        out += row.classification ? nef_type_name(row.classification->type)
                                  : (row.category == "negative-curve" ? "negative-curve"
                                                                      : "ample-extra");
        out += "\t";
        out += necessity_name(row.verdict.status);
        out += "\t";
        out += witness_string(row.verdict);
        out += "\n";
    }
    return out;
}

std::string report_to_text(const Report& r) {
    std::string out = "surface: " + r.name + "\n";
    out += "kind: " + std::string(r.kind == SurfaceKind::Elliptic ? "elliptic (index " +
                                      std::to_string(r.index) + ")"
                                                                 : "weak del Pezzo") + "\n";
    out += "candidates:\n";
    for (const auto& row : r.rows) {
        out += "  (" + to_string(row.cls.coords) + ")  ";
        out += row.classification ? nef_type_name(row.classification->type)
                                  : (row.category == "negative-curve" ? "negative-curve"
                                                                      : "ample-extra");
        out += "  " + necessity_name(row.verdict.status);
        out += "  " + witness_string(row.verdict) + "\n";
    }
    out += "summary: " + std::to_string(r.summary.necessary_total) + " necessary (" +
           std::to_string(r.summary.negative) + " negative curves, " +
           std::to_string(r.summary.conic_bundles) + " conic bundles, " +
           std::to_string(r.summary.twisted_cubics) + " twisted cubics, " +
           std::to_string(r.summary.anticanonical) + " anticanonical, " +
           std::to_string(r.summary.other_necessary) + " other), " +
           std::to_string(r.summary.undetermined) + " undetermined\n";
    return out;
}

std::string emit_dot(const Surface& s) {
    const auto& neg = s.negative_curves();
    std::string out = "graph negative_curves {\n";
    for (std::size_t i = 0; i < neg.size(); ++i) {
        Int sq = self_intersection(s.lattice(), neg[i]);
        std::string shape = sq == -2 ? "box, style=filled, fillcolor=black, fontcolor=white"
                                     : "circle";
        out += "  n" + std::to_string(i) + " [label=\"" + to_string(neg[i].coords) +
               "\", shape=" + shape + "];\n";
    }
    for (std::size_t i = 0; i < neg.size(); ++i)
        for (std::size_t j = i + 1; j < neg.size(); ++j) {
            Int p = s.pair(neg[i], neg[j]);
            if (p > 0)
                out += "  n" + std::to_string(i) + " -- n" + std::to_string(j) +
                       " [label=\"" + p.str() + "\"];\n";
        }
    out += "}\n";
    return out;
}

}  // namespace nefcox
