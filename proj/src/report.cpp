#include "biqlat/report.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "biqlat/field.hpp"

namespace biqlat {

using nlohmann::ordered_json;

ordered_json json_of(const Factorization& f) {
    ordered_json factors = ordered_json::array();
    for (const auto& [p, e] : f.factors) factors.push_back({p.str(), e});
    return ordered_json{{"n", f.n.str()}, {"factors", factors}, {"squarefree", f.squarefree}};
}

ordered_json json_of(const AdmissibleQ& aq) {
    ordered_json row;
    row["q"] = aq.q.str();
    row["j"] = aq.j.str();
    row["factorization"] = json_of(aq.factorization);
    return row;
}

ordered_json json_of_matrix(const RatMat& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json json_of_matrix(const IntMat& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

ordered_json json_of_vectors(const std::vector<std::vector<Int>>& vs) {
    ordered_json out = ordered_json::array();
    for (const auto& v : vs) {
        ordered_json row = ordered_json::array();
        for (const Int& x : v) row.push_back(x.str());
        out.push_back(std::move(row));
    }
    return out;
}

double density_value(const CenterDensity& d) {
    return d.coeff.convert_to<double>() / std::sqrt(d.radicand.convert_to<double>());
}

}  // namespace

ordered_json json_of(const LatticeReport& rep, bool approx) {
    ordered_json row;
    row["q"] = rep.q.str();
    row["j"] = rep.j.str();
    if (rep.k) row["k"] = rep.k->str();
    row["target"] = std::string(target_name(rep.target));
    row["verdict"] = std::string(verdict_name(rep.verdict));
    row["degree"] = rep.degree;
    row["label"] = rep.label;
    if (rep.index) row["index"] = rep.index->str();
    if (rep.disc) row["disc"] = rep.disc->str();
    row["min_trace"] = rat_str(rep.min_trace);
    row["packing_radius_sq"] = rat_str(rep.packing_radius_sq);
    if (rep.density)
        row["center_density"] = ordered_json{{"coeff", rat_str(rep.density->coeff)},
                                             {"radicand", rep.density->radicand.str()}};
    row["kissing"] = rep.kissing;
    row["gram"] = json_of_matrix(rep.gram_matrix);
    if (rep.normalized_gram) row["normalized_gram"] = json_of_matrix(*rep.normalized_gram);

    ordered_json witnesses;
    witnesses["shortest_vectors"] = json_of_vectors(rep.shortest);
    if (rep.isometry) {
        witnesses["isometry_u"] = json_of_matrix(rep.isometry->u);
        witnesses["isometry_scale"] = rat_str(rep.isometry->scale);
    }
    row["witnesses"] = std::move(witnesses);
    if (!rep.notes.empty()) row["notes"] = rep.notes;

    if (approx) {
        ordered_json a;
        if (rep.density) a["center_density"] = density_value(*rep.density);
        a["packing_radius"] = std::sqrt(rep.packing_radius_sq.convert_to<double>());
        row["approx"] = std::move(a);
    }
    return row;
}

ordered_json construct_json(const ModuleBasis& basis, const GramMatrix& g,
                            const LatticeReport* context, bool approx) {
    ordered_json row;
    row["q"] = basis.q.str();
    if (context) {
        row["j"] = context->j.str();
        if (context->k) row["k"] = context->k->str();
        row["target"] = std::string(target_name(context->target));
    }
    row["label"] = basis.label;
    row["degree"] = basis.degree;
    ordered_json els = ordered_json::array();
    for (const FieldElement& e : basis.elements) {
        ordered_json coords = ordered_json::array();
        for (int i = 0; i < 8; ++i) coords.push_back(rat_str(e.coord(i)));
        els.push_back(std::move(coords));
    }
    row["basis"] = std::move(els);
    row["gram"] = json_of_matrix(g);
    if (context && context->normalized_gram)
        row["normalized_gram"] = json_of_matrix(*context->normalized_gram);
    if (approx) {
        ordered_json emb = ordered_json::array();
        for (const FieldElement& e : basis.elements) emb.push_back(embed_canonical(e, basis.degree));
        row["approx"] = ordered_json{{"basis_embeddings", std::move(emb)}};
    }
    return row;
}

std::string to_json_string(const ReportDocument& doc) {
    ordered_json j;
    j["schema_version"] = doc.schema_version;
    j["command"] = doc.command;
    j["inputs"] = doc.inputs;
    j["results"] = doc.results;
    return j.dump(2) + "\n";
}

ReportDocument parse_document(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    doc.command = j.at("command").get<std::string>();
    doc.inputs = j.at("inputs");
    doc.results = j.at("results");
    return doc;
}

namespace {

// CSV cell for a json value; matrices and vectors are flattened row-major,
// rows separated by "; ", entries by spaces.
std::string csv_cell(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string out;
        bool nested = !v.empty() && v[0].is_array();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += nested ? "; " : " ";
            if (nested) {
                const auto& row = v[i];
                for (std::size_t k = 0; k < row.size(); ++k) {
                    if (k) out += " ";
                    out += csv_cell(row[k]);
                }
            } else {
                out += csv_cell(v[i]);
            }
        }
        return out;
    }
    return v.dump();
}

std::string quote_csv(const std::string& s) {
    bool needs = s.find_first_of(",\"\n;") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::vector<std::string> csv_columns(const std::string& command) {
    if (command == "family") return {"q", "j", "factorization"};
    if (command == "construct")
        return {"q", "j", "k", "target", "label", "degree", "basis", "gram", "normalized_gram"};
    return {"q", "j", "k", "target", "verdict", "degree", "index", "disc",
            "min_trace", "packing_radius_sq", "center_density", "kissing", "gram"};
}

ordered_json csv_view(const std::string& command, const ordered_json& row,
                      const std::string& col) {
    if (!row.contains(col)) return nullptr;
    const ordered_json& v = row.at(col);
    if (command == "family" && col == "factorization") {
        // p1^e1*p2^e2 rendering
        std::string out;
        for (std::size_t i = 0; i < v.at("factors").size(); ++i) {
            const auto& pe = v.at("factors")[i];
            if (i) out += "*";
            out += pe[0].get<std::string>();
            if (pe[1].get<int>() != 1) out += "^" + std::to_string(pe[1].get<int>());
        }
        return out;
    }
    if (col == "center_density") {
        std::string s = v.at("coeff").get<std::string>();
        if (v.at("radicand").get<std::string>() != "1")
            s += "/sqrt(" + v.at("radicand").get<std::string>() + ")";
        return s;
    }
    return v;
}

void plain_matrix(std::ostringstream& os, const ordered_json& m, const std::string& indent) {
    for (const auto& row : m) {
        os << indent;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << " ";
            os << row[j].get<std::string>();
        }
        os << "\n";
    }
}

}  // namespace

std::string to_csv(const ReportDocument& doc) {
    auto cols = csv_columns(doc.command);
    std::ostringstream os;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) os << ",";
        os << cols[i];
    }
    os << "\n";
    for (const auto& row : doc.results) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) os << ",";
            os << quote_csv(csv_cell(csv_view(doc.command, row, cols[i])));
        }
        os << "\n";
    }
    return os.str();
}

std::string to_plain(const ReportDocument& doc) {
    std::ostringstream os;
    if (doc.command == "family") {
        os << "q\tj\tfactorization\n";
        for (const auto& row : doc.results) {
            os << row.at("q").get<std::string>() << "\t" << row.at("j").get<std::string>() << "\t"
               << csv_cell(csv_view("family", row, "factorization")) << "\n";
        }
        return os.str();
    }
    for (const auto& row : doc.results) {
        os << "q = " << row.at("q").get<std::string>();
        if (row.contains("j")) os << "  j = " << row.at("j").get<std::string>();
        if (row.contains("k")) os << "  k = " << row.at("k").get<std::string>();
        if (row.contains("target")) os << "  target = " << row.at("target").get<std::string>();
        os << "\n";
        if (row.contains("verdict")) os << "  verdict: " << row.at("verdict").get<std::string>() << "\n";
        for (const char* key : {"index", "disc", "min_trace", "packing_radius_sq"}) {
            if (row.contains(key)) os << "  " << key << ": " << row.at(key).get<std::string>() << "\n";
        }
        if (row.contains("center_density"))
            os << "  center_density: " << csv_cell(csv_view(doc.command, row, "center_density")) << "\n";
        if (row.contains("kissing")) os << "  kissing: " << row.at("kissing").get<long long>() << "\n";
        if (row.contains("basis")) {
            os << "  basis coordinates (1, sqrt2, sqrtq, sqrt2q, i, i*sqrt2, i*sqrtq, i*sqrt2q):\n";
            plain_matrix(os, row.at("basis"), "    ");
        }
        if (row.contains("gram")) {
            os << "  gram:\n";
            plain_matrix(os, row.at("gram"), "    ");
        }
        if (row.contains("normalized_gram")) {
            os << "  normalized gram:\n";
            plain_matrix(os, row.at("normalized_gram"), "    ");
        }
        if (row.contains("notes"))
            for (const auto& n : row.at("notes")) os << "  note: " << n.get<std::string>() << "\n";
        if (row.contains("approx")) {
            os << "  approx:";
            for (auto it = row.at("approx").begin(); it != row.at("approx").end(); ++it) {
                if (it.value().is_number()) os << " " << it.key() << " = " << it.value().get<double>();
            }
            os << "\n";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace biqlat
