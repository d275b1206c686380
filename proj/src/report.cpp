#include "semspace/report.hpp"

#include <charconv>
#include <cstdio>

#include <json.hpp>

#include "semspace/errors.hpp"

namespace semspace {

namespace {

std::string fmt_2dec(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Shortest round-trip decimal, always with a decimal point or exponent so
// reals stay visually distinct from counts ("1" -> "1.0").
std::string fmt_full(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    std::string out(buf, res.ptr);
    if (out.find('.') == std::string::npos &&
        out.find('e') == std::string::npos &&
        out.find("inf") == std::string::npos &&
        out.find("nan") == std::string::npos) {
        out += ".0";
    }
    return out;
}

// RFC 4180: quote fields containing comma, quote or newline.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out.push_back(ch);
    }
    out += "\"";
    return out;
}

std::string render_table(const std::vector<EvalReport>& reports) {
    std::string out;
    out += "| | RC | SSRIC | R-Prec | R-Rec |\n";
    for (const auto& r : reports) {
        out += "| " + r.space_name + " | " + std::to_string(r.rc) + " | " +
               fmt_2dec(r.ssric) + " | " + fmt_2dec(r.r_prec) +
               (r.r_prec_defined ? "" : "*") + " | " + fmt_2dec(r.r_rec) + " |\n";
    }
    for (RelationCategory c : kAllCategories) {
        out += "\n| " + std::string(category_label(c)) +
               " | N / Total | R-Prec | R-Rec |\n";
        for (const auto& r : reports) {
            const CategoryStats& s = r.per_category.at(c);
            out += "| " + r.space_name + " | " + std::to_string(s.reproduced) +
                   " / " + std::to_string(s.total) + " | " + fmt_2dec(s.r_prec) +
                   (s.r_prec_defined ? "" : "*") + " | " + fmt_2dec(s.r_rec) + " |\n";
        }
    }
    bool flagged = false;
    for (const auto& r : reports) {
        if (!r.r_prec_defined) flagged = true;
        for (const auto& [c, s] : r.per_category) {
            if (!s.r_prec_defined) flagged = true;
        }
    }
    if (flagged) {
        out += "\n* precision undefined: no retrieved neighbor participated in a relation\n";
    }
    return out;
}

std::string render_csv(const std::vector<EvalReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        out += "space,RC,SSRIC,R-Prec,R-Rec\n";
        out += csv_field(r.space_name) + "," + std::to_string(r.rc) + "," +
               fmt_full(r.ssric) + "," + fmt_full(r.r_prec) + "," +
               fmt_full(r.r_rec) + "\n";
        out += "category,N,Total,R-Prec,R-Rec\n";
        for (RelationCategory c : kAllCategories) {
            const CategoryStats& s = r.per_category.at(c);
            out += std::string(category_name(c)) + "," +
                   std::to_string(s.reproduced) + "," + std::to_string(s.total) +
                   "," + fmt_full(s.r_prec) + "," + fmt_full(s.r_rec) + "\n";
        }
    }
    return out;
}

nlohmann::ordered_json report_to_json(const EvalReport& r) {
    nlohmann::ordered_json j;
    j["space"] = r.space_name;
    j["k"] = r.k;
    j["seed"] = r.seed;
    j["symmetric"] = r.symmetric;
    j["strict_oov"] = r.strict_oov;
    j["n_relations"] = r.n_relations;
    j["oov_skipped"] = r.oov_skipped;
    j["rc"] = r.rc;
    j["tr"] = r.tr;
    j["ssric"] = r.ssric;
    j["retrieved"] = r.retrieved;
    j["r_prec"] = r.r_prec;
    j["r_prec_defined"] = r.r_prec_defined;
    j["r_rec"] = r.r_rec;
    j["sample_terms"] = r.sample_terms;
    nlohmann::ordered_json cats;
    for (RelationCategory c : kAllCategories) {
        const CategoryStats& s = r.per_category.at(c);
        nlohmann::ordered_json jc;
        jc["n"] = s.reproduced;
        jc["total"] = s.total;
        jc["r_prec"] = s.r_prec;
        jc["r_prec_defined"] = s.r_prec_defined;
        jc["r_rec"] = s.r_rec;
        cats[category_name(c)] = jc;
    }
    j["per_category"] = cats;
    return j;
}

EvalReport report_from_json(const nlohmann::json& j) {
    EvalReport r;
    r.space_name = j.at("space").get<std::string>();
    r.k = j.at("k").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.symmetric = j.at("symmetric").get<bool>();
    r.strict_oov = j.at("strict_oov").get<bool>();
    r.n_relations = j.at("n_relations").get<std::uint64_t>();
    r.oov_skipped = j.at("oov_skipped").get<std::uint64_t>();
    r.rc = j.at("rc").get<std::uint64_t>();
    r.tr = j.at("tr").get<std::uint64_t>();
    r.ssric = j.at("ssric").get<double>();
    r.retrieved = j.at("retrieved").get<std::uint64_t>();
    r.r_prec = j.at("r_prec").get<double>();
    r.r_prec_defined = j.at("r_prec_defined").get<bool>();
    r.r_rec = j.at("r_rec").get<double>();
    r.sample_terms = j.at("sample_terms").get<std::vector<std::string>>();
    for (RelationCategory c : kAllCategories) {
        const auto& jc = j.at("per_category").at(category_name(c));
        CategoryStats s;
        s.reproduced = jc.at("n").get<std::uint64_t>();
        s.total = jc.at("total").get<std::uint64_t>();
        s.r_prec = jc.at("r_prec").get<double>();
        s.r_prec_defined = jc.at("r_prec_defined").get<bool>();
        s.r_rec = jc.at("r_rec").get<double>();
        r.per_category[c] = s;
    }
    return r;
}

} // namespace

std::string render_report(const std::vector<EvalReport>& reports,
                          ReportFormat format) {
    if (reports.empty()) throw Error("render_report: need at least one report");
    switch (format) {
        case ReportFormat::Table:
            return render_table(reports);
        case ReportFormat::Csv:
            return render_csv(reports);
        case ReportFormat::Json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : reports) arr.push_back(report_to_json(r));
            return arr.dump(2) + "\n";
        }
    }
    throw Error("render_report: unknown format");
}

std::vector<EvalReport> reports_from_json(const std::string& text) {
    const nlohmann::json parsed = nlohmann::json::parse(text);
    if (!parsed.is_array()) throw Error("reports_from_json: expected an array");
    std::vector<EvalReport> reports;
    reports.reserve(parsed.size());
    for (const auto& j : parsed) reports.push_back(report_from_json(j));
    return reports;
}

} // namespace semspace
