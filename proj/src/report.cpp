#include "socsen/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "socsen/corpus_io.hpp"

namespace socsen {

using ordered_json = nlohmann::ordered_json;

std::string plan_to_json(const CompositionPlan& plan) {
    ordered_json j;
    j["version"] = 1;

    ordered_json q;
    q["center"] = {{"lon", plan.query.region.center.lon},
                   {"lat", plan.query.region.center.lat}};
    q["l_m"] = plan.query.region.l_m;
    q["w_m"] = plan.query.region.w_m;
    q["t_start"] = format_rfc3339(plan.query.window.t_s);
    q["t_end"] = format_rfc3339(plan.query.window.t_e);
    q["phrases"] = plan.query.phrases;
    j["query"] = std::move(q);

    ordered_json frames = ordered_json::array();
    for (std::size_t i = 0; i < plan.frames.size(); ++i) {
        const Frame& f = plan.frames[i];
        ordered_json fj;
        fj["index"] = i;
        fj["t_start"] = format_rfc3339(f.time_label.t_s);
        fj["t_end"] = format_rfc3339(f.time_label.t_e);
        fj["cluster_ids"] = f.cluster_ids;
        fj["grid_g"] = f.grid_g;
        ordered_json cells = ordered_json::array();
        for (const auto& c : f.cells) {
            ordered_json cj;
            cj["row"] = c.row;
            cj["col"] = c.col;
            cj["record_id"] = c.record_id;
            cj["t_start"] = format_rfc3339(c.time.t_s);
            cj["t_end"] = format_rfc3339(c.time.t_e);
            cj["score"] = c.score;
            cells.push_back(std::move(cj));
        }
        fj["cells"] = std::move(cells);
        fj["overflow_record_ids"] = f.overflow_record_ids;
        fj["caption"] = f.caption;
        frames.push_back(std::move(fj));
    }
    j["frames"] = std::move(frames);

    ordered_json related = ordered_json::array();
    for (const auto& [cid, score] : plan.related_context)
        related.push_back({{"cluster_id", cid}, {"relation", score}});
    j["related_context"] = std::move(related);

    ordered_json stats;
    stats["corpus_records"] = plan.stats.corpus_records;
    stats["candidate_clusters"] = plan.stats.candidate_clusters;
    stats["primary_clusters"] = plan.stats.primary_clusters;
    stats["related_clusters"] = plan.stats.related_clusters;
    stats["composed_clusters"] = plan.stats.composed_clusters;
    stats["candidate_records"] = plan.stats.candidate_records;
    stats["selected_records"] = plan.stats.selected_records;
    stats["pruned_records"] = plan.stats.pruned_records;
    j["stats"] = std::move(stats);

    return j.dump(2) + "\n";
}

CompositionPlan plan_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw DataError(std::string("invalid plan JSON: ") + e.what());
    }
    CompositionPlan plan;
    try {
        const auto& q = j.at("query");
        plan.query.region.center.lon = q.at("center").at("lon").get<double>();
        plan.query.region.center.lat = q.at("center").at("lat").get<double>();
        plan.query.region.l_m = q.at("l_m").get<double>();
        plan.query.region.w_m = q.at("w_m").get<double>();
        plan.query.window.t_s = parse_rfc3339(q.at("t_start").get<std::string>());
        plan.query.window.t_e = parse_rfc3339(q.at("t_end").get<std::string>());
        for (const auto& p : q.at("phrases")) plan.query.phrases.push_back(p.get<std::string>());

        for (const auto& fj : j.at("frames")) {
            Frame f;
            f.time_label.t_s = parse_rfc3339(fj.at("t_start").get<std::string>());
            f.time_label.t_e = parse_rfc3339(fj.at("t_end").get<std::string>());
            f.cluster_ids = fj.at("cluster_ids").get<std::vector<int>>();
            f.grid_g = fj.at("grid_g").get<int>();
            for (const auto& cj : fj.at("cells")) {
                FrameCell c;
                c.row = cj.at("row").get<int>();
                c.col = cj.at("col").get<int>();
                c.record_id = cj.at("record_id").get<std::string>();
                c.time.t_s = parse_rfc3339(cj.at("t_start").get<std::string>());
                c.time.t_e = parse_rfc3339(cj.at("t_end").get<std::string>());
                c.score = cj.at("score").get<double>();
                f.cells.push_back(std::move(c));
            }
            f.overflow_record_ids =
                fj.at("overflow_record_ids").get<std::vector<std::string>>();
            f.caption = fj.at("caption").get<std::vector<std::string>>();
            plan.frames.push_back(std::move(f));
        }
        for (const auto& rj : j.at("related_context"))
            plan.related_context.emplace_back(rj.at("cluster_id").get<int>(),
                                              rj.at("relation").get<double>());
        const auto& s = j.at("stats");
        plan.stats.corpus_records = s.at("corpus_records").get<std::size_t>();
        plan.stats.candidate_clusters = s.at("candidate_clusters").get<std::size_t>();
        plan.stats.primary_clusters = s.at("primary_clusters").get<std::size_t>();
        plan.stats.related_clusters = s.at("related_clusters").get<std::size_t>();
        plan.stats.composed_clusters = s.at("composed_clusters").get<std::size_t>();
        plan.stats.candidate_records = s.at("candidate_records").get<std::size_t>();
        plan.stats.selected_records = s.at("selected_records").get<std::size_t>();
        plan.stats.pruned_records = s.at("pruned_records").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("plan JSON missing fields: ") + e.what());
    }
    return plan;
}

CompositionPlan load_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open plan file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return plan_from_json(buf.str());
}

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::string plan_to_svg(const CompositionPlan& plan) {
    constexpr int cell = 110;
    constexpr int pad = 14;
    constexpr int header = 34;
    int max_g = 1;
    for (const auto& f : plan.frames) max_g = std::max(max_g, f.grid_g);
    const int row_h = header + max_g * cell + pad;
    const int width = 2 * pad + std::max(max_g * cell, 420);
    const int height = plan.frames.empty() ? 90 : pad + static_cast<int>(plan.frames.size()) * row_h;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" font-family=\"monospace\" font-size=\"11\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#fafafa\"/>\n";
    if (plan.frames.empty()) {
        svg << "  <text x=\"" << pad << "\" y=\"40\">empty plan: no composable clusters"
            << "</text>\n</svg>\n";
        return svg.str();
    }
    for (std::size_t i = 0; i < plan.frames.size(); ++i) {
        const Frame& f = plan.frames[i];
        const int top = pad + static_cast<int>(i) * row_h;
        std::string caption;
        for (std::size_t k = 0; k < f.caption.size() && k < 5; ++k) {
            if (k) caption += ", ";
            caption += f.caption[k];
        }
        svg << "  <text x=\"" << pad << "\" y=\"" << top + 14 << "\" font-size=\"13\">frame "
            << i << "  " << format_rfc3339(f.time_label.t_s) << " .. "
            << format_rfc3339(f.time_label.t_e) << "</text>\n";
        svg << "  <text x=\"" << pad << "\" y=\"" << top + 28 << "\" fill=\"#555\">"
            << xml_escape(caption) << "</text>\n";
        for (int r = 0; r < f.grid_g; ++r) {
            for (int c = 0; c < f.grid_g; ++c) {
                const int x = pad + c * cell;
                const int y = top + header + r * cell;
                svg << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell - 6
                    << "\" height=\"" << cell - 6
                    << "\" fill=\"#ffffff\" stroke=\"#999\"/>\n";
            }
        }
        for (const auto& c : f.cells) {
            const int x = pad + c.col * cell;
            const int y = top + header + c.row * cell;
            svg << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell - 6
                << "\" height=\"" << cell - 6
                << "\" fill=\"#e8f0fe\" stroke=\"#3367d6\"/>\n";
            svg << "  <text x=\"" << x + 6 << "\" y=\"" << y + 18 << "\">"
                << xml_escape(c.record_id) << "</text>\n";
            svg << "  <text x=\"" << x + 6 << "\" y=\"" << y + 34 << "\" fill=\"#555\">"
                << format_rfc3339(c.time.t_s).substr(11, 8) << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_report(const CompositionPlan& plan, const Corpus& corpus,
                 const std::string& out_dir) {
    for (const auto& f : plan.frames) {
        for (const auto& c : f.cells)
            if (!corpus.has(c.record_id))
                throw DataError("plan references unknown record id: " + c.record_id);
        for (const auto& id : f.overflow_record_ids)
            if (!corpus.has(id)) throw DataError("plan references unknown record id: " + id);
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw DataError("cannot create output directory '" + out_dir + "': " + ec.message());

    auto write_file = [&](const std::string& name, const std::string& content) {
        const auto path = std::filesystem::path(out_dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw DataError("cannot write " + path.string());
        out << content;
        if (!out) throw DataError("write failed: " + path.string());
    };

    write_file("plan.json", plan_to_json(plan));
    const std::string svg = plan_to_svg(plan);
    write_file("tapestry.svg", svg);

    std::ostringstream html;
    html << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
         << "<title>tapestry storyboard</title>\n</head>\n<body>\n"
         << "<h1>Tapestry storyboard</h1>\n"
         << "<p>" << plan.frames.size() << " frame(s), " << plan.stats.selected_records
         << " selected record(s) of " << plan.stats.corpus_records << " in the corpus.</p>\n"
         << svg << "</body>\n</html>\n";
    write_file("index.html", html.str());
}

}  // namespace socsen
