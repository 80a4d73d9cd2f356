#include "asneval/report.hpp"

#include <algorithm>
#include <sstream>

#include "asneval/csv.hpp"
#include "asneval/util.hpp"

namespace asneval {

namespace {

void pad_to(std::string& line, std::size_t width) {
    if (line.size() < width) line.append(width - line.size(), ' ');
}

std::string drop_note(std::size_t dropped_open, std::size_t dropped_official) {
    if (dropped_open == 0 && dropped_official == 0) return {};
    return "  (dropped " + std::to_string(dropped_open) + " open / " +
           std::to_string(dropped_official) + " official unmatched)\n";
}

}  // namespace

std::string render_agreement_table(const AgreementReport& report, std::string_view title) {
    std::ostringstream out;
    out << title << " (" << report.cohort_size << " candidates)\n";
    out << drop_note(report.dropped_open, report.dropped_official);

    const std::size_t label_width = 12;
    const std::size_t col_width = 10;

    std::string header(label_width, ' ');
    for (Condition c : report.conditions) {
        std::string cell(condition_name(c));
        pad_to(cell, col_width);
        header += cell;
    }
    out << header << '\n';

    for (Metric m : kAllMetrics) {
        std::string line(metric_name(m));
        pad_to(line, label_width);
        for (Condition c : report.conditions) {
            std::string cell = format_pct(report.pct(c, m)) + "%";
            pad_to(cell, col_width);
            line += cell;
        }
        out << line << '\n';
    }
    return out.str();
}

std::string render_flip_table(const FlipReport& report, std::string_view title) {
    std::ostringstream out;
    out << title << " (" << report.cohort_size << " candidates)\n";
    out << drop_note(report.dropped_open, report.dropped_official);

    const std::size_t label_width = 12;
    const std::size_t col_width = 9;

    std::string header(label_width, ' ');
    std::string sign_row(label_width, ' ');
    for (Condition c : report.conditions) {
        std::string cell(condition_name(c));
        pad_to(cell, 2 * col_width);
        header += cell;
        std::string plus = "+";
        pad_to(plus, col_width);
        std::string minus = "-";
        pad_to(minus, col_width);
        sign_row += plus + minus;
    }
    out << header << '\n' << sign_row << '\n';

    for (Metric m : kAllMetrics) {
        std::string line(metric_name(m));
        pad_to(line, label_width);
        for (Condition c : report.conditions) {
            std::string plus = format_pct(report.plus_pct(c, m)) + "%";
            pad_to(plus, col_width);
            std::string minus = format_pct(report.minus_pct(c, m)) + "%";
            pad_to(minus, col_width);
            line += plus + minus;
        }
        out << line << '\n';
    }
    return out.str();
}

std::string render_stats_table(const DatasetStats& stats) {
    std::ostringstream out;
    out << "role        CVs      DOI DBLP        DOI CV          DOI UNION\n";
    for (Role role : {Role::AssociateProfessor, Role::FullProfessor}) {
        const RoleStats& row = stats.for_role(role);
        std::string line(role_name(role));
        pad_to(line, 12);
        std::string cvs = std::to_string(row.cv_count);
        pad_to(cvs, 9);
        line += cvs;
        auto cell = [&](std::size_t total, double avg) {
            std::string s = std::to_string(total) + " (" +
                            (row.averages_defined ? format_pct(avg) : "n/a") + ")";
            pad_to(s, 16);
            line += s;
        };
        cell(row.dois_dblp, row.avg_dblp);
        cell(row.dois_cv, row.avg_cv);
        cell(row.dois_union, row.avg_union);
        out << line << '\n';
    }
    return out.str();
}

std::string agreement_csv(const AgreementReport& report) {
    std::ostringstream out;
    CsvWriter writer(out);
    writer.write_row(std::vector<std::string>{"condition", "metric", "agreement_pct",
                                              "agree_count", "cohort_size"});
    for (Condition c : report.conditions) {
        for (Metric m : kAllMetrics) {
            writer.write_row(std::vector<std::string>{
                std::string(condition_name(c)), std::string(metric_name(m)),
                format_pct(report.pct(c, m)), std::to_string(report.count(c, m)),
                std::to_string(report.cohort_size)});
        }
    }
    return out.str();
}

std::string flip_csv(const FlipReport& report) {
    std::ostringstream out;
    CsvWriter writer(out);
    writer.write_row(std::vector<std::string>{"condition", "metric", "plus_pct", "minus_pct",
                                              "plus_count", "minus_count", "cohort_size"});
    for (Condition c : report.conditions) {
        for (Metric m : kAllMetrics) {
            writer.write_row(std::vector<std::string>{
                std::string(condition_name(c)), std::string(metric_name(m)),
                format_pct(report.plus_pct(c, m)), format_pct(report.minus_pct(c, m)),
                std::to_string(report.plus_count(c, m)), std::to_string(report.minus_count(c, m)),
                std::to_string(report.cohort_size)});
        }
    }
    return out.str();
}

std::string stats_csv(const DatasetStats& stats) {
    std::ostringstream out;
    CsvWriter writer(out);
    writer.write_row(std::vector<std::string>{"role", "cv_count", "dois_dblp", "dois_cv",
                                              "dois_union", "avg_dblp", "avg_cv", "avg_union"});
    for (Role role : {Role::AssociateProfessor, Role::FullProfessor}) {
        const RoleStats& row = stats.for_role(role);
        writer.write_row(std::vector<std::string>{
            std::string(role_name(role)), std::to_string(row.cv_count),
            std::to_string(row.dois_dblp), std::to_string(row.dois_cv),
            std::to_string(row.dois_union), format_double(row.avg_dblp),
            format_double(row.avg_cv), format_double(row.avg_union)});
    }
    return out.str();
}

std::string sweep_csv(const SweepSeries& series) {
    std::ostringstream out;
    CsvWriter writer(out);
    writer.write_row(std::vector<std::string>{"ratio", "indicator", "agreement_pct"});
    for (std::size_t i = 0; i < series.ratios.size(); ++i) {
        for (Metric m : kAllMetrics) {
            writer.write_row(std::vector<std::string>{format_double(series.ratios[i]),
                                                      std::string(metric_name(m)),
                                                      format_pct(series.pct(m, i))});
        }
    }
    return out.str();
}

std::string sweep_svg(const SweepSeries& series, std::string_view title) {
    const double width = 860.0;
    const double height = 540.0;
    const double left = 70.0;
    const double right = 30.0;
    const double top = 50.0;
    const double bottom = 60.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_min = series.ratios.empty() ? 0.0 : series.ratios.front();
    double x_max = series.ratios.empty() ? 1.0 : series.ratios.back();
    for (double r : series.ratios) {
        x_min = std::min(x_min, r);
        x_max = std::max(x_max, r);
    }
    if (x_max == x_min) x_max = x_min + 1.0;

    auto x_of = [&](double ratio) { return left + (ratio - x_min) / (x_max - x_min) * plot_w; };
    auto y_of = [&](double pct) { return top + (100.0 - pct) / 100.0 * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(width)
        << "\" height=\"" << format_double(height) << "\" viewBox=\"0 0 " << format_double(width)
        << " " << format_double(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << format_double(width / 2) << "\" y=\"28\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

    // y grid every 10 percentage points
    for (int pct = 0; pct <= 100; pct += 10) {
        double y = y_of(pct);
        svg << "<line x1=\"" << format_double(left) << "\" y1=\"" << format_double(y)
            << "\" x2=\"" << format_double(left + plot_w) << "\" y2=\"" << format_double(y)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << format_double(left - 8) << "\" y=\"" << format_double(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << pct
            << "%</text>\n";
    }
    // x ticks on the ratio grid
    for (double r : series.ratios) {
        double x = x_of(r);
        svg << "<line x1=\"" << format_double(x) << "\" y1=\"" << format_double(top + plot_h)
            << "\" x2=\"" << format_double(x) << "\" y2=\"" << format_double(top + plot_h + 5)
            << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << format_double(x) << "\" y=\"" << format_double(top + plot_h + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_pct(r * 100.0) << "%</text>\n";
    }
    svg << "<rect x=\"" << format_double(left) << "\" y=\"" << format_double(top) << "\" width=\""
        << format_double(plot_w) << "\" height=\"" << format_double(plot_h)
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    struct Line {
        Metric metric;
        const char* color;
    };
    const Line lines[] = {
        {Metric::Journals, "#1f77b4"},
        {Metric::Citations, "#d62728"},
        {Metric::HIndex, "#2ca02c"},
    };

    for (const Line& line : lines) {
        svg << "<polyline fill=\"none\" stroke=\"" << line.color
            << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < series.ratios.size(); ++i) {
            if (i > 0) svg << ' ';
            svg << format_double(x_of(series.ratios[i])) << ','
                << format_double(y_of(series.pct(line.metric, i)));
        }
        svg << "\"/>\n";
    }

    double legend_x = left + 12;
    double legend_y = top + 14;
    for (const Line& line : lines) {
        svg << "<line x1=\"" << format_double(legend_x) << "\" y1=\"" << format_double(legend_y - 4)
            << "\" x2=\"" << format_double(legend_x + 24) << "\" y2=\""
            << format_double(legend_y - 4) << "\" stroke=\"" << line.color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << format_double(legend_x + 30) << "\" y=\""
            << format_double(legend_y) << "\" font-family=\"sans-serif\" font-size=\"12\">"
            << metric_name(line.metric) << "</text>\n";
        legend_y += 18;
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace asneval
