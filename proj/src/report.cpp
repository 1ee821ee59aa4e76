#include "awrpsim/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "awrpsim/trace_io.hpp"

namespace awrpsim {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::string_view kOracleNote = "OPT is an offline oracle (uses future references)";

bool has_opt(const ComparisonTable &table) {
    return std::find(table.policies.begin(), table.policies.end(), PolicyKind::OPT) !=
           table.policies.end();
}

std::string column_label(PolicyKind kind) {
    std::string label(policy_name(kind));
    if (is_offline(kind)) label += '*';
    return label;
}

std::string pad_left(const std::string &s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string &s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string gain_text(const std::optional<double> &g) {
    return g ? format_percent(*g) : std::string("n/a");
}

ojson config_json(const CacheConfig &cfg, bool with_capacity) {
    ojson j;
    if (with_capacity) j["capacity"] = cfg.capacity;
    j["num_sets"] = cfg.num_sets;
    j["block_size_log2"] = cfg.block_size_log2;
    return j;
}

ojson gain_json(const GainReport &g) {
    ojson j;
    j["candidate"] = policy_name(g.candidate);
    j["baseline"] = policy_name(g.baseline);
    ojson points = ojson::array();
    for (const auto &p : g.per_capacity) {
        points.push_back({{"capacity", p.capacity},
                          {"gain_percent", p.percent ? ojson(*p.percent) : ojson(nullptr)}});
    }
    j["per_capacity"] = std::move(points);
    auto extreme = [](const std::optional<GainPoint> &p) -> ojson {
        if (!p) return nullptr;
        return {{"capacity", p->capacity}, {"gain_percent", *p->percent}};
    };
    j["max_gain"] = extreme(g.max_gain);
    j["min_gain"] = extreme(g.min_gain);
    j["mean_relative_gain_percent"] = g.mean_gain ? ojson(*g.mean_gain) : ojson(nullptr);
    return j;
}

std::string render_text(const ComparisonTable &table, std::span<const GainReport> gains) {
    std::ostringstream os;
    os << "trace: " << table.trace_name << '\n';
    os << "sets: " << table.base.num_sets << "  block_size_log2: " << table.base.block_size_log2
       << "\n\n";
    const std::string first = "FRAME SIZE (blocks)";
    constexpr std::size_t width = 9;
    os << pad_right(first, first.size());
    for (const auto kind : table.policies) os << pad_left(column_label(kind), width);
    os << '\n';
    for (std::size_t c = 0; c < table.capacities.size(); ++c) {
        os << pad_right(std::to_string(table.capacities[c]), first.size());
        for (std::size_t p = 0; p < table.policies.size(); ++p) {
            os << pad_left(format_percent(table.ratios[p][c]), width);
        }
        os << '\n';
    }
    if (has_opt(table)) os << "\n* " << kOracleNote << '\n';

    for (const auto &g : gains) {
        os << '\n'
           << "gain of " << policy_name(g.candidate) << " over " << policy_name(g.baseline)
           << " (percent, relative to " << policy_name(g.baseline) << ")\n";
        for (const auto &p : g.per_capacity) {
            os << "  " << pad_right(std::to_string(p.capacity), 8) << pad_left(gain_text(p.percent), 9)
               << '\n';
        }
        if (g.max_gain) {
            os << "  max " << format_percent(*g.max_gain->percent) << " at " << g.max_gain->capacity
               << ", min " << format_percent(*g.min_gain->percent) << " at " << g.min_gain->capacity
               << '\n';
            os << "  mean of per-capacity relative gains: " << format_percent(*g.mean_gain) << '\n';
        }
    }
    return os.str();
}

std::string render_csv(const ComparisonTable &table) {
    std::ostringstream os;
    if (has_opt(table)) os << "# " << kOracleNote << '\n';
    os << "capacity";
    for (const auto kind : table.policies) os << ',' << policy_name(kind);
    os << '\n';
    for (std::size_t c = 0; c < table.capacities.size(); ++c) {
        os << table.capacities[c];
        for (std::size_t p = 0; p < table.policies.size(); ++p) {
            os << ',' << format_percent(table.ratios[p][c]);
        }
        os << '\n';
    }
    return os.str();
}

std::string render_json(const ComparisonTable &table, std::span<const GainReport> gains) {
    ojson j;
    j["trace"] = table.trace_name;
    j["config"] = config_json(table.base, false);
    j["capacities"] = table.capacities;
    ojson policies = ojson::array();
    for (const auto kind : table.policies) {
        policies.push_back({{"name", policy_name(kind)}, {"offline_oracle", is_offline(kind)}});
    }
    j["policies"] = std::move(policies);
    ojson cells = ojson::array();
    for (std::size_t p = 0; p < table.policies.size(); ++p) {
        for (std::size_t c = 0; c < table.capacities.size(); ++c) {
            ojson cell;
            cell["policy"] = policy_name(table.policies[p]);
            cell["capacity"] = table.capacities[c];
            if (!table.results.empty()) {
                const auto &r = table.results[p][c];
                cell["hits"] = r.hits;
                cell["misses"] = r.misses;
                cell["evictions"] = r.evictions;
            }
            cell["hit_ratio_percent"] = table.ratios[p][c];
            cells.push_back(std::move(cell));
        }
    }
    j["cells"] = std::move(cells);
    ojson gj = ojson::array();
    for (const auto &g : gains) gj.push_back(gain_json(g));
    j["gains"] = std::move(gj);
    return j.dump(2) + "\n";
}

std::string render_plotdata(const ComparisonTable &table) {
    std::ostringstream os;
    os << "# trace: " << table.trace_name << '\n';
    for (std::size_t p = 0; p < table.policies.size(); ++p) {
        if (p > 0) os << "\n\n";
        const auto kind = table.policies[p];
        os << "# policy: " << policy_name(kind);
        if (is_offline(kind)) os << " (offline oracle)";
        os << "\n# capacity hit_ratio\n";
        for (std::size_t c = 0; c < table.capacities.size(); ++c) {
            os << table.capacities[c] << ' ' << format_percent(table.ratios[p][c]) << '\n';
        }
    }
    return os.str();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

} // namespace

std::string format_percent(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

std::string_view format_name(ReportFormat format) noexcept {
    switch (format) {
    case ReportFormat::Text:
        return "text";
    case ReportFormat::Csv:
        return "csv";
    case ReportFormat::Json:
        return "json";
    case ReportFormat::PlotData:
        return "plotdata";
    }
    return "?";
}

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept {
    std::string l(name);
    std::transform(l.begin(), l.end(), l.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    for (const auto f : {ReportFormat::Text, ReportFormat::Csv, ReportFormat::Json, ReportFormat::PlotData}) {
        if (format_name(f) == l) return f;
    }
    return std::nullopt;
}

GainReport gain_report(const ComparisonTable &table, PolicyKind candidate, PolicyKind baseline) {
    const auto cand_row = table.policy_row(candidate);
    const auto base_row = table.policy_row(baseline);
    GainReport report;
    report.candidate = candidate;
    report.baseline = baseline;
    double sum = 0.0;
    std::size_t defined = 0;
    for (std::size_t c = 0; c < table.capacities.size(); ++c) {
        GainPoint point{table.capacities[c], std::nullopt};
        const double base = table.ratios[base_row][c];
        if (base != 0.0) {
            point.percent = relative_gain(table.ratios[cand_row][c], base);
            sum += *point.percent;
            ++defined;
            if (!report.max_gain || *point.percent > *report.max_gain->percent) report.max_gain = point;
            if (!report.min_gain || *point.percent < *report.min_gain->percent) report.min_gain = point;
        }
        report.per_capacity.push_back(point);
    }
    if (defined > 0) report.mean_gain = sum / static_cast<double>(defined);
    return report;
}

std::vector<GainReport> gain_reports(const ComparisonTable &table, PolicyKind candidate) {
    std::vector<GainReport> out;
    for (const auto kind : table.policies) {
        if (kind != candidate) out.push_back(gain_report(table, candidate, kind));
    }
    return out;
}

std::string render(const ComparisonTable &table, ReportFormat format, std::span<const GainReport> gains) {
    switch (format) {
    case ReportFormat::Text:
        return render_text(table, gains);
    case ReportFormat::Csv:
        return render_csv(table);
    case ReportFormat::Json:
        return render_json(table, gains);
    case ReportFormat::PlotData:
        return render_plotdata(table);
    }
    return {};
}

std::string render(const SimResult &r, ReportFormat format, std::string_view trace_name) {
    const std::string name(policy_name(r.policy));
    switch (format) {
    case ReportFormat::Text: {
        std::ostringstream os;
        if (!trace_name.empty()) os << "trace:      " << trace_name << '\n';
        os << "policy:     " << name << (is_offline(r.policy) ? " (offline oracle)" : "") << '\n'
           << "capacity:   " << r.config.capacity << '\n'
           << "sets:       " << r.config.num_sets << '\n'
           << "accesses:   " << r.accesses() << '\n'
           << "hits:       " << r.hits << '\n'
           << "misses:     " << r.misses << '\n'
           << "evictions:  " << r.evictions << '\n'
           << "hit ratio:  " << format_percent(r.hit_ratio_percent) << '\n'
           << "miss ratio: " << format_percent(100.0 - r.hit_ratio_percent) << '\n';
        return os.str();
    }
    case ReportFormat::Json: {
        ojson j;
        if (!trace_name.empty()) j["trace"] = trace_name;
        j["policy"] = name;
        j["offline_oracle"] = is_offline(r.policy);
        j["config"] = config_json(r.config, true);
        j["hits"] = r.hits;
        j["misses"] = r.misses;
        j["evictions"] = r.evictions;
        j["hit_ratio_percent"] = r.hit_ratio_percent;
        return j.dump(2) + "\n";
    }
    case ReportFormat::Csv:
    case ReportFormat::PlotData: {
        std::ostringstream os;
        if (is_offline(r.policy)) os << "# " << kOracleNote << '\n';
        os << "policy,capacity,sets,hits,misses,evictions,hit_ratio\n"
           << name << ',' << r.config.capacity << ',' << r.config.num_sets << ',' << r.hits << ','
           << r.misses << ',' << r.evictions << ',' << format_percent(r.hit_ratio_percent) << '\n';
        return os.str();
    }
    }
    return {};
}

ComparisonTable parse_csv(std::string_view text) {
    ComparisonTable table;
    bool have_header = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split(line, ',');
        if (!have_header) {
            if (fields.empty() || fields[0] != "capacity") {
                throw ParseError(line_no, raw, "expected a 'capacity,...' header");
            }
            for (std::size_t i = 1; i < fields.size(); ++i) {
                const auto kind = parse_policy_kind(fields[i]);
                if (!kind) throw ParseError(line_no, raw, "unknown policy '" + std::string(fields[i]) + "'");
                table.policies.push_back(*kind);
            }
            table.ratios.assign(table.policies.size(), {});
            have_header = true;
            continue;
        }
        if (fields.size() != table.policies.size() + 1) {
            throw ParseError(line_no, raw, "wrong number of columns");
        }
        const auto cap = parse_address(fields[0]);
        if (!cap || *cap == 0) throw ParseError(line_no, raw, "invalid capacity");
        table.capacities.push_back(*cap);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            const std::string cell(fields[i]);
            std::size_t used = 0;
            double value = 0.0;
            try {
                value = std::stod(cell, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != cell.size()) throw ParseError(line_no, raw, "invalid ratio");
            table.ratios[i - 1].push_back(value);
        }
    }
    if (!have_header) throw ParseError("csv table has no header");
    return table;
}

} // namespace awrpsim
