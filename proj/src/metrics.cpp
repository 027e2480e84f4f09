#include "skypar/metrics.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace skypar {

namespace {

const char* kCsvHeader =
    "dataset,mode,n,dims,strategy,slices,partitions,rep_requested,cores,cap,"
    "normalized,seed,instances,g_max,skyline_size,rep_effective,rep_tests,"
    "input_parallel_max,input_final_tests,parallel_max_sum,final_sum,"
    "simulated_cost,wall_parallel_ms,wall_total_ms,resistance_hist,"
    "row_index,intervals,iter_parallel_max,iter_final_tests";

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s, const char* what) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("report parse: bad ") + what + ": '" + s + "'");
    return v;
}

long long parse_int(const std::string& s, const char* what) {
    long long v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("report parse: bad ") + what + ": '" + s + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("report parse: bad ") + what + ": '" + s + "'");
    return v;
}

const std::string& checked_text(const std::string& s, const char* what) {
    if (s.find_first_of(",|\n\r") != std::string::npos)
        throw std::invalid_argument(std::string("report field ") + what +
                                    " must not contain ',', '|' or newlines: '" + s + "'");
    return s;
}

std::string hist_to_string(const std::map<int, double>& hist) {
    std::string out;
    for (const auto& [denom, count] : hist) {
        if (!out.empty()) out += '|';
        out += std::to_string(denom);
        out += ':';
        out += fmt_double(count);
    }
    return out;
}

std::map<int, double> hist_from_string(const std::string& s) {
    std::map<int, double> hist;
    if (s.empty()) return hist;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '|')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("report parse: bad histogram entry '" + item + "'");
        hist[static_cast<int>(parse_int(item.substr(0, colon), "histogram denominator"))] =
            parse_double(item.substr(colon + 1), "histogram count");
    }
    return hist;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

// everything but the rows, used to group CSV lines back into reports
bool same_report_head(const RunReport& a, const RunReport& b) {
    return a.dataset == b.dataset && a.mode == b.mode && a.n == b.n && a.dims == b.dims &&
           a.strategy == b.strategy && a.slices == b.slices && a.partitions == b.partitions &&
           a.rep_requested == b.rep_requested && a.cores == b.cores && a.cap == b.cap &&
           a.normalized == b.normalized && a.seed == b.seed && a.instances == b.instances &&
           a.g_max == b.g_max && a.skyline_size == b.skyline_size &&
           a.rep_effective == b.rep_effective && a.rep_tests == b.rep_tests &&
           a.input_parallel_max == b.input_parallel_max &&
           a.input_final_tests == b.input_final_tests &&
           a.parallel_max_sum == b.parallel_max_sum && a.final_sum == b.final_sum &&
           a.simulated_cost == b.simulated_cost && a.wall_parallel_ms == b.wall_parallel_ms &&
           a.wall_total_ms == b.wall_total_ms && a.resistance_hist == b.resistance_hist;
}

void append_csv(const RunReport& r, std::string& out) {
    std::string head;
    head += checked_text(r.dataset, "dataset");
    head += ',';
    head += checked_text(r.mode, "mode");
    head += ',';
    head += std::to_string(r.n);
    head += ',';
    head += std::to_string(r.dims);
    head += ',';
    head += checked_text(r.strategy, "strategy");
    head += ',';
    head += std::to_string(r.slices);
    head += ',';
    head += std::to_string(r.partitions);
    head += ',';
    head += std::to_string(r.rep_requested);
    head += ',';
    head += std::to_string(r.cores);
    head += ',';
    head += std::to_string(r.cap);
    head += ',';
    head += (r.normalized ? "1" : "0");
    head += ',';
    head += std::to_string(r.seed);
    head += ',';
    head += std::to_string(r.instances);
    head += ',';
    head += std::to_string(r.g_max);
    head += ',';
    head += fmt_double(r.skyline_size);
    head += ',';
    head += fmt_double(r.rep_effective);
    head += ',';
    head += fmt_double(r.rep_tests);
    head += ',';
    head += fmt_double(r.input_parallel_max);
    head += ',';
    head += fmt_double(r.input_final_tests);
    head += ',';
    head += fmt_double(r.parallel_max_sum);
    head += ',';
    head += fmt_double(r.final_sum);
    head += ',';
    head += fmt_double(r.simulated_cost);
    head += ',';
    head += fmt_double(r.wall_parallel_ms);
    head += ',';
    head += fmt_double(r.wall_total_ms);
    head += ',';
    head += hist_to_string(r.resistance_hist);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const ReportRow& row = r.rows[i];
        out += head;
        out += ',';
        out += std::to_string(i);
        out += ',';
        out += std::to_string(row.intervals);
        out += ',';
        out += fmt_double(row.parallel_max);
        out += ',';
        out += fmt_double(row.final_tests);
        out += '\n';
    }
}

nlohmann::json to_json(const RunReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ReportRow& row : r.rows)
        rows.push_back({row.intervals, row.parallel_max, row.final_tests});
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [denom, count] : r.resistance_hist)
        hist[std::to_string(denom)] = count;
    return nlohmann::json{
        {"config",
         {{"dataset", r.dataset},
          {"mode", r.mode},
          {"n", r.n},
          {"dims", r.dims},
          {"strategy", r.strategy},
          {"slices", r.slices},
          {"partitions", r.partitions},
          {"rep_requested", r.rep_requested},
          {"cores", r.cores},
          {"cap", r.cap},
          {"normalized", r.normalized},
          {"seed", r.seed}}},
        {"instances", r.instances},
        {"g_max", r.g_max},
        {"skyline_size", r.skyline_size},
        {"rep_effective", r.rep_effective},
        {"rep_tests", r.rep_tests},
        {"input_parallel_max", r.input_parallel_max},
        {"input_final_tests", r.input_final_tests},
        {"rows", rows},
        {"totals",
         {{"parallel_max_sum", r.parallel_max_sum},
          {"final_sum", r.final_sum},
          {"simulated_cost", r.simulated_cost},
          {"wall_parallel_ms", r.wall_parallel_ms},
          {"wall_total_ms", r.wall_total_ms}}},
        {"resistance_hist", hist}};
}

RunReport from_json(const nlohmann::json& j) {
    RunReport r;
    const auto& cfg = j.at("config");
    r.dataset = cfg.at("dataset").get<std::string>();
    r.mode = cfg.at("mode").get<std::string>();
    r.n = cfg.at("n").get<std::uint64_t>();
    r.dims = cfg.at("dims").get<int>();
    r.strategy = cfg.at("strategy").get<std::string>();
    r.slices = cfg.at("slices").get<int>();
    r.partitions = cfg.at("partitions").get<long long>();
    r.rep_requested = cfg.at("rep_requested").get<int>();
    r.cores = cfg.at("cores").get<int>();
    r.cap = cfg.at("cap").get<int>();
    r.normalized = cfg.at("normalized").get<bool>();
    r.seed = cfg.at("seed").get<std::uint64_t>();
    r.instances = j.at("instances").get<int>();
    r.g_max = j.at("g_max").get<int>();
    r.skyline_size = j.at("skyline_size").get<double>();
    r.rep_effective = j.at("rep_effective").get<double>();
    r.rep_tests = j.at("rep_tests").get<double>();
    r.input_parallel_max = j.at("input_parallel_max").get<double>();
    r.input_final_tests = j.at("input_final_tests").get<double>();
    for (const auto& row : j.at("rows"))
        r.rows.push_back(ReportRow{row.at(0).get<int>(), row.at(1).get<double>(),
                                   row.at(2).get<double>()});
    const auto& totals = j.at("totals");
    r.parallel_max_sum = totals.at("parallel_max_sum").get<double>();
    r.final_sum = totals.at("final_sum").get<double>();
    r.simulated_cost = totals.at("simulated_cost").get<double>();
    r.wall_parallel_ms = totals.at("wall_parallel_ms").get<double>();
    r.wall_total_ms = totals.at("wall_total_ms").get<double>();
    for (const auto& [key, value] : j.at("resistance_hist").items())
        r.resistance_hist[static_cast<int>(parse_int(key, "histogram denominator"))] =
            value.get<double>();
    return r;
}

} // namespace

ReportFormat report_format_from_name(const std::string& name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "jsonl") return ReportFormat::JsonLines;
    throw std::invalid_argument("unknown report format: " + name + " (expected csv|jsonl)");
}

long long report_scale_factor(const RunReport& r) {
    return (r.partitions + r.cores - 1) / r.cores;
}

double simulated_cost_from_rows(const std::vector<ReportRow>& rows, long long scale_factor) {
    double parallel = 0, final_part = 0;
    for (const ReportRow& row : rows)
        parallel += row.parallel_max * static_cast<double>(scale_factor);
    for (const ReportRow& row : rows) final_part += row.final_tests;
    return parallel + final_part;
}

RunReport aggregate_reports(const std::vector<RunReport>& reports) {
    if (reports.empty())
        throw std::invalid_argument("aggregate_reports: no reports");
    const RunReport& first = reports.front();
    for (const RunReport& r : reports) {
        bool same = r.dataset == first.dataset && r.mode == first.mode && r.n == first.n &&
                    r.dims == first.dims && r.strategy == first.strategy &&
                    r.slices == first.slices && r.partitions == first.partitions &&
                    r.rep_requested == first.rep_requested && r.cores == first.cores &&
                    r.cap == first.cap && r.normalized == first.normalized &&
                    r.g_max == first.g_max && r.rows.size() == first.rows.size();
        for (std::size_t i = 0; same && i < r.rows.size(); ++i)
            same = r.rows[i].intervals == first.rows[i].intervals;
        if (!same)
            throw std::invalid_argument(
                "aggregate_reports: reports differ in configuration, not just seed");
    }

    RunReport out = first;
    out.instances = 0;
    const double count = static_cast<double>(reports.size());

    auto mean_of = [&](double RunReport::*field) {
        double sum = 0;
        for (const RunReport& r : reports) sum += r.*field;
        return sum / count;
    };
    out.skyline_size = mean_of(&RunReport::skyline_size);
    out.rep_effective = mean_of(&RunReport::rep_effective);
    out.rep_tests = mean_of(&RunReport::rep_tests);
    out.input_parallel_max = mean_of(&RunReport::input_parallel_max);
    out.input_final_tests = mean_of(&RunReport::input_final_tests);
    out.wall_parallel_ms = mean_of(&RunReport::wall_parallel_ms);
    out.wall_total_ms = mean_of(&RunReport::wall_total_ms);

    for (std::size_t i = 0; i < out.rows.size(); ++i) {
        double pm = 0, fin = 0;
        for (const RunReport& r : reports) {
            pm += r.rows[i].parallel_max;
            fin += r.rows[i].final_tests;
        }
        out.rows[i].parallel_max = pm / count;
        out.rows[i].final_tests = fin / count;
    }

    out.resistance_hist.clear();
    for (const RunReport& r : reports)
        for (const auto& [denom, c] : r.resistance_hist) out.resistance_hist[denom] += c;
    for (auto& [denom, c] : out.resistance_hist) c /= count;

    for (const RunReport& r : reports) out.instances += r.instances;

    // totals from the averaged records, keeping the sum invariants exact
    out.parallel_max_sum = 0;
    out.final_sum = 0;
    for (const ReportRow& row : out.rows) out.parallel_max_sum += row.parallel_max;
    for (const ReportRow& row : out.rows) out.final_sum += row.final_tests;
    out.simulated_cost = simulated_cost_from_rows(out.rows, report_scale_factor(out));
    return out;
}

std::string serialize_report(const RunReport& report, ReportFormat format) {
    return serialize_reports(std::vector<RunReport>{report}, format);
}

std::string serialize_reports(const std::vector<RunReport>& reports, ReportFormat format) {
    std::string out;
    if (format == ReportFormat::Csv) {
        out += kCsvHeader;
        out += '\n';
        for (const RunReport& r : reports) append_csv(r, out);
    } else {
        for (const RunReport& r : reports) {
            out += to_json(r).dump();
            out += '\n';
        }
    }
    return out;
}

std::vector<RunReport> parse_reports(const std::string& text, ReportFormat format) {
    std::vector<RunReport> reports;
    std::stringstream ss(text);
    std::string line;
    if (format == ReportFormat::JsonLines) {
        while (std::getline(ss, line)) {
            if (line.empty()) continue;
            reports.push_back(from_json(nlohmann::json::parse(line)));
        }
        return reports;
    }

    if (!std::getline(ss, line))
        throw std::invalid_argument("report parse: empty CSV input");
    if (split_csv_line(line) != split_csv_line(kCsvHeader))
        throw std::invalid_argument("report parse: unexpected CSV header: '" + line + "'");
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 29)
            throw std::invalid_argument("report parse: expected 29 CSV fields, got " +
                                        std::to_string(f.size()));
        RunReport r;
        r.dataset = f[0];
        r.mode = f[1];
        r.n = parse_u64(f[2], "n");
        r.dims = static_cast<int>(parse_int(f[3], "dims"));
        r.strategy = f[4];
        r.slices = static_cast<int>(parse_int(f[5], "slices"));
        r.partitions = parse_int(f[6], "partitions");
        r.rep_requested = static_cast<int>(parse_int(f[7], "rep_requested"));
        r.cores = static_cast<int>(parse_int(f[8], "cores"));
        r.cap = static_cast<int>(parse_int(f[9], "cap"));
        r.normalized = parse_int(f[10], "normalized") != 0;
        r.seed = parse_u64(f[11], "seed");
        r.instances = static_cast<int>(parse_int(f[12], "instances"));
        r.g_max = static_cast<int>(parse_int(f[13], "g_max"));
        r.skyline_size = parse_double(f[14], "skyline_size");
        r.rep_effective = parse_double(f[15], "rep_effective");
        r.rep_tests = parse_double(f[16], "rep_tests");
        r.input_parallel_max = parse_double(f[17], "input_parallel_max");
        r.input_final_tests = parse_double(f[18], "input_final_tests");
        r.parallel_max_sum = parse_double(f[19], "parallel_max_sum");
        r.final_sum = parse_double(f[20], "final_sum");
        r.simulated_cost = parse_double(f[21], "simulated_cost");
        r.wall_parallel_ms = parse_double(f[22], "wall_parallel_ms");
        r.wall_total_ms = parse_double(f[23], "wall_total_ms");
        r.resistance_hist = hist_from_string(f[24]);
        std::size_t row_index = static_cast<std::size_t>(parse_int(f[25], "row_index"));
        ReportRow row{static_cast<int>(parse_int(f[26], "intervals")),
                      parse_double(f[27], "iter_parallel_max"),
                      parse_double(f[28], "iter_final_tests")};
        if (row_index != 0 && !reports.empty() && same_report_head(reports.back(), r) &&
            reports.back().rows.size() == row_index) {
            reports.back().rows.push_back(row);
        } else if (row_index != 0) {
            throw std::invalid_argument("report parse: row_index out of sequence");
        } else {
            r.rows.push_back(row);
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

} // namespace skypar
