#include "edgeband/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "edgeband/numeric.hpp"
#include "json.hpp"

namespace edgeband {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
    throw SchemaError("instance schema: " + where + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) schema_fail(where, std::string("missing key \"") + key + "\"");
    return j.at(key);
}

double need_num(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number()) schema_fail(where, std::string("\"") + key + "\" must be a number");
    return v.get<double>();
}

GCurve parse_g(const json& j, const std::string& where) {
    const json& fam = need(j, "family", where);
    if (!fam.is_string()) schema_fail(where, "\"family\" must be a string");
    std::string family = fam.get<std::string>();

    if (family == "tabulated") {
        const json& pts = need(j, "points", where);
        if (!pts.is_array() || pts.size() < 2)
            schema_fail(where, "\"points\" must be an array of at least 2 [rho, value] pairs");
        std::vector<std::pair<double, double>> points;
        points.reserve(pts.size());
        for (const auto& p : pts) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
                schema_fail(where, "each point must be a [rho, value] number pair");
            points.emplace_back(p[0].get<double>(), p[1].get<double>());
        }
        return GCurve::tabulated(std::move(points));
    }

    const json& coeffs = need(j, "coeffs", where);
    if (family == "quadratic") {
        return GCurve::quadratic(need_num(coeffs, "a", where), need_num(coeffs, "c", where),
                                 need_num(coeffs, "d", where));
    }
    if (family == "log_saturation") {
        return GCurve::log_saturation(need_num(coeffs, "m0", where), need_num(coeffs, "gain", where),
                                      need_num(coeffs, "k", where));
    }
    if (family == "exp_saturation") {
        return GCurve::exp_saturation(need_num(coeffs, "m0", where), need_num(coeffs, "gain", where),
                                      need_num(coeffs, "k", where));
    }
    schema_fail(where, "unknown g family \"" + family + "\"");
}

PhiCurve parse_phi(const json& j, const std::string& where) {
    const json& fam = need(j, "family", where);
    if (!fam.is_string()) schema_fail(where, "\"family\" must be a string");
    std::string family = fam.get<std::string>();
    if (family == "identity") return PhiCurve::identity();
    const json& coeffs = need(j, "coeffs", where);
    if (family == "power") return PhiCurve::power(need_num(coeffs, "gamma", where));
    if (family == "exp_saturation") return PhiCurve::exp_saturation(need_num(coeffs, "k", where));
    schema_fail(where, "unknown phi family \"" + family + "\"");
}

}  // namespace

ProblemInstance instance_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("instance is not valid JSON: ") + e.what());
    }

    ProblemInstance inst;
    const json& params = need(j, "params", "top level");
    inst.params.bandwidth_hz = need_num(params, "B", "params");
    inst.params.uplink_efficiency = need_num(params, "S_u", "params");
    inst.params.downlink_efficiency = need_num(params, "S_d", "params");
    inst.params.frame_rate = need_num(params, "N", "params");
    inst.params.frame_params = need_num(params, "F", "params");
    inst.params.total_time_s = need_num(params, "T_total", "params");
    inst.params.model_params = need_num(params, "M_max", "params");
    inst.params.bits_per_param = need_num(params, "b", "params");

    const json& levels = need(j, "levels", "top level");
    if (!levels.is_array()) schema_fail("top level", "\"levels\" must be an array");
    for (size_t i = 0; i < levels.size(); ++i) {
        std::string where = "levels[" + std::to_string(i) + "]";
        QuantLevelModel level;
        level.q = need_num(levels[i], "q", where);
        level.g = parse_g(need(levels[i], "g", where), where + ".g");
        inst.levels.push_back(std::move(level));
    }

    const json& fusion = need(j, "fusion", "top level");
    inst.fusion.map_pre = need_num(fusion, "mAP_pre", "fusion");
    inst.fusion.phi = parse_phi(need(fusion, "phi", "fusion"), "fusion.phi");
    return inst;
}

ProblemInstance load_instance(const std::string& path) {
    return instance_from_json_text(read_file(path));
}

std::string result_to_json(const AllocationResult& r) {
    ordered_json j;
    j["M_opt"] = r.m_opt;
    j["M_opt_int"] = static_cast<long long>(r.m_opt_int);
    j["q_opt"] = r.q_opt;
    j["rho_opt"] = r.rho_opt;
    j["T_u_opt"] = r.t_u_opt;
    j["T_d_opt"] = r.t_d_opt;
    j["mAP_star_opt"] = r.map_star_opt;
    j["mAP_opt"] = r.map_opt;
    ordered_json d;
    d["active_segment"] = r.diagnostics.active_segment;
    d["objective_evaluations"] = r.diagnostics.objective_evaluations;
    d["envelope_knots"] = r.diagnostics.envelope_knots;
    d["mAP_at_floor"] = r.diagnostics.map_at_floor;
    d["mAP_at_ceil"] = r.diagnostics.map_at_ceil;
    d["no_downlink"] = r.diagnostics.no_downlink;
    j["diagnostics"] = std::move(d);
    return j.dump(2) + "\n";
}

std::string oracle_result_to_json(const OracleResult& r) {
    ordered_json j;
    j["M"] = r.best.m;
    j["rho"] = r.best.rho;
    j["q"] = r.best.q;
    j["level"] = r.best.level;
    j["T_u"] = r.best.t_u;
    j["T_d"] = r.best.t_d;
    j["mAP_star"] = r.best.map_star;
    j["mAP"] = r.best.map;
    j["visited"] = r.visited;
    j["feasible"] = r.feasible;
    return j.dump(2) + "\n";
}

std::string envelope_to_csv(const Envelope& envelope, int samples) {
    std::vector<double> ms = num::linspace(0.0, envelope.domain_hi(), std::max(2, samples));
    ms.insert(ms.end(), envelope.knots().begin(), envelope.knots().end());
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

    std::string out = "M,L_M,q,rho\n";
    for (double m : ms) {
        EnvelopePoint pt = envelope.evaluate(m);
        double q = envelope.boundaries()[static_cast<size_t>(pt.level)].q;
        out += num::fmt(m);
        out += ',';
        out += num::fmt(pt.value);
        out += ',';
        out += num::fmt(q);
        out += ',';
        out += num::fmt(pt.rho);
        out += '\n';
    }
    return out;
}

namespace {

bool has_column(const SweepTable& t, const std::string& name) {
    return std::find(t.columns.begin(), t.columns.end(), name) != t.columns.end();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    cells.push_back(cur);
    return cells;
}

double parse_double(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::runtime_error("sweep CSV: bad number \"" + s + "\"");
    return v;
}

}  // namespace

std::string sweep_to_csv(const SweepTable& table) {
    std::string out;
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    bool none_col = has_column(table, "mAP_none_update");
    bool fixed_col = has_column(table, "mAP_fixed");
    for (const auto& row : table.rows) {
        out += table.param;
        out += ',';
        out += num::fmt(row.value);
        out += ',';
        out += row.status;
        out += ',';
        out += num::fmt(row.map_opt);
        if (none_col) {
            out += ',';
            out += num::fmt(row.map_none_update.value_or(0.0));
        }
        if (fixed_col) {
            out += ',';
            out += num::fmt(row.map_fixed.value_or(0.0));
        }
        for (double v : {row.m_opt, row.q_opt, row.rho_opt, row.t_u_opt, row.t_d_opt,
                         row.uplink_bits, row.downlink_bits}) {
            out += ',';
            out += num::fmt(v);
        }
        out += '\n';
    }
    return out;
}

SweepTable sweep_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("sweep CSV: empty input");
    SweepTable table;
    table.columns = split_csv_line(line);
    bool none_col = has_column(table, "mAP_none_update");
    bool fixed_col = has_column(table, "mAP_fixed");
    size_t expected = 11 + (none_col ? 1 : 0) + (fixed_col ? 1 : 0);
    if (table.columns.size() != expected) throw std::runtime_error("sweep CSV: unexpected header");

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != expected) throw std::runtime_error("sweep CSV: ragged row");
        size_t at = 0;
        table.param = cells[at++];
        SweepRow row;
        row.value = parse_double(cells[at++]);
        row.status = cells[at++];
        row.map_opt = parse_double(cells[at++]);
        if (none_col) row.map_none_update = parse_double(cells[at++]);
        if (fixed_col) row.map_fixed = parse_double(cells[at++]);
        row.m_opt = parse_double(cells[at++]);
        row.q_opt = parse_double(cells[at++]);
        row.rho_opt = parse_double(cells[at++]);
        row.t_u_opt = parse_double(cells[at++]);
        row.t_d_opt = parse_double(cells[at++]);
        row.uplink_bits = parse_double(cells[at++]);
        row.downlink_bits = parse_double(cells[at++]);
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace edgeband
