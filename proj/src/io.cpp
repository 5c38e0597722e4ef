#include "shepherd/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace shepherd {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    for (;;) {
        const auto pos = s.find(sep);
        out.push_back(trim(s.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        s.remove_prefix(pos + 1);
    }
    return out;
}

double parse_real(std::string_view key, std::string_view text) {
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
        throw UsageError("invalid number '" + std::string(text) + "' for " + std::string(key));
    return v;
}

long parse_integer(std::string_view key, std::string_view text) {
    text = trim(text);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw UsageError("invalid integer '" + std::string(text) + "' for " + std::string(key));
    return v;
}

Vec2 parse_vec(std::string_view key, std::string_view text) {
    text = trim(text);
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
    const auto parts = split(text, ',');
    if (parts.size() != 2) throw UsageError("expected 'x,y' for " + std::string(key));
    return {parse_real(key, parts[0]), parse_real(key, parts[1])};
}

std::string exact(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void apply_setting(ScenarioConfig& c, std::string_view key, std::string_view value) {
    key = trim(key);
    if (key == "N") {
        const long n = parse_integer(key, value);
        if (n < 1) throw UsageError("N must be at least 1");
        c.num_sheep = static_cast<std::size_t>(n);
    } else if (key == "rho") c.density = parse_real(key, value);
    else if (key == "g_r") c.goal.radius = parse_real(key, value);
    else if (key == "r_d") c.dog.contact_radius = parse_real(key, value);
    else if (key == "T") c.horizon = parse_integer(key, value);
    else if (key == "r_s") c.sheep.interaction_radius = parse_real(key, value);
    else if (key == "K_s1") c.sheep.separation_gain = parse_real(key, value);
    else if (key == "K_s2") c.sheep.alignment_gain = parse_real(key, value);
    else if (key == "K_s3") c.sheep.cohesion_gain = parse_real(key, value);
    else if (key == "K_s4") c.sheep.flight_gain = parse_real(key, value);
    else if (key == "K_d1") c.dog.attraction_gain = parse_real(key, value);
    else if (key == "K_d2") c.dog.repulsion_gain = parse_real(key, value);
    else if (key == "K_d3") c.dog.destination_gain = parse_real(key, value);
    else if (key == "x_g") c.goal.center = parse_vec(key, value);
    else if (key == "x_d0") c.dog_start = parse_vec(key, value);
    else if (key == "warmup_steps") c.warmup_steps = parse_integer(key, value);
    else throw UsageError("unknown configuration key '" + std::string(key) + "'");
}

ScenarioConfig parse_config(std::string_view text, ScenarioConfig base) {
    std::size_t line_no = 0;
    for (std::string_view line : split(text, '\n')) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw UsageError("line " + std::to_string(line_no) + ": expected key = value");
        try {
            apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
        } catch (const UsageError& e) {
            throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    try {
        base.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return base;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_config(ss.str());
    } catch (const UsageError& e) {
        throw UsageError(path.string() + ": " + e.what());
    }
}

std::string format_config(const ScenarioConfig& c) {
    std::ostringstream os;
    os << "N = " << c.num_sheep << '\n'
       << "rho = " << exact(c.density) << '\n'
       << "x_g = " << exact(c.goal.center.x) << ',' << exact(c.goal.center.y) << '\n'
       << "g_r = " << exact(c.goal.radius) << '\n'
       << "r_d = " << exact(c.dog.contact_radius) << '\n'
       << "T = " << c.horizon << '\n'
       << "x_d0 = " << exact(c.dog_start.x) << ',' << exact(c.dog_start.y) << '\n'
       << "r_s = " << exact(c.sheep.interaction_radius) << '\n'
       << "K_s1 = " << exact(c.sheep.separation_gain) << '\n'
       << "K_s2 = " << exact(c.sheep.alignment_gain) << '\n'
       << "K_s3 = " << exact(c.sheep.cohesion_gain) << '\n'
       << "K_s4 = " << exact(c.sheep.flight_gain) << '\n'
       << "K_d1 = " << exact(c.dog.attraction_gain) << '\n'
       << "K_d2 = " << exact(c.dog.repulsion_gain) << '\n'
       << "K_d3 = " << exact(c.dog.destination_gain) << '\n'
       << "warmup_steps = " << c.warmup_steps << '\n';
    return os.str();
}

std::vector<GridCell> parse_grid(std::string_view text) {
    const auto halves = split(text, ';');
    if (halves.size() != 2) throw UsageError("grid must look like 'N1,N2;rho1,rho2'");
    std::vector<std::size_t> ns;
    for (auto s : split(halves[0], ',')) {
        const long n = parse_integer("grid N", s);
        if (n < 1) throw UsageError("grid N values must be at least 1");
        ns.push_back(static_cast<std::size_t>(n));
    }
    std::vector<double> rhos;
    for (auto s : split(halves[1], ',')) {
        const double r = parse_real("grid rho", s);
        if (!(r > 0.0)) throw UsageError("grid rho values must be positive");
        rhos.push_back(r);
    }
    std::vector<GridCell> out;
    for (std::size_t n : ns)
        for (double r : rhos) out.push_back({n, r});
    return out;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_tour(std::ostream& os, const Tour& tour) {
    for (std::size_t i = 0; i < tour.size(); ++i) os << tour[i] + 1 << '\n';
}

void write_cost_trace(std::ostream& os, const std::vector<double>& trace) {
    os << "iteration,incumbent_cost\n";
    for (std::size_t i = 0; i < trace.size(); ++i) os << i + 1 << ',' << format_number(trace[i]) << '\n';
}

void write_trajectory(std::ostream& os, const RunRecord& run) {
    const std::size_t n = run.sheep_traces.empty() ? 0 : run.sheep_traces.front().size();
    os << "step,dog_x,dog_y";
    for (std::size_t i = 1; i <= n; ++i) os << ",sheep_" << i << "_x,sheep_" << i << "_y";
    os << '\n';
    for (std::size_t k = 0; k < run.dog_trace.size(); ++k) {
        os << k << ',' << format_number(run.dog_trace[k].x) << ',' << format_number(run.dog_trace[k].y);
        for (const Vec2& p : run.sheep_traces[k]) os << ',' << format_number(p.x) << ',' << format_number(p.y);
        os << '\n';
    }
}

void write_phases(std::ostream& os, const RunRecord& run) {
    os << "step,mode,nu\n";
    for (const PhaseEvent& e : run.phase_trace)
        os << e.step << ',' << to_string(e.phase.mode) << ',' << e.phase.next_position + 1 << '\n';
}

void write_trial_records(std::ostream& os, const std::vector<TrialRecord>& records) {
    os << "N,rho,trial,method,success,k_end,J,tour_cost_initial,tour_cost_final\n";
    for (const TrialRecord& r : records) {
        os << r.num_sheep << ',' << format_number(r.density) << ',' << r.trial + 1 << ',' << r.method.name() << ','
           << (r.success ? 1 : 0) << ',' << r.k_end << ',' << format_number(r.distance) << ','
           << (r.tour_cost_initial ? format_number(*r.tour_cost_initial) : "") << ','
           << (r.tour_cost_final ? format_number(*r.tour_cost_final) : "") << '\n';
    }
}

void write_summaries(std::ostream& os, const std::vector<CellSummary>& summaries) {
    os << "N,rho,method,trials,success_rate,mean_J_successes,mean_J_all\n";
    for (const CellSummary& s : summaries) {
        os << s.num_sheep << ',' << format_number(s.density) << ',' << s.method.name() << ',' << s.trials << ','
           << format_number(s.success_rate) << ',' << format_number(s.mean_distance_successes) << ','
           << format_number(s.mean_distance_all) << '\n';
    }
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace shepherd
