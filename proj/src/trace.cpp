#include "qlab/trace.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

namespace qlab {

namespace {

const std::string kHeader = "time_s,size_bytes";

[[noreturn]] void fail(const std::string& path, std::size_t line,
                       const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

bool parse_double(std::string_view s, double& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

bool parse_int(std::string_view s, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Trace load_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty trace file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader)
        fail(path, 1, "expected header '" + kHeader + "', got '" + line + "'");

    Trace trace;
    trace.label = path;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        auto comma = line.find(',');
        if (comma == std::string::npos) fail(path, lineno, "malformed row (no comma)");
        PacketRecord rec;
        if (!parse_double(std::string_view(line).substr(0, comma), rec.t) || rec.t < 0)
            fail(path, lineno, "malformed time field '" + line.substr(0, comma) + "'");
        if (!parse_int(std::string_view(line).substr(comma + 1), rec.size) || rec.size < 1)
            fail(path, lineno, "malformed size field '" + line.substr(comma + 1) + "'");
        if (!trace.packets.empty() && rec.t < trace.packets.back().t)
            fail(path, lineno,
                 "decreasing timestamp at line " + std::to_string(lineno) + " (" +
                     std::to_string(trace.packets.back().t) + " at line " +
                     std::to_string(lineno - 1) + " followed by " +
                     std::to_string(rec.t) + ")");
        trace.packets.push_back(rec);
    }
    if (trace.packets.empty()) throw std::runtime_error("trace has no packets: " + path);
    return trace;
}

void save_trace(const Trace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write trace file: " + path);
    out << kHeader << '\n';
    char buf[64];
    for (const auto& p : trace.packets) {
        // %.17g round-trips doubles exactly
        std::snprintf(buf, sizeof buf, "%.17g", p.t);
        out << buf << ',' << p.size << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

TraceSummary summarize_trace(const Trace& trace) {
    validate_trace(trace);
    TraceSummary s;
    s.n_packets = trace.packets.size();
    s.duration = trace.packets.back().t - trace.packets.front().t;
    s.total_bytes = 0;
    for (const auto& p : trace.packets) s.total_bytes += p.size;
    s.mean_rate = s.duration > 0
                      ? static_cast<double>(s.total_bytes) / s.duration
                      : std::numeric_limits<double>::quiet_NaN();
    return s;
}

Trace take_window(const Trace& trace, std::size_t start_index, std::size_t n) {
    if (n < 1) throw std::invalid_argument("window size must be >= 1");
    if (start_index > trace.packets.size() || n > trace.packets.size() - start_index)
        throw std::out_of_range("window [" + std::to_string(start_index) + ", " +
                                std::to_string(start_index + n) +
                                ") exceeds trace length " +
                                std::to_string(trace.packets.size()));
    Trace out;
    out.label = trace.label;
    out.packets.reserve(n);
    const double t0 = trace.packets[start_index].t;
    for (std::size_t i = start_index; i < start_index + n; ++i)
        out.packets.push_back({trace.packets[i].t - t0, trace.packets[i].size});
    return out;
}

void validate_trace(const Trace& trace) {
    if (trace.packets.empty()) throw std::invalid_argument("trace is empty");
    for (std::size_t i = 1; i < trace.packets.size(); ++i)
        if (trace.packets[i].t < trace.packets[i - 1].t)
            throw std::invalid_argument("trace timestamps decrease at index " +
                                        std::to_string(i));
}

}  // namespace qlab
