#include "ckpt/dist_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ckpt/errors.hpp"

namespace ckpt {

namespace {

constexpr const char* kHeaderTag = "# ckpt-dist v1 ";

std::int64_t parse_int(std::string_view text, const std::string& what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("bad integer for " + what + ": '" + std::string(text) + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

FaultDistribution read_distribution(std::istream& in, const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(source_name + ": empty file");

    std::string_view header = trim(line);
    if (!header.starts_with(kHeaderTag))
        throw ParseError(source_name + ": missing '# ckpt-dist v1' header");
    header.remove_prefix(std::string_view(kHeaderTag).size());

    Cycle t_start = 0;
    Cycle t_end = 0;
    bool have_start = false;
    bool have_end = false;
    std::istringstream fields{std::string(header)};
    std::string field;
    while (fields >> field) {
        if (field.starts_with("t_start=")) {
            t_start = parse_int(std::string_view(field).substr(8), "t_start");
            have_start = true;
        } else if (field.starts_with("t_end=")) {
            t_end = parse_int(std::string_view(field).substr(6), "t_end");
            have_end = true;
        } else {
            throw ParseError(source_name + ": unknown header field '" + field + "'");
        }
    }
    if (!have_start || !have_end)
        throw ParseError(source_name + ": header must carry t_start and t_end");

    std::vector<FaultEntry> pairs;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#')
            continue;
        const std::size_t comma = s.find(',');
        if (comma == std::string_view::npos)
            throw ParseError(source_name + ":" + std::to_string(line_no) +
                             ": expected '<time>,<count>'");
        FaultEntry e;
        e.time = parse_int(trim(s.substr(0, comma)), "time");
        e.count = parse_int(trim(s.substr(comma + 1)), "count");
        pairs.push_back(e);
    }
    try {
        return build_distribution(std::move(pairs), t_start, t_end);
    } catch (const ValidationError& ex) {
        throw ParseError(source_name + ": " + ex.what());
    }
}

FaultDistribution read_distribution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open distribution file: " + path);
    return read_distribution(in, path);
}

void write_distribution(std::ostream& out, const FaultDistribution& d,
                        const std::vector<std::string>& extra_comments) {
    out << kHeaderTag << "t_start=" << d.t_start << " t_end=" << d.t_end << '\n';
    for (const std::string& c : extra_comments)
        out << "# " << c << '\n';
    for (const FaultEntry& e : d.entries)
        out << e.time << ',' << e.count << '\n';
}

void write_distribution_file(const std::string& path, const FaultDistribution& d,
                             const std::vector<std::string>& extra_comments) {
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot write distribution file: " + path);
    write_distribution(out, d, extra_comments);
}

void write_savings_csv(std::ostream& out, const SavingsReport& report) {
    out << "# saved=" << report.saved << " baseline=" << report.baseline
        << " remaining=" << report.remaining << " reduction=" << format_double(report.reduction)
        << '\n';
    out << "left,right,height,area\n";
    for (const SavingsRect& r : report.rectangles)
        out << r.left << ',' << r.right << ',' << r.height << ',' << r.area << '\n';
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

} // namespace ckpt
