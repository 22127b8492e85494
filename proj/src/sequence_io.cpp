#include "addrep/sequence_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "addrep/errors.hpp"

namespace addrep {

namespace {

std::string trim(const std::string& s) {
    const auto* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

IntegerSequence parse_sequence_text(std::istream& in, const std::string& source_name) {
    std::string raw;
    std::size_t line_no = 0;
    bool have_bound = false;
    std::uint64_t bound = 0;
    std::vector<std::uint64_t> elements;

    while (std::getline(in, raw)) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (line.rfind("bound=", 0) == 0) {
            if (have_bound) fail(source_name, line_no, "duplicate bound header");
            if (!elements.empty()) fail(source_name, line_no, "bound header must precede elements");
            if (!parse_u64(trim(line.substr(6)), bound)) fail(source_name, line_no, "malformed bound '" + line + "'");
            have_bound = true;
            continue;
        }

        if (!have_bound) fail(source_name, line_no, "missing 'bound=<N>' header before first element");
        std::uint64_t v = 0;
        if (!parse_u64(line, v)) fail(source_name, line_no, "not a non-negative integer: '" + line + "'");
        if (v > bound) fail(source_name, line_no, "element " + line + " exceeds bound " + std::to_string(bound));
        if (!elements.empty() && v <= elements.back()) {
            fail(source_name, line_no, "elements must be strictly ascending (" + line + " after " +
                                           std::to_string(elements.back()) + ")");
        }
        elements.push_back(v);
    }
    if (!have_bound) fail(source_name, line_no, "missing 'bound=<N>' header");
    return IntegerSequence(std::move(elements), bound);
}

IntegerSequence parse_sequence_json(const std::string& text, const std::string& source_name) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source_name + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("bound") || !j.contains("elements")) {
        throw ParseError(source_name + ": expected {\"bound\": N, \"elements\": [...]}");
    }
    try {
        auto bound = j.at("bound").get<std::uint64_t>();
        auto elements = j.at("elements").get<std::vector<std::uint64_t>>();
        return IntegerSequence(std::move(elements), bound);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source_name + ": " + e.what());
    } catch (const SequenceError& e) {
        throw ParseError(source_name + ": " + e.what());
    }
}

IntegerSequence read_sequence(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open sequence file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    auto text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_sequence_json(text, path.string());
    std::istringstream lines(text);
    return parse_sequence_text(lines, path.string());
}

void write_sequence_text(std::ostream& out, const IntegerSequence& a) {
    out << "bound=" << a.bound() << '\n';
    for (auto e : a.elements()) out << e << '\n';
}

void write_sequence_file(const std::filesystem::path& path, const IntegerSequence& a) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    write_sequence_text(out, a);
}

}  // namespace addrep
