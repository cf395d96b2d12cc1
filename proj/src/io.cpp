#include <edl/io.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace edl {

GraphFormat parse_graph_format(std::string_view name)
{
    if (name == "adm")
        return GraphFormat::adm;
    if (name == "json")
        return GraphFormat::json;
    if (name == "dot")
        return GraphFormat::dot;
    throw DomainError("unknown graph format '" + std::string(name) + "' (expected adm, json or dot)");
}

std::string_view format_name(GraphFormat f)
{
    switch (f) {
    case GraphFormat::adm: return "adm";
    case GraphFormat::json: return "json";
    case GraphFormat::dot: return "dot";
    }
    return "?";
}

DenseDigraph parse_adm(std::string_view text)
{
    std::size_t pos = 0;
    int line_no = 0;
    auto next_line = [&](std::string_view & line) {
        ++line_no;
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size())
                throw ParseError("line is not newline-terminated", line_no, static_cast<int>(text.size() - pos) + 1);
            throw ParseError("unexpected end of input", line_no);
        }
        line = text.substr(pos, nl - pos);
        pos = nl + 1;
    };

    std::string_view header;
    next_line(header);
    int n = 0;
    auto [end, ec] = std::from_chars(header.data(), header.data() + header.size(), n);
    if (header.empty() || ec != std::errc() || end != header.data() + header.size())
        throw ParseError("expected the vertex count as a decimal integer", 1, 1);
    if (n < 1 || n > kMaxOrder)
        throw ParseError("vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder), 1, 1);

    DenseDigraph d(n);
    for (int i = 0; i < n; ++i) {
        std::string_view row;
        next_line(row);
        for (std::size_t j = 0; j < row.size() && j < static_cast<std::size_t>(n); ++j) {
            char c = row[j];
            if (c != '0' && c != '1')
                throw ParseError(std::string("unexpected character '") + c + "'", line_no, static_cast<int>(j) + 1);
            if (c == '1') {
                if (static_cast<int>(j) == i)
                    throw ParseError("self-loop on the diagonal", line_no, static_cast<int>(j) + 1);
                d.add_arc(i, static_cast<int>(j));
            }
        }
        if (row.size() != static_cast<std::size_t>(n))
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n),
                             line_no, static_cast<int>(std::min(row.size(), static_cast<std::size_t>(n))) + 1);
    }
    if (pos != text.size())
        throw ParseError("trailing content after the last matrix row", line_no + 1, 1);
    return d;
}

std::string to_adm(const DenseDigraph & d)
{
    std::string out = std::to_string(d.order()) + "\n";
    for (int i = 0; i < d.order(); ++i) {
        for (int j = 0; j < d.order(); ++j)
            out.push_back(d.has_arc(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

Json to_json(const DenseDigraph & d)
{
    Json arcs = Json::array();
    for (auto [from, to] : arc_list(d))
        arcs.push_back({from, to});
    return {{"n", d.order()}, {"arcs", std::move(arcs)}};
}

DenseDigraph digraph_from_json(const Json & j)
{
    if (! j.is_object() || ! j.contains("n") || ! j.contains("arcs"))
        throw ParseError("digraph JSON needs the fields \"n\" and \"arcs\"", 0);
    if (! j["n"].is_number_integer())
        throw ParseError("\"n\" must be an integer", 0);
    int n = j["n"].get<int>();
    if (n < 1 || n > kMaxOrder)
        throw ParseError("vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder), 0);
    if (! j["arcs"].is_array())
        throw ParseError("\"arcs\" must be an array", 0);
    DenseDigraph d(n);
    int index = 0;
    for (const auto & arc : j["arcs"]) {
        if (! arc.is_array() || arc.size() != 2 || ! arc[0].is_number_integer() || ! arc[1].is_number_integer())
            throw ParseError("arc #" + std::to_string(index) + " is not a pair of integers", 0);
        int from = arc[0].get<int>();
        int to = arc[1].get<int>();
        if (from < 0 || from >= n || to < 0 || to >= n)
            throw ParseError("arc #" + std::to_string(index) + " references a vertex outside 0.." + std::to_string(n - 1), 0);
        if (from == to)
            throw ParseError("arc #" + std::to_string(index) + " is a self-loop", 0);
        d.add_arc(from, to);
        ++index;
    }
    return d;
}

DenseDigraph parse_json_digraph(std::string_view text)
{
    Json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    }
    catch (const nlohmann::ordered_json::parse_error & e) {
        // Translate the byte offset into a line/column pair.
        std::size_t offset = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        int line = 1, column = 1;
        for (std::size_t k = 0; k < offset; ++k) {
            if (text[k] == '\n') {
                ++line;
                column = 1;
            }
            else
                ++column;
        }
        throw ParseError("malformed JSON", line, column);
    }
    return digraph_from_json(j);
}

std::string to_dot(const DenseDigraph & d)
{
    std::ostringstream out;
    out << "digraph D {\n";
    for (int v = 0; v < d.order(); ++v)
        out << "  v" << v << ";\n";
    for (auto [from, to] : arc_list(d))
        out << "  v" << from << " -> v" << to << ";\n";
    out << "}\n";
    return out.str();
}

std::string serialize(const DenseDigraph & d, GraphFormat f)
{
    switch (f) {
    case GraphFormat::adm: return to_adm(d);
    case GraphFormat::json: return to_json(d).dump() + "\n";
    case GraphFormat::dot: return to_dot(d);
    }
    return {};
}

DenseDigraph parse(std::string_view text, GraphFormat f)
{
    switch (f) {
    case GraphFormat::adm: return parse_adm(text);
    case GraphFormat::json: return parse_json_digraph(text);
    case GraphFormat::dot: throw DomainError("DOT is an export-only format");
    }
    throw DomainError("unknown format");
}

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string & path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (! out)
        throw Error("cannot open '" + path + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (! out)
        throw Error("failed writing '" + path + "'");
}

} // namespace edl
