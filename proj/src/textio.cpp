#include "fspp/textio.hpp"

#include <fstream>
#include <sstream>

namespace fspp {

namespace {

struct Line {
    std::string text;
    int number;  // 1-based, comment lines counted
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        size_t start = raw.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (raw[start] == '#') continue;
        lines.push_back({raw, number});
    }
    return lines;
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int16_t parse_token(const std::string& tok, const ParseOptions& options, int line, int column) {
    if (tok == "F") {
        if (!options.allow_frozen) throw ParseError("Frozen cells not allowed here", line, column);
        return -1;
    }
    if (tok == "a") {
        if (!options.allow_placeholder)
            throw ParseError("placeholder token 'a' not allowed here", line, column);
        return kPlaceholder;
    }
    if (tok.size() == 1 && tok[0] >= '0' && tok[0] <= '4') return static_cast<int16_t>(tok[0] - '0');
    throw ParseError("bad cell token '" + tok + "' (want 0..4, F or a)", line, column);
}

}  // namespace

RawGrid parse_raw(const std::string& text, const ParseOptions& options) {
    std::vector<Line> lines = significant_lines(text);
    size_t at = 0;
    auto need = [&](const char* what) -> const Line& {
        if (at >= lines.size())
            throw ParseError(std::string("unexpected end of input, expected ") + what,
                             lines.empty() ? 1 : lines.back().number + 1, 1);
        return lines[at++];
    };

    const Line& magic = need("magic line 'FSPP 1'");
    if (split_tokens(magic.text) != std::vector<std::string>{"FSPP", "1"})
        throw ParseError("bad magic line, expected 'FSPP 1'", magic.number, 1);

    RawGrid grid;
    if (at < lines.size()) {
        std::vector<std::string> toks = split_tokens(lines[at].text);
        if (!toks.empty() && toks[0] == "MACRO") {
            if (!options.allow_macro)
                throw ParseError("MACRO header not allowed here", lines[at].number, 1);
            if (toks.size() != 3)
                throw ParseError("MACRO header wants '<reduction-id> <case>'", lines[at].number, 1);
            grid.macro = MacroHeader{toks[1], toks[2]};
            ++at;
        }
    }

    const Line& dims = need("dimensions line '<width> <height>'");
    {
        std::vector<std::string> toks = split_tokens(dims.text);
        auto as_dim = [&](const std::string& t) {
            try {
                size_t used = 0;
                int v = std::stoi(t, &used);
                if (used != t.size() || v < 1) throw std::invalid_argument("");
                return v;
            } catch (...) {
                throw ParseError("bad dimension '" + t + "'", dims.number, 1);
            }
        };
        if (toks.size() != 2) throw ParseError("dimensions line wants two integers", dims.number, 1);
        grid.width = as_dim(toks[0]);
        grid.height = as_dim(toks[1]);
    }

    grid.cells.assign(static_cast<size_t>(grid.width) * grid.height, 0);
    for (int row = 0; row < grid.height; ++row) {
        const Line& line = need("grid row");
        std::vector<std::string> toks = split_tokens(line.text);
        if (static_cast<int>(toks.size()) != grid.width)
            throw ParseError("row has " + std::to_string(toks.size()) + " tokens, want " +
                                 std::to_string(grid.width),
                             line.number, 1);
        const int y = grid.height - 1 - row;  // file lists the top row first
        for (int x = 0; x < grid.width; ++x)
            grid.cells[static_cast<size_t>(y) * grid.width + x] =
                parse_token(toks[x], options, line.number, x + 1);
    }
    if (at != lines.size())
        throw ParseError("trailing content after the grid", lines[at].number, 1);
    return grid;
}

Configuration parse_config(const std::string& text) {
    RawGrid raw = parse_raw(text, ParseOptions{});
    Configuration config(raw.width, raw.height);
    config.raw_cells() = raw.cells;
    return config;
}

std::string serialize_config(const Configuration& config) {
    std::ostringstream out;
    out << "FSPP 1\n" << config.width() << " " << config.height() << "\n";
    out << render(config);
    return out.str();
}

std::string render(const Configuration& config) {
    std::ostringstream out;
    for (int y = config.height() - 1; y >= 0; --y) {
        for (int x = 0; x < config.width(); ++x) {
            if (x) out << ' ';
            CellValue v = config.at({x, y});
            if (v.is_frozen())
                out << 'F';
            else
                out << v.grains();
        }
        out << '\n';
    }
    return out.str();
}

std::string render_trace(const Trace& trace) {
    std::ostringstream out;
    for (int y = trace.height() - 1; y >= 0; --y) {
        for (int x = 0; x < trace.width(); ++x) {
            if (x) out << ' ';
            auto t = trace.firing_time({x, y});
            if (t)
                out << *t;
            else
                out << '.';
        }
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace fspp
