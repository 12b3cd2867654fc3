#include "lbi/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace lbi {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Field {
    std::string text;
    std::size_t column;  // 1-based character offset of the field start
};

std::vector<Field> split_fields(const std::string& line) {
    std::vector<Field> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        const std::string raw =
            comma == std::string::npos ? line.substr(start) : line.substr(start, comma - start);
        fields.push_back(Field{trim(raw), start + 1});
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return fields;
}

double parse_number(const Field& f, const std::string& file, std::size_t line) {
    const char* begin = f.text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
        throw ParseError(file, line, f.column, "expected a number, got '" + f.text + "'");
    return v;
}

std::optional<double> try_parse_number(const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

// Names observed in first-appearance order, with representative values
// when every name parses as a number.
class InferredAlphabet {
public:
    std::size_t index_of(const std::string& name) {
        const auto it = lookup_.find(name);
        if (it != lookup_.end()) return it->second;
        const std::size_t idx = names_.size();
        lookup_[name] = idx;
        names_.push_back(name);
        return idx;
    }

    Alphabet build() const {
        std::vector<double> values;
        values.reserve(names_.size());
        bool numeric = true;
        for (const auto& n : names_) {
            const auto v = try_parse_number(n);
            if (!v) { numeric = false; break; }
            values.push_back(*v);
        }
        if (numeric && !values.empty()) {
            // Sort bins by value so representatives are increasing.
            std::vector<std::size_t> order(values.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
            std::vector<std::string> names;
            std::vector<double> sorted;
            for (std::size_t i : order) {
                names.push_back(names_[i]);
                sorted.push_back(values[i]);
            }
            return Alphabet(std::move(names), std::move(sorted));
        }
        std::vector<double> indices(names_.size());
        for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = double(i);
        return Alphabet(names_, std::move(indices));
    }

    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> lookup_;
};

std::size_t alphabet_index(const Alphabet& a, const std::string& name,
                           const std::string& file, std::size_t line, std::size_t col) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.name(i) == name) return i;
    }
    throw ParseError(file, line, col, "'" + name + "' not in declared alphabet");
}

}  // namespace

ParseError::ParseError(const std::string& file, std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error(file + ":" + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message) {}

std::string format_double(double v) {
    if (v == 0.0) return "0";  // normalize -0
    char buf[64];
    std::string best;
    for (int prec = 1; prec <= 12; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        // among all round-tripping forms keep the shortest, so integral
        // values print as "100" rather than "1e+02"
        if (std::strtod(buf, nullptr) == v &&
            (best.empty() || std::string(buf).size() < best.size()))
            best = buf;
    }
    if (!best.empty()) return best;
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

ParsedJoint read_joint_csv(const std::string& path,
                           const std::optional<Alphabet>& instance_alphabet,
                           const std::optional<Alphabet>& label_alphabet) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw ParseError(path, 1, 1, "empty file");
    const auto header = split_fields(lines[0]);
    if (header.size() != 3 || header[0].text != "x" ||
        (header[1].text != "y" && header[1].text != "z") ||
        (header[2].text != "count" && header[2].text != "prob"))
        throw ParseError(path, 1, 1, "expected header x,y,count or x,y,prob");
    const bool counts = header[2].text == "count";

    struct Cell { std::string x, y; double v; std::size_t line, col; };
    std::vector<Cell> cells;
    InferredAlphabet ix, iy;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        if (trim(lines[ln]).empty()) continue;
        const auto fields = split_fields(lines[ln]);
        if (fields.size() != 3)
            throw ParseError(path, ln + 1, 1, "expected 3 fields");
        const double v = parse_number(fields[2], path, ln + 1);
        if (v < 0.0)
            throw ParseError(path, ln + 1, fields[2].column, "negative value");
        if (counts && std::floor(v) != v)
            throw ParseError(path, ln + 1, fields[2].column, "count is not an integer");
        cells.push_back(Cell{fields[0].text, fields[1].text, v, ln + 1, fields[0].column});
        if (!instance_alphabet) ix.index_of(fields[0].text);
        if (!label_alphabet) iy.index_of(fields[1].text);
    }
    if (cells.empty()) throw ParseError(path, 1, 1, "no data rows");

    const Alphabet ax = instance_alphabet ? *instance_alphabet : ix.build();
    const Alphabet ay = label_alphabet ? *label_alphabet : iy.build();
    const std::size_t m = ax.size(), n = ay.size();
    std::vector<double> grid(m * n, 0.0);
    for (const auto& c : cells) {
        const std::size_t i = alphabet_index(ax, c.x, path, c.line, c.col);
        const std::size_t j = alphabet_index(ay, c.y, path, c.line, c.col);
        grid[i * n + j] += c.v;
    }
    JointDistribution joint = counts ? JointDistribution::from_counts(m, n, grid)
                                     : JointDistribution(m, n, std::move(grid));
    return ParsedJoint{ax, ay, std::move(joint)};
}

Alphabet read_alphabet_file(const std::string& path) {
    const auto lines = read_lines(path);
    std::vector<std::string> names;
    std::vector<double> values;
    bool has_values = false;
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::string t = trim(lines[ln]);
        if (t.empty()) continue;
        const auto fields = split_fields(t);
        if (fields.size() == 1) {
            names.push_back(fields[0].text);
            values.push_back(double(names.size() - 1));
        } else if (fields.size() == 2) {
            has_values = true;
            names.push_back(fields[0].text);
            values.push_back(parse_number(fields[1], path, ln + 1));
        } else {
            throw ParseError(path, ln + 1, 1, "expected `name` or `name,value`");
        }
    }
    if (names.empty()) throw ParseError(path, 1, 1, "empty alphabet file");
    (void)has_values;
    return Alphabet(std::move(names), std::move(values));
}

ParsedDistribution read_distribution_csv(const std::string& path, std::size_t bins,
                                         double range_lo, double range_hi) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw ParseError(path, 1, 1, "empty file");
    const auto header = split_fields(lines[0]);
    if (header.size() == 2 && header[0].text == "x" && header[1].text == "prob") {
        std::vector<std::string> names;
        std::vector<double> xs, ps;
        for (std::size_t ln = 1; ln < lines.size(); ++ln) {
            if (trim(lines[ln]).empty()) continue;
            const auto fields = split_fields(lines[ln]);
            if (fields.size() != 2)
                throw ParseError(path, ln + 1, 1, "expected 2 fields");
            names.push_back(fields[0].text);
            xs.push_back(parse_number(fields[0], path, ln + 1));
            ps.push_back(parse_number(fields[1], path, ln + 1));
        }
        if (xs.empty()) throw ParseError(path, 1, 1, "no data rows");
        return ParsedDistribution{Alphabet(std::move(names), std::move(xs)),
                                  normalize(ps)};
    }
    // Raw samples, one value per line, binned onto the requested grid.
    if (bins < 2) throw std::invalid_argument("bin count must be at least 2");
    const Alphabet a = Alphabet::binned(range_lo, range_hi, bins);
    std::vector<double> counts(bins, 0.0);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::string t = trim(lines[ln]);
        if (t.empty()) continue;
        const auto fields = split_fields(t);
        if (fields.size() != 1)
            throw ParseError(path, ln + 1, 1, "expected a single sample value");
        const double x = parse_number(fields[0], path, ln + 1);
        counts[a.nearest(x)] += 1.0;
    }
    return ParsedDistribution{a, normalize(counts)};
}

}  // namespace lbi
