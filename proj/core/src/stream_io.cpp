#include "dynclust/stream_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <tuple>

#include "dynclust/errors.hpp"

namespace dynclust {

std::string format_double(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

namespace {

class LineReader {
public:
    explicit LineReader(std::istream &in) : in_(in) {}

    /// Next non-blank, non-comment line split into whitespace tokens.
    bool next(std::vector<std::string_view> &tokens) {
        while (std::getline(in_, line_)) {
            ++number_;
            if (!line_.empty() && line_.back() == '\r')
                throw ParseError(number_, "CR line endings are not supported");
            tokens.clear();
            std::string_view rest(line_);
            while (!rest.empty()) {
                auto start = rest.find_first_not_of(" \t");
                if (start == std::string_view::npos)
                    break;
                rest.remove_prefix(start);
                auto stop = rest.find_first_of(" \t");
                tokens.push_back(rest.substr(0, stop));
                rest.remove_prefix(stop == std::string_view::npos ? rest.size() : stop);
            }
            if (tokens.empty() || tokens.front().front() == '#')
                continue;
            return true;
        }
        return false;
    }

    std::size_t line() const noexcept { return number_; }

private:
    std::istream &in_;
    std::string line_;
    std::size_t number_ = 0;
};

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char *what) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, std::string("bad ") + what + " '" + std::string(token) + "'");
    return value;
}

void expect_arity(const std::vector<std::string_view> &tokens, std::size_t n, std::size_t line) {
    if (tokens.size() != n)
        throw ParseError(line, "expected " + std::to_string(n) + " fields, got " +
                                   std::to_string(tokens.size()));
}

std::ofstream open_for_write(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

std::ifstream open_for_read(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    return in;
}

} // namespace

void write_stream(std::ostream &out, const DynamicGraph &dg) {
    out << "DYNGRAPH " << kStreamVersion << '\n';
    out << "N " << dg.initial.node_count() << '\n';
    for (const Edge &e : dg.initial.edges())
        out << "E " << e.u << ' ' << e.v << ' ' << format_double(e.weight) << '\n';
    for (const ChangeSet &cs : dg.steps) {
        out << "T " << cs.step_index << '\n';
        for (const EdgeChange &c : cs.changes) {
            switch (c.kind) {
            case ChangeKind::Add:
                out << "+ " << c.u << ' ' << c.v << ' ' << format_double(c.weight) << '\n';
                break;
            case ChangeKind::Remove:
                out << "- " << c.u << ' ' << c.v << '\n';
                break;
            case ChangeKind::Reweight:
                out << "~ " << c.u << ' ' << c.v << ' ' << format_double(c.weight) << '\n';
                break;
            }
        }
    }
}

DynamicGraph read_stream(std::istream &in) {
    LineReader reader(in);
    std::vector<std::string_view> tok;

    if (!reader.next(tok))
        throw ParseError(reader.line(), "empty stream");
    if (tok.front() != "DYNGRAPH" || tok.size() != 2)
        throw ParseError(reader.line(), "missing DYNGRAPH header");
    if (const int version = parse_number<int>(tok[1], reader.line(), "version"); version != kStreamVersion)
        throw VersionMismatch("stream version " + std::to_string(version) + " is not supported (expected " +
                              std::to_string(kStreamVersion) + ")");

    if (!reader.next(tok) || tok.front() != "N")
        throw ParseError(reader.line(), "missing N line");
    expect_arity(tok, 2, reader.line());
    const auto n = parse_number<std::size_t>(tok[1], reader.line(), "node count");

    DynamicGraph dg{Graph(n), {}};
    std::set<std::tuple<ChangeKind, NodeId, NodeId>> seen;

    auto read_edge = [&](bool with_weight) {
        expect_arity(tok, with_weight ? 4 : 3, reader.line());
        auto u = parse_number<NodeId>(tok[1], reader.line(), "node id");
        auto v = parse_number<NodeId>(tok[2], reader.line(), "node id");
        if (u >= n || v >= n)
            throw ParseError(reader.line(), "node id out of range");
        if (u > v)
            std::swap(u, v);
        double w = with_weight ? parse_number<double>(tok[3], reader.line(), "weight") : 0.0;
        if (with_weight && !(w > 0.0))
            throw ParseError(reader.line(), "weights must be positive");
        return std::tuple{u, v, w};
    };

    while (reader.next(tok)) {
        const std::string_view tag = tok.front();
        if (tag == "E") {
            if (!dg.steps.empty())
                throw ParseError(reader.line(), "initial edge after first step");
            auto [u, v, w] = read_edge(true);
            try {
                dg.initial.add_edge(u, v, w);
            } catch (const DuplicateEdge &e) {
                throw ParseError(reader.line(), e.what());
            }
        } else if (tag == "T") {
            expect_arity(tok, 2, reader.line());
            dg.steps.push_back(ChangeSet{parse_number<std::size_t>(tok[1], reader.line(), "step index"), {}});
            seen.clear();
        } else if (tag == "+" || tag == "-" || tag == "~") {
            if (dg.steps.empty())
                throw ParseError(reader.line(), "change line before any T line");
            const ChangeKind kind = tag == "+" ? ChangeKind::Add : tag == "-" ? ChangeKind::Remove : ChangeKind::Reweight;
            auto [u, v, w] = read_edge(kind != ChangeKind::Remove);
            if (!seen.emplace(kind, u, v).second)
                throw ParseError(reader.line(), "duplicate change within one step");
            dg.steps.back().changes.push_back(EdgeChange{kind, u, v, w});
        } else {
            throw ParseError(reader.line(), "unknown record '" + std::string(tag) + "'");
        }
    }
    return dg;
}

void save_stream(const DynamicGraph &dg, const std::filesystem::path &path) {
    auto out = open_for_write(path);
    write_stream(out, dg);
    if (!out)
        throw IoError("failed writing " + path.string());
}

DynamicGraph load_stream(const std::filesystem::path &path) {
    auto in = open_for_read(path);
    return read_stream(in);
}

void write_ground_truth(std::ostream &out, const std::vector<GroundTruth> &truth) {
    for (const GroundTruth &gt : truth) {
        out << "GT " << gt.step_index << '\n';
        for (std::size_t i = 0; i < gt.labels.size(); ++i)
            out << "C " << i << ' ' << gt.labels[i] << '\n';
    }
}

std::vector<GroundTruth> read_ground_truth(std::istream &in) {
    LineReader reader(in);
    std::vector<std::string_view> tok;
    std::vector<GroundTruth> truth;
    while (reader.next(tok)) {
        if (tok.front() == "GT") {
            expect_arity(tok, 2, reader.line());
            truth.push_back(GroundTruth{parse_number<std::size_t>(tok[1], reader.line(), "step index"), {}});
        } else if (tok.front() == "C") {
            if (truth.empty())
                throw ParseError(reader.line(), "C line before any GT line");
            expect_arity(tok, 3, reader.line());
            const auto node = parse_number<std::size_t>(tok[1], reader.line(), "node id");
            const auto cluster = parse_number<ClusterId>(tok[2], reader.line(), "cluster id");
            auto &labels = truth.back().labels;
            if (node != labels.size())
                throw ParseError(reader.line(), "C lines must list nodes in order");
            labels.push_back(cluster);
        } else {
            throw ParseError(reader.line(), "unknown record '" + std::string(tok.front()) + "'");
        }
    }
    return truth;
}

void save_ground_truth(const std::vector<GroundTruth> &truth, const std::filesystem::path &path) {
    auto out = open_for_write(path);
    write_ground_truth(out, truth);
    if (!out)
        throw IoError("failed writing " + path.string());
}

std::vector<GroundTruth> load_ground_truth(const std::filesystem::path &path) {
    auto in = open_for_read(path);
    return read_ground_truth(in);
}

} // namespace dynclust
