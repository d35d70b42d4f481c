#include "diffposet/formats.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "diffposet/threads.hpp"

namespace diffposet {

std::string PosetValidationError::describe(const ValidationReport& report) {
    std::ostringstream os;
    os << "poset failed validation with " << report.violations.size() << " violation(s)";
    if (!report.violations.empty()) os << ": " << report.violations.front().message;
    return os.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string token;
    while (is >> token) tokens.push_back(token);
    return tokens;
}

std::uint32_t parse_uint(const std::string& token, int line, const char* what) {
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(token, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" +
                                   token + "'");
    }
    if (pos != token.size() || token[0] == '-')
        throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" +
                                   token + "'");
    return static_cast<std::uint32_t>(value);
}

}  // namespace

GradedPoset parse_poset_text(const std::string& text) {
    std::istringstream input(text);
    std::string raw;
    int line_no = 0;

    std::optional<std::vector<std::uint32_t>> sizes;
    std::vector<std::vector<std::vector<std::uint32_t>>> up;
    std::vector<std::vector<std::string>> labels;

    while (std::getline(input, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        std::string line = (hash == std::string::npos) ? raw : raw.substr(0, hash);
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        const std::string& directive = tokens[0];
        if (directive == "ranks") {
            if (sizes) throw ParseError(line_no, "duplicate ranks header");
            if (tokens.size() < 2) throw ParseError(line_no, "ranks header needs at least one size");
            std::vector<std::uint32_t> parsed;
            for (std::size_t i = 1; i < tokens.size(); ++i)
                parsed.push_back(parse_uint(tokens[i], line_no, "rank size"));
            sizes = std::move(parsed);
            up.assign(sizes->size() - 1, {});
            for (std::size_t n = 0; n + 1 < sizes->size(); ++n) up[n].assign((*sizes)[n], {});
            labels.assign(sizes->size(), {});
            for (std::size_t n = 0; n < sizes->size(); ++n) labels[n].assign((*sizes)[n], "");
            continue;
        }
        if (!sizes) throw ParseError(line_no, "ranks header must come before '" + directive + "'");

        if (directive == "edge") {
            if (tokens.size() != 4 && tokens.size() != 5)
                throw ParseError(line_no, "edge needs 'edge n i j' or 'edge n i m j'");
            const std::uint32_t n = parse_uint(tokens[1], line_no, "rank");
            const std::uint32_t i = parse_uint(tokens[2], line_no, "lower index");
            std::uint32_t upper_rank = n + 1;
            std::uint32_t j;
            if (tokens.size() == 5) {
                upper_rank = parse_uint(tokens[3], line_no, "upper rank");
                j = parse_uint(tokens[4], line_no, "upper index");
            } else {
                j = parse_uint(tokens[3], line_no, "upper index");
            }
            if (upper_rank != n + 1)
                throw ParseError(line_no, "non-consecutive cover: rank " + std::to_string(n) +
                                              " to rank " + std::to_string(upper_rank));
            if (n + 1 >= sizes->size())
                throw ParseError(line_no, "edge rank " + std::to_string(n) + " outside declared ranks");
            if (i >= (*sizes)[n])
                throw ParseError(line_no, "lower index " + std::to_string(i) + " outside rank " +
                                              std::to_string(n));
            if (j >= (*sizes)[n + 1])
                throw ParseError(line_no, "upper index " + std::to_string(j) + " outside rank " +
                                              std::to_string(n + 1));
            up[n][i].push_back(j);
            continue;
        }
        if (directive == "label") {
            if (tokens.size() < 4) throw ParseError(line_no, "label needs 'label n i <text>'");
            const std::uint32_t n = parse_uint(tokens[1], line_no, "rank");
            const std::uint32_t i = parse_uint(tokens[2], line_no, "index");
            if (n >= sizes->size() || i >= (*sizes)[n])
                throw ParseError(line_no, "label target outside declared ranks");
            std::string text_label = tokens[3];
            for (std::size_t t = 4; t < tokens.size(); ++t) text_label += " " + tokens[t];
            labels[n][i] = std::move(text_label);
            continue;
        }
        throw ParseError(line_no, "unknown directive '" + directive + "'");
    }
    if (!sizes) throw ParseError(line_no, "missing ranks header");

    bool any_label = false;
    for (const auto& rank : labels)
        for (const auto& l : rank)
            if (!l.empty()) any_label = true;
    if (any_label) {
        // fill unlabeled elements with their canonical handle
        for (std::size_t n = 0; n < labels.size(); ++n)
            for (std::size_t i = 0; i < labels[n].size(); ++i)
                if (labels[n][i].empty())
                    labels[n][i] = std::to_string(n) + ":" + std::to_string(i);
    } else {
        labels.clear();
    }
    return GradedPoset(std::move(*sizes), std::move(up), std::move(labels));
}

std::string serialize_poset_text(const GradedPoset& poset) {
    std::ostringstream os;
    os << "# graded poset, " << poset.max_rank() + 1 << " ranks\n";
    os << "ranks";
    for (int n = 0; n <= poset.max_rank(); ++n) os << " " << poset.rank_size(n);
    os << "\n";
    if (poset.has_labels())
        for (int n = 0; n <= poset.max_rank(); ++n)
            for (std::uint32_t i = 0; i < poset.rank_size(n); ++i)
                os << "label " << n << " " << i << " " << poset.label({n, i}) << "\n";
    for (int n = 0; n < poset.max_rank(); ++n)
        for (std::uint32_t i = 0; i < poset.rank_size(n); ++i)
            for (std::uint32_t j : poset.up(n, i)) os << "edge " << n << " " << i << " " << j << "\n";
    return os.str();
}

std::string export_dot(const GradedPoset& poset, DotHighlight highlight) {
    std::ostringstream os;
    os << "digraph poset {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
    for (int n = 0; n <= poset.max_rank(); ++n) {
        os << "  { rank=same;";
        for (std::uint32_t i = 0; i < poset.rank_size(n); ++i) os << " n" << n << "_" << i << ";";
        os << " }\n";
        for (std::uint32_t i = 0; i < poset.rank_size(n); ++i) {
            os << "  n" << n << "_" << i << " [label=\"" << poset.label({n, i}) << "\"";
            if (highlight == DotHighlight::Threads && n >= 1 && is_thread_element(poset, {n, i}))
                os << ", fillcolor=white, fontcolor=black";
            os << "];\n";
        }
    }
    for (int n = 0; n < poset.max_rank(); ++n)
        for (std::uint32_t i = 0; i < poset.rank_size(n); ++i)
            for (std::uint32_t j : poset.up(n, i))
                os << "  n" << n << "_" << i << " -> n" << n + 1 << "_" << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace diffposet
