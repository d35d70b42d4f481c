#include "diffposet/builders.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "diffposet/formats.hpp"

namespace diffposet {

namespace {

using Partition = std::vector<std::uint32_t>;  // parts, weakly decreasing

// a strictly before b in canonical order = descending lexicographic on the
// part sequences (a proper prefix sorts after its extensions)
bool partition_before(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

void gen_partitions(std::uint32_t remaining, std::uint32_t max_part, Partition& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (std::uint32_t p = std::min(max_part, remaining); p >= 1; --p) {
        current.push_back(p);
        gen_partitions(remaining - p, p, current, out);
        current.pop_back();
    }
}

// partitions of n in canonical (descending lexicographic) order
std::vector<Partition> partitions_of(std::uint32_t n) {
    std::vector<Partition> out;
    Partition current;
    gen_partitions(n, n == 0 ? 1 : n, current, out);
    return out;
}

// partitions obtained by adding one cell, each still weakly decreasing
std::vector<Partition> add_one_cell(const Partition& p) {
    std::vector<Partition> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i == 0 || p[i - 1] > p[i]) {
            Partition q = p;
            ++q[i];
            out.push_back(std::move(q));
        }
    }
    Partition q = p;
    q.push_back(1);
    out.push_back(std::move(q));
    return out;
}

std::string partition_label(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

using Tuple = std::vector<Partition>;

std::string tuple_label(const Tuple& t) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << partition_label(t[i]);
    }
    os << ")";
    return os.str();
}

void gen_tuples(int coords_left, std::uint32_t remaining,
                const std::vector<Partition>& candidates, Tuple& current,
                std::vector<Tuple>& out) {
    if (coords_left == 0) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    for (const Partition& p : candidates) {
        std::uint32_t size = 0;
        for (std::uint32_t part : p) size += part;
        if (size > remaining) continue;
        current.push_back(p);
        gen_tuples(coords_left - 1, remaining - size, candidates, current, out);
        current.pop_back();
    }
}

// sparse symmetric pair counts keyed by (x << 32) | y with x <= y
using PairCounts = std::vector<std::pair<std::uint64_t, std::int64_t>>;

std::uint64_t pair_key(std::uint32_t x, std::uint32_t y) {
    return (static_cast<std::uint64_t>(x) << 32) | y;
}

void sort_and_merge(std::vector<std::uint64_t>& events, PairCounts& out) {
    std::sort(events.begin(), events.end());
    out.clear();
    for (std::size_t i = 0; i < events.size();) {
        std::size_t j = i;
        while (j < events.size() && events[j] == events[i]) ++j;
        out.emplace_back(events[i], static_cast<std::int64_t>(j - i));
        i = j;
    }
}

std::int64_t lookup(const PairCounts& counts, std::uint32_t x, std::uint32_t y) {
    const std::uint64_t key = pair_key(x, y);
    auto it = std::lower_bound(counts.begin(), counts.end(), key,
                               [](const auto& p, std::uint64_t k) { return p.first < k; });
    return (it != counts.end() && it->first == key) ? it->second : 0;
}

std::int64_t sorted_intersection_size(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b) {
    std::int64_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

}  // namespace

GradedPoset build_young(int max_rank) {
    if (max_rank < 0) throw std::invalid_argument("build_young: negative max_rank");
    std::vector<std::vector<Partition>> ranks;
    for (int n = 0; n <= max_rank; ++n) ranks.push_back(partitions_of(static_cast<std::uint32_t>(n)));

    std::vector<std::uint32_t> sizes;
    std::vector<std::vector<std::string>> labels;
    for (const auto& rank : ranks) {
        sizes.push_back(static_cast<std::uint32_t>(rank.size()));
        std::vector<std::string> rank_labels;
        for (const auto& p : rank) rank_labels.push_back(partition_label(p));
        labels.push_back(std::move(rank_labels));
    }

    std::vector<std::vector<std::vector<std::uint32_t>>> up(static_cast<std::size_t>(max_rank));
    for (int n = 0; n < max_rank; ++n) {
        std::map<Partition, std::uint32_t> next_index;
        for (std::uint32_t j = 0; j < ranks[static_cast<std::size_t>(n) + 1].size(); ++j)
            next_index[ranks[static_cast<std::size_t>(n) + 1][j]] = j;
        auto& level = up[static_cast<std::size_t>(n)];
        level.resize(ranks[static_cast<std::size_t>(n)].size());
        for (std::uint32_t i = 0; i < level.size(); ++i)
            for (const Partition& q : add_one_cell(ranks[static_cast<std::size_t>(n)][i]))
                level[i].push_back(next_index.at(q));
    }
    return GradedPoset(std::move(sizes), std::move(up), std::move(labels));
}

GradedPoset build_young_power(int r, int max_rank) {
    if (r < 1) throw std::invalid_argument("build_young_power: r must be positive");
    if (max_rank < 0) throw std::invalid_argument("build_young_power: negative max_rank");

    std::vector<Partition> candidates;
    for (int n = 0; n <= max_rank; ++n)
        for (auto& p : partitions_of(static_cast<std::uint32_t>(n))) candidates.push_back(std::move(p));
    std::sort(candidates.begin(), candidates.end(), partition_before);

    std::vector<std::vector<Tuple>> ranks;
    for (int n = 0; n <= max_rank; ++n) {
        std::vector<Tuple> rank;
        Tuple current;
        gen_tuples(r, static_cast<std::uint32_t>(n), candidates, current, rank);
        ranks.push_back(std::move(rank));
    }

    std::vector<std::uint32_t> sizes;
    std::vector<std::vector<std::string>> labels;
    for (const auto& rank : ranks) {
        sizes.push_back(static_cast<std::uint32_t>(rank.size()));
        std::vector<std::string> rank_labels;
        for (const auto& t : rank) rank_labels.push_back(tuple_label(t));
        labels.push_back(std::move(rank_labels));
    }

    std::vector<std::vector<std::vector<std::uint32_t>>> up(static_cast<std::size_t>(max_rank));
    for (int n = 0; n < max_rank; ++n) {
        std::map<Tuple, std::uint32_t> next_index;
        for (std::uint32_t j = 0; j < ranks[static_cast<std::size_t>(n) + 1].size(); ++j)
            next_index[ranks[static_cast<std::size_t>(n) + 1][j]] = j;
        auto& level = up[static_cast<std::size_t>(n)];
        level.resize(ranks[static_cast<std::size_t>(n)].size());
        for (std::uint32_t i = 0; i < level.size(); ++i) {
            const Tuple& t = ranks[static_cast<std::size_t>(n)][i];
            for (int c = 0; c < r; ++c)
                for (const Partition& q : add_one_cell(t[static_cast<std::size_t>(c)])) {
                    Tuple next = t;
                    next[static_cast<std::size_t>(c)] = q;
                    level[i].push_back(next_index.at(next));
                }
        }
    }
    return GradedPoset(std::move(sizes), std::move(up), std::move(labels));
}

GradedPoset build_fibonacci(int r, int max_rank) {
    if (r < 1) throw std::invalid_argument("build_fibonacci: r must be positive");
    if (max_rank < 0) throw std::invalid_argument("build_fibonacci: negative max_rank");

    std::vector<std::uint32_t> sizes{1};
    std::vector<std::vector<std::string>> labels{{"0"}};
    std::vector<std::vector<std::vector<std::uint32_t>>> up;

    for (int next = 1; next <= max_rank; ++next) {
        const int n = next - 1;
        const std::uint32_t pn = sizes[static_cast<std::size_t>(n)];
        up.emplace_back(pn);
        auto& up_from_n = up.back();
        std::vector<std::string> new_labels;
        std::uint32_t new_index = 0;

        if (n >= 1) {
            // reflections: one per element two ranks down, covering exactly
            // the covers of its source
            const std::uint32_t below = sizes[static_cast<std::size_t>(n) - 1];
            for (std::uint32_t x = 0; x < below; ++x) {
                for (std::uint32_t y : up[static_cast<std::size_t>(n) - 1][x])
                    up_from_n[y].push_back(new_index);
                new_labels.push_back("[" + labels[static_cast<std::size_t>(n) - 1][x] + "]");
                ++new_index;
            }
        }
        for (std::uint32_t y = 0; y < pn; ++y)
            for (int i = 1; i <= r; ++i) {
                up_from_n[y].push_back(new_index);
                new_labels.push_back(labels[static_cast<std::size_t>(n)][y] + "." + std::to_string(i));
                ++new_index;
            }
        sizes.push_back(new_index);
        labels.push_back(std::move(new_labels));
    }
    return GradedPoset(std::move(sizes), std::move(up), std::move(labels));
}

BigInt zr_rank_size(int r, int n) {
    if (r < 1) throw std::invalid_argument("zr_rank_size: r must be positive");
    if (n < 0) throw std::invalid_argument("zr_rank_size: negative n");
    BigInt prev(1), cur(r);
    if (n == 0) return prev;
    for (int k = 2; k <= n; ++k) {
        BigInt next = r * cur + prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

GradedPoset import_poset(const std::string& text) {
    GradedPoset poset = parse_poset_text(text);
    ValidationReport report = validate(poset);
    if (!report.ok) throw PosetValidationError(report);
    return poset;
}

DifferentialReport verify_differential(const GradedPoset& poset, int r) {
    if (r < 1) throw std::invalid_argument("verify_differential: r must be positive");
    DifferentialReport report;
    report.r = r;
    report.verified_through = poset.max_rank() - 1;
    report.weakly_increasing = validate(poset).weakly_increasing;

    std::vector<std::uint64_t> events;
    PairCounts du, ud;
    for (int n = 0; n < poset.max_rank(); ++n) {
        const std::uint32_t pn = poset.rank_size(n);

        // operator route: DU_n from pairs under a common upper cover,
        // U_{n-1}D_n from pairs over a common lower cover
        events.clear();
        for (std::uint32_t z = 0; z < poset.rank_size(n + 1); ++z) {
            const auto& below = poset.down(n + 1, z);
            for (std::size_t a = 0; a < below.size(); ++a)
                for (std::size_t b = a; b < below.size(); ++b)
                    events.push_back(pair_key(below[a], below[b]));
        }
        sort_and_merge(events, du);

        events.clear();
        if (n >= 1) {
            for (std::uint32_t w = 0; w < poset.rank_size(n - 1); ++w) {
                const auto& above = poset.up(n - 1, w);
                for (std::size_t a = 0; a < above.size(); ++a)
                    for (std::size_t b = a; b < above.size(); ++b)
                        events.push_back(pair_key(above[a], above[b]));
            }
        }
        sort_and_merge(events, ud);

        // combinatorial route: direct common-cover counts per pair; the two
        // routes must agree entry by entry before the axiom is judged
        for (std::uint32_t x = 0; x < pn; ++x) {
            const auto& up_x = poset.up(n, x);
            for (std::uint32_t y = x; y < pn; ++y) {
                const std::int64_t common_up = sorted_intersection_size(up_x, poset.up(n, y));
                const std::int64_t common_down =
                    (n == 0) ? 0 : sorted_intersection_size(poset.down(n, x), poset.down(n, y));
                if (common_up != lookup(du, x, y) || common_down != lookup(ud, x, y))
                    throw std::logic_error(
                        "verify_differential: operator route disagrees with combinatorial route");
                const std::int64_t expected = common_down + (x == y ? r : 0);
                if (common_up != expected)
                    report.failures.push_back({n, {n, x}, {n, y}, expected, common_up});
            }
        }
    }
    return report;
}

}  // namespace diffposet
