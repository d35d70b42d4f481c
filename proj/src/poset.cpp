#include "diffposet/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffposet {

std::ostream& operator<<(std::ostream& os, const ElementRef& e) {
    return os << "(" << e.rank << "," << e.index << ")";
}

GradedPoset::GradedPoset(std::vector<std::uint32_t> rank_sizes,
                         std::vector<std::vector<std::vector<std::uint32_t>>> up_covers,
                         std::vector<std::vector<std::string>> labels)
    : rank_sizes_(std::move(rank_sizes)), up_(std::move(up_covers)), labels_(std::move(labels)) {
    if (rank_sizes_.empty()) throw std::invalid_argument("GradedPoset: no ranks");
    const std::size_t r = rank_sizes_.size();
    if (up_.size() + 1 != r)
        throw std::invalid_argument("GradedPoset: up_covers must have one entry per rank below the top");
    for (std::size_t n = 0; n + 1 < r; ++n) {
        if (up_[n].size() != rank_sizes_[n])
            throw std::invalid_argument("GradedPoset: up_covers size mismatch at rank " + std::to_string(n));
        for (auto& covers : up_[n]) {
            std::sort(covers.begin(), covers.end());
            for (std::uint32_t j : covers)
                if (j >= rank_sizes_[n + 1])
                    throw std::invalid_argument("GradedPoset: cover index out of range at rank " +
                                                std::to_string(n));
        }
    }
    if (!labels_.empty()) {
        if (labels_.size() != r)
            throw std::invalid_argument("GradedPoset: labels must cover every rank");
        for (std::size_t n = 0; n < r; ++n)
            if (labels_[n].size() != rank_sizes_[n])
                throw std::invalid_argument("GradedPoset: label count mismatch at rank " + std::to_string(n));
    }
    // derive the down adjacency as the exact transpose
    down_.assign(r, {});
    for (std::size_t n = 0; n < r; ++n) down_[n].assign(rank_sizes_[n], {});
    for (std::size_t n = 0; n + 1 < r; ++n)
        for (std::uint32_t i = 0; i < rank_sizes_[n]; ++i)
            for (std::uint32_t j : up_[n][i]) down_[n + 1][j].push_back(i);
    for (auto& rank : down_)
        for (auto& lst : rank) std::sort(lst.begin(), lst.end());
}

std::uint32_t GradedPoset::rank_size(int n) const {
    if (n < 0 || n > max_rank()) throw std::out_of_range("GradedPoset::rank_size: rank outside truncation");
    return rank_sizes_[static_cast<std::size_t>(n)];
}

const std::vector<std::uint32_t>& GradedPoset::up(int n, std::uint32_t i) const {
    if (n < 0 || n >= max_rank()) throw std::out_of_range("GradedPoset::up: rank outside truncation");
    if (i >= rank_sizes_[static_cast<std::size_t>(n)]) throw std::out_of_range("GradedPoset::up: index");
    return up_[static_cast<std::size_t>(n)][i];
}

const std::vector<std::uint32_t>& GradedPoset::down(int n, std::uint32_t i) const {
    if (n < 1 || n > max_rank()) throw std::out_of_range("GradedPoset::down: rank outside truncation");
    if (i >= rank_sizes_[static_cast<std::size_t>(n)]) throw std::out_of_range("GradedPoset::down: index");
    return down_[static_cast<std::size_t>(n)][i];
}

std::uint64_t GradedPoset::edge_count(int n) const {
    if (n < 0 || n >= max_rank()) throw std::out_of_range("GradedPoset::edge_count");
    std::uint64_t total = 0;
    for (const auto& covers : up_[static_cast<std::size_t>(n)]) total += covers.size();
    return total;
}

std::uint64_t GradedPoset::total_edges() const {
    std::uint64_t total = 0;
    for (int n = 0; n < max_rank(); ++n) total += edge_count(n);
    return total;
}

std::string GradedPoset::label(ElementRef e) const {
    if (!contains(e)) throw std::out_of_range("GradedPoset::label");
    if (labels_.empty()) return std::to_string(e.rank) + ":" + std::to_string(e.index);
    return labels_[static_cast<std::size_t>(e.rank)][e.index];
}

ValidationReport validate(const GradedPoset& poset) {
    ValidationReport report;
    if (poset.rank_size(0) != 1)
        report.violations.push_back({"rank0_size", 0, std::nullopt,
                                     "rank 0 must hold exactly the bottom element, found " +
                                         std::to_string(poset.rank_size(0))});
    for (int n = 0; n <= poset.max_rank(); ++n)
        if (poset.rank_size(n) == 0)
            report.violations.push_back({"empty_rank", n, std::nullopt,
                                         "rank " + std::to_string(n) + " is empty"});
    for (int n = 1; n <= poset.max_rank(); ++n) {
        if (poset.rank_size(n) == 0) continue;
        for (std::uint32_t i = 0; i < poset.rank_size(n); ++i)
            if (poset.down(n, i).empty())
                report.violations.push_back({"orphan", n, ElementRef{n, i},
                                             "element (" + std::to_string(n) + "," + std::to_string(i) +
                                                 ") has no lower cover"});
    }
    for (int n = 0; n < poset.max_rank(); ++n) {
        for (std::uint32_t i = 0; i < poset.rank_size(n); ++i) {
            const auto& covers = poset.up(n, i);
            for (std::size_t k = 1; k < covers.size(); ++k)
                if (covers[k] == covers[k - 1])
                    report.violations.push_back({"duplicate_cover", n, ElementRef{n, i},
                                                 "duplicate cover (" + std::to_string(n) + "," +
                                                     std::to_string(i) + ") < (" + std::to_string(n + 1) +
                                                     "," + std::to_string(covers[k]) + ")"});
        }
    }
    report.ok = report.violations.empty();
    report.weakly_increasing = true;
    for (int n = 1; n <= poset.max_rank(); ++n)
        if (poset.rank_size(n) < poset.rank_size(n - 1)) report.weakly_increasing = false;
    return report;
}

RankStats rank_stats(const GradedPoset& poset) {
    RankStats stats;
    for (int n = 0; n <= poset.max_rank(); ++n) stats.sizes.push_back(poset.rank_size(n));
    for (int n = 1; n <= poset.max_rank(); ++n)
        stats.deltas.push_back(static_cast<std::int64_t>(stats.sizes[static_cast<std::size_t>(n)]) -
                               static_cast<std::int64_t>(stats.sizes[static_cast<std::size_t>(n - 1)]));
    return stats;
}

GradedPoset truncate(const GradedPoset& poset, int max_rank) {
    if (max_rank < 0 || max_rank > poset.max_rank())
        throw std::out_of_range("truncate: rank outside truncation");
    std::vector<std::uint32_t> sizes;
    std::vector<std::vector<std::vector<std::uint32_t>>> up;
    std::vector<std::vector<std::string>> labels;
    for (int n = 0; n <= max_rank; ++n) {
        sizes.push_back(poset.rank_size(n));
        if (poset.has_labels()) {
            std::vector<std::string> rank_labels;
            for (std::uint32_t i = 0; i < poset.rank_size(n); ++i)
                rank_labels.push_back(poset.label({n, i}));
            labels.push_back(std::move(rank_labels));
        }
    }
    for (int n = 0; n < max_rank; ++n) {
        std::vector<std::vector<std::uint32_t>> level;
        for (std::uint32_t i = 0; i < poset.rank_size(n); ++i) level.push_back(poset.up(n, i));
        up.push_back(std::move(level));
    }
    return GradedPoset(std::move(sizes), std::move(up), std::move(labels));
}

std::vector<ElementRef> neighbors(const GradedPoset& poset, ElementRef x, Direction direction) {
    if (!poset.contains(x)) throw std::out_of_range("neighbors: element outside truncation");
    std::vector<ElementRef> out;
    if (direction == Direction::Up) {
        if (x.rank >= poset.max_rank())
            throw std::out_of_range("neighbors: up covers unknown at the truncation boundary");
        for (std::uint32_t j : poset.up(x.rank, x.index)) out.push_back({x.rank + 1, j});
    } else {
        if (x.rank == 0) return out;  // the bottom covers nothing
        for (std::uint32_t j : poset.down(x.rank, x.index)) out.push_back({x.rank - 1, j});
    }
    return out;
}

}  // namespace diffposet
