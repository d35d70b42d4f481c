#include "diffposet/threads.hpp"

#include <stdexcept>

namespace diffposet {

bool is_singleton(const GradedPoset& poset, ElementRef x) {
    if (!poset.contains(x)) throw std::out_of_range("is_singleton: element outside truncation");
    if (x.rank == 0) return true;
    return poset.down_degree(x.rank, x.index) == 1;
}

bool is_thread_element(const GradedPoset& poset, ElementRef x) {
    if (!poset.contains(x)) throw std::out_of_range("is_thread_element: element outside truncation");
    if (x.rank == 0) return false;  // the bottom covers nothing
    if (poset.down_degree(x.rank, x.index) != 1) return false;
    return is_singleton(poset, {x.rank - 1, poset.down(x.rank, x.index).front()});
}

std::vector<ElementRef> singletons(const GradedPoset& poset, int n) {
    if (n < 0 || n > poset.max_rank()) throw std::out_of_range("singletons: rank outside truncation");
    std::vector<ElementRef> out;
    for (std::uint32_t i = 0; i < poset.rank_size(n); ++i)
        if (is_singleton(poset, {n, i})) out.push_back({n, i});
    return out;
}

ThreadCensus thread_elements(const GradedPoset& poset, int n) {
    if (n < 1 || n > poset.max_rank()) throw std::out_of_range("thread_elements: rank outside truncation");
    ThreadCensus census;
    for (std::uint32_t i = 0; i < poset.rank_size(n); ++i)
        if (is_thread_element(poset, {n, i})) census.elements.push_back({n, i});
    census.tau = static_cast<std::uint32_t>(census.elements.size());
    return census;
}

ThreadPath extend_thread(const GradedPoset& poset, ElementRef t, int target_rank) {
    if (!is_thread_element(poset, t))
        throw std::invalid_argument("extend_thread: start element is not a thread element");
    if (target_rank < t.rank || target_rank > poset.max_rank())
        throw std::invalid_argument("extend_thread: target rank outside [start rank, max_rank]");
    ThreadPath path;
    path.elements.push_back(t);
    ElementRef current = t;
    while (current.rank < target_rank) {
        bool advanced = false;
        for (std::uint32_t j : poset.up(current.rank, current.index)) {
            ElementRef candidate{current.rank + 1, j};
            if (is_singleton(poset, candidate)) {  // covers `current`, so a thread element
                path.elements.push_back(candidate);
                current = candidate;
                advanced = true;
                break;  // covers are sorted: this is the smallest-index choice
            }
        }
        if (!advanced)
            throw std::runtime_error(
                "extend_thread: no singleton cover at rank " + std::to_string(current.rank + 1) +
                "; truncation too shallow or poset not differential");
    }
    return path;
}

Rank1ThreadCoverReport rank1_thread_cover_check(const GradedPoset& poset, int r) {
    if (poset.max_rank() < 2)
        throw std::invalid_argument("rank1_thread_cover_check: needs max_rank >= 2");
    Rank1ThreadCoverReport report;
    report.r = r;
    report.p1 = poset.rank_size(1);
    report.p1_equals_r = (report.p1 == static_cast<std::uint32_t>(r));
    report.ok = true;
    report.upper_covers_all_r_plus_1 = true;
    for (std::uint32_t i = 0; i < report.p1; ++i) {
        std::uint32_t threads = 0;
        for (std::uint32_t j : poset.up(1, i))
            if (is_thread_element(poset, {2, j})) ++threads;
        report.thread_cover_counts.push_back(threads);
        report.upper_cover_counts.push_back(poset.up_degree(1, i));
        if (threads < 2) report.ok = false;
        if (poset.up_degree(1, i) != static_cast<std::uint32_t>(r) + 1)
            report.upper_covers_all_r_plus_1 = false;
    }
    return report;
}

}  // namespace diffposet
