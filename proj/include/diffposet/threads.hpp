#pragma once

#include <cstdint>
#include <vector>

#include "diffposet/poset.hpp"

namespace diffposet {

/// A saturated chain of thread elements inside the truncation, one element
/// per rank from start_rank to end_rank.
struct ThreadPath {
    std::vector<ElementRef> elements;

    int start_rank() const { return elements.front().rank; }
    int end_rank() const { return elements.back().rank; }
};

/// The rank-n singletons: elements covering exactly one element, plus the
/// bottom element when n = 0.
std::vector<ElementRef> singletons(const GradedPoset& poset, int n);

bool is_singleton(const GradedPoset& poset, ElementRef x);

/// A thread element is a singleton whose unique lower cover is itself a
/// singleton. The bottom element counts as a singleton, so rank-1 singletons
/// are thread elements.
bool is_thread_element(const GradedPoset& poset, ElementRef x);

struct ThreadCensus {
    std::vector<ElementRef> elements;  // sorted by index
    std::uint32_t tau = 0;             // = elements.size()
};

/// Thread elements of rank n (1 <= n <= max_rank) and their count tau_n.
ThreadCensus thread_elements(const GradedPoset& poset, int n);

/// Extends the thread element t upward to target_rank, at each step taking
/// the smallest-index cover that is a singleton (each such cover is again a
/// thread element). Throws std::runtime_error when no singleton cover exists
/// before the target: the truncation is too shallow or the poset is not
/// differential.
ThreadPath extend_thread(const GradedPoset& poset, ElementRef t, int target_rank);

struct Rank1ThreadCoverReport {
    bool ok = false;           // every rank-1 element has >= 2 thread covers
    int r = 0;
    std::uint32_t p1 = 0;
    bool p1_equals_r = false;
    std::vector<std::uint32_t> thread_cover_counts;  // per rank-1 element
    std::vector<std::uint32_t> upper_cover_counts;
    bool upper_covers_all_r_plus_1 = false;
};

/// Counts, for each rank-1 element, the rank-2 thread elements covering it;
/// also records that rank 1 has exactly r elements, each with r+1 upper
/// covers. Requires max_rank >= 2.
Rank1ThreadCoverReport rank1_thread_cover_check(const GradedPoset& poset, int r);

}  // namespace diffposet
