#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace diffposet {

/// Canonical handle for one poset element: (rank, index within the rank's
/// fixed ordering).
struct ElementRef {
    int rank = 0;
    std::uint32_t index = 0;

    friend auto operator<=>(const ElementRef&, const ElementRef&) = default;
};

std::ostream& operator<<(std::ostream& os, const ElementRef& e);

/// A finite truncation of an N-graded poset with 0-hat, stored as the Hasse
/// diagram between consecutive ranks. Immutable after construction; safe for
/// concurrent reads.
///
/// Construction only enforces indexability (cover targets inside the declared
/// next rank); structural requirements (unique bottom, no orphans, no
/// duplicate covers) are checked by validate() so that defective inputs can
/// be diagnosed rather than rejected blindly.
class GradedPoset {
public:
    /// up_covers[n][i] lists the rank-(n+1) indices covering element (n, i);
    /// lists are sorted on construction, duplicates preserved for validate().
    GradedPoset(std::vector<std::uint32_t> rank_sizes,
                std::vector<std::vector<std::vector<std::uint32_t>>> up_covers,
                std::vector<std::vector<std::string>> labels = {});

    int max_rank() const { return static_cast<int>(rank_sizes_.size()) - 1; }
    std::uint32_t rank_size(int n) const;
    const std::vector<std::uint32_t>& rank_sizes() const { return rank_sizes_; }

    bool contains(ElementRef e) const {
        return e.rank >= 0 && e.rank <= max_rank() && e.index < rank_size(e.rank);
    }

    /// Indices of rank-(n+1) elements covering (n, i). Requires n < max_rank.
    const std::vector<std::uint32_t>& up(int n, std::uint32_t i) const;
    /// Indices of rank-(n-1) elements covered by (n, i). Requires n >= 1.
    const std::vector<std::uint32_t>& down(int n, std::uint32_t i) const;

    std::uint32_t up_degree(int n, std::uint32_t i) const {
        return static_cast<std::uint32_t>(up(n, i).size());
    }
    std::uint32_t down_degree(int n, std::uint32_t i) const {
        return static_cast<std::uint32_t>(down(n, i).size());
    }

    /// Number of Hasse edges between ranks n and n+1.
    std::uint64_t edge_count(int n) const;
    std::uint64_t total_edges() const;

    bool has_labels() const { return !labels_.empty(); }
    /// Stored label, or "rank:index" when none was provided.
    std::string label(ElementRef e) const;

private:
    std::vector<std::uint32_t> rank_sizes_;
    std::vector<std::vector<std::vector<std::uint32_t>>> up_;
    std::vector<std::vector<std::vector<std::uint32_t>>> down_;  // transpose of up_
    std::vector<std::vector<std::string>> labels_;
};

struct Violation {
    std::string kind;     // "rank0_size", "empty_rank", "orphan", "duplicate_cover"
    int rank = -1;
    std::optional<ElementRef> element;
    std::string message;
};

struct ValidationReport {
    bool ok = false;
    std::vector<Violation> violations;
    bool weakly_increasing = false;
};

/// Checks the GradedPoset structural invariants; problems are reported, not
/// thrown. weakly_increasing records whether p_0 <= p_1 <= ... holds.
ValidationReport validate(const GradedPoset& poset);

struct RankStats {
    std::vector<std::uint64_t> sizes;   // p_0 .. p_max_rank
    std::vector<std::int64_t> deltas;   // delta p_n = p_n - p_{n-1}, n = 1..max_rank
};

RankStats rank_stats(const GradedPoset& poset);

enum class Direction { Up, Down };

/// Cover neighbors of x, sorted by index. Throws std::out_of_range when x is
/// outside the truncation or when Up is requested at the top rank.
std::vector<ElementRef> neighbors(const GradedPoset& poset, ElementRef x, Direction direction);

/// A shallower copy of the truncation, keeping ranks 0..max_rank.
GradedPoset truncate(const GradedPoset& poset, int max_rank);

}  // namespace diffposet
