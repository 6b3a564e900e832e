#pragma once

#include <tba/algebra.hh>
#include <tba/classify.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace tba {

/// Marks an unassigned cell in a partial table.
inline constexpr Element free_cell = 0xFF;

inline constexpr std::size_t default_max_enumeration_size = 5;

/// A partial table over carrier {0, ..., n-1} with zero = 0 and one = 1.
struct SearchState
{
    std::size_t size = 0;
    std::vector<Element> cells;      // n^3, lexicographic (a, b, c)
    std::vector<std::size_t> trail;  // assigned cell indices, oldest first
    std::size_t queue_head = 0;      // trail[queue_head..] still need T3 rechecks

    auto index(std::size_t a, std::size_t b, std::size_t c) const -> std::size_t { return (a * size + b) * size + c; }
    auto free_count() const -> std::size_t;
};

/// Fixes every cell forced by T4 (middle 0 or 1), T1 (0, m, 1) and T2
/// (a, m, a). Throws UsageError for n < 2.
auto preassign(std::size_t n) -> SearchState;

struct SearchBudget
{
    std::optional<double> seconds;
    std::optional<std::uint64_t> nodes;
};

struct EnumerateOptions
{
    std::size_t size = 2;
    bool up_to_iso = true;
    bool classify_each = false;
    SearchBudget budget;
    /// Worker threads; results do not depend on this.
    std::size_t jobs = 1;
    /// Depth at which the tree is cut into independent subtree tasks.
    std::size_t split_depth = 2;
    std::size_t max_size = default_max_enumeration_size;
};

struct SearchStatistics
{
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
    std::uint64_t tasks = 0;
    double seconds = 0.0;
};

struct EnumerationResult
{
    std::size_t size = 0;
    bool up_to_iso = false;
    /// Models with zero = 0 and one = 1 (every labelled table).
    std::uint64_t raw_count = 0;
    /// Canonical class representatives when up_to_iso, otherwise every raw
    /// model; sorted lexicographically by table either way.
    std::vector<TernaryAlgebra> models;
    /// Per class: number of labelled tables it accounts for. Empty unless up_to_iso.
    std::vector<std::uint64_t> orbit_sizes;
    /// Parallel to models when classify_each was requested.
    std::vector<ClassificationReport> classifications;
    SearchStatistics statistics;
};

/// Every model of T1-T4 on n elements. Throws UsageError when n is out of
/// range and BudgetExceeded (no partial results) when the budget runs out.
auto enumerate(const EnumerateOptions & options) -> EnumerationResult;

/// Groups models by canonical form. Classes appear in order of their
/// canonical tables; members keep input order. Throws UsageError on mixed sizes.
auto iso_classes(const std::vector<TernaryAlgebra> & models) -> std::vector<std::vector<std::size_t>>;

} // namespace tba
