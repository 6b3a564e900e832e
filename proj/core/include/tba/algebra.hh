#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tba {

/// Index of a carrier element. Carriers are small (at most 255 elements).
using Element = std::uint8_t;

inline constexpr std::size_t max_carrier_size = 255;

/// A finite pointed ternary algebra (A, p, 0, 1).
///
/// The operation table is stored in lexicographic (a, b, c) order. The
/// constants are explicit indices and need not be 0 and 1. Instances are
/// immutable once constructed; the constructor enforces totality, range
/// and zero != one.
class TernaryAlgebra
{
public:
    TernaryAlgebra(std::vector<std::string> names, Element zero, Element one, std::vector<Element> table);

    auto size() const -> std::size_t { return _names.size(); }
    auto names() const -> const std::vector<std::string> & { return _names; }
    auto name(Element e) const -> const std::string & { return _names[e]; }
    auto zero() const -> Element { return _zero; }
    auto one() const -> Element { return _one; }
    auto table() const -> std::span<const Element> { return _table; }

    /// Unchecked lookup of p(a, b, c).
    auto p(Element a, Element b, Element c) const -> Element
    {
        return _table[(std::size_t{a} * _names.size() + b) * _names.size() + c];
    }

    /// Checked lookup; throws UsageError on an out-of-range index.
    auto eval_p(std::size_t a, std::size_t b, std::size_t c) const -> Element;

    /// Index of the element with the given label; throws UsageError if absent.
    auto find(std::string_view label) const -> Element;

    friend auto operator==(const TernaryAlgebra &, const TernaryAlgebra &) -> bool = default;

private:
    std::vector<std::string> _names;
    Element _zero;
    Element _one;
    std::vector<Element> _table;
};

/// Default labels "0", "1", "2", ... used for enumerated models.
auto numeric_names(std::size_t n) -> std::vector<std::string>;

/// The four derived operations, as flat tables (binary ones row-major).
struct DerivedOps
{
    std::size_t size = 0;
    std::vector<Element> bar;
    std::vector<Element> dot;
    std::vector<Element> circ;
    std::vector<Element> plus;

    auto complement(Element a) const -> Element { return bar[a]; }
    auto times(Element a, Element b) const -> Element { return dot[std::size_t{a} * size + b]; }
    auto join(Element a, Element b) const -> Element { return circ[std::size_t{a} * size + b]; }
    auto sum(Element a, Element b) const -> Element { return plus[std::size_t{a} * size + b]; }
};

/// bar a = p(1,a,0), a.b = p(0,a,b), a o b = p(a,b,1), a+b = p(a,b,bar a).
auto derived_ops(const TernaryAlgebra & m) -> DerivedOps;

/// A bijection on carrier indices; perm[i] is the image of i.
struct Relabeling
{
    std::vector<Element> perm;

    static auto identity(std::size_t n) -> Relabeling;
    auto is_bijection() const -> bool;
};

/// Isomorphic copy: p'(s a, s b, s c) = s(p(a, b, c)), names moved along.
/// The relabeling must be a bijection fixing both constants.
auto relabel(const TernaryAlgebra & m, const Relabeling & sigma) -> TernaryAlgebra;

/// Representative of the pointed isomorphism class.
///
/// Zero is moved to index 0 and one to index 1; the remaining elements are
/// ordered so that the table is lexicographically least over all (n-2)!
/// choices. Ties between automorphic choices go to the first permutation in
/// lexicographic order, so the names are deterministic too. Limited to
/// n <= max_canonical_size.
auto canonical_form(const TernaryAlgebra & m) -> TernaryAlgebra;

inline constexpr std::size_t max_canonical_size = 10;

/// Number of relabelings fixing the constants that map m onto itself.
auto automorphism_count(const TernaryAlgebra & m) -> std::size_t;

/// FNV-1a over size, constants and table; stable across platforms.
auto table_hash(const TernaryAlgebra & m) -> std::uint64_t;

} // namespace tba
