#pragma once

#include <tba/algebra.hh>
#include <tba/construct.hh>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace tba {

/// Model files:
///
///     tba v1
///     size <n>
///     elem <label> ... <label>
///     zero <label>
///     one <label>
///     p
///     <a> <b> <c> <r>      (n^3 lines, any order, each triple once)
///     end
///
/// '#' starts a comment. Errors are ParseError carrying the 1-based line.
auto read_model(std::istream & in) -> TernaryAlgebra;
auto load_model(const std::filesystem::path & path) -> TernaryAlgebra;

/// Writes the normal form: triples in lexicographic index order.
auto write_model(std::ostream & out, const TernaryAlgebra & m) -> void;
auto save_model(const TernaryAlgebra & m, const std::filesystem::path & path) -> void;
auto model_to_string(const TernaryAlgebra & m) -> std::string;

/// Presentation files: `nr v1`, size, elem, zero, one, then `add` and
/// `mul` each followed by n^2 lines `<a> <b> <r>`, then `end`.
auto read_presentation(std::istream & in) -> NearRingPresentation;
auto load_presentation(const std::filesystem::path & path) -> NearRingPresentation;
auto write_presentation(std::ostream & out, const NearRingPresentation & p) -> void;

} // namespace tba
