#pragma once

#include "homcalc/algebroid.hpp"
#include "homcalc/bialgebroid.hpp"
#include "homcalc/courant.hpp"
#include "homcalc/error.hpp"
#include "homcalc/homlie.hpp"
#include "homcalc/poisson.hpp"
#include "homcalc/report.hpp"
#include "homcalc/sampling.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace homcalc {

// A JSON structure file could not be turned into a structure. Line and column are 1-based; pointer is the
// JSON pointer of the offending value, empty for syntax errors.
class StructureError : public Error {
public:
    enum class Category { syntax, semantic };

    StructureError(Category category, std::size_t line, std::size_t column, std::string pointer, std::string message);

    Category category() const { return category_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& pointer() const { return pointer_; }
    const std::string& message() const { return message_; }

private:
    Category category_;
    std::size_t line_;
    std::size_t column_;
    std::string pointer_;
    std::string message_;
};

// Courant data read as the source of its Hom-Lie 2-algebra.
struct TwoAlgebraSource {
    HomCourantAlgebroid courant;
};

using Structure = std::variant<HomLieAlgebra, QuadraticHomLieAlgebra, PurelyHomLieBialgebra, HomLieAlgebroid,
                               HomPoissonStructure, HomLieBialgebroid, HomCourantAlgebroid, TwoAlgebraSource>;

// One of homlie, bialgebra, algebroid, poisson, bialgebroid, courant, homlie2.
std::string kind_of(const Structure& s);

// Throws StructureError.
Structure parse_structure(std::string_view text);
// Canonical form: kind first, flat arrays and entries inline, two-space indentation, trailing newline.
std::string print_structure(const Structure& s);

VerificationReport verify_structure(const Structure& s, const SampleConfig& config = {});

// The input kind does not support the requested derivation.
class IncompatibleTarget : public Error {
public:
    using Error::Error;
};

// double, cotangent, bialgebroid, two-algebra, dual, induced-poisson.
std::vector<std::string> derive_targets();
// Throws IncompatibleTarget, or the construction's own error when a precondition fails.
Structure derive_structure(const Structure& s, const std::string& target);

std::vector<std::string> catalog_names();
// Throws std::out_of_range for an unknown name.
Structure catalog_entry(const std::string& name);

// Documented one-byte edit of a printed catalog entry: the first occurrence of `from` becomes `to`, and verify
// then fails on `axiom`.
struct CatalogMutation {
    std::string from;
    std::string to;
    std::string axiom;
};
CatalogMutation catalog_mutation(const std::string& name);
// Applies the mutation to the printed entry.
std::string mutated_catalog_text(const std::string& name);

} // namespace homcalc
