#pragma once

// Pieces shared by the explicit, compact, and QNP file formats.

#include <ostream>
#include <string_view>
#include <vector>

#include "fondplus/frontend.hpp"
#include "text.hpp"

namespace fondplus::detail {

NamedConstraint parse_constraint_line(const text::Line& line);
std::vector<NamedConstraint> parse_constraints(const text::Section& section);
std::vector<LabelEntry> parse_labels(const text::Section& section);

void write_set(std::ostream& os, const std::vector<std::string>& names);
void write_constraints(std::ostream& os, const std::vector<NamedConstraint>& constraints);
void write_labels(std::ostream& os, const std::vector<LabelEntry>& labels);

/// The unique section called `name`; ParseError when duplicated, or when
/// missing and `required`.
const text::Section* single(const std::vector<text::Section>& sections, std::string_view name, bool required);

}  // namespace fondplus::detail
