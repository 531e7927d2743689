#pragma once

#include <optional>
#include <string>

#include "stanley/decomposition.hpp"

namespace stanley {

// Parsed ideal file: a ring declaration plus either a generator list or a
// component list, with an optional label and an optional split-variable hint.
struct IdealDocument {
  Ring ring;
  std::optional<MonomialIdeal> ideal;
  std::optional<Decomposition> components;
  std::string label;
  std::optional<VarSet> zvars;
};

IdealDocument parse_document(const std::string& text);
std::string print_document(const IdealDocument& doc);

/// The presented ideal: the generators, or the intersection of the components.
MonomialIdeal document_ideal(const IdealDocument& doc);

/// An irredundant decomposition: the given components irredundantized, or the
/// computed irreducible decomposition of the generators.
Decomposition document_decomposition(const IdealDocument& doc);

}  // namespace stanley
