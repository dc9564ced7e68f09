#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "decontext/amr_graph.hpp"

namespace decontext {

enum class StatementKind { Object, SpatialTemporal, Activity, Relationship, Attribute };

const char* to_string(StatementKind k);
StatementKind statement_kind_from_string(std::string_view s);

/// One atomic factual claim lifted out of a caption graph. Slot usage by
/// kind:
///   Object, SpatialTemporal  -> x
///   Activity, Attribute      -> x, y
///   Relationship             -> x, y, z
/// Unused slots stay empty.
struct ElementaryStatement {
  StatementKind kind = StatementKind::Object;
  std::string x;
  std::string y;
  std::string z;
  std::vector<int> source_nodes;

  friend bool operator==(const ElementaryStatement&,
                         const ElementaryStatement&) = default;
};

struct Query {
  ElementaryStatement statement;
  std::string text;
  int index = 0;

  friend bool operator==(const Query&, const Query&) = default;
};

/// Neighbor-search extraction over a validated graph, in canonical node
/// order:
///   - Noun / NamedEntity node: SpatialTemporal when its entity type is
///     Time or Location, Object otherwise; plus one Attribute per adjective
///     neighbor.
///   - Verb node: gather noun/named-entity neighbors L (ascending id);
///     one neighbor -> Activity(L[0], verb); two -> Relationship(L[0],
///     verb, L[1]); anything else is skipped.
///   - Pronoun node: as verb, but only the two-neighbor Relationship case.
/// Duplicates (same kind and slots) keep their first occurrence. Skipped
/// verb/pronoun nodes are reported on `diag` when given, one line each.
std::vector<ElementaryStatement> extract_statements(const AmrGraph& g,
                                                    std::ostream* diag = nullptr);

/// Fixed question template per kind; slot surfaces inserted verbatim.
/// Throws SlotMismatch when a required slot is empty or a forbidden slot is
/// filled.
Query render_query(const ElementaryStatement& s);

/// extract_statements + render_query, indices assigned 0..n-1.
std::vector<Query> extract_queries(const AmrGraph& g, std::ostream* diag = nullptr);

}  // namespace decontext
