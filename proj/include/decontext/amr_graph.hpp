#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "decontext/errors.hpp"

namespace decontext {

enum class PosTag { Noun, NamedEntity, Verb, Pronoun, Adjective, Other };
enum class NeType { Person, Organization, Location, Time, None };

const char* to_string(PosTag tag);
const char* to_string(NeType ne);
PosTag pos_from_string(std::string_view s);
NeType ne_from_string(std::string_view s);

/// One caption token (word or multi-word phrase) with its POS and
/// named-entity annotation. Annotations come from the upstream parser/NER
/// stage; this module only validates them.
struct AmrNode {
  int id = 0;
  std::string surface;
  PosTag pos = PosTag::Other;
  NeType ne = NeType::None;

  friend bool operator==(const AmrNode&, const AmrNode&) = default;
};

struct AmrEdge {
  int src = 0;
  int dst = 0;
  std::string relation;

  friend bool operator==(const AmrEdge&, const AmrEdge&) = default;
};

/// Semantic graph of one caption. Immutable after parse; nodes are kept in
/// ascending-id order and edges sorted by (src, dst, relation), so equality
/// is structural regardless of input order.
class AmrGraph {
 public:
  AmrGraph() = default;
  AmrGraph(std::string caption, std::vector<AmrNode> nodes,
           std::vector<AmrEdge> edges);

  const std::string& caption() const { return caption_; }
  const std::vector<AmrNode>& nodes() const { return nodes_; }
  const std::vector<AmrEdge>& edges() const { return edges_; }

  bool has_node(int id) const;
  const AmrNode& node(int id) const;  // throws UnknownNode

  friend bool operator==(const AmrGraph& a, const AmrGraph& b) {
    return a.caption_ == b.caption_ && a.nodes_ == b.nodes_ &&
           a.edges_ == b.edges_;
  }

 private:
  friend std::vector<AmrNode> neighbors(const AmrGraph&, int);

  std::string caption_;
  std::vector<AmrNode> nodes_;   // ascending id
  std::vector<AmrEdge> edges_;   // sorted (src, dst, relation)
  std::vector<std::vector<int>> adjacency_;  // node position -> neighbor positions
};

/// Validates and canonicalizes a graph document. Unknown keys are rejected.
AmrGraph parse_graph(const nlohmann::json& doc);
AmrGraph parse_graph_text(std::string_view text);

nlohmann::json serialize_graph(const AmrGraph& g);

/// Undirected neighborhood of `id`: every node sharing an edge with it in
/// either direction, deduplicated, ascending-id order.
std::vector<AmrNode> neighbors(const AmrGraph& g, int id);

}  // namespace decontext
