#include "decontext/amr_graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace decontext {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

void require_keys(const nlohmann::json& obj,
                  std::initializer_list<const char*> allowed,
                  const char* what) {
  if (!obj.is_object())
    throw MalformedDocument(std::string(what) + " must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return key == k;
        }) == allowed.end()) {
      throw MalformedDocument(std::string("unknown key \"") + key + "\" in " +
                              what);
    }
  }
  for (const char* k : allowed) {
    if (!obj.contains(k))
      throw MalformedDocument(std::string("missing key \"") + k + "\" in " +
                              what);
  }
}

}  // namespace

const char* to_string(PosTag tag) {
  switch (tag) {
    case PosTag::Noun: return "Noun";
    case PosTag::NamedEntity: return "NamedEntity";
    case PosTag::Verb: return "Verb";
    case PosTag::Pronoun: return "Pronoun";
    case PosTag::Adjective: return "Adjective";
    case PosTag::Other: return "Other";
  }
  return "Other";
}

const char* to_string(NeType ne) {
  switch (ne) {
    case NeType::Person: return "Person";
    case NeType::Organization: return "Organization";
    case NeType::Location: return "Location";
    case NeType::Time: return "Time";
    case NeType::None: return "None";
  }
  return "None";
}

PosTag pos_from_string(std::string_view s) {
  if (s == "Noun") return PosTag::Noun;
  if (s == "NamedEntity") return PosTag::NamedEntity;
  if (s == "Verb") return PosTag::Verb;
  if (s == "Pronoun") return PosTag::Pronoun;
  if (s == "Adjective") return PosTag::Adjective;
  if (s == "Other") return PosTag::Other;
  throw MalformedDocument("unknown pos tag: " + std::string(s));
}

NeType ne_from_string(std::string_view s) {
  if (s == "Person") return NeType::Person;
  if (s == "Organization") return NeType::Organization;
  if (s == "Location") return NeType::Location;
  if (s == "Time") return NeType::Time;
  if (s == "None") return NeType::None;
  throw MalformedDocument("unknown ne type: " + std::string(s));
}

AmrGraph::AmrGraph(std::string caption, std::vector<AmrNode> nodes,
                   std::vector<AmrEdge> edges)
    : caption_(std::move(caption)),
      nodes_(std::move(nodes)),
      edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const AmrNode& a, const AmrNode& b) { return a.id < b.id; });
  std::sort(edges_.begin(), edges_.end(),
            [](const AmrEdge& a, const AmrEdge& b) {
              return std::tie(a.src, a.dst, a.relation) <
                     std::tie(b.src, b.dst, b.relation);
            });

  std::unordered_map<int, int> pos_of;
  pos_of.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!pos_of.emplace(nodes_[i].id, static_cast<int>(i)).second)
      throw DuplicateNodeId("duplicate node id " + std::to_string(nodes_[i].id));
  }

  adjacency_.assign(nodes_.size(), {});
  for (const AmrEdge& e : edges_) {
    const auto s = pos_of.find(e.src);
    const auto d = pos_of.find(e.dst);
    if (s == pos_of.end())
      throw DanglingEdge("edge references unknown node " + std::to_string(e.src));
    if (d == pos_of.end())
      throw DanglingEdge("edge references unknown node " + std::to_string(e.dst));
    adjacency_[static_cast<std::size_t>(s->second)].push_back(d->second);
    adjacency_[static_cast<std::size_t>(d->second)].push_back(s->second);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
}

bool AmrGraph::has_node(int id) const {
  const auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), id,
      [](const AmrNode& n, int v) { return n.id < v; });
  return it != nodes_.end() && it->id == id;
}

const AmrNode& AmrGraph::node(int id) const {
  const auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), id,
      [](const AmrNode& n, int v) { return n.id < v; });
  if (it == nodes_.end() || it->id != id)
    throw UnknownNode("no node with id " + std::to_string(id));
  return *it;
}

AmrGraph parse_graph(const nlohmann::json& doc) {
  require_keys(doc, {"caption", "nodes", "edges"}, "graph document");
  if (!doc["caption"].is_string())
    throw MalformedDocument("caption must be a string");
  if (!doc["nodes"].is_array() || !doc["edges"].is_array())
    throw MalformedDocument("nodes and edges must be arrays");

  std::vector<AmrNode> nodes;
  nodes.reserve(doc["nodes"].size());
  for (const auto& jn : doc["nodes"]) {
    require_keys(jn, {"id", "surface", "pos", "ne"}, "node");
    if (!jn["id"].is_number_integer() || jn["id"].get<std::int64_t>() < 0)
      throw MalformedDocument("node id must be a non-negative integer");
    if (!jn["surface"].is_string() || !jn["pos"].is_string() ||
        !jn["ne"].is_string())
      throw MalformedDocument("node surface/pos/ne must be strings");

    AmrNode n;
    n.id = jn["id"].get<int>();
    n.surface = trim(jn["surface"].get<std::string>());
    n.pos = pos_from_string(jn["pos"].get<std::string>());
    n.ne = ne_from_string(jn["ne"].get<std::string>());
    if (n.surface.empty())
      throw MalformedDocument("node " + std::to_string(n.id) +
                              " has empty surface text");
    if (n.ne != NeType::None && n.pos != PosTag::Noun &&
        n.pos != PosTag::NamedEntity)
      throw MalformedDocument("node " + std::to_string(n.id) +
                              " carries a named-entity type but is neither "
                              "Noun nor NamedEntity");
    nodes.push_back(std::move(n));
  }

  std::vector<AmrEdge> edges;
  edges.reserve(doc["edges"].size());
  std::set<std::tuple<int, int, std::string>> seen;
  for (const auto& je : doc["edges"]) {
    require_keys(je, {"src", "dst", "relation"}, "edge");
    if (!je["src"].is_number_integer() || !je["dst"].is_number_integer())
      throw MalformedDocument("edge endpoints must be integers");
    if (!je["relation"].is_string())
      throw MalformedDocument("edge relation must be a string");

    AmrEdge e;
    e.src = je["src"].get<int>();
    e.dst = je["dst"].get<int>();
    e.relation = je["relation"].get<std::string>();
    if (e.src == e.dst)
      throw MalformedDocument("self-loop on node " + std::to_string(e.src));
    if (!seen.emplace(e.src, e.dst, e.relation).second)
      throw MalformedDocument("duplicate edge (" + std::to_string(e.src) +
                              ", " + std::to_string(e.dst) + ", \"" +
                              e.relation + "\")");
    edges.push_back(std::move(e));
  }

  return AmrGraph(doc["caption"].get<std::string>(), std::move(nodes),
                  std::move(edges));
}

AmrGraph parse_graph_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedDocument(std::string("not valid JSON: ") + e.what());
  }
  return parse_graph(doc);
}

nlohmann::json serialize_graph(const AmrGraph& g) {
  nlohmann::json doc;
  doc["caption"] = g.caption();
  doc["nodes"] = nlohmann::json::array();
  for (const AmrNode& n : g.nodes()) {
    doc["nodes"].push_back({{"id", n.id},
                            {"surface", n.surface},
                            {"pos", to_string(n.pos)},
                            {"ne", to_string(n.ne)}});
  }
  doc["edges"] = nlohmann::json::array();
  for (const AmrEdge& e : g.edges()) {
    doc["edges"].push_back(
        {{"src", e.src}, {"dst", e.dst}, {"relation", e.relation}});
  }
  return doc;
}

std::vector<AmrNode> neighbors(const AmrGraph& g, int id) {
  const AmrNode& n = g.node(id);  // throws UnknownNode
  const auto pos = static_cast<std::size_t>(&n - g.nodes().data());
  std::vector<AmrNode> out;
  out.reserve(g.adjacency_[pos].size());
  for (int p : g.adjacency_[pos])
    out.push_back(g.nodes()[static_cast<std::size_t>(p)]);
  return out;
}

}  // namespace decontext
