#include "decontext/extraction.hpp"

#include <set>
#include <tuple>

namespace decontext {
namespace {

bool is_nounlike(PosTag t) {
  return t == PosTag::Noun || t == PosTag::NamedEntity;
}

bool is_spatial_temporal(const AmrNode& n) {
  return n.ne == NeType::Time || n.ne == NeType::Location;
}

using StatementKey = std::tuple<StatementKind, std::string, std::string, std::string>;

StatementKey key_of(const ElementaryStatement& s) {
  return {s.kind, s.x, s.y, s.z};
}

}  // namespace

const char* to_string(StatementKind k) {
  switch (k) {
    case StatementKind::Object: return "Object";
    case StatementKind::SpatialTemporal: return "SpatialTemporal";
    case StatementKind::Activity: return "Activity";
    case StatementKind::Relationship: return "Relationship";
    case StatementKind::Attribute: return "Attribute";
  }
  return "Object";
}

StatementKind statement_kind_from_string(std::string_view s) {
  if (s == "Object") return StatementKind::Object;
  if (s == "SpatialTemporal") return StatementKind::SpatialTemporal;
  if (s == "Activity") return StatementKind::Activity;
  if (s == "Relationship") return StatementKind::Relationship;
  if (s == "Attribute") return StatementKind::Attribute;
  throw MalformedDocument("unknown statement kind: " + std::string(s));
}

std::vector<ElementaryStatement> extract_statements(const AmrGraph& g,
                                                    std::ostream* diag) {
  std::vector<ElementaryStatement> out;
  std::set<StatementKey> seen;

  const auto emit = [&](ElementaryStatement s) {
    if (seen.insert(key_of(s)).second) out.push_back(std::move(s));
  };

  for (const AmrNode& n : g.nodes()) {
    if (is_nounlike(n.pos)) {
      if (is_spatial_temporal(n)) {
        emit({StatementKind::SpatialTemporal, n.surface, "", "", {n.id}});
      } else {
        emit({StatementKind::Object, n.surface, "", "", {n.id}});
      }
      for (const AmrNode& nb : neighbors(g, n.id)) {
        if (nb.pos == PosTag::Adjective)
          emit({StatementKind::Attribute, n.surface, nb.surface, "", {n.id, nb.id}});
      }
    } else if (n.pos == PosTag::Verb || n.pos == PosTag::Pronoun) {
      std::vector<const AmrNode*> l;
      for (const AmrNode& nb : neighbors(g, n.id)) {
        if (is_nounlike(nb.pos)) l.push_back(&nb);
      }
      if (n.pos == PosTag::Verb && l.size() == 1) {
        emit({StatementKind::Activity, l[0]->surface, n.surface, "",
              {l[0]->id, n.id}});
      } else if (l.size() == 2) {
        emit({StatementKind::Relationship, l[0]->surface, n.surface,
              l[1]->surface, {l[0]->id, n.id, l[1]->id}});
      } else if (diag) {
        *diag << "skip node " << n.id << ": " << to_string(n.pos) << " with "
              << l.size() << " noun-like neighbors\n";
      }
    }
  }
  return out;
}

Query render_query(const ElementaryStatement& s) {
  const auto need = [&](const std::string& slot, const char* name) -> const std::string& {
    if (slot.empty())
      throw SlotMismatch(std::string("statement kind ") + to_string(s.kind) +
                         " requires slot " + name);
    return slot;
  };
  const auto forbid = [&](const std::string& slot, const char* name) {
    if (!slot.empty())
      throw SlotMismatch(std::string("statement kind ") + to_string(s.kind) +
                         " does not take slot " + name);
  };

  std::string text;
  switch (s.kind) {
    case StatementKind::Object:
      forbid(s.y, "y"); forbid(s.z, "z");
      text = "Is the photo about " + need(s.x, "x") + "?";
      break;
    case StatementKind::SpatialTemporal:
      forbid(s.y, "y"); forbid(s.z, "z");
      text = "Is the photo taken in " + need(s.x, "x") + "?";
      break;
    case StatementKind::Activity:
      forbid(s.z, "z");
      text = "Is the photo about " + need(s.x, "x") + " " + need(s.y, "y") + "?";
      break;
    case StatementKind::Relationship:
      text = "Is the photo about " + need(s.x, "x") + " " + need(s.y, "y") +
             " " + need(s.z, "z") + "?";
      break;
    case StatementKind::Attribute:
      forbid(s.z, "z");
      text = "In the photo, is " + need(s.x, "x") + " " + need(s.y, "y") + "?";
      break;
  }
  return Query{s, std::move(text), 0};
}

std::vector<Query> extract_queries(const AmrGraph& g, std::ostream* diag) {
  std::vector<Query> out;
  for (ElementaryStatement& s : extract_statements(g, diag)) {
    Query q = render_query(s);
    q.index = static_cast<int>(out.size());
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace decontext
