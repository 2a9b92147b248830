#include <array>

#include "switchiso/classify.hpp"
#include "switchiso/error.hpp"

namespace switchiso {
namespace {

struct LabeledEdges {
  const char* label;
  const char* edges;  // 0-based, vertex u_i of the figures is i-1
};

// One representative per automorphic type of K6 with at most six negative
// edges and negative degree at most two.
constexpr std::array<LabeledEdges, 19> kK6Types = {{
    {"S0", ""},
    {"S1", "0-1"},
    {"S2", "0-1,1-2"},
    {"S3", "0-1,2-3"},
    {"S4", "0-1,1-2,2-3"},
    {"S5", "0-1,1-2,3-4"},
    {"S6", "0-1,5-2,4-3"},
    {"S7", "0-1,1-2,2-0"},
    {"S8", "0-1,1-2,2-3,3-4"},
    {"S9", "0-1,1-2,2-3,4-5"},
    {"S10", "0-1,5-0,2-3,3-4"},
    {"S11", "0-1,1-2,2-0,4-5"},
    {"S12", "0-1,1-2,2-5,5-0"},
    {"S13", "0-1,1-2,2-3,3-4,4-5"},
    {"S14", "0-1,1-2,2-3,3-0,4-5"},
    {"S15", "0-1,1-2,2-0,3-5,4-5"},
    {"S16", "0-1,1-2,2-3,3-4,4-0"},
    {"S17", "0-1,1-2,2-3,3-4,4-5,5-0"},
    {"S18", "0-1,1-2,2-0,3-4,4-5,5-3"},
}};

GraphPtr ensure_k6(GraphPtr k6) {
  if (!k6) return std::make_shared<const Graph>(builtin_graph("complete", 6));
  if (!(*k6 == builtin_graph("complete", 6))) {
    throw Error(ErrorCode::kGraphMismatch, "representatives live on K6");
  }
  return k6;
}

}  // namespace

std::vector<NamedSignature> named_k6_representatives(GraphPtr k6) {
  k6 = ensure_k6(std::move(k6));
  std::vector<NamedSignature> out;
  out.reserve(kK6Types.size());
  for (const auto& [label, edges] : kK6Types) {
    out.push_back({label, parse_signature(k6, edges)});
  }
  return out;
}

Signature named_k6_representative(std::string_view label, GraphPtr k6) {
  for (const auto& [name, edges] : kK6Types) {
    if (label == name) return parse_signature(ensure_k6(std::move(k6)), edges);
  }
  throw Error(ErrorCode::kInvalidParam,
              "no representative named '" + std::string(label) + "'");
}

}  // namespace switchiso
