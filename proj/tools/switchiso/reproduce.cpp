#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "switchiso/cli.hpp"
#include "switchiso/golden.hpp"
#include "switchiso/classify.hpp"
#include "switchiso/signature.hpp"

namespace switchiso::cli {
namespace {

using Triple = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

Triple triple_of(const CycleSpectrum& s) { return {s.at(3), s.at(4), s.at(5)}; }

std::string triple_text(const Triple& t) {
  std::ostringstream out;
  out << '(' << std::get<0>(t) << ',' << std::get<1>(t) << ','
      << std::get<2>(t) << ')';
  return out.str();
}

std::string triples_text(const std::set<Triple>& triples) {
  std::string out = "{";
  for (const Triple& t : triples) {
    if (out.size() > 1) out += ' ';
    out += triple_text(t);
  }
  return out + "}";
}

ReproduceItem item(std::string name, const std::string& expected,
                   const std::string& got) {
  return {std::move(name), expected, got, expected == got};
}

}  // namespace

std::vector<ReproduceItem> reproduce_items(bool corrupt_golden, int workers) {
  std::vector<ReproduceItem> items;

  for (const auto& [spec, classes] : golden::kClassCounts) {
    const auto reports =
        enumerate_isomorphism_classes(load_graph(spec), 0, workers);
    items.push_back(item("classes " + std::string(spec),
                         std::to_string(classes),
                         std::to_string(reports.size())));
  }

  // Distinct coset-reduced images over every signature of the graph.
  for (const auto& [spec, cosets] : golden::kCosetCounts) {
    const GraphPtr g = load_graph(spec);
    const Gf2Basis basis = cut_space_basis(g);
    const int m = g->num_edges();
    std::unordered_set<BitVector, BitVectorHash> images;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      BitVector v(m);
      for (int e = 0; e < m; ++e) {
        if ((mask >> e) & 1u) v.set(e);
      }
      images.insert(basis.reduce(std::move(v)));
    }
    items.push_back(item("cosets " + std::string(spec), std::to_string(cosets),
                         std::to_string(images.size())));
  }

  const GraphPtr k6 = load_graph("complete:6");
  const Classifier classifier(k6);
  const auto reports = classifier.enumerate_isomorphism_classes(0, workers);

  auto table = golden::kK6Table;
  if (corrupt_golden) table[1].c3 += 1;

  std::set<Triple> expected_triples;
  for (const auto& col : table) expected_triples.insert({col.c3, col.c4, col.c5});
  std::set<Triple> class_triples;
  for (const ClassReport& r : reports) class_triples.insert(triple_of(r.spectrum));
  items.push_back(item("table K6 triple set", triples_text(expected_triples),
                       triples_text(class_triples)));
  items.push_back(item("table K6 triples distinct",
                       std::to_string(reports.size()),
                       std::to_string(class_triples.size())));

  for (const auto& col : table) {
    const Signature rep = named_k6_representative(col.label, k6);
    items.push_back(item("table K6 column " + std::string(col.label),
                         triple_text({col.c3, col.c4, col.c5}),
                         triple_text(triple_of(classifier.spectrum(rep)))));
  }

  std::int64_t type_total = 0;
  for (std::size_t k = 0; k < golden::kK6TypeCounts.size(); ++k) {
    const std::int64_t got =
        classifier.automorphic_type_count(static_cast<int>(k), 2);
    type_total += got;
    items.push_back(item("types K6 size " + std::to_string(k),
                         std::to_string(golden::kK6TypeCounts[k]),
                         std::to_string(got)));
  }
  items.push_back(item("types K6 total", std::to_string(golden::kK6TypeTotal),
                       std::to_string(type_total)));

  for (const auto& w : golden::kK6Witnesses) {
    const Signature from = named_k6_representative(w.from, k6);
    const Signature to = named_k6_representative(w.to, k6);
    const Signature switched = switch_at(from, w.switch_set);
    const bool automorphic = classifier.find_automorphism(switched, to).has_value();
    items.push_back(item("witness " + std::string(w.from) + "~" +
                             std::string(w.to),
                         "automorphic", automorphic ? "automorphic" : "not automorphic"));
  }

  int max_frustration = 0;
  for (const ClassReport& r : reports) {
    max_frustration = std::max(max_frustration, r.frustration);
  }
  items.push_back(item(
      "frustration K6 <= " + std::to_string(golden::kK6MaxFrustration), "true",
      max_frustration <= golden::kK6MaxFrustration ? "true" : "false"));
  for (int n = 3; n <= 6; ++n) {
    const Graph kn = builtin_graph("complete", n);
    items.push_back(item("degree bound K" + std::to_string(n) + " <= " +
                             std::to_string(min_degree_bound(n)),
                         "true", check_min_degree_bound(kn) ? "true" : "false"));
  }
  return items;
}

}  // namespace switchiso::cli
