#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "switchiso/error.hpp"
#include "switchiso/signature.hpp"
#include "test_util.hpp"

namespace switchiso {
namespace {

using ::switchiso::testing::builtin;
using ::switchiso::testing::from_mask;
using ::switchiso::testing::mask;
using ::switchiso::testing::raw;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kParse;
}

GraphPtr two_disjoint_edges() {
  const std::vector<Edge> pairs = {{0, 1}, {2, 3}};
  return make_graph(4, pairs);
}

TEST(ParseSignatureTest, Examples) {
  const GraphPtr k6 = builtin("complete:6");
  const std::vector<Edge> one = {{0, 1}};
  const Signature s1 = parse_signature(k6, one);
  EXPECT_EQ(s1.size(), 1);
  EXPECT_TRUE(s1.is_negative(0));

  const Signature s0 = parse_signature(k6, std::vector<Edge>{});
  EXPECT_EQ(s0.size(), 0);
  EXPECT_EQ(s0, Signature(k6));

  EXPECT_EQ(parse_signature(k6, "0-1"), s1);
  EXPECT_EQ(parse_signature(k6, ""), s0);
  EXPECT_EQ(parse_signature(k6, " 2-1 , 0-5").to_string(), "0-5,1-2");
}

TEST(ParseSignatureTest, Errors) {
  const GraphPtr k6 = builtin("complete:6");
  EXPECT_EQ(code_of([&] { parse_signature(k6, "0-1,0-1"); }),
            ErrorCode::kDuplicateEdge);
  EXPECT_EQ(code_of([&] { parse_signature(k6, "0-1,1-0"); }),
            ErrorCode::kDuplicateEdge);
  EXPECT_EQ(code_of([&] { parse_signature(k6, "0-6"); }), ErrorCode::kNotAnEdge);
  EXPECT_EQ(code_of([&] { parse_signature(builtin("cycle:4"), "0-2"); }),
            ErrorCode::kNotAnEdge);
  EXPECT_EQ(code_of([&] { parse_signature(k6, "01"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([&] { parse_signature(k6, "0-1,"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([&] { parse_signature(k6, "a-1"); }), ErrorCode::kParse);
}

TEST(SwitchTest, Examples) {
  const GraphPtr k3 = builtin("complete:3");
  const int v2[] = {2};
  EXPECT_EQ(switch_at(parse_signature(k3, "0-1,1-2,0-2"), v2),
            parse_signature(k3, "0-1"));

  const GraphPtr k6 = builtin("complete:6");
  EXPECT_EQ(switch_at(Signature(k6), std::vector<int>{}), Signature(k6));
  const int v0[] = {0};
  EXPECT_EQ(switch_at(parse_signature(k6, "0-1"), v0),
            parse_signature(k6, "0-2,0-3,0-4,0-5"));
}

TEST(SwitchTest, InvalidVertex) {
  const GraphPtr k6 = builtin("complete:6");
  const int bad[] = {6};
  EXPECT_EQ(code_of([&] { switch_at(Signature(k6), bad); }),
            ErrorCode::kInvalidVertex);
}

TEST(SwitchTest, InvolutionAndComplement) {
  const GraphPtr k6 = builtin("complete:6");
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Signature sig = from_mask(k6, rng() & 0x7fff);
    std::vector<int> s, complement;
    for (int v = 0; v < 6; ++v) (rng() % 2 ? s : complement).push_back(v);
    EXPECT_EQ(switch_at(switch_at(sig, s), s), sig);
    EXPECT_EQ(switch_at(sig, s), switch_at(sig, complement));
  }
  // Per component on a disconnected graph.
  const GraphPtr g = two_disjoint_edges();
  const Signature sig = parse_signature(g, "0-1");
  EXPECT_EQ(switch_at(sig, std::vector<int>{0, 2}),
            switch_at(sig, std::vector<int>{1, 3}));
}

TEST(CutSpaceBasisTest, Ranks) {
  const Gf2Basis k6 = cut_space_basis(builtin("complete:6"));
  EXPECT_EQ(k6.rank(), 5);
  EXPECT_EQ(k6.coset_dimension(), 10);

  const Gf2Basis k3 = cut_space_basis(builtin("complete:3"));
  EXPECT_EQ(k3.rank(), 2);
  EXPECT_EQ(k3.coset_dimension(), 1);

  const Gf2Basis forest = cut_space_basis(two_disjoint_edges());
  EXPECT_EQ(forest.rank(), 2);
  EXPECT_EQ(forest.coset_dimension(), 0);

  const Gf2Basis petersen = cut_space_basis(builtin("petersen"));
  EXPECT_EQ(petersen.rank(), 9);
}

TEST(CutSpaceBasisTest, RowsAreEchelonCuts) {
  for (const char* spec : {"complete:6", "petersen", "heawood", "cycle:5"}) {
    const GraphPtr g = builtin(spec);
    const Gf2Basis basis = cut_space_basis(g);
    EXPECT_EQ(basis.rank(), g->num_vertices() - g->num_components()) << spec;
    for (int i = 0; i < basis.rank(); ++i) {
      if (i > 0) EXPECT_LT(basis.pivots()[i - 1], basis.pivots()[i]);
      EXPECT_EQ(static_cast<int>(basis.rows()[i].first()), basis.pivots()[i]);
      for (int j = 0; j < basis.rank(); ++j) {
        EXPECT_EQ(basis.rows()[i].test(basis.pivots()[j]), i == j);
      }
      const auto vertices = basis.row_vertices(i).indices();
      EXPECT_EQ(vertex_cut(*g, vertices), basis.rows()[i]) << spec;
    }
  }
}

TEST(CosetReduceTest, CutsReduceToZero) {
  const GraphPtr k6 = builtin("complete:6");
  const Gf2Basis basis = cut_space_basis(k6);
  for (int s = 0; s < 64; ++s) {
    std::vector<int> set;
    for (int v = 0; v < 6; ++v) {
      if ((s >> v) & 1) set.push_back(v);
    }
    const Signature cut(k6, vertex_cut(*k6, set));
    EXPECT_EQ(coset_reduce(cut, basis), Signature(k6));
  }
}

TEST(CosetReduceTest, UnbalancedTriangle) {
  const GraphPtr k3 = builtin("complete:3");
  const Gf2Basis basis = cut_space_basis(k3);
  // Edge order 01, 02, 12. Eliminating δ0 = {01,02} and δ1 = {01,12} by hand
  // gives pivots on 01 and 02, so the unbalanced coset's representative is
  // the only odd-size signature vanishing there: {12}.
  ASSERT_EQ(std::vector<int>(basis.pivots().begin(), basis.pivots().end()),
            (std::vector<int>{0, 1}));
  const auto triangle = raw(*k3);
  std::vector<std::uint64_t> members;
  for (std::uint64_t m = 0; m < 8; ++m) {
    if (oracle::switching_equivalent(triangle, 0b111, m)) members.push_back(m);
  }
  EXPECT_EQ(members, (std::vector<std::uint64_t>{0b001, 0b010, 0b100, 0b111}));
  const Signature reduced =
      coset_reduce(parse_signature(k3, "0-1,1-2,0-2"), basis);
  EXPECT_EQ(reduced.to_string(), "1-2");
  for (const std::uint64_t m : members) {
    EXPECT_EQ(coset_reduce(from_mask(k3, m), basis), reduced);
  }
}

TEST(CosetReduceTest, Idempotent) {
  const GraphPtr k6 = builtin("complete:6");
  const Gf2Basis basis = cut_space_basis(k6);
  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Signature once = coset_reduce(from_mask(k6, rng() & 0x7fff), basis);
    EXPECT_EQ(coset_reduce(once, basis), once);
    for (const int p : basis.pivots()) EXPECT_FALSE(once.is_negative(p));
  }
}

TEST(CosetReduceTest, GraphMismatch) {
  const Gf2Basis basis = cut_space_basis(builtin("complete:5"));
  EXPECT_EQ(code_of([&] { coset_reduce(Signature(builtin("complete:6")), basis); }),
            ErrorCode::kGraphMismatch);
}

TEST(SwitchingEquivalenceTest, Examples) {
  const GraphPtr k3 = builtin("complete:3");
  EXPECT_TRUE(is_switching_equivalent(parse_signature(k3, "0-1,1-2,0-2"),
                                      parse_signature(k3, "0-1")));
  const GraphPtr k6 = builtin("complete:6");
  EXPECT_FALSE(is_switching_equivalent(Signature(k6), parse_signature(k6, "0-1")));
  const Signature s = parse_signature(k6, "0-1,2-4,3-5");
  EXPECT_TRUE(is_switching_equivalent(s, s));
  EXPECT_EQ(code_of([&] { is_switching_equivalent(s, Signature(k3)); }),
            ErrorCode::kGraphMismatch);
}

TEST(SwitchingEquivalenceTest, WitnessReproducesTarget) {
  const GraphPtr k6 = builtin("complete:6");
  const Gf2Basis basis = cut_space_basis(k6);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Signature a = from_mask(k6, rng() & 0x7fff);
    std::vector<int> s;
    for (int v = 0; v < 6; ++v) {
      if (rng() % 2) s.push_back(v);
    }
    const Signature b = switch_at(a, s);
    const auto witness = switching_witness(a, b, basis);
    ASSERT_TRUE(witness.has_value());
    EXPECT_EQ(switch_at(a, *witness), b);
    const Signature c = from_mask(k6, rng() & 0x7fff);
    EXPECT_EQ(switching_witness(a, c, basis).has_value(),
              is_switching_equivalent(a, c, basis));
  }
}

TEST(CycleSignTest, Examples) {
  const GraphPtr k3 = builtin("complete:3");
  const Cycle triangle = enumerate_cycles(*k3, 3).front();
  EXPECT_EQ(cycle_sign(Signature(k3), triangle), 1);
  EXPECT_EQ(cycle_sign(parse_signature(k3, "0-1,1-2,0-2"), triangle), -1);

  const GraphPtr k6 = builtin("complete:6");
  const Signature s1 = parse_signature(k6, "0-1");
  const auto cycles = enumerate_cycles(*k6, 3);
  const auto find = [&](std::vector<int> v) {
    return *std::find_if(cycles.begin(), cycles.end(),
                         [&](const Cycle& c) { return c.vertices == v; });
  };
  EXPECT_EQ(cycle_sign(s1, find({0, 1, 2})), -1);
  EXPECT_EQ(cycle_sign(s1, find({2, 3, 4})), 1);
}

TEST(CycleSignTest, ForeignCycle) {
  const GraphPtr c5 = builtin("cycle:5");
  const Cycle pentagon = enumerate_cycles(*c5, 5).front();
  EXPECT_EQ(code_of([&] { cycle_sign(Signature(builtin("cycle:4")), pentagon); }),
            ErrorCode::kGraphMismatch);
  // Same length but the cycle's edges are not edges of a path graph.
  EXPECT_EQ(code_of([&] { cycle_sign(Signature(builtin("path:5")), pentagon); }),
            ErrorCode::kGraphMismatch);
}

TEST(BalanceTest, Examples) {
  const GraphPtr k6 = builtin("complete:6");
  EXPECT_TRUE(is_balanced(Signature(k6)));
  const std::vector<int> s = {0, 3};
  EXPECT_TRUE(is_balanced(Signature(k6, vertex_cut(*k6, s))));
  EXPECT_FALSE(is_balanced(parse_signature(k6, "0-1")));
}

TEST(SpectrumTest, TableColumns) {
  const GraphPtr k6 = builtin("complete:6");
  const auto triple = [](const CycleSpectrum& s) {
    return std::vector<std::int64_t>{s.at(3), s.at(4), s.at(5)};
  };
  EXPECT_EQ(triple(negative_cycle_spectrum(parse_signature(k6, "0-1"), 5)),
            (std::vector<std::int64_t>{4, 12, 24}));
  EXPECT_EQ(triple(negative_cycle_spectrum(
                parse_signature(k6, "0-1,1-2,0-2,3-4,4-5,3-5"), 5)),
            (std::vector<std::int64_t>{20, 0, 72}));
  const CycleSpectrum zero = negative_cycle_spectrum(Signature(k6), 5);
  EXPECT_EQ(triple(zero), (std::vector<std::int64_t>{0, 0, 0}));
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.counts.size(), 3u);
}

TEST(SpectrumTest, CountsBoundedByCycleTotals) {
  const GraphPtr k6 = builtin("complete:6");
  std::mt19937 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const CycleSpectrum s = negative_cycle_spectrum(from_mask(k6, rng() & 0x7fff), 6);
    EXPECT_LE(s.at(3), 20);
    EXPECT_LE(s.at(4), 45);
    EXPECT_LE(s.at(5), 72);
    EXPECT_LE(s.at(6), 60);
    for (const auto& [k, c] : s.counts) EXPECT_GE(c, 0);
  }
}

TEST(SpectrumTest, RejectsShortBound) {
  EXPECT_EQ(code_of([] {
              negative_cycle_spectrum(Signature(builtin("complete:4")), 2);
            }),
            ErrorCode::kInvalidParam);
}

TEST(UnbalancedCycleSetTest, Examples) {
  EXPECT_TRUE(unbalanced_cycle_set(Signature(builtin("petersen"))).empty());
  const GraphPtr k3 = builtin("complete:3");
  const auto set = unbalanced_cycle_set(parse_signature(k3, "0-1,1-2,0-2"));
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set[0].vertices, (std::vector<int>{0, 1, 2}));
}

TEST(UnbalancedCycleSetTest, AgreesWithEquivalenceOnRandomK5Pairs) {
  const GraphPtr k5 = builtin("complete:5");
  const Gf2Basis basis = cut_space_basis(k5);
  std::mt19937 rng(5);
  int equivalent_pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Signature a = from_mask(k5, rng() & 0x3ff);
    // Half the pairs are equivalent by construction.
    Signature b = from_mask(k5, rng() & 0x3ff);
    if (trial % 2 == 0) {
      std::vector<int> s;
      for (int v = 0; v < 5; ++v) {
        if (rng() % 2) s.push_back(v);
      }
      b = switch_at(a, s);
    }
    const bool same_cycles = unbalanced_cycle_set(a) == unbalanced_cycle_set(b);
    const bool equivalent = is_switching_equivalent(a, b, basis);
    EXPECT_EQ(same_cycles, equivalent);
    equivalent_pairs += equivalent;
  }
  EXPECT_GE(equivalent_pairs, 100);
}

// Every cycle sign survives every switching.
TEST(SignedCorePropertyTest, SwitchingInvarianceExhaustiveK4) {
  const GraphPtr k4 = builtin("complete:4");
  const auto cycles = enumerate_cycles(*k4, 4);
  for (std::uint64_t m = 0; m < 64; ++m) {
    const Signature sig = from_mask(k4, m);
    for (int s = 0; s < 16; ++s) {
      std::vector<int> set;
      for (int v = 0; v < 4; ++v) {
        if ((s >> v) & 1) set.push_back(v);
      }
      const Signature switched = switch_at(sig, set);
      for (const Cycle& c : cycles) {
        ASSERT_EQ(cycle_sign(switched, c), cycle_sign(sig, c));
      }
    }
  }
}

TEST(SignedCorePropertyTest, SwitchingInvarianceSampledK6) {
  const GraphPtr k6 = builtin("complete:6");
  const auto cycles = enumerate_cycles(*k6, 6);
  std::mt19937 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Signature sig = from_mask(k6, rng() & 0x7fff);
    std::vector<int> set;
    for (int v = 0; v < 6; ++v) {
      if (rng() % 2) set.push_back(v);
    }
    const Signature switched = switch_at(sig, set);
    for (const Cycle& c : cycles) {
      ASSERT_EQ(cycle_sign(switched, c), cycle_sign(sig, c));
    }
  }
}

// Coset reduction, cycle-set equality, and brute-force switching all decide
// the same relation.
TEST(SignedCorePropertyTest, CosetSoundnessExhaustiveK4) {
  const GraphPtr k4 = builtin("complete:4");
  const Gf2Basis basis = cut_space_basis(k4);
  const auto oracle_graph = raw(*k4);
  std::vector<Signature> reduced;
  std::vector<std::vector<Cycle>> cycle_sets;
  for (std::uint64_t m = 0; m < 64; ++m) {
    reduced.push_back(coset_reduce(from_mask(k4, m), basis));
    cycle_sets.push_back(unbalanced_cycle_set(from_mask(k4, m)));
  }
  for (std::uint64_t a = 0; a < 64; ++a) {
    for (std::uint64_t b = 0; b < 64; ++b) {
      const bool eq =
          is_switching_equivalent(from_mask(k4, a), from_mask(k4, b), basis);
      ASSERT_EQ(eq, reduced[a] == reduced[b]);
      ASSERT_EQ(eq, cycle_sets[a] == cycle_sets[b]);
      ASSERT_EQ(eq, oracle::switching_equivalent(oracle_graph, a, b));
    }
  }
}

TEST(SignedCorePropertyTest, CosetSoundnessSampledK6) {
  const GraphPtr k6 = builtin("complete:6");
  const Gf2Basis basis = cut_space_basis(k6);
  const auto oracle_graph = raw(*k6);
  std::mt19937 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t a = rng() & 0x7fff;
    std::uint64_t b = rng() & 0x7fff;
    if (trial % 2 == 0) b = a ^ oracle::cut_mask(oracle_graph, rng() & 0x3f);
    const Signature sa = from_mask(k6, a), sb = from_mask(k6, b);
    const bool eq = is_switching_equivalent(sa, sb, basis);
    EXPECT_EQ(eq, coset_reduce(sa, basis) == coset_reduce(sb, basis));
    EXPECT_EQ(eq, unbalanced_cycle_set(sa) == unbalanced_cycle_set(sb));
    EXPECT_EQ(eq, oracle::switching_equivalent(oracle_graph, a, b));
  }
}

std::size_t distinct_reductions(const GraphPtr& g) {
  const Gf2Basis basis = cut_space_basis(g);
  std::unordered_set<BitVector, BitVectorHash> images;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g->num_edges()); ++m) {
    images.insert(coset_reduce(from_mask(g, m), basis).bits());
  }
  return images.size();
}

TEST(SignedCorePropertyTest, CosetCountIsTwoToTheCycleRank) {
  EXPECT_EQ(distinct_reductions(builtin("complete:3")), 2u);
  EXPECT_EQ(distinct_reductions(builtin("complete:4")), 8u);
  EXPECT_EQ(distinct_reductions(builtin("complete:5")), 64u);
  EXPECT_EQ(distinct_reductions(two_disjoint_edges()), 1u);
}

TEST(SignedCorePropertyTest, BalancedIffZeroSpectrum) {
  for (const char* spec : {"complete:4", "complete:5"}) {
    const GraphPtr g = builtin(spec);
    const Gf2Basis basis = cut_space_basis(g);
    const auto cycles = enumerate_cycles(*g, g->num_vertices());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g->num_edges()); ++m) {
      const Signature sig = from_mask(g, m);
      ASSERT_EQ(is_balanced(sig, basis),
                negative_cycle_spectrum(sig, cycles, g->num_vertices()).is_zero())
          << spec << " " << sig.to_string();
    }
  }
}

}  // namespace
}  // namespace switchiso
