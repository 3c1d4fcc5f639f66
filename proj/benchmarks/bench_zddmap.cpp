// SPDX-License-Identifier: Apache-2.0

#include "zddmap/io/circuit.hpp"
#include "zddmap/io/device.hpp"
#include "zddmap/map/base_sets.hpp"
#include "zddmap/map/mapper.hpp"
#include "zddmap/map/swap_layers.hpp"
#include "zddmap/zdd/engine.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>

namespace {

using zddmap::io::Circuit;
using zddmap::io::Device;
using zddmap::zdd::Engine;
using zddmap::zdd::kBot;
using zddmap::zdd::NodeRef;

// Every benchmark rebuilds its engine inside the loop: the unique table
// and op cache memoize, so reusing one would measure cache hits only.

void BM_ChooseHalf(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    Engine eng(n);
    NodeRef singles = kBot;
    for (std::uint32_t x = 1; x <= n; ++x) {
      singles = eng.union_(singles, eng.elementary(x));
    }
    benchmark::DoNotOptimize(eng.count_sets(eng.choose(singles, n / 2)));
  }
}
BENCHMARK(BM_ChooseHalf)->Arg(16)->Arg(32)->Arg(64);

void BM_UniversalJoinMeet(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    Engine eng(2 * n);
    NodeRef lo = kBot;
    NodeRef hi = kBot;
    for (std::uint32_t x = 1; x <= n; ++x) {
      lo = eng.union_(lo, eng.elementary(x));
      hi = eng.union_(hi, eng.elementary(n + x));
    }
    const NodeRef f = eng.join(eng.choose(lo, 2), eng.choose(hi, 2));
    benchmark::DoNotOptimize(eng.count_sets(eng.meet(f, eng.universal())));
  }
}
BENCHMARK(BM_UniversalJoinMeet)->Arg(8)->Arg(16)->Arg(24);

void BM_BuildLayersRing(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Device dev = zddmap::io::make_ring(n);
  for (auto _ : state) {
    zddmap::map::EdgeVarTable table{static_cast<std::uint32_t>(dev.edges.size())};
    Engine eng(table.num_edges);
    benchmark::DoNotOptimize(eng.count_sets(build_layers(eng, dev, table)));
  }
}
BENCHMARK(BM_BuildLayersRing)->Arg(8)->Arg(16)->Arg(24);

void BM_BaseSetsRing(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto m = static_cast<std::uint32_t>(state.range(1));
  const Device dev = zddmap::io::make_ring(m);
  Circuit circ;
  for (std::uint32_t v = 0; v < n; ++v) circ.qubits.push_back("p" + std::to_string(v));
  for (auto _ : state) {
    Engine eng(n * m);
    const auto base = zddmap::map::build_base_sets(circ, dev, eng);
    benchmark::DoNotOptimize(eng.count_sets(base.valid));
  }
}
BENCHMARK(BM_BaseSetsRing)->Args({4, 8})->Args({6, 12})->Args({8, 16});

Circuit ladder_circuit(std::uint32_t n, std::uint32_t rounds) {
  // Distance-two interactions on a ring force SWAP search every round.
  Circuit c;
  for (std::uint32_t v = 0; v < n; ++v) c.qubits.push_back("p" + std::to_string(v));
  for (std::uint32_t r = 0; r < rounds; ++r) {
    for (std::uint32_t v = 0; v < n; ++v) {
      c.gates.push_back({"cx", {v, (v + 2) % n}});
    }
  }
  return c;
}

void BM_MapThreeGateRingOfFour(benchmark::State& state) {
  const Circuit circ =
      zddmap::io::parse_circuit(".v a b c d\ncx a b\ncx b c\ncx b d\n");
  const Device dev = zddmap::io::make_ring(4);
  for (auto _ : state) {
    zddmap::map::Mapper mapper(circ, dev);
    benchmark::DoNotOptimize(mapper.emit().swaps_inserted);
  }
}
BENCHMARK(BM_MapThreeGateRingOfFour);

void BM_MapLadderOnRing(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Circuit circ = ladder_circuit(n, 2);
  const Device dev = zddmap::io::make_ring(n);
  for (auto _ : state) {
    zddmap::map::Mapper mapper(circ, dev);
    benchmark::DoNotOptimize(mapper.emit().swaps_inserted);
  }
}
BENCHMARK(BM_MapLadderOnRing)->Arg(4)->Arg(5)->Arg(6);

} // namespace

BENCHMARK_MAIN();
