// Copyright 2026 The xacmlcov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "xacmlcov/json_codec.h"
#include "xacmlcov/monitor.h"
#include "xacmlcov/pdp.h"
#include "xacmlcov/reqgen.h"
#include "xacmlcov/tracegen.h"
#include "xacmlcov/xacml_io.h"

namespace xacmlcov {
namespace {

const PolicySet& library_policy() {
  static const PolicySet ps =
      load_policy(std::string(XACMLCOV_FIXTURE_DIR) + "/policy2.xml").root;
  return ps;
}

void BM_ParsePolicy(benchmark::State& state) {
  std::string text = read_text_file(std::string(XACMLCOV_FIXTURE_DIR) + "/policy2.xml");
  for (auto _ : state) benchmark::DoNotOptimize(parse_policy(text));
}
BENCHMARK(BM_ParsePolicy);

void BM_GenerateTraces(benchmark::State& state) {
  const PolicySet& ps = library_policy();
  for (auto _ : state) benchmark::DoNotOptimize(generate_all(ps));
}
BENCHMARK(BM_GenerateTraces);

void BM_MultipleSuite(benchmark::State& state) {
  const PolicySet& ps = library_policy();
  for (auto _ : state) benchmark::DoNotOptimize(gen_multiple(ps));
  state.SetItemsProcessed(state.iterations() * 128);
}
BENCHMARK(BM_MultipleSuite);

void BM_Evaluate(benchmark::State& state) {
  const PolicySet& ps = library_policy();
  auto suite = gen_multiple(ps);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(ps, suite[i]));
    i = (i + 1) % suite.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Evaluate);

void BM_MonitorIngest(benchmark::State& state) {
  const PolicySet& ps = library_policy();
  auto traces = generate_all(ps);
  auto suite = gen_multiple(ps);
  std::vector<Decision> decisions;
  for (const auto& r : suite) decisions.push_back(evaluate(ps, r));
  for (auto _ : state) {
    CoverageMonitor m(traces);
    for (std::size_t i = 0; i < suite.size(); ++i) {
      std::string id = std::to_string(i);
      m.ingest(RequestEvent{id, suite[i]});
      m.ingest(ResponseEvent{id, decisions[i]});
    }
    benchmark::DoNotOptimize(m.report());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(suite.size()));
}
BENCHMARK(BM_MonitorIngest);

void BM_ParseEventLine(benchmark::State& state) {
  auto suite = gen_multiple(library_policy());
  std::string line = to_event_line(RequestEvent{"req_multiple_0128", suite.back()});
  for (auto _ : state) benchmark::DoNotOptimize(parse_event_line(line));
}
BENCHMARK(BM_ParseEventLine);

}  // namespace
}  // namespace xacmlcov

BENCHMARK_MAIN();
