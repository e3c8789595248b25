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

// On-line coverage engine.
//
// The monitor holds trace sets and consumes a stream of request/response
// events. A request event parks its tuple under the request id; the matching
// response event tests the tuple against every trace and marks a trace
// covered when the tuple satisfies its chain and the decision equals the
// trace effect (any decision does when the effect is absent).

#ifndef XACMLCOV_MONITOR_H_
#define XACMLCOV_MONITOR_H_

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "xacmlcov/model.h"
#include "xacmlcov/tracegen.h"

namespace xacmlcov {

bool trace_matches(const Trace& trace, const RequestTuple& req);

// True if `decision` is what a covering response for `trace` may return.
bool effect_admits(const Trace& trace, Decision decision);

struct RequestEvent {
  std::string request_id;
  RequestTuple tuple;

  friend bool operator==(const RequestEvent&, const RequestEvent&) = default;
};

struct ResponseEvent {
  std::string request_id;
  Decision decision = Decision::kNotApplicable;

  friend bool operator==(const ResponseEvent&, const ResponseEvent&) = default;
};

struct FlushEvent {
  friend bool operator==(const FlushEvent&, const FlushEvent&) = default;
};

using Event = std::variant<RequestEvent, ResponseEvent, FlushEvent>;

struct TraceCoverage {
  bool covered = false;
  std::vector<std::string> covering_request_ids;
};

// round(100 * covered / total, 2) half-up, in hundredths of a percent.
// 0/0 counts as complete.
std::int64_t percent_hundredths(std::size_t covered, std::size_t total);

struct CriterionCoverage {
  Criterion criterion = Criterion::kRuleTargetTrue;
  std::size_t total = 0;
  std::size_t covered = 0;
  std::int64_t hundredths = 0;
  std::vector<std::string> uncovered;

  bool empty() const { return total == 0; }
  double percentage() const { return static_cast<double>(hundredths) / 100.0; }
  // "75.00"
  std::string percentage_text() const;

  friend bool operator==(const CriterionCoverage&, const CriterionCoverage&) = default;
};

struct CoverageReport {
  std::vector<CriterionCoverage> criteria;
  std::size_t requests = 0;
  std::size_t responses = 0;
  std::size_t skipped_events = 0;

  const CriterionCoverage* find(Criterion c) const;

  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

// Thread-safe: ingestion and reporting serialize on an internal mutex, so
// events from concurrent producers are applied one at a time in arrival
// order.
class CoverageMonitor {
 public:
  // At most one trace set per criterion (std::invalid_argument otherwise).
  explicit CoverageMonitor(std::vector<TraceSet> trace_sets);

  CoverageMonitor(const CoverageMonitor&) = delete;
  CoverageMonitor& operator=(const CoverageMonitor&) = delete;

  // Applies one event. A FlushEvent yields the current report without
  // resetting anything. Throws OrphanResponse for a response without a
  // pending request and DuplicateRequestId for a reused request id; the state
  // is unchanged in both cases.
  std::optional<CoverageReport> ingest(const Event& event);

  // Records one input line the caller could not decode.
  void note_skipped();

  CoverageReport report() const;

  // Throws std::out_of_range for an unknown criterion or id.
  TraceCoverage coverage(Criterion c, std::string_view trace_id) const;
  std::size_t pending_requests() const;

 private:
  struct CriterionState {
    TraceSet set;
    std::vector<TraceCoverage> coverage;  // parallel to set.traces
  };

  void on_response(const ResponseEvent& e);
  CoverageReport report_locked() const;

  mutable std::mutex mu_;
  std::vector<CriterionState> criteria_;
  std::map<std::string, RequestTuple, std::less<>> pending_;
  std::set<std::string, std::less<>> seen_ids_;
  std::size_t requests_ = 0;
  std::size_t responses_ = 0;
  std::size_t skipped_ = 0;
};

// Aligned text table, one row per criterion and one column per report:
//
//   Coverage Criterion     Simple Combinatorial (6)
//   Rule Target True       100.00%
std::string format_table(
    const std::vector<std::pair<std::string, CoverageReport>>& columns);

}  // namespace xacmlcov

#endif  // XACMLCOV_MONITOR_H_
