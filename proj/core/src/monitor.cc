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

#include "xacmlcov/monitor.h"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "xacmlcov/errors.h"

namespace xacmlcov {

bool trace_matches(const Trace& trace, const RequestTuple& req) {
  for (const auto& level : trace.chain)
    for (Category c : kAllCategories)
      if (!level[c].satisfied_by(req[c])) return false;
  return true;
}

bool effect_admits(const Trace& trace, Decision decision) {
  return !trace.effect || to_decision(*trace.effect) == decision;
}

std::int64_t percent_hundredths(std::size_t covered, std::size_t total) {
  if (total == 0) return 10000;
  auto c = static_cast<std::int64_t>(covered);
  auto t = static_cast<std::int64_t>(total);
  return (20000 * c + t) / (2 * t);
}

std::string CriterionCoverage::percentage_text() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%02lld",
                static_cast<long long>(hundredths / 100),
                static_cast<long long>(hundredths % 100));
  return buf;
}

const CriterionCoverage* CoverageReport::find(Criterion c) const {
  for (const auto& cc : criteria)
    if (cc.criterion == c) return &cc;
  return nullptr;
}

CoverageMonitor::CoverageMonitor(std::vector<TraceSet> trace_sets) {
  for (auto& ts : trace_sets) {
    for (const auto& existing : criteria_)
      if (existing.set.criterion == ts.criterion)
        throw std::invalid_argument("two trace sets for criterion " +
                                    std::string(to_string(ts.criterion)));
    CriterionState st;
    st.coverage.resize(ts.traces.size());
    st.set = std::move(ts);
    criteria_.push_back(std::move(st));
  }
}

std::optional<CoverageReport> CoverageMonitor::ingest(const Event& event) {
  std::lock_guard<std::mutex> lock(mu_);
  if (const auto* req = std::get_if<RequestEvent>(&event)) {
    if (!seen_ids_.insert(req->request_id).second)
      throw DuplicateRequestId("request id '" + req->request_id +
                               "' already seen");
    pending_.emplace(req->request_id, req->tuple);
    ++requests_;
    return std::nullopt;
  }
  if (const auto* resp = std::get_if<ResponseEvent>(&event)) {
    on_response(*resp);
    return std::nullopt;
  }
  return report_locked();
}

void CoverageMonitor::on_response(const ResponseEvent& e) {
  auto it = pending_.find(e.request_id);
  if (it == pending_.end())
    throw OrphanResponse("response for unknown request '" + e.request_id + "'");
  const RequestTuple& tuple = it->second;
  for (auto& st : criteria_) {
    for (std::size_t i = 0; i < st.set.traces.size(); ++i) {
      const Trace& t = st.set.traces[i];
      if (effect_admits(t, e.decision) && trace_matches(t, tuple)) {
        st.coverage[i].covered = true;
        st.coverage[i].covering_request_ids.push_back(e.request_id);
      }
    }
  }
  pending_.erase(it);
  ++responses_;
}

void CoverageMonitor::note_skipped() {
  std::lock_guard<std::mutex> lock(mu_);
  ++skipped_;
}

CoverageReport CoverageMonitor::report() const {
  std::lock_guard<std::mutex> lock(mu_);
  return report_locked();
}

CoverageReport CoverageMonitor::report_locked() const {
  CoverageReport r;
  r.requests = requests_;
  r.responses = responses_;
  r.skipped_events = skipped_;
  for (const auto& st : criteria_) {
    CriterionCoverage cc;
    cc.criterion = st.set.criterion;
    cc.total = st.set.traces.size();
    for (std::size_t i = 0; i < cc.total; ++i) {
      if (st.coverage[i].covered) {
        ++cc.covered;
      } else {
        cc.uncovered.push_back(st.set.traces[i].id);
      }
    }
    cc.hundredths = percent_hundredths(cc.covered, cc.total);
    r.criteria.push_back(std::move(cc));
  }
  return r;
}

TraceCoverage CoverageMonitor::coverage(Criterion c,
                                        std::string_view trace_id) const {
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& st : criteria_) {
    if (st.set.criterion != c) continue;
    for (std::size_t i = 0; i < st.set.traces.size(); ++i)
      if (st.set.traces[i].id == trace_id) return st.coverage[i];
  }
  throw std::out_of_range("no trace '" + std::string(trace_id) + "' for " +
                          std::string(to_string(c)));
}

std::size_t CoverageMonitor::pending_requests() const {
  std::lock_guard<std::mutex> lock(mu_);
  return pending_.size();
}

std::string format_table(
    const std::vector<std::pair<std::string, CoverageReport>>& columns) {
  const std::string first = "Coverage Criterion";
  std::vector<Criterion> rows;
  for (Criterion c : kAllCriteria)
    for (const auto& [title, report] : columns)
      if (report.find(c) != nullptr &&
          std::find(rows.begin(), rows.end(), c) == rows.end())
        rows.push_back(c);

  std::size_t w0 = first.size();
  for (Criterion c : rows) w0 = std::max(w0, display_name(c).size());
  std::vector<std::size_t> widths;
  for (const auto& col : columns) widths.push_back(std::max<std::size_t>(col.first.size(), 7));

  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  auto finish = [](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line + "\n";
  };

  std::string out;
  std::string header = pad(first, w0);
  for (std::size_t i = 0; i < columns.size(); ++i)
    header += "  " + pad(columns[i].first, widths[i]);
  out += finish(header);
  std::size_t rule = w0;
  for (auto w : widths) rule += 2 + w;
  out += std::string(rule, '-') + "\n";
  for (Criterion c : rows) {
    std::string line = pad(std::string(display_name(c)), w0);
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const CriterionCoverage* cc = columns[i].second.find(c);
      line += "  " +
              pad(cc != nullptr ? cc->percentage_text() + "%" : std::string("n/a"),
                  widths[i]);
    }
    out += finish(line);
  }
  return out;
}

}  // namespace xacmlcov
