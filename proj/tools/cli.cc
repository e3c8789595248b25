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

#include "cli.h"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "xacmlcov/errors.h"
#include "xacmlcov/json_codec.h"
#include "xacmlcov/pdp.h"
#include "xacmlcov/xacml_io.h"

namespace xacmlcov::cli {
namespace {

const std::vector<std::string> kCriterionChoices = {"rtt", "rtf", "rct", "rcf",
                                                    "all"};
const std::vector<std::string> kStrategyChoices = {"simple", "multiple"};

std::optional<Criterion> criterion_arg(const std::string& s) {
  if (s == "all") return std::nullopt;
  return criterion_from_string(s);
}

Strategy strategy_arg(const std::string& s) { return *strategy_from_string(s); }

std::vector<TraceSet> traces_for(const PolicySet& ps,
                                 std::optional<Criterion> criterion) {
  if (!criterion) return generate_all(ps);
  return {generate(ps, *criterion)};
}

// Writes to `path`, or to `out` when the path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

struct Options {
  std::string policy;
  std::string criterion = "all";
  std::string strategy;
  std::string out;
  std::string out_dir;
  std::string request;
  std::string report;
  std::string dump_events;
  std::string traces;
  std::string events = "-";
  std::uint64_t max_requests = kDefaultSuiteCap;
  bool xml = false;
  bool table = false;
};

int cmd_traces(const Options& o, std::ostream& out) {
  PolicySet ps = load_policy(o.policy).root;
  auto sets = traces_for(ps, criterion_arg(o.criterion));
  Json j = sets.size() == 1 && o.criterion != "all" ? to_json(sets.front())
                                                    : to_json(sets);
  emit(o.out, j.dump(2) + "\n", out);
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  PolicySet ps = load_policy(o.policy).root;
  Strategy s = strategy_arg(o.strategy);
  auto suite = generate_suite(ps, s, GenerationOptions{o.max_requests});
  write_suite(o.out_dir, ps.id, s, suite);
  out << suite.size() << " requests written to " << o.out_dir << "\n";
  return kOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  PolicySet ps = load_policy(o.policy).root;
  Decision d = evaluate(ps, load_request(o.request));
  if (o.xml) {
    out << emit_response(d);
  } else {
    out << to_string(d) << "\n";
  }
  return kOk;
}

int cmd_cover(const Options& o, std::ostream& out) {
  PolicySet ps = load_policy(o.policy).root;
  Strategy s = strategy_arg(o.strategy);
  CoverRun run = run_cover(ps, s, criterion_arg(o.criterion),
                           GenerationOptions{o.max_requests});
  if (!o.dump_events.empty()) {
    std::string log;
    for (const auto& e : run.events) log += to_event_line(e) + "\n";
    write_text_file(o.dump_events, log);
  }
  std::string table = format_table({{column_title(s, run.suite_size), run.report}});
  std::string json = to_json(run.report).dump(2) + "\n";
  if (o.report.empty() || o.report == "-") {
    out << json << table;
  } else {
    write_text_file(o.report, json);
    out << table;
  }
  return kOk;
}

void print_report(const CoverageReport& r, bool table, std::ostream& out) {
  if (table) {
    out << format_table(
        {{"Coverage (" + std::to_string(r.responses) + " responses)", r}});
  } else {
    out << to_json(r).dump() << "\n";
  }
}

int cmd_monitor(const Options& o, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CoverageMonitor monitor(
      trace_sets_from_json(parse_json(read_text_file(o.traces))));
  std::unique_ptr<std::ifstream> file;
  std::istream* src = &in;
  if (o.events != "-") {
    file = std::make_unique<std::ifstream>(o.events);
    if (!*file) throw IoError("cannot open " + o.events);
    src = file.get();
  }
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(*src, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      if (auto r = monitor.ingest(parse_event_line(line)))
        print_report(*r, o.table, out);
    } catch (const FormatError& e) {
      err << "warning: line " << lineno << " skipped: " << e.what() << "\n";
      monitor.note_skipped();
    } catch (const OrphanResponse& e) {
      err << "warning: line " << lineno << " skipped: " << e.what() << "\n";
      monitor.note_skipped();
    } catch (const DuplicateRequestId& e) {
      err << "warning: line " << lineno << " skipped: " << e.what() << "\n";
      monitor.note_skipped();
    }
  }
  CoverageReport final_report = monitor.report();
  print_report(final_report, o.table, out);
  if (!o.report.empty()) write_text_file(o.report, to_json(final_report).dump(2) + "\n");
  return kOk;
}

template <typename Fn>
int guarded(Fn fn, std::ostream& err) {
  try {
    return fn();
  } catch (const SuiteTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kSuiteTooLarge;
  } catch (const UnsupportedFeature& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const UnsupportedCondition& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const EmptyPolicyValues& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const Error& e) {
    // I/O, XML syntax, schema and JSON format failures.
    err << "error: " << e.what() << "\n";
    return kParseFailure;
  }
}

}  // namespace

std::string column_title(Strategy strategy, std::size_t suite_size) {
  std::string name = strategy == Strategy::kSimple ? "Simple" : "Multiple";
  return name + " Combinatorial (" + std::to_string(suite_size) + ")";
}

CoverRun run_cover(const PolicySet& ps, Strategy strategy,
                   std::optional<Criterion> criterion,
                   const GenerationOptions& options) {
  CoverageMonitor monitor(traces_for(ps, criterion));
  auto suite = generate_suite(ps, strategy, options);
  CoverRun run;
  run.suite_size = suite.size();
  run.events.reserve(2 * suite.size());
  for (std::size_t i = 0; i < suite.size(); ++i) {
    std::string id = request_id(strategy, i + 1);
    Decision d = evaluate(ps, suite[i]);
    run.events.emplace_back(RequestEvent{id, suite[i]});
    monitor.ingest(run.events.back());
    run.events.emplace_back(ResponseEvent{id, d});
    monitor.ingest(run.events.back());
  }
  run.report = monitor.report();
  return run;
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"XACML policy coverage toolkit", "xacmlcov"};
  app.require_subcommand(1);
  Options o;

  auto* traces = app.add_subcommand("traces", "Derive coverage traces from a policy");
  traces->add_option("--policy", o.policy, "XACML policy file")->required();
  traces->add_option("--criterion", o.criterion, "rtt|rtf|rct|rcf|all")
      ->check(CLI::IsMember(kCriterionChoices));
  traces->add_option("--out", o.out, "Output JSON file (default: stdout)");

  auto* gen = app.add_subcommand("gen", "Generate a request suite");
  gen->add_option("--policy", o.policy, "XACML policy file")->required();
  gen->add_option("--strategy", o.strategy, "simple|multiple")
      ->required()
      ->check(CLI::IsMember(kStrategyChoices));
  gen->add_option("--out-dir", o.out_dir, "Directory for request files")->required();
  gen->add_option("--max-requests", o.max_requests, "Suite size cap");

  auto* eval = app.add_subcommand("eval", "Evaluate one request against a policy");
  eval->add_option("--policy", o.policy, "XACML policy file")->required();
  eval->add_option("--request", o.request, "XACML request file")->required();
  eval->add_flag("--xml", o.xml, "Print an XACML response document");

  auto* cover = app.add_subcommand("cover", "Run the full coverage pipeline");
  cover->add_option("--policy", o.policy, "XACML policy file")->required();
  cover->add_option("--strategy", o.strategy, "simple|multiple")
      ->required()
      ->check(CLI::IsMember(kStrategyChoices));
  cover->add_option("--criterion", o.criterion, "rtt|rtf|rct|rcf|all")
      ->check(CLI::IsMember(kCriterionChoices));
  cover->add_option("--report", o.report, "Report JSON file (default: stdout)");
  cover->add_option("--dump-events", o.dump_events,
                    "Write the monitor event log (JSON lines)");
  cover->add_option("--max-requests", o.max_requests, "Suite size cap");

  auto* monitor = app.add_subcommand("monitor", "Consume a JSON-lines event stream");
  monitor->add_option("--traces", o.traces, "Trace JSON file")->required();
  monitor->add_option("--events", o.events, "Event log (default: stdin)");
  monitor->add_option("--report", o.report, "Also write the final report JSON here");
  monitor->add_flag("--table", o.table, "Print text tables instead of JSON lines");

  std::vector<const char*> argv;
  argv.push_back("xacmlcov");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run 'xacmlcov --help' for usage\n";
    return kUsage;
  }

  if (traces->parsed()) return guarded([&] { return cmd_traces(o, out); }, err);
  if (gen->parsed()) return guarded([&] { return cmd_gen(o, out); }, err);
  if (eval->parsed()) return guarded([&] { return cmd_eval(o, out); }, err);
  if (cover->parsed()) return guarded([&] { return cmd_cover(o, out); }, err);
  return guarded([&] { return cmd_monitor(o, in, out, err); }, err);
}

}  // namespace xacmlcov::cli
