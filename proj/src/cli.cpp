// Copyright 2026 The partid Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "partid/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "partid/aumann.hpp"
#include "partid/decisions.hpp"
#include "partid/error.hpp"
#include "partid/io.hpp"
#include "partid/kernels.hpp"
#include "partid/persuasion.hpp"

namespace partid::cli {
namespace {

struct Options {
  std::string command;
  std::string problem;
  std::string output = "json";
  std::string emit_svg;
  std::string emit_csv;
  std::string criterion;
  std::string signal;
  int jobs = 0;
};

// Result of one command: a JSON document, or raw text for --output csv.
struct Result {
  Json doc;
  std::optional<std::string> text;
};

[[noreturn]] void Usage(const std::string& msg) { Fail(ErrorKind::kMalformedInput, msg); }

template <typename T>
const T& Need(const std::optional<T>& section, const char* name) {
  if (!section) Usage("missing section /" + std::string(name));
  return *section;
}

const CredalSet& PriorSet(const ProblemFile& p) {
  if (p.prior_set) return *p.prior_set;
  if (p.partitioned_prior) return p.partitioned_prior->assembled;
  Usage("missing section /prior_set (or /partitioned_prior)");
}

// The structure from /information_structure, else the one /experiment
// induces on the prior set.
InformationStructure Structure(const ProblemFile& p) {
  if (p.information_structure) return *p.information_structure;
  if (p.experiment) return InducedStructure(*p.experiment, PriorSet(p));
  Usage("missing section /information_structure (or /experiment)");
}

std::size_t SignalIndex(const Experiment& pi, const Options& opt) {
  if (opt.signal.empty()) Usage("--signal is required for this command");
  return pi.SignalIndex(opt.signal);
}

Json RuleJson(const Experiment& pi, const ActionTable& table, const DecisionRule& d) {
  Json rule = Json::object();
  for (std::size_t y = 0; y < pi.num_signals(); ++y) rule[pi.signals()[y]] = table.actions()[d.action[y]];
  return rule;
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) Fail(ErrorKind::kMalformedInput, "cannot write " + path);
  f << text;
}

const char* VerdictName(Maximality::Verdict v) {
  switch (v) {
    case Maximality::Verdict::kYes:
      return "yes";
    case Maximality::Verdict::kNo:
      return "no";
    case Maximality::Verdict::kUnknown:
      break;
  }
  return "unknown";
}

Json IdentificationJson(const IdentificationReport& r, const StateSpace& states, bool full) {
  Json out{{"partition", EncodePartition(states, r.recovered)},
           {"partially_identified", r.prior.has_value()},
           {"nontrivial", r.nontrivial}};
  if (r.prior && full) {
    out["tau"] = EncodeVector(r.prior->reduced.tau);
    Json sets = Json::array();
    for (const auto& c : r.prior->cell_sets) sets.push_back(EncodeCredalSet(c));
    out["cell_sets"] = sets;
  }
  if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
  return out;
}

Result CheckConsistency(const ProblemFile& p, const Options&) {
  const auto& pi = Need(p.experiment, "experiment");
  const auto& c = PriorSet(p);
  const bool ok = IsConsistent(pi, c);
  Json out{{"consistent", ok}};
  if (ok) out["marginal"] = EncodeVector(Marginal(pi, c));
  return {out, {}};
}

Result CheckMeasurable(const ProblemFile& p, const Options&) {
  const auto& pi = Need(p.experiment, "experiment");
  const auto& pp = Need(p.partitioned_prior, "partitioned_prior");
  return {Json{{"measurable", IsMeasurable(pi, pp.reduced.partition)}}, {}};
}

Result UpdateCmd(const ProblemFile& p, const Options& opt) {
  const auto& pi = Need(p.experiment, "experiment");
  const auto& c = PriorSet(p);
  Json posts = Json::object();
  if (!opt.signal.empty()) {
    const std::size_t y = SignalIndex(pi, opt);
    posts[pi.signals()[y]] = EncodeCredalSet(Update(pi, c, y));
  } else {
    for (std::size_t y = 0; y < pi.num_signals(); ++y) {
      try {
        posts[pi.signals()[y]] = EncodeCredalSet(Update(pi, c, y));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kZeroProbabilitySignal) throw;
        posts[pi.signals()[y]] = nullptr;
      }
    }
  }
  return {Json{{"posteriors", posts}}, {}};
}

Result RecoverPartitionCmd(const ProblemFile& p, const Options&) {
  const auto& c = PriorSet(p);
  return {IdentificationJson(CheckPartiallyIdentified(c), c.states(), false), {}};
}

Result CheckPi(const ProblemFile& p, const Options&) {
  const auto& c = PriorSet(p);
  return {IdentificationJson(CheckPartiallyIdentified(c), c.states(), true), {}};
}

Result CheckMaximalCmd(const ProblemFile& p, const Options&) {
  const auto& pp = Need(p.partitioned_prior, "partitioned_prior");
  const Maximality m = CheckMaximal(pp);
  Json out{{"maximal", VerdictName(m.verdict)}};
  if (m.witness_cell) {
    const auto& states = pp.assembled.states();
    out["witness"] = Json{{"cell", EncodeEvent(states, pp.reduced.partition.cell(*m.witness_cell))},
                          {"halves", Json::array({EncodeCredalSet(m.witness->first),
                                                  EncodeCredalSet(m.witness->second)})}};
  }
  return {out, {}};
}

Result AumannCheck(const ProblemFile& p, const Options&) {
  const auto& c = PriorSet(p);
  const InformationStructure is = Structure(p);
  return {Json{{"plausible", IsAumannPlausible(is, c)},
               {"mixture", EncodeCredalSet(MinkowskiMix(is.weights(), is.posteriors()))}},
          {}};
}

Result Decompose(const ProblemFile& p, const Options&) {
  const auto& pp = Need(p.partitioned_prior, "partitioned_prior");
  const InformationStructure is = Structure(p);
  const auto taus = DecomposeReducedForm(is, pp);
  Json out = Json::object();
  for (std::size_t y = 0; y < is.size(); ++y) out[is.signals()[y]] = EncodeVector(taus[y].tau);
  return {Json{{"reduced_posteriors", out}}, {}};
}

Result ConstructExperimentCmd(const ProblemFile& p, const Options&) {
  const auto& pp = Need(p.partitioned_prior, "partitioned_prior");
  const auto& is = Need(p.information_structure, "information_structure");
  return {Json{{"experiment", EncodeExperiment(ConstructExperiment(is, pp))}}, {}};
}

Result Value(const ProblemFile& p, const Options& opt) {
  const auto& pi = Need(p.experiment, "experiment");
  const auto& u = Need(p.utility, "utility");
  const auto& c = PriorSet(p);
  const std::string crit = opt.criterion.empty() ? "V" : opt.criterion;
  if (crit == "V") {
    return {Json{{"criterion", "V"},
                 {"value", EncodeRational(ValueV(pi, c, u))},
                 {"prior_value", EncodeRational(MaxminValue(c, u).value)}},
            {}};
  }
  if (crit == "W") {
    return {Json{{"criterion", "W"},
                 {"value", EncodeRational(ValueW(pi, c, u))},
                 {"prior_value", EncodeRational(MaxminValueMixed(c, u).value)}},
            {}};
  }
  Usage("--criterion for value must be V or W");
}

Result Blackwell(const ProblemFile& p, const Options&) {
  if (p.experiments.size() < 2) Usage("blackwell needs two entries in /experiments");
  const auto& [n1, pi1] = p.experiments[0];
  const auto& [n2, pi2] = p.experiments[1];
  const auto k = IsGarblingOf(pi2, pi1);
  Json out{{"more_informative", k.has_value()}, {"finer", n1}, {"coarser", n2}};
  if (k) out["kernel"] = EncodeKernel(*k);
  return {out, {}};
}

Result Gamma(const ProblemFile& p, const Options& opt) {
  const auto& pi = Need(p.experiment, "experiment");
  const auto& loss = Need(p.loss, "loss");
  const auto& c = PriorSet(p);
  const std::string crit = opt.criterion.empty() ? "gamma" : opt.criterion;
  if (crit == "gamma") {
    const RuleValue r = GammaMinimax(c, pi, loss);
    return {Json{{"criterion", crit}, {"rule", RuleJson(pi, loss, r.rule)}, {"value", EncodeRational(r.value)}},
            {}};
  }
  if (crit == "gamma-star") {
    const RuleValue r = GammaStarMinimax(c, pi, loss);
    return {Json{{"criterion", crit}, {"rule", RuleJson(pi, loss, r.rule)}, {"value", EncodeRational(r.value)}},
            {}};
  }
  if (crit == "conditional") {
    const std::size_t y = SignalIndex(pi, opt);
    const ActionValue a = ConditionalGammaMinimax(c, pi, loss, y);
    return {Json{{"criterion", crit},
                 {"signal", pi.signals()[y]},
                 {"action", loss.actions()[a.action]},
                 {"value", EncodeRational(a.value)}},
            {}};
  }
  Usage("--criterion for gamma must be gamma, conditional or gamma-star");
}

Result Persuade(const ProblemFile& p, const Options& opt) {
  const PersuasionGame game(Need(p.partitioned_prior, "partitioned_prior"),
                            Need(p.receiver, "persuasion_game/receiver"),
                            Need(p.sender, "persuasion_game/sender"));
  const ReducedGame rg = Reduce(game);
  const PersuasionSolution sol = Concavify(game);
  Json support = Json::array();
  for (std::size_t i = 0; i < sol.design.support.size(); ++i) {
    support.push_back(Json{{"tau", EncodeVector(sol.design.support[i])},
                           {"weight", EncodeRational(sol.design.weights[i])},
                           {"action", rg.actions[ReceiverAction(rg, sol.design.support[i])]}});
  }
  Json out{{"value", EncodeRational(sol.design.value)},
           {"no_information_value", EncodeRational(SenderValue(rg, game.prior().reduced.tau))},
           {"boundary_ties", sol.design.boundary_ties},
           {"cells", EncodePartition(game.prior().assembled.states(), rg.cells)},
           {"support", support},
           {"experiment", EncodeExperiment(sol.experiment)}};
  std::optional<std::string> csv;
  if (!opt.emit_csv.empty() || opt.output == "csv") {
    std::ostringstream s;
    WriteCurveCsv(s, SampleCurve(rg, 101));
    csv = s.str();
  }
  if (!opt.emit_csv.empty()) WriteFile(opt.emit_csv, *csv);
  if (!opt.emit_svg.empty()) {
    std::ostringstream s;
    WriteStepPlotSvg(s, {{"tau0 = " + ToString(game.prior().reduced.tau[0]), rg}});
    WriteFile(opt.emit_svg, s.str());
  }
  return {out, opt.output == "csv" ? csv : std::nullopt};
}

using Handler = std::function<Result(const ProblemFile&, const Options&)>;

const std::vector<std::pair<std::string, Handler>>& Table() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"check-consistency", CheckConsistency},
      {"check-measurable", CheckMeasurable},
      {"update", UpdateCmd},
      {"recover-partition", RecoverPartitionCmd},
      {"check-pi", CheckPi},
      {"check-maximal", CheckMaximalCmd},
      {"aumann-check", AumannCheck},
      {"decompose", Decompose},
      {"construct-experiment", ConstructExperimentCmd},
      {"value", Value},
      {"blackwell", Blackwell},
      {"gamma", Gamma},
      {"persuade", Persuade},
  };
  return table;
}

std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) Fail(ErrorKind::kMalformedInput, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int Report(const Error& e, std::ostream& out, std::ostream& err) {
  err << "partid: " << e.what() << '\n';
  out << Json{{"error", Json{{"kind", ErrorKindName(e.kind())}, {"message", e.detail()}}}}.dump(2)
      << '\n';
  return e.kind() == ErrorKind::kMalformedInput ? kExitMalformed : kExitDomainError;
}

}  // namespace

const std::vector<std::string>& Commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, h] : Table()) n.push_back(name);
    return n;
  }();
  return names;
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Partially identified prior sets: identification, experiments and decisions."};
  app.name("partid");
  app.add_option("command", opt.command, "Subcommand")->required()->check(CLI::IsMember(Commands()));
  app.add_option("--problem", opt.problem, "JSON problem file")->required();
  app.add_option("--output", opt.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--emit-svg", opt.emit_svg, "persuade: write the step plot here");
  app.add_option("--emit-csv", opt.emit_csv, "persuade: write curve samples here");
  app.add_option("--criterion", opt.criterion, "value: V|W; gamma: gamma|conditional|gamma-star");
  app.add_option("--signal", opt.signal, "Signal name for update and conditional gamma");
  app.add_option("--jobs", opt.jobs, "Threads for the parallel kernels");
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    out << "\nCommands:";
    for (const auto& c : Commands()) out << ' ' << c;
    out << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "partid: " << e.what() << '\n';
    return kExitMalformed;
  }
  if (opt.output == "csv" && opt.command != "persuade") {
    err << "partid: --output csv is only available for persuade\n";
    return kExitMalformed;
  }
  SetThreadCount(opt.jobs);
  try {
    const ProblemFile problem = ParseProblemText(ReadFile(opt.problem));
    const auto& table = Table();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const auto& entry) { return entry.first == opt.command; });
    const Result r = it->second(problem, opt);
    if (r.text) {
      out << *r.text;
    } else {
      out << r.doc.dump(2) << '\n';
    }
    return kExitOk;
  } catch (const Error& e) {
    return Report(e, out, err);
  }
}

}  // namespace partid::cli
