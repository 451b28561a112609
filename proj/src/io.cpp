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

#include "partid/io.hpp"

#include <algorithm>

#include "partid/error.hpp"
#include "partid/persuasion.hpp"

namespace partid {
namespace {

std::string EscapePointer(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') {
      out += "~0";
    } else if (ch == '/') {
      out += "~1";
    } else {
      out += ch;
    }
  }
  return out;
}

// A JSON value together with its pointer, for error messages.
class Node {
 public:
  Node(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  std::string where() const { return path_.empty() ? "/" : path_; }

  [[noreturn]] void Malformed(const std::string& msg) const {
    Fail(ErrorKind::kMalformedInput, where() + ": " + msg);
  }

  bool Has(const char* key) const { return j_.is_object() && j_.contains(key); }

  Node operator[](const std::string& key) const {
    if (!j_.is_object()) Malformed("expected an object");
    const auto it = j_.find(key);
    if (it == j_.end()) Malformed("missing key \"" + key + "\"");
    return Node(*it, path_ + "/" + EscapePointer(key));
  }

  void RequireArray() const {
    if (!j_.is_array()) Malformed("expected an array");
  }
  std::size_t size() const {
    RequireArray();
    return j_.size();
  }
  Node at(std::size_t i) const {
    RequireArray();
    return Node(j_[i], path_ + "/" + std::to_string(i));
  }

  std::vector<std::string> Keys() const {
    if (!j_.is_object()) Malformed("expected an object");
    std::vector<std::string> keys;
    for (auto it = j_.begin(); it != j_.end(); ++it) keys.push_back(it.key());
    return keys;
  }

  std::string String() const {
    if (!j_.is_string()) Malformed("expected a string");
    return j_.get<std::string>();
  }

  Rational Number() const {
    if (j_.is_number_integer()) return Rational(j_.get<long long>());
    if (!j_.is_string()) Malformed("expected a rational string such as \"2/3\"");
    const auto r = ParseRational(j_.get<std::string>());
    if (!r) Malformed("cannot parse \"" + j_.get<std::string>() + "\" as a rational");
    return *r;
  }

  std::vector<std::string> Strings() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).String());
    return out;
  }

  Vector Numbers(std::size_t expected) const {
    if (size() != expected) {
      Malformed("expected " + std::to_string(expected) + " entries, found " +
                std::to_string(size()));
    }
    Vector out;
    for (std::size_t i = 0; i < expected; ++i) out.push_back(at(i).Number());
    return out;
  }

  Vector Numbers() const { return Numbers(size()); }

  // Runs f, prefixing any domain error with this pointer.
  template <typename F>
  auto Build(F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      if (e.detail().rfind(where(), 0) == 0) throw;
      throw Error(e.kind(), where() + ": " + e.detail());
    }
  }

 private:
  const Json& j_;
  std::string path_;
};

std::size_t LabelIndex(const Node& n, const StateSpace& states) {
  const std::string label = n.String();
  return n.Build([&] { return states.IndexOf(label); });
}

Event ParseEvent(const Node& n, const StateSpace& states) {
  Event e;
  for (std::size_t i = 0; i < n.size(); ++i) e.push_back(LabelIndex(n.at(i), states));
  return e;
}

CredalSet ParseCredalSet(const Node& n, const StateSpace& states) {
  if (n.Has("simplex")) {
    const Event e = ParseEvent(n["simplex"], states);
    return n.Build([&] { return SubSimplex(states, e); });
  }
  const Node verts = n["vertices"];
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < verts.size(); ++i) pts.push_back(verts.at(i).Numbers(states.size()));
  return verts.Build([&] { return Canonicalize(states, std::move(pts)); });
}

PartitionedPrior ParsePartitionedPrior(const Node& n, const StateSpace& states) {
  const Node cells_node = n["cells"];
  std::vector<Event> cells;
  for (std::size_t i = 0; i < cells_node.size(); ++i) {
    cells.push_back(ParseEvent(cells_node.at(i), states));
  }
  const Partition part = cells_node.Build([&] { return Partition(states.size(), cells); });
  // File order to partition order.
  std::vector<std::size_t> slot;
  for (auto cell : cells) {
    std::sort(cell.begin(), cell.end());
    const auto& sorted = part.cells();
    slot.push_back(static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), cell) -
                                            sorted.begin()));
  }
  const Vector tau_file = n["tau"].Numbers(cells.size());
  Vector tau(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) tau[slot[i]] = tau_file[i];
  const ReducedForm rf = n["tau"].Build([&] { return ReducedForm(part, tau); });
  if (!n.Has("cell_sets")) return n.Build([&] { return FullAmbiguity(states, rf); });
  const Node sets_node = n["cell_sets"];
  if (sets_node.size() != cells.size()) sets_node.Malformed("expected one set per cell");
  std::vector<std::optional<CredalSet>> sets(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    sets[slot[i]] = ParseCredalSet(sets_node.at(i), states);
  }
  std::vector<CredalSet> ordered;
  for (auto& s : sets) ordered.push_back(std::move(*s));
  return n.Build([&] { return Assemble(rf, std::move(ordered)); });
}

Experiment ParseExperiment(const Node& n, const StateSpace& states) {
  const auto signals = n["signals"].Strings();
  const Node lik = n["likelihood"];
  RationalMatrix rows(states.size(), signals.size());
  std::vector<char> seen(states.size(), 0);
  for (const auto& key : lik.Keys()) {
    const Node row = lik[key];
    const std::size_t s = row.Build([&] { return states.IndexOf(key); });
    const Vector r = row.Numbers(signals.size());
    for (std::size_t y = 0; y < signals.size(); ++y) rows(s, y) = r[y];
    seen[s] = 1;
  }
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (!seen[s]) lik.Malformed("no likelihood row for state \"" + states.label(s) + "\"");
  }
  return n.Build([&] { return Experiment(states, signals, rows); });
}

InformationStructure ParseStructure(const Node& n, const StateSpace& states) {
  const Vector weights = n["weights"].Numbers();
  const Node posts = n["posteriors"];
  std::vector<CredalSet> sets;
  for (std::size_t i = 0; i < posts.size(); ++i) sets.push_back(ParseCredalSet(posts.at(i), states));
  if (n.Has("signals")) {
    const auto names = n["signals"].Strings();
    return n.Build([&] { return InformationStructure(names, weights, sets); });
  }
  return n.Build([&] { return InformationStructure(weights, sets); });
}

template <typename Table>
Table ParseTable(const Node& n, const StateSpace& states, const char* key) {
  const auto actions = n["actions"].Strings();
  const Node body = n[key];
  RationalMatrix t(actions.size(), states.size());
  for (std::size_t a = 0; a < actions.size(); ++a) {
    const Vector row = body[actions[a]].Numbers(states.size());
    for (std::size_t s = 0; s < states.size(); ++s) t(a, s) = row[s];
  }
  if (body.Keys().size() != actions.size()) body.Malformed("rows for undeclared actions");
  return n.Build([&] { return Table(actions, t); });
}

bool SameTable(const std::optional<UtilityTable>& a, const std::optional<UtilityTable>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || (a->actions() == b->actions() && a->table() == b->table());
}

bool SamePrior(const PartitionedPrior& a, const PartitionedPrior& b) {
  return a.reduced.partition == b.reduced.partition && a.reduced.tau == b.reduced.tau &&
         a.cell_sets == b.cell_sets && a.assembled == b.assembled;
}

template <typename T, typename Eq>
bool SameOptional(const std::optional<T>& a, const std::optional<T>& b, Eq eq) {
  if (a.has_value() != b.has_value()) return false;
  return !a || eq(*a, *b);
}

}  // namespace

ProblemFile ParseProblem(const Json& doc) {
  const Node root(doc, "");
  if (!doc.is_object()) root.Malformed("expected an object");
  ProblemFile p;
  if (root.Has("states")) {
    const Node s = root["states"];
    const auto labels = s.Strings();
    p.states = s.Build([&] { return StateSpace(labels); });
  }
  const bool shorthand = root.Has("persuasion_game") && root["persuasion_game"].Has("prosecutor_judge");
  if (shorthand) {
    const Node pj = root["persuasion_game"]["prosecutor_judge"];
    const Rational g = pj["g"].Number();
    const Rational tau0 = pj["tau0"].Number();
    const PersuasionGame game = pj.Build([&] { return ProsecutorJudge(g, tau0); });
    if (p.states && !(*p.states == game.prior().assembled.states())) {
      root["states"].Malformed("the prosecutor-judge game uses states GP, GA, I");
    }
    if (root.Has("partitioned_prior")) {
      root["partitioned_prior"].Malformed("conflicts with persuasion_game/prosecutor_judge");
    }
    p.states = game.prior().assembled.states();
    p.partitioned_prior = game.prior();
    p.receiver = game.receiver();
    p.sender = game.sender();
  }

  const char* needs_states[] = {"prior_set", "partitioned_prior", "experiment", "experiments",
                                "information_structure", "utility", "loss", "persuasion_game"};
  for (const char* key : needs_states) {
    if (root.Has(key) && !p.states) root.Malformed("section \"" + std::string(key) + "\" needs \"states\"");
  }
  for (const auto& key : root.Keys()) {
    const bool known = key == "states" || std::find_if(std::begin(needs_states), std::end(needs_states),
                                                       [&](const char* k) { return key == k; }) !=
                                              std::end(needs_states);
    if (!known) root.Malformed("unknown section \"" + key + "\"");
  }
  if (!p.states) return p;
  const StateSpace& states = *p.states;

  if (root.Has("prior_set")) p.prior_set = ParseCredalSet(root["prior_set"], states);
  if (root.Has("partitioned_prior")) {
    p.partitioned_prior = ParsePartitionedPrior(root["partitioned_prior"], states);
  }
  if (root.Has("experiment")) p.experiment = ParseExperiment(root["experiment"], states);
  if (root.Has("experiments")) {
    const Node ex = root["experiments"];
    for (const auto& name : ex.Keys()) p.experiments.emplace_back(name, ParseExperiment(ex[name], states));
  }
  if (root.Has("information_structure")) {
    p.information_structure = ParseStructure(root["information_structure"], states);
  }
  if (root.Has("utility")) p.utility = ParseTable<UtilityTable>(root["utility"], states, "utility");
  if (root.Has("loss")) p.loss = ParseTable<LossTable>(root["loss"], states, "loss");
  if (root.Has("persuasion_game") && !shorthand) {
    const Node game = root["persuasion_game"];
    if (!p.partitioned_prior) game.Malformed("a persuasion game needs \"partitioned_prior\"");
    p.receiver = ParseTable<UtilityTable>(game["receiver"], states, "utility");
    p.sender = ParseTable<UtilityTable>(game["sender"], states, "utility");
  }
  return p;
}

ProblemFile ParseProblemText(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    Fail(ErrorKind::kMalformedInput, std::string("/: invalid JSON: ") + e.what());
  }
  return ParseProblem(doc);
}

Json EncodeRational(const Rational& value) { return ToString(value); }

Json EncodeVector(const Vector& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(ToString(v));
  return out;
}

Json EncodeCredalSet(const CredalSet& c) {
  Json verts = Json::array();
  for (const auto& v : c.vertices()) verts.push_back(EncodeVector(v));
  return Json{{"vertices", verts}};
}

Json EncodeEvent(const StateSpace& states, const Event& event) {
  Json out = Json::array();
  for (std::size_t s : event) out.push_back(states.label(s));
  return out;
}

Json EncodePartition(const StateSpace& states, const Partition& partition) {
  Json out = Json::array();
  for (const auto& cell : partition.cells()) out.push_back(EncodeEvent(states, cell));
  return out;
}

Json EncodePartitionedPrior(const PartitionedPrior& pp) {
  const StateSpace& states = pp.assembled.states();
  Json sets = Json::array();
  for (const auto& c : pp.cell_sets) sets.push_back(EncodeCredalSet(c));
  return Json{{"cells", EncodePartition(states, pp.reduced.partition)},
              {"tau", EncodeVector(pp.reduced.tau)},
              {"cell_sets", sets}};
}

Json EncodeExperiment(const Experiment& pi) {
  Json lik = Json::object();
  for (std::size_t s = 0; s < pi.states().size(); ++s) {
    lik[pi.states().label(s)] = EncodeVector(pi.rows().Row(s));
  }
  return Json{{"signals", pi.signals()}, {"likelihood", lik}};
}

Json EncodeKernel(const Kernel& k) {
  Json rows = Json::object();
  for (std::size_t a = 0; a < k.from_signals.size(); ++a) {
    rows[k.from_signals[a]] = EncodeVector(k.rows.Row(a));
  }
  return Json{{"to", k.to_signals}, {"rows", rows}};
}

Json EncodeStructure(const InformationStructure& is) {
  Json posts = Json::array();
  for (const auto& p : is.posteriors()) posts.push_back(EncodeCredalSet(p));
  return Json{{"signals", is.signals()}, {"weights", EncodeVector(is.weights())}, {"posteriors", posts}};
}

Json EncodeTable(const ActionTable& table, const char* key) {
  Json body = Json::object();
  for (std::size_t a = 0; a < table.num_actions(); ++a) {
    body[table.actions()[a]] = EncodeVector(table.Row(a));
  }
  return Json{{"actions", table.actions()}, {key, body}};
}

Json ToJson(const ProblemFile& p) {
  Json out = Json::object();
  if (p.states) out["states"] = p.states->labels();
  if (p.prior_set) out["prior_set"] = EncodeCredalSet(*p.prior_set);
  if (p.partitioned_prior) out["partitioned_prior"] = EncodePartitionedPrior(*p.partitioned_prior);
  if (p.experiment) out["experiment"] = EncodeExperiment(*p.experiment);
  if (!p.experiments.empty()) {
    Json ex = Json::object();
    for (const auto& [name, pi] : p.experiments) ex[name] = EncodeExperiment(pi);
    out["experiments"] = ex;
  }
  if (p.information_structure) out["information_structure"] = EncodeStructure(*p.information_structure);
  if (p.utility) out["utility"] = EncodeTable(*p.utility, "utility");
  if (p.loss) out["loss"] = EncodeTable(*p.loss, "loss");
  if (p.receiver && p.sender) {
    out["persuasion_game"] = Json{{"receiver", EncodeTable(*p.receiver, "utility")},
                                  {"sender", EncodeTable(*p.sender, "utility")}};
  }
  return out;
}

bool SameProblem(const ProblemFile& a, const ProblemFile& b) {
  auto eq = [](const auto& x, const auto& y) { return x == y; };
  if (!SameOptional(a.states, b.states, eq)) return false;
  if (!SameOptional(a.prior_set, b.prior_set, eq)) return false;
  if (!SameOptional(a.partitioned_prior, b.partitioned_prior, SamePrior)) return false;
  if (!SameOptional(a.experiment, b.experiment, eq)) return false;
  if (a.experiments != b.experiments) return false;
  if (!SameOptional(a.information_structure, b.information_structure,
                    [](const InformationStructure& x, const InformationStructure& y) {
                      return x.signals() == y.signals() && x == y;
                    })) {
    return false;
  }
  auto same_table = [](const ActionTable& x, const ActionTable& y) {
    return x.actions() == y.actions() && x.table() == y.table();
  };
  return SameOptional(a.utility, b.utility, same_table) &&
         SameOptional(a.loss, b.loss, same_table) && SameTable(a.receiver, b.receiver) &&
         SameTable(a.sender, b.sender);
}

}  // namespace partid
