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

#include "partid/persuasion.hpp"

#include <algorithm>
#include <cstdio>

#include "partid/aumann.hpp"
#include "partid/error.hpp"
#include "partid/lp.hpp"

namespace partid {
namespace {

void RequireBelief(const ReducedGame& rg, const Vector& tau) {
  if (tau.size() != rg.cells.size()) {
    Fail(ErrorKind::kDimensionMismatch, "belief has " + std::to_string(tau.size()) +
                                            " entries for " + std::to_string(rg.cells.size()) +
                                            " cells");
  }
  if (!IsDistribution(tau)) Fail(ErrorKind::kNotInSimplex, "belief is not a distribution");
}

// Receiver-optimal actions at tau, in action order.
std::vector<std::size_t> BestReplies(const ReducedGame& rg, const Vector& tau) {
  std::vector<std::size_t> best;
  Rational top;
  for (std::size_t a = 0; a < rg.actions.size(); ++a) {
    const Rational x = Dot(rg.receiver.Row(a), tau);
    if (best.empty() || x > top) {
      best = {a};
      top = x;
    } else if (x == top) {
      best.push_back(a);
    }
  }
  return best;
}

// All size-k subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> Subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::string Fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

Rational OnLine(const ReducedGame& rg, std::size_t action, const Rational& t) {
  return rg.sender(action, 0) * t + rg.sender(action, 1) * (1 - t);
}

}  // namespace

PersuasionGame::PersuasionGame(PartitionedPrior prior, UtilityTable receiver,
                               UtilityTable sender)
    : prior_(std::move(prior)), receiver_(std::move(receiver)), sender_(std::move(sender)) {
  const std::size_t n = prior_.assembled.states().size();
  if (receiver_.num_states() != n || sender_.num_states() != n) {
    Fail(ErrorKind::kDimensionMismatch, "utility tables do not match the state space");
  }
  if (receiver_.actions() != sender_.actions()) {
    Fail(ErrorKind::kDimensionMismatch, "receiver and sender tables list different actions");
  }
  const Maximality m = CheckMaximal(prior_);
  if (m.verdict == Maximality::Verdict::kNo) {
    Fail(ErrorKind::kNotMaximal, "cell " + std::to_string(*m.witness_cell) + " set is not extreme");
  }
}

ReducedGame Reduce(const PersuasionGame& game) {
  const auto& part = game.prior().reduced.partition;
  const std::size_t m = game.actions().size();
  ReducedGame rg{part, game.actions(), RationalMatrix(m, part.size()),
                 RationalMatrix(m, part.size())};
  const auto& cells = game.prior().cell_sets;
  for (std::size_t a = 0; a < m; ++a) {
    const Vector u = game.receiver().Row(a);
    const Vector v = game.sender().Row(a);
    for (std::size_t k = 0; k < part.size(); ++k) {
      const auto& verts = cells[k].vertices();
      Rational lu = Dot(u, verts.front());
      Rational lv = Dot(v, verts.front());
      for (std::size_t i = 1; i < verts.size(); ++i) {
        lu = std::min(lu, Dot(u, verts[i]));
        lv = std::min(lv, Dot(v, verts[i]));
      }
      rg.receiver(a, k) = lu;
      rg.sender(a, k) = lv;
    }
  }
  return rg;
}

std::size_t ReceiverAction(const ReducedGame& rg, const Vector& tau) {
  RequireBelief(rg, tau);
  const auto replies = BestReplies(rg, tau);
  std::size_t best = replies.front();
  Rational top = Dot(rg.sender.Row(best), tau);
  for (std::size_t a : replies) {
    const Rational x = Dot(rg.sender.Row(a), tau);
    if (x > top) {
      best = a;
      top = x;
    }
  }
  return best;
}

Rational SenderValue(const ReducedGame& rg, const Vector& tau) {
  return Dot(rg.sender.Row(ReceiverAction(rg, tau)), tau);
}

std::vector<Vector> CandidateBeliefs(const ReducedGame& rg) {
  const std::size_t k = rg.cells.size();
  std::vector<Vector> rows;
  for (std::size_t f = 0; f < k; ++f) {
    Vector e(k);
    e[f] = 1;
    rows.push_back(std::move(e));
  }
  for (std::size_t a = 0; a < rg.actions.size(); ++a) {
    for (std::size_t b = a + 1; b < rg.actions.size(); ++b) {
      Vector d(k);
      bool zero = true;
      for (std::size_t f = 0; f < k; ++f) {
        d[f] = rg.receiver(a, f) - rg.receiver(b, f);
        if (d[f] != 0) zero = false;
      }
      if (!zero) rows.push_back(std::move(d));
    }
  }
  std::vector<Vector> points;
  for (const auto& subset : Subsets(rows.size(), k - 1)) {
    RationalMatrix system(k, k + 1);
    for (std::size_t i = 0; i < k - 1; ++i) {
      for (std::size_t f = 0; f < k; ++f) system(i, f) = rows[subset[i]][f];
    }
    for (std::size_t f = 0; f < k; ++f) system(k - 1, f) = 1;
    system(k - 1, k) = 1;
    std::vector<std::size_t> pivots;
    const RationalMatrix rref = ReducedRowEchelon(system, &pivots);
    if (pivots.size() != k || pivots.back() != k - 1) continue;
    Vector tau(k);
    bool inside = true;
    for (std::size_t f = 0; f < k; ++f) {
      tau[f] = rref(f, k);
      if (tau[f] < 0) inside = false;
    }
    if (inside) points.push_back(std::move(tau));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

SignalDesign ConcavifyAt(const ReducedGame& rg, const Vector& tau0) {
  RequireBelief(rg, tau0);
  const auto candidates = CandidateBeliefs(rg);
  const std::size_t k = rg.cells.size();
  LinearProgram lp = LinearProgram::Nonnegative(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) lp.objective[i] = SenderValue(rg, candidates[i]);
  for (std::size_t f = 0; f < k; ++f) {
    Vector row(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) row[i] = candidates[i][f];
    lp.AddEquality(row, tau0[f]);
  }
  const LPResult r = SolveLP(lp);
  if (!r.optimal()) Fail(ErrorKind::kInvariantViolation, "concavification program has no optimum");
  SignalDesign design;
  design.value = r.value;
  // Prefer no disclosure whenever it already attains the optimum.
  if (SenderValue(rg, tau0) == r.value) {
    design.support = {tau0};
    design.weights = {Rational(1)};
    design.boundary_ties = BestReplies(rg, tau0).size() > 1;
    return design;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (r.solution[i] == 0) continue;
    design.support.push_back(candidates[i]);
    design.weights.push_back(r.solution[i]);
    if (BestReplies(rg, candidates[i]).size() > 1) design.boundary_ties = true;
  }
  return design;
}

PersuasionSolution Concavify(const PersuasionGame& game) {
  const ReducedGame rg = Reduce(game);
  SignalDesign design = ConcavifyAt(rg, game.prior().reduced.tau);
  std::vector<CredalSet> posteriors;
  for (const auto& tau : design.support) posteriors.push_back(MinkowskiMix(tau, game.prior().cell_sets));
  const InformationStructure is(design.weights, posteriors);
  Experiment pi = ConstructExperiment(is, game.prior());
  return {std::move(design), std::move(pi)};
}

PersuasionGame ProsecutorJudge(const Rational& g, const Rational& tau0) {
  if (g < 0 || g > 1) Fail(ErrorKind::kOutOfRange, "g must lie in [0, 1]");
  if (tau0 <= 0 || tau0 >= 1) Fail(ErrorKind::kOutOfRange, "tau0 must lie in (0, 1)");
  const StateSpace states({"GP", "GA", "I"});
  const ReducedForm rf(Partition(3, {{0, 1}, {2}}), {tau0, 1 - tau0});
  const std::vector<std::string> actions{"convict", "acquit"};
  UtilityTable receiver(actions, RationalMatrix::FromRows({{Rational(1), g, Rational(0)},
                                                           {Rational(0), 1 - g, Rational(1)}}));
  UtilityTable sender(actions, RationalMatrix::FromRows({{Rational(1), Rational(1), Rational(1)},
                                                         {Rational(0), Rational(0), Rational(0)}}));
  return PersuasionGame(FullAmbiguity(states, rf), std::move(receiver), std::move(sender));
}

std::vector<CurveSample> SampleCurve(const ReducedGame& rg, std::size_t points) {
  if (rg.cells.size() != 2) Fail(ErrorKind::kDimensionMismatch, "curves need exactly two cells");
  if (points < 2) Fail(ErrorKind::kOutOfRange, "at least two sample points are required");
  std::vector<CurveSample> out;
  for (std::size_t i = 0; i < points; ++i) {
    const Rational t(static_cast<long>(i), static_cast<long>(points - 1));
    const Vector tau{t, 1 - t};
    out.push_back({t, SenderValue(rg, tau), ConcavifyAt(rg, tau).value});
  }
  return out;
}

void WriteCurveCsv(std::ostream& out, const std::vector<CurveSample>& samples) {
  out << "tau,sender_value,concavified\n";
  for (const auto& s : samples) {
    out << Fixed(ToDouble(s.tau), 6) << ',' << Fixed(ToDouble(s.sender_value), 6) << ','
        << Fixed(ToDouble(s.concavified), 6) << '\n';
  }
}

void WriteStepPlotSvg(std::ostream& out, const std::vector<PlotPanel>& panels) {
  constexpr double kPanelW = 260, kPanelH = 220, kLeft = 50, kTop = 30, kPlotW = 180,
                   kPlotH = 150, kYMax = 1.1;
  for (const auto& p : panels) {
    if (p.game.cells.size() != 2) Fail(ErrorKind::kDimensionMismatch, "plots need exactly two cells");
  }
  const double width = kPanelW * static_cast<double>(panels.size());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Fixed(width, 0) << "\" height=\""
      << Fixed(kPanelH, 0) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const ReducedGame& rg = panels[i].game;
    const double x0 = kPanelW * static_cast<double>(i) + kLeft;
    auto X = [&](const Rational& t) { return Fixed(x0 + kPlotW * ToDouble(t), 2); };
    auto Y = [&](const Rational& v) { return Fixed(kTop + kPlotH * (1 - ToDouble(v) / kYMax), 2); };

    out << "<g>\n";
    out << "<text x=\"" << Fixed(x0 + kPlotW / 2, 2) << "\" y=\"" << Fixed(kTop - 10, 2)
        << "\" text-anchor=\"middle\">" << panels[i].title << "</text>\n";
    out << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(1) << "\" y2=\"" << Y(0)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\""
        << Y(Rational(11, 10)) << "\" stroke=\"black\"/>\n";
    for (const Rational t : {Rational(0), Rational(1, 2), Rational(1)}) {
      out << "<text x=\"" << X(t) << "\" y=\"" << Fixed(kTop + kPlotH + 14, 2)
          << "\" text-anchor=\"middle\">" << Fixed(ToDouble(t), 1) << "</text>\n";
    }
    for (const Rational v : {Rational(0), Rational(1)}) {
      out << "<text x=\"" << Fixed(x0 - 6, 2) << "\" y=\"" << Y(v) << "\" text-anchor=\"end\">"
          << ToString(v) << "</text>\n";
    }
    out << "<text x=\"" << Fixed(x0 + kPlotW / 2, 2) << "\" y=\"" << Fixed(kTop + kPlotH + 30, 2)
        << "\" text-anchor=\"middle\">&#964;</text>\n";

    std::vector<Rational> breaks;
    for (const auto& c : CandidateBeliefs(rg)) breaks.push_back(c[0]);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
      const Rational a = breaks[j];
      const Rational b = breaks[j + 1];
      const Rational mid = (a + b) / 2;
      const std::size_t act = ReceiverAction(rg, {mid, 1 - mid});
      out << "<line x1=\"" << X(a) << "\" y1=\"" << Y(OnLine(rg, act, a)) << "\" x2=\"" << X(b)
          << "\" y2=\"" << Y(OnLine(rg, act, b)) << "\" stroke=\"black\" stroke-width=\"2.5\"/>\n";
    }
    for (std::size_t j = 0; j < breaks.size(); ++j) {
      const Rational t = breaks[j];
      const Rational at = SenderValue(rg, {t, 1 - t});
      std::vector<Rational> limits;
      if (j > 0) {
        const Rational mid = (breaks[j - 1] + t) / 2;
        limits.push_back(OnLine(rg, ReceiverAction(rg, {mid, 1 - mid}), t));
      }
      if (j + 1 < breaks.size()) {
        const Rational mid = (t + breaks[j + 1]) / 2;
        limits.push_back(OnLine(rg, ReceiverAction(rg, {mid, 1 - mid}), t));
      }
      bool jump = false;
      for (const auto& l : limits) {
        if (l != at) {
          jump = true;
          out << "<circle cx=\"" << X(t) << "\" cy=\"" << Y(l)
              << "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";
        }
      }
      if (jump) {
        out << "<circle cx=\"" << X(t) << "\" cy=\"" << Y(at) << "\" r=\"3\" fill=\"black\"/>\n";
      }
    }
    out << "<polyline fill=\"none\" stroke=\"red\" stroke-width=\"2.5\" stroke-dasharray=\"2,3\" "
           "points=\"";
    for (std::size_t j = 0; j < breaks.size(); ++j) {
      const Rational t = breaks[j];
      if (j > 0) out << ' ';
      out << X(t) << ',' << Y(ConcavifyAt(rg, {t, 1 - t}).value);
    }
    out << "\"/>\n</g>\n";
  }
  out << "</svg>\n";
}

}  // namespace partid
