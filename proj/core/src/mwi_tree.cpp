// Copyright 2026 The Multiverse Authors
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

#include "multiverse/mwi_tree.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "multiverse/errors.hpp"

namespace multiverse {

EventSpec EventSpec::make(std::string name, const Kernel& kernel) {
  if (!OutcomeLabel::valid_token(name)) {
    throw InvalidArgument("invalid event name '" + name + "'");
  }
  if (kernel.arity() != 1) {
    throw InvalidArgument("event '" + name + "' kernel must have single-token outcomes");
  }
  return EventSpec{std::move(name), reduce(kernel)};
}

bool EventSpec::has_outcome(const std::string& token) const {
  return kernel.counts().contains(OutcomeLabel({token}));
}

// --- correlators ------------------------------------------------------------

IndependentCorrelator::IndependentCorrelator(std::vector<EventSpec> events)
    : events_(std::move(events)) {}

Kernel IndependentCorrelator::conditional(const std::string& event, const History&) const {
  for (const auto& e : events_) {
    if (e.name == event) return e.kernel;
  }
  throw InvalidArgument("unknown event '" + event + "'");
}

JointCorrelator::JointCorrelator(std::vector<std::string> event_names, Kernel joint)
    : names_(std::move(event_names)), joint_(std::move(joint)) {
  if (joint_.arity() != names_.size()) {
    throw InvalidArgument("joint kernel arity " + std::to_string(joint_.arity()) +
                          " does not match " + std::to_string(names_.size()) + " events");
  }
}

Kernel JointCorrelator::conditional(const std::string& event, const History& history) const {
  auto index_of = [&](const std::string& name) {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw InvalidArgument("unknown event '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
  };
  const std::size_t target = index_of(event);
  std::vector<std::pair<std::size_t, std::string>> fixed;
  for (const auto& [name, token] : history) fixed.emplace_back(index_of(name), token);

  Kernel::Counts counts;
  for (const auto& [label, count] : joint_.counts()) {
    bool consistent = std::all_of(fixed.begin(), fixed.end(),
                                  [&](const auto& f) { return label[f.first] == f.second; });
    if (consistent) counts[OutcomeLabel({label[target]})] += count;
  }
  if (counts.empty()) {
    throw InvalidArgument("history has zero weight under the joint kernel");
  }
  return reduce(Kernel::from_counts(std::move(counts)));
}

void ConditionalTable::set(const std::string& event, const History& given, Kernel kernel) {
  if (kernel.arity() != 1) {
    throw InvalidArgument("conditional kernel for '" + event + "' must have single-token outcomes");
  }
  table_.insert_or_assign({event, given}, reduce(kernel));
}

Kernel ConditionalTable::conditional(const std::string& event, const History& history) const {
  auto it = table_.find({event, history});
  if (it == table_.end()) {
    std::string given;
    for (const auto& [name, token] : history) {
      given += (given.empty() ? "" : ",") + name + "=" + token;
    }
    throw InvalidArgument("no conditional for '" + event + "' given {" + given + "}");
  }
  return it->second;
}

// --- tree ---------------------------------------------------------------------

BranchTree::BranchTree(std::vector<EventSpec> events, std::vector<std::size_t> order,
                       BranchNode root)
    : events_(std::move(events)), order_(std::move(order)), root_(std::move(root)) {}

std::vector<std::pair<OutcomeLabel, Rational>> BranchTree::leaves() const {
  std::vector<std::pair<OutcomeLabel, Rational>> out;
  std::vector<std::string> tokens(events_.size());
  auto walk = [&](auto&& self, const BranchNode& node, std::size_t depth) -> void {
    if (node.children.empty()) {
      out.emplace_back(OutcomeLabel(tokens), node.weight);
      return;
    }
    for (const auto& child : node.children) {
      tokens[order_[depth]] = child.token;
      self(self, child, depth + 1);
    }
  };
  walk(walk, root_, 0);
  return out;
}

namespace {

void check_events(const std::vector<EventSpec>& events) {
  if (events.empty()) {
    throw InvalidArgument("a branching tree needs at least one event");
  }
  std::set<std::string> names;
  for (const auto& e : events) {
    if (!names.insert(e.name).second) {
      throw InvalidArgument("duplicate event name '" + e.name + "'");
    }
  }
}

void check_permutation(const std::vector<std::size_t>& order, std::size_t n) {
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  bool ok = sorted.size() == n;
  for (std::size_t i = 0; ok && i < n; ++i) ok = sorted[i] == i;
  if (!ok) throw InvalidArgument("viewer order is not a permutation of the events");
}

}  // namespace

BranchTree build_tree(const std::vector<EventSpec>& events) {
  std::vector<std::size_t> order(events.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return build_tree(events, order, IndependentCorrelator(events));
}

BranchTree build_tree(const std::vector<EventSpec>& events, const std::vector<std::size_t>& order,
                      const Correlator& correlator) {
  check_events(events);
  check_permutation(order, events.size());

  BranchNode root{"", "", Rational(1), {}};
  History history;
  auto grow = [&](auto&& self, BranchNode& node, std::size_t depth) -> void {
    if (depth == order.size()) return;
    const EventSpec& event = events[order[depth]];
    const Kernel cond = correlator.conditional(event.name, history);
    if (cond.arity() != 1) {
      throw InvalidArgument("conditional for '" + event.name + "' is not single-token");
    }
    node.children.reserve(cond.num_outcomes());
    for (const auto& [label, count] : cond.counts()) {
      const std::string& token = label[0];
      if (!event.has_outcome(token)) {
        throw InvalidArgument("outcome '" + token + "' is not in the alphabet of '" + event.name +
                              "'");
      }
      node.children.push_back(
          BranchNode{event.name, token, node.weight * Rational(count, cond.total()), {}});
      history[event.name] = token;
      self(self, node.children.back(), depth + 1);
      history.erase(event.name);
    }
  };
  grow(grow, root, 0);
  return BranchTree(events, order, std::move(root));
}

Kernel filament_decomposition(const BranchTree& tree) {
  const auto leaves = tree.leaves();
  BigInt lcm = 1;
  for (const auto& [label, w] : leaves) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.den().get_mpz_t());
  }
  Kernel::Counts counts;
  for (const auto& [label, w] : leaves) {
    BigInt c = w.num() * lcm;
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), w.den().get_mpz_t());
    counts.emplace(label, std::move(c));
  }
  return Kernel::from_counts(std::move(counts));
}

ViewerInvarianceReport viewer_invariance(const std::vector<EventSpec>& events,
                                         const std::vector<std::size_t>& order1,
                                         const std::vector<std::size_t>& order2,
                                         const Correlator& correlator) {
  Kernel first = filament_decomposition(build_tree(events, order1, correlator));
  Kernel second = filament_decomposition(build_tree(events, order2, correlator));
  const bool same = first == second;
  return {same, std::move(first), std::move(second)};
}

void write_tree(std::ostream& os, const BranchTree& tree) {
  os << "(root)  " << tree.root().weight << '\n';
  auto walk = [&](auto&& self, const BranchNode& node, int depth) -> void {
    for (const auto& child : node.children) {
      os << std::string(2 * static_cast<std::size_t>(depth), ' ') << child.event << '='
         << child.token << "  " << child.weight << '\n';
      self(self, child, depth + 1);
    }
  };
  walk(walk, tree.root(), 1);
}

std::string render_tree(const BranchTree& tree) {
  std::ostringstream os;
  write_tree(os, tree);
  return os.str();
}

// --- tree model file ---------------------------------------------------------

std::size_t TreeModel::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (events[i].name == name) return i;
  }
  throw InvalidArgument("unknown event '" + name + "'");
}

std::unique_ptr<Correlator> TreeModel::correlator() const {
  if (joint) {
    std::vector<std::string> names;
    for (const auto& e : events) names.push_back(e.name);
    return std::make_unique<JointCorrelator>(std::move(names), *joint);
  }
  if (!conditionals.empty()) {
    auto table = std::make_unique<ConditionalTable>();
    for (const auto& e : events) table->set(e.name, {}, e.kernel);
    for (const auto& [name, given, kernel] : conditionals) table->set(name, given, kernel);
    return table;
  }
  return std::make_unique<IndependentCorrelator>(events);
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == s.npos ? s.npos : pos - start));
    if (pos == s.npos) break;
    start = pos + 1;
  }
  return out;
}

// "Au:1,Ad:1" or "Au.Bu:3,..."
Kernel parse_count_list(std::string_view text) {
  Kernel::Counts counts;
  for (auto item : split(text, ',')) {
    auto colon = item.rfind(':');
    if (colon == item.npos) {
      throw ParseError("expected outcome:count, got '" + std::string(item) + "'");
    }
    OutcomeLabel label = OutcomeLabel::parse(item.substr(0, colon));
    BigInt count = parse_bigint(item.substr(colon + 1));
    if (count < 1) throw ParseError("count for '" + label.str() + "' must be >= 1");
    if (!counts.emplace(std::move(label), std::move(count)).second) {
      throw ParseError("duplicate outcome in '" + std::string(text) + "'");
    }
  }
  return Kernel::from_counts(std::move(counts));
}

}  // namespace

TreeModel read_tree_model(std::istream& is) {
  TreeModel model;
  std::string line;
  int line_no = 0;
  bool header = false;
  std::vector<std::tuple<int, std::string, std::string>> conditional_lines;
  std::optional<std::pair<int, std::string>> joint_line;

  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view body = line;
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    if (body.empty()) continue;
    if (!header) {
      if (body != "#tree v1") throw ParseError("line 1: expected '#tree v1' header");
      header = true;
      continue;
    }
    if (body.front() == '#') continue;
    auto space = body.find_first_of(" \t");
    if (space == body.npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected NAME COUNTS");
    }
    std::string head(body.substr(0, space));
    std::string rest(body.substr(body.find_first_not_of(" \t", space)));
    try {
      if (head == "joint") {
        if (joint_line) throw ParseError("more than one joint line");
        joint_line.emplace(line_no, rest);
      } else if (head.find('|') != std::string::npos) {
        conditional_lines.emplace_back(line_no, head, rest);
      } else {
        for (const auto& e : model.events) {
          if (e.name == head) throw ParseError("duplicate event '" + head + "'");
        }
        model.events.push_back(EventSpec::make(head, parse_count_list(rest)));
      }
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header) throw ParseError("empty tree file");
  if (model.events.empty()) throw ParseError("tree file declares no events");
  if (joint_line && !conditional_lines.empty()) {
    throw ParseError("joint and conditional lines cannot be combined");
  }

  if (joint_line) {
    const auto& [ln, text] = *joint_line;
    try {
      Kernel joint = parse_count_list(text);
      if (joint.arity() != model.events.size()) {
        throw ParseError("joint outcomes need one component per event");
      }
      for (std::size_t i = 0; i < model.events.size(); ++i) {
        const Kernel m = marginalize(joint, {i});
        for (const auto& [label, count] : m.counts()) {
          if (!model.events[i].has_outcome(label[0])) {
            throw ParseError("joint outcome '" + label[0] + "' is not in the alphabet of '" +
                             model.events[i].name + "'");
          }
        }
        if (m != model.events[i].kernel) {
          throw ParseError("joint marginal for '" + model.events[i].name +
                           "' does not match its event line");
        }
      }
      model.joint = reduce(joint);
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(ln) + ": " + e.what());
    }
  }

  for (const auto& [ln, head, text] : conditional_lines) {
    try {
      auto bar = head.find('|');
      std::string name = head.substr(0, bar);
      model.index_of(name);
      History given;
      for (auto item : split(std::string_view(head).substr(bar + 1), ',')) {
        auto eq = item.find('=');
        if (eq == item.npos) throw ParseError("expected EVENT=token in '" + head + "'");
        std::string ev(item.substr(0, eq));
        std::string tok(item.substr(eq + 1));
        if (ev == name) throw ParseError("event conditioned on itself");
        if (!model.events[model.index_of(ev)].has_outcome(tok)) {
          throw ParseError("'" + tok + "' is not an outcome of '" + ev + "'");
        }
        given[ev] = tok;
      }
      model.conditionals.emplace_back(name, std::move(given), parse_count_list(text));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(ln) + ": " + e.what());
    }
  }
  return model;
}

TreeModel load_tree_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tree file '" + path + "'");
  return read_tree_model(in);
}

}  // namespace multiverse
