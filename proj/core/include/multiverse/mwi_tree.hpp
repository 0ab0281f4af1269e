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

#pragma once

// Viewer-dependent Many-Worlds branching trees with exact branch weights,
// and their decomposition into equal-weight filaments.
//
// A tree branches on events in a chosen viewer order. Dependent events get
// their branch weights from a Correlator, which answers "distribution of
// event E given the outcomes seen so far". Filaments are the leaves scaled
// to a common denominator; their labels list tokens in declared event
// order, so trees built in different orders can be compared directly.

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "multiverse/kernel.hpp"
#include "multiverse/rational.hpp"

namespace multiverse {

struct EventSpec {
  std::string name;
  /// Single-token outcome alphabet with counts; reduced on construction.
  Kernel kernel;

  /// Throws InvalidArgument for an empty/invalid name or a kernel whose
  /// labels are not single tokens.
  static EventSpec make(std::string name, const Kernel& kernel);

  bool has_outcome(const std::string& token) const;
};

/// Outcomes observed so far: event name -> token.
using History = std::map<std::string, std::string>;

class Correlator {
 public:
  virtual ~Correlator() = default;
  /// Distribution over single-token outcomes of `event` given `history`.
  /// Zero-weight outcomes are absent.
  virtual Kernel conditional(const std::string& event, const History& history) const = 0;
};

/// Every event follows its own kernel regardless of history.
class IndependentCorrelator final : public Correlator {
 public:
  explicit IndependentCorrelator(std::vector<EventSpec> events);
  Kernel conditional(const std::string& event, const History& history) const override;

 private:
  std::vector<EventSpec> events_;
};

/// Conditionals factored out of a declared joint kernel whose label
/// component i belongs to event_names[i].
class JointCorrelator final : public Correlator {
 public:
  JointCorrelator(std::vector<std::string> event_names, Kernel joint);
  Kernel conditional(const std::string& event, const History& history) const override;

  const Kernel& joint() const noexcept { return joint_; }

 private:
  std::vector<std::string> names_;
  Kernel joint_;
};

/// Explicit conditional kernels keyed by (event, exact history). Nothing
/// guarantees the entries describe one joint distribution; that is what
/// viewer_invariance detects.
class ConditionalTable final : public Correlator {
 public:
  void set(const std::string& event, const History& given, Kernel kernel);
  Kernel conditional(const std::string& event, const History& history) const override;

 private:
  std::map<std::pair<std::string, History>, Kernel> table_;
};

struct BranchNode {
  std::string event;  // empty at the root
  std::string token;
  Rational weight;
  std::vector<BranchNode> children;
};

class BranchTree {
 public:
  BranchTree(std::vector<EventSpec> events, std::vector<std::size_t> order, BranchNode root);

  const std::vector<EventSpec>& events() const noexcept { return events_; }
  /// Indices into events(), in branching order.
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  const BranchNode& root() const noexcept { return root_; }

  /// (declared-order label, weight) for every leaf, depth-first.
  std::vector<std::pair<OutcomeLabel, Rational>> leaves() const;

 private:
  std::vector<EventSpec> events_;
  std::vector<std::size_t> order_;
  BranchNode root_;
};

/// Independent events branched in list order.
BranchTree build_tree(const std::vector<EventSpec>& events);

/// Branch in `order` (a permutation of event indices) using `correlator`.
/// Throws InvalidArgument on an empty event list, a bad permutation, or a
/// conditional naming a token outside the event's alphabet.
BranchTree build_tree(const std::vector<EventSpec>& events, const std::vector<std::size_t>& order,
                      const Correlator& correlator);

/// Leaves scaled by L = lcm(leaf denominators): a kernel with total L.
Kernel filament_decomposition(const BranchTree& tree);

struct ViewerInvarianceReport {
  bool invariant;
  Kernel first;
  Kernel second;
};

/// Builds both trees and compares their filament kernels exactly.
/// invariant == false means the correlator's conditionals do not describe
/// a single joint distribution: a modeling fault, not a numerical one.
ViewerInvarianceReport viewer_invariance(const std::vector<EventSpec>& events,
                                         const std::vector<std::size_t>& order1,
                                         const std::vector<std::size_t>& order2,
                                         const Correlator& correlator);

/// Indented text, one node per line: "  Alice=Au  1/2".
void write_tree(std::ostream& os, const BranchTree& tree);
std::string render_tree(const BranchTree& tree);

// Tree model text format:
//
//   #tree v1
//   Alice Au:1,Ad:1
//   Bob Bu:1,Bd:1
//   joint Au.Bu:3,Au.Bd:1,Ad.Bu:1,Ad.Bd:3
//   Bob|Alice=Au Bu:3,Bd:1
//
// Event lines declare each event's alphabet and unconditional counts. An
// optional `joint` line (components in event declaration order) makes the
// events dependent; its marginals must match the event lines. Lines of the
// form `NAME|E=t[,E=t...] outcome:count,...` give explicit conditionals
// instead. `joint` and conditional lines are mutually exclusive. `#` lines
// after the header are comments.
struct TreeModel {
  std::vector<EventSpec> events;
  std::optional<Kernel> joint;
  std::vector<std::tuple<std::string, History, Kernel>> conditionals;

  std::unique_ptr<Correlator> correlator() const;
  /// Index of the named event; throws InvalidArgument when unknown.
  std::size_t index_of(const std::string& name) const;
};

TreeModel read_tree_model(std::istream& is);
TreeModel load_tree_model(const std::string& path);

}  // namespace multiverse
