// Copyright 2026 The infgame Authors
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

#ifndef INFGAME_CORE_HPP_
#define INFGAME_CORE_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace infgame {

// Thrown for every contract violation in the library (dangling references,
// kind mismatches, precondition failures). The message is a short,
// single-line diagnostic.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact payoff values. cpp_rational keeps itself in canonical reduced form.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) {
    os << '/' << boost::multiprecision::denominator(q);
  }
  return os.str();
}

using Agent = std::string;

// The two moves at an inner node. d < r is the iteration order everywhere.
enum class Choice : std::uint8_t { d = 0, r = 1 };

inline constexpr Choice kChoices[] = {Choice::d, Choice::r};

inline constexpr std::string_view to_string(Choice c) {
  return c == Choice::d ? "d" : "r";
}

inline constexpr Choice other(Choice c) {
  return c == Choice::d ? Choice::r : Choice::d;
}

// "d" and "r" denote choices and can never name an agent.
inline bool is_valid_agent_name(std::string_view name) {
  return !name.empty() && name != "d" && name != "r";
}

// Leaf payoffs: a total map from the agent set to exact rationals.
class PayoffFn {
 public:
  PayoffFn() = default;
  PayoffFn(std::initializer_list<std::pair<const Agent, Rational>> entries)
      : entries_(entries) {
    for (const auto& [agent, _] : entries_) check_agent(agent);
  }
  explicit PayoffFn(std::map<Agent, Rational> entries)
      : entries_(std::move(entries)) {
    for (const auto& [agent, _] : entries_) check_agent(agent);
  }

  const Rational& at(const Agent& agent) const {
    auto it = entries_.find(agent);
    if (it == entries_.end()) throw Error("payoff has no entry for agent " + agent);
    return it->second;
  }
  bool has(const Agent& agent) const { return entries_.contains(agent); }

  std::vector<Agent> agents() const {
    std::vector<Agent> out;
    out.reserve(entries_.size());
    for (const auto& [agent, _] : entries_) out.push_back(agent);
    return out;
  }
  const std::map<Agent, Rational>& entries() const { return entries_; }

  friend bool operator==(const PayoffFn&, const PayoffFn&) = default;
  friend bool operator<(const PayoffFn& a, const PayoffFn& b) {
    return a.entries_ < b.entries_;
  }

 private:
  static void check_agent(const Agent& agent) {
    if (!is_valid_agent_name(agent)) throw Error("invalid agent name '" + agent + "'");
  }

  std::map<Agent, Rational> entries_;
};

// "{A:3, B:2}"
inline std::string to_string(const PayoffFn& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& [agent, value] : f.entries()) {
    if (!first) out += ", ";
    first = false;
    out += agent + ":" + to_string(value);
  }
  return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, const PayoffFn& f) {
  return os << to_string(f);
}

}  // namespace infgame

#endif  // INFGAME_CORE_HPP_
