#pragma once

// Composite checks shared by the unit tests and the acceptance runner. Each
// returns the list of failed assertions; empty means the check passed.

#include <sstream>
#include <string>
#include <vector>

#include "pmaps/census.hpp"

namespace checks {

class Failures {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) list_.push_back(what);
  }
  template <class A, class B>
  void eq(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) {
      std::ostringstream os;
      os << what << ": got " << actual << ", expected " << expected;
      list_.push_back(os.str());
    }
  }
  void add(const std::vector<std::string>& more) {
    list_.insert(list_.end(), more.begin(), more.end());
  }
  const std::vector<std::string>& list() const { return list_; }
  bool ok() const { return list_.empty(); }

 private:
  std::vector<std::string> list_;
};

/// Rebuilds the corpus group by explicit products, checks that every
/// relator of the file holds there and that the library realises a group of
/// the same order, then recomputes the counts of the file's map (if any) on
/// the oracle group and compares them with the library report.
std::vector<std::string> corpus_against_oracle(const std::string& name);

/// sylow_p, o_p, normal_core and is_solvable against brute force on every
/// seed group up to `max_order`.
std::vector<std::string> oracle_equivalence(std::size_t max_order);

/// Full census of `kind` on the group, classified; every p-map entry must be
/// solvable and every nonnormal one must have p in {2, 3} and an identified
/// exceptional quotient. Sets `entries` to the number of classes.
std::vector<std::string> census_property(std::shared_ptr<const pmaps::FiniteGroup> g,
                                         bool flagged, std::size_t* entries = nullptr);

}  // namespace checks
