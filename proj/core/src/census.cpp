#include "pmaps/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "pmaps/errors.hpp"
#include "pmaps/hom.hpp"

namespace pmaps {

namespace {

using Tuple = std::vector<Elem>;
using Fingerprint = std::vector<std::uint32_t>;

// Runs body(i) for i in [0, n) on up to `threads` workers. The first
// exception thrown by any worker is rethrown on the caller's thread.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Elem> involutions(const FiniteGroup& g) {
  std::vector<Elem> result;
  for (Elem x = 1; x < g.order(); ++x) {
    if (g.element_order(x) == 2) result.push_back(x);
  }
  return result;
}

bool generates(const FiniteGroup& g, const Tuple& t) {
  return subgroup_generated(g, t).order() == g.order();
}

// Automorphism invariants of a tuple: orders and class sizes of its
// entries and orders of a few products.
Fingerprint fingerprint(const FiniteGroup& g, const std::vector<std::uint32_t>& cls,
                        const Tuple& t) {
  Fingerprint f;
  Elem all = FiniteGroup::identity();
  for (Elem x : t) {
    f.push_back(static_cast<std::uint32_t>(g.element_order(x)));
    f.push_back(cls[x]);
    all = g.mul(all, x);
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      f.push_back(static_cast<std::uint32_t>(g.element_order(g.mul(t[i], t[j]))));
      f.push_back(static_cast<std::uint32_t>(g.element_order(g.comm(t[i], t[j]))));
    }
  }
  f.push_back(static_cast<std::uint32_t>(g.element_order(all)));
  return f;
}

struct ClassRep {
  Tuple tuple;
  std::size_t size = 0;
};

// Splits the (sorted) tuples into isomorphism classes. Buckets of equal
// fingerprint are handled independently; within a bucket each tuple is
// compared with the representatives found so far, so the representative
// is the least tuple of its class.
std::vector<ClassRep> deduplicate(const FiniteGroup& g, std::vector<Tuple> tuples,
                                  unsigned threads) {
  std::sort(tuples.begin(), tuples.end());
  auto cls = conjugacy_class_sizes(g);
  std::map<Fingerprint, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    buckets[fingerprint(g, cls, tuples[i])].push_back(i);
  }
  std::vector<const std::vector<std::size_t>*> bucket_list;
  for (const auto& [key, members] : buckets) bucket_list.push_back(&members);

  std::vector<std::vector<ClassRep>> per_bucket(bucket_list.size());
  parallel_for(bucket_list.size(), threads, [&](std::size_t b) {
    auto& reps = per_bucket[b];
    for (std::size_t idx : *bucket_list[b]) {
      const Tuple& t = tuples[idx];
      bool placed = false;
      for (auto& rep : reps) {
        if (isomorphism_exists(g, rep.tuple, g, t)) {
          ++rep.size;
          placed = true;
          break;
        }
      }
      if (!placed) reps.push_back({t, 1});
    }
  });

  std::vector<ClassRep> all;
  for (auto& reps : per_bucket) {
    for (auto& rep : reps) all.push_back(std::move(rep));
  }
  std::sort(all.begin(), all.end(),
            [](const ClassRep& a, const ClassRep& b) { return a.tuple < b.tuple; });
  return all;
}

void check_bound(const FiniteGroup& g, const CensusOptions& options) {
  if (g.order() > options.max_order) {
    throw ResourceError("census group of order " + std::to_string(g.order()),
                        options.max_order);
  }
}

template <class Make>
std::vector<CensusEntry> build_entries(const std::vector<ClassRep>& reps,
                                       unsigned threads, Make make) {
  std::vector<std::optional<CensusEntry>> slots(reps.size());
  parallel_for(reps.size(), threads, [&](std::size_t i) {
    AnyMap map = make(reps[i].tuple);
    MapReport rep = std::visit([](const auto& m) { return report(m); }, map);
    slots[i] = CensusEntry{std::move(map), rep, std::nullopt, reps[i].size};
  });
  std::vector<CensusEntry> entries;
  entries.reserve(slots.size());
  for (auto& s : slots) entries.push_back(std::move(*s));
  return entries;
}

}  // namespace

std::vector<Elem> CensusEntry::tuple() const {
  return std::visit([](const auto& m) { return m.tuple(); }, map);
}

bool CensusEntry::degenerate() const {
  return std::visit([](const auto& m) { return m.degenerate(); }, map);
}

std::vector<CensusEntry> enumerate_oriented(std::shared_ptr<const FiniteGroup> g,
                                            const CensusOptions& options) {
  check_bound(*g, options);
  const FiniteGroup& grp = *g;
  const auto invs = involutions(grp);
  std::vector<std::vector<Tuple>> found(grp.order());
  parallel_for(grp.order(), options.threads, [&](std::size_t r) {
    if (r == FiniteGroup::identity()) return;
    for (Elem l : invs) {
      Tuple t{static_cast<Elem>(r), l};
      if (generates(grp, t)) found[r].push_back(std::move(t));
    }
  });
  std::vector<Tuple> tuples;
  for (auto& f : found) {
    for (auto& t : f) tuples.push_back(std::move(t));
  }
  auto reps = deduplicate(grp, std::move(tuples), options.threads);
  return build_entries(reps, options.threads, [&](const Tuple& t) -> AnyMap {
    return OrientedMap(g, t[0], t[1]);
  });
}

std::vector<CensusEntry> enumerate_flagged(std::shared_ptr<const FiniteGroup> g,
                                           const CensusOptions& options) {
  check_bound(*g, options);
  const FiniteGroup& grp = *g;
  const auto invs = involutions(grp);
  std::vector<std::vector<Tuple>> found(invs.size());
  parallel_for(invs.size(), options.threads, [&](std::size_t i) {
    const Elem t = invs[i];
    for (Elem l : invs) {
      if (grp.mul(t, l) != grp.mul(l, t)) continue;
      for (Elem r : invs) {
        Tuple tup{t, r, l};
        if (generates(grp, tup)) found[i].push_back(std::move(tup));
      }
    }
  });
  std::vector<Tuple> tuples;
  for (auto& f : found) {
    for (auto& t : f) tuples.push_back(std::move(t));
  }
  auto reps = deduplicate(grp, std::move(tuples), options.threads);
  return build_entries(reps, options.threads, [&](const Tuple& t) -> AnyMap {
    return FlaggedMap(g, t[0], t[1], t[2]);
  });
}

void census_classify(std::vector<CensusEntry>& entries, unsigned threads) {
  parallel_for(entries.size(), threads, [&](std::size_t i) {
    CensusEntry& e = entries[i];
    std::visit(
        [&](const auto& m) {
          if (detect_p_map(m)) e.classification = classify(m);
        },
        e.map);
  });
}

}  // namespace pmaps
