#include "pmaps/todd_coxeter.hpp"

#include <stdexcept>

#include "pmaps/errors.hpp"

namespace pmaps {

CosetTable::CosetTable(std::size_t num_generators, std::vector<std::int32_t> entries)
    : ngens_(num_generators), entries_(std::move(entries)) {}

bool CosetTable::is_closed() const {
  const std::size_t n = num_cosets();
  const std::size_t cols = 2 * ngens_;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t x = 0; x < cols; ++x) {
      std::int32_t d = (*this)(c, x);
      if (d < 0 || static_cast<std::size_t>(d) >= n) return false;
      if ((*this)(static_cast<std::size_t>(d), x ^ 1) != static_cast<std::int32_t>(c)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Permutation> CosetTable::permutations() const {
  std::vector<Permutation> result;
  for (std::size_t g = 0; g < ngens_; ++g) {
    std::vector<Point> im(num_cosets());
    for (std::size_t c = 0; c < im.size(); ++c) {
      im[c] = static_cast<Point>((*this)(c, 2 * g));
    }
    result.emplace_back(std::move(im));
  }
  return result;
}

namespace {

constexpr std::int32_t kUndef = -1;

// Hasselgrove-Leech-Trotter enumeration with coincidence processing as in
// Holt, Eick & O'Brien, Handbook of Computational Group Theory, sec. 5.1.
class Enumerator {
 public:
  Enumerator(std::size_t ngens, std::size_t max_cosets)
      : cols_(2 * ngens), max_(max_cosets) {
    new_coset();
  }

  void scan_and_fill(std::int32_t coset, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::int32_t f = coset;
    std::int32_t b = coset;
    long i = 0;
    long j = static_cast<long>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[i]) != kUndef) {
        f = at(f, w[i]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[j] ^ 1) != kUndef) {
        b = at(b, w[j] ^ 1);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        // deduction closes the cycle
        set(f, w[i], b);
        return;
      }
      define(f, w[i]);
    }
  }

  void define(std::int32_t coset, std::size_t x) {
    std::int32_t b = new_coset();
    set(coset, x, b);
  }

  bool alive(std::int32_t c) const { return forward_[c] == c; }
  std::size_t allocated() const { return forward_.size(); }
  std::int32_t at(std::int32_t c, std::size_t x) const { return table_[c * cols_ + x]; }

  CosetTable compact(std::size_t ngens) const {
    std::vector<std::int32_t> renumber(forward_.size(), kUndef);
    std::int32_t next = 0;
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      if (forward_[c] == static_cast<std::int32_t>(c)) renumber[c] = next++;
    }
    std::vector<std::int32_t> entries;
    entries.reserve(static_cast<std::size_t>(next) * cols_);
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      if (renumber[c] == kUndef) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int32_t d = table_[c * cols_ + x];
        entries.push_back(d == kUndef ? kUndef : renumber[d]);
      }
    }
    return CosetTable(ngens, std::move(entries));
  }

 private:
  std::int32_t new_coset() {
    if (forward_.size() >= max_) {
      throw ResourceError("coset enumeration exceeded the coset limit", max_);
    }
    auto c = static_cast<std::int32_t>(forward_.size());
    forward_.push_back(c);
    table_.insert(table_.end(), cols_, kUndef);
    return c;
  }

  void set(std::int32_t a, std::size_t x, std::int32_t b) {
    table_[a * cols_ + x] = b;
    table_[b * cols_ + (x ^ 1)] = a;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[c] != r) {
      std::int32_t next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l) {
    std::int32_t a = rep(k);
    std::int32_t b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      std::int32_t e = queue_[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int32_t f = table_[e * cols_ + x];
        if (f == kUndef) continue;
        table_[f * cols_ + (x ^ 1)] = kUndef;
        std::int32_t e1 = rep(e);
        std::int32_t f1 = rep(f);
        std::int32_t ex = table_[e1 * cols_ + x];
        std::int32_t fx = table_[f1 * cols_ + (x ^ 1)];
        if (ex != kUndef) {
          merge(f1, ex);
        } else if (fx != kUndef) {
          merge(e1, fx);
        } else {
          table_[e1 * cols_ + x] = f1;
          table_[f1 * cols_ + (x ^ 1)] = e1;
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t max_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> forward_;
  std::vector<std::int32_t> queue_;
};

std::vector<std::size_t> columns_of(const Word& w, std::size_t ngens) {
  std::vector<std::size_t> cols;
  cols.reserve(w.length());
  for (int x : w.letters()) {
    std::size_t g = static_cast<std::size_t>(x > 0 ? x : -x) - 1;
    if (g >= ngens) throw ContractViolation("word uses an undeclared generator");
    cols.push_back(2 * g + (x > 0 ? 0 : 1));
  }
  return cols;
}

}  // namespace

CosetTable todd_coxeter(const Presentation& presentation,
                        std::span<const Word> subgroup_words,
                        std::size_t max_cosets) {
  if (max_cosets < 1) throw ContractViolation("max_cosets must be positive");
  const std::size_t ngens = presentation.generator_names.size();
  std::vector<std::vector<std::size_t>> rels;
  for (const auto& r : presentation.relators) rels.push_back(columns_of(r, ngens));

  Enumerator e(ngens, max_cosets);
  for (const auto& w : subgroup_words) e.scan_and_fill(0, columns_of(w, ngens));
  for (std::int32_t a = 0; static_cast<std::size_t>(a) < e.allocated(); ++a) {
    for (const auto& r : rels) {
      if (!e.alive(a)) break;
      e.scan_and_fill(a, r);
    }
    if (!e.alive(a)) continue;
    for (std::size_t x = 0; x < 2 * ngens; ++x) {
      if (e.at(a, x) == kUndef) e.define(a, x);
    }
  }
  CosetTable table = e.compact(ngens);
  if (!table.is_closed()) throw std::logic_error("coset enumeration left holes");
  return table;
}

FiniteGroup perms_from_table(const CosetTable& table, std::size_t max_order) {
  if (!table.is_closed()) throw ContractViolation("coset table is not closed");
  return FiniteGroup::closure(table.num_cosets(), table.permutations(), max_order);
}

}  // namespace pmaps
