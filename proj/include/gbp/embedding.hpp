#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "gbp/budget.hpp"
#include "gbp/fit.hpp"
#include "gbp/geometry.hpp"
#include "gbp/setfamily.hpp"

namespace gbp {

// Total map from universe elements to same-dimension boxes; a candidate
// certificate that the family's members are exactly the fitting sets.
class embedding {
 public:
  embedding(int dimension, std::vector<box_dims> by_element)
      : d_(dimension), boxes_(std::move(by_element)) {
    if (d_ < 1) throw std::invalid_argument("embedding: dimension must be positive");
    if (boxes_.empty()) throw std::invalid_argument("embedding: empty universe");
    for (const auto& b : boxes_)
      if (b.dimension() != d_) throw std::invalid_argument("embedding: box dimension mismatch");
  }

  int dimension() const { return d_; }
  int universe_size() const { return static_cast<int>(boxes_.size()); }
  const box_dims& of(int element) const {
    if (element < 0 || element >= universe_size())
      throw std::invalid_argument("embedding: element out of range");
    return boxes_[static_cast<std::size_t>(element)];
  }

  packing_instance instance_for(std::span<const int> elements) const {
    std::vector<box_dims> boxes;
    boxes.reserve(elements.size());
    for (int e : elements) boxes.push_back(of(e));
    return packing_instance(d_, std::move(boxes));
  }

 private:
  int d_;
  std::vector<box_dims> boxes_;
};

enum class violation_kind { member_does_not_fit, non_member_fits, not_downward_closed };

inline const char* to_string(violation_kind k) {
  switch (k) {
    case violation_kind::member_does_not_fit: return "member-does-not-fit";
    case violation_kind::non_member_fits: return "non-member-fits";
    case violation_kind::not_downward_closed: return "not-downward-closed";
  }
  return "?";
}

struct embedding_violation {
  violation_kind kind;
  std::vector<int> set;     // offending set (the member for closure violations)
  std::vector<int> subset;  // missing subset, closure violations only
};

struct verify_embedding_result {
  bool valid = false;
  std::optional<embedding_violation> violation;
};

namespace detail {

inline std::vector<std::vector<int>> maximal_members(const set_family& f) {
  std::vector<std::vector<int>> out;
  for (const auto& s : f.sets()) {
    bool maximal = true;
    for (const auto& t : f.sets()) {
      if (t.size() <= s.size()) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

// Minimal non-members have size at most (max member size) + 1: removing
// an element from a larger non-member leaves a set bigger than every
// member, hence still a non-member. Enumerates subsets of bounded size.
inline std::vector<std::vector<int>> minimal_non_members(const set_family& f, budget& work) {
  const int u = f.universe_size();
  int kmax = 0;
  for (const auto& s : f.sets()) kmax = std::max(kmax, static_cast<int>(s.size()));
  const int limit = std::min(u, kmax + 1);

  std::vector<std::vector<int>> out;
  std::vector<int> combo;
  auto consider = [&](const std::vector<int>& t) {
    work.charge();
    if (f.contains(t)) return;
    std::vector<int> shrunk;
    for (std::size_t drop = 0; drop < t.size(); ++drop) {
      shrunk.clear();
      for (std::size_t i = 0; i < t.size(); ++i)
        if (i != drop) shrunk.push_back(t[i]);
      if (!f.contains(shrunk)) return;  // not minimal
    }
    out.push_back(t);
  };
  auto enumerate = [&](auto&& self, int next, int remaining) -> void {
    if (remaining == 0) {
      consider(combo);
      return;
    }
    for (int e = next; e <= u - remaining; ++e) {
      combo.push_back(e);
      self(self, e + 1, remaining - 1);
      combo.pop_back();
    }
  };
  for (int size = 0; size <= limit; ++size) enumerate(enumerate, 0, size);
  return out;
}

}  // namespace detail

// Validates an embedding against the family. Fit is monotone and the
// family must be downward closed, so it suffices that every maximal
// member fits and every minimal non-member does not; `full_sweep` checks
// all 2^|U| subsets instead (small universes only).
inline verify_embedding_result verify_embedding(const set_family& f, const embedding& emb,
                                                budget& work, bool full_sweep = false) {
  if (emb.universe_size() != f.universe_size())
    throw std::invalid_argument("verify_embedding: universe size mismatch");

  if (auto w = downward_closure_violation(f))
    return {false,
            embedding_violation{violation_kind::not_downward_closed, w->member, w->missing_subset}};

  if (full_sweep) {
    const int u = f.universe_size();
    if (u > 16) throw std::invalid_argument("verify_embedding: universe too large for a full sweep");
    for (std::uint32_t mask = 0; mask < (1u << u); ++mask) {
      std::vector<int> subset;
      for (int e = 0; e < u; ++e)
        if (mask & (1u << e)) subset.push_back(e);
      const bool member = f.contains(subset);
      const bool fits = fits_exact(emb.instance_for(subset), work).has_value();
      if (member && !fits)
        return {false, embedding_violation{violation_kind::member_does_not_fit, subset, {}}};
      if (!member && fits)
        return {false, embedding_violation{violation_kind::non_member_fits, subset, {}}};
    }
    return {true, std::nullopt};
  }

  for (const auto& s : detail::maximal_members(f))
    if (!fits_exact(emb.instance_for(s), work).has_value())
      return {false, embedding_violation{violation_kind::member_does_not_fit, s, {}}};
  for (const auto& t : detail::minimal_non_members(f, work))
    if (fits_exact(emb.instance_for(t), work).has_value())
      return {false, embedding_violation{violation_kind::non_member_fits, t, {}}};
  return {true, std::nullopt};
}

inline verify_embedding_result verify_embedding(const set_family& f, const embedding& emb,
                                                bool full_sweep = false) {
  budget work;
  return verify_embedding(f, emb, work, full_sweep);
}

namespace detail {

struct embedding_search {
  const set_family& f;
  int d;
  long grid;
  budget& work;
  std::vector<std::vector<long>> candidates;       // side tuples in units of 1/grid, lex order
  std::vector<int> choice;                         // candidate index per element, -1 unassigned
  std::vector<std::vector<std::vector<int>>> member_due;      // per element: members with that max
  std::vector<std::vector<std::vector<int>>> non_member_due;  // same for minimal non-members

  bool set_fits(const std::vector<int>& elements) const {
    if (d == 1) {
      long total = 0;
      for (int e : elements) total += candidates[static_cast<std::size_t>(choice[static_cast<std::size_t>(e)])][0];
      return total <= grid;
    }
    std::vector<box_dims> boxes;
    boxes.reserve(elements.size());
    for (int e : elements) {
      const auto& units = candidates[static_cast<std::size_t>(choice[static_cast<std::size_t>(e)])];
      std::vector<rational> sides;
      sides.reserve(static_cast<std::size_t>(d));
      for (long s : units) sides.push_back(make_rational(s, grid));
      boxes.emplace_back(std::move(sides));
    }
    budget probe(1'000'000);
    return fits_exact(packing_instance(d, std::move(boxes)), probe).has_value();
  }

  bool consistent(int element) const {
    for (const auto& s : member_due[static_cast<std::size_t>(element)])
      if (!set_fits(s)) return false;
    for (const auto& t : non_member_due[static_cast<std::size_t>(element)])
      if (set_fits(t)) return false;
    return true;
  }

  bool assign(int element) {
    if (element == f.universe_size()) return true;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      work.charge();
      choice[static_cast<std::size_t>(element)] = static_cast<int>(c);
      if (consistent(element) && assign(element + 1)) return true;
    }
    choice[static_cast<std::size_t>(element)] = -1;
    return false;
  }
};

}  // namespace detail

// Exhaustive search for an embedding with all side lengths in
// {1/m, ..., m/m}: elements are assigned in order, candidate boxes in
// lexicographic order, and every member / minimal non-member is checked as
// soon as all its elements are assigned. A none result only means no
// embedding exists at this granularity.
inline std::optional<embedding> search_embedding(const set_family& f, int d, long grid,
                                                 budget& work) {
  if (d < 1) throw std::invalid_argument("search_embedding: dimension must be positive");
  if (grid < 1) throw std::invalid_argument("search_embedding: grid must be positive");
  double combos = 1;
  for (int l = 0; l < d; ++l) combos *= static_cast<double>(grid);
  if (combos > 250'000.0) throw std::invalid_argument("search_embedding: grid^d too large");

  // No embedding can exist for a non-downward-closed family; don't search.
  if (downward_closure_violation(f)) return std::nullopt;

  detail::embedding_search search{f, d, grid, work, {}, {}, {}, {}};
  {
    std::vector<long> tuple(static_cast<std::size_t>(d), 1);
    for (;;) {
      search.candidates.push_back(tuple);
      int l = d - 1;
      while (l >= 0 && tuple[static_cast<std::size_t>(l)] == grid) {
        tuple[static_cast<std::size_t>(l)] = 1;
        --l;
      }
      if (l < 0) break;
      ++tuple[static_cast<std::size_t>(l)];
    }
  }
  search.choice.assign(static_cast<std::size_t>(f.universe_size()), -1);
  search.member_due.assign(static_cast<std::size_t>(f.universe_size()), {});
  search.non_member_due.assign(static_cast<std::size_t>(f.universe_size()), {});
  for (const auto& s : f.sets())
    if (!s.empty()) search.member_due[static_cast<std::size_t>(s.back())].push_back(s);
  for (const auto& t : detail::minimal_non_members(f, work)) {
    if (t.empty()) return std::nullopt;  // the empty set always fits; unfixable
    search.non_member_due[static_cast<std::size_t>(t.back())].push_back(t);
  }

  if (!search.assign(0)) return std::nullopt;

  std::vector<box_dims> boxes;
  boxes.reserve(static_cast<std::size_t>(f.universe_size()));
  for (int e = 0; e < f.universe_size(); ++e) {
    const auto& units = search.candidates[static_cast<std::size_t>(search.choice[static_cast<std::size_t>(e)])];
    std::vector<rational> sides;
    for (long s : units) sides.push_back(make_rational(s, grid));
    boxes.emplace_back(std::move(sides));
  }
  return embedding(d, std::move(boxes));
}

inline std::optional<embedding> search_embedding(const set_family& f, int d, long grid) {
  budget work;
  return search_embedding(f, d, grid, work);
}

// Witness that a 1-dimensional embedding of a lines family is invalid:
// either a line whose three lengths sum past 1, or a non-member triple
// whose lengths sum to at most 1.
struct one_dim_witness {
  violation_kind kind;        // member_does_not_fit or non_member_fits
  std::vector<int> elements;  // the witnessing triple
};

// Constructive refutation of any purported 1-D embedding of lines_system(n),
// n >= 2. If every line has an element of length <= 1/3, pick two disjoint
// lines, short elements u1, u2 on them, a displacement D avoiding
// {0, u2-u1, u1-u2}, and a short element u3 of the shifted line
// {u1+D, u2+D, 2u2-u1+D}; then {u1, u2, u3} is not a line yet its lengths
// sum to <= 1. Otherwise some line itself cannot fit.
inline one_dim_witness find_1d_counterexample(const set_family& f, const embedding& emb) {
  if (emb.dimension() != 1)
    throw std::invalid_argument("find_1d_counterexample: embedding must be 1-dimensional");
  int n = 0;
  long pow = 1;
  while (pow < f.universe_size()) {
    pow *= 3;
    ++n;
  }
  if (pow != f.universe_size() || n < 2)
    throw std::invalid_argument("find_1d_counterexample: family is not a lines system with n >= 2");
  if (!(f == lines_system(n)))
    throw std::invalid_argument("find_1d_counterexample: family is not the lines system on F_3^n");
  if (emb.universe_size() != f.universe_size())
    throw std::invalid_argument("find_1d_counterexample: universe size mismatch");

  const rational third = make_rational(1, 3);
  std::vector<std::vector<int>> lines;
  for (const auto& s : f.sets())
    if (s.size() == 3) lines.push_back(s);

  auto short_element = [&](const std::vector<int>& line) -> std::optional<int> {
    for (int e : line)
      if (emb.of(e).side(0) <= third) return e;
    return std::nullopt;
  };

  for (const auto& line : lines)
    if (!short_element(line)) return {violation_kind::member_does_not_fit, line};

  const std::vector<int>& s1 = lines.front();
  const std::vector<int>* s2 = nullptr;
  for (const auto& line : lines) {
    bool disjoint = true;
    for (int e : line)
      if (std::binary_search(s1.begin(), s1.end(), e)) {
        disjoint = false;
        break;
      }
    if (disjoint) {
      s2 = &line;
      break;
    }
  }
  if (s2 == nullptr)
    throw std::logic_error("find_1d_counterexample: no disjoint line pair found");

  const int u1 = *short_element(s1);
  const int u2 = *short_element(*s2);
  const int diff21 = f3_combine(u2, u1, 2, n);  // u2 - u1
  const int diff12 = f3_combine(u1, u2, 2, n);  // u1 - u2
  int shift = -1;
  for (int c = 1; c < f.universe_size(); ++c)
    if (c != diff21 && c != diff12) {
      shift = c;
      break;
    }

  // third point of the line through u1 and u2 is 2*u2 - u1
  const int third_point = f3_combine(f3_combine(u2, u2, 1, n), u1, 2, n);
  std::vector<int> s3{f3_combine(u1, shift, 1, n), f3_combine(u2, shift, 1, n),
                      f3_combine(third_point, shift, 1, n)};
  std::sort(s3.begin(), s3.end());
  const auto u3 = short_element(s3);
  if (!u3) return {violation_kind::member_does_not_fit, s3};  // s3 is a line of the family

  std::vector<int> triple{u1, u2, *u3};
  std::sort(triple.begin(), triple.end());
  return {violation_kind::non_member_fits, triple};
}

}  // namespace gbp
