#pragma once

// Composition-table presentation of finite strict 2-categories and finite
// bicategories, plus the report types shared by every checker in the library.
//
// Cells are identified by name; equality of cells is name equality and every
// law is checked as a table-lookup equality.  All values are immutable after
// construction and all operations are pure functions.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibcat {

using CellName = std::string;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A single law violation: the law's name plus the witnessing cell tuple.
struct Violation {
  std::string law;
  std::vector<CellName> cells;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.law == b.law && a.cells == b.cells;
  }
};

struct ValidationReport {
  bool passed = true;
  std::vector<Violation> violations;

  void add(std::string law, std::vector<CellName> cells) {
    passed = false;
    violations.push_back({std::move(law), std::move(cells)});
  }
  void merge(const ValidationReport& other) {
    passed = passed && other.passed;
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
  void truncate(std::size_t limit) {
    if (violations.size() > limit) violations.resize(limit);
  }
};

struct OneCell {
  CellName src;  // object
  CellName tgt;  // object
};

struct TwoCell {
  CellName src;  // parallel 1-cells
  CellName tgt;
};

namespace detail {
inline std::string join(const std::vector<CellName>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out;
}
}  // namespace detail

// Shared table core of FinTwoCategory and FinBicategory.
//
// hcomp1 is keyed (g, f) for the composite g.f with f applied first; vcomp2
// is keyed (b, a) for b.a with a applied first; hcomp2 is keyed (s, t) where
// s sits over the g-side and t over the f-side of g.f.
struct CellTables {
  std::set<CellName> objects;
  std::map<CellName, OneCell> one_cells;
  std::map<CellName, TwoCell> two_cells;
  std::map<CellName, CellName> id1;  // object -> 1-cell
  std::map<CellName, CellName> id2;  // 1-cell -> 2-cell
  std::map<std::pair<CellName, CellName>, CellName> hcomp1;
  std::map<std::pair<CellName, CellName>, CellName> vcomp2;
  std::map<std::pair<CellName, CellName>, CellName> hcomp2;

  bool has_object(const CellName& x) const { return objects.count(x) > 0; }
  bool has_one(const CellName& f) const { return one_cells.count(f) > 0; }
  bool has_two(const CellName& a) const { return two_cells.count(a) > 0; }

  const OneCell& one(const CellName& f) const {
    auto it = one_cells.find(f);
    if (it == one_cells.end()) throw Error("unknown 1-cell: " + f);
    return it->second;
  }
  const TwoCell& two(const CellName& a) const {
    auto it = two_cells.find(a);
    if (it == two_cells.end()) throw Error("unknown 2-cell: " + a);
    return it->second;
  }

  const CellName& id_1(const CellName& x) const {
    auto it = id1.find(x);
    if (it == id1.end()) throw Error("missing identity 1-cell at " + x);
    return it->second;
  }
  const CellName& id_2(const CellName& f) const {
    auto it = id2.find(f);
    if (it == id2.end()) throw Error("missing identity 2-cell at " + f);
    return it->second;
  }

  // g.f, f first.
  const CellName& comp1(const CellName& g, const CellName& f) const {
    auto it = hcomp1.find({g, f});
    if (it == hcomp1.end()) throw Error("hcomp1 undefined at (" + g + "," + f + ")");
    return it->second;
  }
  // b.a vertically, a first.
  const CellName& comp2v(const CellName& b, const CellName& a) const {
    auto it = vcomp2.find({b, a});
    if (it == vcomp2.end()) throw Error("vcomp2 undefined at (" + b + "," + a + ")");
    return it->second;
  }
  // s*t horizontally, t on the f-side.
  const CellName& comp2h(const CellName& s, const CellName& t) const {
    auto it = hcomp2.find({s, t});
    if (it == hcomp2.end()) throw Error("hcomp2 undefined at (" + s + "," + t + ")");
    return it->second;
  }

  // Boundary helpers for 2-cells.
  const CellName& src1(const CellName& a) const { return two(a).src; }
  const CellName& tgt1(const CellName& a) const { return two(a).tgt; }
  const CellName& src0_of2(const CellName& a) const { return one(two(a).src).src; }
  const CellName& tgt0_of2(const CellName& a) const { return one(two(a).src).tgt; }

  bool composable1(const CellName& g, const CellName& f) const {
    return one(f).tgt == one(g).src;
  }
  bool composable2v(const CellName& b, const CellName& a) const {
    return two(a).tgt == two(b).src;
  }
  bool composable2h(const CellName& s, const CellName& t) const {
    return tgt0_of2(t) == src0_of2(s);
  }

  // Whiskering: a 2-cell against an identity on the other side.
  CellName whisker_l(const CellName& k, const CellName& a) const {
    return comp2h(id_2(k), a);  // 1_k * a
  }
  CellName whisker_r(const CellName& a, const CellName& j) const {
    return comp2h(a, id_2(j));  // a * 1_j
  }

  std::vector<CellName> one_cells_between(const CellName& x, const CellName& y) const {
    std::vector<CellName> out;
    for (const auto& [f, d] : one_cells)
      if (d.src == x && d.tgt == y) out.push_back(f);
    return out;
  }
  std::vector<CellName> two_cells_between(const CellName& f, const CellName& g) const {
    std::vector<CellName> out;
    for (const auto& [a, d] : two_cells)
      if (d.src == f && d.tgt == g) out.push_back(a);
    return out;
  }
};

// Finite strict 2-category.  Strict associativity/unit laws and interchange
// are demanded by validate_two_category, not by the type itself.
struct FinTwoCategory {
  CellTables t;
};

// Finite bicategory: tables plus coherence cells with declared inverses.
// Conventions, fixed once for the whole library:
//   assoc(h,g,f) : (h.g).f => h.(g.f)
//   lunit(f)     : id.f    => f
//   runit(f)     : f.id    => f
struct FinBicategory {
  CellTables t;
  std::map<std::tuple<CellName, CellName, CellName>, CellName> assoc;
  std::map<CellName, CellName> lunit;
  std::map<CellName, CellName> runit;
  // Declared inverses (symmetric closure is not required; lookups try both ways).
  std::map<CellName, CellName> inv2;

  const CellName& a(const CellName& h, const CellName& g, const CellName& f) const {
    auto it = assoc.find({h, g, f});
    if (it == assoc.end())
      throw Error("assoc undefined at (" + h + "," + g + "," + f + ")");
    return it->second;
  }
  const CellName& l(const CellName& f) const {
    auto it = lunit.find(f);
    if (it == lunit.end()) throw Error("lunit undefined at " + f);
    return it->second;
  }
  const CellName& r(const CellName& f) const {
    auto it = runit.find(f);
    if (it == runit.end()) throw Error("runit undefined at " + f);
    return it->second;
  }
  std::optional<CellName> declared_inverse(const CellName& c) const {
    auto it = inv2.find(c);
    if (it != inv2.end()) return it->second;
    for (const auto& [k, v] : inv2)
      if (v == c) return k;
    return std::nullopt;
  }
};

inline bool structurally_equal(const CellTables& a, const CellTables& b) {
  return a.objects == b.objects &&
         [&] {
           if (a.one_cells.size() != b.one_cells.size()) return false;
           for (const auto& [k, v] : a.one_cells) {
             auto it = b.one_cells.find(k);
             if (it == b.one_cells.end() || it->second.src != v.src ||
                 it->second.tgt != v.tgt)
               return false;
           }
           return true;
         }() &&
         [&] {
           if (a.two_cells.size() != b.two_cells.size()) return false;
           for (const auto& [k, v] : a.two_cells) {
             auto it = b.two_cells.find(k);
             if (it == b.two_cells.end() || it->second.src != v.src ||
                 it->second.tgt != v.tgt)
               return false;
           }
           return true;
         }() &&
         a.id1 == b.id1 && a.id2 == b.id2 && a.hcomp1 == b.hcomp1 &&
         a.vcomp2 == b.vcomp2 && a.hcomp2 == b.hcomp2;
}

inline bool structurally_equal(const FinTwoCategory& a, const FinTwoCategory& b) {
  return structurally_equal(a.t, b.t);
}

inline bool structurally_equal(const FinBicategory& a, const FinBicategory& b) {
  return structurally_equal(a.t, b.t) && a.assoc == b.assoc && a.lunit == b.lunit &&
         a.runit == b.runit;
}

// Deterministic enumeration of composable tuples, ordered lexicographically
// by cell name.  level 1 walks 1-cells, level 2 walks vertically composable
// 2-cells; tuples are listed outermost-first, i.e. (g,f) stands for g.f.
inline std::vector<std::vector<CellName>> enumerate_composable(const CellTables& t,
                                                               int arity, int level) {
  if ((arity != 2 && arity != 3) || (level != 1 && level != 2))
    throw Error("enumerate_composable: arity must be 2|3 and level 1|2");
  std::vector<std::vector<CellName>> out;
  if (level == 1) {
    for (const auto& [g, gd] : t.one_cells)
      for (const auto& [f, fd] : t.one_cells) {
        if (fd.tgt != gd.src) continue;
        if (arity == 2) {
          out.push_back({g, f});
        } else {
          for (const auto& [e, ed] : t.one_cells)
            if (ed.tgt == fd.src) out.push_back({g, f, e});
        }
      }
  } else {
    for (const auto& [b, bd] : t.two_cells)
      for (const auto& [a, ad] : t.two_cells) {
        if (ad.tgt != bd.src) continue;
        if (arity == 2) {
          out.push_back({b, a});
        } else {
          for (const auto& [c, cd] : t.two_cells)
            if (cd.tgt == ad.src) out.push_back({b, a, c});
        }
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<CellName>> enumerate_composable(const FinTwoCategory& c,
                                                               int arity, int level) {
  return enumerate_composable(c.t, arity, level);
}
inline std::vector<std::vector<CellName>> enumerate_composable(const FinBicategory& b,
                                                               int arity, int level) {
  return enumerate_composable(b.t, arity, level);
}

// Horizontally composable 2-cell pairs (s over the g-side), lexicographic.
inline std::vector<std::pair<CellName, CellName>> horizontal_pairs(const CellTables& t) {
  std::vector<std::pair<CellName, CellName>> out;
  for (const auto& [s, sd] : t.two_cells)
    for (const auto& [u, ud] : t.two_cells)
      if (t.composable2h(s, u)) out.push_back({s, u});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fibcat
