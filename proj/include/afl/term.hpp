#pragma once

#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "afl/type.hpp"
#include "afl/value.hpp"

namespace afl {

struct SourcePos {
  int line = 0;
  int col = 0;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// The twelve statement forms. left/right/fold carry their type annotations;
// everything else is inferred from the context.
struct NewUnit {
  std::string var;
};
struct DiscardVar {
  std::string var;
};
struct Seq {
  TermPtr first;
  TermPtr second;
};
struct Skip {};
struct WhileLoop {
  std::string guard;
  TermPtr body;
};
struct LeftIntro {
  std::string binder;
  TypePtr left_type;
  TypePtr right_type;
  std::string operand;
};
struct RightIntro {
  std::string binder;
  TypePtr left_type;
  TypePtr right_type;
  std::string operand;
};
struct CaseSum {
  std::string scrutinee;
  std::string left_binder;
  TermPtr left_body;
  std::string right_binder;
  TermPtr right_body;
};
struct PairIntro {
  std::string binder;
  std::string first;
  std::string second;
};
struct PairElim {
  std::string first;
  std::string second;
  std::string operand;
};
struct FoldIntro {
  std::string binder;
  TypePtr mu_annotation;
  std::string operand;
};
struct UnfoldElim {
  std::string binder;
  std::string operand;
};

using TermNode =
    std::variant<NewUnit, DiscardVar, Seq, Skip, WhileLoop, LeftIntro,
                 RightIntro, CaseSum, PairIntro, PairElim, FoldIntro, UnfoldElim>;

struct Term {
  TermNode node;
  SourcePos pos;
};

inline TermPtr make_term(TermNode node, SourcePos pos = {}) {
  return std::make_shared<const Term>(Term{std::move(node), pos});
}

inline TermPtr mk_new_unit(std::string u, SourcePos pos = {}) {
  return make_term(NewUnit{std::move(u)}, pos);
}
inline TermPtr mk_discard(std::string x, SourcePos pos = {}) {
  return make_term(DiscardVar{std::move(x)}, pos);
}
inline TermPtr mk_seq(TermPtr a, TermPtr b, SourcePos pos = {}) {
  return make_term(Seq{std::move(a), std::move(b)}, pos);
}
inline TermPtr mk_skip(SourcePos pos = {}) { return make_term(Skip{}, pos); }
inline TermPtr mk_while(std::string guard, TermPtr body, SourcePos pos = {}) {
  return make_term(WhileLoop{std::move(guard), std::move(body)}, pos);
}
inline TermPtr mk_left(std::string binder, TypePtr a, TypePtr b,
                       std::string operand, SourcePos pos = {}) {
  return make_term(
      LeftIntro{std::move(binder), std::move(a), std::move(b), std::move(operand)},
      pos);
}
inline TermPtr mk_right(std::string binder, TypePtr a, TypePtr b,
                        std::string operand, SourcePos pos = {}) {
  return make_term(
      RightIntro{std::move(binder), std::move(a), std::move(b), std::move(operand)},
      pos);
}
inline TermPtr mk_case(std::string scrutinee, std::string left_binder,
                       TermPtr left_body, std::string right_binder,
                       TermPtr right_body, SourcePos pos = {}) {
  return make_term(CaseSum{std::move(scrutinee), std::move(left_binder),
                           std::move(left_body), std::move(right_binder),
                           std::move(right_body)},
                   pos);
}
inline TermPtr mk_pair(std::string binder, std::string first, std::string second,
                       SourcePos pos = {}) {
  return make_term(PairIntro{std::move(binder), std::move(first), std::move(second)},
                   pos);
}
inline TermPtr mk_unpair(std::string first, std::string second, std::string operand,
                         SourcePos pos = {}) {
  return make_term(PairElim{std::move(first), std::move(second), std::move(operand)},
                   pos);
}
inline TermPtr mk_fold(std::string binder, TypePtr mu, std::string operand,
                       SourcePos pos = {}) {
  return make_term(FoldIntro{std::move(binder), std::move(mu), std::move(operand)},
                   pos);
}
inline TermPtr mk_unfold(std::string binder, std::string operand,
                         SourcePos pos = {}) {
  return make_term(UnfoldElim{std::move(binder), std::move(operand)}, pos);
}

/// Right-nested sequence of statements; empty list is skip.
inline TermPtr seq_of(const std::vector<TermPtr>& stmts) {
  if (stmts.empty()) return mk_skip();
  TermPtr acc = stmts.back();
  for (std::size_t i = stmts.size() - 1; i-- > 0;) acc = mk_seq(stmts[i], acc);
  return acc;
}

// ---------------------------------------------------------------------------
// Ordered associations. Contexts and stores are associations from names;
// lookups ignore order, and the insertion order doubles as the canonical
// tuple layout of the denotational semantics.

template <class T>
class OrderedAssoc {
 public:
  using Entry = std::pair<std::string, T>;

  OrderedAssoc() = default;
  OrderedAssoc(std::initializer_list<Entry> init) : items_(init) {}

  const T* lookup(const std::string& name) const {
    for (const auto& [n, v] : items_)
      if (n == name) return &v;
    return nullptr;
  }

  bool contains(const std::string& name) const { return lookup(name) != nullptr; }

  /// Appends; the caller guarantees freshness.
  OrderedAssoc with(std::string name, T v) const {
    OrderedAssoc out = *this;
    out.items_.emplace_back(std::move(name), std::move(v));
    return out;
  }

  OrderedAssoc without(const std::string& name) const {
    OrderedAssoc out;
    out.items_.reserve(items_.size());
    for (const auto& e : items_)
      if (e.first != name) out.items_.push_back(e);
    return out;
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Entry>& entries() const { return items_; }

  std::set<std::string> names() const {
    std::set<std::string> out;
    for (const auto& [n, v] : items_) out.insert(n);
    return out;
  }

 private:
  std::vector<Entry> items_;
};

using VarContext = OrderedAssoc<TypePtr>;
using ValueAssignment = OrderedAssoc<ValuePtr>;

/// Association equality: same names, alpha-equal types, any order.
inline bool context_equal(const VarContext& a, const VarContext& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [n, t] : a) {
    const TypePtr* u = b.lookup(n);
    if (!u || !alpha_equal(t, *u)) return false;
  }
  return true;
}

inline bool store_equal(const ValueAssignment& a, const ValueAssignment& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [n, v] : a) {
    const ValuePtr* w = b.lookup(n);
    if (!w || !value_equal(v, *w)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Variable inventories and freshness.

namespace detail {
inline void term_vars_into(const TermPtr& t, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, NewUnit> || std::is_same_v<N, DiscardVar>) {
          out.insert(n.var);
        } else if constexpr (std::is_same_v<N, Seq>) {
          term_vars_into(n.first, out);
          term_vars_into(n.second, out);
        } else if constexpr (std::is_same_v<N, Skip>) {
        } else if constexpr (std::is_same_v<N, WhileLoop>) {
          out.insert(n.guard);
          term_vars_into(n.body, out);
        } else if constexpr (std::is_same_v<N, LeftIntro> ||
                             std::is_same_v<N, RightIntro>) {
          out.insert(n.binder);
          out.insert(n.operand);
        } else if constexpr (std::is_same_v<N, CaseSum>) {
          out.insert(n.scrutinee);
          out.insert(n.left_binder);
          out.insert(n.right_binder);
          term_vars_into(n.left_body, out);
          term_vars_into(n.right_body, out);
        } else if constexpr (std::is_same_v<N, PairIntro>) {
          out.insert(n.binder);
          out.insert(n.first);
          out.insert(n.second);
        } else if constexpr (std::is_same_v<N, PairElim>) {
          out.insert(n.first);
          out.insert(n.second);
          out.insert(n.operand);
        } else if constexpr (std::is_same_v<N, FoldIntro> ||
                             std::is_same_v<N, UnfoldElim>) {
          out.insert(n.binder);
          out.insert(n.operand);
        }
      },
      t->node);
}
}  // namespace detail

/// Every term variable occurring in t, bound or free.
inline std::set<std::string> term_vars(const TermPtr& t) {
  std::set<std::string> out;
  detail::term_vars_into(t, out);
  return out;
}

inline std::string fresh_name(const std::string& base,
                              const std::set<std::string>& used) {
  std::string cand = base;
  while (used.count(cand)) cand += '\'';
  return cand;
}

// ---------------------------------------------------------------------------
// Sugar.  if b then {M}  desugars to
//   case b of { left u -> b = left u | right u -> b = right u; M }
// with u fresh for the given name inventory.

inline TermPtr desugar_if(const std::string& guard, const TermPtr& body,
                          std::set<std::string> used, SourcePos pos = {}) {
  used.insert(guard);
  auto body_vars = term_vars(body);
  used.insert(body_vars.begin(), body_vars.end());
  std::string u = fresh_name("u", used);
  TermPtr left_arm = mk_left(guard, unit_type(), unit_type(), u, pos);
  TermPtr right_arm =
      mk_seq(mk_right(guard, unit_type(), unit_type(), u, pos), body, pos);
  return mk_case(guard, u, left_arm, u, right_arm, pos);
}

// ---------------------------------------------------------------------------
// Structural equality up to alpha on type annotations; positions ignored.

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using N = std::decay_t<decltype(x)>;
        const auto& y = std::get<N>(b->node);
        if constexpr (std::is_same_v<N, NewUnit> || std::is_same_v<N, DiscardVar>) {
          return x.var == y.var;
        } else if constexpr (std::is_same_v<N, Seq>) {
          return term_equal(x.first, y.first) && term_equal(x.second, y.second);
        } else if constexpr (std::is_same_v<N, Skip>) {
          return true;
        } else if constexpr (std::is_same_v<N, WhileLoop>) {
          return x.guard == y.guard && term_equal(x.body, y.body);
        } else if constexpr (std::is_same_v<N, LeftIntro> ||
                             std::is_same_v<N, RightIntro>) {
          return x.binder == y.binder && x.operand == y.operand &&
                 alpha_equal(x.left_type, y.left_type) &&
                 alpha_equal(x.right_type, y.right_type);
        } else if constexpr (std::is_same_v<N, CaseSum>) {
          return x.scrutinee == y.scrutinee && x.left_binder == y.left_binder &&
                 x.right_binder == y.right_binder &&
                 term_equal(x.left_body, y.left_body) &&
                 term_equal(x.right_body, y.right_body);
        } else if constexpr (std::is_same_v<N, PairIntro>) {
          return x.binder == y.binder && x.first == y.first && x.second == y.second;
        } else if constexpr (std::is_same_v<N, PairElim>) {
          return x.first == y.first && x.second == y.second &&
                 x.operand == y.operand;
        } else if constexpr (std::is_same_v<N, FoldIntro>) {
          return x.binder == y.binder && x.operand == y.operand &&
                 alpha_equal(x.mu_annotation, y.mu_annotation);
        } else if constexpr (std::is_same_v<N, UnfoldElim>) {
          return x.binder == y.binder && x.operand == y.operand;
        }
      },
      a->node);
}

inline std::size_t term_node_count(const TermPtr& t) {
  return std::visit(
      [&](const auto& n) -> std::size_t {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Seq>) {
          return 1 + term_node_count(n.first) + term_node_count(n.second);
        } else if constexpr (std::is_same_v<N, WhileLoop>) {
          return 1 + term_node_count(n.body);
        } else if constexpr (std::is_same_v<N, CaseSum>) {
          return 1 + term_node_count(n.left_body) + term_node_count(n.right_body);
        } else {
          return 1;
        }
      },
      t->node);
}

}  // namespace afl
