#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>

#include "afl/type.hpp"

namespace afl {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

// Closed values. left/right carry both injection annotations and fold carries
// its full mu annotation, mirroring the value grammar; reduction preserves
// them inside the store. Atom values are the carrier tokens of configured
// atomic types and do not occur under the default (empty) model.
struct Value {
  enum class Kind { Star, Left, Right, Pair, Fold, Atom };

  Kind kind;
  TypePtr ann_a;  // Left/Right: left summand; Fold: the mu type
  TypePtr ann_b;  // Left/Right: right summand
  ValuePtr fst;   // Left/Right/Fold payload; Pair first
  ValuePtr snd;   // Pair second
  std::string atom_type;
  std::size_t atom_index = 0;
};

inline ValuePtr make_value(Value v) {
  return std::make_shared<const Value>(std::move(v));
}

inline const ValuePtr& star() {
  static const ValuePtr v =
      make_value({Value::Kind::Star, nullptr, nullptr, nullptr, nullptr, "", 0});
  return v;
}

inline ValuePtr left_value(TypePtr a, TypePtr b, ValuePtr payload) {
  return make_value({Value::Kind::Left, std::move(a), std::move(b),
                     std::move(payload), nullptr, "", 0});
}

inline ValuePtr right_value(TypePtr a, TypePtr b, ValuePtr payload) {
  return make_value({Value::Kind::Right, std::move(a), std::move(b),
                     std::move(payload), nullptr, "", 0});
}

inline ValuePtr pair_value(ValuePtr v, ValuePtr w) {
  return make_value({Value::Kind::Pair, nullptr, nullptr, std::move(v),
                     std::move(w), "", 0});
}

inline ValuePtr fold_value(TypePtr mu, ValuePtr payload) {
  return make_value({Value::Kind::Fold, std::move(mu), nullptr,
                     std::move(payload), nullptr, "", 0});
}

inline ValuePtr atom_value(std::string atomic_name, std::size_t index) {
  return make_value({Value::Kind::Atom, nullptr, nullptr, nullptr, nullptr,
                     std::move(atomic_name), index});
}

/// ff := left_{I,I} *
inline const ValuePtr& ff_value() {
  static const ValuePtr v = left_value(unit_type(), unit_type(), star());
  return v;
}

/// tt := right_{I,I} *
inline const ValuePtr& tt_value() {
  static const ValuePtr v = right_value(unit_type(), unit_type(), star());
  return v;
}

// Structural equality, annotations up to alpha.
inline bool value_equal(const ValuePtr& a, const ValuePtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Value::Kind::Star:
      return true;
    case Value::Kind::Left:
    case Value::Kind::Right:
      return alpha_equal(a->ann_a, b->ann_a) && alpha_equal(a->ann_b, b->ann_b) &&
             value_equal(a->fst, b->fst);
    case Value::Kind::Pair:
      return value_equal(a->fst, b->fst) && value_equal(a->snd, b->snd);
    case Value::Kind::Fold:
      return alpha_equal(a->ann_a, b->ann_a) && value_equal(a->fst, b->fst);
    case Value::Kind::Atom:
      return a->atom_type == b->atom_type && a->atom_index == b->atom_index;
  }
  return false;
}

inline bool is_tt(const ValuePtr& v) { return value_equal(v, tt_value()); }
inline bool is_ff(const ValuePtr& v) { return value_equal(v, ff_value()); }

// Size metric shared by the enumerator and its oracle: every constructor and
// * count one node; annotations count nothing.
inline std::size_t value_node_count(const ValuePtr& v) {
  switch (v->kind) {
    case Value::Kind::Star:
    case Value::Kind::Atom:
      return 1;
    case Value::Kind::Left:
    case Value::Kind::Right:
    case Value::Kind::Fold:
      return 1 + value_node_count(v->fst);
    case Value::Kind::Pair:
      return 1 + value_node_count(v->fst) + value_node_count(v->snd);
  }
  return 1;
}

}  // namespace afl
