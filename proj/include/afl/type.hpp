#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace afl {

struct TypeExpr;
using TypePtr = std::shared_ptr<const TypeExpr>;

// Types are immutable trees shared by pointer. A Mu binder keeps its source
// name; equality is alpha (see alpha_equal / canonical_key).
struct TypeExpr {
  enum class Kind { Var, Unit, Atomic, Sum, Tensor, Mu };

  Kind kind;
  std::string name;  // Var: variable name; Atomic: atomic name; Mu: binder
  TypePtr lhs;       // Sum/Tensor left; Mu body
  TypePtr rhs;       // Sum/Tensor right
};

inline TypePtr make_type(TypeExpr t) {
  return std::make_shared<const TypeExpr>(std::move(t));
}

inline TypePtr type_var(std::string name) {
  return make_type({TypeExpr::Kind::Var, std::move(name), nullptr, nullptr});
}

inline const TypePtr& unit_type() {
  static const TypePtr t = make_type({TypeExpr::Kind::Unit, "", nullptr, nullptr});
  return t;
}

inline TypePtr atomic_type(std::string name) {
  return make_type({TypeExpr::Kind::Atomic, std::move(name), nullptr, nullptr});
}

inline TypePtr sum_type(TypePtr a, TypePtr b) {
  return make_type({TypeExpr::Kind::Sum, "", std::move(a), std::move(b)});
}

inline TypePtr tensor_type(TypePtr a, TypePtr b) {
  return make_type({TypeExpr::Kind::Tensor, "", std::move(a), std::move(b)});
}

inline TypePtr mu_type(std::string binder, TypePtr body) {
  return make_type({TypeExpr::Kind::Mu, std::move(binder), std::move(body), nullptr});
}

/// bit := I + I
inline const TypePtr& bit_type() {
  static const TypePtr t = sum_type(unit_type(), unit_type());
  return t;
}

// ---------------------------------------------------------------------------
// Atomic-type table. Atomic types are configuration data: a finite carrier of
// indexed tokens plus a discard map that may be partial. The default model
// registers no atomics at all.

struct AtomicInfo {
  std::size_t carrier = 0;
  // Tokens with index < discardable_below discard to *; the rest have no
  // discard. Equal to carrier for a total discard map.
  std::size_t discardable_below = 0;
};

struct ModelConfig {
  std::vector<std::pair<std::string, AtomicInfo>> atomics;

  const AtomicInfo* find_atomic(const std::string& name) const {
    for (const auto& [n, info] : atomics)
      if (n == name) return &info;
    return nullptr;
  }

  void register_atomic(std::string name, std::size_t carrier,
                       std::optional<std::size_t> discardable = std::nullopt) {
    atomics.emplace_back(std::move(name),
                         AtomicInfo{carrier, discardable.value_or(carrier)});
  }
};

inline const ModelConfig& default_model() {
  static const ModelConfig empty{};
  return empty;
}

// ---------------------------------------------------------------------------
// Type contexts Theta: ordered lists of distinct type variables.

struct TypeContext {
  std::vector<std::string> vars;

  TypeContext() = default;
  TypeContext(std::initializer_list<std::string> names) : vars(names) {}

  bool contains(const std::string& x) const {
    for (const auto& v : vars)
      if (v == x) return true;
    return false;
  }

  // "a list of distinct type variables"
  bool distinct() const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i] == vars[j]) return false;
    return true;
  }

  TypeContext extended(const std::string& x) const {
    TypeContext out = *this;
    out.vars.push_back(x);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Free variables, closedness.

namespace detail {
inline void free_type_vars_into(const TypePtr& a, std::vector<std::string>& bound,
                                std::set<std::string>& out) {
  switch (a->kind) {
    case TypeExpr::Kind::Var: {
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (*it == a->name) return;
      out.insert(a->name);
      return;
    }
    case TypeExpr::Kind::Unit:
    case TypeExpr::Kind::Atomic:
      return;
    case TypeExpr::Kind::Sum:
    case TypeExpr::Kind::Tensor:
      free_type_vars_into(a->lhs, bound, out);
      free_type_vars_into(a->rhs, bound, out);
      return;
    case TypeExpr::Kind::Mu:
      bound.push_back(a->name);
      free_type_vars_into(a->lhs, bound, out);
      bound.pop_back();
      return;
  }
}
}  // namespace detail

inline std::set<std::string> free_type_vars(const TypePtr& a) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  detail::free_type_vars_into(a, bound, out);
  return out;
}

inline bool type_closed(const TypePtr& a) { return free_type_vars(a).empty(); }

// ---------------------------------------------------------------------------
// Capture-avoiding substitution A[B/X].

namespace detail {
inline std::string fresh_type_var(const std::string& base,
                                  const std::set<std::string>& avoid) {
  std::string cand = base;
  while (avoid.count(cand)) cand += '\'';
  return cand;
}
}  // namespace detail

inline TypePtr substitute_type(const TypePtr& a, const std::string& x,
                               const TypePtr& b) {
  switch (a->kind) {
    case TypeExpr::Kind::Var:
      return a->name == x ? b : a;
    case TypeExpr::Kind::Unit:
    case TypeExpr::Kind::Atomic:
      return a;
    case TypeExpr::Kind::Sum:
      return sum_type(substitute_type(a->lhs, x, b), substitute_type(a->rhs, x, b));
    case TypeExpr::Kind::Tensor:
      return tensor_type(substitute_type(a->lhs, x, b),
                         substitute_type(a->rhs, x, b));
    case TypeExpr::Kind::Mu: {
      if (a->name == x) return a;  // shadowed, no free occurrence below
      std::set<std::string> fv_b = free_type_vars(b);
      if (fv_b.count(a->name)) {
        std::set<std::string> avoid = fv_b;
        auto fv_body = free_type_vars(a->lhs);
        avoid.insert(fv_body.begin(), fv_body.end());
        avoid.insert(x);
        std::string renamed = detail::fresh_type_var(a->name, avoid);
        TypePtr body = substitute_type(a->lhs, a->name, type_var(renamed));
        return mu_type(renamed, substitute_type(body, x, b));
      }
      return mu_type(a->name, substitute_type(a->lhs, x, b));
    }
  }
  return a;
}

/// One unfolding of a mu type: A[muX.A / X]. Precondition: mu-kinded.
inline TypePtr unfold_mu(const TypePtr& mu) {
  return substitute_type(mu->lhs, mu->name, mu);
}

// ---------------------------------------------------------------------------
// Well-formedness: Theta |- A. Derivability is closed under renaming of mu
// binders, so a binder shadowing a context variable is renamed apart rather
// than rejected.

inline bool type_well_formed(const TypeContext& theta, const TypePtr& a,
                             const ModelConfig& model = default_model()) {
  if (!theta.distinct()) return false;
  switch (a->kind) {
    case TypeExpr::Kind::Var:
      return theta.contains(a->name);
    case TypeExpr::Kind::Unit:
      return true;
    case TypeExpr::Kind::Atomic:
      return model.find_atomic(a->name) != nullptr;
    case TypeExpr::Kind::Sum:
    case TypeExpr::Kind::Tensor:
      return type_well_formed(theta, a->lhs, model) &&
             type_well_formed(theta, a->rhs, model);
    case TypeExpr::Kind::Mu: {
      if (!theta.contains(a->name))
        return type_well_formed(theta.extended(a->name), a->lhs, model);
      std::set<std::string> avoid(theta.vars.begin(), theta.vars.end());
      auto fv = free_type_vars(a->lhs);
      avoid.insert(fv.begin(), fv.end());
      std::string fresh = detail::fresh_type_var(a->name, avoid);
      return type_well_formed(theta.extended(fresh),
                              substitute_type(a->lhs, a->name, type_var(fresh)),
                              model);
    }
  }
  return false;
}

// Diagnostic variant: reports the offending subterm.
struct TypeDiagnosis {
  bool ok = true;
  TypePtr offending;
  std::string detail;
};

inline TypeDiagnosis diagnose_type(const TypeContext& theta, const TypePtr& a,
                                   const ModelConfig& model = default_model()) {
  switch (a->kind) {
    case TypeExpr::Kind::Var:
      if (!theta.contains(a->name))
        return {false, a, "unbound type variable '" + a->name + "'"};
      return {};
    case TypeExpr::Kind::Unit:
      return {};
    case TypeExpr::Kind::Atomic:
      if (!model.find_atomic(a->name))
        return {false, a, "unregistered atomic type '" + a->name + "'"};
      return {};
    case TypeExpr::Kind::Sum:
    case TypeExpr::Kind::Tensor: {
      TypeDiagnosis d = diagnose_type(theta, a->lhs, model);
      if (!d.ok) return d;
      return diagnose_type(theta, a->rhs, model);
    }
    case TypeExpr::Kind::Mu: {
      if (!theta.contains(a->name))
        return diagnose_type(theta.extended(a->name), a->lhs, model);
      std::set<std::string> avoid(theta.vars.begin(), theta.vars.end());
      auto fv = free_type_vars(a->lhs);
      avoid.insert(fv.begin(), fv.end());
      std::string fresh = detail::fresh_type_var(a->name, avoid);
      return diagnose_type(theta.extended(fresh),
                           substitute_type(a->lhs, a->name, type_var(fresh)),
                           model);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Alpha-equivalence. Mu binders are compared by de Bruijn level.

namespace detail {
inline bool alpha_equal_rec(const TypePtr& a, const TypePtr& b,
                            std::vector<std::string>& env_a,
                            std::vector<std::string>& env_b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TypeExpr::Kind::Var: {
      // Innermost-first lookup; both either hit the same level or are free
      // with the same name.
      for (std::size_t i = env_a.size(); i-- > 0;) {
        bool hit_a = env_a[i] == a->name;
        bool hit_b = env_b[i] == b->name;
        if (hit_a || hit_b) return hit_a && hit_b;
      }
      return a->name == b->name;
    }
    case TypeExpr::Kind::Unit:
      return true;
    case TypeExpr::Kind::Atomic:
      return a->name == b->name;
    case TypeExpr::Kind::Sum:
    case TypeExpr::Kind::Tensor:
      return alpha_equal_rec(a->lhs, b->lhs, env_a, env_b) &&
             alpha_equal_rec(a->rhs, b->rhs, env_a, env_b);
    case TypeExpr::Kind::Mu: {
      env_a.push_back(a->name);
      env_b.push_back(b->name);
      bool ok = alpha_equal_rec(a->lhs, b->lhs, env_a, env_b);
      env_a.pop_back();
      env_b.pop_back();
      return ok;
    }
  }
  return false;
}
}  // namespace detail

inline bool alpha_equal(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  std::vector<std::string> env_a, env_b;
  return detail::alpha_equal_rec(a, b, env_a, env_b);
}

/// Canonical de Bruijn spelling; usable as a map key wherever types are
/// compared up to alpha.
inline std::string canonical_key(const TypePtr& a) {
  struct Walk {
    std::vector<std::string> env;
    void go(const TypePtr& t, std::string& out) {
      switch (t->kind) {
        case TypeExpr::Kind::Var: {
          for (std::size_t i = env.size(); i-- > 0;) {
            if (env[i] == t->name) {
              out += '#';
              out += std::to_string(env.size() - 1 - i);
              return;
            }
          }
          out += '$';
          out += t->name;
          return;
        }
        case TypeExpr::Kind::Unit:
          out += 'I';
          return;
        case TypeExpr::Kind::Atomic:
          out += '@';
          out += t->name;
          return;
        case TypeExpr::Kind::Sum:
          out += "(+";
          go(t->lhs, out);
          out += ' ';
          go(t->rhs, out);
          out += ')';
          return;
        case TypeExpr::Kind::Tensor:
          out += "(*";
          go(t->lhs, out);
          out += ' ';
          go(t->rhs, out);
          out += ')';
          return;
        case TypeExpr::Kind::Mu:
          out += "(u";
          env.push_back(t->name);
          go(t->lhs, out);
          env.pop_back();
          out += ')';
          return;
      }
    }
  };
  std::string out;
  Walk w;
  w.go(a, out);
  return out;
}

inline std::size_t type_node_count(const TypePtr& a) {
  switch (a->kind) {
    case TypeExpr::Kind::Var:
    case TypeExpr::Kind::Unit:
    case TypeExpr::Kind::Atomic:
      return 1;
    case TypeExpr::Kind::Sum:
    case TypeExpr::Kind::Tensor:
      return 1 + type_node_count(a->lhs) + type_node_count(a->rhs);
    case TypeExpr::Kind::Mu:
      return 1 + type_node_count(a->lhs);
  }
  return 1;
}

}  // namespace afl
