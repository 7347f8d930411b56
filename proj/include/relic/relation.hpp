#pragma once

// The two-state assertion language.
//
// A relation is a formula over a pair of states (s, s'). Atoms compare
// side-tagged arithmetic terms (x<1> reads s, x<2> reads s'); formulas close
// under !, &&, ||, =>, value quantification (exists v.), assignment
// postimages R[x<i> := e], argument swapping flip(R), boolean lifts
// lift1(b)/lift2(b), and a single natural-number family parameter n with its
// binder (exists n.) and instances F(n), F(n+1), F(0).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "relic/errors.hpp"
#include "relic/imp.hpp"

namespace relic {

enum class Side : int { One = 1, Two = 2 };

inline Side other(Side s) { return s == Side::One ? Side::Two : Side::One; }

// ---------------------------------------------------------------------------
// Tagged arithmetic terms

struct TAExp;
using TAExpPtr = std::shared_ptr<const TAExp>;

struct TLit {
  std::int64_t value;
};
struct TVar {
  Side side;
  std::string name;
};
struct TBound {
  std::string name;  // bound by an enclosing "exists v."
};
struct TParam {};  // the family parameter n
struct TBin {
  AOp op;
  TAExpPtr lhs;
  TAExpPtr rhs;
};

struct TAExp {
  std::variant<TLit, TVar, TBound, TParam, TBin> node;
};

inline TAExpPtr t_lit(std::int64_t v) { return std::make_shared<TAExp>(TAExp{TLit{v}}); }
inline TAExpPtr t_var(Side side, std::string name) {
  return std::make_shared<TAExp>(TAExp{TVar{side, std::move(name)}});
}
inline TAExpPtr t_bound(std::string name) {
  return std::make_shared<TAExp>(TAExp{TBound{std::move(name)}});
}
inline TAExpPtr t_param() { return std::make_shared<TAExp>(TAExp{TParam{}}); }
inline TAExpPtr t_bin(AOp op, TAExpPtr l, TAExpPtr r) {
  return std::make_shared<TAExp>(TAExp{TBin{op, std::move(l), std::move(r)}});
}

// ---------------------------------------------------------------------------
// Relations

enum class RelCmpOp { Eq, Ne, Less, Leq };

struct Relation;
using RelPtr = std::shared_ptr<const Relation>;

struct RBool {
  bool value;
};
struct RCmp {
  RelCmpOp op;
  TAExpPtr lhs;
  TAExpPtr rhs;
};
// b evaluated against side 1 or side 2 only.
struct RLift {
  Side side;
  BExpPtr pred;
};
struct RNot {
  RelPtr arg;
};
struct RAnd {
  RelPtr lhs;
  RelPtr rhs;
};
struct ROr {
  RelPtr lhs;
  RelPtr rhs;
};
struct RImplies {
  RelPtr lhs;
  RelPtr rhs;
};
// exists v. body, with v ranging over the domain's quantifier values.
struct RExistsVal {
  std::string var;
  RelPtr body;
};
// The postimage of `base` under the assignment var := value executed on the
// given side: at (s, s') with side = 1 it holds iff some v has
// base(s[var:=v], s') and s(var) = [[value]] in s[var:=v].
struct RAssignPost {
  Side side;
  RelPtr base;
  std::string var;
  AExpPtr value;
};
struct RFlip {
  RelPtr arg;
};
// exists n. body — binds the family parameter over [0, n_max].
struct RFamilyExists {
  RelPtr body;
};
// body applied at a concrete index expression; the parameter occurrences
// inside `body` are bound by this node, while `index` may mention an outer n.
struct RFamilyInstance {
  RelPtr body;
  TAExpPtr index;
  std::string name;  // display only
};

struct Relation {
  std::variant<RBool, RCmp, RLift, RNot, RAnd, ROr, RImplies, RExistsVal, RAssignPost,
               RFlip, RFamilyExists, RFamilyInstance>
      node;
};

// A relation with one distinguished free natural parameter n.
struct RelationFamily {
  RelPtr body;
  std::string name;  // display only
};

inline RelPtr r_bool(bool v) { return std::make_shared<Relation>(Relation{RBool{v}}); }
inline RelPtr r_cmp(RelCmpOp op, TAExpPtr l, TAExpPtr r) {
  return std::make_shared<Relation>(Relation{RCmp{op, std::move(l), std::move(r)}});
}
inline RelPtr r_lift(Side side, BExpPtr b) {
  return std::make_shared<Relation>(Relation{RLift{side, std::move(b)}});
}
inline RelPtr r_not(RelPtr r) { return std::make_shared<Relation>(Relation{RNot{std::move(r)}}); }
inline RelPtr r_and(RelPtr l, RelPtr r) {
  return std::make_shared<Relation>(Relation{RAnd{std::move(l), std::move(r)}});
}
inline RelPtr r_or(RelPtr l, RelPtr r) {
  return std::make_shared<Relation>(Relation{ROr{std::move(l), std::move(r)}});
}
inline RelPtr r_implies(RelPtr l, RelPtr r) {
  return std::make_shared<Relation>(Relation{RImplies{std::move(l), std::move(r)}});
}
inline RelPtr r_exists_val(std::string var, RelPtr body) {
  return std::make_shared<Relation>(Relation{RExistsVal{std::move(var), std::move(body)}});
}
inline RelPtr r_flip(RelPtr r) {
  return std::make_shared<Relation>(Relation{RFlip{std::move(r)}});
}
inline RelPtr r_family_exists(RelPtr body) {
  return std::make_shared<Relation>(Relation{RFamilyExists{std::move(body)}});
}
inline RelPtr r_family_instance(RelPtr body, TAExpPtr index, std::string name = "") {
  return std::make_shared<Relation>(
      Relation{RFamilyInstance{std::move(body), std::move(index), std::move(name)}});
}

// The assignment postimage transformer R[x := e] (acting on side 1); this is
// the exact image of R under x := e on the first state.
inline RelPtr assign_post(RelPtr base, std::string var, AExpPtr value,
                          Side side = Side::One) {
  return std::make_shared<Relation>(
      Relation{RAssignPost{side, std::move(base), std::move(var), std::move(value)}});
}

// ---------------------------------------------------------------------------
// Boolean lift expansion: lift(b, side) as a structural translation, tagging
// every variable occurrence with the given side.

inline TAExpPtr tag_aexp(const AExpPtr& e, Side side) {
  if (const auto* lit = std::get_if<ALit>(&e->node)) return t_lit(lit->value);
  if (const auto* var = std::get_if<AVar>(&e->node)) return t_var(side, var->name);
  const auto& bin = std::get<ABin>(e->node);
  return t_bin(bin.op, tag_aexp(bin.lhs, side), tag_aexp(bin.rhs, side));
}

inline RelPtr lift_bexp(const BExpPtr& b, Side side) {
  if (const auto* lit = std::get_if<BLit>(&b->node)) return r_bool(lit->value);
  if (const auto* cmp = std::get_if<BCmp>(&b->node)) {
    RelCmpOp op = cmp->op == CmpOp::Eq     ? RelCmpOp::Eq
                  : cmp->op == CmpOp::Less ? RelCmpOp::Less
                                           : RelCmpOp::Leq;
    return r_cmp(op, tag_aexp(cmp->lhs, side), tag_aexp(cmp->rhs, side));
  }
  if (const auto* neg = std::get_if<BNot>(&b->node)) return r_not(lift_bexp(neg->arg, side));
  const auto& conj = std::get<BAnd>(b->node);
  return r_and(lift_bexp(conj.lhs, side), lift_bexp(conj.rhs, side));
}

// ---------------------------------------------------------------------------
// Parameter substitution and closedness

// Replaces free occurrences of the family parameter with `replacement`.
// Family-exists binders and instance bodies rebind the parameter, so
// substitution descends only into instance index expressions there.
inline TAExpPtr subst_param(const TAExpPtr& e, const TAExpPtr& replacement) {
  if (std::holds_alternative<TParam>(e->node)) return replacement;
  if (const auto* bin = std::get_if<TBin>(&e->node))
    return t_bin(bin->op, subst_param(bin->lhs, replacement),
                 subst_param(bin->rhs, replacement));
  return e;
}

inline RelPtr subst_param(const RelPtr& r, const TAExpPtr& replacement) {
  if (const auto* cmp = std::get_if<RCmp>(&r->node))
    return r_cmp(cmp->op, subst_param(cmp->lhs, replacement),
                 subst_param(cmp->rhs, replacement));
  if (const auto* neg = std::get_if<RNot>(&r->node))
    return r_not(subst_param(neg->arg, replacement));
  if (const auto* conj = std::get_if<RAnd>(&r->node))
    return r_and(subst_param(conj->lhs, replacement), subst_param(conj->rhs, replacement));
  if (const auto* disj = std::get_if<ROr>(&r->node))
    return r_or(subst_param(disj->lhs, replacement), subst_param(disj->rhs, replacement));
  if (const auto* imp = std::get_if<RImplies>(&r->node))
    return r_implies(subst_param(imp->lhs, replacement), subst_param(imp->rhs, replacement));
  if (const auto* ex = std::get_if<RExistsVal>(&r->node))
    return r_exists_val(ex->var, subst_param(ex->body, replacement));
  if (const auto* post = std::get_if<RAssignPost>(&r->node))
    return assign_post(subst_param(post->base, replacement), post->var, post->value,
                       post->side);
  if (const auto* flip = std::get_if<RFlip>(&r->node))
    return r_flip(subst_param(flip->arg, replacement));
  if (const auto* inst = std::get_if<RFamilyInstance>(&r->node))
    return r_family_instance(inst->body, subst_param(inst->index, replacement), inst->name);
  // RBool, RLift, RFamilyExists (binder): unchanged
  return r;
}

inline RelPtr instantiate(const RelationFamily& family, std::int64_t index) {
  return subst_param(family.body, t_lit(index));
}

inline bool has_free_param(const TAExpPtr& e) {
  if (std::holds_alternative<TParam>(e->node)) return true;
  if (const auto* bin = std::get_if<TBin>(&e->node))
    return has_free_param(bin->lhs) || has_free_param(bin->rhs);
  return false;
}

inline bool has_free_param(const RelPtr& r) {
  if (const auto* cmp = std::get_if<RCmp>(&r->node))
    return has_free_param(cmp->lhs) || has_free_param(cmp->rhs);
  if (const auto* neg = std::get_if<RNot>(&r->node)) return has_free_param(neg->arg);
  if (const auto* conj = std::get_if<RAnd>(&r->node))
    return has_free_param(conj->lhs) || has_free_param(conj->rhs);
  if (const auto* disj = std::get_if<ROr>(&r->node))
    return has_free_param(disj->lhs) || has_free_param(disj->rhs);
  if (const auto* imp = std::get_if<RImplies>(&r->node))
    return has_free_param(imp->lhs) || has_free_param(imp->rhs);
  if (const auto* ex = std::get_if<RExistsVal>(&r->node)) return has_free_param(ex->body);
  if (const auto* post = std::get_if<RAssignPost>(&r->node)) return has_free_param(post->base);
  if (const auto* flip = std::get_if<RFlip>(&r->node)) return has_free_param(flip->arg);
  if (const auto* inst = std::get_if<RFamilyInstance>(&r->node))
    return has_free_param(inst->index);
  return false;  // RBool, RLift, RFamilyExists
}

// True when every side-2 source of truth is absent: usable as a one-state
// predicate over side 1.
inline bool mentions_side(const TAExpPtr& e, Side side) {
  if (const auto* var = std::get_if<TVar>(&e->node)) return var->side == side;
  if (const auto* bin = std::get_if<TBin>(&e->node))
    return mentions_side(bin->lhs, side) || mentions_side(bin->rhs, side);
  return false;
}

inline bool mentions_side(const RelPtr& r, Side side) {
  if (const auto* cmp = std::get_if<RCmp>(&r->node))
    return mentions_side(cmp->lhs, side) || mentions_side(cmp->rhs, side);
  if (const auto* lift = std::get_if<RLift>(&r->node)) return lift->side == side;
  if (const auto* neg = std::get_if<RNot>(&r->node)) return mentions_side(neg->arg, side);
  if (const auto* conj = std::get_if<RAnd>(&r->node))
    return mentions_side(conj->lhs, side) || mentions_side(conj->rhs, side);
  if (const auto* disj = std::get_if<ROr>(&r->node))
    return mentions_side(disj->lhs, side) || mentions_side(disj->rhs, side);
  if (const auto* imp = std::get_if<RImplies>(&r->node))
    return mentions_side(imp->lhs, side) || mentions_side(imp->rhs, side);
  if (const auto* ex = std::get_if<RExistsVal>(&r->node)) return mentions_side(ex->body, side);
  if (const auto* post = std::get_if<RAssignPost>(&r->node))
    return post->side == side || mentions_side(post->base, side);
  if (const auto* flip = std::get_if<RFlip>(&r->node))
    return mentions_side(flip->arg, other(side));
  if (const auto* fam = std::get_if<RFamilyExists>(&r->node))
    return mentions_side(fam->body, side);
  if (const auto* inst = std::get_if<RFamilyInstance>(&r->node))
    return mentions_side(inst->body, side);
  return false;
}

inline void collect_vars(const TAExpPtr& e, std::set<std::string>& out) {
  if (const auto* var = std::get_if<TVar>(&e->node)) {
    out.insert(var->name);
  } else if (const auto* bin = std::get_if<TBin>(&e->node)) {
    collect_vars(bin->lhs, out);
    collect_vars(bin->rhs, out);
  }
}

inline void collect_vars(const RelPtr& r, std::set<std::string>& out) {
  if (const auto* cmp = std::get_if<RCmp>(&r->node)) {
    collect_vars(cmp->lhs, out);
    collect_vars(cmp->rhs, out);
  } else if (const auto* lift = std::get_if<RLift>(&r->node)) {
    collect_vars(*lift->pred, out);
  } else if (const auto* neg = std::get_if<RNot>(&r->node)) {
    collect_vars(neg->arg, out);
  } else if (const auto* conj = std::get_if<RAnd>(&r->node)) {
    collect_vars(conj->lhs, out);
    collect_vars(conj->rhs, out);
  } else if (const auto* disj = std::get_if<ROr>(&r->node)) {
    collect_vars(disj->lhs, out);
    collect_vars(disj->rhs, out);
  } else if (const auto* imp = std::get_if<RImplies>(&r->node)) {
    collect_vars(imp->lhs, out);
    collect_vars(imp->rhs, out);
  } else if (const auto* ex = std::get_if<RExistsVal>(&r->node)) {
    collect_vars(ex->body, out);
  } else if (const auto* post = std::get_if<RAssignPost>(&r->node)) {
    out.insert(post->var);
    collect_vars(*post->value, out);
    collect_vars(post->base, out);
  } else if (const auto* flip = std::get_if<RFlip>(&r->node)) {
    collect_vars(flip->arg, out);
  } else if (const auto* fam = std::get_if<RFamilyExists>(&r->node)) {
    collect_vars(fam->body, out);
  } else if (const auto* inst = std::get_if<RFamilyInstance>(&r->node)) {
    collect_vars(inst->body, out);
    collect_vars(inst->index, out);
  }
}

// ---------------------------------------------------------------------------
// Structural comparison (total order) and schema normalization
//
// Schema positions in the kernel compare relations syntactically up to a
// normal form: boolean lifts expand to their tagged translation, family
// instances beta-reduce, flip(flip(R)) collapses, and &&/|| chains flatten,
// sort and deduplicate. Nothing else is rewritten — in particular there is
// no semantic simplification, so the normal form is stable and predictable.

namespace detail {

inline int cmp3(std::int64_t a, std::int64_t b) { return a < b ? -1 : a > b ? 1 : 0; }
inline int cmp3(const std::string& a, const std::string& b) {
  return a < b ? -1 : a > b ? 1 : 0;
}

inline int compare(const AExpPtr& a, const AExpPtr& b);
inline int compare(const BExpPtr& a, const BExpPtr& b);
inline int compare(const TAExpPtr& a, const TAExpPtr& b);
inline int compare(const RelPtr& a, const RelPtr& b);

inline int compare(const AExpPtr& a, const AExpPtr& b) {
  if (int k = cmp3(static_cast<int>(a->node.index()), b->node.index()); k != 0) return k;
  if (const auto* lit = std::get_if<ALit>(&a->node))
    return cmp3(lit->value, std::get<ALit>(b->node).value);
  if (const auto* var = std::get_if<AVar>(&a->node))
    return cmp3(var->name, std::get<AVar>(b->node).name);
  const auto& xa = std::get<ABin>(a->node);
  const auto& xb = std::get<ABin>(b->node);
  if (int k = cmp3(static_cast<int>(xa.op), static_cast<int>(xb.op)); k != 0) return k;
  if (int k = compare(xa.lhs, xb.lhs); k != 0) return k;
  return compare(xa.rhs, xb.rhs);
}

inline int compare(const BExpPtr& a, const BExpPtr& b) {
  if (int k = cmp3(static_cast<int>(a->node.index()), b->node.index()); k != 0) return k;
  if (const auto* lit = std::get_if<BLit>(&a->node))
    return cmp3(lit->value ? 1 : 0, std::get<BLit>(b->node).value ? 1 : 0);
  if (const auto* cmp = std::get_if<BCmp>(&a->node)) {
    const auto& cb = std::get<BCmp>(b->node);
    if (int k = cmp3(static_cast<int>(cmp->op), static_cast<int>(cb.op)); k != 0) return k;
    if (int k = compare(cmp->lhs, cb.lhs); k != 0) return k;
    return compare(cmp->rhs, cb.rhs);
  }
  if (const auto* neg = std::get_if<BNot>(&a->node))
    return compare(neg->arg, std::get<BNot>(b->node).arg);
  const auto& xa = std::get<BAnd>(a->node);
  const auto& xb = std::get<BAnd>(b->node);
  if (int k = compare(xa.lhs, xb.lhs); k != 0) return k;
  return compare(xa.rhs, xb.rhs);
}

inline int compare(const TAExpPtr& a, const TAExpPtr& b) {
  if (int k = cmp3(static_cast<int>(a->node.index()), b->node.index()); k != 0) return k;
  if (const auto* lit = std::get_if<TLit>(&a->node))
    return cmp3(lit->value, std::get<TLit>(b->node).value);
  if (const auto* var = std::get_if<TVar>(&a->node)) {
    const auto& vb = std::get<TVar>(b->node);
    if (int k = cmp3(static_cast<int>(var->side), static_cast<int>(vb.side)); k != 0) return k;
    return cmp3(var->name, vb.name);
  }
  if (const auto* bound = std::get_if<TBound>(&a->node))
    return cmp3(bound->name, std::get<TBound>(b->node).name);
  if (std::holds_alternative<TParam>(a->node)) return 0;
  const auto& xa = std::get<TBin>(a->node);
  const auto& xb = std::get<TBin>(b->node);
  if (int k = cmp3(static_cast<int>(xa.op), static_cast<int>(xb.op)); k != 0) return k;
  if (int k = compare(xa.lhs, xb.lhs); k != 0) return k;
  return compare(xa.rhs, xb.rhs);
}

inline int compare(const RelPtr& a, const RelPtr& b) {
  if (int k = cmp3(static_cast<int>(a->node.index()), b->node.index()); k != 0) return k;
  if (const auto* v = std::get_if<RBool>(&a->node))
    return cmp3(v->value ? 1 : 0, std::get<RBool>(b->node).value ? 1 : 0);
  if (const auto* cmp = std::get_if<RCmp>(&a->node)) {
    const auto& cb = std::get<RCmp>(b->node);
    if (int k = cmp3(static_cast<int>(cmp->op), static_cast<int>(cb.op)); k != 0) return k;
    if (int k = compare(cmp->lhs, cb.lhs); k != 0) return k;
    return compare(cmp->rhs, cb.rhs);
  }
  if (const auto* lift = std::get_if<RLift>(&a->node)) {
    const auto& lb = std::get<RLift>(b->node);
    if (int k = cmp3(static_cast<int>(lift->side), static_cast<int>(lb.side)); k != 0)
      return k;
    return compare(lift->pred, lb.pred);
  }
  if (const auto* neg = std::get_if<RNot>(&a->node))
    return compare(neg->arg, std::get<RNot>(b->node).arg);
  if (const auto* conj = std::get_if<RAnd>(&a->node)) {
    const auto& xb = std::get<RAnd>(b->node);
    if (int k = compare(conj->lhs, xb.lhs); k != 0) return k;
    return compare(conj->rhs, xb.rhs);
  }
  if (const auto* disj = std::get_if<ROr>(&a->node)) {
    const auto& xb = std::get<ROr>(b->node);
    if (int k = compare(disj->lhs, xb.lhs); k != 0) return k;
    return compare(disj->rhs, xb.rhs);
  }
  if (const auto* imp = std::get_if<RImplies>(&a->node)) {
    const auto& xb = std::get<RImplies>(b->node);
    if (int k = compare(imp->lhs, xb.lhs); k != 0) return k;
    return compare(imp->rhs, xb.rhs);
  }
  if (const auto* ex = std::get_if<RExistsVal>(&a->node)) {
    const auto& xb = std::get<RExistsVal>(b->node);
    if (int k = cmp3(ex->var, xb.var); k != 0) return k;
    return compare(ex->body, xb.body);
  }
  if (const auto* post = std::get_if<RAssignPost>(&a->node)) {
    const auto& xb = std::get<RAssignPost>(b->node);
    if (int k = cmp3(static_cast<int>(post->side), static_cast<int>(xb.side)); k != 0)
      return k;
    if (int k = cmp3(post->var, xb.var); k != 0) return k;
    if (int k = compare(post->value, xb.value); k != 0) return k;
    return compare(post->base, xb.base);
  }
  if (const auto* flip = std::get_if<RFlip>(&a->node))
    return compare(flip->arg, std::get<RFlip>(b->node).arg);
  if (const auto* fam = std::get_if<RFamilyExists>(&a->node))
    return compare(fam->body, std::get<RFamilyExists>(b->node).body);
  const auto& ia = std::get<RFamilyInstance>(a->node);
  const auto& ib = std::get<RFamilyInstance>(b->node);
  if (int k = compare(ia.index, ib.index); k != 0) return k;
  return compare(ia.body, ib.body);
}

template <typename Alt>
inline void flatten(const RelPtr& r, std::vector<RelPtr>& out) {
  if (const auto* both = std::get_if<Alt>(&r->node)) {
    flatten<Alt>(both->lhs, out);
    flatten<Alt>(both->rhs, out);
  } else {
    out.push_back(r);
  }
}

}  // namespace detail

inline RelPtr normalize(const RelPtr& r);

namespace detail {
template <typename Alt>
inline RelPtr normalize_chain(const RelPtr& r, RelPtr (*rebuild)(RelPtr, RelPtr)) {
  std::vector<RelPtr> parts;
  flatten<Alt>(r, parts);
  for (auto& p : parts) p = normalize(p);
  // A normalized operand may itself be a chain of the same kind.
  std::vector<RelPtr> flat;
  for (const auto& p : parts) flatten<Alt>(p, flat);
  std::sort(flat.begin(), flat.end(),
            [](const RelPtr& a, const RelPtr& b) { return compare(a, b) < 0; });
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const RelPtr& a, const RelPtr& b) { return compare(a, b) == 0; }),
             flat.end());
  RelPtr out = flat.back();
  for (std::size_t i = flat.size() - 1; i-- > 0;) out = rebuild(flat[i], out);
  return out;
}
}  // namespace detail

inline RelPtr normalize(const RelPtr& r) {
  if (const auto* lift = std::get_if<RLift>(&r->node))
    return normalize(lift_bexp(lift->pred, lift->side));
  if (const auto* inst = std::get_if<RFamilyInstance>(&r->node))
    return normalize(subst_param(inst->body, inst->index));
  if (const auto* neg = std::get_if<RNot>(&r->node)) return r_not(normalize(neg->arg));
  if (std::holds_alternative<RAnd>(r->node))
    return detail::normalize_chain<RAnd>(r, &r_and);
  if (std::holds_alternative<ROr>(r->node)) return detail::normalize_chain<ROr>(r, &r_or);
  if (const auto* imp = std::get_if<RImplies>(&r->node))
    return r_implies(normalize(imp->lhs), normalize(imp->rhs));
  if (const auto* ex = std::get_if<RExistsVal>(&r->node))
    return r_exists_val(ex->var, normalize(ex->body));
  if (const auto* post = std::get_if<RAssignPost>(&r->node))
    return assign_post(normalize(post->base), post->var, post->value, post->side);
  if (const auto* flip = std::get_if<RFlip>(&r->node)) {
    RelPtr inner = normalize(flip->arg);
    if (const auto* inner_flip = std::get_if<RFlip>(&inner->node)) return inner_flip->arg;
    return r_flip(inner);
  }
  if (const auto* fam = std::get_if<RFamilyExists>(&r->node))
    return r_family_exists(normalize(fam->body));
  return r;  // RBool, RCmp
}

inline bool structurally_equal(const RelPtr& a, const RelPtr& b) {
  return detail::compare(a, b) == 0;
}

// Equality up to the schema normal form.
inline bool syntactically_equal(const RelPtr& a, const RelPtr& b) {
  return detail::compare(normalize(a), normalize(b)) == 0;
}

}  // namespace relic
