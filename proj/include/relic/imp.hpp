#pragma once

// Abstract syntax and big-step evaluation for the IMP toy language.
//
// Commands:      c ::= x := e | c; c | if b then c else c | while b do c | skip
// Arithmetic:    e ::= n | x | e + e | e - e | e * e
// Boolean:       b ::= true | false | e = e | e < e | e <= e | !b | b && b
//
// All values are immutable after construction; every operation here is a
// pure function, so the whole module is safe to use from multiple threads.

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>

#include "relic/errors.hpp"

namespace relic {

// ---------------------------------------------------------------------------
// Arithmetic expressions

enum class AOp { Add, Sub, Mul };

struct AExp;
using AExpPtr = std::shared_ptr<const AExp>;

struct ALit {
  std::int64_t value;
};
struct AVar {
  std::string name;
};
struct ABin {
  AOp op;
  AExpPtr lhs;
  AExpPtr rhs;
};

struct AExp {
  std::variant<ALit, AVar, ABin> node;
};

inline AExpPtr a_lit(std::int64_t v) { return std::make_shared<AExp>(AExp{ALit{v}}); }
inline AExpPtr a_var(std::string name) { return std::make_shared<AExp>(AExp{AVar{std::move(name)}}); }
inline AExpPtr a_bin(AOp op, AExpPtr l, AExpPtr r) {
  return std::make_shared<AExp>(AExp{ABin{op, std::move(l), std::move(r)}});
}

// ---------------------------------------------------------------------------
// Boolean expressions

enum class CmpOp { Eq, Less, Leq };

struct BExp;
using BExpPtr = std::shared_ptr<const BExp>;

struct BLit {
  bool value;
};
struct BCmp {
  CmpOp op;
  AExpPtr lhs;
  AExpPtr rhs;
};
struct BNot {
  BExpPtr arg;
};
struct BAnd {
  BExpPtr lhs;
  BExpPtr rhs;
};

struct BExp {
  std::variant<BLit, BCmp, BNot, BAnd> node;
};

inline BExpPtr b_lit(bool v) { return std::make_shared<BExp>(BExp{BLit{v}}); }
inline BExpPtr b_cmp(CmpOp op, AExpPtr l, AExpPtr r) {
  return std::make_shared<BExp>(BExp{BCmp{op, std::move(l), std::move(r)}});
}
inline BExpPtr b_not(BExpPtr b) { return std::make_shared<BExp>(BExp{BNot{std::move(b)}}); }
inline BExpPtr b_and(BExpPtr l, BExpPtr r) {
  return std::make_shared<BExp>(BExp{BAnd{std::move(l), std::move(r)}});
}

// ---------------------------------------------------------------------------
// Commands

struct Command;
using CommandPtr = std::shared_ptr<const Command>;

struct CSkip {};
struct CAssign {
  std::string var;
  AExpPtr value;
};
struct CSeq {
  CommandPtr first;
  CommandPtr second;
};
struct CIf {
  BExpPtr cond;
  CommandPtr then_branch;
  CommandPtr else_branch;
};
struct CWhile {
  BExpPtr cond;
  CommandPtr body;
};

struct Command {
  std::variant<CSkip, CAssign, CSeq, CIf, CWhile> node;
};

inline CommandPtr c_skip() { return std::make_shared<Command>(Command{CSkip{}}); }
inline CommandPtr c_assign(std::string var, AExpPtr value) {
  return std::make_shared<Command>(Command{CAssign{std::move(var), std::move(value)}});
}
inline CommandPtr c_seq(CommandPtr a, CommandPtr b) {
  return std::make_shared<Command>(Command{CSeq{std::move(a), std::move(b)}});
}
inline CommandPtr c_if(BExpPtr b, CommandPtr t, CommandPtr e) {
  return std::make_shared<Command>(Command{CIf{std::move(b), std::move(t), std::move(e)}});
}
inline CommandPtr c_while(BExpPtr b, CommandPtr body) {
  return std::make_shared<Command>(Command{CWhile{std::move(b), std::move(body)}});
}

// ---------------------------------------------------------------------------
// Structural equality

inline bool equal(const AExp& a, const AExp& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* la = std::get_if<ALit>(&a.node))
    return la->value == std::get<ALit>(b.node).value;
  if (const auto* va = std::get_if<AVar>(&a.node))
    return va->name == std::get<AVar>(b.node).name;
  const auto& xa = std::get<ABin>(a.node);
  const auto& xb = std::get<ABin>(b.node);
  return xa.op == xb.op && equal(*xa.lhs, *xb.lhs) && equal(*xa.rhs, *xb.rhs);
}

inline bool equal(const BExp& a, const BExp& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* la = std::get_if<BLit>(&a.node))
    return la->value == std::get<BLit>(b.node).value;
  if (const auto* ca = std::get_if<BCmp>(&a.node)) {
    const auto& cb = std::get<BCmp>(b.node);
    return ca->op == cb.op && equal(*ca->lhs, *cb.lhs) && equal(*ca->rhs, *cb.rhs);
  }
  if (const auto* na = std::get_if<BNot>(&a.node))
    return equal(*na->arg, *std::get<BNot>(b.node).arg);
  const auto& xa = std::get<BAnd>(a.node);
  const auto& xb = std::get<BAnd>(b.node);
  return equal(*xa.lhs, *xb.lhs) && equal(*xa.rhs, *xb.rhs);
}

inline bool equal(const Command& a, const Command& b) {
  if (a.node.index() != b.node.index()) return false;
  if (std::holds_alternative<CSkip>(a.node)) return true;
  if (const auto* aa = std::get_if<CAssign>(&a.node)) {
    const auto& ab = std::get<CAssign>(b.node);
    return aa->var == ab.var && equal(*aa->value, *ab.value);
  }
  if (const auto* sa = std::get_if<CSeq>(&a.node)) {
    const auto& sb = std::get<CSeq>(b.node);
    return equal(*sa->first, *sb.first) && equal(*sa->second, *sb.second);
  }
  if (const auto* ia = std::get_if<CIf>(&a.node)) {
    const auto& ib = std::get<CIf>(b.node);
    return equal(*ia->cond, *ib.cond) && equal(*ia->then_branch, *ib.then_branch) &&
           equal(*ia->else_branch, *ib.else_branch);
  }
  const auto& wa = std::get<CWhile>(a.node);
  const auto& wb = std::get<CWhile>(b.node);
  return equal(*wa.cond, *wb.cond) && equal(*wa.body, *wb.body);
}

// ---------------------------------------------------------------------------
// States
//
// A state is a total map from variable names to integers: unmapped names read
// as 0, and entries equal to 0 are never stored, so equality and ordering on
// the underlying map are canonical.

class State {
 public:
  State() = default;
  explicit State(const std::map<std::string, std::int64_t>& entries) {
    for (const auto& [name, value] : entries) set(name, value);
  }

  std::int64_t get(const std::string& name) const {
    auto it = vals_.find(name);
    return it == vals_.end() ? 0 : it->second;
  }

  void set(const std::string& name, std::int64_t value) {
    if (value == 0)
      vals_.erase(name);
    else
      vals_[name] = value;
  }

  State with(const std::string& name, std::int64_t value) const {
    State out = *this;
    out.set(name, value);
    return out;
  }

  const std::map<std::string, std::int64_t>& entries() const { return vals_; }

  friend bool operator==(const State& a, const State& b) = default;
  friend auto operator<=>(const State& a, const State& b) = default;

 private:
  std::map<std::string, std::int64_t> vals_;
};

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {
inline std::int64_t checked_arith(AOp op, std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  bool overflow = false;
  switch (op) {
    case AOp::Add: overflow = __builtin_add_overflow(a, b, &out); break;
    case AOp::Sub: overflow = __builtin_sub_overflow(a, b, &out); break;
    case AOp::Mul: overflow = __builtin_mul_overflow(a, b, &out); break;
  }
  if (overflow) throw EvalError("integer overflow in arithmetic expression");
  return out;
}
}  // namespace detail

inline std::int64_t eval_aexp(const AExp& e, const State& s) {
  if (const auto* lit = std::get_if<ALit>(&e.node)) return lit->value;
  if (const auto* var = std::get_if<AVar>(&e.node)) return s.get(var->name);
  const auto& bin = std::get<ABin>(e.node);
  return detail::checked_arith(bin.op, eval_aexp(*bin.lhs, s), eval_aexp(*bin.rhs, s));
}

inline bool eval_bexp(const BExp& b, const State& s) {
  if (const auto* lit = std::get_if<BLit>(&b.node)) return lit->value;
  if (const auto* cmp = std::get_if<BCmp>(&b.node)) {
    const std::int64_t l = eval_aexp(*cmp->lhs, s);
    const std::int64_t r = eval_aexp(*cmp->rhs, s);
    switch (cmp->op) {
      case CmpOp::Eq: return l == r;
      case CmpOp::Less: return l < r;
      case CmpOp::Leq: return l <= r;
    }
  }
  if (const auto* neg = std::get_if<BNot>(&b.node)) return !eval_bexp(*neg->arg, s);
  const auto& conj = std::get<BAnd>(b.node);
  return eval_bexp(*conj.lhs, s) && eval_bexp(*conj.rhs, s);
}

// Result of a fuel-bounded execution. FuelExhausted means "unknown, possibly
// divergent" and must never be treated as a final state.
struct ExecResult {
  enum class Kind { Terminated, FuelExhausted };
  Kind kind = Kind::FuelExhausted;
  State state;                  // meaningful only when Terminated
  std::uint64_t fuel_used = 0;  // while-loop iterations consumed

  bool terminated() const { return kind == Kind::Terminated; }
};

namespace detail {
// Single shared fuel budget; one unit per while-loop iteration taken.
// While loops are driven iteratively so deep iteration counts cannot
// overflow the call stack; recursion depth is bounded by AST nesting.
inline bool exec_step(const Command& c, State& s, std::uint64_t fuel, std::uint64_t& used) {
  if (std::holds_alternative<CSkip>(c.node)) return true;
  if (const auto* assign = std::get_if<CAssign>(&c.node)) {
    s.set(assign->var, eval_aexp(*assign->value, s));
    return true;
  }
  if (const auto* seq = std::get_if<CSeq>(&c.node)) {
    return exec_step(*seq->first, s, fuel, used) && exec_step(*seq->second, s, fuel, used);
  }
  if (const auto* cond = std::get_if<CIf>(&c.node)) {
    const Command& branch = eval_bexp(*cond->cond, s) ? *cond->then_branch : *cond->else_branch;
    return exec_step(branch, s, fuel, used);
  }
  const auto& loop = std::get<CWhile>(c.node);
  while (eval_bexp(*loop.cond, s)) {
    if (used == fuel) return false;
    ++used;
    if (!exec_step(*loop.body, s, fuel, used)) return false;
  }
  return true;
}
}  // namespace detail

// Big-step execution bounded by fuel. Deterministic: for fixed inputs the
// result is unique, and Terminated results are stable under any fuel
// increase. Throws EvalError on arithmetic overflow.
inline ExecResult exec(const Command& c, State s, std::uint64_t fuel) {
  std::uint64_t used = 0;
  ExecResult out;
  if (detail::exec_step(c, s, fuel, used)) {
    out.kind = ExecResult::Kind::Terminated;
    out.state = std::move(s);
  } else {
    out.kind = ExecResult::Kind::FuelExhausted;
  }
  out.fuel_used = used;
  return out;
}

// ---------------------------------------------------------------------------
// Variable collection

inline void collect_vars(const AExp& e, std::set<std::string>& out) {
  if (const auto* var = std::get_if<AVar>(&e.node)) {
    out.insert(var->name);
  } else if (const auto* bin = std::get_if<ABin>(&e.node)) {
    collect_vars(*bin->lhs, out);
    collect_vars(*bin->rhs, out);
  }
}

inline void collect_vars(const BExp& b, std::set<std::string>& out) {
  if (const auto* cmp = std::get_if<BCmp>(&b.node)) {
    collect_vars(*cmp->lhs, out);
    collect_vars(*cmp->rhs, out);
  } else if (const auto* neg = std::get_if<BNot>(&b.node)) {
    collect_vars(*neg->arg, out);
  } else if (const auto* conj = std::get_if<BAnd>(&b.node)) {
    collect_vars(*conj->lhs, out);
    collect_vars(*conj->rhs, out);
  }
}

inline void collect_vars(const Command& c, std::set<std::string>& out) {
  if (const auto* assign = std::get_if<CAssign>(&c.node)) {
    out.insert(assign->var);
    collect_vars(*assign->value, out);
  } else if (const auto* seq = std::get_if<CSeq>(&c.node)) {
    collect_vars(*seq->first, out);
    collect_vars(*seq->second, out);
  } else if (const auto* cond = std::get_if<CIf>(&c.node)) {
    collect_vars(*cond->cond, out);
    collect_vars(*cond->then_branch, out);
    collect_vars(*cond->else_branch, out);
  } else if (const auto* loop = std::get_if<CWhile>(&c.node)) {
    collect_vars(*loop->cond, out);
    collect_vars(*loop->body, out);
  }
}

inline std::set<std::string> vars_of(const Command& c) {
  std::set<std::string> out;
  collect_vars(c, out);
  return out;
}

}  // namespace relic
