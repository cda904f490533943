// The formula language of LALL and its quotient by the recursive equation
//
//   ND = all a. (a -o (B -o ND -o a) -o a)          (Scott words)
//
// Formulas are immutable trees shared by pointer. Binders are locally
// nameless: bound variables are de Bruijn indices, free variables carry
// names, so alpha-equivalence is plain structural equality.
//
// Equivalence in the quotient is decided by the fold-first normal form:
// every subformula syntactically equal (up to alpha) to the one-step
// unfolding of ND is replaced by ND, innermost first. The unfolding
// pattern only overlaps itself by nesting, so innermost folding is
// confluent and each fold strictly shrinks the tree.

#pragma once

#include <cassert>
#include <memory>
#include <string>
#include <vector>

#include "lall/error.hpp"

namespace lall {

enum class FKind : uint8_t { BVar, FVar, Nd, Tensor, Lolli, Forall, Bang, Para };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  FKind kind;
  int index = 0;          // BVar
  std::string name;       // FVar, and a printing hint on Forall
  Formula a, b;           // children: Forall/Bang/Para use a; Tensor/Lolli use a,b

  FormulaNode(FKind k) : kind(k) {}
};

inline Formula f_bvar(int i) {
  auto n = std::make_shared<FormulaNode>(FKind::BVar);
  n->index = i;
  return n;
}
inline Formula f_var(const std::string& name) {
  auto n = std::make_shared<FormulaNode>(FKind::FVar);
  n->name = name;
  return n;
}
inline Formula f_nd() {
  static const Formula nd = std::make_shared<FormulaNode>(FKind::Nd);
  return nd;
}
inline Formula f_tensor(Formula a, Formula b) {
  auto n = std::make_shared<FormulaNode>(FKind::Tensor);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}
inline Formula f_lolli(Formula a, Formula b) {
  auto n = std::make_shared<FormulaNode>(FKind::Lolli);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}
inline Formula f_forall_raw(Formula body, const std::string& hint) {
  auto n = std::make_shared<FormulaNode>(FKind::Forall);
  n->a = std::move(body);
  n->name = hint;
  return n;
}
inline Formula f_bang(Formula a) {
  auto n = std::make_shared<FormulaNode>(FKind::Bang);
  n->a = std::move(a);
  return n;
}
inline Formula f_para(Formula a) {
  auto n = std::make_shared<FormulaNode>(FKind::Para);
  n->a = std::move(a);
  return n;
}

inline bool f_equal(const Formula& x, const Formula& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case FKind::BVar: return x->index == y->index;
    case FKind::FVar: return x->name == y->name;
    case FKind::Nd: return true;
    case FKind::Tensor:
    case FKind::Lolli: return f_equal(x->a, y->a) && f_equal(x->b, y->b);
    case FKind::Forall:
    case FKind::Bang:
    case FKind::Para: return f_equal(x->a, y->a);
  }
  return false;
}

// Turn free occurrences of `name` into the bound index for a new binder.
inline Formula f_abstract(const Formula& f, const std::string& name, int depth = 0) {
  if (!f) return f;
  switch (f->kind) {
    case FKind::BVar:
    case FKind::Nd: return f;
    case FKind::FVar: return f->name == name ? f_bvar(depth) : f;
    case FKind::Tensor: return f_tensor(f_abstract(f->a, name, depth), f_abstract(f->b, name, depth));
    case FKind::Lolli: return f_lolli(f_abstract(f->a, name, depth), f_abstract(f->b, name, depth));
    case FKind::Forall: return f_forall_raw(f_abstract(f->a, name, depth + 1), f->name);
    case FKind::Bang: return f_bang(f_abstract(f->a, name, depth));
    case FKind::Para: return f_para(f_abstract(f->a, name, depth));
  }
  return f;
}

inline Formula f_forall(const std::string& name, const Formula& body) {
  return f_forall_raw(f_abstract(body, name), name);
}

// Replace bound index `depth` by `repl` (used when instantiating a Forall).
// Bound variables in `repl` cannot be captured: repl is always closed with
// respect to indices at the substitution site (it comes from the outside),
// and deeper binders shift the target index instead.
inline Formula f_open(const Formula& f, const Formula& repl, int depth = 0) {
  if (!f) return f;
  switch (f->kind) {
    case FKind::BVar: return f->index == depth ? repl : f;
    case FKind::FVar:
    case FKind::Nd: return f;
    case FKind::Tensor: return f_tensor(f_open(f->a, repl, depth), f_open(f->b, repl, depth));
    case FKind::Lolli: return f_lolli(f_open(f->a, repl, depth), f_open(f->b, repl, depth));
    case FKind::Forall: return f_forall_raw(f_open(f->a, repl, depth + 1), f->name);
    case FKind::Bang: return f_bang(f_open(f->a, repl, depth));
    case FKind::Para: return f_para(f_open(f->a, repl, depth));
  }
  return f;
}

// substitute(body, var, replacement): textual substitution of a free variable.
inline Formula substitute(const Formula& body, const std::string& var, const Formula& repl) {
  if (!body) return body;
  switch (body->kind) {
    case FKind::BVar:
    case FKind::Nd: return body;
    case FKind::FVar: return body->name == var ? repl : body;
    case FKind::Tensor: return f_tensor(substitute(body->a, var, repl), substitute(body->b, var, repl));
    case FKind::Lolli: return f_lolli(substitute(body->a, var, repl), substitute(body->b, var, repl));
    case FKind::Forall: return f_forall_raw(substitute(body->a, var, repl), body->name);
    case FKind::Bang: return f_bang(substitute(body->a, var, repl));
    case FKind::Para: return f_para(substitute(body->a, var, repl));
  }
  return body;
}

inline Formula f_instantiate(const Formula& forall, const Formula& arg) {
  if (!forall || forall->kind != FKind::Forall)
    throw error(errc::type_mismatch, "instantiating a non-forall formula");
  return f_open(forall->a, arg);
}

// B = all g. g -o g -o g, expanded eagerly and never stored as a constant.
inline Formula f_bool() {
  static const Formula b = f_forall_raw(f_lolli(f_bvar(0), f_lolli(f_bvar(0), f_bvar(0))), "g");
  return b;
}

// One-step unfolding of ND:  all a. a -o (B -o ND -o a) -o a
inline Formula unfold_nd() {
  static const Formula u = f_forall_raw(
      f_lolli(f_bvar(0), f_lolli(f_lolli(f_bool(), f_lolli(f_nd(), f_bvar(0))), f_bvar(0))), "a");
  return u;
}

// Fold-first normal form: post-order rebuild, replacing any subformula equal
// to unfold_nd() by ND. Inner folds happen first, so nested unfoldings
// collapse in one pass.
inline Formula fold_normal(const Formula& f) {
  if (!f) return f;
  Formula out;
  switch (f->kind) {
    case FKind::BVar:
    case FKind::FVar:
    case FKind::Nd: return f;
    case FKind::Tensor: out = f_tensor(fold_normal(f->a), fold_normal(f->b)); break;
    case FKind::Lolli: out = f_lolli(fold_normal(f->a), fold_normal(f->b)); break;
    case FKind::Forall: out = f_forall_raw(fold_normal(f->a), f->name); break;
    case FKind::Bang: out = f_bang(fold_normal(f->a)); break;
    case FKind::Para: out = f_para(fold_normal(f->a)); break;
  }
  if (f_equal(out, unfold_nd())) return f_nd();
  return out;
}

inline Formula fold_once(const Formula& f) { return fold_normal(f); }

inline bool equiv(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return f_equal(fold_normal(a), fold_normal(b));
}

// ---------------------------------------------------------------------------
// Printing. Lolli is right-associative and loosest, Tensor binds tighter,
// the modalities tightest. B is recognized and abbreviated.

inline std::string f_print(const Formula& f, std::vector<std::string>* binders = nullptr,
                           int prec = 0) {
  if (!f) return "?";
  std::vector<std::string> local;
  std::vector<std::string>& env = binders ? *binders : local;
  if (f_equal(f, f_bool())) return "B";
  auto paren = [&](int need, const std::string& s) {
    return prec > need ? "(" + s + ")" : s;
  };
  switch (f->kind) {
    case FKind::Nd: return "N";
    case FKind::FVar: return f->name;
    case FKind::BVar: {
      int pos = static_cast<int>(env.size()) - 1 - f->index;
      if (pos >= 0 && pos < static_cast<int>(env.size())) return env[pos];
      return "#" + std::to_string(f->index);
    }
    case FKind::Lolli: {
      std::string l = f_print(f->a, &env, 2);
      std::string r = f_print(f->b, &env, 1);
      return paren(1, l + " -o " + r);
    }
    case FKind::Tensor: {
      std::string l = f_print(f->a, &env, 3);
      std::string r = f_print(f->b, &env, 2);
      return paren(2, l + "*" + r);
    }
    case FKind::Bang: return "!" + f_print(f->a, &env, 4);
    case FKind::Para: return "$" + f_print(f->a, &env, 4);
    case FKind::Forall: {
      std::string nm = f->name.empty() ? "a" : f->name;
      // avoid clashing with an enclosing binder of the same name
      int suffix = 0;
      std::string use = nm;
      for (bool clash = true; clash;) {
        clash = false;
        for (auto& e : env)
          if (e == use) { clash = true; use = nm + std::to_string(++suffix); break; }
      }
      env.push_back(use);
      std::string body = f_print(f->a, &env, 1);
      env.pop_back();
      return paren(1, "all " + use + ". " + body);
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parser for the textual syntax: N, B, A*B, A-oB, !A, $A, all a. A, parens.

namespace detail {

struct FParser {
  const std::string& s;
  size_t p = 0;

  explicit FParser(const std::string& src) : s(src) {}

  void skip() { while (p < s.size() && isspace(static_cast<unsigned char>(s[p]))) ++p; }

  bool eat(const std::string& tok) {
    skip();
    if (s.compare(p, tok.size(), tok) == 0) {
      if (isalpha(static_cast<unsigned char>(tok[0]))) {
        size_t end = p + tok.size();
        if (end < s.size() && (isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_'))
          return false;
      }
      p += tok.size();
      return true;
    }
    return false;
  }

  std::string ident() {
    skip();
    size_t start = p;
    while (p < s.size() && (isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_')) ++p;
    if (start == p) throw error(errc::syntax_error, "expected identifier at offset " + std::to_string(p));
    return s.substr(start, p - start);
  }

  Formula parse() {
    Formula f = lolli();
    skip();
    if (p != s.size()) throw error(errc::syntax_error, "trailing input in formula at offset " + std::to_string(p));
    return f;
  }

  Formula lolli() {
    skip();
    if (eat("all")) {
      std::string v = ident();
      skip();
      if (!eat(".")) throw error(errc::syntax_error, "expected '.' after binder");
      // occurrences of v parse as free vars; f_forall abstracts them, and inner
      // binders of the same name already captured theirs (shadowing)
      Formula body = lolli();
      return f_forall(v, body);
    }
    Formula l = tensor();
    skip();
    if (eat("-o")) return f_lolli(l, lolli());
    return l;
  }

  Formula tensor() {
    Formula l = atom();
    skip();
    while (eat("*")) {
      Formula r = atom();
      l = f_tensor(l, r);
      skip();
    }
    return l;
  }

  Formula atom() {
    skip();
    if (eat("!")) return f_bang(atom());
    if (eat("$")) return f_para(atom());
    if (eat("(")) {
      Formula f = lolli();
      if (!eat(")")) throw error(errc::syntax_error, "expected ')'");
      return f;
    }
    if (eat("N")) return f_nd();
    if (eat("B")) return f_bool();
    std::string v = ident();
    return f_var(v);
  }
};

}  // namespace detail

inline Formula parse_formula(const std::string& src) { return detail::FParser(src).parse(); }

// Common abbreviations.
inline Formula f_nc() {
  // NC = all a. !(a -o a) -o !(a -o a) -o $(a -o a)
  static const Formula nc = [] {
    Formula aa = f_lolli(f_bvar(0), f_bvar(0));
    return f_forall_raw(f_lolli(f_bang(aa), f_lolli(f_bang(aa), f_para(aa))), "a");
  }();
  return nc;
}

inline Formula f_para_pow(int k, Formula f) {
  for (int i = 0; i < k; ++i) f = f_para(std::move(f));
  return f;
}

// Left-nested tensor of a non-empty list.
inline Formula f_tensor_list(const std::vector<Formula>& fs) {
  if (fs.empty()) throw error(errc::type_mismatch, "empty tensor list");
  Formula acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = f_tensor(acc, fs[i]);
  return acc;
}

}  // namespace lall
