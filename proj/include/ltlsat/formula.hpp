#pragma once

// Hash-consed LTL syntax trees in negation normal form, plus the
// normal-form machinery the solver is built on: closure sets,
// propositional-atom extraction and the neXt-normal-form rewriting
// with per-Until satisfaction tags.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ltlsat {

using FormulaId = std::uint32_t;
inline constexpr FormulaId kNoFormula = 0xffffffffu;

enum class Kind : std::uint8_t {
  True,
  False,
  Atom,
  Not,      // after NNF conversion only directly above Atom
  And,      // n-ary, children sorted by id, deduplicated
  Or,       // n-ary, children sorted by id, deduplicated
  Next,
  Until,
  Release,
};

struct Node {
  Kind kind;
  std::uint32_t atom = 0;          // Atom: index into the name table
  std::vector<FormulaId> kids;
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line_, int col_, std::vector<std::string> expected_)
      : std::runtime_error(std::move(msg)), line(line_), col(col_), expected(std::move(expected_)) {}
  int line;
  int col;
  std::vector<std::string> expected;
};

// Store of structurally shared formulas. Append-only; formulas are
// identified by their id, and structural equality is id equality.
// And/Or nodes are kept canonical at construction time (flattened,
// children sorted by id, deduplicated, true/false absorbed), so
// representative-formula equality is a plain id comparison.
class FormulaStore {
 public:
  FormulaStore() {
    nodes_.push_back(Node{Kind::True, 0, {}});
    nodes_.push_back(Node{Kind::False, 0, {}});
  }

  FormulaStore(const FormulaStore&) = delete;
  FormulaStore& operator=(const FormulaStore&) = delete;

  FormulaId truth() const { return 0; }
  FormulaId falsity() const { return 1; }

  const Node& node(FormulaId f) const { return nodes_[f]; }
  Kind kind(FormulaId f) const { return nodes_[f].kind; }
  std::size_t size() const { return nodes_.size(); }

  FormulaId atom(std::string_view name) {
    auto it = atom_index_.find(std::string(name));
    if (it != atom_index_.end()) return it->second;
    std::uint32_t ai = static_cast<std::uint32_t>(atom_names_.size());
    atom_names_.emplace_back(name);
    FormulaId f = intern(Node{Kind::Atom, ai, {}});
    atom_index_.emplace(atom_names_.back(), f);
    return f;
  }

  const std::string& atom_name(FormulaId f) const {
    assert(kind(f) == Kind::Atom);
    return atom_names_[nodes_[f].atom];
  }

  FormulaId lnot(FormulaId f) { return intern(Node{Kind::Not, 0, {f}}); }

  FormulaId next(FormulaId f) { return intern(Node{Kind::Next, 0, {f}}); }

  FormulaId until(FormulaId l, FormulaId r) { return intern(Node{Kind::Until, 0, {l, r}}); }

  FormulaId release(FormulaId l, FormulaId r) { return intern(Node{Kind::Release, 0, {l, r}}); }

  FormulaId eventually(FormulaId f) { return until(truth(), f); }
  FormulaId globally(FormulaId f) { return release(falsity(), f); }

  FormulaId conj(std::vector<FormulaId> kids) { return nary(Kind::And, std::move(kids)); }
  FormulaId disj(std::vector<FormulaId> kids) { return nary(Kind::Or, std::move(kids)); }

  // --- satisfaction tags ------------------------------------------------

  // Fresh tag atom for an Until formula, stable for the store lifetime.
  // Tag names use '#', which the input grammar cannot produce, so they
  // can never collide with user atoms.
  FormulaId tag_atom(FormulaId until_id) {
    assert(kind(until_id) == Kind::Until);
    auto it = tag_of_until_.find(until_id);
    if (it != tag_of_until_.end()) return it->second;
    FormulaId t = atom("v#" + std::to_string(until_id));
    tag_of_until_.emplace(until_id, t);
    until_of_tag_.emplace(t, until_id);
    return t;
  }

  bool is_tag(FormulaId f) const { return until_of_tag_.count(f) != 0; }

  FormulaId tag_source(FormulaId tag) const {
    auto it = until_of_tag_.find(tag);
    return it == until_of_tag_.end() ? kNoFormula : it->second;
  }

  // --- normal forms -----------------------------------------------------

  // Negation normal form: negations pushed down to atoms via the usual
  // dualities (!(a U b) = !a R !b, !X f = X !f, De Morgan).
  FormulaId to_nnf(FormulaId f) { return nnf(f, false); }

  bool is_nnf(FormulaId f) const {
    switch (kind(f)) {
      case Kind::True:
      case Kind::False:
      case Kind::Atom:
        return true;
      case Kind::Not:
        return kind(nodes_[f].kids[0]) == Kind::Atom;
      default:
        for (FormulaId k : nodes_[f].kids)
          if (!is_nnf(k)) return false;
        return true;
    }
  }

  // Rebuilds the formula through the canonical constructors. Boolean
  // structure only; no temporal rewriting.
  FormulaId canonicalize(FormulaId f) {
    auto it = canon_memo_.find(f);
    if (it != canon_memo_.end()) return it->second;
    const Node n = nodes_[f];
    FormulaId out = f;
    switch (n.kind) {
      case Kind::True:
      case Kind::False:
      case Kind::Atom:
        break;
      case Kind::Not:
        out = lnot(canonicalize(n.kids[0]));
        break;
      case Kind::Next:
        out = next(canonicalize(n.kids[0]));
        break;
      case Kind::Until:
        out = until(canonicalize(n.kids[0]), canonicalize(n.kids[1]));
        break;
      case Kind::Release:
        out = release(canonicalize(n.kids[0]), canonicalize(n.kids[1]));
        break;
      case Kind::And:
      case Kind::Or: {
        std::vector<FormulaId> ks;
        ks.reserve(n.kids.size());
        for (FormulaId k : n.kids) ks.push_back(canonicalize(k));
        out = n.kind == Kind::And ? conj(std::move(ks)) : disj(std::move(ks));
        break;
      }
    }
    canon_memo_.emplace(f, out);
    return out;
  }

  // Closure: the input formula, its subformulas, and X psi for every
  // Until/Release psi in the set. Sorted by id.
  std::vector<FormulaId> closure(FormulaId f) {
    std::vector<FormulaId> out;
    std::vector<FormulaId> work{f};
    std::unordered_map<FormulaId, bool> seen;
    while (!work.empty()) {
      FormulaId g = work.back();
      work.pop_back();
      if (seen.count(g)) continue;
      seen.emplace(g, true);
      out.push_back(g);
      for (FormulaId k : nodes_[g].kids) work.push_back(k);
    }
    // X psi for temporal members; the child is already present.
    std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
      Kind k = kind(out[i]);
      if (k == Kind::Until || k == Kind::Release) {
        FormulaId x = next(out[i]);
        if (!seen.count(x)) {
          seen.emplace(x, true);
          out.push_back(x);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Propositional atoms: the maximal non-boolean subformulas (atoms,
  // Next, Until, Release), treated as variables in the propositional
  // reading. Sorted by id.
  std::vector<FormulaId> prop_atoms(FormulaId f) const {
    std::vector<FormulaId> out;
    collect_prop_atoms(f, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // neXt normal form with tagged Untils: no Until/Release remains a
  // propositional atom, and each Until psi = l U r is expanded as
  //   (v(psi) & xnf(r)) | (!v(psi) & xnf(l) & X psi)
  // so v(psi) is true exactly when psi is satisfied immediately.
  // Releases expand untagged: xnf(r) & (xnf(l) | X psi).
  FormulaId to_xnf(FormulaId f) {
    auto it = xnf_memo_.find(f);
    if (it != xnf_memo_.end()) return it->second;
    const Node n = nodes_[f];
    FormulaId out = f;
    switch (n.kind) {
      case Kind::True:
      case Kind::False:
      case Kind::Atom:
      case Kind::Not:
      case Kind::Next:
        break;  // conversion stops at literals and Next
      case Kind::And:
      case Kind::Or: {
        std::vector<FormulaId> ks;
        ks.reserve(n.kids.size());
        for (FormulaId k : n.kids) ks.push_back(to_xnf(k));
        out = n.kind == Kind::And ? conj(std::move(ks)) : disj(std::move(ks));
        break;
      }
      case Kind::Until: {
        FormulaId t = tag_atom(f);
        FormulaId now = conj({t, to_xnf(n.kids[1])});
        FormulaId later = conj({lnot(t), to_xnf(n.kids[0]), next(f)});
        out = disj({now, later});
        break;
      }
      case Kind::Release: {
        out = conj({to_xnf(n.kids[1]), disj({to_xnf(n.kids[0]), next(f)})});
        break;
      }
    }
    xnf_memo_.emplace(f, out);
    return out;
  }

  // Untagged variant: each tagged disjunct pair replaced by the plain
  // expansion xnf(r) | (xnf(l) & X psi). Used to cross-check that the
  // tags do not change the meaning of the formula.
  FormulaId to_xnf_untagged(FormulaId f) {
    auto it = xnf_plain_memo_.find(f);
    if (it != xnf_plain_memo_.end()) return it->second;
    const Node n = nodes_[f];
    FormulaId out = f;
    switch (n.kind) {
      case Kind::True:
      case Kind::False:
      case Kind::Atom:
      case Kind::Not:
      case Kind::Next:
        break;
      case Kind::And:
      case Kind::Or: {
        std::vector<FormulaId> ks;
        for (FormulaId k : n.kids) ks.push_back(to_xnf_untagged(k));
        out = n.kind == Kind::And ? conj(std::move(ks)) : disj(std::move(ks));
        break;
      }
      case Kind::Until:
        out = disj({to_xnf_untagged(n.kids[1]),
                    conj({to_xnf_untagged(n.kids[0]), next(f)})});
        break;
      case Kind::Release:
        out = conj({to_xnf_untagged(n.kids[1]),
                    disj({to_xnf_untagged(n.kids[0]), next(f)})});
        break;
    }
    xnf_plain_memo_.emplace(f, out);
    return out;
  }

  // Conjunct set of a representative formula: kids of a top-level And,
  // empty for true, the formula itself otherwise.
  std::vector<FormulaId> conjuncts(FormulaId f) const {
    if (f == truth()) return {};
    if (kind(f) == Kind::And) return nodes_[f].kids;
    return {f};
  }

  // Until conjuncts, i.e. the obligations of a representative formula.
  std::vector<FormulaId> obligations(FormulaId f) const {
    std::vector<FormulaId> out;
    for (FormulaId c : conjuncts(f))
      if (kind(c) == Kind::Until) out.push_back(c);
    return out;
  }

  // Atomic propositions occurring in f (tag atoms excluded), sorted by id.
  std::vector<FormulaId> atom_props(FormulaId f) const {
    std::vector<FormulaId> out;
    std::vector<FormulaId> work{f};
    std::unordered_map<FormulaId, bool> seen;
    while (!work.empty()) {
      FormulaId g = work.back();
      work.pop_back();
      if (seen.count(g)) continue;
      seen.emplace(g, true);
      if (kind(g) == Kind::Atom) {
        if (!is_tag(g)) out.push_back(g);
        continue;
      }
      for (FormulaId k : nodes_[g].kids) work.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t node_count(FormulaId f) const {
    std::vector<FormulaId> work{f};
    std::unordered_map<FormulaId, bool> seen;
    std::size_t n = 0;
    while (!work.empty()) {
      FormulaId g = work.back();
      work.pop_back();
      if (seen.count(g)) continue;
      seen.emplace(g, true);
      ++n;
      for (FormulaId k : nodes_[g].kids) work.push_back(k);
    }
    return n;
  }

  // --- printing ----------------------------------------------------------

  // F/G are re-sugared; non-leaf children of binary connectives are
  // parenthesized, so output like "(F a) & (G !a)" re-parses exactly.
  std::string to_string(FormulaId f) const {
    std::string out;
    print(f, out);
    return out;
  }

 private:
  struct NodeKey {
    Kind kind;
    std::uint32_t atom;
    std::vector<FormulaId> kids;
    bool operator==(const NodeKey& o) const {
      return kind == o.kind && atom == o.atom && kids == o.kids;
    }
  };
  struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const {
      std::size_t h = static_cast<std::size_t>(k.kind) * 1000003u + k.atom;
      for (FormulaId f : k.kids) h = h * 1000003u + f;
      return h;
    }
  };

  FormulaId intern(Node n) {
    NodeKey key{n.kind, n.atom, n.kids};
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    FormulaId id = static_cast<FormulaId>(nodes_.size());
    nodes_.push_back(std::move(n));
    index_.emplace(std::move(key), id);
    return id;
  }

  FormulaId nary(Kind k, std::vector<FormulaId> kids) {
    const FormulaId unit = k == Kind::And ? truth() : falsity();
    const FormulaId zero = k == Kind::And ? falsity() : truth();
    std::vector<FormulaId> flat;
    flat.reserve(kids.size());
    std::vector<FormulaId> work(kids.rbegin(), kids.rend());
    while (!work.empty()) {
      FormulaId f = work.back();
      work.pop_back();
      if (f == zero) return zero;
      if (f == unit) continue;
      if (kind(f) == k) {
        const auto& ks = nodes_[f].kids;
        for (auto it = ks.rbegin(); it != ks.rend(); ++it) work.push_back(*it);
      } else {
        flat.push_back(f);
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return unit;
    if (flat.size() == 1) return flat[0];
    return intern(Node{k, 0, std::move(flat)});
  }

  FormulaId nnf(FormulaId f, bool neg) {
    std::uint64_t key = (static_cast<std::uint64_t>(f) << 1) | (neg ? 1 : 0);
    auto it = nnf_memo_.find(key);
    if (it != nnf_memo_.end()) return it->second;
    const Node n = nodes_[f];
    FormulaId out;
    switch (n.kind) {
      case Kind::True:
        out = neg ? falsity() : truth();
        break;
      case Kind::False:
        out = neg ? truth() : falsity();
        break;
      case Kind::Atom:
        out = neg ? lnot(f) : f;
        break;
      case Kind::Not:
        out = nnf(n.kids[0], !neg);
        break;
      case Kind::And:
      case Kind::Or: {
        std::vector<FormulaId> ks;
        ks.reserve(n.kids.size());
        for (FormulaId k : n.kids) ks.push_back(nnf(k, neg));
        bool make_and = (n.kind == Kind::And) != neg;
        out = make_and ? conj(std::move(ks)) : disj(std::move(ks));
        break;
      }
      case Kind::Next:
        out = next(nnf(n.kids[0], neg));
        break;
      case Kind::Until:
        out = neg ? release(nnf(n.kids[0], true), nnf(n.kids[1], true))
                  : until(nnf(n.kids[0], false), nnf(n.kids[1], false));
        break;
      case Kind::Release:
        out = neg ? until(nnf(n.kids[0], true), nnf(n.kids[1], true))
                  : release(nnf(n.kids[0], false), nnf(n.kids[1], false));
        break;
    }
    nnf_memo_.emplace(key, out);
    return out;
  }

  void collect_prop_atoms(FormulaId f, std::vector<FormulaId>& out) const {
    switch (kind(f)) {
      case Kind::True:
      case Kind::False:
        return;
      case Kind::Atom:
      case Kind::Next:
      case Kind::Until:
      case Kind::Release:
        out.push_back(f);
        return;
      case Kind::Not:
        collect_prop_atoms(nodes_[f].kids[0], out);
        return;
      case Kind::And:
      case Kind::Or:
        for (FormulaId k : nodes_[f].kids) collect_prop_atoms(k, out);
        return;
    }
  }

  bool leaf_like(FormulaId f) const {
    Kind k = kind(f);
    if (k == Kind::True || k == Kind::False || k == Kind::Atom) return true;
    if (k == Kind::Not) return kind(nodes_[f].kids[0]) == Kind::Atom;
    return false;
  }

  void print_wrapped(FormulaId f, std::string& out) const {
    if (leaf_like(f)) {
      print(f, out);
    } else {
      out += '(';
      print(f, out);
      out += ')';
    }
  }

  // unary operands: bare if leaf-like or another unary chain
  void print_unary_operand(FormulaId f, std::string& out) const {
    Kind k = kind(f);
    bool chain = k == Kind::Next || (k == Kind::Until && nodes_[f].kids[0] == truth()) ||
                 (k == Kind::Release && nodes_[f].kids[0] == falsity());
    if (leaf_like(f) || chain)
      print(f, out);
    else
      print_wrapped(f, out);
  }

  void print(FormulaId f, std::string& out) const {
    const Node& n = nodes_[f];
    switch (n.kind) {
      case Kind::True:
        out += "true";
        return;
      case Kind::False:
        out += "false";
        return;
      case Kind::Atom:
        out += atom_names_[n.atom];
        return;
      case Kind::Not:
        out += '!';
        print_wrapped(n.kids[0], out);
        return;
      case Kind::Next:
        out += "X ";
        print_unary_operand(n.kids[0], out);
        return;
      case Kind::Until:
        if (n.kids[0] == truth()) {
          out += "F ";
          print_unary_operand(n.kids[1], out);
        } else {
          print_wrapped(n.kids[0], out);
          out += " U ";
          print_wrapped(n.kids[1], out);
        }
        return;
      case Kind::Release:
        if (n.kids[0] == falsity()) {
          out += "G ";
          print_unary_operand(n.kids[1], out);
        } else {
          print_wrapped(n.kids[0], out);
          out += " R ";
          print_wrapped(n.kids[1], out);
        }
        return;
      case Kind::And:
      case Kind::Or: {
        const char* sep = n.kind == Kind::And ? " & " : " | ";
        bool first = true;
        for (FormulaId k : n.kids) {
          if (!first) out += sep;
          first = false;
          print_wrapped(k, out);
        }
        return;
      }
    }
  }

  std::vector<Node> nodes_;
  std::unordered_map<NodeKey, FormulaId, NodeKeyHash> index_;
  std::vector<std::string> atom_names_;
  std::unordered_map<std::string, FormulaId> atom_index_;
  std::unordered_map<FormulaId, FormulaId> tag_of_until_;
  std::unordered_map<FormulaId, FormulaId> until_of_tag_;
  std::unordered_map<std::uint64_t, FormulaId> nnf_memo_;
  std::unordered_map<FormulaId, FormulaId> xnf_memo_;
  std::unordered_map<FormulaId, FormulaId> xnf_plain_memo_;
  std::unordered_map<FormulaId, FormulaId> canon_memo_;
};

// --- parsing ---------------------------------------------------------------
//
// expr     ::= or_expr (('->' | '<->') expr)?          right assoc, desugared
// or_expr  ::= and_expr ('|' and_expr)*
// and_expr ::= u_expr ('&' u_expr)*
// u_expr   ::= unary (('U' | 'R') u_expr)?             right assoc
// unary    ::= ('!' | 'X' | 'F' | 'G') unary | primary
// primary  ::= atom | 'true' | 'false' | '(' expr ')'
//
// Atoms are [a-zA-Z_][a-zA-Z0-9_]*; X F G U R true false are reserved.

class Parser {
 public:
  Parser(FormulaStore& store, std::string_view text) : store_(store), text_(text) { advance(); }

  FormulaId parse() {
    FormulaId f = parse_expr();
    if (tok_ != Tok::End) fail("unexpected trailing input", {"end of input"});
    return f;
  }

 private:
  enum class Tok { End, LParen, RParen, Bang, Amp, Pipe, Arrow, DArrow, OpU, OpR, OpX, OpF, OpG, True, False, Atom };

  FormulaId parse_expr() {
    FormulaId l = parse_or();
    if (tok_ == Tok::Arrow) {
      advance();
      FormulaId r = parse_expr();
      return store_.disj({store_.lnot(l), r});
    }
    if (tok_ == Tok::DArrow) {
      advance();
      FormulaId r = parse_expr();
      return store_.conj({store_.disj({store_.lnot(l), r}), store_.disj({store_.lnot(r), l})});
    }
    return l;
  }

  FormulaId parse_or() {
    std::vector<FormulaId> ks{parse_and()};
    while (tok_ == Tok::Pipe) {
      advance();
      ks.push_back(parse_and());
    }
    return ks.size() == 1 ? ks[0] : store_.disj(std::move(ks));
  }

  FormulaId parse_and() {
    std::vector<FormulaId> ks{parse_until()};
    while (tok_ == Tok::Amp) {
      advance();
      ks.push_back(parse_until());
    }
    return ks.size() == 1 ? ks[0] : store_.conj(std::move(ks));
  }

  FormulaId parse_until() {
    FormulaId l = parse_unary();
    if (tok_ == Tok::OpU) {
      advance();
      return store_.until(l, parse_until());
    }
    if (tok_ == Tok::OpR) {
      advance();
      return store_.release(l, parse_until());
    }
    return l;
  }

  FormulaId parse_unary() {
    switch (tok_) {
      case Tok::Bang:
        advance();
        return store_.lnot(parse_unary());
      case Tok::OpX:
        advance();
        return store_.next(parse_unary());
      case Tok::OpF:
        advance();
        return store_.eventually(parse_unary());
      case Tok::OpG:
        advance();
        return store_.globally(parse_unary());
      default:
        return parse_primary();
    }
  }

  FormulaId parse_primary() {
    switch (tok_) {
      case Tok::True:
        advance();
        return store_.truth();
      case Tok::False:
        advance();
        return store_.falsity();
      case Tok::Atom: {
        FormulaId f = store_.atom(tok_text_);
        advance();
        return f;
      }
      case Tok::LParen: {
        advance();
        FormulaId f = parse_expr();
        if (tok_ != Tok::RParen) fail("expected ')'", {")"});
        advance();
        return f;
      }
      default:
        fail("expected formula", {"atom", "true", "false", "(", "!", "X", "F", "G"});
    }
    return kNoFormula;  // unreachable
  }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) {
    throw ParseError(msg + " at line " + std::to_string(tok_line_) + ", column " +
                         std::to_string(tok_col_),
                     tok_line_, tok_col_, std::move(expected));
  }

  static bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
                                   text_[pos_] == '\n')) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_line_ = line_;
    tok_col_ = col_;
    if (pos_ >= text_.size()) {
      tok_ = Tok::End;
      return;
    }
    char c = text_[pos_];
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) {
        ++pos_;
        ++col_;
      }
      tok_text_ = std::string(text_.substr(start, pos_ - start));
      if (tok_text_ == "true") tok_ = Tok::True;
      else if (tok_text_ == "false") tok_ = Tok::False;
      else if (tok_text_ == "U") tok_ = Tok::OpU;
      else if (tok_text_ == "R") tok_ = Tok::OpR;
      else if (tok_text_ == "X") tok_ = Tok::OpX;
      else if (tok_text_ == "F") tok_ = Tok::OpF;
      else if (tok_text_ == "G") tok_ = Tok::OpG;
      else tok_ = Tok::Atom;
      return;
    }
    auto two = [&](char a, char b) {
      return c == a && pos_ + 1 < text_.size() && text_[pos_ + 1] == b;
    };
    if (two('-', '>')) {
      tok_ = Tok::Arrow;
      pos_ += 2;
      col_ += 2;
      return;
    }
    if (c == '<' && pos_ + 2 < text_.size() && text_[pos_ + 1] == '-' && text_[pos_ + 2] == '>') {
      tok_ = Tok::DArrow;
      pos_ += 3;
      col_ += 3;
      return;
    }
    switch (c) {
      case '(': tok_ = Tok::LParen; break;
      case ')': tok_ = Tok::RParen; break;
      case '!': tok_ = Tok::Bang; break;
      case '&': tok_ = Tok::Amp; break;
      case '|': tok_ = Tok::Pipe; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "' at line " +
                             std::to_string(line_) + ", column " + std::to_string(col_),
                         line_, col_, {});
    }
    ++pos_;
    ++col_;
  }

  FormulaStore& store_;
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Tok tok_ = Tok::End;
  int tok_line_ = 1, tok_col_ = 1;
  std::string tok_text_;
};

inline FormulaId parse(FormulaStore& store, std::string_view text) {
  return Parser(store, text).parse();
}

}  // namespace ltlsat
