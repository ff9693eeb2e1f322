// Copyright 2026 The cqkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cqkit/signatures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "cqkit/sparql/parser.hpp"
#include "cqkit/text.hpp"

namespace cqkit {

namespace {

using namespace sparql;

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

struct Ref {
  enum Kind { Const, Var, Blank } kind = Const;
  int index = 0;
  std::string text;
};

struct Atomic {
  Ref s, p, o;
  int group = 0;
};

struct CExpr {
  enum Kind { Leaf, And, Or, Not, In, NotIn, Call, Arith, Cmp } kind = Leaf;
  std::string op;
  std::vector<CExpr> kids;
  Ref leaf;
};

struct CGroup;

struct CElem {
  enum Kind { Union, Nested, NotExists, Bind } kind = Nested;
  std::vector<int> groups;  // indices into Canon::groups
  CExpr expr;
  Ref var;
};

struct CGroup {
  std::vector<int> triples;
  std::vector<CElem> elems;
  std::vector<CExpr> filters;
};

struct BlankInfo {
  int object_count = 0;
  int object_group = -1;
  int parent_triple = -1;
  std::set<int> subject_groups;
  std::vector<int> subject_triples;
  bool labeled = false;
};

// Labels: >0 canonical number, 0 anonymous, -1 the node under inspection.
struct Labels {
  std::vector<int> vars;
  std::vector<int> blanks;
};

std::string reserved_name(const std::string& iri) {
  static const std::pair<std::string_view, const char*> spaces[] = {
      {kRdfNs, "rdf:"}, {kRdfsNs, "rdfs:"}, {kOwlNs, "owl:"}, {kXsdNs, "xsd:"}};
  for (const auto& [ns, pfx] : spaces)
    if (iri.size() > ns.size() && iri.compare(0, ns.size(), ns) == 0)
      return pfx + iri.substr(ns.size());
  return "";
}

class Canon {
 public:
  Canon(const QueryAst& ast) : prefixes_(ast.prefix_table) {
    groups_.emplace_back();
    build_group(std::get<Group>(ast.where.node), 0);
    classify_blanks();
  }

  std::size_t var_count() const { return var_names_.size(); }
  std::vector<int> labeled_blanks() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < blanks_.size(); ++i)
      if (blanks_[i].labeled) out.push_back(static_cast<int>(i));
    return out;
  }
  std::size_t blank_count() const { return blanks_.size(); }

  std::string render(const Labels& labels) const { return render_group(0, labels); }

 private:
  // ---- construction ------------------------------------------------------

  std::string iri_text(const Term& t) const {
    if (std::holds_alternative<KeywordA>(t)) return "a";
    auto iri = resolve_iri(t, prefixes_);
    if (!iri) return ":URI";
    if (*iri == std::string(kRdfNs) + "type") return "a";
    std::string r = reserved_name(*iri);
    return r.empty() ? ":URI" : r;
  }

  std::string literal_text(const Literal& l) const {
    if (l.language) return ":LIT@" + text::to_lower(*l.language);
    if (!l.datatype) return ":LIT^^xsd:string";
    Term dt = std::visit([](const auto& v) -> Term { return v; }, *l.datatype);
    std::string r = iri_text(dt);
    return ":LIT^^" + (r == "a" ? std::string("rdf:type") : r);
  }

  int var_index(const std::string& name) {
    auto it = std::find(var_names_.begin(), var_names_.end(), name);
    if (it != var_names_.end()) return static_cast<int>(it - var_names_.begin());
    var_names_.push_back(name);
    return static_cast<int>(var_names_.size() - 1);
  }

  int fresh_blank() {
    blanks_.emplace_back();
    return static_cast<int>(blanks_.size() - 1);
  }

  int labeled_blank(const std::string& label) {
    auto it = blank_labels_.find(label);
    if (it != blank_labels_.end()) return it->second;
    int b = fresh_blank();
    blank_labels_[label] = b;
    return b;
  }

  Ref term_ref(const Term& t) {
    return std::visit(Overload{
                          [&](const Variable& v) {
                            if (v.marker == VarMarker::Placeholder) return Ref{Ref::Const, 0, ":URI"};
                            return Ref{Ref::Var, var_index(v.name), ""};
                          },
                          [&](const BlankLabel& b) { return Ref{Ref::Blank, labeled_blank(b.label), ""}; },
                          [&](const AnonBlank&) { return Ref{Ref::Blank, fresh_blank(), ""}; },
                          [&](const Literal& l) { return Ref{Ref::Const, 0, literal_text(l)}; },
                          [&](const auto&) { return Ref{Ref::Const, 0, iri_text(t)}; },
                      },
                      t);
  }

  std::string path_text(const PropertyPath& p) const {
    return std::visit(
        Overload{
            [&](const PathAtom& a) {
              if (auto* v = std::get_if<Variable>(&a.term))
                return v->marker == VarMarker::Placeholder ? std::string(":URI") : "?" + v->name;
              return iri_text(a.term);
            },
            [&](const PathSequence& s) {
              std::string out;
              for (std::size_t i = 0; i < s.steps.size(); ++i)
                out += (i ? "/" : "") + path_text(s.steps[i]);
              return out;
            },
            [&](const PathAlternative& a) {
              std::vector<std::string> parts;
              for (const auto& o : a.options) parts.push_back(path_text(o));
              std::sort(parts.begin(), parts.end());
              return text::join(parts, "|");
            },
            [&](const PathZeroOrMore& z) { return path_text(*z.inner) + "*"; },
            [&](const PathOneOrMore& z) { return path_text(*z.inner) + "+"; },
            [&](const PathZeroOrOne& z) { return path_text(*z.inner) + "?"; },
            [&](const PathInverse& z) { return "^" + path_text(*z.inner); },
            [&](const PathGroup& z) { return "(" + path_text(*z.inner) + ")"; },
        },
        p.node);
  }

  Ref predicate_ref(const PropertyPath& p) {
    if (const Term* t = p.atom()) return term_ref(*t);
    return Ref{Ref::Const, 0, path_text(p)};
  }

  void add_triple(Ref s, Ref p, Ref o, int g) {
    int idx = static_cast<int>(atomics_.size());
    atomics_.push_back({s, p, o, g});
    groups_[g].triples.push_back(idx);
  }

  Ref node_ref(const Node& n, int g) {
    return std::visit(Overload{
                          [&](const Term& t) { return term_ref(t); },
                          [&](const Box<BlankPropertyList>& b) {
                            Ref self{Ref::Blank, fresh_blank(), ""};
                            add_entries(self, b->entries, g);
                            return self;
                          },
                          [&](const Box<Collection>& c) {
                            if (c->items.empty()) return Ref{Ref::Const, 0, "rdf:nil"};
                            Ref head{Ref::Blank, fresh_blank(), ""};
                            Ref cur = head;
                            for (std::size_t i = 0; i < c->items.size(); ++i) {
                              Ref item = node_ref(c->items[i], g);
                              add_triple(cur, Ref{Ref::Const, 0, "rdf:first"}, item, g);
                              Ref next = i + 1 < c->items.size() ? Ref{Ref::Blank, fresh_blank(), ""}
                                                                 : Ref{Ref::Const, 0, "rdf:nil"};
                              add_triple(cur, Ref{Ref::Const, 0, "rdf:rest"}, next, g);
                              cur = next;
                            }
                            return head;
                          },
                      },
                      n);
  }

  void add_entries(const Ref& subject, const std::vector<PredicateObjects>& entries, int g) {
    for (const auto& po : entries) {
      Ref p = predicate_ref(po.verb);
      for (const auto& o : po.objects) add_triple(subject, p, node_ref(o, g), g);
    }
  }

  CExpr expr(const Expr& e) {
    return std::visit(
        Overload{
            [&](const Compare& c) {
              CExpr out{CExpr::Cmp, "", {}, {}};
              CExpr l = expr(*c.lhs), r = expr(*c.rhs);
              switch (c.op) {
                case CompareOp::Eq: out.op = "="; break;
                case CompareOp::Ne: out.op = "!="; break;
                case CompareOp::Lt: out.op = "<"; break;
                case CompareOp::Le: out.op = "<="; break;
                case CompareOp::Gt: out.op = "<"; std::swap(l, r); break;
                case CompareOp::Ge: out.op = "<="; std::swap(l, r); break;
              }
              out.kids = {std::move(l), std::move(r)};
              return out;
            },
            [&](const And& a) { return flatten(CExpr::And, a.operands); },
            [&](const Or& o) { return flatten(CExpr::Or, o.operands); },
            [&](const Not& n) { return CExpr{CExpr::Not, "!", {expr(*n.operand)}, {}}; },
            [&](const In& in) {
              CExpr out{in.negated ? CExpr::NotIn : CExpr::In, "", {expr(*in.subject)}, {}};
              for (const auto& item : in.items) out.kids.push_back(expr(item));
              return out;
            },
            [&](const FnCall& f) {
              CExpr out{CExpr::Call, "", {}, {}};
              if (auto* name = std::get_if<std::string>(&f.callee))
                out.op = *name;
              else
                out.op = iri_text(std::get<Term>(f.callee));
              for (const auto& a : f.args) out.kids.push_back(expr(a));
              return out;
            },
            [&](const sparql::Arith& a) {
              return CExpr{CExpr::Arith, std::string(1, a.op), {expr(*a.lhs), expr(*a.rhs)}, {}};
            },
            [&](const TermRef& t) { return CExpr{CExpr::Leaf, "", {}, term_ref(t.term)}; },
            [&](const Paren& p) { return expr(*p.inner); },
        },
        e.node);
  }

  CExpr flatten(CExpr::Kind kind, const std::vector<Expr>& operands) {
    CExpr out{kind, "", {}, {}};
    for (const auto& op : operands) {
      CExpr k = expr(op);
      if (k.kind == kind) {
        for (auto& kk : k.kids) out.kids.push_back(std::move(kk));
      } else {
        out.kids.push_back(std::move(k));
      }
    }
    return out;
  }

  int new_group() {
    groups_.emplace_back();
    return static_cast<int>(groups_.size() - 1);
  }

  void build_group(const Group& grp, int g) {
    for (const auto& el : grp.elements) {
      std::visit(Overload{
                     [&](const Bgp& bgp) {
                       for (const auto& t : bgp.triples) {
                         Ref s = node_ref(t.subject, g);
                         add_entries(s, t.predicates, g);
                       }
                     },
                     [&](const Group& inner) {
                       int child = new_group();
                       build_group(inner, child);
                       groups_[g].elems.push_back(CElem{CElem::Nested, {child}, {}, {}});
                     },
                     [&](const Union&) {
                       CElem u{CElem::Union, {}, {}, {}};
                       collect_union(el, u);
                       groups_[g].elems.push_back(std::move(u));
                     },
                     [&](const NotExists& n) {
                       int child = new_group();
                       build_group(std::get<Group>(n.group->node), child);
                       groups_[g].elems.push_back(CElem{CElem::NotExists, {child}, {}, {}});
                     },
                     [&](const Filter& f) { groups_[g].filters.push_back(expr(f.expr)); },
                     [&](const Bind& b) {
                       CElem e{CElem::Bind, {}, expr(b.expr), {}};
                       e.var = term_ref(b.var);
                       groups_[g].elems.push_back(std::move(e));
                     },
                 },
                 el.node);
    }
  }

  void collect_union(const GraphPattern& p, CElem& out) {
    if (auto* u = std::get_if<Union>(&p.node)) {
      collect_union(*u->left, out);
      collect_union(*u->right, out);
      return;
    }
    int child = new_group();
    if (auto* grp = std::get_if<Group>(&p.node))
      build_group(*grp, child);
    else
      build_group(Group{{p}}, child);
    out.groups.push_back(child);
  }

  void classify_blanks() {
    for (std::size_t t = 0; t < atomics_.size(); ++t) {
      const Atomic& a = atomics_[t];
      if (a.s.kind == Ref::Blank) {
        blanks_[a.s.index].subject_groups.insert(a.group);
        blanks_[a.s.index].subject_triples.push_back(static_cast<int>(t));
      }
      if (a.p.kind == Ref::Blank) blanks_[a.p.index].labeled = true;
      if (a.o.kind == Ref::Blank) {
        auto& info = blanks_[a.o.index];
        ++info.object_count;
        info.object_group = a.group;
        info.parent_triple = static_cast<int>(t);
      }
    }
    for (auto& b : blanks_) {
      if (b.object_count >= 2 || b.subject_groups.size() > 1) b.labeled = true;
      if (b.object_count == 1 && !b.subject_groups.empty() &&
          *b.subject_groups.begin() != b.object_group)
        b.labeled = true;
    }
    mark_expr_blanks();
    // Inline chains that loop back on themselves need a label.
    for (std::size_t i = 0; i < blanks_.size(); ++i) {
      std::set<int> seen;
      int cur = static_cast<int>(i);
      while (!blanks_[cur].labeled && blanks_[cur].object_count == 1) {
        if (!seen.insert(cur).second) {
          for (int b : seen) blanks_[b].labeled = true;
          break;
        }
        const Atomic& parent = atomics_[blanks_[cur].parent_triple];
        if (parent.s.kind != Ref::Blank) break;
        cur = parent.s.index;
      }
    }
  }

  void mark_expr_blanks() {
    std::function<void(const CExpr&)> walk = [&](const CExpr& e) {
      if (e.kind == CExpr::Leaf && e.leaf.kind == Ref::Blank) blanks_[e.leaf.index].labeled = true;
      for (const auto& k : e.kids) walk(k);
    };
    for (const auto& g : groups_) {
      for (const auto& f : g.filters) walk(f);
      for (const auto& e : g.elems)
        if (e.kind == CElem::Bind) walk(e.expr);
    }
  }

  // ---- rendering ---------------------------------------------------------

  std::string ref_text(const Ref& r, const Labels& l) const {
    switch (r.kind) {
      case Ref::Const:
        return r.text;
      case Ref::Var: {
        int n = l.vars[r.index];
        return n > 0 ? "?v" + std::to_string(n) : n == 0 ? "?" : "?*";
      }
      case Ref::Blank: {
        const BlankInfo& b = blanks_[r.index];
        if (!b.labeled) return inline_blank(r.index, l);
        int n = l.blanks[r.index];
        return n > 0 ? "_:b" + std::to_string(n) : n == 0 ? "_:" : "_:*";
      }
    }
    return "";
  }

  std::string inline_blank(int b, const Labels& l) const {
    std::vector<std::string> entries;
    for (int t : blanks_[b].subject_triples)
      entries.push_back(ref_text(atomics_[t].p, l) + " " + ref_text(atomics_[t].o, l));
    if (entries.empty()) return "[ ]";
    std::sort(entries.begin(), entries.end());
    return "[ " + text::join(entries, " ; ") + " ]";
  }

  std::string expr_text(const CExpr& e, const Labels& l) const {
    auto wrapped = [&](const CExpr& k) {
      std::string s = expr_text(k, l);
      bool simple = k.kind == CExpr::Leaf || k.kind == CExpr::Call || k.kind == CExpr::Not;
      return simple ? s : "(" + s + ")";
    };
    switch (e.kind) {
      case CExpr::Leaf:
        return ref_text(e.leaf, l);
      case CExpr::And:
      case CExpr::Or: {
        std::vector<std::string> parts;
        for (const auto& k : e.kids) {
          bool bare = k.kind == CExpr::Cmp || k.kind == CExpr::In || k.kind == CExpr::NotIn ||
                      (e.kind == CExpr::Or && k.kind == CExpr::And);
          parts.push_back(bare ? expr_text(k, l) : wrapped(k));
        }
        std::sort(parts.begin(), parts.end());
        return text::join(parts, e.kind == CExpr::And ? " && " : " || ");
      }
      case CExpr::Not:
        return "!" + wrapped(e.kids[0]);
      case CExpr::In:
      case CExpr::NotIn: {
        std::vector<std::string> items;
        for (std::size_t i = 1; i < e.kids.size(); ++i) items.push_back(expr_text(e.kids[i], l));
        std::sort(items.begin(), items.end());
        return wrapped(e.kids[0]) + (e.kind == CExpr::In ? " IN (" : " NOT IN (") +
               text::join(items, ", ") + ")";
      }
      case CExpr::Call: {
        std::vector<std::string> args;
        for (const auto& k : e.kids) args.push_back(expr_text(k, l));
        return e.op + "(" + text::join(args, ", ") + ")";
      }
      case CExpr::Arith: {
        auto side = [&](const CExpr& k) {
          return k.kind == CExpr::Arith && (e.op == "*" || e.op == "/") == (k.op == "*" || k.op == "/")
                     ? expr_text(k, l)
                     : wrapped(k);
        };
        return side(e.kids[0]) + " " + e.op + " " + wrapped(e.kids[1]);
      }
      case CExpr::Cmp: {
        std::string a = wrapped_operand(e.kids[0], l), b = wrapped_operand(e.kids[1], l);
        if ((e.op == "=" || e.op == "!=") && b < a) std::swap(a, b);
        return a + " " + e.op + " " + b;
      }
    }
    return "";
  }

  std::string wrapped_operand(const CExpr& k, const Labels& l) const {
    std::string s = expr_text(k, l);
    bool simple = k.kind == CExpr::Leaf || k.kind == CExpr::Call || k.kind == CExpr::Not ||
                  k.kind == CExpr::Arith;
    return simple ? s : "(" + s + ")";
  }

  std::string render_group(int g, const Labels& l) const {
    const CGroup& grp = groups_[g];
    std::vector<std::string> triples, elems, filters;
    std::set<int> roots;
    for (int t : grp.triples) {
      const Atomic& a = atomics_[t];
      if (a.s.kind == Ref::Blank && !blanks_[a.s.index].labeled) {
        if (blanks_[a.s.index].object_count == 0) roots.insert(a.s.index);
        continue;
      }
      triples.push_back(ref_text(a.s, l) + " " + ref_text(a.p, l) + " " + ref_text(a.o, l));
    }
    for (int b : roots) triples.push_back(inline_blank(b, l));
    std::sort(triples.begin(), triples.end());
    for (const auto& e : grp.elems) {
      switch (e.kind) {
        case CElem::Nested:
          elems.push_back(render_group(e.groups[0], l));
          break;
        case CElem::NotExists:
          elems.push_back("FILTER NOT EXISTS " + render_group(e.groups[0], l));
          break;
        case CElem::Union: {
          std::vector<std::string> branches;
          for (int child : e.groups) branches.push_back(render_group(child, l));
          std::sort(branches.begin(), branches.end());
          elems.push_back(text::join(branches, " UNION "));
          break;
        }
        case CElem::Bind:
          elems.push_back("BIND(" + expr_text(e.expr, l) + " AS " + ref_text(e.var, l) + ")");
          break;
      }
    }
    std::sort(elems.begin(), elems.end());
    for (const auto& f : grp.filters) filters.push_back("FILTER(" + expr_text(f, l) + ")");
    std::sort(filters.begin(), filters.end());

    std::vector<std::string> all = triples;
    all.insert(all.end(), elems.begin(), elems.end());
    all.insert(all.end(), filters.begin(), filters.end());
    if (all.empty()) return "{ }";
    return "{ " + text::join(all, " . ") + " }";
  }

  const PrefixTable& prefixes_;
  std::vector<CGroup> groups_;
  std::vector<Atomic> atomics_;
  std::vector<BlankInfo> blanks_;
  std::vector<std::string> var_names_;
  std::map<std::string, int> blank_labels_;
};

std::size_t factorial_capped(std::size_t n, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return cap + 1;
  }
  return f;
}

// Tries every assignment of labels 1..k to each class of `vars` and
// `blanks`, where classes are runs of nodes that must take consecutive
// labels. Returns the minimal rendering.
std::string search(const Canon& canon, const std::vector<std::vector<int>>& var_classes,
                   const std::vector<std::vector<int>>& blank_classes) {
  Labels labels;
  labels.vars.assign(canon.var_count(), 0);
  labels.blanks.assign(canon.blank_count(), 0);

  struct Slot {
    bool is_var;
    std::vector<int> nodes;  // permuted in place
    int first_label;
  };
  std::vector<Slot> slots;
  int next = 1;
  for (const auto& c : var_classes) {
    slots.push_back({true, c, next});
    next += static_cast<int>(c.size());
  }
  next = 1;
  for (const auto& c : blank_classes) {
    slots.push_back({false, c, next});
    next += static_cast<int>(c.size());
  }
  for (auto& s : slots) std::sort(s.nodes.begin(), s.nodes.end());

  std::optional<std::string> best;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == slots.size()) {
      std::string r = canon.render(labels);
      if (!best || r < *best) best = std::move(r);
      return;
    }
    Slot& s = slots[i];
    do {
      for (std::size_t k = 0; k < s.nodes.size(); ++k) {
        auto& target = s.is_var ? labels.vars : labels.blanks;
        target[s.nodes[k]] = s.first_label + static_cast<int>(k);
      }
      rec(i + 1);
    } while (std::next_permutation(s.nodes.begin(), s.nodes.end()));
  };
  rec(0);
  return *best;
}

// Splits nodes into classes by an isomorphism-invariant context: the
// rendering with every label hidden except the node itself.
std::vector<std::vector<int>> refine(const Canon& canon, const std::vector<int>& nodes, bool is_var) {
  std::map<std::string, std::vector<int>> by_context;
  Labels l;
  l.vars.assign(canon.var_count(), 0);
  l.blanks.assign(canon.blank_count(), 0);
  for (int n : nodes) {
    auto& target = is_var ? l.vars : l.blanks;
    target[n] = -1;
    by_context[canon.render(l)].push_back(n);
    target[n] = 0;
  }
  std::vector<std::vector<int>> out;
  for (auto& [ctx, members] : by_context) out.push_back(std::move(members));
  return out;
}

std::size_t space_size(const std::vector<std::vector<int>>& classes, std::size_t cap) {
  std::size_t total = 1;
  for (const auto& c : classes) {
    total *= factorial_capped(c.size(), cap);
    if (total > cap) return cap + 1;
  }
  return total;
}

}  // namespace

Signature canonicalize(const QueryAst& ast, const CanonicalizeOptions& options) {
  std::size_t triples = count_atomic_triples(ast.where);
  if (triples > options.max_triples)
    throw SignatureError("query has " + std::to_string(triples) + " triples, above the bound of " +
                         std::to_string(options.max_triples));

  Canon canon(ast);
  std::vector<int> vars(canon.var_count());
  std::iota(vars.begin(), vars.end(), 0);
  std::vector<int> blanks = canon.labeled_blanks();

  Signature sig;
  sig.verb = ast.verb;
  sig.distinct = ast.distinct;
  sig.star = ast.star;

  std::vector<std::vector<int>> var_classes{vars}, blank_classes{blanks};
  if (vars.empty()) var_classes.clear();
  if (blanks.empty()) blank_classes.clear();
  std::size_t cap = options.max_labelings;
  std::size_t full = space_size(var_classes, cap);
  full = full > cap ? cap + 1 : full * space_size(blank_classes, cap);
  if (full > cap) {
    sig.exact = false;
    var_classes = refine(canon, vars, true);
    blank_classes = refine(canon, blanks, false);
    std::size_t reduced = space_size(var_classes, cap);
    reduced = reduced > cap ? cap + 1 : reduced * space_size(blank_classes, cap);
    if (reduced > cap) {
      // Fix an order inside oversized classes; ties then fall back to
      // first-occurrence order.
      auto split = [](std::vector<std::vector<int>>& classes) {
        std::vector<std::vector<int>> out;
        for (auto& c : classes)
          for (int n : c) out.push_back({n});
        classes = std::move(out);
      };
      split(var_classes);
      split(blank_classes);
    }
  }
  sig.where_skeleton = search(canon, var_classes, blank_classes);

  std::string header = ast.verb == QueryVerb::Ask ? "ASK" : "SELECT";
  if (ast.distinct) header += " DISTINCT";
  if (ast.verb == QueryVerb::Select) header += ast.star ? " *" : " ...";
  sig.skeleton = header + " WHERE " + sig.where_skeleton;
  return sig;
}

std::string SignatureInventory::group_of(const std::string& query_id) const {
  for (const auto& g : groups)
    for (const auto& m : g.signature.member_query_ids)
      if (m == query_id) return g.id;
  return "";
}

double SignatureInventory::top_coverage(std::size_t k) const {
  if (groups.empty() || k == 0) return 0;
  return groups[std::min(k, groups.size()) - 1].cumulative_percent;
}

SignatureInventory group_by_signature(const std::vector<ParsedQuery>& parsed,
                                      const CanonicalizeOptions& options) {
  SignatureInventory inv;
  std::map<std::string, SignatureGroup> by_skeleton;
  for (const auto& p : parsed) {
    if (!p.ast) continue;
    Signature sig;
    try {
      sig = canonicalize(*p.ast, options);
    } catch (const SignatureError& e) {
      inv.skipped.push_back({p.id, e.what()});
      continue;
    }
    auto& g = by_skeleton[sig.skeleton];
    if (g.count == 0) {
      g.signature = sig;
      g.signature.member_query_ids.clear();
    }
    g.signature.exact = g.signature.exact && sig.exact;
    g.signature.member_query_ids.push_back(p.id);
    ++g.count;
    ++inv.total;
  }
  for (auto& [skeleton, g] : by_skeleton) inv.groups.push_back(std::move(g));
  std::stable_sort(inv.groups.begin(), inv.groups.end(),
                   [](const SignatureGroup& a, const SignatureGroup& b) { return a.count > b.count; });
  std::size_t running = 0;
  for (std::size_t i = 0; i < inv.groups.size(); ++i) {
    inv.groups[i].id = "S" + std::to_string(i + 1);
    running += inv.groups[i].count;
    inv.groups[i].cumulative_percent = 100.0 * static_cast<double>(running) / static_cast<double>(inv.total);
  }
  return inv;
}

}  // namespace cqkit
