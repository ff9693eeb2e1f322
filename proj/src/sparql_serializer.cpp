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

#include <string>

#include "cqkit/sparql/parser.hpp"

namespace cqkit::sparql {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string datatype_text(const std::variant<Iri, PrefixedName>& dt) {
  if (auto* iri = std::get_if<Iri>(&dt)) return "<" + iri->value + ">";
  const auto& pn = std::get<PrefixedName>(dt);
  return pn.prefix + ":" + pn.local;
}

std::string node_text(const Node& node);

std::string property_list_text(const std::vector<PredicateObjects>& entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += " ; ";
    out += serialize_path(entries[i].verb);
    for (std::size_t j = 0; j < entries[i].objects.size(); ++j) {
      out += j ? " , " : " ";
      out += node_text(entries[i].objects[j]);
    }
  }
  return out;
}

std::string node_text(const Node& node) {
  return std::visit(Overload{
                        [](const Term& t) { return serialize_term(t); },
                        [](const Box<BlankPropertyList>& b) {
                          return "[ " + property_list_text(b->entries) + " ]";
                        },
                        [](const Box<Collection>& c) {
                          std::string out = "(";
                          for (const auto& item : c->items) out += " " + node_text(item);
                          return out + " )";
                        },
                    },
                    node);
}

std::string triple_text(const TriplePattern& t) {
  std::string out = node_text(t.subject);
  if (!t.predicates.empty()) out += " " + property_list_text(t.predicates);
  return out + " .";
}

int precedence(const Expr& e) {
  return std::visit(Overload{
                        [](const Or&) { return 1; },
                        [](const And&) { return 2; },
                        [](const Compare&) { return 3; },
                        [](const In&) { return 3; },
                        [](const Arith& a) { return a.op == '+' || a.op == '-' ? 4 : 5; },
                        [](const Not&) { return 6; },
                        [](const auto&) { return 7; },
                    },
                    e.node);
}

std::string operand(const Expr& e, int min_prec) {
  std::string s = serialize_expr(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

const char* op_text(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return "=";
    case CompareOp::Ne: return "!=";
    case CompareOp::Lt: return "<";
    case CompareOp::Gt: return ">";
    case CompareOp::Le: return "<=";
    case CompareOp::Ge: return ">=";
  }
  return "=";
}

void write_group(const Group& g, int indent, std::string& out);

void write_element(const GraphPattern& p, int indent, std::string& out) {
  std::string pad(indent * 2, ' ');
  std::visit(Overload{
                 [&](const Bgp& bgp) {
                   for (const auto& t : bgp.triples) out += pad + triple_text(t) + "\n";
                 },
                 [&](const Group& g) {
                   out += pad;
                   write_group(g, indent, out);
                   out += "\n";
                 },
                 [&](const Filter& f) {
                   if (std::holds_alternative<FnCall>(f.expr.node))
                     out += pad + "FILTER " + serialize_expr(f.expr) + "\n";
                   else
                     out += pad + "FILTER (" + serialize_expr(f.expr) + ")\n";
                 },
                 [&](const Union& u) {
                   std::vector<const GraphPattern*> branches;
                   const GraphPattern* cur = &p;
                   while (auto* un = std::get_if<Union>(&cur->node)) {
                     branches.insert(branches.begin(), &*un->right);
                     cur = &*un->left;
                   }
                   branches.insert(branches.begin(), cur);
                   out += pad;
                   for (std::size_t i = 0; i < branches.size(); ++i) {
                     if (i) out += " UNION ";
                     write_group(std::get<Group>(branches[i]->node), indent, out);
                   }
                   out += "\n";
                   (void)u;
                 },
                 [&](const NotExists& n) {
                   out += pad + "FILTER NOT EXISTS ";
                   write_group(std::get<Group>(n.group->node), indent, out);
                   out += "\n";
                 },
                 [&](const Bind& b) {
                   out += pad + "BIND (" + serialize_expr(b.expr) + " AS " +
                          serialize_term(b.var) + ")\n";
                 },
             },
             p.node);
}

bool empty_group(const Group& g) {
  if (g.elements.empty()) return true;
  if (g.elements.size() != 1) return false;
  auto* bgp = std::get_if<Bgp>(&g.elements[0].node);
  return bgp && bgp->triples.empty();
}

void write_group(const Group& g, int indent, std::string& out) {
  if (empty_group(g)) {
    out += "{ }";
    return;
  }
  out += "{\n";
  for (const auto& e : g.elements) write_element(e, indent + 1, out);
  out += std::string(indent * 2, ' ') + "}";
}

std::size_t count_node(const Node& node);

std::size_t count_entries(const std::vector<PredicateObjects>& entries) {
  std::size_t n = 0;
  for (const auto& po : entries)
    for (const auto& o : po.objects) n += 1 + count_node(o);
  return n;
}

std::size_t count_node(const Node& node) {
  if (auto* b = std::get_if<Box<BlankPropertyList>>(&node)) return count_entries((*b)->entries);
  if (auto* c = std::get_if<Box<Collection>>(&node)) {
    std::size_t n = 0;
    for (const auto& item : (*c)->items) n += 2 + count_node(item);
    return n;
  }
  return 0;
}

}  // namespace

std::string serialize_term(const Term& term) {
  return std::visit(Overload{
                        [](const Iri& i) { return "<" + i.value + ">"; },
                        [](const PrefixedName& p) { return p.prefix + ":" + p.local; },
                        [](const BlankLabel& b) { return "_:" + b.label; },
                        [](const AnonBlank&) { return std::string("[]"); },
                        [](const Variable& v) {
                          return (v.marker == VarMarker::Placeholder ? "$" : "?") + v.name;
                        },
                        [](const Literal& l) {
                          if (l.bare) return l.lexical;
                          std::string out = quote(l.lexical);
                          if (l.language) out += "@" + *l.language;
                          if (l.datatype) out += "^^" + datatype_text(*l.datatype);
                          return out;
                        },
                        [](const KeywordA&) { return std::string("a"); },
                    },
                    term);
}

std::string serialize_path(const PropertyPath& path) {
  return std::visit(Overload{
                        [](const PathAtom& a) { return serialize_term(a.term); },
                        [](const PathSequence& s) {
                          std::string out;
                          for (std::size_t i = 0; i < s.steps.size(); ++i)
                            out += (i ? "/" : "") + serialize_path(s.steps[i]);
                          return out;
                        },
                        [](const PathAlternative& a) {
                          std::string out;
                          for (std::size_t i = 0; i < a.options.size(); ++i)
                            out += (i ? " | " : "") + serialize_path(a.options[i]);
                          return out;
                        },
                        [](const PathZeroOrMore& p) { return serialize_path(*p.inner) + "*"; },
                        [](const PathOneOrMore& p) { return serialize_path(*p.inner) + "+"; },
                        [](const PathZeroOrOne& p) { return serialize_path(*p.inner) + "?"; },
                        [](const PathInverse& p) { return "^" + serialize_path(*p.inner); },
                        [](const PathGroup& p) { return "(" + serialize_path(*p.inner) + ")"; },
                    },
                    path.node);
}

std::string serialize_expr(const Expr& expr) {
  return std::visit(
      Overload{
          [](const Compare& c) {
            return operand(*c.lhs, 4) + " " + op_text(c.op) + " " + operand(*c.rhs, 4);
          },
          [](const And& a) {
            std::string out;
            for (std::size_t i = 0; i < a.operands.size(); ++i)
              out += (i ? " && " : "") + operand(a.operands[i], 3);
            return out;
          },
          [](const Or& o) {
            std::string out;
            for (std::size_t i = 0; i < o.operands.size(); ++i)
              out += (i ? " || " : "") + operand(o.operands[i], 2);
            return out;
          },
          [](const Not& n) { return "!" + operand(*n.operand, 6); },
          [](const In& in) {
            std::string out = operand(*in.subject, 4) + (in.negated ? " NOT IN (" : " IN (");
            for (std::size_t i = 0; i < in.items.size(); ++i)
              out += (i ? ", " : "") + serialize_expr(in.items[i]);
            return out + ")";
          },
          [](const FnCall& f) {
            std::string out = std::holds_alternative<std::string>(f.callee)
                                  ? std::get<std::string>(f.callee)
                                  : serialize_term(std::get<Term>(f.callee));
            out += "(";
            for (std::size_t i = 0; i < f.args.size(); ++i)
              out += (i ? ", " : "") + serialize_expr(f.args[i]);
            return out + ")";
          },
          [](const Arith& a) {
            int p = a.op == '+' || a.op == '-' ? 4 : 5;
            return operand(*a.lhs, p) + " " + a.op + " " + operand(*a.rhs, p + 1);
          },
          [](const TermRef& t) { return serialize_term(t.term); },
          [](const Paren& p) { return "(" + serialize_expr(*p.inner) + ")"; },
      },
      expr.node);
}

std::string serialize_query(const QueryAst& ast) {
  std::string out;
  for (const auto& [prefix, iri] : ast.declared_prefixes)
    out += "PREFIX " + prefix + ": <" + iri + ">\n";
  if (ast.verb == QueryVerb::Ask) {
    out += "ASK";
  } else {
    out += "SELECT";
    if (ast.distinct) out += " DISTINCT";
    if (ast.star) out += " *";
    for (const auto& v : ast.projection) out += " " + serialize_term(v);
  }
  out += " WHERE ";
  write_group(std::get<Group>(ast.where.node), 0, out);
  out += "\n";
  return out;
}

std::size_t count_atomic_triples(const GraphPattern& pattern) {
  return std::visit(Overload{
                        [](const Bgp& bgp) {
                          std::size_t n = 0;
                          for (const auto& t : bgp.triples)
                            n += count_node(t.subject) + count_entries(t.predicates);
                          return n;
                        },
                        [](const Group& g) {
                          std::size_t n = 0;
                          for (const auto& e : g.elements) n += count_atomic_triples(e);
                          return n;
                        },
                        [](const Union& u) {
                          return count_atomic_triples(*u.left) + count_atomic_triples(*u.right);
                        },
                        [](const NotExists& n) { return count_atomic_triples(*n.group); },
                        [](const auto&) { return std::size_t{0}; },
                    },
                    pattern.node);
}

}  // namespace cqkit::sparql
