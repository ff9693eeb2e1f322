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

#include "cqkit/correspondence.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "cqkit/sparql/keywords.hpp"
#include "cqkit/sparql/parser.hpp"
#include "cqkit/text.hpp"
#include "json.hpp"

namespace cqkit {

Mapping build_mapping(const std::vector<Pattern>& patterns, const SignatureInventory& inventory) {
  Mapping m;
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < inventory.groups.size(); ++i) rank[inventory.groups[i].id] = i;

  std::map<std::string, std::set<std::string>> patterns_of_signature;
  for (const auto& p : patterns) {
    std::map<std::size_t, MappingEdge> by_rank;
    for (const auto& id : p.support) {
      std::string sig = inventory.group_of(id);
      if (sig.empty()) continue;
      auto& e = by_rank[rank[sig]];
      e.pattern_text = p.text;
      e.pattern_level = p.level;
      e.signature_id = sig;
      e.witness_cq_ids.push_back(id);
    }
    if (by_rank.empty()) continue;
    ++m.summary.patterns;
    m.summary.pattern_degree_histogram[by_rank.size()]++;
    if (by_rank.size() >= 2) ++m.summary.patterns_with_multiple_signatures;
    for (auto& [r, e] : by_rank) {
      patterns_of_signature[e.signature_id].insert(p.text);
      m.edges.push_back(std::move(e));
    }
  }
  m.summary.edges = m.edges.size();
  m.summary.signatures = patterns_of_signature.size();
  for (const auto& [sig, ps] : patterns_of_signature) {
    m.summary.signature_degree_histogram[ps.size()]++;
    if (ps.size() >= 2) ++m.summary.signatures_with_multiple_patterns;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Matching

std::vector<std::string> signal_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(text::to_lower(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      flush();
    } else if (c == '?' || c == ',' || c == ';' || c == ':' || c == '!' || c == '(' ||
               c == ')' || c == '"' || (c == '.' && (i + 1 >= text.size() ||
                                                     std::isspace(static_cast<unsigned char>(text[i + 1]))))) {
      flush();
      if (c != '"') out.push_back(std::string(1, static_cast<char>(c)));
    } else {
      cur += static_cast<char>(c);
    }
  }
  flush();
  return out;
}

namespace {

bool is_slot(const std::string& t, char kind) {
  if (t.size() < 3 || std::tolower(static_cast<unsigned char>(t[0])) != std::tolower(kind) ||
      std::tolower(static_cast<unsigned char>(t[1])) != 'c')
    return false;
  return std::all_of(t.begin() + 2, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_number_token(const std::string& t) {
  static const std::set<std::string> words = {"num", "number", "one", "two", "three", "four",
                                              "five", "six", "seven", "eight", "nine", "ten"};
  if (words.count(t)) return true;
  return !t.empty() && std::isdigit(static_cast<unsigned char>(t[0]));
}

struct Element {
  enum Kind { Literal, Wildcard, Ec, Pc, Num } kind = Literal;
  std::vector<std::string> alternatives;
};

std::vector<Element> compile_phrase(std::string_view phrase) {
  std::vector<Element> out;
  std::string s(phrase);
  // "…" is three bytes; normalize it to "...".
  for (std::size_t p; (p = s.find("\xE2\x80\xA6")) != std::string::npos;) s.replace(p, 3, " ... ");
  for (const auto& w : text::split_ws(s)) {
    Element e;
    if (w == "..." || w == "*") {
      e.kind = Element::Wildcard;
    } else if (w == "EC" || w == "ENTITY") {
      e.kind = Element::Ec;
    } else if (w == "PC") {
      e.kind = Element::Pc;
    } else if (w == "NUM" || w == "NUMBER") {
      e.kind = Element::Num;
    } else {
      std::string lw = text::to_lower(w);
      std::size_t start = 0;
      while (true) {
        std::size_t slash = lw.find('/', start);
        e.alternatives.push_back(lw.substr(start, slash == std::string::npos ? slash : slash - start));
        if (slash == std::string::npos) break;
        start = slash + 1;
      }
    }
    if (e.kind == Element::Wildcard && !out.empty() && out.back().kind == Element::Wildcard) continue;
    out.push_back(std::move(e));
  }
  return out;
}

bool element_matches(const Element& e, const std::string& tok) {
  switch (e.kind) {
    case Element::Ec:
      return is_slot(tok, 'E');
    case Element::Pc:
      return is_slot(tok, 'P');
    case Element::Num:
      return is_number_token(tok);
    case Element::Literal:
      return std::find(e.alternatives.begin(), e.alternatives.end(), tok) != e.alternatives.end();
    case Element::Wildcard:
      return true;
  }
  return false;
}

bool match_from(const std::vector<Element>& els, std::size_t ei, const std::vector<std::string>& toks,
                std::size_t ti) {
  if (ei == els.size()) return true;
  const Element& e = els[ei];
  if (e.kind == Element::Wildcard) {
    for (std::size_t k = ti; k <= toks.size(); ++k)
      if (match_from(els, ei + 1, toks, k)) return true;
    return false;
  }
  if (ti >= toks.size() || !element_matches(e, toks[ti])) return false;
  return match_from(els, ei + 1, toks, ti + 1);
}

}  // namespace

bool phrase_matches(std::string_view phrase, const std::vector<std::string>& tokens) {
  auto els = compile_phrase(phrase);
  if (els.empty()) return false;
  for (std::size_t start = 0; start < tokens.size(); ++start)
    if (match_from(els, 0, tokens, start)) return true;
  return false;
}

bool matches(const SignalMatcher& matcher, const CqEvidence& cq) {
  switch (matcher.kind) {
    case MatcherKind::InitialWordClass: {
      auto toks = signal_tokens(cq.text);
      return !toks.empty() && matcher.words.count(toks.front());
    }
    case MatcherKind::ContainsWord: {
      auto toks = signal_tokens(cq.text);
      return std::find(toks.begin(), toks.end(), matcher.word) != toks.end();
    }
    case MatcherKind::ContainsPhrase:
      return phrase_matches(matcher.phrase, signal_tokens(cq.pattern_text));
  }
  return false;
}

bool satisfies(const SignalTarget& target, const CqEvidence& cq) {
  if (!cq.translated) return false;
  switch (target.kind) {
    case TargetKind::QueryVerb:
      return cq.verb == target.verb;
    case TargetKind::KeywordPresent:
      return cq.keywords.count(target.keyword) > 0;
    case TargetKind::SignatureSkeleton:
      if (cq.where_skeleton.empty()) return false;
      if (cq.where_skeleton == target.where_skeleton) return true;
      return std::find(target.alternative_skeletons.begin(), target.alternative_skeletons.end(),
                       cq.where_skeleton) != target.alternative_skeletons.end();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Rules

namespace {

std::string compile_skeleton(const std::string& source) {
  std::string q = source;
  std::string_view head = text::trim(q);
  if (!(text::starts_with_word(head, "SELECT") || text::starts_with_word(head, "ASK")))
    q = "SELECT * WHERE " + q;
  sparql::PrefixTable prefixes = sparql::standard_prefixes();
  prefixes[""] = "urn:cqkit:target#";
  try {
    return canonicalize(sparql::parse_query(q, prefixes)).where_skeleton;
  } catch (const std::exception& e) {
    throw RuleError("target skeleton '" + source + "': " + e.what());
  }
}

}  // namespace

void compile_target(SignalTarget& target) {
  if (target.kind != TargetKind::SignatureSkeleton) return;
  target.where_skeleton = compile_skeleton(target.skeleton_query);
  target.alternative_skeletons.clear();
  for (const auto& q : target.alternative_queries) {
    std::string s = compile_skeleton(q);
    if (s != target.where_skeleton &&
        std::find(target.alternative_skeletons.begin(), target.alternative_skeletons.end(), s) ==
            target.alternative_skeletons.end())
      target.alternative_skeletons.push_back(std::move(s));
  }
}

namespace {

SignalRule phrase_rule(std::string id, std::string phrase, std::string skeleton,
                       std::vector<std::string> alternatives = {}) {
  SignalRule r;
  r.id = std::move(id);
  r.signal = phrase;
  r.matcher.kind = MatcherKind::ContainsPhrase;
  r.matcher.phrase = std::move(phrase);
  r.target.kind = TargetKind::SignatureSkeleton;
  r.target.skeleton_query = std::move(skeleton);
  r.target.alternative_queries = std::move(alternatives);
  compile_target(r.target);
  return r;
}

}  // namespace

const std::vector<SignalRule>& builtin_signal_rules() {
  static const std::vector<SignalRule> rules = [] {
    const std::string subclasses =
        "{ ?x rdfs:subClassOf :URI . FILTER(?x != :URI && ?x != owl:Nothing) }";
    std::vector<SignalRule> r;
    r.push_back(phrase_rule("possible-types", "What are the possible types ...", subclasses));
    r.push_back(phrase_rule("types-of", "What are the types of ...", subclasses));
    r.push_back(phrase_rule("what-types-of", "What types of ... is/are ...",
                            "{ [] rdfs:subClassOf :URI , [ owl:onProperty ?x ; owl:someValuesFrom [] ] . }"));
    r.push_back(phrase_rule("kind-of", "Which/what kind of ... is/are ...",
                            "{ :URI rdfs:subClassOf ?x . ?x rdfs:subClassOf :URI . "
                            "FILTER(?x != :URI && ?x != :URI) }"));
    r.push_back(phrase_rule("main-types", "What are the main types of ...",
                            "{ ?x rdfs:subClassOf :URI . FILTER NOT EXISTS { ?x rdfs:subClassOf ?y . "
                            "?y rdfs:subClassOf :URI . } FILTER(?x != :URI && ?x != owl:Nothing) }",
                            {"{ ?x rdfs:subClassOf :URI . FILTER NOT EXISTS { ?x rdfs:subClassOf ?y . "
                             "?y rdfs:subClassOf :URI . FILTER(?y != :URI && ?x != ?y) } "
                             "FILTER(?x != :URI && ?x != owl:Nothing) }"}));

    SignalRule select;
    select.id = "wh-initial";
    select.signal = "Which/What/Who/Where/When at the start";
    select.matcher.kind = MatcherKind::InitialWordClass;
    select.matcher.words = {"which", "what", "who", "where", "when"};
    select.target.kind = TargetKind::QueryVerb;
    select.target.verb = sparql::QueryVerb::Select;
    r.push_back(select);

    SignalRule ask;
    ask.id = "yes-no-initial";
    ask.signal = "Is/Are/Can/Does at the start";
    ask.matcher.kind = MatcherKind::InitialWordClass;
    ask.matcher.words = {"is", "are", "can", "does"};
    ask.target.kind = TargetKind::QueryVerb;
    ask.target.verb = sparql::QueryVerb::Ask;
    r.push_back(ask);

    auto word_rule = [](std::string id, std::string word, std::string keyword) {
      SignalRule w;
      w.id = std::move(id);
      w.signal = word;
      w.matcher.kind = MatcherKind::ContainsWord;
      w.matcher.word = std::move(word);
      w.target.kind = TargetKind::KeywordPresent;
      w.target.keyword = std::move(keyword);
      return w;
    };
    r.push_back(word_rule("or-union", "or", "owl:unionOf"));
    r.push_back(word_rule("and-intersection", "and", "owl:intersectionOf"));

    SignalRule exactly;
    exactly.id = "exactly-number";
    exactly.signal = "exactly NUMBER ENTITY";
    exactly.matcher.kind = MatcherKind::ContainsPhrase;
    exactly.matcher.phrase = "exactly NUM EC";
    exactly.target.kind = TargetKind::KeywordPresent;
    exactly.target.keyword = "owl:cardinality";
    r.push_back(exactly);
    return r;
  }();
  return rules;
}

std::vector<SignalRule> load_signal_rules(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RuleError(path.string() + ": cannot open rule file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw RuleError(path.string() + ": invalid JSON: " + e.what());
  }
  if (!j.is_array()) throw RuleError(path.string() + ": expected an array of rules");
  std::vector<SignalRule> rules;
  for (const auto& item : j) {
    SignalRule r;
    try {
      r.id = item.at("id").get<std::string>();
      const auto& m = item.at("matcher");
      const auto& t = item.at("target");
      if (m.contains("initial_words")) {
        r.matcher.kind = MatcherKind::InitialWordClass;
        for (const auto& w : m["initial_words"]) r.matcher.words.insert(text::to_lower(w.get<std::string>()));
      } else if (m.contains("phrase")) {
        r.matcher.kind = MatcherKind::ContainsPhrase;
        r.matcher.phrase = m["phrase"].get<std::string>();
      } else if (m.contains("word")) {
        r.matcher.kind = MatcherKind::ContainsWord;
        r.matcher.word = text::to_lower(m["word"].get<std::string>());
      } else {
        throw RuleError("rule '" + r.id + "': matcher needs initial_words, phrase or word");
      }
      if (t.contains("verb")) {
        r.target.kind = TargetKind::QueryVerb;
        std::string v = text::to_lower(t["verb"].get<std::string>());
        if (v != "select" && v != "ask") throw RuleError("rule '" + r.id + "': verb must be SELECT or ASK");
        r.target.verb = v == "ask" ? sparql::QueryVerb::Ask : sparql::QueryVerb::Select;
      } else if (t.contains("keyword")) {
        r.target.kind = TargetKind::KeywordPresent;
        r.target.keyword = t["keyword"].get<std::string>();
      } else if (t.contains("skeleton")) {
        r.target.kind = TargetKind::SignatureSkeleton;
        const auto& sk = t["skeleton"];
        if (sk.is_array()) {
          if (sk.empty()) throw RuleError("rule '" + r.id + "': skeleton list is empty");
          r.target.skeleton_query = sk[0].get<std::string>();
          for (std::size_t k = 1; k < sk.size(); ++k) r.target.alternative_queries.push_back(sk[k].get<std::string>());
        } else {
          r.target.skeleton_query = sk.get<std::string>();
        }
        compile_target(r.target);
      } else {
        throw RuleError("rule '" + r.id + "': target needs verb, keyword or skeleton");
      }
      r.signal = item.value("signal", r.matcher.kind == MatcherKind::ContainsPhrase ? r.matcher.phrase
                                                                                   : r.id);
    } catch (const nlohmann::json::exception& e) {
      throw RuleError(path.string() + ": " + e.what());
    }
    rules.push_back(std::move(r));
  }
  return rules;
}

// ---------------------------------------------------------------------------
// Mining

std::vector<CqEvidence> collect_evidence(const Corpus& corpus, const std::vector<ParsedQuery>& parsed,
                                         const SignatureInventory& inventory,
                                         const std::map<std::string, std::string>& pattern_text) {
  std::map<std::string, const ParsedQuery*> by_id;
  for (const auto& p : parsed) by_id[p.id] = &p;
  std::map<std::string, std::string> skeleton_of;
  for (const auto& g : inventory.groups) skeleton_of[g.id] = g.signature.where_skeleton;

  std::vector<CqEvidence> out;
  for (const auto& q : corpus.questions) {
    CqEvidence e;
    e.cq_id = q.id;
    e.ontology = q.ontology;
    e.text = q.text;
    if (auto it = pattern_text.find(q.id); it != pattern_text.end()) e.pattern_text = it->second;
    if (auto it = by_id.find(q.id); it != by_id.end() && it->second->ast) {
      const auto& ast = *it->second->ast;
      e.translated = true;
      e.verb = ast.verb;
      e.keywords = sparql::keyword_presence(ast);
      e.signature_id = inventory.group_of(q.id);
      if (!e.signature_id.empty()) e.where_skeleton = skeleton_of[e.signature_id];
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<SignalResult> mine_signals(const std::vector<CqEvidence>& evidence,
                                       const std::vector<SignalRule>& rules) {
  std::vector<SignalResult> out;
  for (const auto& rule : rules) {
    SignalResult r;
    r.rule = rule;
    for (const auto& cq : evidence) {
      if (!cq.translated || !matches(rule.matcher, cq)) continue;
      ++r.denominator;
      r.matched_cq_ids.push_back(cq.cq_id);
      if (satisfies(rule.target, cq)) ++r.numerator;
    }
    r.non_evidential = r.numerator <= 1;
    out.push_back(std::move(r));
  }
  return out;
}

const std::set<std::string>& default_stoplist() {
  static const std::set<std::string> s = {
      "the", "a", "an", "of", "for", "in", "on", "to", "is", "are", "be", "and", "or",
      "with", "by", "at", "from", "as", "that", "this", "it", "do", "does", "?", ",",
      ".", "...", "'s", "there", "can", "i", "we", "which", "what", "who", "how"};
  return s;
}

std::set<std::string> load_stoplist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RuleError(path.string() + ": cannot open stoplist");
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.insert(text::to_lower(t));
  }
  return out;
}

std::vector<SignalCandidate> discover_signals(const std::vector<CqEvidence>& evidence,
                                              const SignatureInventory& inventory,
                                              const DiscoverOptions& options) {
  if (options.min_support < 2) throw RuleError("min_support must be at least 2");
  const auto& stop = options.stoplist.empty() ? default_stoplist() : options.stoplist;
  std::map<std::string, std::string> skeleton_of;
  for (const auto& g : inventory.groups) skeleton_of[g.id] = g.signature.skeleton;

  // n-gram -> CQ indices (each CQ once)
  std::map<std::string, std::set<std::size_t>> groups;
  for (std::size_t i = 0; i < evidence.size(); ++i) {
    const auto& cq = evidence[i];
    if (!cq.translated || cq.signature_id.empty()) continue;
    auto toks = signal_tokens(cq.pattern_text.empty() ? cq.text : cq.pattern_text);
    for (auto& t : toks)
      if (is_slot(t, 'E') || is_slot(t, 'P')) t = "...";
    while (!toks.empty() && (toks.back() == "?" || toks.back() == ".")) toks.pop_back();
    for (std::size_t n = 1; n <= options.max_n; ++n) {
      for (std::size_t s = 0; s + n <= toks.size(); ++s) {
        bool all_stop = true;
        for (std::size_t k = s; k < s + n; ++k) all_stop = all_stop && stop.count(toks[k]);
        if (all_stop) continue;
        std::vector<std::string> gram(toks.begin() + s, toks.begin() + s + n);
        groups[text::join(gram, " ")].insert(i);
      }
    }
  }

  std::vector<SignalCandidate> out;
  for (const auto& [gram, members] : groups) {
    if (members.size() < options.min_support) continue;
    std::map<std::string, std::size_t> by_signature;
    for (auto i : members) by_signature[evidence[i].signature_id]++;
    std::string best;
    std::size_t best_n = 0;
    for (const auto& [sig, n] : by_signature) {
      bool better = n > best_n ||
                    (n == best_n && inventory.groups.size() && text::natural_less(sig, best));
      if (better) {
        best = sig;
        best_n = n;
      }
    }
    if (best_n < options.min_support) continue;
    SignalCandidate c;
    c.ngram = gram;
    c.group_size = members.size();
    c.subgroup_size = best_n;
    c.signature_id = best;
    c.skeleton = skeleton_of[best];
    c.ratio = static_cast<double>(best_n) / static_cast<double>(members.size());
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const SignalCandidate& a, const SignalCandidate& b) {
    if (a.ratio != b.ratio) return a.ratio > b.ratio;
    if (a.subgroup_size != b.subgroup_size) return a.subgroup_size > b.subgroup_size;
    if (a.group_size != b.group_size) return a.group_size > b.group_size;
    return a.ngram < b.ngram;
  });
  return out;
}

}  // namespace cqkit
