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

#include "cqkit/linguistics.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cqkit/text.hpp"
#include "json.hpp"

namespace cqkit::ling {

namespace {

constexpr std::array<std::string_view, 15> kPosNames = {
    "NOUN", "PROPN", "VERB", "AUX", "ADJ", "DET", "ADP", "PRON",
    "ADV",  "NUM",   "PUNCT", "CCONJ", "SCONJ", "PART", "X"};

}  // namespace

std::string_view pos_name(Pos pos) { return kPosNames[static_cast<std::size_t>(pos)]; }

std::optional<Pos> parse_pos(std::string_view upos) {
  for (std::size_t i = 0; i < kPosNames.size(); ++i)
    if (kPosNames[i] == upos) return static_cast<Pos>(i);
  if (upos == "INTJ" || upos == "SYM") return Pos::X;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tokenizer

namespace {

bool word_byte(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

// Curly quotes and apostrophes are three-byte UTF-8 sequences E2 80 98..9D.
int curly(std::string_view s, std::size_t i) {
  if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
      static_cast<unsigned char>(s[i + 1]) == 0x80) {
    unsigned char c = static_cast<unsigned char>(s[i + 2]);
    if (c == 0x98 || c == 0x99) return '\'';
    if (c == 0x9C || c == 0x9D) return '"';
  }
  return 0;
}

const std::array<std::string_view, 7> kClitics = {"s", "re", "ve", "ll", "m", "d", "t"};

}  // namespace

std::vector<TokenAnnotation> tokenize(std::string_view text) {
  std::vector<TokenAnnotation> out;
  bool pending_space = false;
  auto push = [&](std::string surface, bool placeholder) {
    if (!out.empty()) out.back().space_after = pending_space;
    pending_space = false;
    TokenAnnotation t;
    t.index = static_cast<int>(out.size());
    t.head = t.index;
    t.surface = std::move(surface);
    t.placeholder = placeholder;
    out.push_back(std::move(t));
  };

  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      pending_space = true;
      ++i;
      continue;
    }
    int cq = curly(text, i);
    if (c == '"' || cq == '"') {
      i += cq ? 3 : 1;
      continue;
    }
    if (c == '[') {
      std::size_t close = text.find(']', i);
      std::size_t end = close == std::string_view::npos ? text.size() : close + 1;
      push(std::string(text.substr(i, end - i)), true);
      i = end;
      continue;
    }
    if (c == '\'' || cq == '\'') {
      std::size_t width = cq ? 3 : 1;
      // Clitic after a word: "'s", "'re", ...
      if (!out.empty() && !pending_space && i > 0) {
        std::size_t j = i + width;
        std::size_t k = j;
        while (k < text.size() && std::isalpha(static_cast<unsigned char>(text[k]))) ++k;
        std::string tail = text::to_lower(text.substr(j, k - j));
        bool at_boundary = k >= text.size() || !word_byte(static_cast<unsigned char>(text[k]));
        if (at_boundary && std::find(kClitics.begin(), kClitics.end(), tail) != kClitics.end()) {
          std::string prev = text::to_lower(out.back().surface);
          if (tail == "t" && prev.size() > 1 && prev.back() == 'n') {
            out.back().surface.pop_back();
            push("n't", false);
          } else {
            push("'" + std::string(text.substr(j, k - j)), false);
          }
          i = k;
          continue;
        }
      }
      i += width;  // stray quote
      continue;
    }
    bool dot_word = c == '.' && (i == 0 || pending_space) && i + 1 < text.size() &&
                    std::isalnum(static_cast<unsigned char>(text[i + 1]));
    if (word_byte(c) || dot_word) {
      std::size_t j = dot_word ? i + 1 : i;
      while (j < text.size()) {
        unsigned char d = static_cast<unsigned char>(text[j]);
        if (word_byte(d)) {
          ++j;
        } else if ((d == '-' || d == '.') && j + 1 < text.size() &&
                   word_byte(static_cast<unsigned char>(text[j + 1])) && j > i) {
          ++j;
        } else {
          break;
        }
      }
      push(std::string(text.substr(i, j - i)), false);
      i = j;
      continue;
    }
    push(std::string(1, static_cast<char>(c)), false);
    ++i;
  }
  if (!out.empty()) out.back().space_after = false;
  return out;
}

// ---------------------------------------------------------------------------
// Lexicon

namespace {

using WordSet = std::unordered_set<std::string>;

const WordSet& det_words() {
  static const WordSet s = {"the", "a", "an", "this", "these", "those", "each", "every", "all",
                            "another", "some", "any", "no", "both", "either", "neither"};
  return s;
}
// Determiners that may open an entity chunk.
const WordSet& ec_det_words() {
  static const WordSet s = {"the", "a", "an", "this", "that", "these", "those", "each",
                            "every", "all", "another", "both", "either", "neither"};
  return s;
}
const WordSet& pron_words() {
  static const WordSet s = {"i", "me", "we", "us", "you", "he", "him", "she", "it", "they",
                            "them", "something", "anything", "someone", "anyone", "somebody",
                            "everything", "everyone", "nothing", "nobody", "who", "whom",
                            "whose", "what", "which", "there", "others", "myself", "itself",
                            "themselves", "yourself", "ourselves", "whatever", "whichever"};
  return s;
}
const WordSet& possessive_words() {
  static const WordSet s = {"my", "our", "your", "his", "her", "their", "its"};
  return s;
}
const WordSet& ec_pron_words() {
  static const WordSet s = {"it", "they", "them", "he", "him", "she", "something", "someone",
                            "somebody", "anything", "anyone", "everything", "everyone"};
  return s;
}
const WordSet& subject_pron_words() {
  static const WordSet s = {"i", "we", "you", "they", "he", "she", "it"};
  return s;
}
const WordSet& adp_words() {
  static const WordSet s = {
      "of",      "for",     "in",      "on",     "at",      "by",      "with",     "from",
      "about",   "into",    "between", "among",  "amongst", "through", "during",   "under",
      "over",    "within",  "without", "like",   "as",      "per",     "via",      "against",
      "across",  "after",   "before",  "since",  "until",   "towards", "toward",   "upon",
      "onto",    "than",    "given",   "regarding", "concerning", "including", "except",
      "besides", "beyond",  "near",    "behind", "below",   "above",   "along",    "around",
      "despite", "throughout", "versus", "vs", "out", "up", "off", "down"};
  return s;
}
const WordSet& cconj_words() {
  static const WordSet s = {"and", "or", "but", "nor", "&"};
  return s;
}
const WordSet& sconj_words() {
  static const WordSet s = {"if", "whether", "because", "although", "though", "while",
                            "whereas", "unless", "once"};
  return s;
}
const WordSet& adv_words() {
  static const WordSet s = {
      "how",      "where",     "when",      "why",        "else",       "also",
      "never",    "only",      "just",      "very",       "too",        "usually",
      "often",    "always",    "already",   "still",      "then",       "here",
      "now",      "ever",      "again",     "currently",  "typically",  "generally",
      "specifically", "exactly", "approximately", "especially", "really", "even",
      "mostly",   "more",      "most",      "less",       "least",      "well",
      "far",      "so",        "yet",       "directly",   "automatically", "together",
      "instead",  "otherwise", "either",    "rather",     "quite",      "almost",
      "enough",   "later",     "soon",      "recently",   "first",      "finally",
      "previously", "simultaneously", "actually", "normally", "better", "best"};
  return s;
}
const WordSet& adj_words() {
  static const WordSet s = {
      "main",     "possible",  "different", "other",     "new",       "free",
      "open",     "available", "specific",  "same",      "similar",   "good",
      "bad",      "worse",     "worst",     "large",     "small",     "big",
      "high",     "low",       "current",   "relevant",  "typical",   "certain",
      "necessary", "important", "common",   "particular", "various",  "whole",
      "own",      "able",      "valid",     "related",   "normal",    "daily",
      "physical", "social",    "mental",    "cognitive", "old",       "young",
      "long",     "short",     "fast",      "slow",      "fastest",   "slowest",
      "easy",     "difficult", "hard",      "simple",    "complex",   "key",
      "public",   "private",   "official",  "total",     "average",   "maximum",
      "minimum",  "general",   "medical",   "clinical",  "daily",     "recent",
      "previous", "next",      "last",      "early",     "late",      "major",
      "minor",    "full",      "empty",     "true",      "false",     "real",
      "wild",     "domestic",  "alive",     "dead",      "natural",   "artificial",
      "local",    "remote",    "internal",  "external",  "primary",   "secondary",
      "standard", "multiple",  "single",    "several",   "many",      "much",
      "few",      "such",      "best",      "better",    "newest",    "latest",
      "oldest",   "largest",   "smallest",  "highest",   "lowest",    "first",
      "second",   "third",     "additional", "appropriate", "suitable", "compatible",
      "underlying", "preferred", "free", "unique", "exact", "original", "final",
      "nutritional", "edible", "poisonous", "endangered", "healthy", "chronic",
      "acute",    "mild",      "severe",    "moderate",  "emotional", "functional",
      "structural", "aggregated", "primitive", "generic", "abstract", "concrete"};
  return s;
}
// Quantifying adjectives never open an entity chunk.
const WordSet& quantifier_words() {
  static const WordSet s = {"many", "much", "few", "several", "such", "some", "any", "no"};
  return s;
}
const WordSet& number_words() {
  static const WordSet s = {"one",    "two",     "three",   "four",     "five",    "six",
                            "seven",  "eight",   "nine",    "ten",      "eleven",  "twelve",
                            "twenty", "thirty",  "hundred", "thousand", "million", "zero",
                            "dozen",  "fifty",   "forty",   "hundreds", "thousands"};
  return s;
}
const WordSet& be_words() {
  static const WordSet s = {"is", "are", "was", "were", "be", "been", "being", "am", "'re", "'m"};
  return s;
}
const WordSet& do_words() {
  static const WordSet s = {"do", "does", "did"};
  return s;
}
const WordSet& have_words() {
  static const WordSet s = {"has", "have", "had", "'ve", "having"};
  return s;
}
const WordSet& modal_words() {
  static const WordSet s = {"can", "could", "will", "would", "shall", "should", "may",
                            "might", "must", "'ll", "'d", "ca", "wo"};
  return s;
}
// Nouns that head a classifying phrase ("types of", "difference between").
const WordSet& classifier_nouns() {
  static const WordSet s = {"type",  "types",  "kind",       "kinds",       "category",
                            "categories", "difference", "differences", "sort", "sorts"};
  return s;
}
// Nouns that stay literal text.
const WordSet& literal_nouns() {
  static const WordSet s = {"extent", "past"};
  return s;
}
// Verbs kept out of predicate chunks.
const WordSet& light_verbs() {
  static const WordSet s = {"have", "has", "had", "having", "'ve"};
  return s;
}
// Adjective-looking words that are nouns.
const WordSet& suffix_exceptions() {
  static const WordSet s = {"animal", "animals", "interval", "intervals", "signal", "signals",
                            "material", "materials", "manual", "manuals", "tutorial",
                            "tutorials", "hospital", "hospitals", "individual", "individuals",
                            "proposal", "proposals", "journal", "journals", "terminal",
                            "terminals", "alternative", "alternatives", "objective",
                            "objectives", "clinic", "clinics", "logic", "topic", "topics",
                            "graphic", "graphics", "music", "metric", "metrics", "archive",
                            "archives", "executive", "relative", "relatives", "arrival",
                            "approval", "removal", "rental", "portal", "portals", "capital",
                            "criminal", "mammal", "mammals", "vegetable", "vegetables",
                            "variable", "variables", "table", "tables", "cable", "cables",
                            "deliverable", "deliverables", "trial", "trials", "total",
                            "rival", "festival", "principal", "chemical", "chemicals",
                            "statistic", "statistics", "electronic", "electronics",
                            "mechanic", "mechanics", "drive", "drives", "native", "motive",
                            "directive", "perspective", "initiative", "detective",
                            "interval", "crystal", "physic"};
  return s;
}

enum class Form { None, Base, S, Ed, Ing };

struct VerbEntry {
  Form form = Form::None;
  bool noun_ok = false;
};

// Verbs that double as nouns in their base and -s forms.
const WordSet& noun_verbs() {
  static const WordSet s = {
      "use",     "run",      "work",    "need",    "support",  "process",  "cause",
      "change",  "record",   "report",  "test",    "design",   "display",  "result",
      "help",    "share",    "walk",    "control", "measure",  "plan",     "list",
      "link",    "map",      "view",    "release", "import",   "export",   "archive",
      "store",   "form",     "return",  "update",  "download", "upload",   "access",
      "step",    "sort",     "play",    "purchase", "sleep",   "drink",    "feed",
      "fall",    "offer",    "track",   "load",    "train",    "turn",     "edit",
      "call",    "place",    "look",    "start",   "stop",     "stay",     "hold",
      "plant",   "cost",     "fit",     "cut",     "set",      "answer",   "deal",
      "demand",  "exchange", "experience", "focus", "interest", "issue",   "limit",
      "mark",    "name",     "order",   "output",  "input",    "package",  "pay",
      "question", "rank",    "rate",    "reference", "request", "review",  "schedule",
      "score",   "search",   "service", "source",  "state",    "structure", "study",
      "transfer", "value",   "visit",   "watch",   "wear",     "win",      "wish",
      "stand",   "smoke",    "shop",    "check",   "care",     "document", "license",
      "licence", "install",  "hunt",    "move",    "act",      "aim",      "attempt",
      "benefit", "claim",    "comment", "contact", "cover",    "date",     "delay",
      "doubt",   "dream",    "estimate", "file",   "fear",     "guide",    "increase",
      "decrease", "judge",   "lack",    "level",   "love",     "matter",   "mind",
      "model",   "monitor",  "note",    "object",  "phase",    "plot",     "point",
      "present", "print",    "produce", "programme", "program", "project", "protest",
      "range",   "reason",   "repeat",  "reply",   "rest",     "rule",     "sample",
      "save",    "seed",     "sense",   "sign",    "sound",    "stress",   "supply",
      "talk",    "task",     "tend",    "trace",   "trade",    "trust",    "type",
      "vote",    "walk",     "waste",   "water",   "weight",   "wonder",   "worry",
      "grade",   "query",    "queries", "label",   "format",   "host",     "filter",
      "debug",   "compile",  "parse",   "script",  "code",     "target",   "alert",
      "prescribe", "treatment", "diet",  "exercise", "symptom", "intake",  "visit"};
  return s;
}

const std::vector<std::string_view>& verb_bases() {
  static const std::vector<std::string_view> v = {
      "accept",  "access",    "add",      "affect",   "allow",    "analyse",   "analyze",
      "apply",   "archive",   "assess",   "assist",   "attach",   "attend",    "avoid",
      "belong",  "calculate", "call",     "carry",    "categorise", "categorize", "cause",
      "change",  "check",     "cite",     "classify", "collect",  "combine",   "compare",
      "compile", "complete",  "compute",  "concern",  "configure", "connect",  "consist",
      "consume", "contain",   "control",  "convert",  "cook",     "create",    "cure",
      "deal",    "define",    "delete",   "depend",   "derive",   "describe",  "design",
      "detect",  "determine", "develop",  "diagnose", "differ",   "display",   "distribute",
      "download", "edit",     "enable",   "encode",   "evaluate", "exist",     "expect",
      "explain", "export",    "extend",   "extract",  "fetch",    "fit",       "follow",
      "form",    "generate",  "handle",   "happen",   "help",     "hunt",      "identify",
      "implement", "import",  "improve",  "include",  "increase", "indicate",  "influence",
      "inform",  "install",   "integrate", "interact", "interpret", "involve", "last",
      "learn",   "like",      "link",     "list",     "live",     "load",      "look",
      "manage",  "map",       "measure",  "monitor",  "move",     "need",      "observe",
      "obtain",  "occur",     "offer",    "open",     "operate",  "own",       "parse",
      "perform", "place",     "plan",     "play",     "predict",  "prefer",    "prepare",
      "prescribe", "prevent", "process",  "produce",  "provide",  "publish",   "purchase",
      "quantify", "receive",  "record",   "reduce",   "refer",    "relate",    "release",
      "rely",    "remember",  "remove",   "render",   "report",   "represent", "reproduce",
      "require", "resolve",   "return",   "save",     "share",    "solve",     "sort",
      "specify", "start",     "stay",     "stop",     "store",    "suffer",    "suggest",
      "supply",  "support",   "talk",     "tend",     "test",     "track",     "train",
      "transform", "treat",   "try",      "turn",     "update",   "upload",    "use",
      "validate", "view",     "visualise", "visualize", "walk",   "want",      "watch",
      "work",    "plant",     "hunt",     "prey",     "graze",    "drink",     "feed",
      "sleep",   "need",      "check",    "measure",  "detect",   "assess",    "rate",
      "score",   "query",     "invoke",   "execute",  "launch",   "maintain",  "belong",
      "mention", "convey",    "annotate", "license",  "licence",  "host",      "filter",
      "debug",   "script",    "code",     "target",   "alert",    "characterise",
      "characterize", "aggregate", "ask",  "answer",  "appear",   "arrive",    "attack",
      "bite",    "consult",   "diagnose", "document", "enter",    "exercise",  "fail",
      "finish",  "improve",   "kill",     "listen",   "mark",     "name",      "order",
      "pass",    "print",     "program",  "protect",  "reach",    "realise",   "realize",
      "recommend", "register", "remain",  "request",  "review",   "schedule",  "search",
      "seem",    "select",    "serve",    "smoke",    "study",    "submit",    "survive",
      "transfer", "travel",   "trust",    "value",    "visit",    "vote",      "wait",
      "wash",    "wish",      "worry",    "allocate", "execute",  "depict",    "underlie",
      "constitute", "compose", "comprise", "satisfy", "achieve",  "estimate",  "verify",
      "interoperate", "output", "input",  "stand",    "exchange", "cost",      "cut",
      "set",     "hold",      "win",      "wear",     "sell",     "pay",       "fall",
      "become",  "begin",     "build",    "buy",      "choose",   "come",      "do",
      "draw",    "drive",     "eat",      "find",     "get",      "give",      "go",
      "grow",    "hear",      "keep",     "know",     "lead",     "leave",     "lie",
      "make",    "mean",      "meet",     "put",      "read",     "run",       "say",
      "see",     "send",      "show",     "take",     "teach",    "tell",      "think",
      "understand", "wake",   "write",    "bring",    "catch",    "forget",    "speak",
      "swim",    "fly",       "feel",     "let",      "seek",     "spend"};
  return v;
}

const std::vector<std::pair<std::string_view, std::vector<std::string_view>>>& irregulars() {
  static const std::vector<std::pair<std::string_view, std::vector<std::string_view>>> v = {
      {"eat", {"ate", "eaten"}},     {"drink", {"drank", "drunk"}}, {"run", {"ran"}},
      {"make", {"made"}},            {"take", {"took", "taken"}},   {"give", {"gave"}},
      {"get", {"got", "gotten"}},    {"go", {"went", "gone"}},      {"find", {"found"}},
      {"build", {"built"}},          {"buy", {"bought"}},           {"choose", {"chose", "chosen"}},
      {"come", {"came"}},            {"do", {"done"}},              {"feed", {"fed"}},
      {"feel", {"felt"}},            {"grow", {"grew", "grown"}},   {"hear", {"heard"}},
      {"hold", {"held"}},            {"keep", {"kept"}},            {"know", {"knew", "known"}},
      {"lead", {"led"}},             {"leave", {"left"}},           {"mean", {"meant"}},
      {"meet", {"met"}},             {"pay", {"paid"}},             {"say", {"said"}},
      {"see", {"saw", "seen"}},      {"sell", {"sold"}},            {"send", {"sent"}},
      {"show", {"shown"}},           {"sleep", {"slept"}},          {"stand", {"stood"}},
      {"teach", {"taught"}},         {"tell", {"told"}},            {"think", {"thought"}},
      {"understand", {"understood"}}, {"wake", {"woke", "woken"}},  {"wear", {"wore", "worn"}},
      {"write", {"wrote", "written"}}, {"begin", {"began", "begun"}}, {"become", {"became"}},
      {"fall", {"fell", "fallen"}},  {"drive", {"drove", "driven"}}, {"bring", {"brought"}},
      {"catch", {"caught"}},         {"forget", {"forgot", "forgotten"}},
      {"speak", {"spoke", "spoken"}}, {"swim", {"swam", "swum"}},   {"fly", {"flew", "flown"}},
      {"seek", {"sought"}},          {"spend", {"spent"}},          {"draw", {"drew", "drawn"}},
      {"bite", {"bit", "bitten"}},   {"win", {"won"}},              {"lie", {"lay", "lain"}}};
  return v;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

std::string s_form(const std::string& b) {
  if (b == "do" || b == "go") return b + "es";
  if (b.size() > 1 && b.back() == 'y' && !is_vowel(b[b.size() - 2]))
    return b.substr(0, b.size() - 1) + "ies";
  if (b.ends_with("s") || b.ends_with("sh") || b.ends_with("ch") || b.ends_with("x") ||
      b.ends_with("z"))
    return b + "es";
  return b + "s";
}

bool double_final(const std::string& b) {
  static const WordSet no_double = {"visit", "edit", "limit", "target", "alert", "offer",
                                    "order", "answer", "enter", "render", "filter", "monitor",
                                    "happen", "open", "listen", "suffer", "wonder", "register",
                                    "consist", "exist", "interpret", "record", "review",
                                    "develop", "label", "travel", "deliver", "discover",
                                    "consider", "document", "comment", "benefit"};
  if (no_double.count(b) || b.size() < 3) return false;
  char a = b[b.size() - 3], v = b[b.size() - 2], c = b.back();
  return !is_vowel(a) && is_vowel(v) && !is_vowel(c) && c != 'w' && c != 'x' && c != 'y' &&
         b.size() <= 4;
}

std::string ed_form(const std::string& b) {
  if (b.back() == 'e') return b + "d";
  if (b.size() > 1 && b.back() == 'y' && !is_vowel(b[b.size() - 2]))
    return b.substr(0, b.size() - 1) + "ied";
  if (double_final(b)) return b + b.back() + "ed";
  return b + "ed";
}

std::string ing_form(const std::string& b) {
  if (b == "be" || b == "see" || b == "flee") return b + "ing";
  if (b.size() > 2 && b.ends_with("ie")) return b.substr(0, b.size() - 2) + "ying";
  if (b.back() == 'e' && b.size() > 2) return b.substr(0, b.size() - 1) + "ing";
  if (double_final(b)) return b + b.back() + "ing";
  return b + "ing";
}

const std::unordered_map<std::string, VerbEntry>& verb_lexicon() {
  static const auto table = [] {
    std::unordered_map<std::string, VerbEntry> m;
    auto put = [&](const std::string& w, Form f, bool noun_ok) {
      auto it = m.find(w);
      if (it == m.end()) m[w] = {f, noun_ok};
    };
    for (auto base_view : verb_bases()) {
      std::string b(base_view);
      bool nv = noun_verbs().count(b) > 0;
      put(b, Form::Base, nv);
      put(s_form(b), Form::S, nv);
      put(ed_form(b), Form::Ed, false);
      put(ing_form(b), Form::Ing, true);
    }
    for (const auto& [base, forms] : irregulars())
      for (auto f : forms) m[std::string(f)] = {Form::Ed, false};
    // Past tenses that equal the base.
    for (const char* w : {"put", "set", "cut", "cost", "let", "read"}) m[w].form = Form::Base;
    return m;
  }();
  return table;
}

bool ends_with_any(const std::string& w, std::initializer_list<std::string_view> suffixes) {
  for (auto s : suffixes)
    if (w.size() > s.size() + 2 && w.ends_with(s)) return true;
  return false;
}

bool all_digits(const std::string& w) {
  bool digit = false;
  for (char c : w) {
    if (std::isdigit(static_cast<unsigned char>(c)))
      digit = true;
    else if (c != '.' && c != ',' && c != '-')
      return false;
  }
  return digit;
}

bool is_punct_token(const std::string& s) {
  if (s.size() > 1 && s[0] == '.') return false;
  return !s.empty() && !word_byte(static_cast<unsigned char>(s[0])) && s[0] != '\'';
}

// ---------------------------------------------------------------------------
// Tagger

enum class AuxKind { None, Be, Do, Have, Modal };

struct Slot {
  std::string lower;
  bool capitalized = false;
  std::optional<Pos> fixed;
  AuxKind aux = AuxKind::None;
  Form form = Form::None;
  bool noun_ok = false;
  bool verb_only = false;
};

class Tagger {
 public:
  explicit Tagger(std::vector<TokenAnnotation> tokens) : toks_(std::move(tokens)) {
    slots_.resize(toks_.size());
    for (std::size_t i = 0; i < toks_.size(); ++i) lex(i);
  }

  std::vector<TokenAnnotation> run() {
    resolve();
    attach();
    return std::move(toks_);
  }

 private:
  void lex(std::size_t i) {
    Slot& s = slots_[i];
    const std::string& w = toks_[i].surface;
    s.lower = text::to_lower(w);
    s.capitalized = !w.empty() && std::isupper(static_cast<unsigned char>(w[0]));
    const std::string& l = s.lower;
    if (toks_[i].placeholder) {
      s.fixed = Pos::NOUN;
      return;
    }
    if (is_punct_token(w)) {
      s.fixed = l == "&" ? Pos::CCONJ : Pos::PUNCT;
      return;
    }
    if (all_digits(l) || number_words().count(l)) {
      s.fixed = Pos::NUM;
      return;
    }
    if (be_words().count(l)) {
      s.fixed = Pos::AUX;
      s.aux = AuxKind::Be;
      return;
    }
    if (do_words().count(l)) {
      s.aux = AuxKind::Do;
      return;
    }
    if (have_words().count(l)) {
      s.aux = AuxKind::Have;
      return;
    }
    if (modal_words().count(l)) {
      s.fixed = Pos::AUX;
      s.aux = AuxKind::Modal;
      return;
    }
    if (l == "'s" || l == "n't" || l == "not") return;  // decided in context
    if (l == "to" || l == "that" || l == "which" || l == "what" || l == "who") return;
    if (possessive_words().count(l) || pron_words().count(l)) {
      s.fixed = Pos::PRON;
      return;
    }
    if (det_words().count(l)) {
      s.fixed = Pos::DET;
      return;
    }
    if (cconj_words().count(l)) {
      s.fixed = Pos::CCONJ;
      return;
    }
    if (sconj_words().count(l)) {
      s.fixed = Pos::SCONJ;
      return;
    }
    if (adp_words().count(l)) {
      s.fixed = Pos::ADP;
      return;
    }
    if (adj_words().count(l)) {
      s.fixed = Pos::ADJ;
      return;
    }
    if (adv_words().count(l)) {
      s.fixed = Pos::ADV;
      return;
    }
    auto& lexicon = verb_lexicon();
    if (auto it = lexicon.find(l); it != lexicon.end()) {
      s.form = it->second.form;
      s.noun_ok = it->second.noun_ok;
      s.verb_only = !s.noun_ok && s.form != Form::Ed;
      return;
    }
    if (suffix_exceptions().count(l)) {
      s.fixed = Pos::NOUN;
      return;
    }
    if (i > 0 && s.capitalized) {
      s.fixed = Pos::PROPN;
      return;
    }
    if (ends_with_any(l, {"ly"})) {
      s.fixed = Pos::ADV;
      return;
    }
    if (ends_with_any(l, {"ed"})) {
      s.form = Form::Ed;
      return;
    }
    if (ends_with_any(l, {"ing"})) {
      s.form = Form::Ing;
      s.noun_ok = true;
      return;
    }
    if (ends_with_any(l, {"ize", "ise", "izes", "ises"})) {
      s.form = l.back() == 's' ? Form::S : Form::Base;
      s.noun_ok = true;
      return;
    }
    if (ends_with_any(l, {"ous", "ful", "less", "able", "ible", "ive", "ic", "al"})) {
      s.fixed = Pos::ADJ;
      return;
    }
    s.fixed = Pos::NOUN;
  }

  // Whether a verb candidate appears before the next clause barrier.
  bool verb_ahead(std::size_t i) const {
    for (std::size_t j = i + 1; j < toks_.size(); ++j) {
      const Slot& s = slots_[j];
      if (s.fixed && (*s.fixed == Pos::PUNCT || *s.fixed == Pos::CCONJ || *s.fixed == Pos::SCONJ))
        return false;
      if (s.lower == "who" || s.lower == "that" || s.lower == "which") return false;
      if (s.form != Form::None) return true;
      if (s.aux == AuxKind::Have && slots_[i].aux == AuxKind::Do) return true;
      if (s.lower == "been" && slots_[i].aux == AuxKind::Have) return true;
    }
    return false;
  }

  bool wh_word(const std::string& l) const {
    return l == "what" || l == "which" || l == "who" || l == "where" || l == "when" ||
           l == "how" || l == "whom" || l == "whose" || l == "why";
  }

  Pos prev_pos(std::size_t i) const { return i == 0 ? Pos::X : toks_[i - 1].pos; }
  const std::string& prev_lower(std::size_t i) const {
    static const std::string empty;
    return i == 0 ? empty : slots_[i - 1].lower;
  }

  bool noun_like_next(std::size_t i) const {
    if (i + 1 >= toks_.size()) return false;
    const Slot& n = slots_[i + 1];
    if (toks_[i + 1].placeholder) return false;
    if (n.fixed)
      return *n.fixed == Pos::NOUN || *n.fixed == Pos::PROPN || *n.fixed == Pos::ADJ ||
             *n.fixed == Pos::ADV;
    return n.noun_ok || n.form == Form::Ed || n.form == Form::Ing;
  }

  void set(std::size_t i, Pos p) { toks_[i].pos = p; }

  void verb(std::size_t i) {
    set(i, Pos::VERB);
    clause_has_verb_ = true;
    for (std::size_t a : pending_) {
      if (slots_[a].aux == AuxKind::Be && det_between(a, i)) {
        settle_aux(a);
        continue;
      }
      toks_[a].head = static_cast<int>(i);
      toks_[a].deprel = "aux";
    }
    pending_.clear();
  }

  bool pending(AuxKind kind) const {
    for (std::size_t a : pending_)
      if (slots_[a].aux == kind) return true;
    return false;
  }

  bool det_between(std::size_t a, std::size_t b) const {
    for (std::size_t j = a + 1; j < b; ++j)
      if (toks_[j].pos == Pos::DET) return true;
    return false;
  }

  void close_clause() {
    for (std::size_t a : pending_) settle_aux(a);
    pending_.clear();
    clause_has_verb_ = false;
    clause_start_ = true;
  }

  // An auxiliary that never met its verb.
  void settle_aux(std::size_t a) {
    switch (slots_[a].aux) {
      case AuxKind::Be:
        toks_[a].deprel = "cop";
        break;
      case AuxKind::Do:
      case AuxKind::Have:
        set(a, Pos::VERB);
        toks_[a].deprel = "";
        break;
      default:
        toks_[a].deprel = "";
    }
  }

  void resolve() {
    bool wh_clause = false;
    for (std::size_t i = 0; i < toks_.size(); ++i) {
      Slot& s = slots_[i];
      const std::string& l = s.lower;
      bool starts = clause_start_;
      clause_start_ = false;

      if (s.aux != AuxKind::None) {
        bool later = verb_ahead(i);
        if (l == "been" && !later && pending(AuxKind::Have)) {
          verb(i);  // "has ... been around"
        } else if (s.aux == AuxKind::Be || s.aux == AuxKind::Modal || later) {
          set(i, Pos::AUX);
          pending_.push_back(i);
        } else if (s.aux == AuxKind::Have && pending(AuxKind::Do)) {
          verb(i);  // light verb carrying do-support
        } else if (s.aux == AuxKind::Have) {
          set(i, Pos::VERB);  // light verb
        } else {
          verb(i);
        }
        continue;
      }
      if (s.fixed) {
        set(i, *s.fixed);
        if (*s.fixed == Pos::ADJ && !noun_like_next(i) && prev_pos(i) == Pos::DET &&
            !adj_words().count(l))
          set(i, Pos::NOUN);
        if (*s.fixed == Pos::PUNCT && l != "-" && l != "/") close_clause();
        if (*s.fixed == Pos::CCONJ || *s.fixed == Pos::SCONJ) {
          // Keep a pending auxiliary across "or"/"and" only inside noun
          // coordination.
          if (prev_pos(i) == Pos::VERB || clause_has_verb_) close_clause();
        }
        if (starts && *s.fixed == Pos::PRON) wh_clause = wh_word(l);
        if (starts && *s.fixed == Pos::ADV) wh_clause = wh_word(l);
        continue;
      }
      if (l == "'s") {
        Pos p = prev_pos(i);
        if (p == Pos::NOUN || p == Pos::PROPN) {
          set(i, Pos::PART);
          toks_[i].deprel = "case";
        } else {
          set(i, Pos::AUX);
          slots_[i].aux = AuxKind::Be;
          pending_.push_back(i);
        }
        continue;
      }
      if (l == "n't" || l == "not") {
        set(i, Pos::PART);
        continue;
      }
      if (l == "what" || l == "which" || l == "who") {
        set(i, Pos::PRON);
        if (!starts && i > 0 && l != "what" &&
            (prev_pos(i) == Pos::NOUN || prev_pos(i) == Pos::PROPN))
          close_clause();  // relative clause
        else if (starts || i == 0)
          wh_clause = true;
        continue;
      }
      if (l == "that") {
        if (noun_like_next(i) && prev_pos(i) != Pos::NOUN && prev_pos(i) != Pos::PROPN) {
          set(i, Pos::DET);
        } else {
          set(i, Pos::PRON);
          close_clause();
        }
        continue;
      }
      if (l == "to") {
        const Slot* n = i + 1 < slots_.size() ? &slots_[i + 1] : nullptr;
        bool verb_next = n && !toks_[i + 1].placeholder && !n->fixed &&
                         (n->form == Form::Base || n->verb_only);
        if (i > 1 && slots_[i - 1].lower == "respect" && slots_[i - 2].lower == "with")
          verb_next = false;
        set(i, verb_next ? Pos::PART : Pos::ADP);
        continue;
      }
      if (l == "respect" && i > 0 && slots_[i - 1].lower == "with") {
        set(i, Pos::ADP);
        continue;
      }
      resolve_open(i, wh_clause);
    }
    close_clause();
  }

  void resolve_open(std::size_t i, bool wh_clause) {
    const Slot& s = slots_[i];
    Pos prev = prev_pos(i);
    const std::string& pl = prev_lower(i);
    bool after_det = prev == Pos::DET || prev == Pos::ADJ || prev == Pos::NUM ||
                     (prev == Pos::PRON && possessive_words().count(pl)) ||
                     (prev == Pos::ADP && pl != "to");
    bool after_subject = prev == Pos::PRON && subject_pron_words().count(pl);
    bool after_to = prev == Pos::PART && pl == "to";
    bool after_relative = prev == Pos::PRON && (pl == "who" || pl == "that" || pl == "which") &&
                          i > 1;
    bool pending_do = false, pending_be = false;
    for (std::size_t a : pending_) {
      if (slots_[a].aux == AuxKind::Be)
        pending_be = true;
      else
        pending_do = true;
    }
    bool adjacent_aux = prev == Pos::AUX;
    bool adjacent_be = adjacent_aux && slots_[i - 1].aux == AuxKind::Be;

    if (s.form == Form::None) {
      set(i, Pos::NOUN);
      return;
    }

    if (s.form == Form::Ed) {
      if (after_det && !adjacent_aux)
        set(i, Pos::ADJ);
      else
        verb(i);
      return;
    }

    if (s.form == Form::Ing) {
      if (adjacent_be || (pending_be && !after_det)) {
        verb(i);
      } else if (after_det || after_to) {
        set(i, Pos::NOUN);
      } else if (after_subject || after_relative || (pending_do && !clause_has_verb_)) {
        verb(i);
      } else {
        set(i, Pos::NOUN);
      }
      return;
    }

    // Base or -s form.
    if (s.verb_only) {
      if (after_det && !after_to)
        set(i, Pos::NOUN);
      else
        verb(i);
      return;
    }
    if (after_to || after_subject || after_relative) {
      verb(i);
      return;
    }
    if (after_det || adjacent_be) {
      set(i, Pos::NOUN);
      return;
    }
    if (adjacent_aux || (pending_do && (prev == Pos::NOUN || prev == Pos::PROPN))) {
      verb(i);
      return;
    }
    if (prev == Pos::CCONJ && i > 1 && toks_[i - 2].pos == Pos::VERB) {
      verb(i);
      return;
    }
    if ((prev == Pos::NOUN || prev == Pos::PROPN) && wh_clause && !clause_has_verb_ &&
        pending_.empty() && !noun_follows_as_compound(i)) {
      verb(i);
      return;
    }
    if (i == 0 && !noun_like_next(i)) {
      verb(i);
      return;
    }
    if ((prev == Pos::PRON && wh_word(pl)) && !next_is_verbal(i)) {
      verb(i);
      return;
    }
    set(i, Pos::NOUN);
  }

  // "plant parts": a noun reading continues into another noun.
  bool noun_follows_as_compound(std::size_t i) const {
    if (i + 1 >= toks_.size()) return false;
    const Slot& n = slots_[i + 1];
    if (toks_[i + 1].placeholder) return false;
    if (n.fixed && (*n.fixed == Pos::AUX || *n.fixed == Pos::PUNCT)) return true;
    return n.verb_only || n.form == Form::Ed;
  }

  bool next_is_verbal(std::size_t i) const {
    if (i + 1 >= toks_.size()) return false;
    const Slot& n = slots_[i + 1];
    if (n.aux != AuxKind::None) return true;
    return n.verb_only || n.form == Form::Ed;
  }

  void attach() {
    int root = -1;
    for (const auto& t : toks_)
      if (t.pos == Pos::VERB) {
        root = t.index;
        break;
      }
    if (root < 0)
      for (const auto& t : toks_)
        if (t.pos == Pos::AUX) {
          root = t.index;
          break;
        }
    if (root < 0)
      for (const auto& t : toks_)
        if (t.pos == Pos::NOUN || t.pos == Pos::PROPN) {
          root = t.index;
          break;
        }
    if (root < 0) root = 0;

    for (std::size_t i = 0; i < toks_.size(); ++i) {
      auto& t = toks_[i];
      if (static_cast<int>(i) == root) {
        t.head = root;
        t.deprel = "root";
        continue;
      }
      if (t.pos == Pos::AUX && t.deprel == "aux") continue;
      if (t.pos == Pos::ADP && i > 0) {
        std::size_t v = i - 1;
        if (toks_[v].pos == Pos::PART && v > 0 && slots_[v].lower != "to" &&
            slots_[v].lower != "not" && slots_[v].lower != "n't")
          --v;
        if (toks_[v].pos == Pos::VERB) {
          t.head = static_cast<int>(v);
          t.deprel = "prep";
          continue;
        }
      }
      if (t.pos == Pos::PART && slots_[i].lower == "to" && i + 1 < toks_.size() &&
          toks_[i + 1].pos == Pos::VERB) {
        t.head = static_cast<int>(i + 1);
        t.deprel = "mark";
        continue;
      }
      t.head = root;
      if (t.deprel.empty() || t.deprel == "root") t.deprel = t.pos == Pos::PUNCT ? "punct" : "dep";
    }
  }

  std::vector<TokenAnnotation> toks_;
  std::vector<Slot> slots_;
  std::vector<std::size_t> pending_;
  bool clause_has_verb_ = false;
  bool clause_start_ = true;
};

}  // namespace

std::vector<TokenAnnotation> annotate_builtin(std::string_view text) {
  if (text::trim(text).empty()) throw AnnotationError("empty input");
  auto tokens = tokenize(text);
  if (tokens.empty()) throw AnnotationError("no tokens in input");
  return Tagger(std::move(tokens)).run();
}

// ---------------------------------------------------------------------------
// Chunking

namespace {

bool nominal(const TokenAnnotation& t) {
  return t.pos == Pos::NOUN || t.pos == Pos::PROPN;
}

bool aux_relation(const std::string& deprel) { return deprel.rfind("aux", 0) == 0; }

std::string lower_of(const TokenAnnotation& t) { return text::to_lower(t.surface); }

// Tokens that must stay literal regardless of their tag.
std::vector<bool> literal_mask(const std::vector<TokenAnnotation>& toks) {
  std::vector<bool> mask(toks.size(), false);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    std::string l = lower_of(toks[i]);
    if (toks[i].placeholder) continue;
    if (literal_nouns().count(l)) mask[i] = true;
    if (l == "respect" && i > 0 && lower_of(toks[i - 1]) == "with") mask[i] = true;
    if (classifier_nouns().count(l) && i + 1 < toks.size()) {
      std::string next = lower_of(toks[i + 1]);
      if (next == "of" || next == "between") {
        mask[i] = true;
        for (std::size_t j = i; j-- > 0;) {
          Pos p = toks[j].pos;
          if (toks[j].placeholder || !(p == Pos::DET || p == Pos::ADJ || p == Pos::ADV)) break;
          if (p == Pos::DET && !ec_det_words().count(lower_of(toks[j]))) break;
          mask[j] = true;
        }
      }
    }
  }
  return mask;
}

std::string surface_of(const std::vector<TokenAnnotation>& toks, const std::vector<TokenRange>& spans) {
  std::string out;
  for (const auto& r : spans) {
    for (int i = r.begin; i < r.end; ++i) {
      if (!out.empty() && (i == r.begin || toks[i - 1].space_after)) out += ' ';
      out += toks[i].surface;
    }
  }
  return out;
}

}  // namespace

std::vector<Chunk> identify_chunks(const std::vector<TokenAnnotation>& toks) {
  const int n = static_cast<int>(toks.size());
  std::vector<bool> literal = literal_mask(toks);
  std::vector<int> owner(n, -1);
  std::vector<Chunk> chunks;

  auto free_token = [&](int i) { return i < n && owner[i] < 0 && !literal[i]; };

  // Entity chunks.
  for (int i = 0; i < n;) {
    if (!free_token(i)) {
      ++i;
      continue;
    }
    const auto& t = toks[i];
    std::string l = lower_of(t);
    if (t.placeholder || (t.pos == Pos::PRON && ec_pron_words().count(l))) {
      owner[i] = static_cast<int>(chunks.size());
      chunks.push_back({ChunkKind::EC, {{i, i + 1}}, 0, t.surface});
      ++i;
      continue;
    }
    int j = i;
    auto eligible = [&](int k) { return free_token(k) && !toks[k].placeholder; };
    if (eligible(j) && toks[j].pos == Pos::DET && ec_det_words().count(lower_of(toks[j]))) ++j;
    if (eligible(j) && toks[j].pos == Pos::ADV && j + 1 < n &&
        (toks[j + 1].pos == Pos::ADJ || nominal(toks[j + 1])))
      ++j;
    while (eligible(j) && toks[j].pos == Pos::ADJ && !quantifier_words().count(lower_of(toks[j])))
      ++j;
    int nouns_begin = j;
    while (eligible(j) && nominal(toks[j])) ++j;
    if (j > nouns_begin) {
      int id = static_cast<int>(chunks.size());
      for (int k = i; k < j; ++k) owner[k] = id;
      chunks.push_back({ChunkKind::EC, {{i, j}}, 0, surface_of(toks, {{i, j}})});
      i = j;
    } else {
      ++i;
    }
  }

  // Predicate chunks.
  for (int v = 0; v < n; ++v) {
    const auto& t = toks[v];
    if (t.pos != Pos::VERB || owner[v] >= 0 || literal[v]) continue;
    if (light_verbs().count(lower_of(t))) continue;
    int begin = v, end = v + 1;
    while (begin > 0 && owner[begin - 1] < 0 && toks[begin - 1].pos == Pos::AUX &&
           aux_relation(toks[begin - 1].deprel) && toks[begin - 1].head == v)
      --begin;
    if (end < n && owner[end] < 0 && toks[end].pos == Pos::PART && toks[end].head == v) {
      std::string l = lower_of(toks[end]);
      if (l != "to" && l != "not" && l != "n't") ++end;
    }
    if (end < n && owner[end] < 0 && toks[end].pos == Pos::ADP && toks[end].head == v &&
        !literal[end])
      ++end;
    int id = static_cast<int>(chunks.size());
    for (int k = begin; k < end; ++k) owner[k] = id;
    Chunk pc{ChunkKind::PC, {{begin, end}}, 0, ""};
    // Auxiliaries linked into the chunk from elsewhere.
    for (int a = 0; a < n; ++a) {
      if (owner[a] >= 0 || toks[a].pos != Pos::AUX || !aux_relation(toks[a].deprel)) continue;
      bool into = false;
      for (const auto& r : pc.spans)
        if (toks[a].head >= r.begin && toks[a].head < r.end) into = true;
      if (!into) continue;
      owner[a] = id;
      pc.spans.push_back({a, a + 1});
    }
    std::sort(pc.spans.begin(), pc.spans.end(),
              [](const TokenRange& x, const TokenRange& y) { return x.begin < y.begin; });
    std::vector<TokenRange> merged;
    for (const auto& r : pc.spans) {
      if (!merged.empty() && merged.back().end == r.begin)
        merged.back().end = r.end;
      else
        merged.push_back(r);
    }
    pc.spans = std::move(merged);
    pc.surface_text = surface_of(toks, pc.spans);
    chunks.push_back(std::move(pc));
    v = end - 1;
  }

  std::stable_sort(chunks.begin(), chunks.end(), [](const Chunk& a, const Chunk& b) {
    return a.spans.front().begin < b.spans.front().begin;
  });
  int ec = 0, pc = 0;
  for (auto& c : chunks) c.ordinal = c.kind == ChunkKind::EC ? ++ec : ++pc;
  return chunks;
}

AnnotatedSentence analyze(std::string cq_id, std::vector<TokenAnnotation> tokens) {
  AnnotatedSentence s;
  s.cq_id = std::move(cq_id);
  s.tokens = std::move(tokens);
  s.chunks = identify_chunks(s.tokens);
  return s;
}

std::string to_pattern_candidate(const AnnotatedSentence& sentence) {
  const auto& toks = sentence.tokens;
  int n = static_cast<int>(toks.size());
  while (n > 0 && toks[n - 1].pos == Pos::PUNCT && !toks[n - 1].placeholder &&
         (toks[n - 1].surface == "?" || toks[n - 1].surface == "." || toks[n - 1].surface == "!"))
    --n;

  std::vector<const Chunk*> at(toks.size(), nullptr);
  std::vector<bool> span_start(toks.size(), false);
  for (const auto& c : sentence.chunks)
    for (const auto& r : c.spans) {
      for (int i = r.begin; i < r.end; ++i) at[i] = &c;
      span_start[r.begin] = true;
    }

  std::string out;
  bool space = false;
  for (int i = 0; i < n;) {
    std::string piece;
    int last = i;
    if (at[i]) {
      const Chunk* c = at[i];
      piece = (c->kind == ChunkKind::EC ? "EC" : "PC") + std::to_string(c->ordinal);
      int j = i + 1;
      while (j < n && at[j] == c && !span_start[j]) ++j;
      last = j - 1;
      i = j;
    } else {
      piece = toks[i].surface;
      ++i;
    }
    if (!out.empty() && space) out += ' ';
    out += piece;
    space = toks[last].space_after;
  }
  return out;
}

Overrides load_overrides(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AnnotationError(path.string() + ": cannot open overrides file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw AnnotationError(path.string() + ": invalid JSON: " + e.what());
  }
  if (!j.is_object()) throw AnnotationError(path.string() + ": expected an object of id -> pattern");
  Overrides out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw AnnotationError(path.string() + ": pattern for '" + k + "' must be a string");
    out[k] = v.get<std::string>();
  }
  return out;
}

}  // namespace cqkit::ling
