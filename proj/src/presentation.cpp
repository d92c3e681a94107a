#include "pg/presentation.hpp"

#include <cctype>
#include <climits>
#include <sstream>

#include "pg/error.hpp"

namespace pg {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.exponent = -l.exponent;
  return out;
}

namespace {

class RelationParser {
 public:
  RelationParser(const std::vector<std::string>& gens, std::string_view text, std::size_t line)
      : gens_(gens), text_(text), line_(line) {}

  void parse_into(std::vector<Word>& relators) {
    while (true) {
      parse_relation(relators);
      skip_space();
      if (at_end()) return;
      if (peek() != ',') syntax("expected ',' or end of line");
      ++pos_;
    }
  }

 private:
  void parse_relation(std::vector<Word>& relators) {
    std::size_t start = pos_;
    Word lhs = parse_product();
    skip_space();
    if (peek() != '=') {
      push(relators, std::move(lhs), start);
      return;
    }
    while (peek() == '=') {
      ++pos_;
      Word rhs = parse_product();
      Word rel = lhs;
      Word rinv = inverse(rhs);
      rel.insert(rel.end(), rinv.begin(), rinv.end());
      push(relators, std::move(rel), start);
      lhs = std::move(rhs);
      skip_space();
    }
  }

  void push(std::vector<Word>& relators, Word w, std::size_t start) {
    w = free_reduce(std::move(w));
    if (w.empty()) {
      throw Error(ErrorCode::EmptyRelator, where(start) + ": relation reduces to the identity");
    }
    relators.push_back(std::move(w));
  }

  // product := (factor | '*')*
  Word parse_product() {
    Word out;
    bool any = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c == '*') {
        ++pos_;
        continue;
      }
      if (c == '(' || c == '1' || std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        Word f = parse_factor();
        out.insert(out.end(), f.begin(), f.end());
        any = true;
        continue;
      }
      break;
    }
    if (!any) syntax("expected a word");
    return out;
  }

  // factor := primary ('^' integer)*; an exponent binds to the last letter
  // of a run such as `xa`.
  Word parse_factor() {
    Word prefix;
    Word base;
    char c = peek();
    if (c == '(') {
      ++pos_;
      base = parse_product();
      skip_space();
      if (peek() != ')') syntax("expected ')'");
      ++pos_;
    } else if (c == '1') {
      ++pos_;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) syntax("unexpected digit");
    } else {
      Word run = parse_run();
      base.push_back(run.back());
      run.pop_back();
      prefix = std::move(run);
    }
    skip_space();
    while (peek() == '^') {
      ++pos_;
      skip_space();
      long long k = parse_integer();
      base = raise(base, k);
      skip_space();
    }
    prefix.insert(prefix.end(), base.begin(), base.end());
    return prefix;
  }

  Word parse_run() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string_view run = text_.substr(start, pos_ - start);
    Word out;
    std::size_t i = 0;
    while (i < run.size()) {
      std::size_t best_len = 0;
      std::uint32_t best = 0;
      for (std::uint32_t g = 0; g < gens_.size(); ++g) {
        const std::string& name = gens_[g];
        if (name.size() > best_len && run.substr(i, name.size()) == name) {
          best_len = name.size();
          best = g;
        }
      }
      if (best_len == 0) {
        std::size_t end = i + 1;
        while (end < run.size() && std::isdigit(static_cast<unsigned char>(run[end]))) ++end;
        throw Error(ErrorCode::UnknownGenerator, "'" + std::string(run.substr(i, end - i)) +
                                                     "' at " + where(start + i));
      }
      out.push_back({best, 1});
      i += best_len;
    }
    return out;
  }

  long long parse_integer() {
    std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) syntax("expected an integer exponent");
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) {
        pos_ = start;
        syntax("exponent too large");
      }
      ++pos_;
    }
    return neg ? -v : v;
  }

  static Word raise(const Word& w, long long k) {
    Word unit = k < 0 ? inverse(w) : w;
    Word out;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::string where(std::size_t pos) const {
    return "line " + std::to_string(line_) + ", column " + std::to_string(pos + 1);
  }
  [[noreturn]] void syntax(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, where(pos_) + ": " + msg);
  }

  const std::vector<std::string>& gens_;
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": expected 'gens:' or 'rel:'");
    }
    std::string_view key = trim(line.substr(0, colon));
    std::string_view body = line.substr(colon + 1);
    if (key == "gens") {
      if (have_gens) throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": duplicate 'gens:'");
      have_gens = true;
      std::string names(body);
      for (char& c : names)
        if (c == ',') c = ' ';
      std::istringstream in(names);
      std::string name;
      while (in >> name) {
        for (char c : name) {
          if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": bad generator name '" + name + "'");
          }
        }
        if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') {
          throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": bad generator name '" + name + "'");
        }
        for (const auto& g : p.generators)
          if (g == name) throw Error(ErrorCode::SyntaxError, "duplicate generator '" + name + "'");
        p.generators.push_back(name);
      }
    } else if (key == "rel") {
      if (!have_gens) throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": 'rel:' before 'gens:'");
      // Parse against the untrimmed body so columns refer to the line.
      std::size_t offset = static_cast<std::size_t>(body.data() - raw.data());
      std::string padded(offset, ' ');
      padded.append(body);
      RelationParser parser(p.generators, padded, line_no);
      parser.parse_into(p.relators);
    } else {
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": unknown directive '" + std::string(key) + "'");
    }
  }
  if (!have_gens) throw Error(ErrorCode::SyntaxError, "missing 'gens:' line");
  return p;
}

std::string format_word(const Presentation& p, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += p.generators[w[i].generator];
    if (w[i].exponent < 0) out += "^-1";
  }
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generators) out += " " + g;
  out += '\n';
  for (const auto& r : p.relators) out += "rel: " + format_word(p, r) + '\n';
  return out;
}

Element evaluate(const Group& g, std::span<const Element> gens, const Word& w) {
  Element e = 0;
  for (const Letter& l : w) e = g.mul(e, l.exponent > 0 ? gens[l.generator] : g.inverse(gens[l.generator]));
  return e;
}

}  // namespace pg
