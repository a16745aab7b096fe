#include <charconv>
#include <set>
#include <sstream>
#include <utility>

#include "pcw/errors.hpp"
#include "pcw/pcgroup.hpp"

namespace pcw {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& what) {
  throw InvalidInput("syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + what);
}

bool parse_long(std::string_view s, long& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// "gK^E" or "gK"; K is 1-based.
bool parse_atom(std::string_view s, Letter& out) {
  if (s.size() < 2 || s[0] != 'g') return false;
  std::size_t caret = s.find('^');
  long k = 0;
  long e = 1;
  if (!parse_long(s.substr(1, caret == std::string_view::npos ? s.npos : caret - 1), k))
    return false;
  if (caret != std::string_view::npos && !parse_long(s.substr(caret + 1), e)) return false;
  if (k < 1) return false;
  out = {static_cast<std::size_t>(k - 1), e};
  return true;
}

Word parse_word_tokens(const std::vector<Token>& toks, std::size_t from, std::size_t line) {
  Word w;
  if (from >= toks.size()) fail(line, toks.empty() ? 1 : toks.back().column, "missing word");
  if (toks.size() == from + 1 && toks[from].text == "1") return w;
  for (std::size_t t = from; t < toks.size(); ++t) {
    Letter l;
    if (!parse_atom(toks[t].text, l))
      fail(line, toks[t].column, "expected atom gK^E, got '" + std::string(toks[t].text) + "'");
    if (l.exp != 0) w.push_back(l);
  }
  return w;
}

std::size_t parse_index(const Token& t, std::size_t n, std::size_t line) {
  long v = 0;
  if (!parse_long(t.text, v)) fail(line, t.column, "expected generator index");
  if (v < 1 || static_cast<std::size_t>(v) > n)
    fail(line, t.column, "generator index " + std::string(t.text) + " out of range 1.." +
                             std::to_string(n));
  return static_cast<std::size_t>(v - 1);
}

}  // namespace

Presentation parse_presentation(std::string_view source) {
  Presentation p;
  bool have_name = false;
  bool have_orders = false;
  std::set<std::size_t> seen_pow;
  std::set<std::pair<std::size_t, std::size_t>> seen_conj;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    std::size_t end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto toks = tokenize(line);
    if (toks.empty() || toks[0].text[0] == '#') continue;
    std::string_view kw = toks[0].text;

    if (kw == "name") {
      if (have_name) fail(line_no, toks[0].column, "duplicate name line");
      if (toks.size() != 2) fail(line_no, toks[0].column, "expected: name <label>");
      p.name = std::string(toks[1].text);
      have_name = true;
    } else if (kw == "orders") {
      if (!have_name) fail(line_no, toks[0].column, "orders before name");
      if (have_orders) fail(line_no, toks[0].column, "duplicate orders line");
      if (toks.size() < 2) fail(line_no, toks[0].column, "no relative orders given");
      std::vector<int> orders;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        long r = 0;
        if (!parse_long(toks[t].text, r) || r < 2 || r > 1'000'000)
          fail(line_no, toks[t].column, "relative order must be an integer >= 2");
        orders.push_back(static_cast<int>(r));
      }
      p = Presentation(p.name, std::move(orders));
      have_orders = true;
    } else if (kw == "pow") {
      if (!have_orders) fail(line_no, toks[0].column, "pow before orders");
      if (toks.size() < 4 || toks[2].text != "=")
        fail(line_no, toks[0].column, "expected: pow i = <word>");
      std::size_t i = parse_index(toks[1], p.rank(), line_no);
      if (!seen_pow.insert(i).second) fail(line_no, toks[1].column, "duplicate pow relation");
      p.powers[i] = parse_word_tokens(toks, 3, line_no);
    } else if (kw == "conj") {
      if (!have_orders) fail(line_no, toks[0].column, "conj before orders");
      if (toks.size() < 5 || toks[3].text != "=")
        fail(line_no, toks[0].column, "expected: conj j i = <word>");
      std::size_t j = parse_index(toks[1], p.rank(), line_no);
      std::size_t i = parse_index(toks[2], p.rank(), line_no);
      if (i >= j) fail(line_no, toks[2].column, "conj j i requires i < j");
      if (!seen_conj.insert({j, i}).second)
        fail(line_no, toks[1].column, "duplicate conj relation");
      p.conjugate(j, i) = parse_word_tokens(toks, 4, line_no);
    } else {
      fail(line_no, toks[0].column, "unknown keyword '" + std::string(kw) + "'");
    }
  }
  if (!have_name) throw InvalidInput("syntax error: missing 'name' line");
  if (!have_orders) throw InvalidInput("syntax error: missing 'orders' line");

  ConsistencyResult r = is_consistent(p);
  if (!r.consistent) {
    std::string msg = "presentation '" + p.name + "' is inconsistent; failing overlap";
    msg += r.failing_overlaps.size() > 1 ? "s: " : ": ";
    for (std::size_t i = 0; i < r.failing_overlaps.size(); ++i)
      msg += (i ? ", " : "") + r.failing_overlaps[i];
    throw InvalidInput(msg);
  }
  return p;
}

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += "g" + std::to_string(w[k].gen + 1) + "^" + std::to_string(w[k].exp);
  }
  return out;
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "name " << p.name << "\norders";
  for (int r : p.orders) os << ' ' << r;
  os << '\n';
  for (std::size_t i = 0; i < p.rank(); ++i)
    if (!p.powers[i].empty()) os << "pow " << i + 1 << " = " << render_word(p.powers[i]) << '\n';
  for (std::size_t j = 0; j < p.rank(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Word& w = p.conjugate(j, i);
      if (w == Word{{j, 1}}) continue;
      os << "conj " << j + 1 << ' ' << i + 1 << " = " << render_word(w) << '\n';
    }
  return os.str();
}

Word parse_word(std::string_view text, std::size_t rank) {
  auto toks = tokenize(text);
  Word w;
  if (toks.empty()) throw InvalidInput("empty word");
  if (toks.size() == 1 && toks[0].text == "1") return w;
  for (const auto& t : toks) {
    Letter l;
    if (!parse_atom(t.text, l))
      throw InvalidInput("bad word atom '" + std::string(t.text) + "' at column " +
                         std::to_string(t.column));
    if (l.gen >= rank)
      throw InvalidInput("generator g" + std::to_string(l.gen + 1) + " out of range");
    if (l.exp != 0) w.push_back(l);
  }
  return w;
}

}  // namespace pcw
