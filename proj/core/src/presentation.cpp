#include "pmaps/presentation.hpp"

#include <cctype>
#include <sstream>

#include "pmaps/errors.hpp"

namespace pmaps {

// --- Word -----------------------------------------------------------------

Word::Word(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw ContractViolation("letter 0 is not a generator");
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

Word Word::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& x : out) x = -x;
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::power(long long n) const {
  Word base = n < 0 ? inverse() : *this;
  if (n < 0) n = -n;
  std::vector<int> out;
  out.reserve(base.length() * static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  }
  return Word(std::move(out));
}

Word Word::conjugated_by(const Word& v) const { return v.inverse() * *this * v; }

Word operator*(const Word& a, const Word& b) {
  std::vector<int> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

Word commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

const MapDecl* GroupFile::find_map(std::string_view map_name) const {
  for (const auto& m : maps) {
    if (m.name == map_name) return &m;
  }
  return nullptr;
}

// --- Lexer ----------------------------------------------------------------

namespace {

enum class Tok { ident, integer, punct, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> lex_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::ident, std::string(line.substr(start, i - start)), start + 1});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      out.push_back({Tok::integer, std::string(line.substr(start, i - start)), start + 1});
    } else if (std::string_view(",=^*()[]:-").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), start + 1});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_no,
                       start + 1);
    }
  }
  out.push_back({Tok::end, "", line.size() + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no,
             const std::vector<std::string>& symbols)
      : toks_(std::move(tokens)), line_(line_no), symbols_(symbols) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::end; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, peek().column);
  }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t column) const {
    throw ParseError(msg, line_, column);
  }

  bool accept(std::string_view punct) {
    if (peek().kind == Tok::punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(std::string_view punct) {
    if (!accept(punct)) fail("expected '" + std::string(punct) + "'");
  }

  std::string ident() {
    if (peek().kind != Tok::ident) fail("expected identifier");
    return toks_[pos_++].text;
  }

  void keyword(std::string_view kw) {
    if (peek().kind != Tok::ident || peek().text != kw) {
      fail("expected '" + std::string(kw) + "'");
    }
    ++pos_;
  }

  long long integer(bool allow_sign, long long limit) {
    bool negative = allow_sign && accept("-");
    if (peek().kind != Tok::integer) fail("expected integer");
    const Token& t = toks_[pos_];
    long long value = 0;
    for (char c : t.text) {
      value = value * 10 + (c - '0');
      if (value > limit) fail("exponent overflow");
    }
    ++pos_;
    return negative ? -value : value;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected '" + peek().text + "'");
  }

  Word word() {
    Word w = factor();
    while (accept("*")) w = checked(w * factor());
    return w;
  }

 private:
  Word checked(Word w) const {
    if (w.length() > kMaxWordLength) fail("exponent overflow");
    return w;
  }

  Word factor() {
    Word w = atom();
    while (accept("^")) {
      if (peek().kind == Tok::integer ||
          (peek().kind == Tok::punct && peek().text == "-")) {
        long long n = integer(true, kMaxExponent);
        long long len = static_cast<long long>(w.length());
        if (len * (n < 0 ? -n : n) > static_cast<long long>(kMaxWordLength)) {
          fail("exponent overflow");
        }
        w = w.power(n);
      } else {
        w = checked(w.conjugated_by(atom()));
      }
    }
    return w;
  }

  Word atom() {
    const Token& t = peek();
    if (t.kind == Tok::ident) {
      for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] == t.text) {
          ++pos_;
          return Word::generator(i);
        }
      }
      fail("unknown identifier '" + t.text + "'");
    }
    if (t.kind == Tok::integer && t.text == "1") {
      ++pos_;
      return Word();
    }
    if (accept("(")) {
      Word w = word();
      expect(")");
      return w;
    }
    if (accept("[")) {
      Word a = word();
      expect(",");
      Word b = word();
      expect("]");
      return checked(commutator(a, b));
    }
    fail("expected generator, '1', '(' or '['");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  const std::vector<std::string>& symbols_;
};

const char* mode_keyword(InputMode m) {
  switch (m) {
    case InputMode::presentation: return "gens";
    case InputMode::permutation: return "perm";
    case InputMode::matrix: return "mat";
  }
  return "";
}

}  // namespace

// --- Parser ---------------------------------------------------------------

GroupFile parse_group_file(std::string_view text) {
  GroupFile file;
  bool have_mode = false;
  bool have_name = false;
  bool have_gens = false;
  std::size_t line_no = 0;

  auto set_mode = [&](InputMode m, std::size_t column) {
    if (have_mode && file.mode != m) {
      throw ParseError(std::string("'") + mode_keyword(m) +
                           "' cannot be mixed with '" + mode_keyword(file.mode) + "'",
                       line_no, column);
    }
    have_mode = true;
    file.mode = m;
  };
  auto declare = [&](const std::string& name, std::size_t column) {
    for (const auto& s : file.symbols) {
      if (s == name) throw ParseError("duplicate symbol '" + name + "'", line_no, column);
    }
    file.symbols.push_back(name);
  };

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = stop + 1;

    LineParser p(lex_line(line, line_no), line_no, file.symbols);
    if (p.at_end()) continue;
    std::size_t kw_col = p.peek().column;
    std::string kw = p.ident();

    if (kw == "group") {
      if (have_name) p.fail_at("duplicate 'group' line", kw_col);
      file.name = p.ident();
      have_name = true;
      p.expect_end();
    } else if (kw == "gens") {
      set_mode(InputMode::presentation, kw_col);
      if (have_gens) p.fail_at("duplicate 'gens' line", kw_col);
      have_gens = true;
      do {
        std::size_t col = p.peek().column;
        std::string name = p.ident();
        declare(name, col);
        file.presentation.generator_names.push_back(name);
      } while (p.accept(","));
      p.expect_end();
    } else if (kw == "rel") {
      if (!have_gens) p.fail_at("'rel' before 'gens'", kw_col);
      Word w = p.word();
      if (p.accept("=")) w = w * p.word().inverse();
      p.expect_end();
      if (w.empty()) p.fail_at("relation reduces to the identity", kw_col);
      file.presentation.relators.push_back(std::move(w));
    } else if (kw == "perm") {
      set_mode(InputMode::permutation, kw_col);
      PermDecl d;
      std::size_t col = p.peek().column;
      d.name = p.ident();
      p.expect("=");
      bool any = false;
      while (p.accept("(")) {
        any = true;
        std::vector<Point> cycle;
        while (!p.accept(")")) {
          std::size_t pcol = p.peek().column;
          long long v = p.integer(false, 1'000'000);
          if (v < 1) p.fail_at("points are numbered from 1", pcol);
          for (Point q : cycle) {
            if (q == v) p.fail_at("point repeated in cycle", pcol);
          }
          cycle.push_back(static_cast<Point>(v));
        }
        if (!cycle.empty()) d.cycles.push_back(std::move(cycle));
      }
      if (!any) p.fail("expected cycle");
      p.expect_end();
      // disjointness across cycles
      std::vector<Point> seen;
      for (const auto& c : d.cycles) {
        for (Point q : c) {
          for (Point s : seen) {
            if (s == q) p.fail_at("cycles of '" + d.name + "' are not disjoint", col);
          }
          seen.push_back(q);
        }
      }
      declare(d.name, col);
      file.perms.push_back(std::move(d));
    } else if (kw == "mat") {
      set_mode(InputMode::matrix, kw_col);
      MatDecl d;
      std::size_t col = p.peek().column;
      d.name = p.ident();
      p.expect("=");
      p.expect("[");
      for (int row = 0; row < 2; ++row) {
        if (row) p.expect(",");
        p.expect("[");
        d.entries[row * 2] = p.integer(true, 1'000'000'000);
        p.expect(",");
        d.entries[row * 2 + 1] = p.integer(true, 1'000'000'000);
        p.expect("]");
      }
      p.expect("]");
      p.keyword("mod");
      std::size_t pcol = p.peek().column;
      d.prime = static_cast<std::uint64_t>(p.integer(false, 1'000'000));
      if (!file.mats.empty() && file.mats.front().prime != d.prime) {
        p.fail_at("all matrices must use the same modulus", pcol);
      }
      p.expect_end();
      declare(d.name, col);
      file.mats.push_back(std::move(d));
    } else if (kw == "map") {
      if (!have_mode) p.fail_at("'map' before any generators", kw_col);
      MapDecl m;
      std::size_t col = p.peek().column;
      m.name = p.ident();
      if (file.find_map(m.name)) p.fail_at("duplicate map '" + m.name + "'", col);
      p.expect(":");
      std::size_t kcol = p.peek().column;
      std::string kind = p.ident();
      if (kind == "oriented") {
        m.kind = MapKind::oriented;
      } else if (kind == "flagged") {
        m.kind = MapKind::flagged;
      } else {
        p.fail_at("map kind must be 'oriented' or 'flagged'", kcol);
      }
      std::optional<Word> r, l;
      while (!p.at_end()) {
        std::size_t fcol = p.peek().column;
        std::string field = p.ident();
        p.expect("=");
        Word w = p.word();
        std::optional<Word>* slot = nullptr;
        if (field == "r") slot = &r;
        if (field == "l") slot = &l;
        if (field == "t" && m.kind == MapKind::flagged) slot = &m.t;
        if (!slot) p.fail_at("unexpected field '" + field + "'", fcol);
        if (slot->has_value()) p.fail_at("duplicate field '" + field + "'", fcol);
        *slot = std::move(w);
      }
      if (!r || !l || (m.kind == MapKind::flagged && !m.t)) {
        p.fail(m.kind == MapKind::flagged ? "flagged map needs t=, r= and l="
                                          : "oriented map needs r= and l=");
      }
      m.r = std::move(*r);
      m.l = std::move(*l);
      file.maps.push_back(std::move(m));
    } else {
      p.fail_at("unknown keyword '" + kw + "'", kw_col);
    }
  }
  if (!have_mode) throw ParseError("no generators declared", line_no, 1);
  return file;
}

// --- Printer --------------------------------------------------------------

std::string print_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  const auto& xs = w.letters();
  bool first = true;
  for (std::size_t i = 0; i < xs.size();) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    long long run = static_cast<long long>(j - i);
    if (!first) os << '*';
    first = false;
    int x = xs[i];
    os << names.at(static_cast<std::size_t>(x > 0 ? x : -x) - 1);
    long long e = x > 0 ? run : -run;
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

std::string print_group_file(const GroupFile& file) {
  std::ostringstream os;
  const auto& names = file.symbols;
  if (!file.name.empty()) os << "group " << file.name << '\n';
  switch (file.mode) {
    case InputMode::presentation:
      os << "gens ";
      for (std::size_t i = 0; i < file.presentation.generator_names.size(); ++i) {
        os << (i ? "," : "") << file.presentation.generator_names[i];
      }
      os << '\n';
      for (const auto& r : file.presentation.relators) {
        os << "rel " << print_word(r, names) << '\n';
      }
      break;
    case InputMode::permutation:
      for (const auto& p : file.perms) {
        os << "perm " << p.name << " =";
        if (p.cycles.empty()) os << " ()";
        for (const auto& c : p.cycles) {
          os << " (";
          for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
          os << ')';
        }
        os << '\n';
      }
      break;
    case InputMode::matrix:
      for (const auto& m : file.mats) {
        os << "mat " << m.name << " = [[" << m.entries[0] << ',' << m.entries[1]
           << "],[" << m.entries[2] << ',' << m.entries[3] << "]] mod " << m.prime
           << '\n';
      }
      break;
  }
  for (const auto& m : file.maps) {
    os << "map " << m.name << " : ";
    if (m.kind == MapKind::flagged) {
      os << "flagged t=" << print_word(*m.t, names) << ' ';
    } else {
      os << "oriented ";
    }
    os << "r=" << print_word(m.r, names) << " l=" << print_word(m.l, names) << '\n';
  }
  return os.str();
}

}  // namespace pmaps
