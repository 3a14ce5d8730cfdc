#include "efpoly/model_io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "efpoly/errors.hpp"

namespace efpoly {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const std::string& msg, const Line& line, const Token& tok) {
  throw ParseError(msg, line.number, tok.column);
}

Rational number(const Line& line, const Token& tok) {
  const std::string& s = tok.text;
  try {
    if (auto dot = s.find('.'); dot != std::string::npos && s.find('/') == std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      if (digits.empty() || digits == "-") fail("malformed number '" + s + "'", line, tok);
      std::string den = "1" + std::string(s.size() - dot - 1, '0');
      return Rational::parse(digits + "/" + den);
    }
    return Rational::parse(s);
  } catch (const ParseError&) {
    fail("malformed number '" + s + "'", line, tok);
  }
}

RatVector numbers(const Line& line, std::size_t from, std::size_t to) {
  RatVector out;
  for (std::size_t i = from; i < to; ++i) out.push_back(number(line, line.tokens[i]));
  return out;
}

VarSpace declarations(const Line& line, std::set<std::string>& seen) {
  if (line.tokens.size() < 2) fail("expected at least one <class>:<count>", line, line.tokens[0]);
  VarSpace space;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const Token& t = line.tokens[i];
    const auto colon = t.text.find(':');
    if (colon == std::string::npos || colon == 0) fail("expected <class>:<count>, got '" + t.text + "'", line, t);
    const std::string cls = t.text.substr(0, colon);
    const std::string cnt = t.text.substr(colon + 1);
    if (cnt.empty() || cnt.find_first_not_of("0123456789") != std::string::npos || cnt.size() > 9)
      fail("bad count in '" + t.text + "'", line, t);
    const auto count = std::stoul(cnt);
    if (count == 0) fail("count must be positive in '" + t.text + "'", line, t);
    if (!seen.insert(cls).second) fail("duplicate class '" + cls + "'", line, t);
    space = space.concat(VarSpace::of_class(cls, count));
  }
  return space;
}

void expect_width(const Line& line, std::size_t got, std::size_t want, const Token& at) {
  if (got != want)
    fail("expected " + std::to_string(want) + " entries, got " + std::to_string(got), line, at);
}

Constraint row(const Line& line, std::size_t width) {
  std::optional<std::size_t> op;
  for (std::size_t i = 0; i < line.tokens.size(); ++i) {
    const auto& t = line.tokens[i].text;
    if (t == "<=" || t == ">=" || t == "=") {
      if (op) fail("second relation in one row", line, line.tokens[i]);
      op = i;
    }
  }
  if (!op) fail("row without <=, = or >=", line, line.tokens.back());
  if (*op + 2 != line.tokens.size()) fail("expected exactly one right-hand side", line, line.tokens[*op]);
  expect_width(line, *op, width, line.tokens[0]);
  const std::string& o = line.tokens[*op].text;
  const Sense s = o == "<=" ? Sense::LessEq : o == ">=" ? Sense::GreaterEq : Sense::Equal;
  return {numbers(line, 0, *op), s, number(line, line.tokens[*op + 1])};
}

std::string declare(const VarSpace& s) {
  std::string out;
  const auto classes = s.classes();
  std::size_t at = 0;
  for (const auto& cls : classes) {
    const std::size_t n = s.class_size(cls);
    for (std::size_t k = 0; k < n; ++k)
      if (s[at + k].cls != cls) throw PreconditionViolation("print_model: class '" + cls + "' is not contiguous");
    at += n;
    out += " " + cls + ":" + std::to_string(n);
  }
  return out;
}

std::string join(const RatVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].to_string();
  }
  return out;
}

void print_rows(std::ostringstream& os, const HPoly& p) {
  for (const auto& r : p.rows()) {
    os << join(r.coeffs) << (r.coeffs.empty() ? "" : " ") << (r.sense == Sense::Equal ? "=" : "<=") << ' '
       << r.rhs.to_string() << '\n';
  }
}

std::string names_comment(const VarSpace& s) {
  bool plain = true;
  for (const auto& c : s.classes()) plain = plain && VarSpace::of_class(c, s.class_size(c)) == s.subspace(s.positions_of_classes({c}));
  if (plain) return "";
  std::string out = "# order:";
  for (const auto& v : s.variables()) out += " " + v.name();
  return out + "\n";
}

}  // namespace

std::string ModelFile::kind() const {
  static const char* names[] = {"hpoly", "vpoly", "lp", "map", "augspec"};
  return names[body.index()];
}

ModelFile parse_model(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty model file", 1, 1);
  const Line& head = lines[0];
  const std::string kind = head.tokens[0].text;
  if (kind != "hpoly" && kind != "vpoly" && kind != "lp" && kind != "map" && kind != "augspec")
    fail("unknown model kind '" + kind + "'", head, head.tokens[0]);
  if (head.tokens.size() != 2) fail("expected '" + kind + " <name>'", head, head.tokens[0]);
  ModelFile m;
  m.name = head.tokens[1].text;

  std::size_t i = 1;
  std::optional<std::size_t> end_at;
  for (std::size_t k = 1; k < lines.size(); ++k)
    if (lines[k].tokens[0].text == "end") {
      end_at = k;
      break;
    }
  if (!end_at) {
    const Line& last = lines.back();
    throw ParseError("missing 'end'", last.number + 1, 1);
  }
  if (*end_at + 1 < lines.size()) fail("content after 'end'", lines[*end_at + 1], lines[*end_at + 1].tokens[0]);
  if (lines[*end_at].tokens.size() != 1) fail("'end' takes no arguments", lines[*end_at], lines[*end_at].tokens[1]);

  auto need = [&](const char* word) -> const Line& {
    if (i >= *end_at) fail(std::string("expected '") + word + "'", lines[*end_at], lines[*end_at].tokens[0]);
    const Line& l = lines[i];
    if (l.tokens[0].text != word) fail(std::string("expected '") + word + "'", l, l.tokens[0]);
    ++i;
    return l;
  };

  std::set<std::string> seen;
  if (kind == "hpoly" || kind == "lp") {
    const VarSpace space = declarations(need("vars"), seen);
    RatVector objective;
    if (kind == "lp") {
      const Line& obj = need("min");
      objective = numbers(obj, 1, obj.tokens.size());
      expect_width(obj, objective.size(), space.size(), obj.tokens[0]);
    }
    std::vector<Constraint> rows;
    for (; i < *end_at; ++i) rows.push_back(row(lines[i], space.size()));
    HPoly p(space, rows);
    if (kind == "lp")
      m.body = LpModel{std::move(objective), std::move(p)};
    else
      m.body = std::move(p);
    return m;
  }
  if (kind == "vpoly") {
    const VarSpace space = declarations(need("vars"), seen);
    std::vector<RatVector> verts;
    for (; i < *end_at; ++i) {
      const Line& l = lines[i];
      if (l.tokens[0].text != "vertex") fail("expected 'vertex'", l, l.tokens[0]);
      verts.push_back(numbers(l, 1, l.tokens.size()));
      expect_width(l, verts.back().size(), space.size(), l.tokens[0]);
    }
    if (verts.empty()) fail("vpoly without vertices", lines[*end_at], lines[*end_at].tokens[0]);
    m.body = VPoly(space, std::move(verts));
    return m;
  }
  if (kind == "map") {
    const VarSpace from = declarations(need("from"), seen);
    std::set<std::string> seen_to;
    const VarSpace to = declarations(need("to"), seen_to);
    std::vector<RatVector> mat;
    RatVector offset;
    for (; i < *end_at; ++i) {
      const Line& l = lines[i];
      if (l.tokens[0].text == "offset") {
        if (!offset.empty()) fail("second offset line", l, l.tokens[0]);
        offset = numbers(l, 1, l.tokens.size());
        expect_width(l, offset.size(), to.size(), l.tokens[0]);
        continue;
      }
      if (!offset.empty()) fail("matrix row after offset", l, l.tokens[0]);
      mat.push_back(numbers(l, 0, l.tokens.size()));
      expect_width(l, mat.back().size(), from.size(), l.tokens[0]);
    }
    if (mat.size() != to.size())
      fail("expected " + std::to_string(to.size()) + " matrix rows, got " + std::to_string(mat.size()), lines[*end_at],
           lines[*end_at].tokens[0]);
    m.body = AffineMapSpec(from, to, RatMatrix::from_rows(mat, from.size()), offset);
    return m;
  }

  // augspec
  std::vector<RatVector> b1, b2;
  std::optional<RatVector> c1, c2;
  for (; i < *end_at; ++i) {
    const Line& l = lines[i];
    const std::string& w = l.tokens[0].text;
    RatVector v = numbers(l, 1, l.tokens.size());
    if (v.empty()) fail("'" + w + "' needs entries", l, l.tokens[0]);
    if (w == "b1") {
      if (!b1.empty()) expect_width(l, v.size(), b1[0].size(), l.tokens[0]);
      b1.push_back(std::move(v));
    } else if (w == "b2") {
      if (!b2.empty()) expect_width(l, v.size(), b2[0].size(), l.tokens[0]);
      b2.push_back(std::move(v));
    } else if (w == "c1" || w == "c2") {
      auto& slot = w == "c1" ? c1 : c2;
      if (slot) fail("second '" + w + "' line", l, l.tokens[0]);
      slot = std::move(v);
    } else {
      fail("expected b1, b2, c1 or c2", l, l.tokens[0]);
    }
  }
  const Line& last = lines[*end_at];
  if (b1.empty() || b2.empty() || !c1 || !c2) fail("augspec needs b1, b2, c1 and c2", last, last.tokens[0]);
  if (b1.size() != b2.size()) fail("b1 and b2 need the same number of rows", last, last.tokens[0]);
  auto diag = [](const RatVector& d) {
    RatMatrix c(d.size(), d.size());
    for (std::size_t k = 0; k < d.size(); ++k) c(k, k) = d[k];
    return c;
  };
  m.body = AugmentationSpec{RatMatrix::from_rows(b1), RatMatrix::from_rows(b2), diag(*c1), diag(*c2)};
  return m;
}

std::string print_model(const ModelFile& m) {
  std::ostringstream os;
  os << m.kind() << ' ' << m.name << '\n';
  if (const auto* p = std::get_if<HPoly>(&m.body)) {
    os << names_comment(p->space()) << "vars" << declare(p->space()) << '\n';
    print_rows(os, *p);
  } else if (const auto* v = std::get_if<VPoly>(&m.body)) {
    os << names_comment(v->space()) << "vars" << declare(v->space()) << '\n';
    for (const auto& x : v->vertices()) os << "vertex " << join(x) << '\n';
  } else if (const auto* lp = std::get_if<LpModel>(&m.body)) {
    os << names_comment(lp->constraints.space()) << "vars" << declare(lp->constraints.space()) << '\n';
    os << "min " << join(lp->objective) << '\n';
    print_rows(os, lp->constraints);
  } else if (const auto* map = std::get_if<AffineMapSpec>(&m.body)) {
    os << "from" << declare(map->domain()) << '\n' << "to" << declare(map->codomain()) << '\n';
    for (std::size_t r = 0; r < map->matrix().rows(); ++r) os << join(map->matrix().row(r)) << '\n';
    if (!map->is_linear()) os << "offset " << join(map->offset()) << '\n';
  } else {
    const auto& s = std::get<AugmentationSpec>(m.body);
    for (std::size_t r = 0; r < s.b1.rows(); ++r) os << "b1 " << join(s.b1.row(r)) << '\n';
    for (std::size_t r = 0; r < s.b2.rows(); ++r) os << "b2 " << join(s.b2.row(r)) << '\n';
    auto diag = [](const RatMatrix& c) {
      RatVector d(c.rows());
      for (std::size_t k = 0; k < c.rows(); ++k) d[k] = c(k, k);
      return d;
    };
    os << "c1 " << join(diag(s.c1)) << '\n' << "c2 " << join(diag(s.c2)) << '\n';
  }
  os << "end\n";
  return os.str();
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

namespace {

template <class T>
T expect(const ModelFile& m, const char* kind) {
  if (const auto* p = std::get_if<T>(&m.body)) return *p;
  throw ParseError("expected a " + std::string(kind) + " model, got " + m.kind(), 1, 1);
}

}  // namespace

HPoly expect_hpoly(const ModelFile& m) { return expect<HPoly>(m, "hpoly"); }
VPoly expect_vpoly(const ModelFile& m) { return expect<VPoly>(m, "vpoly"); }
LpModel expect_lp(const ModelFile& m) { return expect<LpModel>(m, "lp"); }
AffineMapSpec expect_map(const ModelFile& m) { return expect<AffineMapSpec>(m, "map"); }
AugmentationSpec expect_augspec(const ModelFile& m) { return expect<AugmentationSpec>(m, "augspec"); }

}  // namespace efpoly
