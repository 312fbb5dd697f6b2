#include "forge/io.hpp"

#include <fstream>
#include <sstream>

namespace forge {

namespace {

// ---------------------------------------------------------------------------
// Lexer for the exact-algebra grammar.  Tokens: integers, identifiers, and
// the single-character symbols + - * / ^ ( ).
struct Tok {
  enum Kind { Num, Name, Sym, End } kind = End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Tok& peek() const { return tok_; }
  Tok take() {
    Tok t = tok_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg, const Tok& at) const {
    throw ParseError(msg, at.line, at.col);
  }

private:
  void advance() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' ||
                                s_[pos_] == '\n' || s_[pos_] == '\r')) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_ = {Tok::End, "", line_, col_};
    if (pos_ >= s_.size()) return;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      tok_.kind = Tok::Num;
      tok_.text = s_.substr(b, pos_ - b);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      tok_.kind = Tok::Name;
      tok_.text = s_.substr(b, pos_ - b);
    } else if (std::string("+-*/^()").find(c) != std::string::npos) {
      tok_.kind = Tok::Sym;
      tok_.text = std::string(1, c);
      ++pos_;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }
    col_ += static_cast<int>(tok_.text.size());
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Tok tok_;
};

bool is_sym(const Tok& t, char c) { return t.kind == Tok::Sym && t.text[0] == c; }

// ---------------------------------------------------------------------------
// Recursive-descent parser over one lexer.  Polynomial coefficients and form
// terms share the factor/term productions.
class TextParser {
public:
  TextParser(RingPtr ring, const std::string& text)
      : ring_(std::move(ring)), lex_(text) {}

  LaurentPoly poly_all() {
    LaurentPoly p = poly_expr(false);
    expect_end();
    return p;
  }

  DiffForm form_all(int degree) {
    for (const std::string& v : ring_->vars)
      if (ring_->var_index("d" + v) >= 0)
        throw ParseError("ring has both '" + v + "' and 'd" + v +
                         "'; the form grammar cannot distinguish coefficients "
                         "from basis covectors");
    DiffForm acc(ring_, degree);
    if (lex_.peek().kind == Tok::Num && lex_.peek().text == "0") {
      lex_.take();
      if (lex_.peek().kind == Tok::End) return acc;
      lex_.fail("unexpected input after '0'", lex_.peek());
    }
    Rational sign = 1;
    if (is_sym(lex_.peek(), '-')) {
      lex_.take();
      sign = -1;
    } else if (is_sym(lex_.peek(), '+')) {
      lex_.take();
    }
    acc += form_term(degree, sign);
    while (lex_.peek().kind == Tok::Sym &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      const Tok op = lex_.take();
      acc += form_term(degree, op.text == "-" ? -1 : 1);
    }
    expect_end();
    return acc;
  }

private:
  void expect_end() {
    if (lex_.peek().kind != Tok::End)
      lex_.fail("unexpected trailing input '" + lex_.peek().text + "'", lex_.peek());
  }

  Rational rational_from(const Tok& num) {
    Rational r(num.text.c_str());
    if (is_sym(lex_.peek(), '/')) {
      lex_.take();
      if (lex_.peek().kind != Tok::Num)
        lex_.fail("expected a denominator", lex_.peek());
      const Tok den = lex_.take();
      const Rational d(den.text.c_str());
      if (d == 0) lex_.fail("zero denominator", den);
      r /= d;
    }
    return r;
  }

  int exponent() { // after '^'
    bool neg = false;
    if (is_sym(lex_.peek(), '-')) {
      lex_.take();
      neg = true;
    }
    if (lex_.peek().kind != Tok::Num) lex_.fail("expected an exponent", lex_.peek());
    const Tok t = lex_.take();
    if (t.text.size() > 6) lex_.fail("exponent out of range", t);
    const int e = std::stoi(t.text);
    return neg ? -e : e;
  }

  // A single product of factors: rational constants and variable powers.
  LaurentPoly term(const Rational& sign) {
    LaurentPoly acc = LaurentPoly::constant(ring_, sign);
    bool any = false;
    for (;;) {
      const Tok t = lex_.peek();
      if (t.kind == Tok::Num) {
        acc = acc * rational_from(lex_.take());
      } else if (t.kind == Tok::Name) {
        const int i = ring_->var_index(t.text);
        if (i < 0) lex_.fail("unknown variable '" + t.text + "'", t);
        lex_.take();
        int e = 1;
        if (is_sym(lex_.peek(), '^')) {
          lex_.take();
          e = exponent();
        }
        try {
          acc *= LaurentPoly::variable(ring_, static_cast<std::size_t>(i), e);
        } catch (const std::domain_error& ex) {
          lex_.fail(ex.what(), t);
        }
      } else {
        lex_.fail("expected a term", t);
      }
      any = true;
      if (!is_sym(lex_.peek(), '*')) break;
      lex_.take();
    }
    (void)any;
    return acc;
  }

  LaurentPoly poly_expr(bool inside_parens) {
    Rational sign = 1;
    if (is_sym(lex_.peek(), '-')) {
      lex_.take();
      sign = -1;
    } else if (is_sym(lex_.peek(), '+')) {
      lex_.take();
    }
    LaurentPoly acc = term(sign);
    while (lex_.peek().kind == Tok::Sym &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      const Tok op = lex_.take();
      acc += term(op.text == "-" ? Rational(-1) : Rational(1));
    }
    if (inside_parens) {
      if (!is_sym(lex_.peek(), ')')) lex_.fail("expected ')'", lex_.peek());
      lex_.take();
    }
    return acc;
  }

  // True when the token is a basis covector d<var> (and not itself a ring
  // variable, which form_all has already ruled out for d-collisions).
  bool is_basis(const Tok& t) const {
    return t.kind == Tok::Name && t.text.size() >= 2 && t.text[0] == 'd' &&
           ring_->var_index(t.text.substr(1)) >= 0 && ring_->var_index(t.text) < 0;
  }

  DiffForm form_term(int degree, const Rational& sign) {
    LaurentPoly coeff = LaurentPoly::constant(ring_, sign);
    bool have_coeff = false;
    // The form printer joins terms with " + " and leaves negative coefficients
    // signed, so a term may open with its own sign ("... + -1/2*x dx^dz").
    while (is_sym(lex_.peek(), '-') || is_sym(lex_.peek(), '+'))
      if (lex_.take().text == "-") coeff = -coeff;
    if (is_sym(lex_.peek(), '(')) {
      lex_.take();
      coeff *= poly_expr(true);
      have_coeff = true;
    } else if (lex_.peek().kind == Tok::Num ||
               (lex_.peek().kind == Tok::Name && !is_basis(lex_.peek()))) {
      coeff *= term(1);
      have_coeff = true;
    }
    std::vector<int> idx;
    if (is_basis(lex_.peek())) {
      idx.push_back(ring_->var_index(lex_.take().text.substr(1)));
      while (is_sym(lex_.peek(), '^')) {
        lex_.take();
        const Tok t = lex_.peek();
        if (!is_basis(t)) lex_.fail("expected a basis covector after '^'", t);
        idx.push_back(ring_->var_index(lex_.take().text.substr(1)));
      }
    } else if (!have_coeff) {
      lex_.fail("expected a form term", lex_.peek());
    }
    if (static_cast<int>(idx.size()) != degree) {
      std::ostringstream msg;
      msg << "wedge arity " << idx.size() << " where a degree-" << degree
          << " form is expected";
      lex_.fail(msg.str(), lex_.peek());
    }
    return DiffForm::term(ring_, idx, coeff);
  }

  RingPtr ring_;
  Lexer lex_;
};

// ---------------------------------------------------------------------------
// JSON helpers.

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const std::string& where, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) schema_fail(where, "missing field '" + key + "'");
  return j.at(key);
}

std::string str_field(const Json& j, const std::string& where, const std::string& key) {
  const Json& v = field(j, where, key);
  if (!v.is_string()) schema_fail(where, "field '" + key + "' must be a string");
  return v.get<std::string>();
}

LaurentPoly poly_field(const RingPtr& ring, const Json& v, const std::string& where) {
  if (!v.is_string()) schema_fail(where, "expected a polynomial string");
  try {
    return parse_poly(ring, v.get<std::string>());
  } catch (const ParseError& e) {
    schema_fail(where, e.what());
  }
}

DiffForm form_field(const RingPtr& ring, int degree, const Json& v,
                    const std::string& where) {
  if (!v.is_string()) schema_fail(where, "expected a form string");
  try {
    return parse_form(ring, degree, v.get<std::string>());
  } catch (const ParseError& e) {
    schema_fail(where, e.what());
  }
}

Rational rational_field(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) schema_fail(where, "expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    schema_fail(where, e.what());
  }
}

PairKey pair_key(const Json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() ||
      !v[1].is_number_unsigned())
    schema_fail(where, "'pair' must be two chart indices");
  return {v[0].get<std::size_t>(), v[1].get<std::size_t>()};
}

RingMorphism substitution(const RingPtr& src, const RingPtr& dst, const Json& v,
                          const std::string& where) {
  if (!v.is_array() || v.size() != src->nvars())
    schema_fail(where, "substitution needs one image per source variable");
  RingMorphism m;
  m.src = src;
  m.dst = dst;
  for (std::size_t i = 0; i < v.size(); ++i)
    m.images.push_back(poly_field(dst, v[i], where + "[" + std::to_string(i) + "]"));
  return m;
}

Json substitution_json(const RingMorphism& m) {
  Json out = Json::array();
  for (const LaurentPoly& p : m.images) out.push_back(p.str());
  return out;
}

} // namespace

LaurentPoly parse_poly(const RingPtr& ring, const std::string& text) {
  return TextParser(ring, text).poly_all();
}

DiffForm parse_form(const RingPtr& ring, int degree, const std::string& text) {
  return TextParser(ring, text).form_all(degree);
}

Json ring_to_json(const RingPtr& ring) {
  Json inv = Json::array();
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (ring->inverted[i]) inv.push_back(ring->vars[i]);
  return Json{{"vars", ring->vars}, {"inverted", inv}};
}

RingPtr ring_from_json(const Json& j) {
  const Json& vars = field(j, "ring", "vars");
  if (!vars.is_array() || vars.empty()) schema_fail("ring", "'vars' must be a nonempty list");
  std::vector<std::string> names;
  for (const Json& v : vars) {
    if (!v.is_string()) schema_fail("ring", "variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<std::string> inverted;
  if (j.contains("inverted"))
    for (const Json& v : j.at("inverted")) {
      if (!v.is_string()) schema_fail("ring", "'inverted' entries must be variable names");
      inverted.push_back(v.get<std::string>());
    }
  RingPtr r = make_ring(names, inverted);
  for (const std::string& v : inverted)
    if (r->var_index(v) < 0) schema_fail("ring", "inverted variable '" + v + "' is not a ring variable");
  return r;
}

Json structure_to_json(const StructurePtr& s) {
  Json frame = Json::array();
  for (const VectorField& t : s->frame) {
    Json comps = Json::array();
    for (const LaurentPoly& c : t.components()) comps.push_back(c.str());
    frame.push_back(comps);
  }
  Json pairing = Json::array();
  Json bracket = Json::array();
  for (std::size_t r = 0; r < s->kernel.dim(); ++r) {
    Json prow = Json::array();
    Json brow = Json::array();
    for (std::size_t t = 0; t < s->kernel.dim(); ++t) {
      prow.push_back(to_string(s->kernel.pairing[r][t]));
      Json out = Json::array();
      for (std::size_t u = 0; u < s->kernel.dim(); ++u)
        out.push_back(to_string(s->kernel.bracket[r][t][u]));
      brow.push_back(out);
    }
    pairing.push_back(prow);
    bracket.push_back(brow);
  }
  Json curvature = Json::array();
  for (const DiffForm& c : s->curvature) curvature.push_back(c.str());
  return Json{{"ring", ring_to_json(s->ring)},
              {"kind", kind_name(s->kind)},
              {"frame", frame},
              {"kernel", Json{{"names", s->kernel.names},
                              {"pairing", pairing},
                              {"bracket", bracket}}},
              {"curvature", curvature},
              {"alpha", s->alpha.str()}};
}

StructurePtr structure_from_json(const Json& j) {
  AlgebroidStructure s;
  s.ring = ring_from_json(field(j, "structure", "ring"));
  const std::string kind = str_field(j, "structure", "kind");
  if (kind == "vertex") s.kind = AlgebroidKind::Vertex;
  else if (kind == "courant") s.kind = AlgebroidKind::Courant;
  else if (kind == "lie") s.kind = AlgebroidKind::Lie;
  else schema_fail("structure", "unknown kind '" + kind + "'");

  const Json& frame = field(j, "structure", "frame");
  if (!frame.is_array()) schema_fail("structure", "'frame' must be a list of vector fields");
  for (const Json& tf : frame) {
    if (!tf.is_array() || tf.size() != s.ring->nvars())
      schema_fail("structure.frame", "each field needs one component per variable");
    std::vector<LaurentPoly> comps;
    for (std::size_t i = 0; i < tf.size(); ++i)
      comps.push_back(poly_field(s.ring, tf[i], "structure.frame"));
    s.frame.emplace_back(s.ring, std::move(comps));
  }

  const Json& ker = field(j, "structure", "kernel");
  const Json& names = field(ker, "structure.kernel", "names");
  for (const Json& n : names) {
    if (!n.is_string()) schema_fail("structure.kernel", "names must be strings");
    s.kernel.names.push_back(n.get<std::string>());
  }
  const std::size_t dim = s.kernel.names.size();
  const Json& pairing = field(ker, "structure.kernel", "pairing");
  const Json& bracket = field(ker, "structure.kernel", "bracket");
  if (!pairing.is_array() || pairing.size() != dim || !bracket.is_array() ||
      bracket.size() != dim)
    schema_fail("structure.kernel", "'pairing' and 'bracket' must be dim x dim (x dim)");
  s.kernel.pairing.assign(dim, std::vector<Rational>(dim, 0));
  s.kernel.bracket.assign(
      dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, 0)));
  for (std::size_t r = 0; r < dim; ++r) {
    if (pairing[r].size() != dim || bracket[r].size() != dim)
      schema_fail("structure.kernel", "'pairing' and 'bracket' must be dim x dim (x dim)");
    for (std::size_t t = 0; t < dim; ++t) {
      s.kernel.pairing[r][t] = rational_field(pairing[r][t], "structure.kernel.pairing");
      const Json& out = bracket[r][t];
      if (!out.is_array() || out.size() != dim)
        schema_fail("structure.kernel", "bracket rows must have dim entries");
      for (std::size_t u = 0; u < dim; ++u)
        s.kernel.bracket[r][t][u] = rational_field(out[u], "structure.kernel.bracket");
    }
  }

  const Json& curvature = field(j, "structure", "curvature");
  if (!curvature.is_array() || curvature.size() != dim)
    schema_fail("structure", "'curvature' needs one 2-form per kernel generator");
  for (const Json& c : curvature)
    s.curvature.push_back(form_field(s.ring, 2, c, "structure.curvature"));
  s.alpha = form_field(s.ring, 3, field(j, "structure", "alpha"), "structure.alpha");
  return make_structure(std::move(s));
}

Json cover_to_json(const CoverFile& f) {
  Json charts = Json::array();
  for (const RingPtr& r : f.cover.charts) charts.push_back(ring_to_json(r));
  Json overlaps = Json::array();
  for (const auto& [key, ov] : f.cover.pairs)
    overlaps.push_back(Json{{"pair", Json::array({key.first, key.second})},
                            {"ring", ring_to_json(ov.ring)},
                            {"from_first", substitution_json(ov.from_first)},
                            {"from_second", substitution_json(ov.from_second)}});
  Json triples = Json::array();
  for (const auto& [key, tr] : f.cover.triples)
    triples.push_back(Json{{"key", Json::array({key[0], key[1], key[2]})},
                           {"ring", ring_to_json(tr.ring)},
                           {"from_01", substitution_json(tr.from_01)},
                           {"from_02", substitution_json(tr.from_02)},
                           {"from_12", substitution_json(tr.from_12)}});
  Json out{{"charts", charts}, {"overlaps", overlaps}, {"triples", triples}};
  if (!f.courant_charts.empty()) {
    Json cs = Json::array();
    for (const StructurePtr& s : f.courant_charts) cs.push_back(structure_to_json(s));
    Json conn = Json::array();
    for (const auto& [key, forms] : f.connection) {
      Json fs = Json::array();
      for (const DiffForm& a : forms) fs.push_back(a.str());
      conn.push_back(Json{{"pair", Json::array({key.first, key.second})}, {"forms", fs}});
    }
    out["courant"] = Json{{"charts", cs}, {"connection", conn}};
  }
  if (!f.cdo_charts.empty()) {
    Json cs = Json::array();
    for (const StructurePtr& s : f.cdo_charts) cs.push_back(structure_to_json(s));
    Json gauge = Json::array();
    for (const auto& [key, b] : f.gauge)
      gauge.push_back(Json{{"pair", Json::array({key.first, key.second})}, {"form", b.str()}});
    out["cdo"] = Json{{"charts", cs}, {"gauge", gauge}};
  }
  return out;
}

CoverFile cover_from_json(const Json& j) {
  CoverFile f;
  const Json& charts = field(j, "cover", "charts");
  if (!charts.is_array() || charts.empty())
    schema_fail("cover", "'charts' must be a nonempty list of rings");
  for (const Json& c : charts) f.cover.charts.push_back(ring_from_json(c));

  for (const Json& ov : field(j, "cover", "overlaps")) {
    const PairKey key = pair_key(field(ov, "cover.overlaps", "pair"), "cover.overlaps");
    if (key.first >= key.second || key.second >= f.cover.charts.size())
      schema_fail("cover.overlaps", "pair indices must satisfy i < j < #charts");
    Overlap o;
    o.ring = ring_from_json(field(ov, "cover.overlaps", "ring"));
    o.from_first = substitution(f.cover.charts[key.first], o.ring,
                                field(ov, "cover.overlaps", "from_first"),
                                "cover.overlaps.from_first");
    o.from_second = substitution(f.cover.charts[key.second], o.ring,
                                 field(ov, "cover.overlaps", "from_second"),
                                 "cover.overlaps.from_second");
    f.cover.pairs.emplace(key, std::move(o));
  }

  if (j.contains("triples"))
    for (const Json& tr : j.at("triples")) {
      const Json& kj = field(tr, "cover.triples", "key");
      if (!kj.is_array() || kj.size() != 3)
        schema_fail("cover.triples", "'key' must be three chart indices");
      TripleKey key{kj[0].get<std::size_t>(), kj[1].get<std::size_t>(),
                    kj[2].get<std::size_t>()};
      TripleOverlap t;
      t.ring = ring_from_json(field(tr, "cover.triples", "ring"));
      auto pair_ring = [&](std::size_t a, std::size_t b) -> const RingPtr& {
        auto it = f.cover.pairs.find({a, b});
        if (it == f.cover.pairs.end())
          schema_fail("cover.triples", "triple requires overlap (" + std::to_string(a) +
                                           "," + std::to_string(b) + ")");
        return it->second.ring;
      };
      t.from_01 = substitution(pair_ring(key[0], key[1]), t.ring,
                               field(tr, "cover.triples", "from_01"), "cover.triples.from_01");
      t.from_02 = substitution(pair_ring(key[0], key[2]), t.ring,
                               field(tr, "cover.triples", "from_02"), "cover.triples.from_02");
      t.from_12 = substitution(pair_ring(key[1], key[2]), t.ring,
                               field(tr, "cover.triples", "from_12"), "cover.triples.from_12");
      f.cover.triples.emplace(key, std::move(t));
    }
  f.cover.validate();

  auto load_family = [&](const Json& sec, const std::string& where,
                         std::vector<StructurePtr>& out) {
    const Json& cs = field(sec, where, "charts");
    if (!cs.is_array() || cs.size() != f.cover.charts.size())
      schema_fail(where, "need one chart structure per cover chart");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      StructurePtr s = structure_from_json(cs[i]);
      if (!same_ring(s->ring, f.cover.charts[i]))
        schema_fail(where, "chart " + std::to_string(i) + " ring differs from the cover's");
      out.push_back(std::move(s));
    }
  };

  if (j.contains("courant")) {
    const Json& sec = j.at("courant");
    load_family(sec, "courant", f.courant_charts);
    const std::size_t dim = f.courant_charts.front()->kernel.dim();
    if (sec.contains("connection"))
      for (const Json& e : sec.at("connection")) {
        const PairKey key = pair_key(field(e, "courant.connection", "pair"),
                                     "courant.connection");
        const Overlap& ov = f.cover.pair(key.first, key.second);
        const Json& fs = field(e, "courant.connection", "forms");
        if (!fs.is_array() || fs.size() != dim)
          schema_fail("courant.connection", "need one 1-form per kernel generator");
        std::vector<DiffForm> forms;
        for (const Json& a : fs)
          forms.push_back(form_field(ov.ring, 1, a, "courant.connection"));
        f.connection.emplace(key, std::move(forms));
      }
  }
  if (j.contains("cdo")) {
    const Json& sec = j.at("cdo");
    load_family(sec, "cdo", f.cdo_charts);
    if (sec.contains("gauge"))
      for (const Json& e : sec.at("gauge")) {
        const PairKey key = pair_key(field(e, "cdo.gauge", "pair"), "cdo.gauge");
        const Overlap& ov = f.cover.pair(key.first, key.second);
        f.gauge.emplace(key,
                        form_field(ov.ring, 2, field(e, "cdo.gauge", "form"), "cdo.gauge"));
      }
  }
  return f;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    // nlohmann reports a byte offset; recover line/column from the file.
    std::ifstream again(path);
    std::string text((std::istreambuf_iterator<char>(again)),
                     std::istreambuf_iterator<char>());
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(std::string("JSON syntax error in '") + path + "': " + e.what(),
                     line, col);
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

StructurePtr load_structure(const std::string& path) {
  return structure_from_json(load_json_file(path));
}

void save_structure(const std::string& path, const StructurePtr& s) {
  save_json_file(path, structure_to_json(s));
}

CoverFile load_cover(const std::string& path) {
  return cover_from_json(load_json_file(path));
}

Json report_to_json(const AxiomReport& rep) {
  Json lines = Json::array();
  for (const CheckLine& l : rep.lines)
    lines.push_back(Json{{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
  return Json{{"pass", rep.all_pass()}, {"lines", lines}};
}

std::string report_table(const AxiomReport& rep) {
  std::size_t width = 0;
  for (const CheckLine& l : rep.lines) width = std::max(width, l.name.size());
  std::ostringstream out;
  for (const CheckLine& l : rep.lines) {
    out << "  " << l.name << std::string(width - l.name.size() + 2, ' ')
        << (l.pass ? "pass" : "FAIL");
    if (!l.pass && !l.detail.empty()) out << "  " << l.detail;
    out << "\n";
  }
  return out.str();
}

Json cocycle_to_json(const GerbeCocycle& c) {
  Json alpha = Json::array();
  for (const auto& [key, form] : c.alpha)
    alpha.push_back(Json{{"pair", Json::array({key.first, key.second})},
                         {"form", form.str()}});
  Json beta = Json::array();
  for (const auto& [key, form] : c.beta)
    beta.push_back(Json{{"triple", Json::array({key[0], key[1], key[2]})},
                        {"form", form.str()}});
  return Json{{"alpha", alpha}, {"beta", beta}};
}

Json coboundary_to_json(const CoboundaryResult& r) {
  Json out{{"trivialized", r.trivialized}, {"note", r.note}};
  if (r.witness) {
    Json charts = Json::array();
    for (const DiffForm& h : r.witness->chart_forms) charts.push_back(h.str());
    Json pairs = Json::array();
    for (const auto& [key, m] : r.witness->pair_forms)
      pairs.push_back(Json{{"pair", Json::array({key.first, key.second})},
                           {"form", m.str()}});
    out["witness"] = Json{{"charts", charts}, {"pairs", pairs}};
  }
  return out;
}

} // namespace forge
