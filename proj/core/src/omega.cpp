#include "altsum/omega.hpp"

#include <algorithm>
#include <cctype>

namespace altsum::omega {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.coefficient = a.coefficient * b.coefficient;
  r.exponents = a.exponents;
  for (const auto& [k, v] : b.exponents) {
    int& slot = r.exponents[k];
    slot += v;
    if (slot == 0) r.exponents.erase(k);
  }
  return r;
}

Monomial pow(const Monomial& m, int e) {
  Monomial r;
  if (e == 0) return r;
  if (m.coefficient == 1)
    r.coefficient = 1;
  else if (m.coefficient == -1)
    r.coefficient = (e % 2 == 0) ? 1 : -1;
  else {
    r.coefficient = 1;
    for (int i = 0; i < std::abs(e); ++i) r.coefficient *= m.coefficient;
  }
  for (const auto& [k, v] : m.exponents) r.exponents[k] = v * e;
  return r;
}

std::string to_string(const Monomial& m) {
  std::string out;
  if (m.coefficient == -1)
    out += "-";
  else if (m.coefficient != 1)
    out += std::to_string(m.coefficient) + "*";
  bool first = true;
  for (const auto& [k, v] : m.exponents) {
    if (!first) out += "*";
    first = false;
    out += var_name(k);
    if (v != 1) out += "^" + std::to_string(v);
  }
  if (first) out += "1";
  return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "' (" + what + ")", pos);
  }
};

std::string parse_var_name(Cursor& c) {
  c.skip_ws();
  const std::size_t start = c.pos;
  if (c.pos >= c.text.size() || !std::isalpha(static_cast<unsigned char>(c.text[c.pos])))
    throw ParseError("expected a variable name", c.pos);
  std::string name(1, c.text[c.pos++]);
  while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
    name += c.text[c.pos++];
  try {
    var_key(name);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), start);
  }
  return name;
}

int parse_int(Cursor& c) {
  c.skip_ws();
  const std::size_t start = c.pos;
  bool neg = false;
  if (c.pos < c.text.size() && (c.text[c.pos] == '-' || c.text[c.pos] == '+')) {
    neg = c.text[c.pos] == '-';
    ++c.pos;
  }
  if (c.pos >= c.text.size() || !std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
    throw ParseError("expected an integer exponent", start);
  int v = 0;
  while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
    v = v * 10 + (c.text[c.pos++] - '0');
  return neg ? -v : v;
}

Monomial parse_monomial(Cursor& c) {
  Monomial m;
  while (true) {
    const std::string name = parse_var_name(c);
    int e = 1;
    if (c.accept('^')) e = parse_int(c);
    if (e != 0) {
      int& slot = m.exponents[var_key(name)];
      slot += e;
      if (slot == 0) m.exponents.erase(var_key(name));
    }
    c.skip_ws();
    // '*' continues the monomial unless it introduces the "1/(" head
    if (c.pos < c.text.size() && c.text[c.pos] == '*') {
      std::size_t look = c.pos + 1;
      while (look < c.text.size() && std::isspace(static_cast<unsigned char>(c.text[look]))) ++look;
      if (look < c.text.size() && c.text[look] == '1') break;
      ++c.pos;
      continue;
    }
    break;
  }
  return m;
}

Monomial parse_factor(Cursor& c) {
  c.expect('(', "factor");
  c.expect('1', "factor");
  c.expect('-', "factor");
  Monomial m = parse_monomial(c);
  c.expect(')', "factor");
  if (m.is_one()) throw ParseError("factor monomial must not be 1", c.pos);
  return m;
}

}  // namespace

CrudeForm parse_crude(std::string_view text) {
  Cursor c{text};
  CrudeForm form;
  c.skip_ws();
  // optional prefactor: anything that is not the literal "1/(" head
  bool head_is_one = false;
  if (c.peek() == '1') {
    std::size_t look = c.pos + 1;
    while (look < text.size() && std::isspace(static_cast<unsigned char>(text[look]))) ++look;
    head_is_one = look < text.size() && text[look] == '/';
  }
  if (!head_is_one && c.peek() != '1') {
    form.prefactor = parse_monomial(c);
    if (c.accept('*')) {
      c.expect('1', "form head");
    }
    c.expect('/', "form head");
  } else {
    c.expect('1', "form head");
    c.expect('/', "form head");
  }
  c.expect('(', "form head");
  while (c.peek() == '(') form.denominators.push_back(parse_factor(c));
  if (form.denominators.empty())
    throw ParseError("at least one factor required", c.pos);
  c.expect(')', "form tail");
  if (!c.at_end()) throw ParseError("trailing input", c.pos);
  return form;
}

// ---------------------------------------------------------------------------
// printing / normalization

namespace {

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [k, v] : m.exponents) d += std::abs(v);
  return d;
}

bool factor_less(const Monomial& a, const Monomial& b) {
  const int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db;
  return a.exponents < b.exponents;
}

std::vector<Monomial> sorted_factors(std::vector<Monomial> f) {
  std::stable_sort(f.begin(), f.end(), factor_less);
  return f;
}

std::string print_form(const Monomial& head, const std::vector<Monomial>& factors) {
  std::string out;
  if (!head.is_one())
    out += to_string(head) + "/(";
  else
    out += "1/(";
  for (const Monomial& f : sorted_factors(factors)) out += "(1-" + to_string(f) + ")";
  out += ")";
  return out;
}

}  // namespace

std::string to_string(const CrudeForm& f) { return print_form(f.prefactor, f.denominators); }
std::string to_string(const ProductForm& f) { return print_form(f.numerator, f.denominators); }

CrudeForm normalize(CrudeForm f) {
  f.denominators = sorted_factors(std::move(f.denominators));
  return f;
}

// ---------------------------------------------------------------------------
// elimination

std::vector<std::string> eliminator_variables(const CrudeForm& form) {
  std::vector<VarKey> keys;
  auto collect = [&](const Monomial& m) {
    for (const auto& [k, v] : m.exponents)
      if (k.alphabet == 4) keys.push_back(k);
  };
  collect(form.prefactor);
  for (const auto& f : form.denominators) collect(f);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<std::string> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(var_name(k));
  return out;
}

CrudeForm eliminate_once(const CrudeForm& form, const std::string& var) {
  const VarKey key = var_key(var);
  if (key.alphabet != 4)
    throw EliminationError("not an eliminator variable: " + var, var);

  // prefactor must carry var^{-A} with A >= 0
  int A = 0;
  if (auto it = form.prefactor.exponents.find(key); it != form.prefactor.exponents.end()) {
    if (it->second > 0)
      throw EliminationError("positive power of " + var + " in the prefactor", var);
    A = -it->second;
  }

  int raising = -1, lowering = -1;
  for (std::size_t i = 0; i < form.denominators.size(); ++i) {
    auto it = form.denominators[i].exponents.find(key);
    if (it == form.denominators[i].exponents.end()) continue;
    if (it->second == 1) {
      if (raising >= 0)
        throw EliminationError(var + " appears in more than one raising factor", var);
      raising = static_cast<int>(i);
    } else if (it->second == -1) {
      if (lowering >= 0)
        throw EliminationError(var + " appears in more than one lowering factor", var);
      lowering = static_cast<int>(i);
    } else {
      throw EliminationError(var + " appears with exponent outside {+1,-1}", var);
    }
  }
  if (raising < 0)
    throw EliminationError("no raising factor for " + var, var);

  auto strip = [&](Monomial m) {
    m.exponents.erase(key);
    return m;
  };
  const Monomial X = strip(form.denominators[raising]);
  CrudeForm out;
  out.prefactor = strip(form.prefactor) * pow(X, A);
  for (std::size_t i = 0; i < form.denominators.size(); ++i)
    if (static_cast<int>(i) != raising && static_cast<int>(i) != lowering)
      out.denominators.push_back(form.denominators[i]);
  out.denominators.push_back(X);
  if (lowering >= 0) {
    const Monomial Y = strip(form.denominators[lowering]);
    out.denominators.push_back(X * Y);
  }
  return out;
}

ProductForm eliminate_all(const CrudeForm& form, const std::vector<std::string>& order) {
  CrudeForm cur = form;
  for (const std::string& var : order) cur = eliminate_once(cur, var);
  const auto leftover = eliminator_variables(cur);
  if (!leftover.empty())
    throw EliminationError("eliminator variable remains after elimination: " + leftover.front(),
                           leftover.front());
  ProductForm out;
  out.numerator = cur.prefactor;
  out.denominators = std::move(cur.denominators);
  return out;
}

// ---------------------------------------------------------------------------
// substitution and expansion

namespace {

Monomial substitute_monomial(const Monomial& m,
                             const std::map<std::string, Monomial>& map) {
  Monomial out;
  out.coefficient = m.coefficient;
  for (const auto& [k, v] : m.exponents) {
    auto it = map.find(var_name(k));
    if (it == map.end())
      throw std::invalid_argument("substitute: unbound variable " + var_name(k));
    out = out * pow(it->second, v);
  }
  return out;
}

}  // namespace

ProductForm substitute(const ProductForm& form,
                       const std::map<std::string, Monomial>& map) {
  ProductForm out;
  out.numerator = substitute_monomial(form.numerator, map);
  for (const auto& f : form.denominators)
    out.denominators.push_back(substitute_monomial(f, map));
  return out;
}

SparsePoly expand_general(const ProductForm& form, std::size_t order) {
  SparsePoly p = SparsePoly::one(order).times_monomial(form.numerator.exponents,
                                                       form.numerator.coefficient);
  for (const auto& f : form.denominators) {
    if (f.coefficient != 1)
      throw std::invalid_argument("expand: factor coefficients other than 1 unsupported");
    if (q_degree(f.exponents) <= 0)
      throw std::invalid_argument("expand: factor " + to_string(f) +
                                  " must have positive q-degree");
    p.mul_geometric(f.exponents);
  }
  return p;
}

TruncatedSeries expand_to_series(const ProductForm& form, std::size_t order) {
  const SparsePoly p = expand_general(form, order);
  TruncatedSeries s(order);
  for (const auto& [e, c] : p.terms()) {
    for (const auto& [k, v] : e)
      if (k != kQ)
        throw std::invalid_argument("expand_to_series: non-q variable " + var_name(k));
    s[static_cast<std::size_t>(q_degree(e))] = c;
  }
  return s;
}

BivariateTable expand_to_table(const ProductForm& form, std::size_t order) {
  const SparsePoly p = expand_general(form, order);
  BivariateTable t(order);
  const VarKey kZ{1, 0};
  for (const auto& [e, c] : p.terms()) {
    int a = 0, n = 0;
    for (const auto& [k, v] : e) {
      if (k == kZ)
        a = v;
      else if (k == kQ)
        n = v;
      else
        throw std::invalid_argument("expand_to_table: unexpected variable " + var_name(k));
    }
    if (a < 0 || a > n || (n - a) % 2 != 0)
      throw std::invalid_argument("expand_to_table: coefficient outside the parity triangle");
    t.packed_row(n)[(n - a) / 2] = c;
  }
  return t;
}

CrudeForm chain_crude_form(unsigned n, bool strict) {
  if (n == 0) throw std::invalid_argument("chain_crude_form: n >= 1 required");
  CrudeForm f;
  for (unsigned i = 1; i <= n; ++i) {
    Monomial factor;
    factor.exponents[var_key("x" + std::to_string(i))] = 1;
    factor.exponents[var_key("l" + std::to_string(i))] = 1;
    if (i > 1) factor.exponents[var_key("l" + std::to_string(i - 1))] = -1;
    f.denominators.push_back(factor);
    if (strict) f.prefactor.exponents[var_key("l" + std::to_string(i))] = -1;
  }
  return f;
}

}  // namespace altsum::omega
