#include "altsum/multipoly.hpp"

#include <cctype>
#include <stdexcept>

namespace altsum {

VarKey var_key(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  const char c = name[0];
  int alphabet;
  switch (c) {
    case 'x': alphabet = 0; break;
    case 'z': alphabet = 1; break;
    case 'y': alphabet = 2; break;
    case 'q': alphabet = 3; break;
    case 'l': alphabet = 4; break;
    default: throw std::invalid_argument("unknown variable name: " + name);
  }
  const std::string digits = name.substr(1);
  if (c == 'x' || c == 'l') {
    // bare "x" (index 0) is the largest-part marker used by substitutions
    if (digits.empty()) {
      if (c == 'x') return {alphabet, 0};
      throw std::invalid_argument("variable needs an index: " + name);
    }
    for (char d : digits)
      if (!std::isdigit(static_cast<unsigned char>(d)))
        throw std::invalid_argument("unknown variable name: " + name);
    return {alphabet, std::stoi(digits)};
  }
  if (!digits.empty()) throw std::invalid_argument("unknown variable name: " + name);
  return {alphabet, 0};
}

std::string var_name(const VarKey& v) {
  switch (v.alphabet) {
    case 0: return v.index == 0 ? "x" : "x" + std::to_string(v.index);
    case 1: return "z";
    case 2: return "y";
    case 3: return "q";
    case 4: return "l" + std::to_string(v.index);
    default: throw std::logic_error("bad VarKey");
  }
}

int q_degree(const Exponents& e) {
  auto it = e.find(kQ);
  return it == e.end() ? 0 : it->second;
}

void SparsePoly::add_term(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  if (q_degree(e) > static_cast<int>(q_order_)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

Exponents merge(const Exponents& a, const Exponents& b) {
  Exponents r = a;
  for (const auto& [k, v] : b) {
    int& slot = r[k];
    slot += v;
    if (slot == 0) r.erase(k);
  }
  return r;
}

}  // namespace

SparsePoly SparsePoly::times_monomial(const Exponents& e, const mpz_class& c) const {
  SparsePoly r(q_order_);
  for (const auto& [te, tc] : terms_) r.add_term(merge(te, e), tc * c);
  return r;
}

void SparsePoly::mul_geometric(const Exponents& m) {
  if (q_degree(m) <= 0)
    throw std::invalid_argument("mul_geometric: factor must have positive q-degree");
  // this * (1 + M + M^2 + ...), truncation makes the sum finite
  SparsePoly acc = *this;
  while (!acc.empty()) {
    acc = acc.times_monomial(m);
    *this += acc;
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly r(std::min(q_order_, o.q_order_));
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(merge(ea, eb), ca * cb);
  return r;
}

mpz_class SparsePoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class max_abs_diff(const SparsePoly& a, const SparsePoly& b) {
  mpz_class best = 0;
  auto consider = [&](const mpz_class& d) {
    mpz_class ad = abs(d);
    if (ad > best) best = ad;
  };
  for (const auto& [e, c] : a.terms()) consider(c - b.coefficient(e));
  for (const auto& [e, c] : b.terms())
    if (a.terms().find(e) == a.terms().end()) consider(c);
  return best;
}

}  // namespace altsum
