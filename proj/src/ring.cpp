#include "hecke/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hecke {

int cmp_graded_lex(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("exponent vectors of different length");
  }
  long da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

struct DescGradedLex {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    return cmp_graded_lex(a, b) > 0;
  }
};

void check_same_ring(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() != b.vars()) {
    throw std::invalid_argument("mismatched variable count");
  }
}

}  // namespace

LaurentPoly LaurentPoly::constant(int vars, Int c) {
  LaurentPoly p(vars);
  if (c != 0) p.terms_.push_back({ExpVec(vars, 0), std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::variable(int vars, int index, int power) {
  if (index < 0 || index >= vars) {
    throw std::invalid_argument("variable index out of range");
  }
  ExpVec e(vars, 0);
  e[index] = power;
  return monomial(vars, std::move(e), 1);
}

LaurentPoly LaurentPoly::monomial(int vars, ExpVec exp, Int coeff) {
  if (static_cast<int>(exp.size()) != vars) {
    throw std::invalid_argument("exponent vector length != vars");
  }
  LaurentPoly p(vars);
  if (coeff != 0) p.terms_.push_back({std::move(exp), std::move(coeff)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(int vars, std::vector<Term> terms) {
  std::map<ExpVec, Int, DescGradedLex> acc;
  for (auto& t : terms) {
    if (static_cast<int>(t.exp.size()) != vars) {
      throw std::invalid_argument("exponent vector length != vars");
    }
    acc[t.exp] += t.coeff;
  }
  LaurentPoly p(vars);
  for (auto& [e, c] : acc) {
    if (c != 0) p.terms_.push_back({e, c});
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].coeff == 1 &&
         std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(),
                     [](int e) { return e == 0; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(vars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.exp, -t.coeff});
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same_ring(*this, o);
  LaurentPoly r(vars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = cmp_graded_lex(terms_[i].exp, o.terms_[j].exp);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Int s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same_ring(*this, o);
  std::map<ExpVec, Int, DescGradedLex> acc;
  ExpVec e(vars_);
  for (const auto& s : terms_) {
    for (const auto& t : o.terms_) {
      for (int v = 0; v < vars_; ++v) e[v] = s.exp[v] + t.exp[v];
      acc[e] += s.coeff * t.coeff;
    }
  }
  LaurentPoly r(vars_);
  for (auto& [exp, c] : acc) {
    if (c != 0) r.terms_.push_back({exp, c});
  }
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (vars_ != o.vars_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff ||
        terms_[i].exp != o.terms_[i].exp) {
      return false;
    }
  }
  return true;
}

std::optional<LaurentPoly> LaurentPoly::unit_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const Term& t = terms_[0];
  if (t.coeff != 1 && t.coeff != -1) return std::nullopt;
  ExpVec inv(vars_);
  for (int v = 0; v < vars_; ++v) inv[v] = -t.exp[v];
  return monomial(vars_, std::move(inv), t.coeff);
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ExpVec LaurentPoly::exponent_floor() const {
  if (terms_.empty()) return ExpVec(vars_, 0);
  ExpVec m = terms_[0].exp;
  for (const auto& t : terms_) {
    for (int v = 0; v < vars_; ++v) m[v] = std::min(m[v], t.exp[v]);
  }
  return m;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& delta) const {
  LaurentPoly r(vars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    ExpVec e = t.exp;
    for (int v = 0; v < vars_; ++v) e[v] += delta[v];
    r.terms_.push_back({std::move(e), t.coeff});
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
  if (c == 0) return LaurentPoly(vars_);
  LaurentPoly r(vars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.exp, t.coeff * c});
  return r;
}

LaurentPoly LaurentPoly::divided_by_int(const Int& c) const {
  if (c == 0) throw std::invalid_argument("division by zero");
  LaurentPoly r(vars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) {
      throw std::invalid_argument("coefficient not divisible");
    }
    r.terms_.push_back({t.exp, t.coeff / c});
  }
  return r;
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& a,
                                     const LaurentPoly& b) {
  if (a.vars() != b.vars()) {
    throw std::invalid_argument("mismatched variable count");
  }
  if (b.is_zero()) throw std::invalid_argument("division by zero");
  const int k = a.vars();
  if (a.is_zero()) return LaurentPoly(k);

  // Shift both operands into the ordinary polynomial ring; the quotient
  // of such shifted values (when divisibility holds) is again ordinary.
  ExpVec fa = a.exponent_floor(), fb = b.exponent_floor();
  ExpVec neg_fa(k), neg_fb(k), back(k);
  for (int v = 0; v < k; ++v) {
    neg_fa[v] = -fa[v];
    neg_fb[v] = -fb[v];
    back[v] = fa[v] - fb[v];
  }
  LaurentPoly r = a.shifted(neg_fa);
  LaurentPoly d = b.shifted(neg_fb);

  const Term& lead = d.terms()[0];
  std::vector<Term> qterms;
  while (!r.is_zero()) {
    const Term& lt = r.terms()[0];
    ExpVec m(k);
    for (int v = 0; v < k; ++v) {
      m[v] = lt.exp[v] - lead.exp[v];
      if (m[v] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(lt.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
      return std::nullopt;
    }
    Int c = lt.coeff / lead.coeff;
    qterms.push_back({m, c});
    r -= d * LaurentPoly::monomial(k, std::move(m), std::move(c));
  }
  return LaurentPoly::from_terms(k, std::move(qterms)).shifted(back);
}

Rat specialize(const LaurentPoly& p, const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != p.vars()) {
    throw std::invalid_argument("point dimension != vars");
  }
  for (const Rat& x : point) {
    if (x == 0) throw std::invalid_argument("specialization at zero");
  }
  Rat total = 0;
  for (const auto& t : p.terms()) {
    Rat v(t.coeff);
    for (int i = 0; i < p.vars(); ++i) {
      int e = t.exp[i];
      Rat base = e >= 0 ? point[i] : Rat(1) / point[i];
      for (int j = 0; j < std::abs(e); ++j) v *= base;
    }
    total += v;
  }
  return total;
}

std::string LaurentPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff.get_str();
    for (int v = 0; v < vars_; ++v) {
      if (t.exp[v] == 0) continue;
      os << "*u" << (v + 1);
      if (t.exp[v] != 1) os << "^" << t.exp[v];
    }
  }
  return os.str();
}

LaurentPoly LaurentPoly::from_text(int vars, const std::string& s) {
  std::vector<Term> terms;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  };
  skip_ws();
  if (s.substr(pos) == "0") return LaurentPoly(vars);
  while (pos < s.size()) {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw std::invalid_argument("bad polynomial text");
    Term t{ExpVec(vars, 0), Int(s.substr(start, pos - start))};
    while (pos < s.size() && s[pos] == '*') {
      ++pos;
      if (pos >= s.size() || s[pos] != 'u') {
        throw std::invalid_argument("bad polynomial text");
      }
      ++pos;
      size_t istart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      int idx = std::stoi(s.substr(istart, pos - istart)) - 1;
      if (idx < 0 || idx >= vars) {
        throw std::invalid_argument("variable index out of range");
      }
      int e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        size_t estart = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos])))
          ++pos;
        e = std::stoi(s.substr(estart, pos - estart));
      }
      t.exp[idx] += e;
    }
    terms.push_back(std::move(t));
    skip_ws();
    if (pos < s.size()) {
      if (s[pos] != '+') throw std::invalid_argument("bad polynomial text");
      ++pos;
    }
  }
  return from_terms(vars, std::move(terms));
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& t : terms_) {
    j.push_back({t.exp, t.coeff.get_str()});
  }
  return j;
}

LaurentPoly LaurentPoly::from_json(int vars, const nlohmann::json& j) {
  std::vector<Term> terms;
  for (const auto& e : j) {
    terms.push_back(
        {e.at(0).get<ExpVec>(), Int(e.at(1).get<std::string>())});
  }
  return from_terms(vars, std::move(terms));
}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  check_same_ring(num_, den_);
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  const int k = num_.vars();
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(k, 1);
    return;
  }
  if (auto q = exact_div(num_, den_)) {
    num_ = std::move(*q);
    den_ = LaurentPoly::constant(k, 1);
  } else {
    // Move the trailing monomial of den to exponent zero.
    const Term& trail = den_.terms().back();
    ExpVec delta(k);
    for (int v = 0; v < k; ++v) delta[v] = -trail.exp[v];
    num_ = num_.shifted(delta);
    den_ = den_.shifted(delta);
  }
  if (den_.terms()[0].coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = num_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.content().get_mpz_t());
  if (g > 1) {
    num_ = num_.divided_by_int(g);
    den_ = den_.divided_by_int(g);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::optional<LaurentPoly> RatFunc::as_poly() const {
  if (den_.is_one()) return num_;
  return exact_div(num_, den_);
}

std::string RatFunc::to_text() const {
  if (den_.is_one()) return num_.to_text();
  return "(" + num_.to_text() + ") / (" + den_.to_text() + ")";
}

}  // namespace hecke
