#include "brauerlab/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace brauerlab {

namespace {

std::string poly_key(const MultiPoly& p) {
  std::string k;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      k += std::to_string(m[i]);
      k += ',';
    }
    for (const auto& x : c.coeffs()) {
      k += x.get_str();
      k += ';';
    }
    k += '|';
  }
  return k;
}

MultiPoly make_monic(const MultiPoly& p, Cyc* lead) {
  Cyc lc = p.leading().second;
  if (lead) *lead = lc;
  if (lc.is_one()) return p;
  return p * lc.inverse();
}

}  // namespace

FieldContext::FieldContext(int conductor, std::vector<std::string> vars)
    : f_(cyclotomic_field(conductor)), vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars) throw std::invalid_argument("FieldContext: at most 15 variables");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j]) throw std::invalid_argument("FieldContext: duplicate variable " + vars_[i]);
}

std::optional<std::size_t> FieldContext::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

int FieldContext::intern(const MultiPoly& monic) {
  std::string key = poly_key(monic);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(factors_.size());
  factors_.push_back(monic);
  index_.emplace(std::move(key), id);
  return id;
}

const MultiPoly& FieldContext::factor(int id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return factors_.at(static_cast<std::size_t>(id));
}

std::size_t FieldContext::factor_count() const {
  std::lock_guard<std::mutex> lock(mu_);
  return factors_.size();
}

FieldPtr make_field(int conductor, const std::vector<std::string>& vars) {
  return std::make_shared<FieldContext>(conductor, vars);
}

FieldElement::FieldElement(FieldPtr ctx, const Rat& q)
    : ctx_(std::move(ctx)), num_(ctx_->scalars(), Cyc(ctx_->scalars(), q)) {}

FieldElement::FieldElement(FieldPtr ctx, const Cyc& c) : ctx_(std::move(ctx)), num_(ctx_->scalars(), c) {
  if (c.field() != ctx_->scalars()) throw std::invalid_argument("FieldElement: scalar from another field");
}

FieldElement::FieldElement(FieldPtr ctx, MultiPoly num, Denominator den)
    : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
  std::sort(den_.begin(), den_.end());
  cancel();
}

FieldElement FieldElement::variable(FieldPtr ctx, const std::string& name) {
  auto i = ctx->var_index(name);
  if (!i) throw std::invalid_argument("unknown variable " + name);
  return variable(std::move(ctx), *i);
}

FieldElement FieldElement::variable(FieldPtr ctx, std::size_t i) {
  if (i >= ctx->nvars()) throw std::out_of_range("FieldElement: variable index");
  const auto* f = ctx->scalars();
  return FieldElement(std::move(ctx), MultiPoly::variable(f, i));
}

FieldElement FieldElement::zeta(FieldPtr ctx, long k) {
  const auto* f = ctx->scalars();
  return FieldElement(std::move(ctx), Cyc::zeta(f, k));
}

MultiPoly FieldElement::denominator_poly() const {
  const auto* f = ctx_ ? ctx_->scalars() : cyclotomic_field(1);
  MultiPoly d(f, Cyc(f, Rat(1)));
  for (const auto& [id, e] : den_) d = d * ctx_->factor(id).pow(static_cast<unsigned>(e));
  return d;
}

bool FieldElement::is_one() const { return den_.empty() && num_.is_constant() && num_.constant_value().is_one(); }

std::optional<Cyc> FieldElement::constant() const {
  if (!is_constant()) return std::nullopt;
  if (!ctx_) return Cyc(cyclotomic_field(1));
  return num_.is_zero() ? Cyc(ctx_->scalars()) : num_.constant_value();
}

std::optional<Rat> FieldElement::rational() const {
  auto c = constant();
  if (!c || !c->is_rational()) return std::nullopt;
  return c->rational();
}

std::size_t FieldElement::size() const {
  std::size_t s = num_.size();
  for (const auto& [id, e] : den_) s += ctx_->factor(id).size() * static_cast<std::size_t>(e);
  return s;
}

void FieldElement::require_ctx(const FieldElement& o) const {
  if (ctx_ != o.ctx_) throw std::invalid_argument("FieldElement: operands from different fields");
}

FieldElement FieldElement::zero_like() const {
  FieldElement z;
  z.ctx_ = ctx_;
  z.num_ = MultiPoly(ctx_->scalars());
  return z;
}

void FieldElement::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  Denominator kept;
  for (auto [id, e] : den_) {
    if (e == 0) continue;
    const MultiPoly& f = ctx_->factor(id);
    while (e > 0 && f.total_degree() <= num_.total_degree()) {
      auto q = num_.divide_exact(f);
      if (!q) break;
      num_ = std::move(*q);
      --e;
    }
    if (e > 0) kept.emplace_back(id, e);
  }
  den_ = std::move(kept);
}

namespace {

// context of a binary operation where one side may be a default-constructed zero
const FieldPtr& pick(const FieldElement& a, const FieldElement& b) { return a.context() ? a.context() : b.context(); }

FieldElement lift(const FieldElement& a, const FieldPtr& ctx) {
  if (a.context() || !ctx) return a;
  return FieldElement(ctx, Rat(0));
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (!ctx_ || !o.ctx_) {
    if (!ctx_) return o;
    return *this;
  }
  require_ctx(o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    FieldElement r;
    r.ctx_ = ctx_;
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    r.cancel();
    return r;
  }
  // common denominator with the larger exponent of each factor
  std::map<int, int> ea(den_.begin(), den_.end()), eb(o.den_.begin(), o.den_.end());
  std::map<int, int> all = ea;
  for (const auto& [id, e] : eb) all[id] = std::max(all[id], e);
  MultiPoly na = num_, nb = o.num_;
  for (const auto& [id, e] : all) {
    int da = e - (ea.count(id) ? ea[id] : 0);
    int db = e - (eb.count(id) ? eb[id] : 0);
    if (da == 0 && db == 0) continue;
    const MultiPoly& f = ctx_->factor(id);
    if (da) na = na * f.pow(static_cast<unsigned>(da));
    if (db) nb = nb * f.pow(static_cast<unsigned>(db));
  }
  FieldElement r;
  r.ctx_ = ctx_;
  r.num_ = na + nb;
  r.den_.assign(all.begin(), all.end());
  r.cancel();
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  r.num_ = -r.num_;
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (!ctx_ || !o.ctx_) return lift(FieldElement(), pick(*this, o));
  require_ctx(o);
  if (is_zero() || o.is_zero()) return zero_like();
  FieldElement r;
  r.ctx_ = ctx_;
  r.num_ = num_ * o.num_;
  std::map<int, int> all(den_.begin(), den_.end());
  for (const auto& [id, e] : o.den_) all[id] += e;
  r.den_.assign(all.begin(), all.end());
  if (!den_.empty() || !o.den_.empty()) r.cancel();
  return r;
}

FieldElement FieldElement::operator*(const Rat& q) const {
  if (!ctx_) return *this;
  if (sgn(q) == 0) return zero_like();
  FieldElement r(*this);
  r.num_ = r.num_ * Cyc(ctx_->scalars(), q);
  return r;
}

FieldElement FieldElement::inverse() const {
  if (!ctx_ || is_zero()) throw std::domain_error("division by zero");
  const auto* f = ctx_->scalars();
  MultiPoly newnum = denominator_poly();
  if (num_.is_constant()) {
    FieldElement r;
    r.ctx_ = ctx_;
    r.num_ = newnum * num_.constant_value().inverse();
    return r;
  }
  // strip known factors from the numerator, intern what remains
  MultiPoly rest = num_;
  std::map<int, int> den;
  const std::size_t nf = ctx_->factor_count();
  for (std::size_t id = 0; id < nf && !rest.is_constant(); ++id) {
    const MultiPoly& fac = ctx_->factor(static_cast<int>(id));
    while (fac.total_degree() <= rest.total_degree()) {
      auto q = rest.divide_exact(fac);
      if (!q) break;
      rest = std::move(*q);
      ++den[static_cast<int>(id)];
    }
  }
  Cyc lead(f);
  if (rest.is_constant()) {
    lead = rest.constant_value();
  } else {
    MultiPoly monic = make_monic(rest, &lead);
    ++den[ctx_->intern(monic)];
  }
  FieldElement r;
  r.ctx_ = ctx_;
  r.num_ = newnum * lead.inverse();
  r.den_.assign(den.begin(), den.end());
  r.cancel();
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (!o.ctx_ || o.is_zero()) throw std::domain_error("division by zero");
  return lift(*this, o.ctx_) * o.inverse();
}

FieldElement FieldElement::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  if (!ctx_) {
    if (k == 0) throw std::domain_error("FieldElement: 0^0 without a field");
    return *this;
  }
  FieldElement r(ctx_, Rat(1)), b(*this);
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!ctx_ || !o.ctx_) return is_zero() && o.is_zero();
  require_ctx(o);
  if (den_ == o.den_) return num_ == o.num_;
  return (*this - o).is_zero();
}

FieldElement FieldElement::substitute(const std::map<std::size_t, FieldElement>& images, long zeta_power) const {
  if (!ctx_) return *this;
  FieldPtr target = ctx_;
  for (const auto& [i, img] : images)
    if (img.context()) {
      target = img.context();
      break;
    }
  if (target->conductor() != ctx_->conductor())
    throw std::invalid_argument("substitute: target field has different scalars");
  const std::size_t nv = ctx_->nvars();
  std::vector<FieldElement> base(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    auto it = images.find(i);
    if (it != images.end()) {
      base[i] = lift(it->second, target);
    } else {
      auto j = target->var_index(ctx_->vars()[i]);
      if (!j) throw std::invalid_argument("substitute: variable " + ctx_->vars()[i] + " has no image");
      base[i] = FieldElement::variable(target, *j);
    }
  }
  std::vector<std::vector<FieldElement>> powers(nv);
  auto power = [&](std::size_t i, std::size_t e) -> const FieldElement& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(FieldElement(target, Rat(1)));
    while (p.size() <= e) p.push_back(p.back() * base[i]);
    return p[e];
  };
  auto sub_poly = [&](const MultiPoly& poly) {
    FieldElement acc(target, Rat(0));
    for (const auto& [m, c] : poly.terms()) {
      FieldElement t(target, c.galois(zeta_power));
      for (std::size_t i = 0; i < nv; ++i)
        if (m[i]) t = t * power(i, m[i]);
      acc = acc + t;
    }
    return acc;
  };
  FieldElement r = sub_poly(num_);
  for (const auto& [id, e] : den_) {
    FieldElement d = sub_poly(ctx_->factor(id));
    if (d.is_zero()) throw std::domain_error("pole at specialization point");
    r = r * d.inverse().pow(e);
  }
  return r;
}

namespace {
Cyc eval_poly(const MultiPoly& p, const std::vector<Rat>& point) {
  const auto* f = p.field();
  Cyc acc(f);
  for (const auto& [m, c] : p.terms()) {
    Rat v = 1;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!m[i]) continue;
      if (i >= point.size()) throw std::invalid_argument("evaluate: point has too few coordinates");
      for (unsigned k = 0; k < m[i]; ++k) v *= point[i];
    }
    acc += c * v;
  }
  return acc;
}
}  // namespace

Cyc FieldElement::evaluate(const std::vector<Rat>& point) const {
  if (!ctx_) return Cyc(cyclotomic_field(1));
  Cyc v = eval_poly(num_, point);
  for (const auto& [id, e] : den_) {
    Cyc d = eval_poly(ctx_->factor(id), point);
    if (d.is_zero()) throw std::domain_error("pole at specialization point");
    v = v * d.inverse().pow(e);
  }
  return v;
}

FieldElement FieldElement::embed(const FieldPtr& target) const {
  if (!ctx_ || target == ctx_) return lift(*this, target);
  std::map<std::size_t, FieldElement> img;
  for (std::size_t i = 0; i < ctx_->nvars(); ++i) {
    auto j = target->var_index(ctx_->vars()[i]);
    if (!j) throw std::invalid_argument("embed: variable " + ctx_->vars()[i] + " missing in target");
    img.emplace(i, FieldElement::variable(target, *j));
  }
  if (img.empty()) {
    FieldElement r(target, Rat(0));
    if (auto c = constant()) {
      if (c->field() != target->scalars()) throw std::invalid_argument("embed: different scalars");
      r = FieldElement(target, *c);
    }
    return r;
  }
  return substitute(img);
}

FieldElement FieldElement::derivative(std::size_t i) const {
  if (!ctx_) return *this;
  // (N / prod f^e)' = N' / D - N * sum e f' / (f D)
  FieldElement r(ctx_, num_.derivative(i), den_);
  for (const auto& [id, e] : den_) {
    const MultiPoly& f = ctx_->factor(id);
    Denominator d = den_;
    for (auto& [fid, fe] : d)
      if (fid == id) ++fe;
    r -= FieldElement(ctx_, num_ * f.derivative(i) * Cyc(ctx_->scalars(), Rat(e)), d);
  }
  return r;
}

std::string FieldElement::to_string() const {
  if (!ctx_) return "0";
  std::string n = num_.to_string(ctx_->vars());
  if (den_.empty()) return n;
  std::ostringstream os;
  os << (num_.size() > 1 ? "(" + n + ")" : n) << "/";
  std::vector<std::string> parts;
  for (const auto& [id, e] : den_) {
    MultiPoly f = ctx_->factor(id);
    std::string s = f.to_string(ctx_->vars());
    if (f.size() > 1) s = "(" + s + ")";
    if (e > 1) s += "^" + std::to_string(e);
    parts.push_back(s);
  }
  if (parts.size() == 1 && den_[0].second == 1) {
    os << parts[0];
  } else {
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
    os << ")";
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const FieldPtr& ctx, const std::string& s) : ctx_(ctx), s_(s) {}

  FieldElement parse() {
    FieldElement v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  FieldElement expr() {
    FieldElement v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  FieldElement term() {
    FieldElement v = unary();
    for (;;) {
      if (eat('*')) v = v * unary();
      else if (eat('/')) v = v / unary();
      else return v;
    }
  }
  FieldElement unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  FieldElement power() {
    FieldElement b = atom();
    if (!eat('^')) return b;
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be an integer");
    long e = std::stol(s_.substr(start, pos_ - start));
    return b.pow(neg ? -e : e);
  }
  FieldElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FieldElement v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return FieldElement(ctx_, Rat(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (auto i = ctx_->var_index(name)) return FieldElement::variable(ctx_, *i);
      if (name == "zeta") return FieldElement::zeta(ctx_);
      pos_ = start;
      fail("undeclared variable " + name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const FieldPtr& ctx_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_field_element(const FieldPtr& ctx, const std::string& text) { return Parser(ctx, text).parse(); }

std::optional<FieldElement> is_square(const FieldElement& f) {
  if (!f.context() || f.is_zero()) return f;
  const auto& ctx = f.context();
  // f * prod factor^(2 ceil(e/2)) is a polynomial; it is a square iff f is
  MultiPoly p = f.numerator();
  FieldElement::Denominator half;
  for (const auto& [id, e] : f.denominator()) {
    if (e % 2) p = p * ctx->factor(id);
    half.emplace_back(id, (e + 1) / 2);
  }
  auto g = p.sqrt();
  if (!g) return std::nullopt;
  return FieldElement(ctx, std::move(*g), std::move(half));
}

std::vector<Rat> sample_point(const FieldPtr& ctx, const std::vector<FieldElement>& nondegeneracy, Rng& rng,
                              int retries) {
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<Rat> pt(ctx->nvars());
    for (auto& x : pt) x = Rat(rng.uniform(-20, 20));
    bool good = true;
    for (const auto& g : nondegeneracy) {
      try {
        if (g.evaluate(pt).is_zero()) good = false;
      } catch (const std::domain_error&) {
        good = false;
      }
      if (!good) break;
    }
    if (good) return pt;
  }
  throw std::runtime_error("no nondegenerate specialization point found after " + std::to_string(retries) +
                           " attempts");
}

nlohmann::json to_json(const FieldElement& f) {
  nlohmann::json j;
  j["expr"] = f.to_string();
  auto terms = [&](const MultiPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    if (!f.context()) return arr;
    for (const auto& [m, c] : p.terms()) {
      nlohmann::json mono = nlohmann::json::array();
      for (std::size_t i = 0; i < f.context()->nvars(); ++i) mono.push_back(m[i]);
      nlohmann::json coeff = nlohmann::json::array();
      for (const auto& x : c.coeffs()) coeff.push_back(x.get_str());
      arr.push_back({{"exponents", mono}, {"coefficients", coeff}});
    }
    return arr;
  };
  j["numerator"] = terms(f.numerator());
  nlohmann::json den = nlohmann::json::array();
  for (const auto& [id, e] : f.denominator())
    den.push_back({{"factor", terms(f.context()->factor(id))}, {"exponent", e}});
  j["denominator"] = den;
  return j;
}

}  // namespace brauerlab
