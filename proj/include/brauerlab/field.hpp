#pragma once

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauerlab/poly.hpp"
#include "brauerlab/rng.hpp"
#include "json.hpp"

namespace brauerlab {

/// Rational function field Q(zeta_N)(x_1, ..., x_k): variable names plus a table of interned monic
/// denominator factors shared by all elements of the field.
class FieldContext {
 public:
  FieldContext(int conductor, std::vector<std::string> vars);

  const CyclotomicField* scalars() const { return f_; }
  int conductor() const { return f_->conductor(); }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  std::optional<std::size_t> var_index(const std::string& name) const;

  /// Id of the monic polynomial p (leading coefficient 1), interning it when new.
  int intern(const MultiPoly& monic);
  /// Stable reference; factors are never removed.
  const MultiPoly& factor(int id) const;
  std::size_t factor_count() const;

 private:
  const CyclotomicField* f_;
  std::vector<std::string> vars_;
  mutable std::mutex mu_;
  std::deque<MultiPoly> factors_;
  std::map<std::string, int> index_;
};

using FieldPtr = std::shared_ptr<FieldContext>;

FieldPtr make_field(int conductor, const std::vector<std::string>& vars);

/// num / prod factor_i^e_i with monic interned factors; not reduced to lowest terms.
class FieldElement {
 public:
  using Denominator = std::vector<std::pair<int, int>>;  // (factor id, exponent), sorted by id

  FieldElement() = default;  // zero with no context
  FieldElement(FieldPtr ctx, const Rat& q);
  FieldElement(FieldPtr ctx, const Cyc& c);
  FieldElement(FieldPtr ctx, MultiPoly num, Denominator den = {});

  static FieldElement variable(FieldPtr ctx, const std::string& name);
  static FieldElement variable(FieldPtr ctx, std::size_t i);
  static FieldElement zeta(FieldPtr ctx, long k = 1);

  const FieldPtr& context() const { return ctx_; }
  const MultiPoly& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  MultiPoly denominator_poly() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  /// The scalar value when constant.
  std::optional<Cyc> constant() const;
  std::optional<Rat> rational() const;
  /// Total term count of numerator and denominator factors, used as a size measure.
  std::size_t size() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator*(const Rat& q) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement inverse() const;
  FieldElement pow(long k) const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Simultaneous substitution of variables; unlisted variables stay. Scalars map by zeta -> zeta^k.
  FieldElement substitute(const std::map<std::size_t, FieldElement>& images, long zeta_power = 1) const;
  /// Rational value at a point with one entry per variable; throws "pole at specialization point".
  Cyc evaluate(const std::vector<Rat>& point) const;
  /// Same field element rewritten over another context containing these variable names.
  FieldElement embed(const FieldPtr& target) const;

  /// Partial derivative in variable i.
  FieldElement derivative(std::size_t i) const;

  std::string to_string() const;

 private:
  void require_ctx(const FieldElement& o) const;
  void cancel();
  FieldElement zero_like() const;

  FieldPtr ctx_;
  MultiPoly num_;
  Denominator den_;
};

/// Expression parser: integers, rationals, declared variables, zeta, + - * / ^ and parentheses.
FieldElement parse_field_element(const FieldPtr& ctx, const std::string& text);

/// g with g^2 = f when found. The polynomial part is exact; a scalar leading coefficient whose root
/// the cyclotomic square root misses is reported as none.
std::optional<FieldElement> is_square(const FieldElement& f);

/// Integer point in [-20, 20]^k at which every listed polynomial is defined and nonzero.
std::vector<Rat> sample_point(const FieldPtr& ctx, const std::vector<FieldElement>& nondegeneracy, Rng& rng,
                              int retries = 100);

nlohmann::json to_json(const FieldElement& f);

}  // namespace brauerlab
