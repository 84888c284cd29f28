#pragma once

#include <string>
#include <vector>

#include "eistrace/errors.hpp"
#include "eistrace/rational.hpp"

namespace eistrace {

// A torsion point a t + b on the unit square, both coordinates reduced mod 1
// into [0, 1).
struct TorsionPoint {
  Rational alpha{0};
  Rational beta{0};

  TorsionPoint() = default;
  TorsionPoint(const Rational& a, const Rational& b)
      : alpha(reduce_mod1(a)), beta(reduce_mod1(b)) {}

  bool is_origin() const { return sgn(alpha) == 0 && sgn(beta) == 0; }
  long alpha_denom() const;
  long beta_denom() const;
  // beta as beta_num()/beta_denom() in lowest terms.
  long beta_num() const;
  // alpha * L, which must be integral.
  long alpha_units(long L) const;

  bool operator==(const TorsionPoint&) const = default;
};

struct DivisorTerm {
  long mult = 0;
  TorsionPoint x;
  // Integer lattice shift carried by the point before reduction.
  long lift_a = 0;
  long lift_b = 0;

  bool is_origin() const { return x.is_origin(); }
  bool operator==(const DivisorTerm&) const = default;
};

// A finite formal sum of torsion points with integer multiplicities.  Terms
// keep the lattice lifts that reduction folded out of the coordinates, so the
// exact zero-sum condition sum mult * (x + lift) = 0 stays checkable.
class Divisor {
 public:
  explicit Divisor(std::vector<DivisorTerm> terms);

  // Grammar: term(';' term)*, term = mult '@' alpha ',' beta ['+' la ',' lb]
  // with mult, la, lb integers and alpha, beta rationals.  Integer parts of
  // alpha and beta fold into the lifts.
  static Divisor parse(const std::string& text);

  const std::vector<DivisorTerm>& terms() const { return terms_; }
  std::string str() const;
  long origin_mult() const;
  long degree() const;
  // lcm of the alpha denominators: the q^{1/L} grid the expansions need.
  long qgrid() const;
  // lcm of the beta denominators: the root-of-unity order the ring needs.
  long conductor() const;
  bool zero_sum() const;

 private:
  std::vector<DivisorTerm> terms_;
};

}  // namespace eistrace
