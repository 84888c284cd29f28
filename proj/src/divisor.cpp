#include "eistrace/divisor.hpp"

#include <numeric>
#include <sstream>

namespace eistrace {

namespace {

long to_long(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw DivisorError(std::string(what) + " does not fit a machine word");
  return z.get_si();
}

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

long parse_integer(const std::string& raw) {
  std::string s = trimmed(raw);
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw DivisorError("bad integer '" + raw + "' in divisor");
  }
  if (pos != s.size()) throw DivisorError("bad integer '" + raw + "' in divisor");
  return v;
}

Rational parse_rational(const std::string& raw) {
  try {
    return rational_from_string(trimmed(raw));
  } catch (const std::exception&) {
    throw DivisorError("bad rational '" + raw + "' in divisor");
  }
}

}  // namespace

long TorsionPoint::alpha_denom() const {
  return to_long(alpha.get_den(), "alpha denominator");
}

long TorsionPoint::beta_denom() const { return to_long(beta.get_den(), "beta denominator"); }

long TorsionPoint::beta_num() const { return to_long(beta.get_num(), "beta numerator"); }

long TorsionPoint::alpha_units(long L) const {
  Rational u = alpha * Rational(L);
  if (u.get_den() != 1) throw SeriesDomainError("alpha is not integral on the requested grid");
  return to_long(u.get_num(), "alpha grid exponent");
}

Divisor::Divisor(std::vector<DivisorTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw DivisorError("divisor needs at least one term");
  for (const DivisorTerm& t : terms_) {
    if (t.mult == 0) throw DivisorError("divisor multiplicities must be nonzero");
    if (t.is_origin() && (t.lift_a != 0 || t.lift_b != 0))
      throw DivisorError("lattice shifts of the origin are not supported");
  }
}

Divisor Divisor::parse(const std::string& text) {
  std::vector<DivisorTerm> terms;
  for (const std::string& chunk : split_on(text, ';')) {
    std::string term = trimmed(chunk);
    if (term.empty()) throw DivisorError("empty divisor term");
    size_t at = term.find('@');
    if (at == std::string::npos) throw DivisorError("divisor term needs '@': " + term);
    DivisorTerm out;
    out.mult = parse_integer(term.substr(0, at));
    std::vector<std::string> halves = split_on(term.substr(at + 1), '+');
    if (halves.size() > 2) throw DivisorError("too many '+' in divisor term: " + term);
    std::vector<std::string> coords = split_on(halves[0], ',');
    if (coords.size() != 2) throw DivisorError("divisor point needs 'alpha,beta': " + term);
    Rational alpha = parse_rational(coords[0]);
    Rational beta = parse_rational(coords[1]);
    if (halves.size() == 2) {
      std::vector<std::string> lifts = split_on(halves[1], ',');
      if (lifts.size() != 2) throw DivisorError("lattice shift needs 'la,lb': " + term);
      out.lift_a = parse_integer(lifts[0]);
      out.lift_b = parse_integer(lifts[1]);
    }
    long ia = 0, ib = 0;
    Rational ra = reduce_mod1(alpha, &ia);
    Rational rb = reduce_mod1(beta, &ib);
    out.x = TorsionPoint(ra, rb);
    out.lift_a += ia;
    out.lift_b += ib;
    terms.push_back(std::move(out));
  }
  return Divisor(std::move(terms));
}

std::string Divisor::str() const {
  std::ostringstream os;
  bool first = true;
  for (const DivisorTerm& t : terms_) {
    if (!first) os << ";";
    first = false;
    os << t.mult << "@" << rational_to_string(t.x.alpha) << "," << rational_to_string(t.x.beta);
    if (t.lift_a != 0 || t.lift_b != 0) os << "+" << t.lift_a << "," << t.lift_b;
  }
  return os.str();
}

long Divisor::origin_mult() const {
  long m = 0;
  for (const DivisorTerm& t : terms_)
    if (t.is_origin()) m += t.mult;
  return m;
}

long Divisor::degree() const {
  long d = 0;
  for (const DivisorTerm& t : terms_) d += t.mult;
  return d;
}

long Divisor::qgrid() const {
  long l = 1;
  for (const DivisorTerm& t : terms_) l = std::lcm(l, t.x.alpha_denom());
  return l;
}

long Divisor::conductor() const {
  long l = 1;
  for (const DivisorTerm& t : terms_) l = std::lcm(l, t.x.beta_denom());
  return l;
}

bool Divisor::zero_sum() const {
  Rational sa(0), sb(0);
  for (const DivisorTerm& t : terms_) {
    sa += Rational(t.mult) * (t.x.alpha + Rational(t.lift_a));
    sb += Rational(t.mult) * (t.x.beta + Rational(t.lift_b));
  }
  return sgn(sa) == 0 && sgn(sb) == 0;
}

}  // namespace eistrace
