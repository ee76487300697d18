#include "zfort/rational.hpp"

#include "zfort/errors.hpp"

namespace zfort {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw InputError("empty rational");
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    Integer z;
    if (part.empty() || z.set_str(part, 10) != 0) throw InputError("not a rational: '" + s + "'");
    return z;
  };
  Rational r;
  if (slash == std::string::npos) {
    r = Rational(parse_int(s));
  } else {
    const Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    r = Rational(parse_int(s.substr(0, slash)), den);
    r.canonicalize();
  }
  return r;
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

namespace {

struct Bracket {
  Rational low;
  Rational high;
};

// ln((1+t)/(1-t)) = 2 (t + t^3/3 + t^5/5 + ...), 0 <= t <= 1/3. The partial
// sum is a lower bound; the tail is at most 2 t^(2J+1) / ((2J+1)(1-t^2)).
Bracket log_series(const Rational& t, unsigned bits) {
  const Rational t2 = t * t;
  const Rational target(Integer(1), Integer(1) << (bits + 4));
  Rational power = t;
  Rational sum = 0;
  unsigned j = 0;
  while (true) {
    sum += power / (2 * j + 1);
    power *= t2;
    ++j;
    const Rational tail = 2 * power / ((2 * j + 1) * (1 - t2));
    if (tail <= target || power == 0) return {2 * sum, 2 * sum + tail};
  }
}

Rational round_to_bits(const Rational& r, unsigned bits, bool up) {
  const Rational scaled = r * Rational(Integer(1) << bits);
  const Integer n = up ? ceil(scaled) : floor(scaled);
  Rational out(n, Integer(1) << bits);
  out.canonicalize();
  return out;
}

Bracket log_bracket(const Integer& d, unsigned bits) {
  if (d < 1) throw InputError("logarithm argument must be a positive integer");
  if (d == 1) return {Rational(0), Rational(0)};
  const std::size_t k = mpz_sizeinbase(d.get_mpz_t(), 2) - 1;
  // d = 2^k x with 1 <= x < 2.
  Rational x(d, Integer(1) << k);
  x.canonicalize();
  const Bracket ln2 = log_series(Rational(1, 3), bits);
  const Bracket lnx = log_series((x - 1) / (x + 1), bits);
  const Rational kk(static_cast<unsigned long>(k));
  return {round_to_bits(kk * ln2.low + lnx.low, bits, false),
          round_to_bits(kk * ln2.high + lnx.high, bits, true)};
}

}  // namespace

Rational log_lower_bound(const Integer& d, unsigned bits) { return log_bracket(d, bits).low; }

Rational log_upper_bound(const Integer& d, unsigned bits) { return log_bracket(d, bits).high; }

}  // namespace zfort
