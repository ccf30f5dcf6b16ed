#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tropgr/coeff_text.hpp"
#include "tropgr/extrat.hpp"
#include "tropgr/puiseux.hpp"
#include "tropgr/rational.hpp"

#include <map>
#include <string>
#include <vector>

using namespace tropgr;

namespace {

// Oracle helper: the exponent set of a coefficient's numerator, read off the
// term map directly rather than through ord()/log_abs().
std::vector<Rat> exponents_of(const PuiseuxPoly& p) {
  std::vector<Rat> out;
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    out.push_back(e);
  }
  return out;
}

ValuedCoeff C(const std::string& s) { return parse_coeff(s); }

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat::parse("3/2") == Rat(3, 2));
  CHECK(Rat::parse("-5") == Rat(-5));
  CHECK(Rat::parse("0.25") == Rat(1, 4));
  CHECK(Rat::parse("-1.5") == Rat(-3, 2));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(7) / Rat(2) == Rat(7, 2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero);
  CHECK_THROWS_AS(Rat(1, 0), DivisionByZero);
  CHECK(Rat(3, 2).to_string() == "3/2");
  CHECK(Rat(-4, 2).to_string() == "-2");
  CHECK(Rat(0).to_string() == "0");
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK(Rat(5, 3) > Rat(1));
}

TEST_CASE("extended rationals with -inf") {
  ExtRat ninf = ExtRat::neg_inf();
  ExtRat seven{Rat(7)};
  CHECK(!ninf.finite());
  CHECK((ninf + seven) == ninf);
  CHECK((seven + ExtRat{Rat(1, 2)}) == ExtRat{Rat(15, 2)});
  CHECK(max(ninf, seven) == seven);
  CHECK(max(ninf, ninf) == ninf);
  CHECK(ninf < seven);
  CHECK(ninf <= ninf);
  CHECK(ninf.to_string() == "-inf");
  CHECK(seven.to_string() == "7");

  // Max-formula exponent conventions: 0 * (-inf) = 0, k>0 preserves -inf.
  CHECK(ninf.times(0) == ExtRat{Rat(0)});
  CHECK(ninf.times(3) == ninf);
  CHECK(seven.times(-2) == ExtRat{Rat(-14)});
  CHECK_THROWS_AS(ninf.times(-1), LocalizationViolation);

  ExtRat parsed;
  CHECK(ExtRat::try_parse("-inf", parsed));
  CHECK(parsed == ninf);
  CHECK(ExtRat::try_parse("3/2", parsed));
  CHECK(parsed == ExtRat{Rat(3, 2)});
  CHECK(!ExtRat::try_parse("inf", parsed));
}

TEST_CASE("puiseux term arithmetic against exponent inspection") {
  PuiseuxPoly t = PuiseuxPoly::t_power(Rat(1));
  PuiseuxPoly t_half = PuiseuxPoly::t_power(Rat(1, 2));

  // Product of t and t^(1/2): exactly one term with exponent 3/2.
  PuiseuxPoly prod = t * t_half;
  CHECK(exponents_of(prod) == std::vector<Rat>{Rat(3, 2)});
  CHECK(prod.coeff_at(Rat(3, 2)) == Rat(1));
  CHECK(prod == PuiseuxPoly::t_power(Rat(3, 2)));

  // Exact cancellation leaves the zero polynomial.
  PuiseuxPoly tinv = PuiseuxPoly::t_power(Rat(-1));
  CHECK((tinv + (-tinv)).is_zero());

  // No cancellation: the exponent set is the union, ord is the minimum.
  PuiseuxPoly sum = PuiseuxPoly::constant(Rat(1)) + t;
  CHECK(exponents_of(sum) == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(sum.ord() == Rat(0));
  CHECK(ValuedCoeff(sum).log_abs() == ExtRat{Rat(0)});
}

TEST_CASE("valued coefficient canonical form") {
  PuiseuxPoly t = PuiseuxPoly::t_power(Rat(1));
  PuiseuxPoly one = PuiseuxPoly::constant(Rat(1));

  // (t^2 - t)/t reduces to t - 1.
  ValuedCoeff a{t * t - t, t};
  CHECK(a == ValuedCoeff(t - one));
  CHECK(a.denominator() == one);

  // (1 - t^2)/(1 + t) reduces to 1 - t.
  ValuedCoeff b{one - t * t, one + t};
  CHECK(b == ValuedCoeff(one - t));

  // (1 + t)/(1 + t) is 1.
  CHECK(ValuedCoeff{one + t, one + t} == ValuedCoeff::one());

  // Fractional exponents clear through the gcd.
  PuiseuxPoly t_half = PuiseuxPoly::t_power(Rat(1, 2));
  CHECK(ValuedCoeff{PuiseuxPoly::t_power(Rat(3, 2)), t_half} == ValuedCoeff(t));
  CHECK(ValuedCoeff{(t - one) * t_half, t - one} == ValuedCoeff(t_half));

  // Denominator is kept at order zero with top coefficient 1.
  ValuedCoeff c{one, (one + t) * Rat(2)};
  CHECK(c.denominator().ord() == Rat(0));
  CHECK(c.denominator().coeff_at(c.denominator().top()) == Rat(1));
  CHECK(c * ValuedCoeff{(one + t) * Rat(2), one} == ValuedCoeff::one());

  // Canonicalization is idempotent.
  ValuedCoeff again{c.numerator(), c.denominator()};
  CHECK(again == c);
  CHECK(again.numerator() == c.numerator());
  CHECK(again.denominator() == c.denominator());

  CHECK_THROWS_AS(ValuedCoeff(one, PuiseuxPoly{}), DivisionByZero);
}

TEST_CASE("log_abs and residue leading coefficients") {
  CHECK(C("t").log_abs() == ExtRat{Rat(-1)});
  CHECK(C("2").log_abs() == ExtRat{Rat(0)});
  CHECK(C("t^(-1)").log_abs() == ExtRat{Rat(1)});
  CHECK(C("t^(3/2)").log_abs() == ExtRat{Rat(-3, 2)});
  CHECK(C("0").log_abs() == ExtRat::neg_inf());
  CHECK(ValuedCoeff{}.is_zero());

  // (3t^2 + t^3)/(2t): value order 1, leading rational 3/2.
  ValuedCoeff c = C("(3*t^(2) + t^(3))/(2*t)");
  CHECK(c.log_abs() == ExtRat{Rat(-1)});
  CHECK(c.residue_leading() == Rat(3, 2));
  CHECK(C("-2*t^(-1)").residue_leading() == Rat(-2));
}

TEST_CASE("ultrametric laws") {
  std::vector<ValuedCoeff> samples = {
      C("2*t^(-1) + 1"), C("t^(1/2)"), C("-2*t^(-1) + 3"),
      C("1/(1 + t)"),    C("t^(2)"),   C("5"),
  };
  for (const auto& a : samples) {
    for (const auto& b : samples) {
      CHECK((a * b).log_abs() == a.log_abs() + b.log_abs());
      CHECK((a + b).log_abs() <= max(a.log_abs(), b.log_abs()));
      if (a.log_abs() != b.log_abs()) {
        CHECK((a + b).log_abs() == max(a.log_abs(), b.log_abs()));
      }
    }
  }
  // Cancellation drops the value strictly below the max.
  ValuedCoeff sum = C("2*t^(-1) + 1") + C("-2*t^(-1) + 3");
  CHECK(sum == C("4"));
  CHECK(sum.log_abs() == ExtRat{Rat(0)});
}

TEST_CASE("coefficient powers and division") {
  ValuedCoeff one_plus_t = C("1 + t");
  CHECK(one_plus_t.pow(2) == C("1 + 2*t + t^(2)"));
  CHECK(C("t").pow(-2) == C("t^(-2)"));
  CHECK(C("t^(1/2)") * C("t") == C("t^(3/2)"));
  CHECK((C("t^(-1)") + C("-t^(-1)")).is_zero());
  CHECK(C("(1 - t)/(1 + t)") * C("1 + t") == C("1 - t"));
  CHECK_THROWS_AS(C("1") / ValuedCoeff{}, DivisionByZero);
}

TEST_CASE("coefficient text round trip") {
  std::vector<std::string> canonical = {
      "0",
      "1",
      "-1",
      "3/2",
      "t",
      "-t",
      "t^(3/2)",
      "t^(-1)",
      "2*t^(-1) + 1",
      "1 + t",
      "1/(1 + t)",
      "(1 + t)/(1 + t^(2))",
      "-1/2 + t^(1/2)",
  };
  for (const auto& s : canonical) {
    ValuedCoeff c = parse_coeff(s);
    CHECK(print_coeff(c) == s);
    CHECK(parse_coeff(print_coeff(c)) == c);
  }

  // Non-canonical spellings parse to the same values.
  CHECK(parse_coeff("t^2") == C("t^(2)"));
  CHECK(parse_coeff("(t + t^(2))/t") == C("1 + t"));
  CHECK(parse_coeff("- t") == C("-t"));
  CHECK(parse_coeff("(1+t)*(1-t)") == C("1 - t^(2)"));
  CHECK(parse_coeff("2^(3)") == C("8"));
  CHECK(parse_coeff("(1+t)^2") == C("1 + 2*t + t^(2)"));
}

TEST_CASE("coefficient syntax errors carry byte offsets") {
  auto offset_of = [](const std::string& s) -> std::size_t {
    try {
      parse_coeff(s);
    } catch (const SyntaxError& e) {
      return e.offset;
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("t^^2") == 2);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("1 +") == 3);
  CHECK(offset_of("(1 + t") == 6);
  // Division by zero is an arithmetic error, not a syntax error.
  CHECK_THROWS_AS(parse_coeff("1/0"), DivisionByZero);
  CHECK_THROWS_AS(parse_coeff("t^(1/2/3)"), SyntaxError);
}
