#include "dcs/rational.hpp"

#include "dcs/error.hpp"

#include <algorithm>
#include <cctype>

namespace dcs {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&] { return Error(ErrorCode::InvalidArgument, "not a rational number: '" + s + "'"); };
  if (s.empty()) throw fail();

  std::string_view body = s;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    mpz_class d{std::string(den)};
    if (d == 0) throw fail();
    value = Rational(mpz_class(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw fail();
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class num = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole));
    num = num * scale + (frac.empty() ? mpz_class(0) : mpz_class(std::string(frac)));
    value = Rational(num, scale);
  } else {
    if (!all_digits(body)) throw fail();
    value = Rational(mpz_class(std::string(body)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

Rational harmonic(std::uint64_t k) {
  Rational h = 0;
  for (std::uint64_t i = 1; i <= k; ++i) h += Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(i)));
  return h;
}

}  // namespace dcs
