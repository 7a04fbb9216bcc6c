#include "misinfo/rational.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "misinfo/error.hpp"

namespace misinfo {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::ShapeMismatch: return "shape-mismatch";
    case ErrorKind::NonCanonical: return "non-canonical";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::UndefinedMetric: return "undefined-metric";
    case ErrorKind::EmptyEquilibria: return "empty-equilibria";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorKind::Parse, "rational '" + std::string(text) + "' has zero denominator");
  Rational r;
  r.v_ = mpq_class(parse_integer(num), d);
  r.v_.canonicalize();
  return r;
}

std::string Rational::str() const { return v_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::size_t Rational::hash() const {
  auto limb_hash = [](mpz_srcptr z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0, n = mpz_size(z); i < n; ++i)
      h = (h ^ std::hash<mp_limb_t>{}(mpz_getlimbn(z, i))) * 0x100000001b3ULL;
    return h;
  };
  std::size_t h = limb_hash(v_.get_num_mpz_t());
  return h ^ (limb_hash(v_.get_den_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const Rational& Number::exact() const {
  if (!is_exact()) throw Error(ErrorKind::InvalidArgument, "numeric value has no exact form");
  return std::get<Rational>(v_);
}

double Number::to_double() const {
  return is_exact() ? std::get<Rational>(v_).to_double() : std::get<double>(v_);
}

std::string Number::str() const {
  if (is_exact()) return std::get<Rational>(v_).str();
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(v_);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Number& n) { return os << n.str(); }

}  // namespace misinfo
