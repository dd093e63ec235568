#include "plh/rational.hpp"

#include <cctype>

#include "plh/error.hpp"

namespace plh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::UnboundGenerator: return "UnboundGenerator";
    case ErrorCode::NonIntervalSupport: return "NonIntervalSupport";
    case ErrorCode::NonArcSupport: return "NonArcSupport";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::CannotUnroll: return "CannotUnroll";
    case ErrorCode::NotMinipotent: return "NotMinipotent";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::InvalidConjugationWitness: return "InvalidConjugationWitness";
  }
  return "Unknown";
}

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  mpz_class n(strip_plus(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(std::move(q));
}

mpz_class Rat::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return out;
}

mpz_class Rat::ceil() const {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return out;
}

Rat Rat::mod(const Rat& m) const {
  if (m.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  const Rat q = *this / m;
  return *this - m * from_mpz(q.floor());
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
Rat from_mpz(const mpz_class& z) { return Rat(mpq_class(z)); }

ExtRat ExtRat::parse(std::string_view text) {
  if (text == "-inf") return neg_inf();
  if (text == "+inf" || text == "inf") return pos_inf();
  return ExtRat(Rat::parse(text));
}

const Rat& ExtRat::value() const {
  if (kind_ != Kind::Finite) throw Error(ErrorCode::InvalidArgument, "value() of an infinite endpoint");
  return value_;
}

std::string ExtRat::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: break;
  }
  return value_.str();
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.kind_ != b.kind_ || a.kind_ != ExtRat::Kind::Finite) {
    auto rank = [](ExtRat::Kind k) { return static_cast<int>(k); };
    if (a.kind_ == b.kind_) return std::strong_ordering::equal;
    return rank(a.kind_) <=> rank(b.kind_);
  }
  return a.value_ <=> b.value_;
}

}  // namespace plh

std::size_t std::hash<plh::Rat>::operator()(const plh::Rat& r) const noexcept {
  const std::size_t h1 = std::hash<std::string>{}(r.raw().get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(r.raw().get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}
