#include "plh/word.hpp"

#include <cctype>
#include <cstdlib>

#include "plh/error.hpp"

namespace plh {

Word word_reduce(const std::vector<Letter>& letters) { return Word(letters); }

Word::Word(std::vector<Letter> letters) {
  // Stack-based reduction handles cascades such as "f g g^-1 f^-1".
  for (auto& l : letters) {
    if (l.exponent == 0) continue;
    if (!letters_.empty() && letters_.back().name == l.name) {
      letters_.back().exponent += l.exponent;
      if (letters_.back().exponent == 0) letters_.pop_back();
    } else {
      letters_.push_back(std::move(l));
    }
  }
}

Word Word::generator(std::string name, long exponent) { return Word({Letter{std::move(name), exponent}}); }

namespace {

bool name_char(char c, bool first) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || (!first && std::isdigit(u));
}

}  // namespace

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto skip_separators = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '.' || text[i] == '*'))
      ++i;
  };
  skip_separators();
  if (text.substr(i) == "1") return Word{};
  while (i < text.size()) {
    if (!name_char(text[i], true))
      throw Error(ErrorCode::ParseError, "bad generator name at '" + std::string(text.substr(i)) + "'");
    const std::size_t start = i;
    while (i < text.size() && name_char(text[i], false)) ++i;
    Letter l{std::string(text.substr(start, i - start)), 1};
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t estart = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      const std::string e(text.substr(estart, i - estart));
      if (e.empty() || e == "-" || e == "+") throw Error(ErrorCode::ParseError, "missing exponent in '" + std::string(text) + "'");
      l.exponent = std::strtol(e.c_str(), nullptr, 10);
    }
    letters.push_back(std::move(l));
    if (i < text.size() && !(std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '.' || text[i] == '*'))
      throw Error(ErrorCode::ParseError, "unexpected '" + std::string(1, text[i]) + "' in '" + std::string(text) + "'");
    skip_separators();
  }
  return Word(std::move(letters));
}

long Word::length() const {
  long n = 0;
  for (const auto& l : letters_) n += std::labs(l.exponent);
  return n;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return Word(std::move(out));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '.';
    out += letters_[i].name;
    if (letters_[i].exponent != 1) out += "^" + std::to_string(letters_[i].exponent);
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> all = a.letters_;
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(all));
}

Word commutator_word(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

Word conjugate_word(const Word& g, const Word& u) { return u * g * u.inverse(); }

void GenAssignment::bind(const std::string& name, PLMap map) {
  const bool circ = is_circle(map);
  if (circle_ && *circle_ != circ)
    throw Error(ErrorCode::KindMismatch, "generator '" + name + "' has a different kind from the others");
  if (circ) {
    const Rat& L = std::get<CircleMap>(map).modulus();
    if (modulus_ && *modulus_ != L)
      throw Error(ErrorCode::ModulusMismatch, "generator '" + name + "' has modulus " + L.str() + ", expected " +
                                                  modulus_->str());
    modulus_ = L;
  }
  circle_ = circ;
  PLMap inv = invert(map);
  if (maps_.count(name) == 0) order_.push_back(name);
  maps_.insert_or_assign(name, Entry{std::move(map), std::move(inv)});
}

const PLMap& GenAssignment::at(const std::string& name) const {
  auto it = maps_.find(name);
  if (it == maps_.end()) throw Error(ErrorCode::UnboundGenerator, "'" + name + "' is not bound");
  return it->second.map;
}

const PLMap& GenAssignment::inverse_of(const std::string& name) const {
  auto it = maps_.find(name);
  if (it == maps_.end()) throw Error(ErrorCode::UnboundGenerator, "'" + name + "' is not bound");
  return it->second.inverse;
}

PLMap GenAssignment::identity() const {
  if (circle_.value_or(false)) return CircleMap(*modulus_);
  return LineMap{};
}

PLMap GenAssignment::eval(const Word& w) const {
  PLMap acc = identity();
  for (const auto& l : w.letters()) {
    const PLMap& step = l.exponent > 0 ? at(l.name) : inverse_of(l.name);
    for (long k = 0; k < std::labs(l.exponent); ++k) acc = compose(acc, step);
  }
  return acc;
}

Rat GenAssignment::apply(const Word& w, const Rat& x) const {
  Rat p = x;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const PLMap& step = it->exponent > 0 ? at(it->name) : inverse_of(it->name);
    for (long k = 0; k < std::labs(it->exponent); ++k) p = evaluate(step, p);
  }
  return p;
}

PLMap word_eval(const Word& w, const GenAssignment& env) { return env.eval(w); }

}  // namespace plh
