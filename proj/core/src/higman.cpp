#include "plh/higman.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "plh/error.hpp"
#include "plh/parallel.hpp"

namespace plh {

std::string HigmanCertificate::str() const {
  std::string out = std::string("higman ") + (shape == HigmanShape::One ? "ONE " : "TWO ") + s1 + " " + s2 + " " +
                    g.str() + " " + u1.str();
  if (shape == HigmanShape::Two) out += " " + u2.str();
  return out;
}

HigmanCertificate HigmanCertificate::parse(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  if (tok.size() < 6 || tok[0] != "higman" || (tok[1] != "ONE" && tok[1] != "TWO"))
    throw Error(ErrorCode::ParseError, "expected 'higman ONE|TWO s1 s2 g u [u2]': " + std::string(line));
  HigmanCertificate c;
  c.shape = tok[1] == "ONE" ? HigmanShape::One : HigmanShape::Two;
  if (tok.size() != (c.shape == HigmanShape::One ? 6u : 7u))
    throw Error(ErrorCode::ParseError, "wrong number of fields: " + std::string(line));
  c.s1 = tok[2];
  c.s2 = tok[3];
  c.g = Word::parse(tok[4]);
  c.u1 = Word::parse(tok[5]);
  if (c.shape == HigmanShape::Two) c.u2 = Word::parse(tok[6]);
  return c;
}

namespace {

HigmanResult disjoint_from_image(const PointSet& set, const PLMap& h) {
  const PointSet moved = image(h, set);
  HigmanResult r;
  r.witness = common_point(set, moved);
  r.ok = !r.witness;
  r.detail = to_string(set) + " vs " + to_string(moved);
  return r;
}

}  // namespace

HigmanResult verify_higman(const GenAssignment& env, const HigmanCertificate& cert) {
  const PointSet a = ss_union(support(env.at(cert.s1)), support(env.at(cert.s2)));
  const PLMap h1 = env.eval(conjugate_word(cert.g, cert.u1));
  if (cert.shape == HigmanShape::One) return disjoint_from_image(a, h1);
  const PointSet b = ss_union(support(env.at(cert.s1)), image(h1, support(env.at(cert.s2))));
  return disjoint_from_image(b, env.eval(conjugate_word(cert.g, cert.u2)));
}

std::vector<Word> shortlex_words(const std::vector<std::string>& alphabet, long length, std::size_t limit) {
  std::vector<Letter> letters;
  for (const auto& name : alphabet) {
    letters.push_back({name, 1});
    letters.push_back({name, -1});
  }
  std::vector<Word> out;
  if (length < 0) return out;
  std::vector<Letter> current;
  // depth-first over letter indices, so output is lexicographic
  std::function<void()> walk = [&] {
    if (out.size() >= limit) return;
    if (static_cast<long>(current.size()) == length) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (!current.empty() && current.back().name == letters[i].name &&
          current.back().exponent == -letters[i].exponent)
        continue;
      current.push_back(letters[i]);
      walk();
      current.pop_back();
    }
  };
  walk();
  return out;
}

std::optional<HigmanCertificate> search_higman(const GenAssignment& env, const std::vector<std::string>& alphabet,
                                               const std::string& s1, const std::string& s2, const Word& g,
                                               long max_len) {
  if (max_len < 0) throw Error(ErrorCode::InvalidArgument, "max length must be >= 0");
  env.at(s1);
  env.at(s2);
  for (const auto& letter : g.letters()) env.at(letter.name);

  const PointSet supp1 = support(env.at(s1));
  const PointSet supp2 = support(env.at(s2));
  const PointSet a = ss_union(supp1, supp2);

  std::vector<std::vector<Word>> words;
  std::vector<std::vector<PLMap>> conj;  // conj[l][t] = u g u^-1 for u = words[l][t]

  constexpr std::size_t kChunk = 2048;
  for (long len = 0; len <= max_len; ++len) {
    words.push_back(shortlex_words(alphabet, len));
    conj.emplace_back(words.back().size(), env.identity());
    parallel_for(words.back().size(),
                 [&](std::size_t t) { conj.back()[t] = env.eval(conjugate_word(g, words.back()[t])); });

    // ONE at this length
    const auto& ones = conj.back();
    for (std::size_t base = 0; base < ones.size(); base += kChunk) {
      const std::size_t n = std::min(kChunk, ones.size() - base);
      std::vector<char> ok(n, 0);
      parallel_for(n, [&](std::size_t t) { ok[t] = set_empty(ss_intersect(a, image(ones[base + t], a))); });
      for (std::size_t t = 0; t < n; ++t)
        if (ok[t]) return HigmanCertificate{s1, s2, g, HigmanShape::One, words.back()[base + t], Word{}, true};
    }

    // TWO with |u1| + |u2| = len, ordered by (|u1|, u1, u2)
    for (long l1 = 0; l1 <= len; ++l1) {
      const auto& w1 = words[l1];
      const auto& w2 = words[len - l1];
      const std::size_t total = w1.size() * w2.size();
      for (std::size_t base = 0; base < total; base += kChunk) {
        const std::size_t n = std::min(kChunk, total - base);
        std::vector<char> ok(n, 0);
        parallel_for(n, [&](std::size_t t) {
          const std::size_t idx = base + t;
          const PLMap& h1 = conj[l1][idx / w2.size()];
          const PLMap& h2 = conj[len - l1][idx % w2.size()];
          const PointSet b = ss_union(supp1, image(h1, supp2));
          ok[t] = set_empty(ss_intersect(b, image(h2, b)));
        });
        for (std::size_t t = 0; t < n; ++t) {
          if (!ok[t]) continue;
          const std::size_t idx = base + t;
          return HigmanCertificate{s1, s2, g, HigmanShape::Two, w1[idx / w2.size()], w2[idx % w2.size()], true};
        }
      }
    }
  }
  return std::nullopt;
}

bool moves_into(const GenAssignment& env, const Word& w, const std::vector<ClosedPiece>& k, const Interval& j) {
  for (const auto& piece : k) {
    const Rat a = env.apply(w, piece.lo);
    const Rat b = env.apply(w, piece.hi);
    if (!env.circle()) {
      if (!(j.lo < ExtRat(a) && ExtRat(b) < j.hi)) return false;
      continue;
    }
    const Rat& modulus = *env.modulus();
    const Rat jlo = j.lo.value();
    const Rat jlen = j.hi.value() - jlo;
    const Rat len = piece.lo == piece.hi ? Rat(0) : (b - a).mod(modulus);
    const Rat s = (a - jlo).mod(modulus);
    if (!(s.sign() > 0 && s + len < jlen)) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kFallbackCap = 200000;

Word power(const std::string& name, long p) { return Word::generator(name, p); }

Word block(const std::string& x, long p, const std::string& y, long q) {
  return commutator_word(power(x, p), power(y, q));
}

}  // namespace

std::optional<MoveResult> co_move(const GenAssignment& env, const std::vector<std::string>& alphabet,
                                  const std::vector<ClosedPiece>& k, const Interval& j, long budget,
                                  bool require_commutator) {
  if (k.empty()) throw Error(ErrorCode::InvalidArgument, "K is empty");
  for (const auto& piece : k) {
    if (piece.hi < piece.lo) throw Error(ErrorCode::InvalidArgument, "bad closed piece " + piece.str());
    if (env.circle() && piece.hi - piece.lo >= *env.modulus())
      throw Error(ErrorCode::InvalidArgument, "K is the full circle");
  }
  if (env.circle()) {
    if (!j.lo.is_finite() || !j.hi.is_finite() || j.hi.value() - j.lo.value() > *env.modulus())
      throw Error(ErrorCode::InvalidArgument, "J must be an arc of length at most the circumference");
  }
  for (const auto& name : alphabet) env.at(name);

  if (moves_into(env, Word{}, k, j)) return MoveResult{};
  if (budget <= 0) return std::nullopt;

  if (require_commutator) {
    std::vector<std::pair<Word, std::pair<Word, Word>>> blocks;  // by length
    for (long total = 2; 2 * total <= budget; ++total)
      for (const auto& x : alphabet)
        for (const auto& y : alphabet) {
          if (x == y) continue;
          for (long p = 1; p < total; ++p)
            for (long sp : {1L, -1L})
              for (long sq : {1L, -1L})
                blocks.push_back({block(x, sp * p, y, sq * (total - p)), {power(x, sp * p), power(y, sq * (total - p))}});
        }
    for (const auto& [w, parts] : blocks)
      if (moves_into(env, w, k, j)) return MoveResult{w, {parts}};
    std::size_t tried = 0;
    for (long total = 8; total <= budget; total += 2)
      for (const auto& [w1, p1] : blocks)
        for (const auto& [w2, p2] : blocks) {
          if (w1.length() + w2.length() != total) continue;
          if (++tried > kFallbackCap) return std::nullopt;
          const Word w = w1 * w2;
          if (moves_into(env, w, k, j)) return MoveResult{w, {p1, p2}};
        }
    return std::nullopt;
  }

  for (long len = 1; len <= budget; ++len) {
    for (const auto& x : alphabet)
      for (long s : {1L, -1L}) {
        const Word w = power(x, s * len);
        if (moves_into(env, w, k, j)) return MoveResult{w, {}};
      }
    for (long p = 1; p < len; ++p)
      for (const auto& x : alphabet)
        for (const auto& y : alphabet) {
          if (x == y) continue;
          for (long sp : {1L, -1L})
            for (long sq : {1L, -1L}) {
              const Word w = power(x, sp * p) * power(y, sq * (len - p));
              if (moves_into(env, w, k, j)) return MoveResult{w, {}};
            }
        }
  }
  std::size_t tried = 0;
  for (long len = 1; len <= budget; ++len) {
    for (const auto& w : shortlex_words(alphabet, len, kFallbackCap - tried + 1)) {
      if (++tried > kFallbackCap) return std::nullopt;
      if (moves_into(env, w, k, j)) return MoveResult{w, {}};
    }
  }
  return std::nullopt;
}

}  // namespace plh
