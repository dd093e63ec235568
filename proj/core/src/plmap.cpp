#include "plh/plmap.hpp"

#include "plh/error.hpp"

namespace plh {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void kind_mismatch() { throw Error(ErrorCode::KindMismatch, "line map combined with circle map"); }

template <class Op>
auto binary(const PLMap& f, const PLMap& g, Op op) {
  if (f.index() != g.index()) kind_mismatch();
  if (const auto* lf = std::get_if<LineMap>(&f)) return op(*lf, std::get<LineMap>(g));
  return op(std::get<CircleMap>(f), std::get<CircleMap>(g));
}

template <class Op>
auto binary_sets(const PointSet& a, const PointSet& b, Op op) {
  if (a.index() != b.index()) throw Error(ErrorCode::KindMismatch, "line set combined with circle set");
  if (const auto* la = std::get_if<SupportSet>(&a)) return op(*la, std::get<SupportSet>(b));
  return op(std::get<ArcSet>(a), std::get<ArcSet>(b));
}

}  // namespace

bool is_circle(const PLMap& f) { return std::holds_alternative<CircleMap>(f); }

PLMap identity_like(const PLMap& f) {
  if (const auto* c = std::get_if<CircleMap>(&f)) return CircleMap(c->modulus());
  return LineMap{};
}

Rat evaluate(const PLMap& f, const Rat& x) {
  return std::visit([&](const auto& m) { return m(x); }, f);
}

PLMap compose(const PLMap& f, const PLMap& g) {
  return binary(f, g, [](const auto& a, const auto& b) -> PLMap { return compose(a, b); });
}

PLMap invert(const PLMap& f) {
  return std::visit([](const auto& m) -> PLMap { return invert(m); }, f);
}

PointSet support(const PLMap& f) {
  return std::visit([](const auto& m) -> PointSet { return support(m); }, f);
}

PointSet image(const PLMap& f, const PointSet& set) {
  if (f.index() != set.index()) throw Error(ErrorCode::KindMismatch, "map and set live on different spaces");
  if (const auto* lf = std::get_if<LineMap>(&f)) return image(*lf, std::get<SupportSet>(set));
  return image(std::get<CircleMap>(f), std::get<ArcSet>(set));
}

PLMap conjugate(const PLMap& g, const PLMap& u) {
  return binary(g, u, [](const auto& a, const auto& b) -> PLMap { return conjugate(a, b); });
}

PLMap commutator(const PLMap& f, const PLMap& g) {
  return binary(f, g, [](const auto& a, const auto& b) -> PLMap { return commutator(a, b); });
}

bool equals(const PLMap& f, const PLMap& g) {
  return binary(f, g, [](const auto& a, const auto& b) {
    if constexpr (std::is_same_v<std::decay_t<decltype(a)>, CircleMap>) {
      if (a.modulus() != b.modulus())
        throw Error(ErrorCode::ModulusMismatch, a.modulus().str() + " vs " + b.modulus().str());
    }
    return a == b;
  });
}

bool is_identity(const PLMap& f) {
  return std::visit([](const auto& m) { return m.is_identity(); }, f);
}

PointSet ss_union(const PointSet& a, const PointSet& b) {
  return binary_sets(a, b, [](const auto& x, const auto& y) -> PointSet { return ss_union(x, y); });
}

PointSet ss_intersect(const PointSet& a, const PointSet& b) {
  return binary_sets(a, b, [](const auto& x, const auto& y) -> PointSet { return ss_intersect(x, y); });
}

bool ss_is_disjoint(const PointSet& a, const PointSet& b) {
  return binary_sets(a, b, [](const auto& x, const auto& y) { return ss_is_disjoint(x, y); });
}

bool ss_contains(const PointSet& outer, const PointSet& inner) {
  return binary_sets(outer, inner, [](const auto& x, const auto& y) { return ss_contains(x, y); });
}

bool set_empty(const PointSet& s) {
  return std::visit([](const auto& x) { return x.empty(); }, s);
}

bool set_contains(const PointSet& s, const Rat& x) {
  return std::visit([&](const auto& set) { return set.contains(x); }, s);
}

std::optional<Rat> common_point(const PointSet& a, const PointSet& b) {
  return binary_sets(a, b, [](const auto& x, const auto& y) { return common_point(x, y); });
}

std::optional<Rat> point_outside(const PointSet& inner, const PointSet& outer) {
  return binary_sets(inner, outer, [](const auto& x, const auto& y) { return point_outside(x, y); });
}

std::string to_string(const PointSet& s) {
  return std::visit(overloaded{[](const SupportSet& x) { return x.str(); },
                               [](const ArcSet& x) { return x.str() + " mod " + x.modulus().str(); }},
                    s);
}

std::optional<Rat> moved_point(const PLMap& f) {
  const PointSet s = support(f);
  return std::visit(overloaded{[](const SupportSet& x) -> std::optional<Rat> {
                                 if (x.empty()) return std::nullopt;
                                 return x.intervals().front().interior_point();
                               },
                               [](const ArcSet& x) -> std::optional<Rat> {
                                 if (x.empty()) return std::nullopt;
                                 if (x.is_full()) return Rat(0);
                                 return x.arcs().front().interior_point(x.modulus());
                               }},
                    s);
}

}  // namespace plh
