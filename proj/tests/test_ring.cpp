#include <doctest.h>

#include "convert.hpp"
#include "oracle.hpp"
#include "plh/error.hpp"
#include "plh/ring.hpp"
#include "rings.hpp"

using namespace plh;
using testing_support::R;
using testing_support::to_q;

namespace {

ArcSet arc(const Rat& a, const Rat& b) { return ArcSet::from_arcs(R(5), {{a.mod(R(5)), b.mod(R(5))}}); }

}  // namespace

TEST_CASE("standard ring") {
  const RingSystem ring = make_standard_ring5();
  REQUIRE(ring.size() == 5);
  CHECK(ring.modulus() == R(5));
  CHECK(ring.supports()[3] == Arc{R(4), R(1)});
  for (int i = 1; i <= 5; ++i) CHECK(ring.supports()[i - 1] == Arc{Rat(i).mod(R(5)), Rat(i + 2).mod(R(5))});
  const CircleMap& r1 = ring.maps()[0];
  const CircleMap& r2 = ring.maps()[1];
  CHECK(r1(R(2)) == R(5, 2));
  CHECK(r2(R(5, 2)) == R(3));
  CHECK(ring.maps()[4](ring.maps()[3](R(0))) == R(1));
  for (const auto& c : check_ring_hypotheses(ring)) CHECK_MESSAGE(c.passed(), c.id << " " << c.witness);
  for (const auto& c : ring.certificate()) CHECK(c.passed());
}

TEST_CASE("ring maps agree with the formula oracle") {
  const RingSystem ring = make_standard_ring5();
  for (int i = 1; i <= 5; ++i) {
    for (int k = 0; k < 80; ++k) {
      const Rat x(k, 16);
      CHECK(ring.maps()[i - 1](x) == Rat(oracle::ring_r(i, to_q(x))));
      CHECK(invert(ring.maps()[i - 1])(x) == Rat(oracle::ring_r_inv(i, to_q(x))));
    }
  }
}

TEST_CASE("validate_ring violations") {
  const Rat m3(3);
  auto r2 = validate_ring({testing_support::circle_bump(R(0), R(1), m3), testing_support::circle_bump(R(1), R(2), m3),
                           testing_support::circle_bump(R(2), R(3), m3)});
  REQUIRE(std::holds_alternative<Violation>(r2));
  CHECK(std::get<Violation>(r2).axiom == "R2");

  // gap-two supports (0,2) and (3/2,4) overlap in (3/2,2)
  const Rat m5(5);
  auto r1 = validate_ring({testing_support::circle_bump(R(0), R(2), m5), testing_support::circle_bump(R(1), R(3), m5),
                           testing_support::circle_bump(R(3, 2), R(4), m5), testing_support::circle_bump(R(3), R(5), m5),
                           testing_support::circle_bump(R(4), R(6), m5)});
  REQUIRE(std::holds_alternative<Violation>(r1));
  CHECK(std::get<Violation>(r1).axiom == "R1");
  CHECK(std::get<Violation>(r1).indices == std::vector<std::size_t>{1, 3});

  // three arcs on a 5-circle: every pair is consecutive mod 3, so R1 is vacuous
  auto three = validate_ring({testing_support::circle_bump(R(0), R(3), m5), testing_support::circle_bump(R(1), R(4), m5),
                              testing_support::circle_bump(R(2), R(5), m5)});
  CHECK(std::holds_alternative<RingSystem>(three));

  const CircleMap two_arcs = compose(testing_support::circle_bump(R(0), R(1), m5), testing_support::circle_bump(R(2), R(3), m5));
  try {
    validate_ring({two_arcs, testing_support::circle_bump(R(1), R(3), m5), testing_support::circle_bump(R(2), R(4), m5)});
    FAIL("expected NonArcSupport");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonArcSupport);
  }
  CHECK_THROWS_AS(validate_ring({two_arcs, two_arcs}), Error);
  CHECK_THROWS_AS(validate_ring({testing_support::circle_bump(R(0), R(1), m5), testing_support::circle_bump(R(0), R(1), R(4)),
                                 testing_support::circle_bump(R(0), R(1), m5)}),
                  Error);

  // identity generator: empty support fails R2
  auto ring = make_standard_ring5();
  std::vector<CircleMap> maps = ring.maps();
  maps[2] = CircleMap(R(5));
  auto empty = validate_ring(maps);
  REQUIRE(std::holds_alternative<Violation>(empty));
  CHECK(std::get<Violation>(empty).axiom == "R2");
}

TEST_CASE("build_rprime") {
  const RingSystem ring = make_standard_ring5();
  const RPrime p1 = build_rprime(ring, 1);
  CHECK(p1.conjugator.str() == "r3^2.r2^2.r1^2.r5");
  CHECK(support(p1.map) == arc(R(9, 2), R(37, 8)));
  CHECK(support(build_rprime(ring, 3).map) == arc(R(3, 2), R(13, 8)));
  const GenAssignment env = ring.assignment();
  for (int i = 1; i <= 5; ++i) {
    const RPrime p = build_rprime(ring, i);
    CHECK(p.map == std::get<CircleMap>(env.eval(p.word)));
    CHECK(p.map == conjugate(ring.maps()[i - 1], std::get<CircleMap>(env.eval(p.conjugator))));
  }
  const auto small = validate_ring({testing_support::circle_bump(R(0), R(2), R(3)), testing_support::circle_bump(R(1), R(3), R(3)),
                                    testing_support::circle_bump(R(2), R(4), R(3))});
  REQUIRE(std::holds_alternative<RingSystem>(small));
  CHECK_THROWS_AS(build_rprime(std::get<RingSystem>(small), 1), Error);
}

TEST_CASE("support endpoints of r'_i follow the proof's chains of equalities") {
  const RingSystem ring = make_standard_ring5();
  for (long i = 0; i < 5; ++i) {
    const ArcSet s = support(build_rprime(ring, static_cast<int>(i + 1)).map);
    REQUIRE(s.size() == 1);
    const Arc a = s.arcs().front();
    CHECK(a.start == ring.map(i + 2)(ring.arc(i + 3).start));
    const Rat lo2 = ring.arc(i + 2).start;
    const Rat hi = ring.map(i + 2)(ring.map(i + 2)(ring.map(i + 1)(ring.map(i + 1)(lo2))));
    CHECK(a.end == hi);
    // rotational symmetry
    CHECK(a.start == (R(9, 2) + Rat(i)).mod(R(5)));
    CHECK(a.end == (R(37, 8) + Rat(i)).mod(R(5)));
  }
}

TEST_CASE("verify_ar_lemma on the standard ring") {
  const RingCertificate cert = verify_ar_lemma(make_standard_ring5());
  for (const auto& c : cert.checks) CHECK_MESSAGE(c.passed(), c.id << " " << c.witness);
  CHECK(cert.all_passed());
  REQUIRE(cert.two_chain.size() == 5);
  for (const auto& r : cert.two_chain) {
    CHECK(r.equality);
    CHECK(r.relation_identity);
  }
  std::size_t far = 0;
  for (const auto& c : cert.checks) far += c.id.rfind("COMM_FAR", 0) == 0;
  CHECK(far == 40);
  // certificates agree across i up to the index shift
  for (const char* id : {"RP_SUPP", "RP_DISJ_A", "RP_DISJ_B", "COMM_CONJ_A", "COMM_CONJ_B", "TWO_CHAIN"}) {
    std::size_t seen = 0;
    for (const auto& c : cert.checks) seen += c.id.rfind(std::string(id) + "(", 0) == 0;
    CHECK(seen == 5);
  }
}

TEST_CASE("perturbed rings keep the derived support identities") {
  for (const auto& profile : testing_support::perturbed_profiles()) {
    const RingSystem ring = make_ring5_from_profile(profile);
    for (const auto& c : check_ring_hypotheses(ring)) REQUIRE_MESSAGE(c.passed(), c.id << " " << c.witness);
    const RingCertificate cert = verify_ar_lemma(ring);
    for (const auto& c : cert.checks) {
      if (c.id.rfind("RP_", 0) == 0) CHECK_MESSAGE(c.passed(), c.id << " " << c.witness);
    }
  }
}

TEST_CASE("verify_ar_lemma names a failing hypothesis") {
  // (ii) fails: p(p(1) - 1) != 1
  const RingSystem ring = make_ring5_from_profile({{R(0), R(0)}, {R(1), R(5, 4)}, {R(2), R(2)}});
  try {
    verify_ar_lemma(ring);
    FAIL("expected PreconditionViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolation);
    CHECK(std::string(e.what()).find("L35_II") != std::string::npos);
  }
}

TEST_CASE("ring_to_chain_subsystem") {
  const RingSystem ring = make_standard_ring5();
  const ChainSystem two = ring_to_chain_subsystem(ring, 1, 2);
  CHECK(two.supports()[0] == Interval(R(1), R(3)));
  CHECK(two.supports()[1] == Interval(R(2), R(4)));
  const ChainSystem four = ring_to_chain_subsystem(ring, 1, 4);
  CHECK(four.supports()[0] == Interval(R(1), R(3)));
  CHECK(four.supports()[3] == Interval(R(4), R(6)));
  CHECK(four.boundary_conditions_hold());
  const ChainSystem wrapped = ring_to_chain_subsystem(ring, 4, 3);
  CHECK(wrapped.names() == std::vector<std::string>{"r4", "r5", "r1"});
  CHECK_THROWS_AS(ring_to_chain_subsystem(ring, 1, 5), Error);
  CHECK_THROWS_AS(ring_to_chain_subsystem(ring, 1, 1), Error);
}
