#include <doctest.h>

#include <random>

#include "hypertoric/envelopes.hpp"
#include "hypertoric/io.hpp"

using namespace hypertoric;

namespace {

HypertoricData load(const std::string& name) {
  return load_data(std::string(TESTDATA_DIR) + "/" + name);
}

Slope make_slope(std::initializer_list<Rational> cs) {
  Slope s;
  for (const auto& c : cs) s.coeff.push_back(c);
  return s;
}

Slope random_generic_slope(std::mt19937_64& rng, const HypertoricData& data, bool opposite) {
  std::uniform_int_distribution<Int> num(-6, 6);
  std::uniform_int_distribution<Int> den(2, 7);
  PolarizationSpec pol = PolarizationSpec::standard(data.n());
  for (int tries = 0; tries < 200; ++tries) {
    Slope s;
    for (int e = 0; e < data.n(); ++e) s.coeff.push_back(rat(num(rng), den(rng)));
    try {
      build_stab(data, pol, s, opposite);
      return s;
    } catch (const std::domain_error&) {
    }
  }
  throw std::runtime_error("no generic slope found");
}

}  // namespace

TEST_CASE("diagonal value on the worked example") {
  HypertoricData d = load("tp1.json");
  RestrictionContext ctx = make_restriction_context(d);
  LaurentPoly dv = diagonal_value(ctx, 0, d.zeta, PolarizationSpec::standard(2), false);
  CHECK(dv == parse_laurent(ctx.lat, "hbar - t*hbar"));
}

TEST_CASE("hbar to one turns the diagonal into the wedge of the polarization") {
  for (const char* name : {"tp1.json", "tp2.json", "rank2.json"}) {
    HypertoricData d = load(name);
    RestrictionContext ctx = make_restriction_context(d);
    PolarizationSpec pol = PolarizationSpec::standard(d.n());
    for (bool opposite : {false, true}) {
      for (int p = 0; p < ctx.point_count(); ++p) {
        LaurentPoly dv = diagonal_value(ctx, p, d.zeta, pol, opposite);
        LaurentPoly half = opposite ? opposite_polarization_restriction(ctx, p, pol)
                                    : polarization_restriction(ctx, p, pol);
        RationalChar expected =
            wedge_star_omitting_trivial(half.specialized_axis_to_one(ctx.hbar_axis));
        RationalChar got(dv.specialized_axis_to_one(ctx.hbar_axis));
        INFO(name, " point ", ctx.point(p).name, opposite ? " opposite" : " standard");
        CHECK(got.equals(expected));
      }
    }
  }
}

TEST_CASE("repelling half is half dimensional and flips with the chamber") {
  HypertoricData d = load("tp2.json");
  RestrictionContext ctx = make_restriction_context(d);
  IntVec sigma = IntVec::Zero(ctx.lat.rank());
  for (int i = 0; i < d.a_rank(); ++i) sigma(i) = d.zeta(i);
  for (int p = 0; p < ctx.point_count(); ++p) {
    int attract = rank_attracting(ctx.point(p), d.zeta);
    int repel = rank_repelling(ctx.point(p), d.zeta);
    CHECK(attract + repel == d.a_rank());
    CHECK(rank_attracting(ctx.point(p), -d.zeta) == repel);
    // tangent splits into n-k repelling weights for any generic chamber
    int tangent_neg = 0;
    for (const auto& sw : signed_weights(tangent_class(ctx, p)))
      if (sgn(grade_of(ctx.lat, sw.w, sigma)) < 0) ++tangent_neg;
    CHECK(tangent_neg == d.a_rank());
  }
}

TEST_CASE("build_stab satisfies the axioms on the worked slopes") {
  {
    HypertoricData d = load("tp1.json");
    StabMatrix S = build_stab(d, PolarizationSpec::standard(2), make_slope({rat(1, 3), rat(0)}));
    AxiomReport rep = check_axioms(S);
    for (const auto& c : rep.checks) {
      INFO("tp1 ", c.name, ": ", c.detail);
      CHECK(c.pass);
    }
  }
  {
    HypertoricData d = load("tp2.json");
    StabMatrix S = build_stab(d, PolarizationSpec::standard(3),
                              make_slope({rat(1, 3), rat(1, 5), rat(0)}));
    AxiomReport rep = check_axioms(S);
    for (const auto& c : rep.checks) {
      INFO("tp2 ", c.name, ": ", c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("single fixed point gives the bare diagonal") {
  HypertoricData d;
  d.labels = {"e1"};
  d.partial = IntMat(1, 1);
  d.partial << 1;
  d.beta = IntMat(0, 1);
  d.eta = IntVec::Ones(1);
  d.zeta = IntVec(0);
  StabMatrix S = build_stab(d, PolarizationSpec::standard(1), make_slope({rat(1, 3)}));
  REQUIRE(S.entry.size() == 1);
  RestrictionContext ctx = make_restriction_context(d, "t", S.entry[0][0].lattice().scale());
  CHECK(S.at(0, 0).equals(diagonal_value(ctx, 0, d.zeta, S.polarization, false)));
  CHECK(check_axioms(S).ok());
}

TEST_CASE("a perturbed off-diagonal entry breaks the axioms") {
  HypertoricData d = load("tp1.json");
  StabMatrix S = build_stab(d, PolarizationSpec::standard(2), make_slope({rat(1, 3), rat(0)}));
  // find a nonzero off-diagonal entry and add 1 to it
  bool perturbed = false;
  for (size_t p = 0; p < S.entry.size() && !perturbed; ++p)
    for (size_t q = 0; q < S.entry.size() && !perturbed; ++q) {
      if (p == q || S.entry[p][q].is_zero()) continue;
      S.entry[p][q] = S.entry[p][q] + RationalChar::one(S.entry[p][q].lattice());
      perturbed = true;
    }
  REQUIRE(perturbed);
  CHECK(!check_axioms(S).ok());
}

TEST_CASE("duality pairing is the identity for random generic slopes") {
  std::mt19937_64 rng(20260810);
  for (const char* name : {"tp1.json", "tp2.json", "rank2.json"}) {
    HypertoricData d = load(name);
    PolarizationSpec pol = PolarizationSpec::standard(d.n());
    for (int round = 0; round < 3; ++round) {
      Slope s = random_generic_slope(rng, d, false);
      StabMatrix S = build_stab(d, pol, s, false);
      HypertoricData opp = d;
      opp.zeta = -d.zeta;
      StabMatrix S_op = build_stab(opp, pol, s.negated(), true,
                                   S.entry[0][0].lattice().scale());
      PairingReport rep = duality_pairing(S, S_op);
      INFO(name, " round ", round);
      CHECK(rep.is_identity);
      CHECK(check_axioms(S).ok());
      CHECK(check_axioms(S_op).ok());
    }
  }
}
