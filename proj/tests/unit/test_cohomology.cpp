#include "catch_amalgamated.hpp"

#include "support/oracles.hpp"

using namespace propfox;

namespace {

CrossedHom cochain(std::size_t dim, std::initializer_list<Rational> stacked)
{
	std::vector<Rational> b(stacked);
	return CrossedHom::from_stacked(b, dim);
}

std::vector<Rational> V(std::initializer_list<Rational> v) { return v; }

void check_dims(const CohomologyReport &r, std::size_t z, std::size_t b, std::size_t h)
{
	CHECK(r.z1_dim == z);
	CHECK(r.b1_dim == b);
	CHECK(r.h1_dim == h);
	CHECK(r.h1_dim == r.z1_dim - r.b1_dim);
	CHECK(r.b1_dim == r.dim - r.fixed_space_dim);
}

} // namespace

TEST_CASE("coboundary matrix examples", "[cohomology]")
{
	auto pres = oracle::load_presentation("eg41.pres");
	auto rho = specialize(Representation::trivial(3), pres, 4);
	auto m = coboundary_matrix(rho);
	CHECK(m == Matrix<Rational>{{3}, {3}, {3}});
	auto rn = rank_nullspace(m);
	CHECK(rn.rank == 1);
	CHECK(rn.nullspace.empty());

	auto id = specialize(Representation::trivial(3, 2), pres, 1);
	CHECK(coboundary_matrix(id).is_zero());
	CHECK(rank_nullspace(coboundary_matrix(id)).nullspace.size() == 2);

	auto diag = specialize(oracle::load_representation("eg55.rep", pres), pres, Rational(1, 4));
	CHECK(diag.images[0] == Matrix<Rational>{{1, 0}, {0, Rational(1, 4)}});
	auto fixed = rank_nullspace(coboundary_matrix(diag)).nullspace;
	REQUIRE(fixed.size() == 1);
	CHECK(fixed[0] == V({1, 0}));
}

TEST_CASE("H1 dimensions of the corpus", "[cohomology]")
{
	auto pres = oracle::load_presentation("eg41.pres");
	check_dims(h1_report(pres, Representation::trivial(3), 4), 2, 1, 1);
	check_dims(h1_report(pres, oracle::load_representation("eg44.rep", pres), 1), 3, 1, 2);
	check_dims(h1_report(pres, oracle::load_representation("eg44.rep", pres), 4), 3, 2, 1);
	check_dims(h1_report(pres, oracle::load_representation("eg45.rep", pres), 4), 3, 2, 1);
	auto r55 = h1_report(pres, oracle::load_representation("eg55.rep", pres), Rational(1, 4));
	check_dims(r55, 2, 1, 1);
	CHECK(r55.fixed_space_dim == 1);
	CHECK_FALSE(r55.delta_value_at_a.is_zero());
	CHECK(r55.audit.verdict == "hypothesis violated, not applicable");
	CHECK(r55.audit.h1_implies_zero == "hypothesis violated, not applicable");
	CHECK(r55.audit.zero_implies_h1 == "not triggered");
}

TEST_CASE("theorem audit examples", "[cohomology]")
{
	auto pres = oracle::load_presentation("eg41.pres");
	auto a4 = theorem_audit(pres, Representation::trivial(3), 4);
	CHECK(a4.delta_zero);
	CHECK(a4.zero_implies_h1 == "holds");
	CHECK(a4.h1_implies_zero == "holds");
	CHECK(a4.verdict == "consistent");

	auto r7 = h1_report(pres, Representation::trivial(3), 7);
	CHECK_FALSE(r7.audit.delta_zero);
	CHECK(r7.h1_dim == 0);
	CHECK(r7.audit.zero_implies_h1 == "not triggered");
	CHECK(r7.audit.h1_implies_zero == "not triggered");
	CHECK(r7.audit.verdict == "consistent");
	CHECK(r7.delta == parse_laurent("g - 4"));
	CHECK(r7.delta_value_at_a == Rational(3));

	CHECK_THROWS_AS(audit_implications(true, 0, 0), TheoremViolation);
	CHECK_THROWS_AS(audit_implications(false, 1, 0), TheoremViolation);
	CHECK_NOTHROW(audit_implications(false, 1, 1));
	CHECK_THROWS_AS(h1_report(pres, Representation::trivial(3), 0), DivisionByZero);
}

TEST_CASE("coboundary witnesses", "[cohomology]")
{
	auto pres = oracle::load_presentation("eg41.pres");

	auto rho0 = specialize(Representation::trivial(3), pres, 4);
	for (Rational b : {Rational(1), Rational(-2, 5), Rational(9)})
	{
		auto v = is_coboundary(pres, cochain(1, {b, b, b}), rho0);
		REQUIRE(v);
		CHECK(*v == V({b / 3}));
	}
	CHECK_FALSE(is_coboundary(pres, cochain(1, {1, 1, 0}), rho0));
	CHECK(*is_coboundary(pres, CrossedHom::zero(3, 1), rho0) == V({0}));
	CHECK_THROWS_AS(is_coboundary(pres, cochain(1, {1, 0, 0}), rho0), NotACocycle);

	auto phi44 = oracle::load_representation("eg44.rep", pres);
	auto rho1 = specialize(phi44, pres, 1);
	auto beta = cochain(2, {5, 0, 5, 0, 5, 0});
	auto v = is_coboundary(pres, beta, rho1);
	REQUIRE(v);
	CHECK(coboundary_of(rho1, *v) == beta);
	CHECK(coboundary_of(rho1, V({Rational(5, 3), 0})) == beta);
	CHECK_FALSE(is_coboundary(pres, cochain(2, {0, 1, 0, 1, 0, 1}), rho1));
	CHECK_FALSE(is_coboundary(pres, cochain(2, {0, 0, 0, 0, 1, 0}), rho1));

	auto rho4 = specialize(phi44, pres, 4);
	CHECK(*is_coboundary(pres, cochain(2, {2, 0, 2, 0, 2, 0}), rho4) == V({Rational(2, 15), 0}));
	CHECK(*is_coboundary(pres, cochain(2, {0, 3, 0, 3, 0, 3}), rho4) == V({Rational(-4 * 3, 45), Rational(15 * 3, 45)}));
	CHECK_FALSE(is_coboundary(pres, cochain(2, {0, 0, 0, 0, Rational(-1, 3), 1}), rho4));

	auto phi45 = oracle::load_representation("eg45.rep", pres);
	auto rho45 = specialize(phi45, pres, 4);
	CHECK(*is_coboundary(pres, cochain(2, {1, 0, 1, 0, 1, 0}), rho45) == V({Rational(1, 15), 0}));
	Rational b12(3);
	auto c45 = cochain(2, {0, b12, 0, b12, Rational(-4, 3) * b12, b12});
	CHECK(*is_coboundary(pres, c45, rho45) == V({Rational(-4, 45) * b12, Rational(15, 45) * b12}));
}

TEST_CASE("symmetric square", "[cohomology]")
{
	auto m = Matrix<Rational>{{4, 1}, {0, 1}};
	CHECK(symmetric_square(m) == Matrix<Rational>{{16, 4, 1}, {0, 4, 2}, {0, 0, 1}});
	CHECK_THROWS_AS(symmetric_square(Matrix<Rational>{{1}}), DomainError);

	auto pres = oracle::load_presentation("eg41.pres");
	auto triv = Representation::trivial(3);
	auto s53 = symmetric_square_cocycle(pres, build_extension(pres, triv, 4, cochain(1, {1, 1, 1})));
	CHECK(s53.trivial);
	REQUIRE(s53.witness);
	CHECK(*s53.witness == V({Rational(-1, 9), Rational(2, 3)}));
	CHECK(s53.beta == cochain(2, {1, 2, 1, 2, 1, 2}));
	CHECK(verify_relators(pres, s53.rho3).ok);

	auto s54 = symmetric_square_cocycle(pres, build_extension(pres, triv, 4, cochain(1, {1, 1, 0})));
	CHECK_FALSE(s54.trivial);
	CHECK(verify_relators(pres, s54.rho3).ok);

	auto s0 = symmetric_square_cocycle(pres, build_extension(pres, triv, 4, CrossedHom::zero(3, 1)));
	CHECK(s0.trivial);
	CHECK(s0.beta == CrossedHom::zero(3, 2));

	auto phi44 = oracle::load_representation("eg44.rep", pres);
	auto three = build_extension(pres, phi44, 4, cocycle_space(pres, phi44, 4).basis[0]);
	CHECK_THROWS_AS(symmetric_square_cocycle(pres, three), DomainError);
}

TEST_CASE("corpus satisfies the cohomology invariants", "[cohomology]")
{
	const std::vector<Rational> points{1, 4, 2, 7, Rational(1, 4)};
	auto pres = oracle::load_presentation("eg41.pres");
	std::vector<Representation> reps{Representation::trivial(3), oracle::load_representation("eg44.rep", pres),
	                                  oracle::load_representation("eg45.rep", pres),
	                                  oracle::load_representation("eg55.rep", pres)};
	for (const auto &phi : reps)
		for (const auto &a : points)
		{
			CohomologyReport r;
			REQUIRE_NOTHROW(r = h1_report(pres, phi, a));
			CHECK(r.h1_dim == r.z1_dim - r.b1_dim);
			CHECK(r.b1_dim == r.dim - r.fixed_space_dim);
			if (r.audit.delta_zero)
				CHECK(r.h1_dim >= 1);
			if (r.fixed_space_dim == 0 && r.h1_dim >= 1)
				CHECK(r.audit.delta_zero);
		}
}

TEST_CASE("coboundary witnesses reconstruct the cocycle", "[cohomology][property]")
{
	oracle::Random rng(71);
	auto pres = oracle::load_presentation("eg41.pres");
	std::vector<std::pair<Representation, Rational>> cases{
	    {Representation::trivial(3), 4},
	    {oracle::load_representation("eg44.rep", pres), 1},
	    {oracle::load_representation("eg44.rep", pres), 4},
	    {oracle::load_representation("eg45.rep", pres), 4},
	    {oracle::load_representation("eg55.rep", pres), Rational(1, 4)},
	};
	std::vector<CocycleSpace> spaces;
	for (const auto &[phi, a] : cases)
		spaces.push_back(cocycle_space(pres, phi, a));
	for (int t = 0; t < 500; ++t)
	{
		std::size_t k = static_cast<std::size_t>(t) % cases.size();
		const auto &[phi, a] = cases[k];
		auto rho = specialize(phi, pres, a);
		std::vector<Rational> z(3 * phi.dim);
		for (const auto &b : spaces[k].basis)
		{
			Rational c = rng.rational();
			auto s = b.stacked();
			for (std::size_t i = 0; i < z.size(); ++i)
				z[i] += c * s[i];
		}
		auto beta = CrossedHom::from_stacked(z, phi.dim);
		std::vector<Rational> v;
		for (std::size_t i = 0; i < phi.dim; ++i)
			v.push_back(rng.rational());
		auto bv = coboundary_of(rho, v);
		auto w = is_coboundary(pres, bv, rho);
		REQUIRE(w);
		REQUIRE(coboundary_of(rho, *w) == bv);

		auto shifted = beta.stacked();
		auto bs = bv.stacked();
		for (std::size_t i = 0; i < shifted.size(); ++i)
			shifted[i] += bs[i];
		auto sum = CrossedHom::from_stacked(shifted, phi.dim);
		bool base = is_coboundary(pres, beta, rho).has_value();
		REQUIRE(is_coboundary(pres, sum, rho).has_value() == base);
		if (auto u = is_coboundary(pres, beta, rho))
			REQUIRE(coboundary_of(rho, *u) == beta);
	}
}
