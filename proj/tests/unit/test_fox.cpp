#include "catch_amalgamated.hpp"

#include "support/oracles.hpp"

using namespace propfox;

namespace {

Matrix<LaurentPoly> laurent_matrix(std::initializer_list<std::initializer_list<const char *>> rows)
{
	std::size_t nr = rows.size(), nc = rows.begin()->size();
	Matrix<LaurentPoly> m(nr, nc);
	std::size_t i = 0;
	for (const auto &row : rows)
	{
		std::size_t j = 0;
		for (const char *e : row)
			m(i, j++) = parse_laurent(e);
		++i;
	}
	return m;
}

Presentation free_presentation(std::size_t gens, std::vector<long> alpha)
{
	Presentation p;
	p.prime = 3;
	for (std::size_t i = 0; i < gens; ++i)
		p.generators.push_back("x" + std::to_string(i + 1));
	p.alpha = std::move(alpha);
	return p;
}

TensorRep random_tensor(oracle::Random &rng, std::size_t gens, std::size_t dim)
{
	std::vector<long> alpha;
	for (std::size_t i = 0; i < gens; ++i)
		alpha.push_back(rng.integer(-2, 2));
	return tensor_with_alpha(rng.representation(gens, dim), free_presentation(gens, alpha));
}

} // namespace

TEST_CASE("Alexander matrix of the three-generator p = 3 example", "[fox]")
{
	auto pres = oracle::load_presentation("eg41.pres");
	auto q = alexander_matrix(pres, Representation::trivial(3));
	auto want = laurent_matrix({{"-9", "9", "0"}, {"3", "-3", "0"}, {"g - 1", "-g + 1", "0"}, {"-g + 7", "-3", "g - 4"}});
	CHECK(q == want);
}

TEST_CASE("Alexander matrix of the two-dimensional example with b = 1", "[fox]")
{
	auto pres = oracle::load_presentation("eg41.pres");
	auto phi = oracle::load_representation("eg44.rep", pres);
	auto q = alexander_matrix(pres, phi);
	auto want = laurent_matrix({
	    {"-9", "0", "9", "0", "0", "0"},
	    {"0", "-9", "0", "9", "0", "0"},
	    {"3", "0", "-3", "0", "0", "0"},
	    {"0", "3", "0", "-3", "0", "0"},
	    {"4*g - 1", "g", "-4*g + 1", "-g", "0", "0"},
	    {"0", "g - 1", "0", "-g + 1", "0", "0"},
	    {"-4*g + 7", "-g", "-3", "0", "4*g - 4", "g"},
	    {"0", "-g + 7", "0", "-3", "0", "g - 4"},
	});
	CHECK(q == want);
}

TEST_CASE("Alexander matrix of the one-relator p = 5 example", "[fox]")
{
	auto pres = oracle::load_presentation("eg43.pres");
	auto q = alexander_matrix(pres, Representation::trivial(2));
	CHECK(q == laurent_matrix({{"-g - 3 - g^-1", "g + 3 + g^-1"}}));
}

TEST_CASE("Alexander matrix edge cases", "[fox]")
{
	auto pres = parse_presentation("prime 3\ngenerators g1\n");
	auto q = alexander_matrix(pres, Representation::trivial(1, 2));
	CHECK(q.rows() == 0);
	CHECK(q.cols() == 2);

	auto bad = oracle::load_presentation("bad.pres");
	CHECK_THROWS_AS(alexander_matrix(bad, Representation::trivial(2)), HypothesisViolated);
	auto forced = alexander_matrix(bad, Representation::trivial(2), true);
	CHECK(forced == laurent_matrix({{"1", "0"}}));
	CHECK_THROWS_AS(alexander_matrix(pres, Representation::trivial(2)), DomainError);
}

TEST_CASE("Fox derivatives of small words", "[fox]")
{
	auto pres = free_presentation(2, {1, 1});
	auto rep = tensor_with_alpha(Representation::trivial(2), pres);
	auto g = LaurentPoly::gamma(1);
	// d(x^3)/dx = 1 + x + x^2, d(x^-2)/dx = -x^-1 - x^-2.
	CHECK(fox_derivative_matrix(rep, Word::generator(0, 3), 0)(0, 0) == LaurentPoly(1) + g + g * g);
	CHECK(fox_derivative_matrix(rep, Word::generator(0, -2), 0)(0, 0) == -LaurentPoly::gamma(-1) - LaurentPoly::gamma(-2));
	CHECK(fox_derivative_matrix(rep, Word::generator(0, 3), 1).is_zero());
	CHECK(fox_derivative_matrix(rep, Word(), 0).is_zero());
	CHECK_THROWS_AS(fox_derivative_matrix(rep, Word(), 2), DomainError);
	auto m = Matrix<Rational>{{2, 1}, {0, 1}};
	CHECK(geometric_sum(m, 3) == Matrix<Rational>{{7, 4}, {0, 3}});
	CHECK(geometric_sum(m, -1) == -inverse(m));
	CHECK_THROWS_AS(geometric_sum(Matrix<Rational>{{1, 0}, {0, 0}}, -1), NotInvertible);
}

TEST_CASE("Fox scan agrees with the expanded group ring", "[fox][property]")
{
	oracle::Random rng(31);
	for (int t = 0; t < 500; ++t)
	{
		auto rho = scalar_rep(rng.representation(3, 2).images);
		auto w = rng.word(3, 6);
		auto all = fox_derivatives(rho, w);
		for (std::size_t i = 0; i < 3; ++i)
		{
			REQUIRE(all[i] == fox_derivative_matrix(rho, w, i));
			REQUIRE(all[i] == oracle::fox_image(rho, w, i));
		}
		REQUIRE(evaluate_word(rho, w) == oracle::word_image_letters(rho, w));
	}
}

TEST_CASE("Fox product and inverse rules", "[fox][property]")
{
	oracle::Random rng(32);
	for (int t = 0; t < 500; ++t)
	{
		auto rep = random_tensor(rng, 3, 2);
		auto u = rng.word(3, 6), v = rng.word(3, 6);
		auto fu = fox_derivatives(rep, u), fv = fox_derivatives(rep, v);
		auto fuv = fox_derivatives(rep, u * v);
		auto finv = fox_derivatives(rep, u.inverse());
		auto ru = evaluate_word(rep, u);
		auto ruinv = evaluate_word(rep, u.inverse());
		REQUIRE(ru * ruinv == rep.identity());
		for (std::size_t i = 0; i < 3; ++i)
		{
			REQUIRE(fuv[i] == fu[i] + ru * fv[i]);
			REQUIRE(finv[i] == -(ruinv * fu[i]));
		}
	}
}

TEST_CASE("Fox fundamental identity over Laurent polynomials", "[fox][property]")
{
	oracle::Random rng(33);
	for (int t = 0; t < 500; ++t)
	{
		auto rep = random_tensor(rng, 3, 2);
		auto w = rng.word(3, 8);
		auto f = fox_derivatives(rep, w);
		Matrix<LaurentPoly> lhs(2, 2);
		for (std::size_t i = 0; i < 3; ++i)
			lhs += f[i] * (rep.images[i] - rep.identity());
		REQUIRE(lhs == evaluate_word(rep, w) - rep.identity());
	}
}

TEST_CASE("Fox of generator powers matches the letter expansion", "[fox][property]")
{
	oracle::Random rng(34);
	for (int t = 0; t < 500; ++t)
	{
		auto rho = scalar_rep(rng.representation(2, 2).images);
		std::size_t g = static_cast<std::size_t>(rng.integer(0, 1));
		long n = rng.nonzero(-12, 12);
		Word power = Word::generator(g, n);
		Word expanded;
		for (long k = 0; k < (n > 0 ? n : -n); ++k)
			expanded *= Word::generator(g, n > 0 ? 1 : -1);
		REQUIRE(power == expanded);
		Matrix<Rational> letters(2, 2), prefix = rho.identity();
		for (const auto &l : oracle::letters(power))
		{
			if (l.exponent > 0)
				letters += prefix;
			else
				letters -= prefix * rho.inverses[g];
			prefix = prefix * (l.exponent > 0 ? rho.images[g] : rho.inverses[g]);
		}
		REQUIRE(fox_derivative_matrix(rho, power, g) == letters);
		REQUIRE(geometric_sum(rho.images[g], n) == letters);
	}
}
