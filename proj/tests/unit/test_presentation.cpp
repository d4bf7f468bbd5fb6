#include "catch_amalgamated.hpp"

#include "support/oracles.hpp"

using namespace propfox;

namespace {

Word w(std::initializer_list<Syllable> s) { return Word(s); }

ParseError::Kind parse_error_kind(const std::string &text)
{
	try
	{
		parse_presentation(text);
	}
	catch (const ParseError &e)
	{
		return e.kind();
	}
	FAIL("expected a parse error");
	return ParseError::Kind::Syntax;
}

} // namespace

TEST_CASE("commutator atoms expand", "[presentation]")
{
	auto p = parse_presentation("prime 3\ngenerators g1 g2\nrelator [g1, g2]\n");
	REQUIRE(p.relators.size() == 1);
	CHECK(p.relators[0].left == w({{0, -1}, {1, -1}, {0, 1}, {1, 1}}));
	CHECK(p.relators[0].right.is_identity());
	CHECK_FALSE(p.relators[0].is_equation);
}

TEST_CASE("equation relators keep both sides", "[presentation]")
{
	auto p = parse_presentation("prime 3\ngenerators g1 g2\nrelator g1*g2 = g2*g1\n");
	REQUIRE(p.relators.size() == 1);
	CHECK(p.relators[0].left == w({{0, 1}, {1, 1}}));
	CHECK(p.relators[0].right == w({{1, 1}, {0, 1}}));
	CHECK(p.relators[0].word() == w({{0, 1}, {1, 1}, {0, -1}, {1, -1}}));
}

TEST_CASE("parse errors carry kind and position", "[presentation]")
{
	CHECK(parse_error_kind("prime 3\ngenerators g1\nrelator g1^0\n") == ParseError::Kind::ZeroExponent);
	CHECK(parse_error_kind("prime 3\ngenerators g1\nrelator g2\n") == ParseError::Kind::UnknownGenerator);
	CHECK(parse_error_kind("prime 3\ngenerators g1 g1\n") == ParseError::Kind::DuplicateGenerator);
	CHECK(parse_error_kind("prime 3\ngenerators g1\nrelator (g1\n") == ParseError::Kind::Syntax);
	CHECK(parse_error_kind("prime 3\ngenerators g1\nrelator g1 g1\n") == ParseError::Kind::Syntax);
	CHECK(parse_error_kind("prime 4\ngenerators g1\n") == ParseError::Kind::Semantic);
	CHECK(parse_error_kind("generators g1\n") == ParseError::Kind::Semantic);
	CHECK(parse_error_kind("prime 3\nrelator g1\n") == ParseError::Kind::Semantic);
	CHECK(parse_error_kind("prime 3\ngenerators g1\nfoo g1\n") == ParseError::Kind::Syntax);
	try
	{
		parse_presentation("prime 3\ngenerators g1 g2\n\nrelator g1*g3\n");
		FAIL("no error");
	}
	catch (const ParseError &e)
	{
		CHECK(e.line() == 4);
		CHECK(e.column() == 12);
		CHECK(std::string(e.what()).find("line 4, column 12") != std::string::npos);
	}
}

TEST_CASE("comments, alpha and nested powers", "[presentation]")
{
	auto p = parse_presentation("# header\nprime 5 # trailing\ngenerators x y\nalpha x=0 y=1\nrelator ((x*y)^2)^-1\nrelator x = 1\n");
	CHECK(p.prime == 5);
	CHECK(p.alpha == std::vector<long>{0, 1});
	CHECK(p.relators[0].left == w({{1, -1}, {0, -1}, {1, -1}, {0, -1}}));
	CHECK(p.relators[1].left == w({{0, 1}}));
	CHECK(p.relators[1].right.is_identity());
}

TEST_CASE("word reduction and group operations", "[presentation]")
{
	CHECK(w({{0, 1}, {0, -1}}).is_identity());
	CHECK(w({{0, 2}, {0, 3}}) == w({{0, 5}}));
	CHECK(w({{0, 1}, {1, 3}}).inverse() == w({{1, -3}, {0, -1}}));
	CHECK(w({{0, 1}, {1, 1}, {1, -1}, {0, 2}}) == w({{0, 3}}));
	CHECK(w({{0, 1}, {1, 2}}).pow(3) == w({{0, 1}, {1, 2}, {0, 1}, {1, 2}, {0, 1}, {1, 2}}));
	CHECK(w({{0, 1}, {1, 2}}).pow(-1) == w({{1, -2}, {0, -1}}));
	CHECK(w({{0, 1}, {1, 2}, {0, -1}}).pow(4) == w({{0, 1}, {1, 8}, {0, -1}}));
	std::vector<std::string> names{"a", "b"};
	CHECK(w({{0, 1}, {1, -2}}).to_string(names) == "a*b^-2");
	CHECK(Word().to_string(names) == "1");
}

TEST_CASE("total_degree examples", "[presentation]")
{
	auto p = parse_presentation("prime 3\ngenerators g1 g2 g3\n");
	CHECK(total_degree(w({{1, 1}, {0, -1}}).pow(9), p) == 0);
	CHECK(total_degree(w({{0, 2}, {1, 1}}), p) == 3);
	CHECK(total_degree(Word(), p) == 0);
	p.alpha = {1, 2, 1};
	CHECK(total_degree(w({{1, 1}, {0, -1}}), p) == 1);
}

TEST_CASE("validate_presentation examples", "[presentation]")
{
	auto ok = validate_presentation(oracle::load_presentation("eg41.pres"));
	CHECK(ok.ok());
	CHECK(ok.relator_degrees == std::vector<long>{0, 0, 0, 0});

	auto bad = validate_presentation(oracle::load_presentation("bad.pres"));
	CHECK_FALSE(bad.ok());
	CHECK(bad.relator_degrees == std::vector<long>{1});
	REQUIRE(bad.failures.size() == 1);
	CHECK(bad.failures[0] == "relator 1 has total degree 1");

	auto p = parse_presentation("prime 3\ngenerators g1 g2 g3\nalpha g2=2\nrelator g1*g3^-1\n");
	auto r = validate_presentation(p);
	CHECK_FALSE(r.ok());
	CHECK_FALSE(r.alpha_constant);
	CHECK(r.failures[0].find("alpha not constant-gamma") != std::string::npos);
}

TEST_CASE("corpus presentations have balanced relators", "[presentation]")
{
	for (const char *f : {"eg41.pres", "eg42.pres", "eg43.pres"})
	{
		auto p = oracle::load_presentation(f);
		CHECK(validate_presentation(p).ok());
	}
}

TEST_CASE("word group laws on random words", "[presentation][property]")
{
	oracle::Random rng(21);
	auto p = parse_presentation("prime 3\ngenerators a b c\nalpha a=1 b=2 c=-1\n");
	for (int t = 0; t < 500; ++t)
	{
		auto u = rng.word(3, 20), v = rng.word(3, 20), x = rng.word(3, 20);
		REQUIRE(Word(std::span<const Syllable>(u.syllables())) == u);
		REQUIRE((u * v) * x == u * (v * x));
		REQUIRE((u * u.inverse()).is_identity());
		REQUIRE((u.inverse() * u).is_identity());
		REQUIRE((u * v).inverse() == v.inverse() * u.inverse());
		REQUIRE(total_degree(u * v, p) == total_degree(u, p) + total_degree(v, p));
		REQUIRE(total_degree(u.inverse(), p) == -total_degree(u, p));
		for (std::size_t k = 1; k < u.size(); ++k)
			REQUIRE(u.syllables()[k].generator != u.syllables()[k - 1].generator);
	}
}

TEST_CASE("print then parse round trips", "[presentation][property]")
{
	oracle::Random rng(22);
	for (int t = 0; t < 500; ++t)
	{
		Presentation p;
		p.prime = t % 2 ? 3 : 5;
		std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
		for (std::size_t i = 0; i < n; ++i)
			p.generators.push_back("g" + std::to_string(i + 1));
		for (std::size_t i = 0; i < n; ++i)
			p.alpha.push_back(rng.integer(-1, 2));
		for (long j = rng.integer(0, 4); j > 0; --j)
		{
			Relator r;
			r.left = rng.word(n, 8);
			r.is_equation = rng.integer(0, 1) == 1;
			if (r.is_equation)
				r.right = rng.word(n, 8);
			p.relators.push_back(r);
		}
		REQUIRE(parse_presentation(to_text(p)) == p);
	}
	for (const char *f : {"eg41.pres", "eg42.pres", "eg43.pres"})
	{
		auto p = oracle::load_presentation(f);
		CHECK(parse_presentation(to_text(p)) == p);
	}
}
