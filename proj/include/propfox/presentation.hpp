#pragma once

#include "propfox/errors.hpp"
#include "propfox/rational.hpp"
#include "propfox/word.hpp"

#include <cctype>
#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace propfox {

/// A defining relation left = right. A relator given as a single word has
/// right = identity. The relation is imposed as left * right^-1.
struct Relator
{
	Word left;
	Word right;
	bool is_equation = false;

	Word word() const { return left * right.inverse(); }

	friend bool operator==(const Relator &, const Relator &) = default;
};

/// Finite presentation of a pro-p group together with the exponents e_i of
/// the map alpha(g_i) = gamma^{e_i}.
struct Presentation
{
	long prime = 0;
	std::vector<std::string> generators;
	std::vector<Relator> relators;
	std::vector<long> alpha;

	std::size_t num_generators() const { return generators.size(); }
	std::size_t num_relators() const { return relators.size(); }

	std::optional<std::size_t> generator_index(std::string_view name) const
	{
		for (std::size_t i = 0; i < generators.size(); ++i)
			if (generators[i] == name)
				return i;
		return std::nullopt;
	}

	std::string word_to_string(const Word &w) const { return w.to_string(generators); }

	friend bool operator==(const Presentation &, const Presentation &) = default;
};

/// Sum over syllables of e_i * exponent.
inline long total_degree(const Word &w, const Presentation &pres)
{
	long d = 0;
	for (const auto &s : w.syllables())
		d += pres.alpha.at(s.generator) * s.exponent;
	return d;
}

struct ValidationReport
{
	std::vector<long> relator_degrees;
	bool alpha_constant = true;
	std::vector<std::string> failures;

	bool ok() const { return failures.empty(); }
};

/// Checks the hypotheses of the extension theorem: alpha(g_i) = gamma for
/// every generator and every relator of total degree zero.
inline ValidationReport validate_presentation(const Presentation &pres)
{
	ValidationReport report;
	for (std::size_t i = 0; i < pres.alpha.size(); ++i)
		if (pres.alpha[i] != 1)
			report.alpha_constant = false;
	if (!report.alpha_constant)
		report.failures.push_back("alpha not constant-gamma: every generator must map to gamma^1");
	for (std::size_t j = 0; j < pres.relators.size(); ++j)
	{
		long d = total_degree(pres.relators[j].word(), pres);
		report.relator_degrees.push_back(d);
		if (d != 0)
			report.failures.push_back("relator " + std::to_string(j + 1) + " has total degree " + std::to_string(d));
	}
	return report;
}

namespace detail {

constexpr std::size_t kMaxWordSyllables = std::size_t(1) << 22;

class PresentationParser
{
public:
	explicit PresentationParser(std::string_view text) : text_(text) {}

	Presentation parse()
	{
		std::size_t pos = 0;
		std::size_t lineno = 0;
		while (pos <= text_.size())
		{
			auto end = text_.find('\n', pos);
			if (end == std::string_view::npos)
				end = text_.size();
			++lineno;
			parse_line(text_.substr(pos, end - pos), lineno);
			pos = end + 1;
		}
		if (!have_prime_)
			throw ParseError(ParseError::Kind::Semantic, 0, 0, "missing required 'prime' line");
		if (!have_generators_)
			throw ParseError(ParseError::Kind::Semantic, 0, 0, "missing required 'generators' line");
		if (pres_.alpha.empty())
			pres_.alpha.assign(pres_.generators.size(), 1);
		return pres_;
	}

private:
	void parse_line(std::string_view raw, std::size_t lineno)
	{
		line_ = raw;
		lineno_ = lineno;
		i_ = 0;
		auto hash = line_.find('#');
		if (hash != std::string_view::npos)
			line_ = line_.substr(0, hash);
		if (!line_.empty() && line_.back() == '\r')
			line_.remove_suffix(1);
		skip();
		if (at_end())
			return;
		std::size_t kw_col = i_;
		std::string kw = identifier();
		if (kw == "prime")
			parse_prime(kw_col);
		else if (kw == "generators")
			parse_generators();
		else if (kw == "alpha")
			parse_alpha();
		else if (kw == "relator")
			parse_relator();
		else
			fail(ParseError::Kind::Syntax, kw_col, "unknown keyword '" + kw + "'");
	}

	void parse_prime(std::size_t kw_col)
	{
		if (have_prime_)
			fail(ParseError::Kind::Semantic, kw_col, "duplicate 'prime' line");
		skip();
		std::size_t col = i_;
		long p = integer();
		if (!is_prime(p))
			fail(ParseError::Kind::Semantic, col, std::to_string(p) + " is not a prime");
		pres_.prime = p;
		have_prime_ = true;
		expect_end();
	}

	void parse_generators()
	{
		if (have_generators_)
			fail(ParseError::Kind::Semantic, 0, "duplicate 'generators' line");
		skip();
		while (!at_end())
		{
			std::size_t col = i_;
			std::string name = identifier();
			if (pres_.generator_index(name))
				fail(ParseError::Kind::DuplicateGenerator, col, "duplicate generator '" + name + "'");
			pres_.generators.push_back(name);
			skip();
		}
		if (pres_.generators.empty())
			fail(ParseError::Kind::Semantic, i_, "at least one generator is required");
		have_generators_ = true;
	}

	void parse_alpha()
	{
		require_generators();
		if (pres_.alpha.empty())
			pres_.alpha.assign(pres_.generators.size(), 1);
		skip();
		while (!at_end())
		{
			std::size_t col = i_;
			std::size_t g = generator(identifier(), col);
			skip();
			expect('=');
			skip();
			pres_.alpha[g] = integer();
			skip();
		}
	}

	void parse_relator()
	{
		require_generators();
		skip();
		Relator r;
		r.left = word();
		skip();
		if (!at_end() && peek() == '=')
		{
			++i_;
			skip();
			r.right = word();
			r.is_equation = true;
		}
		expect_end();
		pres_.relators.push_back(std::move(r));
	}

	// word := term { '*' term }
	Word word()
	{
		Word w = term();
		skip();
		while (!at_end() && peek() == '*')
		{
			++i_;
			skip();
			w *= term();
			check_size(w);
			skip();
		}
		return w;
	}

	// term := atom [ '^' int ]
	Word term()
	{
		Word a = atom();
		skip();
		if (!at_end() && peek() == '^')
		{
			++i_;
			skip();
			std::size_t col = i_;
			long e = integer();
			if (e == 0)
				fail(ParseError::Kind::ZeroExponent, col, "zero exponent");
			long e_abs = e < 0 ? -e : e;
			if (a.size() > 1 && a.size() * static_cast<std::size_t>(e_abs) > kMaxWordSyllables)
				fail(ParseError::Kind::Semantic, col, "word too long after expanding power");
			a = a.pow(e);
		}
		return a;
	}

	// atom := ident | '(' word ')' | '[' word ',' word ']'
	Word atom()
	{
		if (at_end())
			fail(ParseError::Kind::Syntax, i_, "expected a generator, '(' or '['");
		char c = peek();
		if (c == '(')
		{
			++i_;
			skip();
			Word w = word();
			skip();
			expect(')');
			return w;
		}
		if (c == '[')
		{
			++i_;
			skip();
			Word x = word();
			skip();
			expect(',');
			skip();
			Word y = word();
			skip();
			expect(']');
			return commutator(x, y);
		}
		if (c == '1' && (i_ + 1 >= line_.size() || !std::isalnum(static_cast<unsigned char>(line_[i_ + 1]))))
		{
			++i_;
			return {};
		}
		std::size_t col = i_;
		return Word::generator(generator(identifier(), col));
	}

	std::size_t generator(const std::string &name, std::size_t col)
	{
		auto idx = pres_.generator_index(name);
		if (!idx)
			fail(ParseError::Kind::UnknownGenerator, col, "unknown generator '" + name + "'");
		return *idx;
	}

	std::string identifier()
	{
		std::size_t start = i_;
		if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
			fail(ParseError::Kind::Syntax, i_, "expected an identifier");
		while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
			++i_;
		return std::string(line_.substr(start, i_ - start));
	}

	long integer()
	{
		std::size_t start = i_;
		if (!at_end() && peek() == '-')
			++i_;
		std::size_t digits = i_;
		while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
			++i_;
		if (i_ == digits)
			fail(ParseError::Kind::Syntax, start, "expected an integer");
		try
		{
			return std::stol(std::string(line_.substr(start, i_ - start)));
		}
		catch (const std::out_of_range &)
		{
			fail(ParseError::Kind::Semantic, start, "integer does not fit in 64 bits");
		}
	}

	void check_size(const Word &w)
	{
		if (w.size() > kMaxWordSyllables)
			fail(ParseError::Kind::Semantic, i_, "word too long");
	}

	void require_generators()
	{
		if (!have_generators_)
			fail(ParseError::Kind::Semantic, 0, "'generators' must precede 'alpha' and 'relator' lines");
	}

	void expect(char c)
	{
		if (at_end() || peek() != c)
			fail(ParseError::Kind::Syntax, i_, std::string("expected '") + c + "'");
		++i_;
	}

	void expect_end()
	{
		skip();
		if (!at_end())
			fail(ParseError::Kind::Syntax, i_, "unexpected trailing input");
	}

	[[noreturn]] void fail(ParseError::Kind kind, std::size_t col, const std::string &msg)
	{
		throw ParseError(kind, lineno_, col + 1, msg);
	}

	void skip()
	{
		while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
			++i_;
	}
	bool at_end() const { return i_ >= line_.size(); }
	char peek() const { return line_[i_]; }

	std::string_view text_;
	std::string_view line_;
	std::size_t lineno_ = 0;
	std::size_t i_ = 0;
	Presentation pres_;
	bool have_prime_ = false;
	bool have_generators_ = false;
};

} // namespace detail

inline Presentation parse_presentation(std::string_view text) { return detail::PresentationParser(text).parse(); }

/// Text form accepted by parse_presentation.
inline std::string to_text(const Presentation &pres)
{
	std::ostringstream os;
	os << "prime " << pres.prime << "\n";
	os << "generators";
	for (const auto &g : pres.generators)
		os << " " << g;
	os << "\n";
	bool default_alpha = true;
	for (long e : pres.alpha)
		default_alpha = default_alpha && e == 1;
	if (!default_alpha)
	{
		os << "alpha";
		for (std::size_t i = 0; i < pres.generators.size(); ++i)
			os << " " << pres.generators[i] << "=" << pres.alpha[i];
		os << "\n";
	}
	for (const auto &r : pres.relators)
	{
		os << "relator " << pres.word_to_string(r.left);
		if (r.is_equation)
			os << " = " << pres.word_to_string(r.right);
		os << "\n";
	}
	return os.str();
}

} // namespace propfox
