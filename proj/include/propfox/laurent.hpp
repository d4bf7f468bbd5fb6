#pragma once

#include "propfox/errors.hpp"
#include "propfox/padic.hpp"
#include "propfox/rational.hpp"

#include <cctype>
#include <iterator>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace propfox {

/// Finitely supported Laurent polynomial sum c_k * g^k over a field F.
/// Zero coefficients are never stored; the empty map is zero.
template <class F>
class LaurentPolynomial
{
public:
	using Terms = std::map<long, F>;

	LaurentPolynomial() = default;
	LaurentPolynomial(const F &c) { set(0, c); }
	LaurentPolynomial(int c) : LaurentPolynomial(F(c)) {}

	static LaurentPolynomial monomial(const F &c, long k)
	{
		LaurentPolynomial r;
		r.set(k, c);
		return r;
	}

	static LaurentPolynomial gamma(long k = 1) { return monomial(F(1), k); }

	/// Builds from dense ascending coefficients c[0] + c[1] g + ... .
	static LaurentPolynomial from_coefficients(std::span<const F> coeffs, long low = 0)
	{
		LaurentPolynomial r;
		for (std::size_t i = 0; i < coeffs.size(); ++i)
			r.set(low + static_cast<long>(i), coeffs[i]);
		return r;
	}

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_monomial() const { return terms_.size() == 1; }
	bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0); }
	bool is_one() const { return is_constant() && !is_zero() && terms_.begin()->second == F(1); }

	/// Lowest / highest exponent; zero polynomial has none.
	long low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
	long high_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

	/// Width high - low, the degree of the associated polynomial.
	long span_degree() const { return high_degree() - low_degree(); }

	F coefficient(long k) const
	{
		auto it = terms_.find(k);
		return it == terms_.end() ? F(0) : it->second;
	}

	F leading_coefficient() const { return terms_.empty() ? F(0) : terms_.rbegin()->second; }

	void set(long k, const F &c)
	{
		if (c == F(0))
			terms_.erase(k);
		else
			terms_[k] = c;
	}

	LaurentPolynomial shifted(long k) const
	{
		LaurentPolynomial r;
		for (const auto &[e, c] : terms_)
			r.terms_.emplace_hint(r.terms_.end(), e + k, c);
		return r;
	}

	LaurentPolynomial operator-() const
	{
		LaurentPolynomial r;
		for (const auto &[e, c] : terms_)
			r.terms_.emplace_hint(r.terms_.end(), e, -c);
		return r;
	}

	LaurentPolynomial &operator+=(const LaurentPolynomial &o)
	{
		for (const auto &[e, c] : o.terms_)
			accumulate(e, c);
		return *this;
	}

	LaurentPolynomial &operator-=(const LaurentPolynomial &o)
	{
		for (const auto &[e, c] : o.terms_)
			accumulate(e, -c);
		return *this;
	}

	LaurentPolynomial &operator*=(const LaurentPolynomial &o) { return *this = *this * o; }

	friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b) { return a += b; }
	friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b) { return a -= b; }

	friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b)
	{
		LaurentPolynomial r;
		for (const auto &[ea, ca] : a.terms_)
			for (const auto &[eb, cb] : b.terms_)
				r.accumulate(ea + eb, ca * cb);
		return r;
	}

	friend LaurentPolynomial operator*(const F &s, const LaurentPolynomial &a)
	{
		if (s == F(0))
			return {};
		LaurentPolynomial r;
		for (const auto &[e, c] : a.terms_)
			r.terms_.emplace_hint(r.terms_.end(), e, s * c);
		return r;
	}

	friend bool operator==(const LaurentPolynomial &a, const LaurentPolynomial &b) { return a.terms_ == b.terms_; }
	friend bool operator!=(const LaurentPolynomial &a, const LaurentPolynomial &b) { return !(a == b); }

	/// Inverse of a unit c * g^k.
	LaurentPolynomial invert_unit() const
	{
		if (!is_monomial())
			throw NotAUnit("not a unit of the Laurent ring: " + to_string());
		const auto &[e, c] = *terms_.begin();
		return monomial(F(1) / c, -e);
	}

	std::string to_string() const;

	friend std::ostream &operator<<(std::ostream &os, const LaurentPolynomial &f) { return os << f.to_string(); }

private:
	void accumulate(long e, const F &c)
	{
		auto [it, inserted] = terms_.try_emplace(e, c);
		if (!inserted)
		{
			it->second += c;
			if (it->second == F(0))
				terms_.erase(it);
		}
	}

	Terms terms_;
};

using LaurentPoly = LaurentPolynomial<Rational>;

template <class F>
std::string LaurentPolynomial<F>::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
	{
		long e = it->first;
		F c = it->second;
		bool negative = c < F(0);
		if (negative)
			c = -c;
		if (first)
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		first = false;
		if (e == 0)
		{
			out += c.to_string();
			continue;
		}
		if (!(c == F(1)))
			out += c.to_string() + "*";
		out += "g";
		if (e != 1)
			out += "^" + std::to_string(e);
	}
	return out;
}

/// Quotient and remainder of polynomial division in F[g]; both operands
/// must have nonnegative exponents and b != 0.
template <class F>
std::pair<LaurentPolynomial<F>, LaurentPolynomial<F>> poly_divmod(LaurentPolynomial<F> a, const LaurentPolynomial<F> &b)
{
	if (b.is_zero())
		throw DivisionByZero();
	LaurentPolynomial<F> q;
	long db = b.high_degree();
	F lb = b.leading_coefficient();
	while (!a.is_zero() && a.high_degree() >= db)
	{
		long shift = a.high_degree() - db;
		F factor = a.leading_coefficient() / lb;
		auto t = LaurentPolynomial<F>::monomial(factor, shift);
		q += t;
		a -= t * b;
	}
	return {q, a};
}

/// Canonical representative of the associate class of f under the units
/// c * g^k: a polynomial in g with nonzero constant term and leading
/// coefficient 1. Zero maps to zero.
template <class F>
LaurentPolynomial<F> normalize_associate(const LaurentPolynomial<F> &f)
{
	if (f.is_zero())
		return f;
	F lead = f.leading_coefficient();
	return (F(1) / lead) * f.shifted(-f.low_degree());
}

template <class F>
LaurentPolynomial<F> gcd(const LaurentPolynomial<F> &f, const LaurentPolynomial<F> &g)
{
	auto a = normalize_associate(f);
	auto b = normalize_associate(g);
	while (!b.is_zero())
	{
		auto r = poly_divmod(a, b).second;
		a = std::move(b);
		b = std::move(r);
	}
	return normalize_associate(a);
}

/// Normalized GCD over F[g, g^-1]; zero for an empty or all-zero list.
template <class F>
LaurentPolynomial<F> gcd_many(std::span<const LaurentPolynomial<F>> fs)
{
	LaurentPolynomial<F> g;
	for (const auto &f : fs)
	{
		g = gcd(g, f);
		if (g.is_one())
			break;
	}
	return g;
}

template <class F>
LaurentPolynomial<F> gcd_many(const std::vector<LaurentPolynomial<F>> &fs)
{
	return gcd_many(std::span<const LaurentPolynomial<F>>(fs));
}

/// Exact quotient f / g in the Laurent ring; throws if g does not divide f.
template <class F>
LaurentPolynomial<F> exact_divide(const LaurentPolynomial<F> &f, const LaurentPolynomial<F> &g)
{
	if (g.is_zero())
		throw DivisionByZero();
	if (f.is_zero())
		return f;
	auto [q, r] = poly_divmod(f.shifted(-f.low_degree()), g.shifted(-g.low_degree()));
	if (!r.is_zero())
		throw DomainError("inexact Laurent division");
	return q.shifted(f.low_degree() - g.low_degree());
}

template <class F>
bool divides(const LaurentPolynomial<F> &g, const LaurentPolynomial<F> &f)
{
	if (g.is_zero())
		return f.is_zero();
	if (f.is_zero())
		return true;
	return poly_divmod(f.shifted(-f.low_degree()), g.shifted(-g.low_degree())).second.is_zero();
}

template <class F>
LaurentPolynomial<F> derivative(const LaurentPolynomial<F> &f)
{
	LaurentPolynomial<F> r;
	for (const auto &[e, c] : f.terms())
		if (e != 0)
			r.set(e - 1, F(e) * c);
	return r;
}

/// f(a) for a nonzero rational a (zero allowed when f has no negative
/// exponents).
inline Rational eval_at(const LaurentPoly &f, const Rational &a)
{
	if (a.is_zero() && f.low_degree() < 0 && !f.is_zero())
		throw DivisionByZero();
	Rational sum;
	for (const auto &[e, c] : f.terms())
		sum += c * pow(a, e);
	return sum;
}

/// f(a) in Q_p; coefficients enter with the relative precision of a.
inline PAdicApprox eval_at(const LaurentPoly &f, const PAdicApprox &a)
{
	if (f.is_zero())
		return PAdicApprox();
	if (a.is_zero() && f.low_degree() < 0)
		throw DivisionByZero();
	long p = a.prime();
	long N = std::max(1L, a.relative_precision());
	PAdicApprox inv = f.low_degree() < 0 ? a.inverse() : PAdicApprox();
	PAdicApprox sum;
	for (const auto &[e, c] : f.terms())
	{
		PAdicApprox term = PAdicApprox::from_rational(c, p, N);
		const PAdicApprox &base = e < 0 ? inv : a;
		for (long k = 0; k < (e < 0 ? -e : e); ++k)
			term *= base;
		sum += term;
	}
	return sum;
}

namespace detail {

class LaurentParser
{
public:
	explicit LaurentParser(std::string_view s) : s_(s) {}

	LaurentPoly parse()
	{
		LaurentPoly result;
		skip();
		if (at_end())
			fail("empty polynomial");
		bool first = true;
		while (!at_end())
		{
			int sign = 1;
			if (peek() == '+' || peek() == '-')
			{
				sign = peek() == '-' ? -1 : 1;
				++i_;
				skip();
			}
			else if (!first)
				fail("expected '+' or '-'");
			first = false;
			result += parse_term(sign);
			skip();
		}
		return result;
	}

private:
	LaurentPoly parse_term(int sign)
	{
		Rational coeff(sign);
		bool have_coeff = false;
		if (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
		{
			coeff *= parse_unsigned_rational();
			have_coeff = true;
			skip();
			if (!at_end() && peek() == '*')
			{
				++i_;
				skip();
			}
			else
				return LaurentPoly(coeff);
		}
		if (at_end() || peek() != 'g')
		{
			if (have_coeff)
				fail("expected 'g' after '*'");
			fail("expected a term");
		}
		++i_;
		skip();
		long e = 1;
		if (!at_end() && peek() == '^')
		{
			++i_;
			skip();
			e = parse_signed_long();
		}
		return LaurentPoly::monomial(coeff, e);
	}

	Rational parse_unsigned_rational()
	{
		std::size_t start = i_;
		while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
			++i_;
		auto r = try_parse_rational(s_.substr(start, i_ - start));
		if (!r)
			fail("bad coefficient");
		return *r;
	}

	long parse_signed_long()
	{
		std::size_t start = i_;
		if (!at_end() && (peek() == '-' || peek() == '+'))
			++i_;
		while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
			++i_;
		try
		{
			return std::stol(std::string(s_.substr(start, i_ - start)));
		}
		catch (const std::exception &)
		{
			fail("bad exponent");
		}
	}

	[[noreturn]] void fail(const std::string &msg)
	{
		throw ParseError(ParseError::Kind::Syntax, 1, i_ + 1, msg + " in '" + std::string(s_) + "'");
	}

	void skip()
	{
		while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
			++i_;
	}
	bool at_end() const { return i_ >= s_.size(); }
	char peek() const { return s_[i_]; }

	std::string_view s_;
	std::size_t i_ = 0;
};

} // namespace detail

/// Parses sums of "c*g^k" terms, e.g. "g^2 - 5*g + 4" or "3*g^-1".
inline LaurentPoly parse_laurent(std::string_view text) { return detail::LaurentParser(text).parse(); }

} // namespace propfox
