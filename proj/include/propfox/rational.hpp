#pragma once

#include "propfox/errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace propfox {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational
{
public:
	Rational() = default;
	Rational(int v) : q_(static_cast<long>(v)) {}
	Rational(long v) : q_(v) {}
	Rational(long long v) : q_(Integer(std::to_string(v))) {}
	Rational(const Integer &v) : q_(v) {}

	Rational(const Integer &num, const Integer &den)
	{
		if (den == 0)
			throw DivisionByZero();
		q_ = mpq_class(num, den);
		q_.canonicalize();
	}

	Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

	Integer numerator() const { return q_.get_num(); }
	Integer denominator() const { return q_.get_den(); }

	bool is_zero() const { return sgn(q_) == 0; }
	bool is_one() const { return q_ == 1; }
	bool is_integer() const { return q_.get_den() == 1; }
	int sign() const { return sgn(q_); }

	Rational operator-() const
	{
		Rational r;
		r.q_ = -q_;
		return r;
	}

	Rational &operator+=(const Rational &o)
	{
		q_ += o.q_;
		return *this;
	}
	Rational &operator-=(const Rational &o)
	{
		q_ -= o.q_;
		return *this;
	}
	Rational &operator*=(const Rational &o)
	{
		q_ *= o.q_;
		return *this;
	}
	Rational &operator/=(const Rational &o)
	{
		if (o.is_zero())
			throw DivisionByZero();
		q_ /= o.q_;
		return *this;
	}

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
	friend bool operator!=(const Rational &a, const Rational &b) { return a.q_ != b.q_; }
	friend bool operator<(const Rational &a, const Rational &b) { return a.q_ < b.q_; }
	friend bool operator>(const Rational &a, const Rational &b) { return a.q_ > b.q_; }
	friend bool operator<=(const Rational &a, const Rational &b) { return a.q_ <= b.q_; }
	friend bool operator>=(const Rational &a, const Rational &b) { return a.q_ >= b.q_; }

	Rational inverse() const
	{
		if (is_zero())
			throw DivisionByZero();
		Rational r;
		r.q_ = 1 / q_;
		return r;
	}

	Rational abs() const
	{
		Rational r;
		r.q_ = ::abs(q_);
		return r;
	}

	/// "n" for integers, "n/d" otherwise.
	std::string to_string() const
	{
		if (is_integer())
			return q_.get_num().get_str();
		return q_.get_num().get_str() + "/" + q_.get_den().get_str();
	}

	/// Always "n/d", including integers ("4/1").
	std::string to_fraction_string() const
	{
		return q_.get_num().get_str() + "/" + q_.get_den().get_str();
	}

	const mpq_class &raw() const { return q_; }

	friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

private:
	mpq_class q_;
};

inline Rational pow(const Rational &base, long e)
{
	if (e < 0)
		return pow(base.inverse(), -e);
	Rational result(1);
	Rational b = base;
	while (e > 0)
	{
		if (e & 1)
			result *= b;
		e >>= 1;
		if (e)
			b *= b;
	}
	return result;
}

namespace detail {

inline bool parse_integer(std::string_view s, Integer &out)
{
	if (s.empty())
		return false;
	std::size_t i = 0;
	if (s[0] == '-' || s[0] == '+')
		i = 1;
	if (i == s.size())
		return false;
	for (std::size_t k = i; k < s.size(); ++k)
		if (s[k] < '0' || s[k] > '9')
			return false;
	std::string digits(s.substr(s[0] == '+' ? 1 : 0));
	return out.set_str(digits, 10) == 0;
}

} // namespace detail

/// Parses "n" or "n/d" (d > 0).
inline std::optional<Rational> try_parse_rational(std::string_view text)
{
	auto slash = text.find('/');
	Integer num, den(1);
	if (slash == std::string_view::npos)
	{
		if (!detail::parse_integer(text, num))
			return std::nullopt;
		return Rational(num);
	}
	if (!detail::parse_integer(text.substr(0, slash), num))
		return std::nullopt;
	auto dtext = text.substr(slash + 1);
	if (dtext.empty() || dtext[0] == '-' || dtext[0] == '+')
		return std::nullopt;
	if (!detail::parse_integer(dtext, den) || den == 0)
		return std::nullopt;
	return Rational(num, den);
}

inline Rational parse_rational(std::string_view text)
{
	auto r = try_parse_rational(text);
	if (!r)
		throw ParseError(ParseError::Kind::Syntax, 0, 0, "not a rational number: '" + std::string(text) + "'");
	return *r;
}

/// p-adic valuation of a nonzero integer.
inline long valuation(const Integer &n, const Integer &p)
{
	if (n == 0)
		throw DomainError("valuation of zero integer is infinite");
	Integer rest;
	return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

/// p-adic valuation; empty for q = 0 (valuation +infinity).
inline std::optional<long> valuation(const Rational &q, long p)
{
	if (q.is_zero())
		return std::nullopt;
	Integer pp(p);
	return valuation(q.numerator(), pp) - valuation(q.denominator(), pp);
}

/// |a - 1|_p < 1.
inline bool unit_ball_check(const Rational &a, long p)
{
	auto v = valuation(a - Rational(1), p);
	return !v || *v >= 1;
}

inline bool is_prime(long p)
{
	if (p < 2)
		return false;
	for (long d = 2; d * d <= p; ++d)
		if (p % d == 0)
			return false;
	return true;
}

} // namespace propfox

template <>
struct std::hash<propfox::Rational>
{
	std::size_t operator()(const propfox::Rational &r) const noexcept
	{
		return std::hash<std::string>{}(r.to_fraction_string());
	}
};
