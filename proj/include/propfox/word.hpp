#pragma once

#include "propfox/errors.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace propfox {

struct Syllable
{
	std::size_t generator;
	long exponent;

	friend bool operator==(const Syllable &, const Syllable &) = default;
};

/// Freely reduced element of the free group: adjacent syllables have
/// distinct generators and no exponent is zero. Empty is the identity.
class Word
{
public:
	Word() = default;

	/// Reduces an arbitrary syllable sequence.
	explicit Word(std::span<const Syllable> raw)
	{
		for (const auto &s : raw)
			push(s);
	}
	Word(std::initializer_list<Syllable> raw) : Word(std::span<const Syllable>(raw.begin(), raw.size())) {}

	static Word generator(std::size_t g, long exponent = 1) { return Word({Syllable{g, exponent}}); }

	const std::vector<Syllable> &syllables() const { return syl_; }
	bool is_identity() const { return syl_.empty(); }
	std::size_t size() const { return syl_.size(); }

	/// Sum of |exponent| over syllables.
	long length() const
	{
		long n = 0;
		for (const auto &s : syl_)
			n += s.exponent < 0 ? -s.exponent : s.exponent;
		return n;
	}

	Word inverse() const
	{
		Word w;
		w.syl_.reserve(syl_.size());
		for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
			w.syl_.push_back({it->generator, -it->exponent});
		return w;
	}

	friend Word operator*(Word a, const Word &b)
	{
		for (const auto &s : b.syl_)
			a.push(s);
		return a;
	}

	Word &operator*=(const Word &b)
	{
		for (const auto &s : b.syl_)
			push(s);
		return *this;
	}

	/// w^n, with negative n meaning (w^-1)^|n|.
	Word pow(long n) const
	{
		Word base = n < 0 ? inverse() : *this;
		unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
		if (base.is_identity() || e == 0)
			return {};
		if (base.size() == 1)
			return generator(base.syl_[0].generator, base.syl_[0].exponent * static_cast<long>(e));
		Word result;
		while (e > 0)
		{
			if (e & 1)
				result *= base;
			e >>= 1;
			if (e)
				base = base * base;
		}
		return result;
	}

	friend bool operator==(const Word &, const Word &) = default;

	std::string to_string(std::span<const std::string> names) const
	{
		if (syl_.empty())
			return "1";
		std::string out;
		for (std::size_t i = 0; i < syl_.size(); ++i)
		{
			if (i)
				out += "*";
			out += names[syl_[i].generator];
			if (syl_[i].exponent != 1)
				out += "^" + std::to_string(syl_[i].exponent);
		}
		return out;
	}

private:
	void push(const Syllable &s)
	{
		if (s.exponent == 0)
			return;
		if (!syl_.empty() && syl_.back().generator == s.generator)
		{
			syl_.back().exponent += s.exponent;
			if (syl_.back().exponent == 0)
				syl_.pop_back();
			return;
		}
		syl_.push_back(s);
	}

	std::vector<Syllable> syl_;
};

/// Free reduction of a raw syllable sequence.
inline Word reduce_word(std::span<const Syllable> raw) { return Word(raw); }

/// [x, y] = x^-1 y^-1 x y.
inline Word commutator(const Word &x, const Word &y) { return x.inverse() * y.inverse() * x * y; }

} // namespace propfox
