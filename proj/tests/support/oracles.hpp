#pragma once

// Slow reference computations used to cross-check the library.

#include "propfox/propfox.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using namespace propfox;

inline std::string read_data(const std::string &name)
{
	std::ifstream in(std::string(PROPFOX_DATA_DIR) + "/" + name);
	if (!in)
		throw std::runtime_error("cannot open data file " + name);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

inline Presentation load_presentation(const std::string &name) { return parse_presentation(read_data(name)); }

inline Representation load_representation(const std::string &name, const Presentation &pres)
{
	return parse_representation(read_data(name), pres);
}

/// Letters g^{+1} / g^{-1} of w, left to right.
inline std::vector<Syllable> letters(const Word &w)
{
	std::vector<Syllable> out;
	for (const auto &s : w.syllables())
	{
		long step = s.exponent > 0 ? 1 : -1;
		for (long k = 0; k < (s.exponent > 0 ? s.exponent : -s.exponent); ++k)
			out.push_back({s.generator, step});
	}
	return out;
}

/// Fox derivative dw/dg_i as an element of Z[F]: a map from group
/// elements to integer coefficients, built letter by letter.
inline std::map<std::vector<std::pair<std::size_t, long>>, long> fox_group_ring(const Word &w, std::size_t i)
{
	std::map<std::vector<std::pair<std::size_t, long>>, long> out;
	auto key = [](const Word &u) {
		std::vector<std::pair<std::size_t, long>> k;
		for (const auto &s : u.syllables())
			k.emplace_back(s.generator, s.exponent);
		return k;
	};
	Word prefix;
	for (const auto &l : letters(w))
	{
		Word next = prefix * Word::generator(l.generator, l.exponent);
		if (l.generator == i)
		{
			if (l.exponent > 0)
				out[key(prefix)] += 1;
			else
				out[key(next)] -= 1;
		}
		prefix = next;
	}
	return out;
}

/// Image of dw/dg_i under rep, via the expanded group-ring element.
template <class T>
Matrix<T> fox_image(const MatrixRep<T> &rep, const Word &w, std::size_t i)
{
	Matrix<T> acc(rep.dim, rep.dim);
	for (const auto &[k, c] : fox_group_ring(w, i))
	{
		if (c == 0)
			continue;
		std::vector<Syllable> syl;
		for (const auto &[g, e] : k)
			syl.push_back({g, e});
		Matrix<T> img = evaluate_word(rep, Word(syl));
		acc += T(Rational(c)) * img;
	}
	return acc;
}

/// Product of letter images, one letter at a time.
template <class T>
Matrix<T> word_image_letters(const MatrixRep<T> &rep, const Word &w)
{
	Matrix<T> acc = rep.identity();
	for (const auto &l : letters(w))
		acc = acc * (l.exponent > 0 ? rep.images[l.generator] : rep.inverses[l.generator]);
	return acc;
}

/// Leibniz expansion over all permutations.
template <class T>
T leibniz_det(const Matrix<T> &m)
{
	std::size_t n = m.rows();
	std::vector<std::size_t> perm(n);
	std::iota(perm.begin(), perm.end(), 0);
	T total{};
	do
	{
		long inversions = 0;
		for (std::size_t a = 0; a < n; ++a)
			for (std::size_t b = a + 1; b < n; ++b)
				if (perm[a] > perm[b])
					++inversions;
		T term = T(Rational(1));
		for (std::size_t r = 0; r < n; ++r)
			term = term * m(r, perm[r]);
		total = inversions % 2 ? total - term : total + term;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return total;
}

/// Rank as the size of the largest nonzero minor.
inline std::size_t rank_by_minors(const Matrix<Rational> &m)
{
	std::size_t best = 0;
	for (std::size_t r = 1; r <= std::min(m.rows(), m.cols()); ++r)
	{
		bool found = false;
		for (const auto &rows : detail::combinations(m.rows(), r))
		{
			for (const auto &cols : detail::combinations(m.cols(), r))
				if (!leibniz_det(m.select(rows, cols)).is_zero())
				{
					found = true;
					break;
				}
			if (found)
				break;
		}
		if (!found)
			break;
		best = r;
	}
	return best;
}

/// Residues x in [0, p^N) with f(x) = 0 mod p^N whose reduction mod p is a
/// simple root of f mod p. Each such class holds exactly one Z_p root.
inline std::vector<Integer> simple_roots_mod(const std::vector<Integer> &f, long p, long N)
{
	auto eval = [&](const std::vector<Integer> &c, const Integer &x) {
		Integer r = 0;
		for (std::size_t k = c.size(); k-- > 0;)
			r = r * x + c[k];
		return r;
	};
	std::vector<Integer> df;
	for (std::size_t k = 1; k < f.size(); ++k)
		df.push_back(f[k] * static_cast<unsigned long>(k));
	Integer mod = PAdicApprox::power(p, N);
	std::vector<Integer> out;
	for (Integer x = 0; x < mod; ++x)
	{
		Integer fx = eval(f, x);
		if (fx % mod != 0)
			continue;
		Integer dx = eval(df, x);
		if (dx % p == 0)
			continue;
		out.push_back(x);
	}
	return out;
}

struct Random
{
	std::mt19937_64 gen;
	explicit Random(std::uint64_t seed) : gen(seed) {}

	long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

	long nonzero(long lo, long hi)
	{
		long v = 0;
		while (v == 0)
			v = integer(lo, hi);
		return v;
	}

	Rational rational(long lo = -5, long hi = 5, long max_den = 3) { return Rational(integer(lo, hi), integer(1, max_den)); }

	Word word(std::size_t gens, std::size_t max_syllables, long max_exp = 3)
	{
		std::vector<Syllable> syl;
		std::size_t len = static_cast<std::size_t>(integer(0, static_cast<long>(max_syllables)));
		for (std::size_t k = 0; k < len; ++k)
			syl.push_back({static_cast<std::size_t>(integer(0, static_cast<long>(gens) - 1)), nonzero(-max_exp, max_exp)});
		return Word(syl);
	}

	/// Word of total degree zero (all alpha exponents 1).
	Word balanced_word(std::size_t gens, std::size_t max_syllables, long max_exp = 3)
	{
		Word w = word(gens, max_syllables, max_exp);
		long deg = 0;
		for (const auto &s : w.syllables())
			deg += s.exponent;
		if (deg != 0)
			w *= Word::generator(static_cast<std::size_t>(integer(0, static_cast<long>(gens) - 1)), -deg);
		return w;
	}

	LaurentPoly laurent(long max_terms = 4, long lo = -2, long hi = 3)
	{
		LaurentPoly f;
		long terms = integer(0, max_terms);
		for (long k = 0; k < terms; ++k)
			f += LaurentPoly::monomial(rational(), integer(lo, hi));
		return f;
	}

	Matrix<Rational> invertible(std::size_t dim, long bound = 3)
	{
		while (true)
		{
			Matrix<Rational> m(dim, dim);
			for (std::size_t r = 0; r < dim; ++r)
				for (std::size_t c = 0; c < dim; ++c)
					m(r, c) = Rational(integer(-bound, bound));
			if (!determinant(m).is_zero())
				return m;
		}
	}

	Representation representation(std::size_t gens, std::size_t dim)
	{
		Representation r;
		r.dim = dim;
		for (std::size_t i = 0; i < gens; ++i)
			r.images.push_back(invertible(dim));
		return r;
	}

	/// Presentation with all alpha exponents 1 and balanced relators.
	Presentation presentation(std::size_t gens, std::size_t rels, std::size_t max_syllables = 6)
	{
		Presentation p;
		p.prime = 3;
		for (std::size_t i = 0; i < gens; ++i)
			p.generators.push_back("x" + std::to_string(i + 1));
		p.alpha.assign(gens, 1);
		for (std::size_t j = 0; j < rels; ++j)
		{
			Relator r;
			r.left = balanced_word(gens, max_syllables);
			p.relators.push_back(r);
		}
		return p;
	}
};

} // namespace oracle
