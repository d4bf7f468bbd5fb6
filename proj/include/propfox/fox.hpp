#pragma once

#include "propfox/errors.hpp"
#include "propfox/laurent.hpp"
#include "propfox/matrix.hpp"
#include "propfox/parallel.hpp"
#include "propfox/presentation.hpp"
#include "propfox/representation.hpp"
#include "propfox/word.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace propfox {

/// R(g)^n, using the stored inverse for negative n.
template <class T>
Matrix<T> generator_power(const MatrixRep<T> &rep, std::size_t g, long n)
{
	if (n >= 0)
		return power(rep.images.at(g), n, rep.one);
	return power(rep.inverses.at(g), -n, rep.one);
}

/// Product over syllables of R(g)^n; the identity word gives I.
template <class T>
Matrix<T> evaluate_word(const MatrixRep<T> &rep, const Word &w)
{
	Matrix<T> acc = rep.identity();
	for (const auto &s : w.syllables())
		acc = acc * generator_power(rep, s.generator, s.exponent);
	return acc;
}

namespace detail {

/// (I + M + ... + M^{n-1}, M^n) for n >= 0.
template <class T>
std::pair<Matrix<T>, Matrix<T>> geometric_pair(const Matrix<T> &m, long n, const T &one)
{
	if (n == 0)
		return {Matrix<T>(m.rows(), m.cols()), Matrix<T>::identity(m.rows(), one)};
	if (n & 1)
	{
		auto [s, p] = geometric_pair(m, n - 1, one);
		return {s + p, p * m};
	}
	auto [s, p] = geometric_pair(m, n / 2, one);
	return {s + s * p, p * p};
}

} // namespace detail

/// Sum_{j=0}^{n-1} M^j for n >= 0; for n < 0, -M^n * Sum_{j=0}^{-n-1} M^j
/// with M^n taken from m_inv.
template <class T>
Matrix<T> geometric_sum(const Matrix<T> &m, const Matrix<T> &m_inv, long n, const T &one)
{
	if (n >= 0)
		return detail::geometric_pair(m, n, one).first;
	return -(power(m_inv, -n, one) * detail::geometric_pair(m, -n, one).first);
}

/// Rational version; throws NotInvertible for n < 0 with singular M.
inline Matrix<Rational> geometric_sum(const Matrix<Rational> &m, long n)
{
	if (n >= 0)
		return detail::geometric_pair(m, n, Rational(1)).first;
	return geometric_sum(m, inverse(m), n, Rational(1));
}

/// Images of the Fox derivatives dw/dg_i for every generator i, by a
/// left-to-right scan of the syllables.
template <class T>
std::vector<Matrix<T>> fox_derivatives(const MatrixRep<T> &rep, const Word &w)
{
	std::size_t n = rep.num_generators();
	std::vector<Matrix<T>> out(n, Matrix<T>(rep.dim, rep.dim));
	Matrix<T> prefix = rep.identity();
	for (const auto &s : w.syllables())
	{
		const auto &m = rep.images.at(s.generator);
		const auto &mi = rep.inverses.at(s.generator);
		out[s.generator] += prefix * geometric_sum(m, mi, s.exponent, rep.one);
		prefix = prefix * generator_power(rep, s.generator, s.exponent);
	}
	return out;
}

template <class T>
Matrix<T> fox_derivative_matrix(const MatrixRep<T> &rep, const Word &w, std::size_t i)
{
	if (i >= rep.num_generators())
		throw DomainError("generator index out of range");
	Matrix<T> acc(rep.dim, rep.dim);
	Matrix<T> prefix = rep.identity();
	for (const auto &s : w.syllables())
	{
		if (s.generator == i)
			acc += prefix * geometric_sum(rep.images[i], rep.inverses[i], s.exponent, rep.one);
		prefix = prefix * generator_power(rep, s.generator, s.exponent);
	}
	return acc;
}

/// Block matrix with block (j, i) the image of d(r_j)/d(g_i); shape
/// (m * dim) x (n * dim). Throws HypothesisViolated when the presentation
/// fails validation, unless allow_invalid is set.
template <class T>
Matrix<T> alexander_matrix(const Presentation &pres, const MatrixRep<T> &rep, bool allow_invalid = false)
{
	if (!allow_invalid)
	{
		auto report = validate_presentation(pres);
		if (!report.ok())
			throw HypothesisViolated(report.failures.front());
	}
	if (rep.num_generators() != pres.num_generators())
		throw DomainError("representation does not match the number of generators");
	std::size_t l = rep.dim;
	std::size_t m = pres.num_relators();
	std::size_t n = pres.num_generators();
	std::vector<std::vector<Matrix<T>>> rows(m);
	parallel_for(m, [&](std::size_t j) { rows[j] = fox_derivatives(rep, pres.relators[j].word()); });
	Matrix<T> q(m * l, n * l);
	for (std::size_t j = 0; j < m; ++j)
		for (std::size_t i = 0; i < n; ++i)
			q.set_block(j * l, i * l, rows[j][i]);
	return q;
}

inline Matrix<LaurentPoly> alexander_matrix(const Presentation &pres, const Representation &phi, bool allow_invalid = false)
{
	return alexander_matrix(pres, tensor_with_alpha(phi, pres), allow_invalid);
}

} // namespace propfox
