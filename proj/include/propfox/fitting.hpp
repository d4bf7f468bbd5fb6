#pragma once

#include "propfox/errors.hpp"
#include "propfox/fox.hpp"
#include "propfox/laurent.hpp"
#include "propfox/matrix.hpp"
#include "propfox/parallel.hpp"
#include "propfox/presentation.hpp"
#include "propfox/representation.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace propfox {

/// Determinant over Q[g, g^-1]: the lowest power of g is pulled out of
/// every row, then Bareiss elimination runs over Q[g] with exact division.
inline LaurentPoly det_laurent(Matrix<LaurentPoly> m)
{
	if (!m.is_square())
		throw DomainError("determinant of a non-square matrix");
	std::size_t n = m.rows();
	if (n == 0)
		return LaurentPoly(1);
	long shift = 0;
	for (std::size_t i = 0; i < n; ++i)
	{
		std::optional<long> low;
		for (std::size_t j = 0; j < n; ++j)
			if (!m(i, j).is_zero())
				low = low ? std::min(*low, m(i, j).low_degree()) : m(i, j).low_degree();
		if (!low)
			return LaurentPoly();
		shift += *low;
		if (*low != 0)
			for (std::size_t j = 0; j < n; ++j)
				m(i, j) = m(i, j).shifted(-*low);
	}
	bool negate = false;
	LaurentPoly prev(1);
	for (std::size_t k = 0; k + 1 < n; ++k)
	{
		if (m(k, k).is_zero())
		{
			std::size_t p = k + 1;
			while (p < n && m(p, k).is_zero())
				++p;
			if (p == n)
				return LaurentPoly();
			for (std::size_t j = 0; j < n; ++j)
				std::swap(m(k, j), m(p, j));
			negate = !negate;
		}
		for (std::size_t i = k + 1; i < n; ++i)
		{
			for (std::size_t j = k + 1; j < n; ++j)
			{
				LaurentPoly t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
				m(i, j) = prev.is_one() ? t : exact_divide(t, prev);
			}
			m(i, k) = LaurentPoly();
		}
		prev = m(k, k);
	}
	LaurentPoly det = m(n - 1, n - 1).shifted(shift);
	return negate ? -det : det;
}

struct FittingResult
{
	long d = 0;
	LaurentPoly delta;
	/// Minimum p-adic valuation of the content of the nonzero minors;
	/// empty when not computed or when every minor vanishes.
	std::optional<long> mu_content;
	std::size_t minor_count = 0;
};

struct FittingOptions
{
	/// Prime for mu_content; 0 skips it.
	long prime = 0;
	/// Stop once the running GCD is 1 (and mu_content, if wanted, is 0).
	bool early_exit = true;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r)
{
	std::vector<std::vector<std::size_t>> out;
	if (r > n)
		return out;
	std::vector<std::size_t> idx(r);
	for (std::size_t k = 0; k < r; ++k)
		idx[k] = k;
	while (true)
	{
		out.push_back(idx);
		std::size_t k = r;
		while (k > 0 && idx[k - 1] == n - r + k - 1)
			--k;
		if (k == 0)
			break;
		++idx[k - 1];
		for (std::size_t t = k; t < r; ++t)
			idx[t] = idx[t - 1] + 1;
	}
	return out;
}

inline long content_valuation(const LaurentPoly &f, long p)
{
	long best = 0;
	bool first = true;
	for (const auto &[e, c] : f.terms())
	{
		long v = *valuation(c, p);
		if (first || v < best)
			best = v;
		first = false;
	}
	return best;
}

} // namespace detail

/// Delta_d: normalized GCD of the (cols - d)-minors of q. Returns 0 when
/// cols - d exceeds the row count and 1 when cols - d <= 0.
inline FittingResult fitting_delta(const Matrix<LaurentPoly> &q, long d, const FittingOptions &opts = {})
{
	if (d < 0)
		throw DomainError("Fitting index d must be nonnegative");
	FittingResult res;
	res.d = d;
	long r = static_cast<long>(q.cols()) - d;
	if (r <= 0)
	{
		res.delta = LaurentPoly(1);
		if (opts.prime)
			res.mu_content = 0;
		return res;
	}
	if (static_cast<std::size_t>(r) > q.rows())
		return res;
	auto row_sets = detail::combinations(q.rows(), static_cast<std::size_t>(r));
	auto col_sets = detail::combinations(q.cols(), static_cast<std::size_t>(r));
	std::size_t total = row_sets.size() * col_sets.size();
	constexpr std::size_t kBatch = 256;
	std::vector<LaurentPoly> minors;
	for (std::size_t start = 0; start < total; start += kBatch)
	{
		std::size_t count = std::min(kBatch, total - start);
		minors.assign(count, LaurentPoly());
		parallel_for(count, [&](std::size_t k) {
			std::size_t idx = start + k;
			const auto &rows = row_sets[idx / col_sets.size()];
			const auto &cols = col_sets[idx % col_sets.size()];
			minors[k] = det_laurent(q.select(rows, cols));
		});
		res.minor_count += count;
		for (const auto &m : minors)
		{
			if (m.is_zero())
				continue;
			res.delta = gcd(res.delta, m);
			if (opts.prime)
			{
				long v = detail::content_valuation(m, opts.prime);
				res.mu_content = res.mu_content ? std::min(*res.mu_content, v) : v;
			}
		}
		bool mu_settled = !opts.prime || (res.mu_content && *res.mu_content <= 0);
		if (opts.early_exit && res.delta.is_one() && mu_settled)
			break;
	}
	return res;
}

template <class S>
std::size_t rank_at(const Matrix<LaurentPoly> &q, const S &a)
{
	return rank(evaluate_at(q, a));
}

/// Whether a is a zero of Delta_d, computed both as delta(a) == 0 and as
/// rank Q(a) < cols - d. Throws InternalInconsistency if they disagree.
inline bool is_zero_of_delta(const Matrix<LaurentPoly> &q, const LaurentPoly &delta, long d, const Rational &a)
{
	if (a.is_zero())
		throw DivisionByZero("evaluation point a = 0");
	bool by_eval = eval_at(delta, a).is_zero();
	long bound = static_cast<long>(q.cols()) - d;
	bool by_rank = static_cast<long>(rank_at(q, a)) < bound;
	if (by_eval != by_rank)
		throw InternalInconsistency("Delta_" + std::to_string(d) + " at " + a.to_string() + ": evaluation says " +
		                            (by_eval ? "zero" : "nonzero") + " but rank says " + (by_rank ? "zero" : "nonzero"));
	return by_eval;
}

inline bool is_zero_of_delta(const Matrix<LaurentPoly> &q, long d, const Rational &a)
{
	return is_zero_of_delta(q, fitting_delta(q, d).delta, d, a);
}

/// Delta_d of the Iwasawa module, i.e. Delta_{d+1} of the Alexander module
/// for the trivial one-dimensional representation.
inline FittingResult iwasawa_delta(const Presentation &pres, long d, const FittingOptions &opts = {})
{
	auto q = alexander_matrix(pres, Representation::trivial(pres.num_generators()));
	auto res = fitting_delta(q, d + 1, opts);
	res.d = d;
	return res;
}

} // namespace propfox
