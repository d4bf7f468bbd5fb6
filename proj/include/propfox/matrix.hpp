#pragma once

#include "propfox/errors.hpp"
#include "propfox/padic.hpp"
#include "propfox/rational.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace propfox {

/// Dense row-major matrix over a ring T whose default value is zero.
template <class T>
class Matrix
{
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
	Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data))
	{
		if (data_.size() != rows * cols)
			throw DomainError("matrix data size does not match shape");
	}

	Matrix(std::initializer_list<std::initializer_list<T>> rows)
	{
		rows_ = rows.size();
		cols_ = rows_ ? rows.begin()->size() : 0;
		data_.reserve(rows_ * cols_);
		for (const auto &r : rows)
		{
			if (r.size() != cols_)
				throw DomainError("ragged matrix initializer");
			data_.insert(data_.end(), r.begin(), r.end());
		}
	}

	static Matrix identity(std::size_t n, const T &one = T(1))
	{
		Matrix m(n, n);
		for (std::size_t i = 0; i < n; ++i)
			m(i, i) = one;
		return m;
	}

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	bool is_square() const { return rows_ == cols_; }

	T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
	const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

	std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
	std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

	const std::vector<T> &data() const { return data_; }

	bool is_zero() const
	{
		for (const auto &x : data_)
			if (!(x == T{}))
				return false;
		return true;
	}

	Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
	{
		Matrix b(nr, nc);
		for (std::size_t i = 0; i < nr; ++i)
			for (std::size_t j = 0; j < nc; ++j)
				b(i, j) = (*this)(r0 + i, c0 + j);
		return b;
	}

	void set_block(std::size_t r0, std::size_t c0, const Matrix &b)
	{
		for (std::size_t i = 0; i < b.rows(); ++i)
			for (std::size_t j = 0; j < b.cols(); ++j)
				(*this)(r0 + i, c0 + j) = b(i, j);
	}

	Matrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const
	{
		Matrix s(row_idx.size(), col_idx.size());
		for (std::size_t i = 0; i < row_idx.size(); ++i)
			for (std::size_t j = 0; j < col_idx.size(); ++j)
				s(i, j) = (*this)(row_idx[i], col_idx[j]);
		return s;
	}

	template <class Fn>
	auto map(Fn &&fn) const -> Matrix<decltype(fn(std::declval<const T &>()))>
	{
		using U = decltype(fn(std::declval<const T &>()));
		std::vector<U> out;
		out.reserve(data_.size());
		for (const auto &x : data_)
			out.push_back(fn(x));
		return Matrix<U>(rows_, cols_, std::move(out));
	}

	Matrix operator-() const
	{
		Matrix r(rows_, cols_);
		for (std::size_t k = 0; k < data_.size(); ++k)
			r.data_[k] = -data_[k];
		return r;
	}

	Matrix &operator+=(const Matrix &o)
	{
		check_same_shape(o);
		for (std::size_t k = 0; k < data_.size(); ++k)
			data_[k] += o.data_[k];
		return *this;
	}

	Matrix &operator-=(const Matrix &o)
	{
		check_same_shape(o);
		for (std::size_t k = 0; k < data_.size(); ++k)
			data_[k] -= o.data_[k];
		return *this;
	}

	friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
	friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }

	friend Matrix operator*(const Matrix &a, const Matrix &b)
	{
		if (a.cols_ != b.rows_)
			throw DomainError("matrix product shape mismatch");
		Matrix r(a.rows_, b.cols_);
		for (std::size_t i = 0; i < a.rows_; ++i)
			for (std::size_t k = 0; k < a.cols_; ++k)
			{
				const T &aik = a(i, k);
				if (aik == T{})
					continue;
				for (std::size_t j = 0; j < b.cols_; ++j)
					r(i, j) += aik * b(k, j);
			}
		return r;
	}

	friend Matrix operator*(const T &s, const Matrix &a)
	{
		Matrix r(a.rows_, a.cols_);
		for (std::size_t k = 0; k < a.data_.size(); ++k)
			r.data_[k] = s * a.data_[k];
		return r;
	}

	friend std::vector<T> operator*(const Matrix &a, std::span<const T> v)
	{
		if (a.cols_ != v.size())
			throw DomainError("matrix-vector shape mismatch");
		std::vector<T> r(a.rows_);
		for (std::size_t i = 0; i < a.rows_; ++i)
			for (std::size_t j = 0; j < a.cols_; ++j)
				r[i] += a(i, j) * v[j];
		return r;
	}

	friend std::vector<T> operator*(const Matrix &a, const std::vector<T> &v) { return a * std::span<const T>(v); }

	friend bool operator==(const Matrix &a, const Matrix &b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
	}
	friend bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

	friend std::ostream &operator<<(std::ostream &os, const Matrix &m)
	{
		for (std::size_t i = 0; i < m.rows_; ++i)
		{
			os << "[";
			for (std::size_t j = 0; j < m.cols_; ++j)
				os << (j ? ", " : "") << m(i, j);
			os << "]\n";
		}
		return os;
	}

private:
	void check_same_shape(const Matrix &o) const
	{
		if (rows_ != o.rows_ || cols_ != o.cols_)
			throw DomainError("matrix shape mismatch");
	}

	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<T> data_;
};

/// M^e for e >= 0 by binary exponentiation.
template <class T>
Matrix<T> power(const Matrix<T> &m, long e, const T &one = T(1))
{
	if (e < 0)
		throw DomainError("negative power needs an inverse");
	Matrix<T> result = Matrix<T>::identity(m.rows(), one);
	Matrix<T> base = m;
	while (e > 0)
	{
		if (e & 1)
			result = result * base;
		e >>= 1;
		if (e)
			base = base * base;
	}
	return result;
}

/// Per-field policy for elimination: what counts as zero, which pivot to
/// prefer, and how to produce a unit.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational>
{
	static bool is_zero(const Rational &x) { return x.is_zero(); }
	static bool approximate_zero(const Rational &) { return false; }
	static bool better_pivot(const Rational &, const Rational &) { return false; }
	static Rational one_like(const Rational &) { return Rational(1); }
};

/// Minimum-valuation pivoting; entries with no known nonzero digit are
/// treated as zero and mark the result as precision-limited.
template <>
struct FieldTraits<PAdicApprox>
{
	static bool is_zero(const PAdicApprox &x) { return x.is_zero(); }
	static bool approximate_zero(const PAdicApprox &x) { return x.is_zero() && !x.is_exact_zero(); }
	static bool better_pivot(const PAdicApprox &candidate, const PAdicApprox &current)
	{
		return *candidate.valuation() < *current.valuation();
	}
	static PAdicApprox one_like(const PAdicApprox &ref)
	{
		return PAdicApprox::from_integer(1, ref.prime(), std::max(1L, ref.relative_precision()));
	}
};

template <class F>
struct RankNullspace
{
	std::size_t rank = 0;
	std::vector<std::vector<F>> nullspace;
	std::vector<std::size_t> pivot_columns;
	/// Set when an entry indistinguishable from zero was treated as zero.
	bool precision_limited = false;
};

/// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F> &m, bool *precision_limited = nullptr)
{
	using Tr = FieldTraits<F>;
	std::vector<std::size_t> pivots;
	std::size_t r = 0;
	for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c)
	{
		std::optional<std::size_t> best;
		for (std::size_t i = r; i < m.rows(); ++i)
		{
			if (Tr::is_zero(m(i, c)))
			{
				if (precision_limited && Tr::approximate_zero(m(i, c)))
					*precision_limited = true;
				continue;
			}
			if (!best || Tr::better_pivot(m(i, c), m(*best, c)))
				best = i;
			if constexpr (std::is_same_v<F, Rational>)
				break;
		}
		if (!best)
			continue;
		if (*best != r)
			for (std::size_t j = 0; j < m.cols(); ++j)
				std::swap(m(r, j), m(*best, j));
		F inv = F(Tr::one_like(m(r, c))) / m(r, c);
		for (std::size_t j = c; j < m.cols(); ++j)
			m(r, j) = m(r, j) * inv;
		for (std::size_t i = 0; i < m.rows(); ++i)
		{
			if (i == r || Tr::is_zero(m(i, c)))
				continue;
			F factor = m(i, c);
			for (std::size_t j = c; j < m.cols(); ++j)
				m(i, j) = m(i, j) - factor * m(r, j);
		}
		pivots.push_back(c);
		++r;
	}
	return pivots;
}

template <class F>
F reference_one(const Matrix<F> &m)
{
	if constexpr (std::is_same_v<F, Rational>)
		return Rational(1);
	else
	{
		for (const auto &x : m.data())
			if (x.prime() != 0)
				return FieldTraits<F>::one_like(x);
		throw DomainError("no p-adic context in matrix");
	}
}

/// Rank and a nullspace basis: one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
template <class F>
RankNullspace<F> rank_nullspace(Matrix<F> m)
{
	RankNullspace<F> out;
	out.pivot_columns = row_reduce(m, &out.precision_limited);
	out.rank = out.pivot_columns.size();
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto c : out.pivot_columns)
		is_pivot[c] = true;
	for (std::size_t f = 0; f < m.cols(); ++f)
	{
		if (is_pivot[f])
			continue;
		std::vector<F> v(m.cols());
		v[f] = reference_one(m);
		for (std::size_t r = 0; r < out.rank; ++r)
			v[out.pivot_columns[r]] = -m(r, f);
		out.nullspace.push_back(std::move(v));
	}
	return out;
}

template <class F>
std::size_t rank(const Matrix<F> &m)
{
	Matrix<F> copy = m;
	return row_reduce(copy).size();
}

/// A particular solution of A x = b (free variables set to zero), or empty
/// when the system is inconsistent.
inline std::optional<std::vector<Rational>> solve(const Matrix<Rational> &a, std::span<const Rational> b)
{
	if (b.size() != a.rows())
		throw DomainError("right-hand side has wrong length");
	Matrix<Rational> aug(a.rows(), a.cols() + 1);
	aug.set_block(0, 0, a);
	for (std::size_t i = 0; i < a.rows(); ++i)
		aug(i, a.cols()) = b[i];
	auto pivots = row_reduce(aug);
	if (!pivots.empty() && pivots.back() == a.cols())
		return std::nullopt;
	std::vector<Rational> x(a.cols());
	for (std::size_t r = 0; r < pivots.size(); ++r)
		x[pivots[r]] = aug(r, a.cols());
	return x;
}

inline Rational determinant(Matrix<Rational> m)
{
	if (!m.is_square())
		throw DomainError("determinant of a non-square matrix");
	Rational det(1);
	std::size_t n = m.rows();
	for (std::size_t c = 0; c < n; ++c)
	{
		std::size_t p = c;
		while (p < n && m(p, c).is_zero())
			++p;
		if (p == n)
			return Rational(0);
		if (p != c)
		{
			for (std::size_t j = 0; j < n; ++j)
				std::swap(m(p, j), m(c, j));
			det = -det;
		}
		det *= m(c, c);
		Rational inv = m(c, c).inverse();
		for (std::size_t i = c + 1; i < n; ++i)
		{
			if (m(i, c).is_zero())
				continue;
			Rational f = m(i, c) * inv;
			for (std::size_t j = c; j < n; ++j)
				m(i, j) -= f * m(c, j);
		}
	}
	return det;
}

inline Matrix<Rational> inverse(const Matrix<Rational> &m)
{
	if (!m.is_square())
		throw NotInvertible("inverse of a non-square matrix");
	std::size_t n = m.rows();
	Matrix<Rational> aug(n, 2 * n);
	aug.set_block(0, 0, m);
	aug.set_block(0, n, Matrix<Rational>::identity(n));
	auto pivots = row_reduce(aug);
	if (pivots.size() < n || pivots[n - 1] != n - 1)
		throw NotInvertible("matrix is singular");
	return aug.block(0, n, n, n);
}

} // namespace propfox
