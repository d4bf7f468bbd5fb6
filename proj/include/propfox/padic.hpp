#pragma once

#include "propfox/errors.hpp"
#include "propfox/rational.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <ostream>
#include <string>

namespace propfox {

/// Finite-precision model of an element of Q_p: u * p^v known modulo
/// p^(v+N), with u a unit in [1, p^N).
///
/// Precision is tracked absolutely and pessimistically: sums keep the
/// smaller absolute precision, products the smaller relative precision.
/// A value whose known digits all vanish is "indistinguishable from zero"
/// and carries only its absolute precision O(p^A). The default-constructed
/// value is the exact zero (A = infinity), which is the additive identity
/// for every prime.
class PAdicApprox
{
public:
	static constexpr long kInfinite = LONG_MAX;

	PAdicApprox() = default;

	/// The element q of Q_p with N digits of relative precision. q = 0 gives
	/// O(p^N).
	static PAdicApprox from_rational(const Rational &q, long p, long N)
	{
		check_prime_precision(p, N);
		if (q.is_zero())
			return zero(p, N);
		Integer pp(p);
		Integer num = q.numerator(), den = q.denominator();
		long vn = remove_factor(num, pp);
		long vd = remove_factor(den, pp);
		Integer mod = power(p, N);
		Integer dinv;
		mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
		Integer u = num * dinv;
		u = mod_pos(u, mod);
		return make(p, vn - vd, N, u);
	}

	static PAdicApprox from_integer(const Integer &n, long p, long N) { return from_rational(Rational(n), p, N); }

	/// The class of r modulo p^A (absolute precision A).
	static PAdicApprox from_residue(const Integer &r, long p, long A)
	{
		check_prime_precision(p, A);
		Integer mod = power(p, A);
		Integer x = mod_pos(r, mod);
		if (x == 0)
			return zero(p, A);
		Integer pp(p);
		long t = remove_factor(x, pp);
		return make(p, t, A - t, x);
	}

	/// O(p^A).
	static PAdicApprox zero(long p, long A)
	{
		PAdicApprox z;
		z.p_ = p;
		z.abs_ = A;
		return z;
	}

	long prime() const { return p_; }
	bool is_exact_zero() const { return abs_ == kInfinite; }

	/// True when every known digit is zero.
	bool is_zero() const { return v_ == kInfinite; }

	/// Empty when indistinguishable from zero.
	std::optional<long> valuation() const
	{
		if (is_zero())
			return std::nullopt;
		return v_;
	}

	long relative_precision() const { return is_zero() ? 0 : n_; }
	long absolute_precision() const { return abs_; }
	const Integer &unit() const { return u_; }

	/// Representative in [0, p^k) of the value modulo p^k. Requires
	/// nonnegative valuation and k not exceeding the absolute precision.
	Integer residue(long k) const
	{
		if (k > abs_)
			throw DomainError("residue requested beyond known precision");
		if (k <= 0 || is_zero())
			return 0;
		if (v_ < 0)
			throw DomainError("residue of an element with negative valuation");
		Integer mod = power(p_, k);
		return mod_pos(u_ * power(p_, v_), mod);
	}

	PAdicApprox operator-() const
	{
		if (is_zero())
			return *this;
		PAdicApprox r = *this;
		Integer mod = power(p_, n_);
		r.u_ = mod_pos(-u_, mod);
		return r;
	}

	friend PAdicApprox operator+(const PAdicApprox &a, const PAdicApprox &b) { return add(a, b); }
	friend PAdicApprox operator-(const PAdicApprox &a, const PAdicApprox &b) { return add(a, -b); }

	friend PAdicApprox operator*(const PAdicApprox &a, const PAdicApprox &b)
	{
		long p = common_prime(a, b);
		if (a.is_exact_zero() || b.is_exact_zero())
			return PAdicApprox();
		if (a.is_zero() && b.is_zero())
			return zero(p, sat_add(a.abs_, b.abs_));
		if (a.is_zero())
			return zero(p, sat_add(a.abs_, b.v_));
		if (b.is_zero())
			return zero(p, sat_add(b.abs_, a.v_));
		long n = std::min(a.n_, b.n_);
		Integer mod = power(p, n);
		return make(p, a.v_ + b.v_, n, mod_pos(a.u_ * b.u_, mod));
	}

	PAdicApprox inverse() const
	{
		if (is_zero())
			throw DivisionByZero();
		Integer mod = power(p_, n_);
		Integer inv;
		mpz_invert(inv.get_mpz_t(), u_.get_mpz_t(), mod.get_mpz_t());
		return make(p_, -v_, n_, inv);
	}

	friend PAdicApprox operator/(const PAdicApprox &a, const PAdicApprox &b) { return a * b.inverse(); }

	PAdicApprox &operator+=(const PAdicApprox &o) { return *this = *this + o; }
	PAdicApprox &operator-=(const PAdicApprox &o) { return *this = *this - o; }
	PAdicApprox &operator*=(const PAdicApprox &o) { return *this = *this * o; }
	PAdicApprox &operator/=(const PAdicApprox &o) { return *this = *this / o; }

	/// Equal as approximations: same prime, same precision, same digits.
	friend bool operator==(const PAdicApprox &a, const PAdicApprox &b)
	{
		return a.p_ == b.p_ && a.v_ == b.v_ && a.n_ == b.n_ && a.abs_ == b.abs_ && a.u_ == b.u_;
	}
	friend bool operator!=(const PAdicApprox &a, const PAdicApprox &b) { return !(a == b); }

	std::string to_string() const
	{
		if (is_exact_zero())
			return "0";
		std::string tail = "O(" + std::to_string(p_) + "^" + std::to_string(abs_) + ")";
		if (is_zero())
			return tail;
		std::string head = u_.get_str();
		if (v_ != 0)
			head += "*" + std::to_string(p_) + "^" + std::to_string(v_);
		return head + " + " + tail;
	}

	friend std::ostream &operator<<(std::ostream &os, const PAdicApprox &x) { return os << x.to_string(); }

	static Integer power(long p, long e)
	{
		Integer r;
		mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
		return r;
	}

private:
	static void check_prime_precision(long p, long N)
	{
		if (p < 2)
			throw DomainError("p-adic prime must be >= 2");
		if (N < 1)
			throw DomainError("p-adic precision must be >= 1");
	}

	static Integer mod_pos(const Integer &x, const Integer &m)
	{
		Integer r;
		mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
		return r;
	}

	static long remove_factor(Integer &x, const Integer &p)
	{
		return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
	}

	static long sat_add(long a, long b)
	{
		if (a == kInfinite || b == kInfinite)
			return kInfinite;
		return a + b;
	}

	static long common_prime(const PAdicApprox &a, const PAdicApprox &b)
	{
		if (a.p_ == 0)
			return b.p_;
		if (b.p_ == 0 || a.p_ == b.p_)
			return a.p_;
		throw DomainError("p-adic operands over different primes");
	}

	static PAdicApprox make(long p, long v, long n, const Integer &u)
	{
		PAdicApprox r;
		r.p_ = p;
		r.v_ = v;
		r.n_ = n;
		r.abs_ = v + n;
		r.u_ = u;
		return r;
	}

	static PAdicApprox add(const PAdicApprox &a, const PAdicApprox &b)
	{
		long p = common_prime(a, b);
		long A = std::min(a.abs_, b.abs_);
		if (A == kInfinite)
			return PAdicApprox();
		long vm = std::min(a.v_, b.v_);
		if (vm == kInfinite || vm >= A)
			return zero(p, A);
		long m = A - vm;
		Integer mod = power(p, m);
		Integer x = 0;
		if (!a.is_zero())
			x += a.u_ * power(p, a.v_ - vm);
		if (!b.is_zero())
			x += b.u_ * power(p, b.v_ - vm);
		x = mod_pos(x, mod);
		if (x == 0)
			return zero(p, A);
		Integer pp(p);
		long t = remove_factor(x, pp);
		long v = vm + t;
		long n = A - v;
		return make(p, v, n, mod_pos(x, power(p, n)));
	}

	long p_ = 0;
	long v_ = kInfinite;
	long n_ = 0;
	long abs_ = kInfinite;
	Integer u_ = 0;
};

} // namespace propfox
