#pragma once

#include "propfox/errors.hpp"
#include "propfox/laurent.hpp"
#include "propfox/padic.hpp"
#include "propfox/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace propfox {

struct RationalRoot
{
	Rational value;
	long multiplicity = 1;

	friend bool operator==(const RationalRoot &, const RationalRoot &) = default;
};

struct PAdicRoot
{
	/// Representative in [0, p^precision).
	Integer residue;
	long precision = 0;

	friend bool operator==(const PAdicRoot &, const PAdicRoot &) = default;
};

struct ZeroReport
{
	long prime = 0;
	bool identically_zero = false;
	std::vector<RationalRoot> rational_roots;
	std::vector<PAdicRoot> padic_roots;
	/// Residues mod p of repeated roots mod p that did not lift to Z_p.
	std::vector<Integer> obstructions;
};

namespace detail {

/// Dense integer coefficients (ascending) of the primitive integer
/// polynomial associated to f: g-powers removed, denominators cleared,
/// content divided out, positive leading coefficient.
inline std::vector<Integer> primitive_integer_coefficients(const LaurentPoly &f)
{
	LaurentPoly g = f.shifted(-f.low_degree());
	Integer den = 1;
	for (const auto &[e, c] : g.terms())
		mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
	std::vector<Integer> out(static_cast<std::size_t>(g.high_degree()) + 1, Integer(0));
	Integer content = 0;
	for (const auto &[e, c] : g.terms())
	{
		Integer v = c.numerator() * (den / c.denominator());
		out[static_cast<std::size_t>(e)] = v;
		mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
	}
	if (out.back() < 0)
		content = -content;
	for (auto &c : out)
		c /= content;
	return out;
}

inline Integer eval_poly(const std::vector<Integer> &c, const Integer &x)
{
	Integer r = 0;
	for (std::size_t k = c.size(); k-- > 0;)
		r = r * x + c[k];
	return r;
}

inline std::vector<Integer> derivative_coefficients(const std::vector<Integer> &c)
{
	std::vector<Integer> d;
	for (std::size_t k = 1; k < c.size(); ++k)
		d.push_back(c[k] * static_cast<unsigned long>(k));
	return d;
}

/// Positive divisors of |n| (n != 0) by trial division.
inline std::vector<Integer> divisors(Integer n)
{
	n = abs(n);
	std::vector<std::pair<Integer, unsigned>> factors;
	for (Integer q = 2; q * q <= n; ++q)
	{
		unsigned e = 0;
		while (n % q == 0)
		{
			n /= q;
			++e;
		}
		if (e)
			factors.emplace_back(q, e);
	}
	if (n > 1)
		factors.emplace_back(n, 1);
	std::vector<Integer> out{1};
	for (const auto &[q, e] : factors)
	{
		std::size_t base = out.size();
		Integer pw = 1;
		for (unsigned k = 0; k < e; ++k)
		{
			pw *= q;
			for (std::size_t t = 0; t < base; ++t)
				out.push_back(out[t] * pw);
		}
	}
	std::sort(out.begin(), out.end());
	return out;
}

inline long int_valuation(const Integer &x, long p)
{
	if (x == 0)
		return PAdicApprox::kInfinite;
	return valuation(x, Integer(p));
}

inline Integer mod_pos(const Integer &x, const Integer &m)
{
	Integer r;
	mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
	return r;
}

} // namespace detail

/// Rational roots of f with multiplicities, in increasing order.
inline std::vector<RationalRoot> rational_roots(const LaurentPoly &f)
{
	if (f.is_zero())
		throw IdenticallyZero();
	auto c = detail::primitive_integer_coefficients(f);
	if (c.size() <= 1)
		return {};
	LaurentPoly rest = f.shifted(-f.low_degree());
	std::vector<RationalRoot> out;
	auto num = detail::divisors(c.front());
	auto den = detail::divisors(c.back());
	std::set<Rational> candidates;
	for (const auto &u : num)
		for (const auto &v : den)
		{
			candidates.insert(Rational(u, v));
			candidates.insert(Rational(-u, v));
		}
	for (const auto &r : candidates)
	{
		long mult = 0;
		LaurentPoly lin = LaurentPoly::gamma(1) - LaurentPoly(r);
		while (rest.high_degree() > 0 && eval_at(rest, r).is_zero())
		{
			rest = poly_divmod(rest, lin).first;
			++mult;
		}
		if (mult)
			out.push_back({r, mult});
	}
	return out;
}

namespace detail {

class RootSearch
{
public:
	RootSearch(std::vector<Integer> g, long p, long N, long depth_cap)
	    : g_(std::move(g)), dg_(derivative_coefficients(g_)), p_(p), N_(N), cap_(depth_cap)
	{
	}

	/// Roots of g in Z_p in the class r mod p; false if the depth cap was hit.
	bool search(const Integer &r, long k, std::vector<Integer> &roots)
	{
		Integer fr = eval_poly(g_, r);
		Integer dr = eval_poly(dg_, r);
		long vf = int_valuation(fr, p_);
		long vd = int_valuation(dr, p_);
		if (vd != PAdicApprox::kInfinite && k > vd && (vf == PAdicApprox::kInfinite || vf >= k + vd))
		{
			roots.push_back(lift(r, vd));
			return true;
		}
		if (k >= cap_)
			return false;
		Integer pk = PAdicApprox::power(p_, k);
		Integer pk1 = pk * p_;
		bool complete = true;
		for (long t = 0; t < p_; ++t)
		{
			Integer x = r + pk * t;
			if (mod_pos(eval_poly(g_, x), pk1) == 0)
				complete = search(x, k + 1, roots) && complete;
		}
		return complete;
	}

private:
	/// Newton iteration from r until the unique nearby root is known mod p^N.
	Integer lift(Integer x, long vd)
	{
		Integer mod = PAdicApprox::power(p_, N_ + 2 * vd + 2);
		Integer pvd = PAdicApprox::power(p_, vd);
		for (int iter = 0; iter < 256; ++iter)
		{
			Integer fx = eval_poly(g_, x);
			if (fx == 0 || int_valuation(fx, p_) >= N_ + vd)
				break;
			Integer u = eval_poly(dg_, x) / pvd;
			Integer uinv;
			mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
			x = mod_pos(x - (fx / pvd) * uinv, mod);
		}
		return mod_pos(x, PAdicApprox::power(p_, N_));
	}

	std::vector<Integer> g_;
	std::vector<Integer> dg_;
	long p_;
	long N_;
	long cap_;
};

} // namespace detail

/// Roots of f in Z_p modulo p^N. The search runs on the squarefree part of
/// f; a root is accepted once it is isolated in a residue disc by the
/// strong Hensel criterion, and then lifted by Newton iteration. A class
/// r mod p where f and f' both vanish mod p but no root was isolated is
/// reported as an obstruction.
inline std::pair<std::vector<PAdicRoot>, std::vector<Integer>> hensel_roots(const LaurentPoly &f, long p, long N)
{
	if (f.is_zero())
		throw IdenticallyZero();
	if (!is_prime(p))
		throw DomainError(std::to_string(p) + " is not a prime");
	if (N < 1)
		throw DomainError("precision must be >= 1");
	LaurentPoly base = f.shifted(-f.low_degree());
	LaurentPoly sqfree = exact_divide(base, gcd(base, derivative(base)));
	auto g = detail::primitive_integer_coefficients(sqfree);
	auto full = detail::primitive_integer_coefficients(base);
	auto dfull = detail::derivative_coefficients(full);
	std::vector<PAdicRoot> roots;
	std::vector<Integer> obstructions;
	if (g.size() <= 1)
		return {roots, obstructions};
	Integer P(p);
	detail::RootSearch search(g, p, N, 4 * N + 32);
	for (long r = 0; r < p; ++r)
	{
		Integer x(r);
		if (detail::mod_pos(detail::eval_poly(g, x), P) != 0)
			continue;
		std::vector<Integer> found;
		bool complete = search.search(x, 1, found);
		for (const auto &z : found)
			roots.push_back({z, N});
		bool repeated = detail::mod_pos(detail::eval_poly(full, x), P) == 0 &&
		                detail::mod_pos(detail::eval_poly(dfull, x), P) == 0;
		if (!complete || (repeated && found.empty()))
			obstructions.push_back(x);
	}
	std::sort(roots.begin(), roots.end(), [](const PAdicRoot &a, const PAdicRoot &b) { return a.residue < b.residue; });
	return {roots, obstructions};
}

/// Rational and p-adic roots of f, unfiltered.
inline ZeroReport find_zeros(const LaurentPoly &f, long p, long N)
{
	ZeroReport rep;
	rep.prime = p;
	if (f.is_zero())
	{
		rep.identically_zero = true;
		return rep;
	}
	rep.rational_roots = rational_roots(f);
	std::tie(rep.padic_roots, rep.obstructions) = hensel_roots(f, p, N);
	return rep;
}

/// Keeps the roots a with |a - 1|_p < 1.
inline ZeroReport filter_unit_ball(const ZeroReport &report, long p)
{
	ZeroReport out = report;
	out.rational_roots.clear();
	out.padic_roots.clear();
	out.obstructions.clear();
	for (const auto &r : report.rational_roots)
		if (unit_ball_check(r.value, p))
			out.rational_roots.push_back(r);
	Integer P(p);
	for (const auto &r : report.padic_roots)
		if (detail::mod_pos(r.residue, P) == 1)
			out.padic_roots.push_back(r);
	for (const auto &r : report.obstructions)
		if (r == 1)
			out.obstructions.push_back(r);
	return out;
}

} // namespace propfox
