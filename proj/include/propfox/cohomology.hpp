#pragma once

#include "propfox/errors.hpp"
#include "propfox/extensions.hpp"
#include "propfox/fitting.hpp"
#include "propfox/fox.hpp"
#include "propfox/matrix.hpp"
#include "propfox/representation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace propfox {

/// Vertical stack of rho(g_i) - I, an (n * dim) x dim matrix.
inline Matrix<Rational> coboundary_matrix(const ScalarRep &rho)
{
	std::size_t l = rho.dim;
	Matrix<Rational> m(rho.num_generators() * l, l);
	auto id = rho.identity();
	for (std::size_t i = 0; i < rho.num_generators(); ++i)
		m.set_block(i * l, 0, rho.images[i] - id);
	return m;
}

struct TheoremAudit
{
	bool delta_zero = false;
	/// Status of "zero of Delta implies H^1 != 0".
	std::string zero_implies_h1;
	/// Status of "no fixed vector and H^1 != 0 implies zero of Delta".
	std::string h1_implies_zero;
	std::string verdict;
};

struct CohomologyReport
{
	std::size_t dim = 0;
	std::size_t z1_dim = 0;
	std::size_t b1_dim = 0;
	std::size_t h1_dim = 0;
	std::size_t fixed_space_dim = 0;
	std::vector<std::vector<Rational>> fixed_space;
	LaurentPoly delta;
	Rational delta_value_at_a;
	TheoremAudit audit;
};

inline TheoremAudit audit_implications(bool delta_zero, std::size_t h1, std::size_t fixed_dim)
{
	TheoremAudit a;
	a.delta_zero = delta_zero;
	if (delta_zero)
	{
		if (h1 == 0)
			throw TheoremViolation("a is a zero of Delta but H^1 vanishes");
		a.zero_implies_h1 = "holds";
	}
	else
		a.zero_implies_h1 = "not triggered";
	if (fixed_dim != 0)
		a.h1_implies_zero = "hypothesis violated, not applicable";
	else if (h1 != 0)
	{
		if (!delta_zero)
			throw TheoremViolation("no fixed vector and H^1 != 0 but a is not a zero of Delta");
		a.h1_implies_zero = "holds";
	}
	else
		a.h1_implies_zero = "not triggered";
	a.verdict = (fixed_dim != 0 && h1 != 0 && !delta_zero) ? "hypothesis violated, not applicable" : "consistent";
	return a;
}

/// Z^1, B^1, H^1 of the local system g_i -> a^{e_i} phi(g_i), with the
/// value of Delta_dim at a and the implication audit.
inline CohomologyReport h1_report(const Presentation &pres, const Representation &phi, const Rational &a)
{
	CohomologyReport rep;
	rep.dim = phi.dim;
	auto rho = specialize(phi, pres, a);
	rep.z1_dim = cocycle_space(pres, phi, a).dimension();
	auto cob = rank_nullspace(coboundary_matrix(rho));
	rep.b1_dim = cob.rank;
	rep.fixed_space = cob.nullspace;
	rep.fixed_space_dim = cob.nullspace.size();
	if (rep.z1_dim < rep.b1_dim)
		throw InternalInconsistency("B^1 is larger than Z^1");
	rep.h1_dim = rep.z1_dim - rep.b1_dim;
	auto q = alexander_matrix(pres, phi);
	long d = static_cast<long>(phi.dim);
	rep.delta = fitting_delta(q, d).delta;
	rep.delta_value_at_a = eval_at(rep.delta, a);
	bool zero = is_zero_of_delta(q, rep.delta, d, a);
	rep.audit = audit_implications(zero, rep.h1_dim, rep.fixed_space_dim);
	return rep;
}

inline TheoremAudit theorem_audit(const Presentation &pres, const Representation &phi, const Rational &a)
{
	return h1_report(pres, phi, a).audit;
}

/// A v with beta(g_i) = (rho(g_i) - I) v for all i, if one exists. Throws
/// NotACocycle when beta does not satisfy the relators.
inline std::optional<std::vector<Rational>> is_coboundary(const Presentation &pres, const CrossedHom &beta,
                                                          const ScalarRep &rho)
{
	if (!verify_relators(pres, extension_rep(rho, beta)).ok)
		throw NotACocycle("cocycle relation fails on a relator");
	return solve(coboundary_matrix(rho), beta.stacked());
}

/// The coboundary beta_v(g) = (rho(g) - I) v.
inline CrossedHom coboundary_of(const ScalarRep &rho, std::span<const Rational> v)
{
	auto m = coboundary_matrix(rho);
	auto b = m * v;
	return CrossedHom::from_stacked(b, rho.dim);
}

/// Action of M on Sym^2 in the basis e1^2, e1 e2, e2^2.
inline Matrix<Rational> symmetric_square(const Matrix<Rational> &m)
{
	if (m.rows() != 2 || m.cols() != 2)
		throw DomainError("symmetric square needs a 2x2 matrix");
	const Rational &a = m(0, 0), &b = m(0, 1), &c = m(1, 0), &d = m(1, 1);
	Rational two(2);
	return Matrix<Rational>{{a * a, a * b, b * b}, {two * a * c, a * d + b * c, two * b * d}, {c * c, c * d, d * d}};
}

struct SymSquareResult
{
	ScalarRep rho3;
	ScalarRep local;
	CrossedHom beta;
	bool trivial = false;
	std::optional<std::vector<Rational>> witness;
};

/// Sym^2 of a 2-dimensional extension; its last column gives a cocycle for
/// the top-left 2x2 local system, and trivial says whether it is a
/// coboundary.
inline SymSquareResult symmetric_square_cocycle(const Presentation &pres, const ExtensionCandidate &ext2)
{
	if (ext2.dim != 2)
		throw DomainError("symmetric square cocycle needs a 2-dimensional extension");
	SymSquareResult out;
	std::vector<Matrix<Rational>> sym, local;
	out.beta.dim = 2;
	for (const auto &m : ext2.images())
	{
		auto s = symmetric_square(m);
		if (!(s(2, 0).is_zero() && s(2, 1).is_zero() && s(2, 2) == Rational(1)))
			throw DomainError("extension image does not fix the last basis vector");
		local.push_back(s.block(0, 0, 2, 2));
		out.beta.values.push_back({s(0, 2), s(1, 2)});
		sym.push_back(std::move(s));
	}
	out.rho3 = scalar_rep(sym);
	out.local = scalar_rep(local);
	out.witness = is_coboundary(pres, out.beta, out.local);
	out.trivial = out.witness.has_value();
	return out;
}

} // namespace propfox
