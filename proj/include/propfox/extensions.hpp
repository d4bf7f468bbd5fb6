#pragma once

#include "propfox/errors.hpp"
#include "propfox/fitting.hpp"
#include "propfox/fox.hpp"
#include "propfox/matrix.hpp"
#include "propfox/parallel.hpp"
#include "propfox/presentation.hpp"
#include "propfox/representation.hpp"

#include <cstddef>
#include <vector>

namespace propfox {

/// A crossed homomorphism given by its values on the generators.
struct CrossedHom
{
	std::size_t dim = 0;
	std::vector<std::vector<Rational>> values;

	/// Values on g_1, ..., g_n concatenated.
	std::vector<Rational> stacked() const
	{
		std::vector<Rational> b;
		for (const auto &v : values)
			b.insert(b.end(), v.begin(), v.end());
		return b;
	}

	static CrossedHom from_stacked(std::span<const Rational> b, std::size_t dim)
	{
		if (dim == 0 || b.size() % dim != 0)
			throw DomainError("stacked cocycle length is not a multiple of the dimension");
		CrossedHom h;
		h.dim = dim;
		for (std::size_t k = 0; k < b.size(); k += dim)
			h.values.emplace_back(b.begin() + k, b.begin() + k + dim);
		return h;
	}

	static CrossedHom zero(std::size_t num_generators, std::size_t dim)
	{
		CrossedHom h;
		h.dim = dim;
		h.values.assign(num_generators, std::vector<Rational>(dim));
		return h;
	}

	friend bool operator==(const CrossedHom &, const CrossedHom &) = default;
};

struct CocycleSpace
{
	Matrix<Rational> specialized;
	std::size_t rank = 0;
	std::vector<CrossedHom> basis;

	std::size_t dimension() const { return basis.size(); }
};

namespace detail {

inline void require_valid(const Presentation &pres)
{
	auto report = validate_presentation(pres);
	if (!report.ok())
		throw HypothesisViolated(report.failures.front());
}

} // namespace detail

/// Solutions b of Q(a) b = 0, one basis vector per free column.
inline CocycleSpace cocycle_space(const Presentation &pres, const Representation &phi, const Rational &a)
{
	detail::require_valid(pres);
	CocycleSpace out;
	out.specialized = alexander_matrix(pres, specialize(phi, pres, a));
	auto rn = rank_nullspace(out.specialized);
	out.rank = rn.rank;
	for (const auto &v : rn.nullspace)
		out.basis.push_back(CrossedHom::from_stacked(v, phi.dim));
	return out;
}

/// The rep g -> [[rho(g), beta(g)], [0, 1]] of dimension rho.dim + 1.
inline ScalarRep extension_rep(const ScalarRep &rho, const CrossedHom &beta)
{
	if (beta.dim != rho.dim || beta.values.size() != rho.num_generators())
		throw DomainError("cocycle does not match the representation");
	std::vector<Matrix<Rational>> images;
	std::size_t l = rho.dim;
	for (std::size_t i = 0; i < rho.num_generators(); ++i)
	{
		Matrix<Rational> m(l + 1, l + 1);
		m.set_block(0, 0, rho.images[i]);
		for (std::size_t r = 0; r < l; ++r)
			m(r, l) = beta.values[i][r];
		m(l, l) = Rational(1);
		images.push_back(std::move(m));
	}
	return scalar_rep(images);
}

struct ExtensionCandidate
{
	std::size_t dim = 0;
	Rational a;
	CrossedHom beta;
	ScalarRep rep;

	const std::vector<Matrix<Rational>> &images() const { return rep.images; }
};

inline ExtensionCandidate build_extension(const Presentation &pres, const Representation &phi, const Rational &a,
                                          const CrossedHom &beta)
{
	if (beta.dim != phi.dim)
		throw DomainError("cocycle dimension differs from the representation dimension");
	ExtensionCandidate c;
	c.dim = phi.dim + 1;
	c.a = a;
	c.beta = beta;
	c.rep = extension_rep(specialize(phi, pres, a), beta);
	return c;
}

struct RelatorCheck
{
	Matrix<Rational> image;
	bool ok = false;
};

struct FactorReport
{
	std::vector<RelatorCheck> relators;
	bool ok = true;
};

/// Evaluates every relator under rep and compares with the identity.
inline FactorReport verify_relators(const Presentation &pres, const ScalarRep &rep)
{
	FactorReport out;
	out.relators.resize(pres.num_relators());
	auto id = rep.identity();
	parallel_for(pres.num_relators(), [&](std::size_t j) {
		auto img = evaluate_word(rep, pres.relators[j].word());
		out.relators[j].ok = img == id;
		out.relators[j].image = std::move(img);
	});
	for (const auto &r : out.relators)
		out.ok = out.ok && r.ok;
	return out;
}

inline FactorReport verify_factors(const Presentation &pres, const ExtensionCandidate &cand)
{
	return verify_relators(pres, cand.rep);
}

/// beta(w) from beta(uv) = beta(u) + rho(u) beta(v).
inline std::vector<Rational> evaluate_cocycle(const CrossedHom &beta, const ScalarRep &rho, const Word &w)
{
	std::vector<Rational> acc(rho.dim);
	Matrix<Rational> prefix = rho.identity();
	for (const auto &s : w.syllables())
	{
		auto g = s.generator;
		Matrix<Rational> step = prefix * geometric_sum(rho.images.at(g), rho.inverses.at(g), s.exponent, rho.one);
		auto contrib = step * beta.values.at(g);
		for (std::size_t r = 0; r < rho.dim; ++r)
			acc[r] += contrib[r];
		prefix = prefix * generator_power(rho, g, s.exponent);
	}
	return acc;
}

struct ExtensionCount
{
	std::size_t dim = 0;
	bool meets_k = false;
	bool delta_zero = false;
};

/// Checks that the cocycle space has dimension >= k exactly when a is a
/// zero of Delta_{k-1}; k must be phi.dim + 1.
inline ExtensionCount extension_count_criterion(const Presentation &pres, const Representation &phi, const Rational &a,
                                                std::size_t k)
{
	if (k != phi.dim + 1)
		throw DomainError("k must be the representation dimension plus one");
	ExtensionCount out;
	out.dim = cocycle_space(pres, phi, a).dimension();
	out.meets_k = out.dim >= k;
	auto q = alexander_matrix(pres, phi);
	out.delta_zero = is_zero_of_delta(q, static_cast<long>(k) - 1, a);
	if (out.meets_k != out.delta_zero)
		throw InternalInconsistency("cocycle dimension " + std::to_string(out.dim) + " disagrees with Delta_" +
		                            std::to_string(k - 1) + " at " + a.to_string());
	return out;
}

} // namespace propfox
