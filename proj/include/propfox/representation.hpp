#pragma once

#include "propfox/errors.hpp"
#include "propfox/laurent.hpp"
#include "propfox/matrix.hpp"
#include "propfox/presentation.hpp"
#include "propfox/rational.hpp"

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace propfox {

/// Homomorphism from the free group to GL(dim, Q), given on generators.
struct Representation
{
	std::size_t dim = 1;
	std::vector<Matrix<Rational>> images;

	static Representation trivial(std::size_t num_generators, std::size_t dim = 1)
	{
		Representation r;
		r.dim = dim;
		r.images.assign(num_generators, Matrix<Rational>::identity(dim));
		return r;
	}

	/// Throws NotInvertible when an image is singular or has the wrong shape.
	void check() const
	{
		for (std::size_t i = 0; i < images.size(); ++i)
		{
			if (images[i].rows() != dim || images[i].cols() != dim)
				throw DomainError("image of generator " + std::to_string(i + 1) + " has the wrong shape");
			if (determinant(images[i]).is_zero())
				throw NotInvertible("image of generator " + std::to_string(i + 1) + " is singular");
		}
	}
};

/// Generator images with precomputed inverses over a ring T. Used both for
/// the Laurent tensor representation and for its specializations.
template <class T>
struct MatrixRep
{
	std::size_t dim = 0;
	std::vector<Matrix<T>> images;
	std::vector<Matrix<T>> inverses;
	T one{};

	std::size_t num_generators() const { return images.size(); }
	Matrix<T> identity() const { return Matrix<T>::identity(dim, one); }
};

using TensorRep = MatrixRep<LaurentPoly>;
using ScalarRep = MatrixRep<Rational>;

/// Image of g_i is gamma^{e_i} * phi(g_i).
inline TensorRep tensor_with_alpha(const Representation &phi, const Presentation &pres)
{
	if (phi.images.size() != pres.num_generators())
		throw DomainError("representation does not match the number of generators");
	phi.check();
	TensorRep r;
	r.dim = phi.dim;
	r.one = LaurentPoly(Rational(1));
	for (std::size_t i = 0; i < phi.images.size(); ++i)
	{
		long e = pres.alpha[i];
		Matrix<Rational> inv = inverse(phi.images[i]);
		r.images.push_back(phi.images[i].map([&](const Rational &c) { return LaurentPoly::monomial(c, e); }));
		r.inverses.push_back(inv.map([&](const Rational &c) { return LaurentPoly::monomial(c, -e); }));
	}
	return r;
}

/// The representation g_i -> a^{e_i} * phi(g_i) over Q.
inline ScalarRep specialize(const Representation &phi, const Presentation &pres, const Rational &a)
{
	if (a.is_zero())
		throw DivisionByZero("evaluation point a = 0");
	if (phi.images.size() != pres.num_generators())
		throw DomainError("representation does not match the number of generators");
	ScalarRep r;
	r.dim = phi.dim;
	r.one = Rational(1);
	for (std::size_t i = 0; i < phi.images.size(); ++i)
	{
		Rational s = pow(a, pres.alpha[i]);
		r.images.push_back(s * phi.images[i]);
		r.inverses.push_back(inverse(r.images.back()));
	}
	return r;
}

/// A rep given directly by invertible rational matrices.
inline ScalarRep scalar_rep(const std::vector<Matrix<Rational>> &images)
{
	ScalarRep r;
	r.dim = images.empty() ? 0 : images.front().rows();
	r.one = Rational(1);
	r.images = images;
	for (const auto &m : images)
		r.inverses.push_back(inverse(m));
	return r;
}

inline Matrix<Rational> evaluate_at(const Matrix<LaurentPoly> &m, const Rational &a)
{
	return m.map([&](const LaurentPoly &f) { return eval_at(f, a); });
}

inline Matrix<PAdicApprox> evaluate_at(const Matrix<LaurentPoly> &m, const PAdicApprox &a)
{
	return m.map([&](const LaurentPoly &f) { return eval_at(f, a); });
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line)
{
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while (i < line.size())
	{
		while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
			++i;
		std::size_t start = i;
		while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
			++i;
		if (i > start)
			out.push_back(line.substr(start, i - start));
	}
	return out;
}

} // namespace detail

/// Parses a representation file against the generators of pres:
///   dim L
///   matrix g1
///   <L rows of L rationals>
inline Representation parse_representation(std::string_view text, const Presentation &pres)
{
	using K = ParseError::Kind;
	std::vector<std::pair<std::size_t, std::string>> lines;
	{
		std::size_t pos = 0, lineno = 0;
		while (pos <= text.size())
		{
			auto end = text.find('\n', pos);
			if (end == std::string_view::npos)
				end = text.size();
			++lineno;
			std::string_view l = text.substr(pos, end - pos);
			auto hash = l.find('#');
			if (hash != std::string_view::npos)
				l = l.substr(0, hash);
			if (!detail::split_ws(l).empty())
				lines.emplace_back(lineno, std::string(l));
			pos = end + 1;
		}
	}
	Representation rep;
	std::optional<std::size_t> dim;
	std::vector<std::optional<Matrix<Rational>>> seen(pres.num_generators());
	std::size_t k = 0;
	while (k < lines.size())
	{
		auto [lineno, line] = lines[k];
		auto tok = detail::split_ws(line);
		if (tok[0] == "dim")
		{
			if (dim)
				throw ParseError(K::Semantic, lineno, 1, "duplicate 'dim' line");
			long d = 0;
			if (tok.size() != 2 || !(std::istringstream(std::string(tok[1])) >> d) || d < 1)
				throw ParseError(K::Syntax, lineno, 1, "expected 'dim <positive integer>'");
			dim = static_cast<std::size_t>(d);
			++k;
			continue;
		}
		if (tok[0] != "matrix")
			throw ParseError(K::Syntax, lineno, 1, "unknown keyword '" + std::string(tok[0]) + "'");
		if (!dim)
			throw ParseError(K::Semantic, lineno, 1, "'dim' must precede 'matrix'");
		if (tok.size() != 2)
			throw ParseError(K::Syntax, lineno, 1, "expected 'matrix <generator>'");
		auto g = pres.generator_index(tok[1]);
		if (!g)
			throw ParseError(K::UnknownGenerator, lineno, 8, "unknown generator '" + std::string(tok[1]) + "'");
		if (seen[*g])
			throw ParseError(K::Semantic, lineno, 1, "duplicate matrix for '" + std::string(tok[1]) + "'");
		Matrix<Rational> m(*dim, *dim);
		++k;
		for (std::size_t r = 0; r < *dim; ++r, ++k)
		{
			if (k >= lines.size())
				throw ParseError(K::Syntax, lineno, 1, "matrix for '" + std::string(tok[1]) + "' is missing rows");
			auto entries = detail::split_ws(lines[k].second);
			if (entries.size() != *dim)
				throw ParseError(K::Syntax, lines[k].first, 1, "expected " + std::to_string(*dim) + " entries in matrix row");
			for (std::size_t c = 0; c < *dim; ++c)
			{
				auto q = try_parse_rational(entries[c]);
				if (!q)
					throw ParseError(K::Syntax, lines[k].first, 1, "invalid rational '" + std::string(entries[c]) + "'");
				m(r, c) = *q;
			}
		}
		if (determinant(m).is_zero())
			throw ParseError(K::Semantic, lineno, 1, "matrix for '" + std::string(tok[1]) + "' is singular");
		seen[*g] = std::move(m);
	}
	if (!dim)
		throw ParseError(K::Semantic, 0, 0, "missing required 'dim' line");
	rep.dim = *dim;
	for (std::size_t i = 0; i < seen.size(); ++i)
	{
		if (!seen[i])
			throw ParseError(K::Semantic, 0, 0, "no matrix given for generator '" + pres.generators[i] + "'");
		rep.images.push_back(std::move(*seen[i]));
	}
	return rep;
}

inline std::string to_text(const Representation &rep, const Presentation &pres)
{
	std::ostringstream os;
	os << "dim " << rep.dim << "\n";
	for (std::size_t i = 0; i < rep.images.size(); ++i)
	{
		os << "matrix " << pres.generators[i] << "\n";
		for (std::size_t r = 0; r < rep.dim; ++r)
		{
			for (std::size_t c = 0; c < rep.dim; ++c)
				os << (c ? " " : "") << rep.images[i](r, c).to_string();
			os << "\n";
		}
	}
	return os.str();
}

} // namespace propfox
