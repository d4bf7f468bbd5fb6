#pragma once

// One function per subcommand. Each returns the JSON results object and
// the human-readable text; the caller owns I/O and exit codes.

#include "json_out.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace propfox::cli {

struct Output
{
	Json results = Json::object();
	std::string text;
	/// Nonzero for a reported failure that is not an exception (validate).
	int exit_code = 0;
};

inline Output validate_cmd(const Presentation &pres)
{
	auto report = validate_presentation(pres);
	Output out;
	out.results = Json{{"ok", report.ok()},
	                   {"prime", pres.prime},
	                   {"generators", pres.generators},
	                   {"alpha", pres.alpha},
	                   {"alpha_constant", report.alpha_constant},
	                   {"relator_degrees", report.relator_degrees},
	                   {"failures", report.failures}};
	std::ostringstream os;
	os << "prime " << pres.prime << ", " << pres.num_generators() << " generators, " << pres.num_relators()
	   << " relators\n";
	for (std::size_t j = 0; j < report.relator_degrees.size(); ++j)
		os << "relator " << j + 1 << ": total degree " << report.relator_degrees[j] << "\n";
	if (report.ok())
		os << "OK\n";
	else
	{
		for (const auto &f : report.failures)
			os << "FAIL: " << f << "\n";
		out.exit_code = 3;
	}
	out.text = os.str();
	return out;
}

inline Output matrix_cmd(const Presentation &pres, const Representation &phi, bool allow_invalid)
{
	auto q = alexander_matrix(pres, phi, allow_invalid);
	Output out;
	out.results = Json{{"rows", q.rows()}, {"cols", q.cols()}, {"dim", phi.dim}, {"entries", to_json(q)}};
	std::ostringstream os;
	os << "Alexander matrix, " << q.rows() << " x " << q.cols() << "\n" << matrix_text(q);
	out.text = os.str();
	return out;
}

inline Json fitting_json(const FittingResult &r)
{
	return Json{{"d", r.d},
	            {"delta", to_json(r.delta)},
	            {"mu_content", r.mu_content ? Json(*r.mu_content) : Json(nullptr)},
	            {"minor_count", r.minor_count}};
}

inline std::string fitting_text(const std::string &name, const FittingResult &r)
{
	std::ostringstream os;
	os << name << "_" << r.d << " = " << r.delta.to_string() << "\n";
	if (r.mu_content)
		os << "mu_content = " << *r.mu_content << "\n";
	os << "minors examined: " << r.minor_count << "\n";
	return os.str();
}

inline Output delta_cmd(const Presentation &pres, const Representation &phi, long d, bool allow_invalid)
{
	FittingOptions opts;
	opts.prime = pres.prime;
	auto r = fitting_delta(alexander_matrix(pres, phi, allow_invalid), d, opts);
	return {fitting_json(r), fitting_text("Delta", r), 0};
}

inline Output iwasawa_cmd(const Presentation &pres, long d)
{
	FittingOptions opts;
	opts.prime = pres.prime;
	auto r = iwasawa_delta(pres, d, opts);
	return {fitting_json(r), fitting_text("Delta", r), 0};
}

inline Output zeros_cmd(const Presentation &pres, const Representation &phi, long d, long prec, bool allow_invalid)
{
	long p = pres.prime;
	auto delta = fitting_delta(alexander_matrix(pres, phi, allow_invalid), d).delta;
	auto all = find_zeros(delta, p, prec);
	auto ball = filter_unit_ball(all, p);
	Output out;
	Json rational = Json::array(), padic = Json::array(), obstructions = Json::array();
	std::ostringstream os;
	os << "Delta_" << d << " = " << delta.to_string() << "\n";
	if (all.identically_zero)
		os << "Delta is identically zero: every a with |a - 1|_" << p << " < 1 is a zero\n";
	for (const auto &r : all.rational_roots)
	{
		bool keep = unit_ball_check(r.value, p);
		rational.push_back(Json{{"value", to_json(r.value)}, {"multiplicity", r.multiplicity}, {"unit_ball", keep}});
		os << "rational root " << r.value << " (multiplicity " << r.multiplicity << ")"
		   << (keep ? ", in the unit ball" : ", outside the unit ball") << "\n";
	}
	for (const auto &r : all.padic_roots)
	{
		bool keep = detail::mod_pos(r.residue, Integer(p)) == 1;
		padic.push_back(Json{{"residue", to_json(r.residue)}, {"precision", r.precision}, {"unit_ball", keep}});
		os << p << "-adic root " << r.residue.get_str() << " mod " << p << "^" << r.precision
		   << (keep ? ", in the unit ball" : ", outside the unit ball") << "\n";
	}
	for (const auto &r : all.obstructions)
	{
		obstructions.push_back(Json{{"residue", to_json(r)}, {"unit_ball", r == 1}});
		os << "obstruction: no root isolated in the class " << r.get_str() << " mod " << p << "\n";
	}
	os << "unit ball: " << ball.rational_roots.size() << " rational, " << ball.padic_roots.size() << " " << p
	   << "-adic, " << ball.obstructions.size() << " obstructed\n";
	out.results = Json{{"d", d},
	                   {"prime", p},
	                   {"precision", prec},
	                   {"delta", to_json(delta)},
	                   {"identically_zero", all.identically_zero},
	                   {"rational_roots", rational},
	                   {"padic_roots", padic},
	                   {"obstructions", obstructions}};
	out.text = os.str();
	return out;
}

inline Json cocycle_json(const CrossedHom &h) { return to_json(h.stacked()); }

inline Output extend_cmd(const Presentation &pres, const Representation &phi, const Rational &a,
                         const std::optional<std::vector<Rational>> &beta_in)
{
	auto space = cocycle_space(pres, phi, a);
	auto crit = extension_count_criterion(pres, phi, a, phi.dim + 1);
	CrossedHom beta;
	std::string source;
	if (beta_in)
	{
		if (beta_in->size() != pres.num_generators() * phi.dim)
			throw DomainError("--beta needs " + std::to_string(pres.num_generators() * phi.dim) + " values");
		beta = CrossedHom::from_stacked(*beta_in, phi.dim);
		source = "user";
	}
	else if (space.dimension() > 0)
	{
		beta = space.basis.front();
		source = "basis[0]";
	}
	else
	{
		beta = CrossedHom::zero(pres.num_generators(), phi.dim);
		source = "zero";
	}
	auto cand = build_extension(pres, phi, a, beta);
	auto check = verify_factors(pres, cand);

	Json basis = Json::array();
	for (const auto &b : space.basis)
		basis.push_back(cocycle_json(b));
	Json relators = Json::array();
	Json failing = Json::array();
	for (std::size_t j = 0; j < check.relators.size(); ++j)
	{
		relators.push_back(Json{{"index", j + 1}, {"ok", check.relators[j].ok}, {"image", to_json(check.relators[j].image)}});
		if (!check.relators[j].ok)
			failing.push_back(j + 1);
	}
	Output out;
	out.results = Json{{"a", to_json(a)},
	                   {"dim", space.dimension()},
	                   {"rank", space.rank},
	                   {"basis", basis},
	                   {"criterion",
	                    {{"k", phi.dim + 1}, {"meets_k", crit.meets_k}, {"delta_zero", crit.delta_zero}}},
	                   {"sample",
	                    {{"source", source},
	                     {"beta", cocycle_json(beta)},
	                     {"images", to_json(cand.images())},
	                     {"relators", relators},
	                     {"failing_relators", failing},
	                     {"verified", check.ok}}}};

	std::ostringstream os;
	os << "a = " << a << "\n";
	os << "nullspace dim " << space.dimension() << " (rank " << space.rank << ")\n";
	os << "basis:\n";
	for (const auto &b : space.basis)
		os << "  " << vector_text(b.stacked()) << "\n";
	os << "at least " << phi.dim + 1 << " independent extensions: " << (crit.meets_k ? "yes" : "no")
	   << "; zero of Delta_" << phi.dim << ": " << (crit.delta_zero ? "yes" : "no") << "\n";
	os << "sample extension (" << source << ") beta = " << vector_text(beta.stacked()) << "\n";
	for (std::size_t i = 0; i < cand.images().size(); ++i)
		os << "  " << pres.generators[i] << " ->\n" << matrix_text(cand.images()[i], "    ");
	for (std::size_t j = 0; j < check.relators.size(); ++j)
		if (!check.relators[j].ok)
			os << "relator " << j + 1 << " fails, image:\n" << matrix_text(check.relators[j].image, "    ");
	os << "verified: " << (check.ok ? "true" : "false") << "\n";
	out.text = os.str();
	return out;
}

inline Output cohomology_cmd(const Presentation &pres, const Representation &phi, const Rational &a,
                             const std::optional<std::vector<Rational>> &beta_in)
{
	auto r = h1_report(pres, phi, a);
	Output out;
	Json fixed = Json::array();
	for (const auto &v : r.fixed_space)
		fixed.push_back(to_json(v));
	out.results = Json{{"a", to_json(a)},
	                   {"dim", r.dim},
	                   {"z1_dim", r.z1_dim},
	                   {"b1_dim", r.b1_dim},
	                   {"h1_dim", r.h1_dim},
	                   {"fixed_space_dim", r.fixed_space_dim},
	                   {"fixed_space", fixed},
	                   {"delta_index", r.dim},
	                   {"delta", to_json(r.delta)},
	                   {"delta_value_at_a", to_json(r.delta_value_at_a)},
	                   {"audit",
	                    {{"delta_zero", r.audit.delta_zero},
	                     {"zero_implies_h1", r.audit.zero_implies_h1},
	                     {"h1_implies_zero", r.audit.h1_implies_zero},
	                     {"verdict", r.audit.verdict}}}};
	std::ostringstream os;
	os << "a = " << a << "\n";
	os << "dim Z1 = " << r.z1_dim << ", dim B1 = " << r.b1_dim << ", dim H1 = " << r.h1_dim << "\n";
	os << "fixed space dim " << r.fixed_space_dim << "\n";
	for (const auto &v : r.fixed_space)
		os << "  " << vector_text(v) << "\n";
	os << "Delta_" << r.dim << " = " << r.delta.to_string() << ", value at a = " << r.delta_value_at_a << "\n";
	os << "zero of Delta: " << (r.audit.delta_zero ? "yes" : "no") << "\n";
	os << "zero implies H1 != 0: " << r.audit.zero_implies_h1 << "\n";
	os << "H1 != 0 without fixed vectors implies zero: " << r.audit.h1_implies_zero << "\n";
	os << "verdict: " << r.audit.verdict << "\n";
	if (beta_in)
	{
		if (beta_in->size() != pres.num_generators() * phi.dim)
			throw DomainError("--beta needs " + std::to_string(pres.num_generators() * phi.dim) + " values");
		auto beta = CrossedHom::from_stacked(*beta_in, phi.dim);
		auto w = is_coboundary(pres, beta, specialize(phi, pres, a));
		out.results["coboundary"] = Json{{"beta", cocycle_json(beta)},
		                                 {"is_coboundary", w.has_value()},
		                                 {"witness", w ? to_json(*w) : Json(nullptr)}};
		os << "beta = " << vector_text(beta.stacked()) << (w ? " is a coboundary, v = " + vector_text(*w) : " is not a coboundary")
		   << "\n";
	}
	out.text = os.str();
	return out;
}

} // namespace propfox::cli
