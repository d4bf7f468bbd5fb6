#pragma once

// Golden corpus runner. Each check reruns a command and compares the
// facts it produces against the stored expectation.

#include "commands.hpp"

#include <functional>
#include <map>

namespace propfox::cli {

using FileLoader = std::function<std::string(const std::string &)>;

struct CheckOutcome
{
	std::string kind;
	bool ok = true;
	std::vector<std::string> mismatches;
};

struct EntryOutcome
{
	std::string id;
	std::string origin;
	std::vector<CheckOutcome> checks;

	bool ok() const
	{
		for (const auto &c : checks)
			if (!c.ok)
				return false;
		return true;
	}
};

namespace detail {

inline std::vector<Rational> rational_list(const Json &j)
{
	std::vector<Rational> out;
	for (const auto &x : j)
		out.push_back(parse_rational(x.get<std::string>()));
	return out;
}

inline bool same_value(const Json &want, const Json &got)
{
	if (want.is_string() && got.is_string())
	{
		auto a = want.get<std::string>(), b = got.get<std::string>();
		if (a == b)
			return true;
		auto ra = try_parse_rational(a), rb = try_parse_rational(b);
		if (ra && rb)
			return *ra == *rb;
		try
		{
			return parse_laurent(a) == parse_laurent(b);
		}
		catch (const Error &)
		{
			return false;
		}
	}
	if (want.is_array() && got.is_array())
	{
		if (want.size() != got.size())
			return false;
		for (std::size_t i = 0; i < want.size(); ++i)
			if (!same_value(want[i], got[i]))
				return false;
		return true;
	}
	if (want.is_number() && got.is_number())
		return want.get<long>() == got.get<long>();
	return want == got;
}

inline std::vector<std::string> texts(const Json &arr, const char *key)
{
	std::vector<std::string> out;
	for (const auto &x : arr)
		out.push_back(x[key].get<std::string>());
	return out;
}

inline std::vector<std::string> texts_if(const Json &arr, const char *key, bool unit_ball)
{
	std::vector<std::string> out;
	for (const auto &x : arr)
		if (!unit_ball || x["unit_ball"].get<bool>())
			out.push_back(x[key].get<std::string>());
	return out;
}

struct Loaded
{
	Presentation pres;
	Representation phi;
};

inline Loaded load_entry(const Json &entry, const FileLoader &load)
{
	Loaded l;
	l.pres = parse_presentation(load(entry["presentation"].get<std::string>()));
	const auto &rep = entry["representation"];
	l.phi = rep.is_null() ? Representation::trivial(l.pres.num_generators())
	                      : parse_representation(load(rep.get<std::string>()), l.pres);
	return l;
}

inline std::optional<std::vector<Rational>> beta_of(const Json &check)
{
	if (!check.contains("beta"))
		return std::nullopt;
	return rational_list(check["beta"]);
}

/// Flat facts for one check. Keys line up with the expectation vocabulary.
inline Json facts_for(const Json &check, const Loaded &l)
{
	const std::string kind = check["kind"];
	const auto &pres = l.pres;
	const auto &phi = l.phi;
	if (kind == "validate")
		return validate_cmd(pres).results;
	if (kind == "matrix")
	{
		auto r = matrix_cmd(pres, phi, false).results;
		for (auto &row : r["entries"])
			for (auto &cell : row)
				cell = cell["text"];
		return r;
	}
	if (kind == "delta" || kind == "iwasawa-delta")
	{
		long d = check["d"].get<long>();
		auto r = kind == "delta" ? delta_cmd(pres, phi, d, false).results : iwasawa_cmd(pres, d).results;
		return Json{{"delta", r["delta"]["text"]}, {"mu_content", r["mu_content"]}};
	}
	if (kind == "zeros")
	{
		auto r = zeros_cmd(pres, phi, check["d"].get<long>(), check.value("prec", 8L), false).results;
		return Json{{"delta", r["delta"]["text"]},
		            {"identically_zero", r["identically_zero"]},
		            {"rational_roots", texts(r["rational_roots"], "value")},
		            {"unit_ball_rational", texts_if(r["rational_roots"], "value", true)},
		            {"padic_roots", texts(r["padic_roots"], "residue")},
		            {"padic_unit_ball", texts_if(r["padic_roots"], "residue", true)},
		            {"obstructions", texts(r["obstructions"], "residue")}};
	}
	if (kind == "extend")
	{
		auto r = extend_cmd(pres, phi, parse_rational(check["at"].get<std::string>()), beta_of(check)).results;
		const auto &sample = r["sample"];
		Json f{{"dim", r["dim"]},
		       {"rank", r["rank"]},
		       {"basis", r["basis"]},
		       {"meets_k", r["criterion"]["meets_k"]},
		       {"delta_zero", r["criterion"]["delta_zero"]},
		       {"verified", sample["verified"]},
		       {"failing_relators", sample["failing_relators"]}};
		for (const auto &rel : sample["relators"])
			f["relator_" + std::to_string(rel["index"].get<long>()) + "_image"] = rel["image"];
		return f;
	}
	if (kind == "cohomology")
	{
		Rational a = parse_rational(check["at"].get<std::string>());
		auto beta = beta_of(check);
		auto r = cohomology_cmd(pres, phi, a, beta).results;
		Json f{{"z1", r["z1_dim"]},
		       {"b1", r["b1_dim"]},
		       {"h1", r["h1_dim"]},
		       {"fixed_space_dim", r["fixed_space_dim"]},
		       {"delta_zero", r["audit"]["delta_zero"]},
		       {"zero_implies_h1", r["audit"]["zero_implies_h1"]},
		       {"h1_implies_zero", r["audit"]["h1_implies_zero"]},
		       {"verdict", r["audit"]["verdict"]}};
		if (r.contains("coboundary"))
		{
			const auto &c = r["coboundary"];
			f["is_coboundary"] = c["is_coboundary"];
			f["witness"] = c["witness"];
			bool reproduces = false;
			if (!c["witness"].is_null())
			{
				auto rho = specialize(phi, pres, a);
				auto w = rational_list(c["witness"]);
				reproduces = coboundary_of(rho, w) == CrossedHom::from_stacked(*beta, phi.dim);
			}
			f["witness_reproduces"] = reproduces;
		}
		return f;
	}
	if (kind == "sym2")
	{
		auto beta = rational_list(check["beta"]);
		auto base = Representation::trivial(pres.num_generators());
		auto ext = build_extension(pres, base, parse_rational(check["at"].get<std::string>()),
		                           CrossedHom::from_stacked(beta, 1));
		auto s = symmetric_square_cocycle(pres, ext);
		return Json{{"trivial", s.trivial},
		            {"beta", to_json(s.beta.stacked())},
		            {"witness", s.witness ? to_json(*s.witness) : Json(nullptr)}};
	}
	throw DomainError("unknown corpus check kind '" + kind + "'");
}

/// Every expected constraint c annihilates every basis vector, and the
/// constraints together with the basis account for the whole space.
inline std::optional<std::string> check_constraints(const Json &want, const Json &basis, std::size_t width)
{
	std::vector<std::vector<Rational>> cs;
	for (const auto &c : want)
		cs.push_back(rational_list(c));
	for (const auto &b : basis)
	{
		auto v = rational_list(b);
		for (const auto &c : cs)
		{
			Rational dot;
			for (std::size_t i = 0; i < v.size(); ++i)
				dot += c.at(i) * v[i];
			if (!dot.is_zero())
				return "basis vector " + b.dump() + " violates a constraint";
		}
	}
	Matrix<Rational> m(cs.size(), width);
	for (std::size_t i = 0; i < cs.size(); ++i)
		for (std::size_t j = 0; j < width; ++j)
			m(i, j) = cs[i].at(j);
	auto rank = rank_nullspace(m).rank;
	if (rank + basis.size() != width)
		return "constraints have rank " + std::to_string(rank) + " but the nullspace has dimension " +
		       std::to_string(basis.size());
	return std::nullopt;
}

inline CheckOutcome run_check(const Json &check, const Loaded &l)
{
	CheckOutcome out;
	out.kind = check["kind"].get<std::string>();
	Json facts;
	try
	{
		facts = facts_for(check, l);
	}
	catch (const std::exception &e)
	{
		out.ok = false;
		out.mismatches.push_back(std::string("error: ") + e.what());
		return out;
	}
	for (const auto &[key, want] : check["expect"].items())
	{
		if (key == "constraints")
		{
			auto width = l.pres.num_generators() * l.phi.dim;
			if (auto msg = check_constraints(want, facts["basis"], width))
				out.mismatches.push_back(*msg);
			continue;
		}
		if (!facts.contains(key))
		{
			out.mismatches.push_back("no fact named " + key);
			continue;
		}
		bool ok;
		if (key == "delta")
			ok = normalize_associate(parse_laurent(want.get<std::string>())) ==
			     normalize_associate(parse_laurent(facts[key].get<std::string>()));
		else
			ok = same_value(want, facts[key]);
		if (!ok)
			out.mismatches.push_back(key + ": expected " + want.dump() + ", got " + facts[key].dump());
	}
	out.ok = out.mismatches.empty();
	return out;
}

} // namespace detail

inline Json parse_corpus(const FileLoader &load) { return Json::parse(load("corpus.json")); }

inline std::vector<std::string> corpus_ids(const Json &corpus)
{
	std::vector<std::string> ids;
	for (const auto &e : corpus["entries"])
		ids.push_back(e["id"].get<std::string>());
	return ids;
}

inline EntryOutcome run_entry(const Json &entry, const FileLoader &load)
{
	EntryOutcome out;
	out.id = entry["id"].get<std::string>();
	out.origin = entry.value("origin", "");
	detail::Loaded l;
	try
	{
		l = detail::load_entry(entry, load);
	}
	catch (const std::exception &e)
	{
		out.checks.push_back({"load", false, {std::string("error: ") + e.what()}});
		return out;
	}
	for (const auto &check : entry["checks"])
		out.checks.push_back(detail::run_check(check, l));
	return out;
}

/// Runs every entry, or only the one named id. Throws DomainError for an
/// unknown id.
inline std::vector<EntryOutcome> run_corpus(const Json &corpus, const FileLoader &load,
                                            const std::optional<std::string> &id = std::nullopt)
{
	std::vector<EntryOutcome> out;
	for (const auto &e : corpus["entries"])
		if (!id || e["id"] == *id)
			out.push_back(run_entry(e, load));
	if (id && out.empty())
		throw DomainError("no corpus entry with id '" + *id + "'");
	return out;
}

inline Json outcome_json(const std::vector<EntryOutcome> &outcomes)
{
	Json entries = Json::array();
	bool all = true;
	for (const auto &e : outcomes)
	{
		Json checks = Json::array();
		for (const auto &c : e.checks)
			checks.push_back(Json{{"kind", c.kind}, {"ok", c.ok}, {"mismatches", c.mismatches}});
		entries.push_back(Json{{"id", e.id}, {"origin", e.origin}, {"ok", e.ok()}, {"checks", checks}});
		all = all && e.ok();
	}
	return Json{{"ok", all}, {"entries", entries}};
}

inline std::string outcome_text(const std::vector<EntryOutcome> &outcomes)
{
	std::ostringstream os;
	std::size_t passed = 0;
	for (const auto &e : outcomes)
	{
		os << (e.ok() ? "PASS " : "FAIL ") << e.id << " (" << e.checks.size() << " checks)\n";
		for (const auto &c : e.checks)
			for (const auto &m : c.mismatches)
				os << "  " << c.kind << ": " << m << "\n";
		passed += e.ok();
	}
	os << passed << "/" << outcomes.size() << " corpus entries pass\n";
	return os.str();
}

} // namespace propfox::cli
