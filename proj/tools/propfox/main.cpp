// propfox command-line interface.

#include "corpus.hpp"

#include "propfox_corpus_data.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace propfox;
using namespace propfox::cli;

struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct GoldenMismatch : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// Reads a file from disk, falling back to the embedded corpus by base name.
std::string load_file(const std::string &path)
{
	namespace fs = std::filesystem;
	std::error_code ec;
	if (fs::is_regular_file(path, ec))
	{
		std::ifstream in(path, std::ios::binary);
		if (in)
		{
			std::ostringstream ss;
			ss << in.rdbuf();
			return ss.str();
		}
		throw UsageError("cannot read " + path);
	}
	const auto &files = corpus_data::files();
	if (auto it = files.find(fs::path(path).filename().string()); it != files.end())
		return it->second;
	throw UsageError("cannot read " + path);
}

Rational parse_point(const std::string &s)
{
	auto r = try_parse_rational(s);
	if (!r)
		throw UsageError("--at expects an integer or a fraction n/d, got '" + s + "'");
	return *r;
}

std::optional<std::vector<Rational>> parse_beta(const std::string &s)
{
	if (s.empty())
		return std::nullopt;
	std::vector<Rational> out;
	std::stringstream ss(s);
	std::string item;
	while (std::getline(ss, item, ','))
	{
		auto r = try_parse_rational(item);
		if (!r)
			throw UsageError("--beta expects comma-separated rationals, got '" + item + "'");
		out.push_back(*r);
	}
	return out;
}

struct Options
{
	std::string file;
	std::string rep;
	long d = 0;
	long prec = 8;
	std::string at;
	std::string beta;
	std::string id;
	bool allow_invalid = false;
	bool json = false;
};

Representation load_rep(const Options &o, const Presentation &pres)
{
	if (o.rep.empty())
		return Representation::trivial(pres.num_generators());
	return parse_representation(load_file(o.rep), pres);
}

Json base_inputs(const Options &o)
{
	Json in{{"file", o.file}};
	in["representation"] = o.rep.empty() ? Json(nullptr) : Json(o.rep);
	return in;
}

Output run(const std::string &cmd, const Options &o, Json &inputs)
{
	if (cmd == "corpus list" || cmd == "corpus run")
	{
		auto corpus = parse_corpus(load_file);
		Output out;
		if (cmd == "corpus list")
		{
			Json list = Json::array();
			for (const auto &e : corpus["entries"])
			{
				list.push_back(Json{{"id", e["id"]}, {"origin", e["origin"]}, {"checks", e["checks"].size()}});
				out.text += e["id"].get<std::string>() + "  " + e["origin"].get<std::string>() + "\n";
			}
			out.results = Json{{"entries", list}};
			return out;
		}
		std::optional<std::string> id;
		if (!o.id.empty())
			id = o.id;
		inputs = Json{{"id", o.id.empty() ? Json(nullptr) : Json(o.id)}};
		auto outcomes = run_corpus(corpus, load_file, id);
		out.results = outcome_json(outcomes);
		out.text = outcome_text(outcomes);
		if (!out.results["ok"].get<bool>())
			out.exit_code = 5;
		return out;
	}

	auto pres = parse_presentation(load_file(o.file));
	inputs = base_inputs(o);
	if (cmd == "validate")
	{
		inputs.erase("representation");
		return validate_cmd(pres);
	}
	if (cmd == "iwasawa-delta")
	{
		inputs.erase("representation");
		inputs["d"] = o.d;
		return iwasawa_cmd(pres, o.d);
	}
	auto phi = load_rep(o, pres);
	if (cmd == "matrix")
	{
		inputs["allow_invalid"] = o.allow_invalid;
		return matrix_cmd(pres, phi, o.allow_invalid);
	}
	if (cmd == "delta")
	{
		inputs["d"] = o.d;
		inputs["allow_invalid"] = o.allow_invalid;
		return delta_cmd(pres, phi, o.d, o.allow_invalid);
	}
	if (cmd == "zeros")
	{
		inputs["d"] = o.d;
		inputs["prec"] = o.prec;
		return zeros_cmd(pres, phi, o.d, o.prec, o.allow_invalid);
	}
	auto a = parse_point(o.at);
	auto beta = parse_beta(o.beta);
	inputs["at"] = to_json(a);
	inputs["beta"] = beta ? to_json(*beta) : Json(nullptr);
	if (cmd == "extend")
		return extend_cmd(pres, phi, a, beta);
	return cohomology_cmd(pres, phi, a, beta);
}

int report_error(const std::string &cmd, bool json, const std::string &kind, const std::string &message, int code)
{
	if (json)
	{
		Json err{{"schema_version", kSchemaVersion},
		         {"command", cmd},
		         {"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
		std::cout << err.dump(2) << "\n";
	}
	std::cerr << "propfox: " << message << "\n";
	return code;
}

std::string parse_kind(ParseError::Kind k)
{
	switch (k)
	{
	case ParseError::Kind::Syntax:
		return "syntax";
	case ParseError::Kind::UnknownGenerator:
		return "unknown_generator";
	case ParseError::Kind::ZeroExponent:
		return "zero_exponent";
	case ParseError::Kind::DuplicateGenerator:
		return "duplicate_generator";
	case ParseError::Kind::Semantic:
		return "semantic";
	}
	return "parse";
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Fox calculus, Fitting ideals and extension criteria for pro-p presentations"};
	app.require_subcommand(1);
	Options o;

	auto add_file = [&](CLI::App *sub) {
		sub->add_option("file", o.file, "presentation file")->required();
		sub->add_flag("--json", o.json, "print a JSON document");
	};
	auto add_rep = [&](CLI::App *sub) { sub->add_option("--rep", o.rep, "representation file (default trivial)"); };

	auto *validate = app.add_subcommand("validate", "check that every relator has total degree zero");
	add_file(validate);

	auto *matrix = app.add_subcommand("matrix", "print the Alexander matrix");
	add_file(matrix);
	add_rep(matrix);
	matrix->add_flag("--allow-invalid", o.allow_invalid, "skip the degree check");

	auto *delta = app.add_subcommand("delta", "d-th Fitting generator of the Alexander module");
	add_file(delta);
	add_rep(delta);
	delta->add_option("--d", o.d, "Fitting index")->required();
	delta->add_flag("--allow-invalid", o.allow_invalid, "skip the degree check");

	auto *iwasawa = app.add_subcommand("iwasawa-delta", "Fitting generator of the Iwasawa module");
	add_file(iwasawa);
	iwasawa->add_option("--d", o.d, "Fitting index")->required();

	auto *zeros = app.add_subcommand("zeros", "rational and p-adic zeros of Delta_d");
	add_file(zeros);
	add_rep(zeros);
	zeros->add_option("--d", o.d, "Fitting index")->required();
	zeros->add_option("--prec", o.prec, "p-adic precision")->check(CLI::Range(1L, 4096L));

	auto *extend = app.add_subcommand("extend", "cocycle space and a sample extension at a point");
	add_file(extend);
	add_rep(extend);
	extend->add_option("--at", o.at, "point a, integer or n/d")->required();
	extend->add_option("--beta", o.beta, "cocycle values, comma separated");

	auto *cohomology = app.add_subcommand("cohomology", "H1 of the specialized local system");
	add_file(cohomology);
	add_rep(cohomology);
	cohomology->add_option("--at", o.at, "point a, integer or n/d")->required();
	cohomology->add_option("--beta", o.beta, "cocycle to test for being a coboundary");

	auto *corpus = app.add_subcommand("corpus", "golden examples");
	corpus->require_subcommand(1);
	auto *corpus_run = corpus->add_subcommand("run", "rerun the golden examples");
	corpus_run->add_option("--id", o.id, "run a single entry");
	corpus_run->add_flag("--json", o.json, "print a JSON document");
	auto *corpus_list = corpus->add_subcommand("list", "list the golden examples");
	corpus_list->add_flag("--json", o.json, "print a JSON document");

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		int code = app.exit(e);
		return code == 0 ? 0 : 1;
	}

	std::string cmd;
	for (auto *sub : {validate, matrix, delta, iwasawa, zeros, extend, cohomology})
		if (sub->parsed())
			cmd = sub->get_name();
	if (corpus->parsed())
		cmd = corpus_run->parsed() ? "corpus run" : "corpus list";

	Json inputs = Json::object();
	try
	{
		auto out = run(cmd, o, inputs);
		if (o.json)
			std::cout << envelope(cmd, inputs, out.results).dump(2) << "\n";
		else
			std::cout << out.text;
		return out.exit_code;
	}
	catch (const UsageError &e)
	{
		return report_error(cmd, o.json, "usage", e.what(), 1);
	}
	catch (const ParseError &e)
	{
		return report_error(cmd, o.json, parse_kind(e.kind()), e.what(), 2);
	}
	catch (const HypothesisViolated &e)
	{
		return report_error(cmd, o.json, "hypothesis_violated", e.what(), 3);
	}
	catch (const DomainError &e)
	{
		return report_error(cmd, o.json, "domain", e.what(), 4);
	}
	catch (const InternalInconsistency &e)
	{
		return report_error(cmd, o.json, "internal_inconsistency", e.what(), 4);
	}
	catch (const TheoremViolation &e)
	{
		return report_error(cmd, o.json, "theorem_violation", e.what(), 4);
	}
	catch (const nlohmann::json::exception &e)
	{
		return report_error(cmd, o.json, "corpus", e.what(), 5);
	}
	catch (const Error &e)
	{
		return report_error(cmd, o.json, "error", e.what(), 4);
	}
}
