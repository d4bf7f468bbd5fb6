#pragma once

// JSON encodings shared by the CLI commands.

#include "propfox/propfox.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace propfox::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const Rational &r) { return r.to_fraction_string(); }

inline Json to_json(const Integer &z) { return z.get_str(); }

/// {"text": ..., "coefficients": {"exponent": "n/d", ...}}, exponents ascending.
inline Json to_json(const LaurentPoly &f)
{
	Json coeffs = Json::object();
	for (const auto &[e, c] : f.terms())
		coeffs[std::to_string(e)] = c.to_fraction_string();
	return Json{{"text", f.to_string()}, {"coefficients", coeffs}};
}

template <class T>
Json to_json(const Matrix<T> &m);

template <class T>
Json to_json(const std::vector<T> &v)
{
	Json out = Json::array();
	for (const auto &x : v)
		out.push_back(to_json(x));
	return out;
}

template <class T>
Json to_json(const Matrix<T> &m)
{
	Json rows = Json::array();
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		Json row = Json::array();
		for (std::size_t j = 0; j < m.cols(); ++j)
			row.push_back(to_json(m(i, j)));
		rows.push_back(row);
	}
	return rows;
}

inline Json envelope(const std::string &command, Json inputs, Json results)
{
	return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"inputs", std::move(inputs)},
	            {"results", std::move(results)}};
}

inline std::string vector_text(const std::vector<Rational> &v)
{
	std::string out = "(";
	for (std::size_t i = 0; i < v.size(); ++i)
		out += (i ? ", " : "") + v[i].to_string();
	return out + ")";
}

template <class T>
std::string matrix_text(const Matrix<T> &m, const std::string &indent = "  ")
{
	std::vector<std::vector<std::string>> cells(m.rows());
	std::vector<std::size_t> width(m.cols(), 0);
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
		{
			std::string s = m(i, j).to_string();
			width[j] = std::max(width[j], s.size());
			cells[i].push_back(std::move(s));
		}
	std::string out;
	for (const auto &row : cells)
	{
		out += indent + "[";
		for (std::size_t j = 0; j < row.size(); ++j)
		{
			if (j)
				out += "  ";
			out += std::string(width[j] - row[j].size(), ' ') + row[j];
		}
		out += "]\n";
	}
	return out;
}

} // namespace propfox::cli
