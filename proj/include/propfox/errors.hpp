#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace propfox {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Arithmetic outside the domain of an operation (division by zero,
/// inverting a non-unit, a singular matrix where an inverse is needed).
class DomainError : public Error
{
public:
	using Error::Error;
};

class DivisionByZero : public DomainError
{
public:
	DivisionByZero() : DomainError("division by zero") {}
	using DomainError::DomainError;
};

class NotAUnit : public DomainError
{
public:
	using DomainError::DomainError;
};

class NotInvertible : public DomainError
{
public:
	using DomainError::DomainError;
};

class IdenticallyZero : public DomainError
{
public:
	IdenticallyZero() : DomainError("polynomial is identically zero") {}
};

class NotACocycle : public DomainError
{
public:
	using DomainError::DomainError;
};

/// The presentation does not satisfy the hypotheses (total degree zero,
/// alpha constant on generators) required by an operation.
class HypothesisViolated : public Error
{
public:
	using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class InternalInconsistency : public Error
{
public:
	using Error::Error;
};

/// A proven implication failed on concrete data.
class TheoremViolation : public Error
{
public:
	using Error::Error;
};

class ParseError : public Error
{
public:
	enum class Kind
	{
		Syntax,
		UnknownGenerator,
		ZeroExponent,
		DuplicateGenerator,
		Semantic,
	};

	ParseError(Kind kind, std::size_t line, std::size_t column, const std::string &msg)
	    : Error(format(line, column, msg)), kind_(kind), line_(line), column_(column)
	{}

	Kind kind() const noexcept { return kind_; }
	std::size_t line() const noexcept { return line_; }
	std::size_t column() const noexcept { return column_; }

private:
	static std::string format(std::size_t line, std::size_t column, const std::string &msg)
	{
		if (line == 0)
			return msg;
		return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
	}

	Kind kind_;
	std::size_t line_;
	std::size_t column_;
};

} // namespace propfox
