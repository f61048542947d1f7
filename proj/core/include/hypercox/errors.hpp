#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypercox {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Operands live in towers that cannot be reconciled.
class TowerMismatch : public Error {
public:
    using Error::Error;
};

class NegativeRadicand : public Error {
public:
    explicit NegativeRadicand(const std::string& what = "square root of a negative number")
        : Error(what) {}
};

class InvalidEmbedding : public Error {
public:
    using Error::Error;
};

class NotTotallyRealTower : public Error {
public:
    NotTotallyRealTower() : Error("tower is not totally real") {}
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error("syntax error at position " + std::to_string(position) + ": " + message),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// cos(pi/m) is not available in an iterated square-root tower.
class UnsupportedAngle : public Error {
public:
    explicit UnsupportedAngle(long m)
        : Error("unsupported angle pi/" + std::to_string(m) +
                ": only m = 2^a * (distinct Fermat primes 3, 5, 17) are supported"),
          m_(m) {}
    long m() const noexcept { return m_; }

private:
    long m_;
};

class PositiveEntry : public Error {
public:
    PositiveEntry() : Error("Gram entry is positive; not an acute-angled configuration") {}
};

class NotAFace : public Error {
public:
    using Error::Error;
};

class SizeLimit : public Error {
public:
    using Error::Error;
};

class CycleExplosion : public Error {
public:
    explicit CycleExplosion(std::size_t cap)
        : Error("simple cycle count exceeds cap " + std::to_string(cap)), cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

class SearchExhausted : public Error {
public:
    using Error::Error;
};

/// Malformed input data (JSON schema violations, bad matrices).
class InvalidInput : public Error {
public:
    using Error::Error;
};

}  // namespace hypercox
