#pragma once

#include <stdexcept>
#include <string>

namespace stylegen {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroVectorError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class NotNormalizedError : public Error {
public:
    using Error::Error;
};

class MissingIndexError : public Error {
public:
    using Error::Error;
};

class UnknownClassError : public Error {
public:
    using Error::Error;
};

class MissingStyleVectorError : public Error {
public:
    using Error::Error;
};

class UnexpectedStyleVectorError : public Error {
public:
    using Error::Error;
};

class MissingStyleSlotError : public Error {
public:
    using Error::Error;
};

class SequenceTooLongError : public Error {
public:
    using Error::Error;
};

class BadArchitectureError : public Error {
public:
    using Error::Error;
};

class BadDistributionError : public Error {
public:
    using Error::Error;
};

class NonFiniteLossError : public Error {
public:
    using Error::Error;
};

class LabelOutOfRangeError : public Error {
public:
    using Error::Error;
};

class EmptyDatasetError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace stylegen
