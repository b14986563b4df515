#ifndef GMET_ERRORS_HPP
#define GMET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gmet {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EnumerationTooLarge : public Error {
public:
    using Error::Error;
};

class SearchTooLarge : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class InconsistentOracle : public Error {
public:
    using Error::Error;
};

class MissingRequiredWeight : public Error {
public:
    using Error::Error;
};

class NotHierarchical : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class NotAnIsometry : public Error {
public:
    using Error::Error;
};

class NotSingleLevel : public Error {
public:
    using Error::Error;
};

class UdpViolated : public Error {
public:
    using Error::Error;
};

class ZeroCode : public Error {
public:
    using Error::Error;
};

class SingularMap : public Error {
public:
    using Error::Error;
};

}  // namespace gmet

#endif
