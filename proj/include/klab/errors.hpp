#ifndef KLAB_ERRORS_HPP
#define KLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace klab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class NotConnected : public Error {
public:
    using Error::Error;
};

// Every vertical edge was removed; the family member is disconnected.
class DisconnectedFamily : public Error {
public:
    using Error::Error;
};

class NotMirrorSymmetric : public Error {
public:
    using Error::Error;
};

class SingularCubic : public Error {
public:
    using Error::Error;
};

// Spectrum does not carry exactly one zero eigenvalue.
class NotConnectedSpectrum : public Error {
public:
    using Error::Error;
};

class Inconsistency : public Error {
public:
    using Error::Error;
};

} // namespace klab

#endif // KLAB_ERRORS_HPP
