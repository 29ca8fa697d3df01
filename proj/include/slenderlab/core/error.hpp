#pragma once

#include <stdexcept>
#include <string>

namespace slenderlab {

  //! Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed textual input (word tokens, spec files, descriptors).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  //! A precondition of an operation was violated by its arguments.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  //! A configured resource cap (ball size, search budget) was exceeded.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

}  // namespace slenderlab
