#ifndef ANS_EXCEPTION_HPP_
#define ANS_EXCEPTION_HPP_

#include <stdexcept>
#include <string>

namespace ans {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised by classify() when a table is not one of the four shapes that
  // make up A^+(B_n).
  class NotAffineElement : public Error {
   public:
    using Error::Error;
  };

}  // namespace ans

#endif  // ANS_EXCEPTION_HPP_
