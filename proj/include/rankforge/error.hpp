#ifndef RANKFORGE_ERROR_HPP_
#define RANKFORGE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankforge {

  // Raised for malformed or out-of-range caller input. The CLI maps it to
  // exit code 2.
  class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A generator of a presentation does not occur in any positive relator.
  class CoverageViolation : public InvalidInput {
   public:
    CoverageViolation(std::size_t generator, std::string const& name)
        : InvalidInput("generator " + name
                       + " does not occur in any positive relator"),
          _generator(generator) {}

    [[nodiscard]] std::size_t generator() const noexcept {
      return _generator;
    }

   private:
    std::size_t _generator;
  };

}  // namespace rankforge

#endif  // RANKFORGE_ERROR_HPP_
