#ifndef NRT_ERROR_HPP
#define NRT_ERROR_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace nrt {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  NotSubgroup,
  NotNormal,
  EnumerationTooLarge,
  NotIdentity,
  ColumnNotBijective,
  NotLeftNonsingular,
  OrderTooLarge,
  NotPrime,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and is what the
/// C API reports; the message is for humans.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::uint32_t> witness = std::nullopt)
    : std::runtime_error(message), code_(code), witness_(witness) {}

  ErrorCode code() const noexcept { return code_; }

  /// Offending element index, for errors that name one (NotIdentity,
  /// ColumnNotBijective).
  std::optional<std::uint32_t> witness() const noexcept { return witness_; }

private:
  ErrorCode code_;
  std::optional<std::uint32_t> witness_;
};

} // namespace nrt

#endif // NRT_ERROR_HPP
