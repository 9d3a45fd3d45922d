#pragma once

#include <stdexcept>
#include <string>

namespace pxc {

enum class ErrorCode {
  // data model
  MissingFile,
  MalformedRow,
  DuplicateBrickCode,
  MalformedLine,
  UnknownCategory,
  DuplicateId,
  // extraction
  NoProductFound,
  EmptyName,
  // fetching
  InvalidUrl,
  Timeout,
  TooManyRedirects,
  HttpError,
  BodyTooLarge,
  NotHtml,
  // classifier
  SingleClassDataset,
  EmptyDataset,
  VersionMismatch,
  CorruptFile,
  // evaluation
  LengthMismatch,
  EmptyInput,
  EmptySelection,
  // taxonomy mapping
  MissingSourceCategory,
  GoldMissing,
  // corpus / misc
  InvalidSpec,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

// Single exception type carrying a stable code; the CLI maps codes to exit
// status and prints them as "code: message" on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pxc
