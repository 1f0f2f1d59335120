#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sglight {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scenario text failed to parse or validate. `key()` names the offending
/// entry (comma-separated names for UnknownKey).
class ConfigError : public Error {
 public:
  enum class Kind { Syntax, MissingKey, BadValue, UnknownKey, ModeMismatch };

  ConfigError(Kind kind, std::string key, const std::string& reason)
      : Error(describe(kind, key, reason)), kind_(kind), key_(std::move(key)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& key() const noexcept { return key_; }

 private:
  static std::string describe(Kind kind, const std::string& key, const std::string& reason) {
    const char* tag = "";
    switch (kind) {
      case Kind::Syntax: tag = "Syntax"; break;
      case Kind::MissingKey: tag = "MissingKey"; break;
      case Kind::BadValue: tag = "BadValue"; break;
      case Kind::UnknownKey: tag = "UnknownKey"; break;
      case Kind::ModeMismatch: tag = "ModeMismatch"; break;
    }
    std::string msg = std::string(tag) + "(" + key + ")";
    if (!reason.empty()) msg += ": " + reason;
    return msg;
  }

  Kind kind_;
  std::string key_;
};

class ZeroControlField : public Error {
 public:
  ZeroControlField() : Error("ZeroControlField: control Rabi frequency is zero") {}
};

class StepTooLarge : public Error {
 public:
  using Error::Error;
};

class ControlFieldUnderflow : public Error {
 public:
  using Error::Error;
};

class PacketOutsideGrid : public Error {
 public:
  using Error::Error;
};

/// Grid violates resolution requirements (power of two, dx, Nyquist).
class GridError : public Error {
 public:
  using Error::Error;
};

/// Propagation aborted: intensity reached the periodic boundary.
class GuardFailure : public Error {
 public:
  using Error::Error;
};

class WrongMode : public Error {
 public:
  using Error::Error;
};

class BadSweepKey : public Error {
 public:
  explicit BadSweepKey(const std::string& key)
      : Error("BadSweepKey(" + key + "): not a numeric scalar scenario field") {}
};

}  // namespace sglight
