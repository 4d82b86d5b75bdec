#pragma once

#include <stdexcept>
#include <string>

namespace pitr {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PITR_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& what) : Error(what) {}   \
    };

PITR_DEFINE_ERROR(BaseOutOfRange)
PITR_DEFINE_ERROR(AlphabetTooSmall)
PITR_DEFINE_ERROR(AlphabetTooLarge)
PITR_DEFINE_ERROR(CapacityExceeded)
PITR_DEFINE_ERROR(SymbolOutOfRange)
PITR_DEFINE_ERROR(PitOutOfRange)
PITR_DEFINE_ERROR(InstanceTooLarge)
PITR_DEFINE_ERROR(PassesOutOfRange)
PITR_DEFINE_ERROR(CorruptContainer)
PITR_DEFINE_ERROR(ArithmeticOverflow)

#undef PITR_DEFINE_ERROR

} // namespace pitr
