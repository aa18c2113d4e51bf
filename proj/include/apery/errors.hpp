#pragma once

#include <stdexcept>
#include <string>

namespace apery {

// Base class for every error this library raises on bad input or on an
// operation whose preconditions are not met. Internal consistency failures
// use std::logic_error instead: those indicate a bug, not bad input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define APERY_DEFINE_ERROR(NAME)          \
    struct NAME : Error {                 \
        using Error::Error;               \
    }

APERY_DEFINE_ERROR(DimensionMismatchError);
APERY_DEFINE_ERROR(NegativeEntryError);
APERY_DEFINE_ERROR(ZeroGeneratorError);
APERY_DEFINE_ERROR(DuplicateGeneratorError);
APERY_DEFINE_ERROR(RankDeficientError);
APERY_DEFINE_ERROR(NotSimplicialError);
APERY_DEFINE_ERROR(NotMinimalError);
APERY_DEFINE_ERROR(SingularBasisError);
APERY_DEFINE_ERROR(NotMemberError);
APERY_DEFINE_ERROR(OutsideConeError);
APERY_DEFINE_ERROR(NoMonomialReductionError);
APERY_DEFINE_ERROR(NotCohenMacaulayError);
APERY_DEFINE_ERROR(EmptyTError);
APERY_DEFINE_ERROR(InvalidTError);
APERY_DEFINE_ERROR(PreconditionFailedError);
APERY_DEFINE_ERROR(ParseError);

#undef APERY_DEFINE_ERROR

}  // namespace apery
