#pragma once
#include <stdexcept>
#include <string>

namespace gridhom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define GRIDHOM_ERROR(Name)                          \
    struct Name : Error {                            \
        explicit Name(const std::string& what_arg)   \
            : Error(#Name ": " + what_arg) {}        \
    }

GRIDHOM_ERROR(NotPermutation);
GRIDHOM_ERROR(SharedSquare);
GRIDHOM_ERROR(NotAKnot);
GRIDHOM_ERROR(BadCharacter);
GRIDHOM_ERROR(RaggedRows);
GRIDHOM_ERROR(PreconditionViolated);
GRIDHOM_ERROR(SizeMismatch);
GRIDHOM_ERROR(NotStabilized);
GRIDHOM_ERROR(HalfIntegerResult);
GRIDHOM_ERROR(VariableClash);
GRIDHOM_ERROR(NotChainMap);
GRIDHOM_ERROR(NeedDeeperProbe);
GRIDHOM_ERROR(WindowTooSmall);
GRIDHOM_ERROR(NotAConnectDiagram);
GRIDHOM_ERROR(NotSubcomplex);
GRIDHOM_ERROR(ZeroBlockViolated);
GRIDHOM_ERROR(NotACycle);

#undef GRIDHOM_ERROR

} // namespace gridhom
