#pragma once

#include <stdexcept>
#include <string>

namespace qsi {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define QSI_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& msg = #Name) : Error(msg) {} \
    }

QSI_DEFINE_ERROR(CyclicQuiver);
QSI_DEFINE_ERROR(Disconnected);
QSI_DEFINE_ERROR(DuplicateId);
QSI_DEFINE_ERROR(IndexMismatch);
QSI_DEFINE_ERROR(NotEuclidean);
QSI_DEFINE_ERROR(StructureCheckFailed);
QSI_DEFINE_ERROR(NotRegular);
QSI_DEFINE_ERROR(DenseOrbitCase);
QSI_DEFINE_ERROR(NotSquare);
QSI_DEFINE_ERROR(QuiverMismatch);
QSI_DEFINE_ERROR(NotOrthogonal);
QSI_DEFINE_ERROR(SingularBlock);
QSI_DEFINE_ERROR(CertificationFailed);
QSI_DEFINE_ERROR(ParseError);

#undef QSI_DEFINE_ERROR

}  // namespace qsi
