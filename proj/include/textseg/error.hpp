#pragma once

#include <stdexcept>
#include <string>

namespace textseg {

/// Raised when input data (files, documents, tables) cannot be used.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace textseg
