#pragma once

#include <stdexcept>
#include <string>

namespace msf7 {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace msf7
