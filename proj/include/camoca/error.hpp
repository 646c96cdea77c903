// Copyright 2026 The camoca authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAMOCA_ERROR_HPP
#define CAMOCA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace camoca {

/// Base class for all validation and protocol failures raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// No consistent reconstruction exists: corrupted shares, shares from
/// different deals, or a rule pair that is not orthogonal.
class NoPathError : public Error {
public:
    explicit NoPathError(const std::string& what) : Error(what) {}
};

/// More than one consistent reconstruction: the public family violates
/// pairwise orthogonality.
class AmbiguityError : public Error {
public:
    explicit AmbiguityError(const std::string& what) : Error(what) {}
};

/// The same share was supplied twice; reconstruction needs two distinct players.
class SameShareError : public Error {
public:
    explicit SameShareError(const std::string& what) : Error(what) {}
};

} // namespace camoca

#endif
