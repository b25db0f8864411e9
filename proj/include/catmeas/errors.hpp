// Copyright 2026 The catmeas Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Error hierarchy shared by all catmeas components. Every named failure
 * mode maps to its own exception type so callers can match on structure
 * rather than on message text.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace catmeas {

struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// measurable
struct OverlappingAtoms : Error {
    using Error::Error;
};
struct UncoveredPoint : Error {
    using Error::Error;
};
struct EmptyAtom : Error {
    using Error::Error;
};
struct NotMeasurable : Error {
    using Error::Error;
};
struct SpaceMismatch : Error {
    using Error::Error;
};

// operators
struct NotSquare : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct NotAnEffect : Error {
    using Error::Error;
};
struct NotPSD : Error {
    using Error::Error;
};
struct TraceNotOne : Error {
    using Error::Error;
};
struct EigensolverFailure : Error {
    using Error::Error;
};
struct DimMismatch : Error {
    using Error::Error;
};
struct NonRealTrace : Error {
    using Error::Error;
};

// functors
struct NotNormalized : Error {
    using Error::Error;
};
struct NoComposablePair : Error {
    using Error::Error;
};

// naturality
struct NotAMeasure : Error {
    using Error::Error;
};
struct DecompositionNotSubunital : Error {
    using Error::Error;
};

// born
struct StatesEqual : Error {
    using Error::Error;
};
struct NotAState : Error {
    using Error::Error;
};
struct SingularFrame : Error {
    using Error::Error;
};

// cli
struct ConfigInvalid : Error {
    using Error::Error;
};

} // namespace catmeas
