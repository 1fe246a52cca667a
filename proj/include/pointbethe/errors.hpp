// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace pointbethe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// det(U+) vanishes: separated or limiting boundary conditions.
class DegenerateBoundary : public Error {
public:
    using Error::Error;
};

/// Gauge map requested for couplings outside the (c, 0, 0, eta) family.
class NotGaugeFamily : public Error {
public:
    using Error::Error;
};

/// Scattering amplitude denominator vanishes (bound-state pole).
class PoleAtU : public Error {
public:
    using Error::Error;
};

/// Numerically singular linear system in an oracle.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// Couplings outside both integrable families where an integrable model is required.
class NotIntegrable : public Error {
public:
    using Error::Error;
};

/// Two particle coordinates coincide within tolerance.
class OnBoundary : public Error {
public:
    using Error::Error;
};

/// Point lies outside the wedge required by an operation.
class WrongWedge : public Error {
public:
    using Error::Error;
};

/// Operands of different particle number.
class SizeMismatch : public Error {
public:
    using Error::Error;
};

} // namespace pointbethe
