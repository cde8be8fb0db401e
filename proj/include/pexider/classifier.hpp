#pragma once

#include "pexider/checker.hpp"

#include <optional>
#include <string>
#include <variant>

namespace pexider {

/// Case (i): phi vanishes on all of D, or f1 == f2 == lambda.
struct Extremal {
    std::optional<Rational> lambda;  // set when both functions are that constant

    friend bool operator==(const Extremal&, const Extremal&) = default;
};

/// Case (ii): common end plateaus. A missing constant means the matching
/// pair of plateaus is Empty.
struct TwoSidedPlateaus {
    std::optional<Rational> lambda;
    std::optional<Rational> mu;
    Interval u1, u2;  // left/right plateaus in I1
    Interval v1, v2;  // left/right plateaus in I2
    Interval k1, k2;  // I1 \ (U1 ∪ U2), I2 \ (V1 ∪ V2)

    friend bool operator==(const TwoSidedPlateaus&, const TwoSidedPlateaus&) = default;
};

/// Case (iii): f_j == lambda, f_i == lambda on the plateaus, and phi
/// vanishes on (big_k + I_j) / 2 with big_k = I_i minus the plateaus.
struct OneConstant {
    int i = 1;
    Rational lambda;
    IntervalSet plateaus;
    IntervalSet big_k;

    friend bool operator==(const OneConstant&, const OneConstant&) = default;
};

struct NotASolution {
    Witness witness;

    friend bool operator==(const NotASolution&, const NotASolution&) = default;
};

struct ZeroSetNotClosed {
    friend bool operator==(const ZeroSetNotClosed&, const ZeroSetNotClosed&) = default;
};

using Classification = std::variant<Extremal, TwoSidedPlateaus, OneConstant, NotASolution, ZeroSetNotClosed>;

/// Sorts an instance into the three solution cases, or reports why it is
/// not classifiable. Throws ImpossibleCase if no case fits a solution
/// with closed zero set.
Classification classify(const EquationInstance& inst);

/// Re-derives every claim carried by `c` from the instance. False for
/// NotASolution and ZeroSetNotClosed.
bool verify_classification(const EquationInstance& inst, const Classification& c);

/// "Extremal", "TwoSidedPlateaus", ...
std::string case_name(const Classification& c);
/// "case (i)", "case (ii)", "case (iii)", "not a solution", "zero set not closed".
std::string clause_name(const Classification& c);

}  // namespace pexider
