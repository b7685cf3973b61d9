#include "biexact/decide.hpp"

#include <stdexcept>

namespace biexact {

std::string pair_name(OperatorPair p)
{
    switch (p) {
    case OperatorPair::ShiftX_DerivY:
        return "dx-dy";
    case OperatorPair::QShiftX_DerivY:
    case OperatorPair::RootOfUnity_DerivY:
        return "dqx-dy";
    case OperatorPair::QShiftX_ShiftY:
    case OperatorPair::RootOfUnity_ShiftY:
        return "dqx-sy";
    }
    return "dx-dy";
}

OperatorPair resolve_pair(const std::string& name, const QMode& mode)
{
    const bool rou = mode.kind() == QMode::Kind::RootOfUnity;
    if (name == "dx-dy") {
        return OperatorPair::ShiftX_DerivY;
    }
    if (name == "dqx-dy") {
        return rou ? OperatorPair::RootOfUnity_DerivY : OperatorPair::QShiftX_DerivY;
    }
    if (name == "dqx-sy") {
        return rou ? OperatorPair::RootOfUnity_ShiftY : OperatorPair::QShiftX_ShiftY;
    }
    throw std::invalid_argument("unknown operator pair: " + name);
}

}  // namespace biexact
