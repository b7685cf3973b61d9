#include "biexact/ratfunc.hpp"

namespace biexact {

std::string to_string(Shift s)
{
    switch (s) {
    case Shift::Identity:
        return "id";
    case Shift::SigmaX:
        return "sigma_x";
    case Shift::TauX:
        return "tau_x";
    case Shift::SigmaY:
        return "sigma_y";
    }
    return "id";
}

}  // namespace biexact
