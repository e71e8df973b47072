#include "graphiq/types.hpp"

namespace graphiq {

std::string to_string(Label label) { return label == Label::happy ? "happy" : "sad"; }

std::string to_string(Strategy strategy) {
    return strategy == Strategy::complete ? "complete" : "meshed";
}

std::string to_string(Backend backend) {
    switch (backend) {
        case Backend::classical: return "classical";
        case Backend::quantum_exact: return "quantum-exact";
        default: return "quantum-shots";
    }
}

Label label_from_string(const std::string& text) {
    if (text == "happy") return Label::happy;
    if (text == "sad") return Label::sad;
    throw ParseError("unknown label '" + text + "'");
}

Strategy strategy_from_string(const std::string& text) {
    if (text == "complete") return Strategy::complete;
    if (text == "meshed") return Strategy::meshed;
    throw ParseError("unknown strategy '" + text + "'");
}

Backend backend_from_string(const std::string& text) {
    if (text == "classical") return Backend::classical;
    if (text == "quantum-exact" || text == "quantum_exact") return Backend::quantum_exact;
    if (text == "quantum-shots" || text == "quantum_shots") return Backend::quantum_shots;
    throw ParseError("unknown backend '" + text + "'");
}

}  // namespace graphiq
