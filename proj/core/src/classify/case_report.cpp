#include "alv/classify/case_report.hpp"

namespace alv::classify {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::confirmed: return "confirmed";
        case Verdict::refuted: return "refuted";
        case Verdict::inapplicable: return "inapplicable";
    }
    return "unknown";
}

}  // namespace alv::classify
