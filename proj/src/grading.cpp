#include "motsq/grading.hpp"

#include <sstream>
#include <stdexcept>

namespace motsq {

std::string BiDegree::to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::string TriDegree::to_string() const {
    return std::to_string(s) + "." + std::to_string(p) + "." + std::to_string(q);
}

TriDegree TriDegree::parse(const std::string& text) {
    std::istringstream in(text);
    TriDegree t;
    char d1 = 0, d2 = 0;
    if (!(in >> t.s >> d1 >> t.p >> d2 >> t.q) || d1 != '.' || d2 != '.' || t.s < 0)
        throw std::invalid_argument("bad tridegree: " + text);
    return t;
}

}  // namespace motsq
