#include "textseg/segmentation.hpp"

#include <stdexcept>

namespace textseg {

void Segmentation::validate() const {
    if (boundaries.empty()) throw std::invalid_argument("segmentation has no boundaries");
    if (boundaries.back() != n_elements)
        throw std::invalid_argument("last boundary " + std::to_string(boundaries.back()) + " differs from N = " +
                                    std::to_string(n_elements));
    std::size_t prev = 0;
    for (std::size_t b : boundaries) {
        if (b <= prev)
            throw std::invalid_argument("boundaries must be strictly increasing and start above 0: " + to_string());
        prev = b;
    }
}

bool Segmentation::valid() const {
    try {
        validate();
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<std::size_t> Segmentation::segment_lengths() const {
    std::vector<std::size_t> out;
    out.reserve(boundaries.size());
    std::size_t prev = 0;
    for (std::size_t b : boundaries) {
        out.push_back(b - prev);
        prev = b;
    }
    return out;
}

Segmentation Segmentation::from_lengths(const std::vector<std::size_t>& lengths) {
    Segmentation s;
    std::size_t acc = 0;
    for (std::size_t len : lengths) {
        acc += len;
        s.boundaries.push_back(acc);
    }
    s.n_elements = acc;
    return s;
}

std::string Segmentation::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < boundaries.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(boundaries[k]);
    }
    return out + ")";
}

}  // namespace textseg
