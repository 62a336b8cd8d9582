#include "dwork/delpezzo.hpp"

#include <stdexcept>

namespace dwork::dp5 {

Perm Perm::from_cycles(std::initializer_list<std::initializer_list<int>> cycles) {
    Perm p;
    for (const auto& cycle : cycles) {
        std::vector<int> c(cycle);
        for (size_t k = 0; k < c.size(); ++k) {
            int from = c[k], to = c[(k + 1) % c.size()];
            if (from < 1 || from > 5 || to < 1 || to > 5)
                throw std::invalid_argument("cycle labels must be in 1..5");
            p.img[static_cast<size_t>(from - 1)] = to - 1;
        }
    }
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    Perm r;
    for (size_t i = 0; i < 5; ++i) r.img[i] = img[static_cast<size_t>(o.img[i])];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    for (size_t i = 0; i < 5; ++i) r.img[static_cast<size_t>(img[i])] = static_cast<int>(i);
    return r;
}

int Perm::parity() const {
    int sign = 1;
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = i + 1; j < 5; ++j)
            if (img[i] > img[j]) sign = -sign;
    return sign;
}

std::string Perm::str() const {
    std::string out;
    std::array<bool, 5> seen{};
    for (size_t i = 0; i < 5; ++i) {
        if (seen[i] || img[i] == static_cast<int>(i)) continue;
        out += '(';
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            out += static_cast<char>('1' + j);
            j = static_cast<size_t>(img[j]);
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

} // namespace dwork::dp5
