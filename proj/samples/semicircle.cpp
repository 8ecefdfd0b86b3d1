// Cumulants of the standard semicircle law, whose even moments are the
// Catalan numbers: only the second free cumulant survives.

#include <iostream>

#include "nccumulants/transforms.hpp"

using namespace nccum;

int main() {
    const std::size_t N = 6;
    const WordTable m = WordTable::generate(1, N, [](const Word& w) {
        const std::size_t n = w.degree();
        if (n % 2) return Scalar(0);
        const unsigned j = static_cast<unsigned>(n / 2);
        return Scalar(binomial(2 * j, j) / (j + 1));
    });
    const CumulantTable moments{CumulantKind::moment, m};

    for (CumulantKind k : {CumulantKind::free, CumulantKind::boolean, CumulantKind::monotone}) {
        const CumulantTable c = moments_to_cumulants(moments, k);
        std::cout << to_string(k) << ":";
        for (const auto& [w, v] : c.values.values()) std::cout << "  " << w << "=" << v;
        std::cout << "\n";
    }
}
