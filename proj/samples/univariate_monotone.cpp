// Moments from monotone cumulants in one variable: the nested-sum closed
// form against the shuffle exponential, degree by degree.

#include <iostream>
#include <vector>

#include "nccumulants/transforms.hpp"

using namespace nccum;

int main() {
    const std::size_t N = 6;
    // h[k-1] is the k-th monotone cumulant.
    const std::vector<Scalar> h{1, Scalar(1, 2), 0, Scalar(-1, 3), 2, 1};
    const WordTable t = WordTable::generate(1, N, [&](const Word& w) { return h[w.degree() - 1]; });
    const WordTable m = cumulants_to_moments({CumulantKind::monotone, t}).values;
    for (const auto& [w, v] : m.values())
        std::cout << "m" << w.degree() << " = " << v << "   closed form "
                  << routes::univariate_monotone_moment(h, w.degree()) << "\n";
}
