// Builds a depth-3 lift tower over one facet cone of the square and prints
// the preserved cone volume next to the shrinking upper bounds.

#include <iostream>

#include "conevol/conevol.hpp"

int main() {
    using namespace conevol;

    Polytope square = canonical("cube_2");
    ConeVolumeMeasure mu = cone_volumes(square);

    auto chain = std::make_shared<const LiftChain>(build_chain(square, 3));
    LiftTower tower = build_tower_over_facets(chain, {0});
    ChainBounds bounds = chain_bounds(tower);

    std::cout << "tracked cone volume (level 0): "
              << rational_literal(bounds.measure) << '\n';
    for (int j = 0; j <= tower.depth(); ++j) {
        std::cout << "  level " << j << ": dim " << chain->levels[j].poly.dim()
                  << ", volume " << rational_literal(chain->levels[j].measure.total)
                  << ", tracked cone " << rational_literal(star_pyramid_volume(tower, j));
        if (j >= 1)
            std::cout << ", bound " << rational_literal(bounds.bounds[j - 1].second);
        std::cout << '\n';
    }
    std::cout << "limit bound: " << rational_literal(bounds.limit) << '\n';
    return 0;
}
