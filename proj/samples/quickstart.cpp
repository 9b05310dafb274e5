// Runs both algorithms on a small grid with a K5 hanging off it and prints
// what each one picked.

#include <iostream>

#include "locdom/algo_generic.hpp"
#include "locdom/algo_planar.hpp"
#include "locdom/domination.hpp"
#include "locdom/generators.hpp"

int main() {
    using namespace locdom;

    GeneratorSpec spec;
    spec.family = Family::gadget_graft;
    spec.host = "path";
    spec.n = 12;
    spec.gadgets = 1;
    spec.spacing = 1;
    LabeledGraph g = generate(spec);

    PlanarRun a = algorithm_a(g);
    std::cout << describe(spec) << ": n=" << g.size() << " MDS=" << mds_size(g, VertexSet::range(g.size())) << '\n';
    std::cout << "A: " << to_string(a.output) << " in " << a.ledger.total() << " rounds\n";

    BConfig cfg;
    cfg.control = ControlFunction(0);  // T = max(k+1, r) = 5
    GenericRun b = algorithm_b(g, cfg);
    std::cout << "B: " << to_string(b.output) << " (T=" << b.errors.radius << ", |X|=" << b.errors.errors.size()
              << ", delta=" << b.errors.delta << ", repair=" << to_string(b.repair) << ") in "
              << b.ledger.total() << " rounds\n";
}
