// Audits the centered 3-simplex and prints the diagnosis of every tight
// candidate: single polar vertices are bases of pyramids, polar facet
// hyperplanes are apexes, everything in between is open.

#include <iostream>

#include "conevol/conevol.hpp"

int main() {
    using namespace conevol;

    Polytope simplex = canonical("centered_simplex_3");
    AuditReport report = diagnose_scc(simplex, SubspaceKind::Affine);

    std::cout << "affine audit of centered_simplex_3: "
              << (report.pass ? "pass" : "FAIL") << ", " << report.rows.size()
              << " candidates, " << report.tight_rows.size() << " tight\n";

    for (int idx : report.tight_rows) {
        const AuditRow& row = report.rows[static_cast<std::size_t>(idx)];
        std::cout << "  dim " << row.candidate.dim << " atoms {";
        for (std::size_t k = 0; k < row.candidate.generators.size(); ++k)
            std::cout << (k ? "," : "") << row.candidate.generators[k];
        std::cout << "}: lhs = " << rational_literal(row.lhs) << " = rhs, "
                  << to_string(row.diagnosis->kind)
                  << (row.diagnosis->confirmed ? " (confirmed)" : "") << '\n';
    }
    return report.pass ? 0 : 1;
}
