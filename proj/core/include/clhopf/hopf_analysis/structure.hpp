#pragma once

#include "clhopf/convolution/convolution.hpp"
#include "clhopf/hopf_analysis/report.hpp"

namespace clhopf {

// Builds the structure tables without validation and checks every axiom,
// reporting failures instead of throwing.
template <Scalar R>
TheoremReport tables_report(const BilinearForm<R>& eta, const BilinearForm<R>& xi);

// Antipode of Cl(eta, xi): both convolution axioms, existence vs mu, and the
// coantipode on the dual side.
template <Scalar R>
TheoremReport antipode_report(const BilinearForm<R>& eta, const BilinearForm<R>& xi);

std::string certificate_text(const SolveCertificate& c);

}  // namespace clhopf
