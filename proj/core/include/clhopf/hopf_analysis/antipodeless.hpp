#pragma once

#include <cstdint>

#include "clhopf/convolution/convolution.hpp"
#include "clhopf/hopf_analysis/families.hpp"
#include "clhopf/hopf_analysis/report.hpp"

namespace clhopf {

enum class AntipodeLessCase { I, II, III };

const char* to_string(AntipodeLessCase c);

// Rational representatives of the three constraint sets.
FormPair<Rational> case_representative(AntipodeLessCase c);

// Does (eta, xi) satisfy the literal constraints of the case?
bool satisfies_case(AntipodeLessCase c, const BilinearForm<Rational>& eta, const BilinearForm<Rational>& xi);

// (id - A)(id + A - tr A) for a 2 x 2 matrix A.
RingMatrix<Rational> lemma_product(const RingMatrix<Rational>& a);

// Cases I-III, xi = eta^{-1}, the 2 x 2 lemma behind them, and weak
// antipodes where no antipode exists.
TheoremReport antipodeless_suite(std::uint64_t seed = kDefaultSeed, std::size_t lemma_count = 100,
                                 std::size_t inverse_count = 20);

}  // namespace clhopf
