#pragma once

#include <cstddef>
#include <vector>

#include "cy4gv/chow/k_class.hpp"
#include "cy4gv/chow/ring.hpp"
#include "cy4gv/rational.hpp"

namespace cy4gv::chow {

/// Power series coefficients, truncated at `terms` entries.
std::vector<Rational> exp_series(std::size_t terms);
/// x / (1 - e^{-x})
std::vector<Rational> todd_series(std::size_t terms);
/// (1 - e^{-x}) / x, the Todd class inverse of a line bundle.
std::vector<Rational> todd_inverse_series(std::size_t terms);

/// sum_k coeffs[k] x^k up to the ring's top degree. x must have no
/// constant term.
RingClass apply_series(const std::vector<Rational>& coeffs, const RingClass& x);

/// Chern character sum_L m_L exp(c_1(L)).
RingClass ch(const RingPtr& ring, const KClass& k);

/// td^{-1} of a line bundle with first Chern class x.
RingClass td_inverse(const RingClass& x);

/// Relative Todd class of the projection forgetting the listed factors:
/// prod_i (H_i/(1 - e^{-H_i}))^{n_i + 1}.
RingClass todd_fiber(const RingPtr& ring, const std::vector<std::size_t>& factors);

/// Cohomological pushforward along the listed factors: keeps terms with
/// every listed exponent at the top and drops those exponents. The result
/// stays in the same ring, independent of the dropped generators.
RingClass fiber_pushforward(const RingClass& x, const std::vector<std::size_t>& factors);

/// ch of the derived pushforward: fiber_pushforward(x . todd_fiber).
RingClass grr_pushforward(const RingClass& x, const std::vector<std::size_t>& factors);

/// c_0, c_1, ..., c_top from a Chern character via Newton's identities.
/// Throws DomainError on a rank mismatch in degree 0.
std::vector<RingClass> chern_classes(std::int64_t rank, const RingClass& chclass);
/// Total Chern class.
RingClass chern_from_ch(std::int64_t rank, const RingClass& chclass);
/// Top Chern class c_rank.
RingClass euler_class(std::int64_t rank, const RingClass& chclass);

}  // namespace cy4gv::chow
