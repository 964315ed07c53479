#pragma once

#include <string>

#include "mramsey/graph.hpp"

namespace mramsey {

// The three supported families:
//   StarPathStripe: m_j(K_{1,2}, P_4, nK_2), j >= 2, n >= 2
//   StripeC7:       m_j(nK_2, C_7) piecewise over j
//   StripeC6:       m_3(3K_2, C_6), a single externally cited value
enum class FamilyKind { StarPathStripe, StripeC7, StripeC6 };

struct Family {
    FamilyKind kind = FamilyKind::StarPathStripe;
    int j = 0;
    int n = 0;
};

// Closed-form value; throws DomainError when (j, n) is outside the family's domain.
RamseyValue family_value(const Family& f);

// Constructive lower bound for m_j(nK_2, C_7): ceil((2n+2)/j), needs j >= 3 and n >= j.
int lb_stripe_c7(int j, int n);

// Target list the family's instances use (the n-dependent stripe slot filled in).
std::vector<TargetPattern> family_targets(const Family& f);

std::string family_name(FamilyKind k);          // "star-path-stripe" etc.
FamilyKind parse_family(const std::string& s);  // throws DomainError

}  // namespace mramsey
