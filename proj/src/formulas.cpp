#include "mramsey/formulas.hpp"

namespace mramsey {

namespace {

int floor_div(int a, int b) { return a / b; }                 // a, b >= 0
int ceil_div(int a, int b) { return (a + b - 1) / b; }        // a, b >= 1

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

std::string at(int j, int n) {
    return " (got j=" + std::to_string(j) + ", n=" + std::to_string(n) + ")";
}

}  // namespace

int lb_stripe_c7(int j, int n) {
    require(j >= 3, "lb_stripe_c7 requires j >= 3" + at(j, n));
    require(n >= j, "lb_stripe_c7 requires n >= j" + at(j, n));
    return ceil_div(2 * n + 2, j);
}

RamseyValue family_value(const Family& f) {
    int j = f.j, n = f.n;
    switch (f.kind) {
        case FamilyKind::StarPathStripe:
            require(j >= 2, "star-path-stripe requires j >= 2" + at(j, n));
            require(n >= 2, "star-path-stripe requires n >= 2" + at(j, n));
            return RamseyValue::finite(floor_div(2 * n, j) + 1);

        case FamilyKind::StripeC7:
            require(j >= 2, "stripe-c7 requires j >= 2" + at(j, n));
            require(n >= 2, "stripe-c7 requires n >= 2" + at(j, n));
            if (j == 2) return RamseyValue::infinite();  // bipartite hosts never hold C_7
            if (j == 3) {
                if (n == 2) return RamseyValue::finite(3);
                return RamseyValue::finite(n);
            }
            if (j == 4) {
                if (n == 2) return RamseyValue::finite(2);
                if (n == 3) return RamseyValue::finite(3);
                return RamseyValue::finite(ceil_div(n + 1, 2));
            }
            // j >= 5 is open; report the constructive lower bound when it applies
            if (n >= j) return RamseyValue::unknown(lb_stripe_c7(j, n));
            return RamseyValue::unknown();

        case FamilyKind::StripeC6:
            require(j == 3, "stripe-c6 is only known for j = 3" + at(j, n));
            require(n == 3, "stripe-c6 is only known for n = 3" + at(j, n));
            return RamseyValue::finite(3);
    }
    throw DomainError("unknown family");
}

std::vector<TargetPattern> family_targets(const Family& f) {
    switch (f.kind) {
        case FamilyKind::StarPathStripe:
            return {TargetPattern::star(2), TargetPattern::path(4), TargetPattern::stripe(f.n)};
        case FamilyKind::StripeC7:
            return {TargetPattern::stripe(f.n), TargetPattern::cycle(7)};
        case FamilyKind::StripeC6:
            return {TargetPattern::stripe(f.n), TargetPattern::cycle(6)};
    }
    throw DomainError("unknown family");
}

std::string family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::StarPathStripe: return "star-path-stripe";
        case FamilyKind::StripeC7: return "stripe-c7";
        case FamilyKind::StripeC6: return "stripe-c6";
    }
    return "?";
}

FamilyKind parse_family(const std::string& s) {
    if (s == "star-path-stripe") return FamilyKind::StarPathStripe;
    if (s == "stripe-c7") return FamilyKind::StripeC7;
    if (s == "stripe-c6") return FamilyKind::StripeC6;
    throw DomainError("unknown family \"" + s + "\"");
}

}  // namespace mramsey
