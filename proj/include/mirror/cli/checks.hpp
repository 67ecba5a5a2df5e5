#pragma once

#include "mirror/algebra/rational.hpp"
#include "mirror/curve/knot.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace mirror {

// Bad flags or parameters outside a check's domain; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Mismatch {
    std::string monomial, lhs, rhs;
};

struct CheckReport {
    std::string check;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    long elapsed_ms = 0;
    nlohmann::ordered_json to_json() const;
    // key<TAB>value rows in the JSON field order.
    std::string to_tsv() const;
};

// Exit codes shared by every subcommand.
enum ExitCode { kExitPass = 0, kExitMismatch = 1, kExitUsage = 2, kExitDegenerate = 3 };

// Smallest s >= 1 making (p, r, s) a valid knot triple.
long default_s(long p, long r);

// F01(tau(q); X) closed form against -r h W01 from the Newton solve; X-degree <= x_order.
CheckReport check_disk(long p, long r, long s, int q_order, int x_order);
// Closed-form v series against the Newton solve, plus the curve residual; eta-order r x_order.
CheckReport check_vseries(long p, long r, long s, int q_order, int x_order);
// theta-basis omega_{g,n} from the recursion against the graph sum on the p = 1 curve.
CheckReport check_graphsum(long r, long s, int g, int n, const Rational& q);
// Recursion on x = t^2, y = t against 2^{g-1} <tau ...>_g and against the graph sum, all (g, n)
// with 2g - 2 + n > 0 and 2g - 2 + n <= max_euler.
CheckReport check_airy(int max_euler);
// Unitarity of the Bernoulli limit matrix to O(z^z_order); for p = 1 also the q -> 0 limit of
// R-check(-z) against it and unitarity of R-check at q.
CheckReport check_rmatrix(long p, long r, long s, int z_order, const Rational& q);
// (X1 d1 + X2 d2)(-r^2 h W02) at q = 0 against the A-model product formula, p = 1.
CheckReport check_annulus_q0(long r, long s, int x1_order, int x2_order);

}  // namespace mirror
