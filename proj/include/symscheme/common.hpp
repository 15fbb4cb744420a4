#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace symscheme {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class errc {
    not_prime,
    even_characteristic,
    reducible_modulus,
    no_tower_configured,
    dimension_mismatch,
    budget_exceeded,
    not_a_basis,
    non_real_dual,
    negative_dual,
    invalid_params,
    not_a_hyperplane_basis,
    not_additive,
    precondition_violated,
    inconsistent_parameters,
    limit_exceeded,
    infeasible,
    internal
};

class error : public std::runtime_error {
public:
    error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

/// Enumeration budget (number of objects a single exhaustive pass may visit).
/// Overridable via the SYMSCHEME_BUDGET environment variable or set_budget().
inline long long& budget_ref()
{
    static long long budget = [] {
        if (const char* s = std::getenv("SYMSCHEME_BUDGET")) {
            long long v = std::atoll(s);
            if (v > 0) return v;
        }
        return 100000000LL;
    }();
    return budget;
}

inline long long enumeration_budget() { return budget_ref(); }
inline void set_budget(long long b) { budget_ref() = b; }

inline void check_budget(const Int& n, const std::string& what)
{
    if (n > enumeration_budget())
        throw error(errc::budget_exceeded,
                    what + ": " + n.str() + " objects exceed budget " +
                        std::to_string(enumeration_budget()));
}

/// q^k as an exact integer, k >= 0.
inline Int ipow(const Int& q, long k)
{
    Int r = 1, b = q;
    for (long e = k; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

/// q^k as an exact rational, any sign of k.
inline Rat rpow(const Int& q, long k)
{
    if (k >= 0) return Rat(ipow(q, k));
    return Rat(1) / Rat(ipow(q, -k));
}

} // namespace symscheme
