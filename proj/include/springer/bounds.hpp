#pragma once

namespace springer {

// Size ceilings for the exhaustive routines. Everything here is a plain
// configuration value; callers may pass explicit bounds to the enumeration
// functions instead. SPRINGER_KIT_MAX_N in the environment overrides the two
// enumeration defaults at startup.
struct Bounds {
    int parse_n = 10000;      // largest n accepted by any text parser
    int tableau_enum = 12;    // enumerate_standard
    int pattern_enum = 10;    // enumerate_patterns, dense-orbit searches
    int oracle_commutant = 10;
    int oracle_flag = 9;      // flag stabilizer and jordan chain oracles
};

Bounds& bounds();

} // namespace springer
