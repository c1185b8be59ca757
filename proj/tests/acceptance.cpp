// Runs the acceptance checks and prints one PASS/FAIL line per check.

#include <iostream>

#include "concbound/selftest.hpp"

int main() {
    int failures = concbound::run_selftest(std::cout);
    if (failures > 0) std::cout << failures << " check(s) failed\n";
    return failures == 0 ? 0 : 1;
}
