#pragma once

#include <gtest/gtest.h>
#include <unistd.h>

#include <string>

#include "ltlfmt/smt/session.hpp"

namespace ltlfmt::fixtures {

inline std::string solver_path() { return LTLFMT_TEST_SOLVER; }

inline bool solver_available() { return ::access(solver_path().c_str(), X_OK) == 0; }

inline smt::SolverConfig backend(unsigned timeout_ms = 60000)
{
    smt::SolverConfig cfg;
    cfg.executable = solver_path();
    cfg.timeout_ms = timeout_ms;
    return cfg;
}

} // namespace ltlfmt::fixtures

#define REQUIRE_SOLVER()                                                                                               \
    do {                                                                                                               \
        if (!::ltlfmt::fixtures::solver_available())                                                                    \
            GTEST_SKIP() << "no SMT solver at " << ::ltlfmt::fixtures::solver_path();                                   \
    } while (0)
